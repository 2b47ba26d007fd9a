"""Smooth direct-sum decompositions and the standard-summand probe."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diffeospace import DiffSpace, is_standard_subspace
from .errors import DimensionMismatchError, NotDirectSumError, NotPseudoMetricError
from .exactlin import Subspace, column_space, kernel
from .forms import as_matrix, is_pseudo_metric
from .sampling import random_subspace, trial_rng


@dataclass(frozen=True)
class SmoothSplit:
    first: Subspace
    second: Subspace
    verdict: bool
    reason: str

    def __bool__(self) -> bool:
        return self.verdict


def decompose(space: DiffSpace, A) -> tuple[Subspace, Subspace]:
    """``(V0, V1)``: positive part (column space) and kernel of a pseudo-metric."""
    A = as_matrix(A)
    verdict = is_pseudo_metric(space, A)
    if not verdict:
        raise NotPseudoMetricError(f"not a pseudo-metric: {verdict.reason}")
    return column_space(A), kernel(A)


def check_smooth_split(space: DiffSpace, V1: Subspace, V2: Subspace) -> SmoothSplit:
    """Decide whether ``V = V1 + V2`` is smooth with ``V1`` standard.

    The projections onto a basis of V1 along V2 have common kernel V2, so
    they are all smooth exactly when C lies in V2.
    """
    n = space.dimension
    if V1.ambient_dim != n or V2.ambient_dim != n:
        raise DimensionMismatchError(f"subspaces must live in Q^{n}")
    if V1.dim + V2.dim != n or not (V1 & V2).is_zero():
        raise NotDirectSumError("not a direct sum")
    if not is_standard_subspace(space, V1):
        return SmoothSplit(V1, V2, False, "first summand is not standard")
    if not V2.contains(space.characteristic):
        return SmoothSplit(V1, V2, False, "characteristic subspace not contained in second summand")
    return SmoothSplit(V1, V2, True, "smooth split")


def invariant_standard_part(space: DiffSpace) -> Subspace:
    """``C^perp`` for the coordinate dot product."""
    return space.characteristic.orthogonal_complement()


def admits_smooth_scalar_product(space: DiffSpace) -> bool:
    return space.characteristic.is_zero()


def smooth_complement(space: DiffSpace, W: Subspace) -> Subspace | None:
    """A complement of ``W`` containing C, or None if there is none.

    Such a complement exists iff ``W & C == 0``; it is built by extending C
    with coordinate vectors.
    """
    n = space.dimension
    C = space.characteristic
    if not (W & C).is_zero():
        return None
    comp = C
    for i in range(n):
        if (W + comp).dim == n:
            break
        e = [0] * n
        e[i] = 1
        candidate = comp + Subspace.span([e], n)
        if (W + candidate).dim == W.dim + candidate.dim:
            comp = candidate
    return comp


def is_standard_smooth_summand(space: DiffSpace, W: Subspace) -> bool:
    comp = smooth_complement(space, W)
    return comp is not None and check_smooth_split(space, W, comp).verdict


# --------------------------------------------------------------------------
# Probe


@dataclass
class SummandProbe:
    seed: int
    trials: int
    dual_dimension: int
    pairs_sampled: int = 0
    smooth_pairs: int = 0
    distinct_summands: list[Subspace] = field(default_factory=list)
    larger_sampled: int = 0
    larger_found: int = 0

    @property
    def maximality_holds(self) -> bool:
        return self.larger_found == 0


def probe_standard_summands(space: DiffSpace, seed: int, trials: int) -> SummandProbe:
    """Sample splittings ``W1 + W2`` with ``W2 ⊇ C`` and subspaces larger
    than ``dim V*``.

    Records smooth splits whose standard first factor has the dual
    dimension, and counts larger subspaces that are standard smooth
    summands (there should be none).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = space.dimension
    k = space.dual_dimension
    C = space.characteristic
    report = SummandProbe(seed, trials, k)
    seen = set()
    for t in range(trials):
        rng = trial_rng(seed, t, "split")
        d = rng.randint(0, k)
        W1 = random_subspace(rng, n, d)
        W2 = C + random_subspace(rng, n, n - d - C.dim)
        if W1.dim == d and W2.dim == n - d and (W1 & W2).is_zero():
            report.pairs_sampled += 1
            if W1.dim == k and check_smooth_split(space, W1, W2).verdict:
                report.smooth_pairs += 1
                if W1 not in seen:
                    seen.add(W1)
                    report.distinct_summands.append(W1)
        if k < n:
            rng = trial_rng(seed, t, "max")
            W = random_subspace(rng, n, rng.randint(k + 1, n))
            if W.dim > k:
                report.larger_sampled += 1
                if is_standard_subspace(space, W) and is_standard_smooth_summand(space, W):
                    report.larger_found += 1
    return report
