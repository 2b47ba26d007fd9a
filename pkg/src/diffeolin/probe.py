"""Seeded randomized checks of the invariants every module promises.

Each property draws its inputs from its own ``(seed, trial, name)`` stream.
A property returns ``None`` on success or a short counterexample string.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

from .diffeospace import DiffSpace, is_standard_subspace
from .dualmetric import (
    dual_metric_closed_form,
    dual_metric_via_psi,
    induced_dual_metric,
    is_smooth_dual_metric,
    pseudo_metric_from_dual_metric,
)
from .dualspace import dual_basis, psi, psi_inverse_on_v0
from .exactlin import (
    Matrix,
    Subspace,
    column_space,
    eigen_signs,
    jacobi_eigen,
    kernel,
    rank,
    rref,
    symmetric_inertia,
)
from .forms import canonical_pseudo_metric, is_pseudo_metric, is_smooth_form, signature_lemma_check, smooth_form_space
from .report import Report
from .sampling import (
    random_invertible,
    random_matrix,
    random_positive_definite,
    random_pseudo_metric,
    random_rational,
    random_smooth_form,
    random_space,
    random_subspace,
    random_symmetric,
    random_vector,
    trial_rng,
)
from .splitting import (
    check_smooth_split,
    decompose,
    invariant_standard_part,
    is_standard_smooth_summand,
    probe_standard_summands,
)

Property = Callable[[random.Random, DiffSpace], Optional[str]]


def _sub_vectors(S: Subspace, rng: random.Random) -> list:
    n = S.ambient_dim
    coeffs = [random_rational(rng) for _ in range(S.dim)]
    return [sum((c * b[j] for c, b in zip(coeffs, S.vectors)), 0) for j in range(n)]


# -- exactlin ---------------------------------------------------------------


def rank_nullity(rng, space):
    M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    if rank(M) + kernel(M).dim != M.ncols:
        return f"rank + nullity != cols for {M!r}"


def double_annihilator(rng, space):
    n = rng.randint(1, 6)
    S = random_subspace(rng, n, rng.randint(0, n))
    if S.annihilator().annihilator() != S:
        return f"ann(ann(S)) != S for {S!r}"


def rref_idempotent(rng, space):
    M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    R, _ = rref(M)
    if rref(R)[0] != R:
        return f"rref not idempotent on {M!r}"


def sylvester_law(rng, space):
    n = rng.randint(1, 6)
    A = random_smooth_form(rng, space).matrix if rng.random() < 0.5 else random_symmetric(rng, n)
    P = random_invertible(rng, A.nrows)
    if symmetric_inertia(P.T @ A @ P) != symmetric_inertia(A):
        return f"inertia not congruence invariant for {A!r}"


def jacobi_matches_inertia(rng, space):
    A = random_smooth_form(rng, space).matrix if rng.random() < 0.5 else random_symmetric(rng, rng.randint(1, 6))
    w, _ = jacobi_eigen(A)
    if eigen_signs(w) != symmetric_inertia(A):
        return f"eigenvalue signs {eigen_signs(w)} != inertia {symmetric_inertia(A)} for {A!r}"


# -- diffeospace ------------------------------------------------------------


def characteristic_duality(rng, space):
    C = space.characteristic
    if C.dim + C.annihilator().dim != space.dimension:
        return "dim C + dim ann(C) != n"


def standard_extremes(rng, space):
    n = space.dimension
    if not is_standard_subspace(space, Subspace.zero(n)):
        return "zero subspace not standard"
    if is_standard_subspace(space, Subspace.full(n)) != (not space.generators):
        return "full space standardness disagrees with generator list"


def standard_monotone(rng, space):
    n = space.dimension
    W = random_subspace(rng, n, rng.randint(0, n))
    Wp = Subspace.span([_sub_vectors(W, rng) for _ in range(rng.randint(0, W.dim))], n)
    if is_standard_subspace(space, W) and not is_standard_subspace(space, Wp):
        return f"standard W with non-standard subspace {Wp!r}"


# -- dualspace / forms ------------------------------------------------------


def psi_round_trip(rng, space):
    A = random_pseudo_metric(rng, space)
    k = space.dual_dimension
    n = space.dimension
    c = random_vector(rng, k)
    if tuple(psi(space, A, psi_inverse_on_v0(space, A, c))) != tuple(c):
        return "psi(psi^-1(c)) != c"
    v = _sub_vectors(column_space(A.matrix), rng)
    if tuple(psi_inverse_on_v0(space, A, psi(space, A, v))) != tuple(v):
        return "psi^-1(psi(v)) != v on V0"
    u, w = random_vector(rng, n), random_vector(rng, n)
    a, b = random_rational(rng), random_rational(rng)
    lhs = psi(space, A, [a * x + b * y for x, y in zip(u, w)])
    rhs = tuple(a * x + b * y for x, y in zip(psi(space, A, u), psi(space, A, w)))
    if tuple(lhs) != rhs:
        return "psi not linear"


def psi_kills_characteristic(rng, space):
    A = random_smooth_form(rng, space)
    for c in space.characteristic.vectors:
        if any(psi(space, A, c)):
            return "psi(c) != 0 for c in C"


def canonical_is_pseudo_metric(rng, space):
    if not is_pseudo_metric(space, canonical_pseudo_metric(space)):
        return "canonical pseudo-metric rejected"
    if dual_basis(space).k + space.characteristic.dim != space.dimension:
        return "dim V* + dim C != n"


def signature_lemma(rng, space):
    A = random_smooth_form(rng, space)
    if not signature_lemma_check(space, A):
        return f"n_zero < dim C for {A.matrix!r}"


def smooth_form_dimension(rng, space):
    k = space.dual_dimension
    basis = smooth_form_space(space)
    if len(basis) != k * (k + 1) // 2:
        return f"smooth form space has dimension {len(basis)}, expected {k * (k + 1) // 2}"
    if not all(is_smooth_form(space, B) for B in basis):
        return "basis member not smooth"
    if space.generators:
        S = random_symmetric(rng, space.dimension)
        n = space.dimension
        flat = [[x for r in B.rows for x in r] for B in basis]
        in_span = Subspace.span(flat, n * n).dim == Subspace.span(flat + [[x for r in S.rows for x in r]], n * n).dim
        if is_smooth_form(space, S) != in_span:
            return "smoothness disagrees with membership in the solution space"


# -- splitting --------------------------------------------------------------


def positive_part_invariant(rng, space):
    A = random_pseudo_metric(rng, space)
    if column_space(A.matrix) != invariant_standard_part(space):
        return f"col(A) != C^perp for {A.matrix!r}"


def decompose_splits(rng, space):
    A = random_pseudo_metric(rng, space)
    V0, V1 = decompose(space, A)
    if not check_smooth_split(space, V0, V1):
        return "decompose output is not a smooth split"


def split_mirror(rng, space):
    # V1 contains C and V2 is a random complement, so only (V2, V1) can split smoothly
    n = space.dimension
    C = space.characteristic
    V1 = C + random_subspace(rng, n, rng.randint(0, n - C.dim))
    V2 = random_subspace(rng, n, n - V1.dim)
    if V1.dim + V2.dim != n or not (V1 & V2).is_zero():
        return None
    if check_smooth_split(space, V2, V1).verdict != is_standard_subspace(space, V2):
        return "split (V2, V1) with C in V1 disagrees with standardness of V2"
    if check_smooth_split(space, V1, V2).verdict != C.is_zero():
        return "split (V1, V2) with C in V1 accepted although C != 0"


def maximality(rng, space):
    n, k = space.dimension, space.dual_dimension
    if k == n:
        return None
    W = random_subspace(rng, n, rng.randint(k + 1, n))
    if W.dim > k and is_standard_subspace(space, W) and is_standard_smooth_summand(space, W):
        return f"standard smooth summand of dim {W.dim} > {k}"


# -- dualmetric -------------------------------------------------------------


def dual_metric_round_trips(rng, space):
    A = random_pseudo_metric(rng, space)
    B = induced_dual_metric(space, A)
    if not is_smooth_dual_metric(space, B):
        return "induced dual metric not positive definite"
    if pseudo_metric_from_dual_metric(space, B).matrix != A.matrix:
        return "A -> B -> A round trip failed"
    B2 = random_positive_definite(rng, space.dual_dimension)
    if induced_dual_metric(space, pseudo_metric_from_dual_metric(space, B2)).matrix != B2:
        return "B -> A -> B round trip failed"


def dual_metric_oracles(rng, space):
    A = random_pseudo_metric(rng, space)
    if dual_metric_via_psi(space, A) != dual_metric_closed_form(space, A):
        return "psi-based and closed-form dual metrics differ"


def pushforward_well_defined(rng, space):
    A = random_pseudo_metric(rng, space).matrix
    k = space.dual_dimension
    C = space.characteristic
    M = induced_dual_metric(space, A).matrix
    unit = lambda i: [int(i == j) for j in range(k)]  # noqa: E731
    pre = [psi_inverse_on_v0(space, A, unit(i)) for i in range(k)]
    shifted = [[x + y for x, y in zip(v, _sub_vectors(C, rng))] if C.dim else list(v) for v in pre]
    P = Matrix([[A.bilinear(u, v) for v in shifted] for u in shifted], cols=k)
    if P != M:
        return "dual metric changed when preimages were shifted by C"


PROPERTIES: dict[str, Property] = {
    "rank-nullity": rank_nullity,
    "double annihilator": double_annihilator,
    "rref idempotent": rref_idempotent,
    "sylvester law": sylvester_law,
    "jacobi signs = inertia": jacobi_matches_inertia,
    "dim C + dim ann C = n": characteristic_duality,
    "standardness of 0 and V": standard_extremes,
    "standardness monotone": standard_monotone,
    "psi round trip and linearity": psi_round_trip,
    "psi kills C": psi_kills_characteristic,
    "canonical pseudo-metric": canonical_is_pseudo_metric,
    "signature lemma": signature_lemma,
    "smooth form space dimension": smooth_form_dimension,
    "col(A) = C^perp": positive_part_invariant,
    "decompose is smooth split": decompose_splits,
    "split mirror": split_mirror,
    "maximality": maximality,
    "dual metric round trips": dual_metric_round_trips,
    "dual metric oracles agree": dual_metric_oracles,
    "pushforward well defined": pushforward_well_defined,
}


def run_property(name: str, seed: int, trials: int, space: DiffSpace | None = None) -> list[str]:
    prop = PROPERTIES[name]
    failures = []
    for t in range(trials):
        rng = trial_rng(seed, t, name)
        s = space if space is not None else random_space(trial_rng(seed, t, "space"))
        try:
            msg = prop(rng, s)
        except Exception as exc:  # a raised error is a failed property
            msg = f"{type(exc).__name__}: {exc}"
        if msg:
            failures.append(f"trial {t}: {msg}")
    return failures


def probe_invariants(seed: int, trials: int, space: DiffSpace | None = None) -> tuple[Report, bool]:
    """Run every property; returns the report and whether all passed."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rep = Report(f"Invariant probe (seed {seed}, {trials} trials, {'given space' if space else 'random spaces'})")
    ok = True
    results = {}
    for name in PROPERTIES:
        failures = run_property(name, seed, trials, space)
        ok &= not failures
        results[name] = "pass" if not failures else f"FAIL ({len(failures)}): {failures[0]}"
    rep.add("properties", **results)

    # descriptive only: how many distinct standard smooth summands of dim V* turn up
    target = space if space is not None else random_space(trial_rng(seed, 0, "space"))
    summ = probe_standard_summands(target, seed, trials)
    rep.add(
        "standard summands",
        dimension=target.dimension,
        dual_dimension=summ.dual_dimension,
        pairs_sampled=summ.pairs_sampled,
        smooth_pairs=summ.smooth_pairs,
        distinct_summands=len(summ.distinct_summands),
        invariant_part_among_them=invariant_standard_part(target) in summ.distinct_summands,
        larger_subspaces_sampled=summ.larger_sampled,
        larger_standard_summands_found=summ.larger_found,
    )
    rep.add("verdict", all_properties_pass=ok)
    return rep, ok
