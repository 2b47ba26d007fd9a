"""Metrics on the dual: pushforward of a pseudo-metric and its inverse."""

from __future__ import annotations

from dataclasses import dataclass

from .diffeospace import DiffSpace
from .dualspace import dual_basis, psi_inverse_on_v0
from .errors import DimensionMismatchError, NotPositiveDefiniteError, NotPseudoMetricError
from .exactlin import Inertia, Matrix, inverse, symmetric_inertia
from .forms import BilinearForm, as_matrix, is_pseudo_metric


class CrossCheckError(AssertionError):
    """The two independent computations of the dual metric disagree."""


@dataclass(frozen=True)
class DualMetric:
    space: DiffSpace
    matrix: Matrix

    @property
    def k(self) -> int:
        return self.matrix.nrows


def _unit(k: int, i: int) -> list[int]:
    return [int(i == j) for j in range(k)]


def dual_metric_via_psi(space: DiffSpace, A) -> Matrix:
    """``M[i][j] = <Psi^-1(e_i) | Psi^-1(e_j)>_A`` over preimages in V0."""
    A = as_matrix(A)
    k = space.dual_dimension
    pre = [psi_inverse_on_v0(space, A, _unit(k, i)) for i in range(k)]
    return Matrix([[A.bilinear(u, v) for v in pre] for u in pre], cols=k)


def dual_metric_closed_form(space: DiffSpace, A) -> Matrix:
    """Solve ``A = F^T Y F`` for ``Y`` and return ``Y^-1``.

    ``F`` has full row rank, so ``Y = G^-1 F A F^T G^-1`` with ``G = F F^T``.
    """
    A = as_matrix(A)
    F = dual_basis(space).rows
    G_inv = inverse(F @ F.T)
    Y = G_inv @ F @ A @ F.T @ G_inv
    return inverse(Y)


def induced_dual_metric(space: DiffSpace, A) -> DualMetric:
    A = as_matrix(A)
    verdict = is_pseudo_metric(space, A)
    if not verdict:
        raise NotPseudoMetricError(f"not a pseudo-metric: {verdict.reason}")
    M = dual_metric_via_psi(space, A)
    check = dual_metric_closed_form(space, A)
    if M != check:
        raise CrossCheckError(f"dual metric mismatch: {M!r} vs {check!r}")
    return DualMetric(space, M)


def _positive_definite_inertia(k: int) -> Inertia:
    return Inertia(k, 0, 0)


def is_smooth_dual_metric(space: DiffSpace, B) -> bool:
    """Symmetric ``k x k`` and positive definite."""
    B = B.matrix if isinstance(B, DualMetric) else B
    k = space.dual_dimension
    if B.shape != (k, k) or not B.is_symmetric():
        return False
    return symmetric_inertia(B) == _positive_definite_inertia(k)


def pseudo_metric_from_dual_metric(space: DiffSpace, B) -> BilinearForm:
    """``A = F^T B^-1 F``, the pseudo-metric inducing ``B``."""
    B = B.matrix if isinstance(B, DualMetric) else B
    k = space.dual_dimension
    if B.shape != (k, k):
        raise DimensionMismatchError(f"dimension mismatch: expected {k}x{k}, got {B.shape[0]}x{B.shape[1]}")
    if not is_smooth_dual_metric(space, B):
        raise NotPositiveDefiniteError("not positive definite")
    F = dual_basis(space).rows
    return BilinearForm(space, F.T @ inverse(B) @ F)
