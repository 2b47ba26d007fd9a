"""The diffeological dual and the pairing map ``Psi: v -> <.|v>_A``.

Dual elements are coordinate vectors relative to the canonical RREF basis
``F`` of the annihilator of C; a coordinate vector ``c`` stands for the
functional ``F^T c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diffeospace import DiffSpace
from .errors import DimensionMismatchError, NotPseudoMetricError, NotSmoothError
from .exactlin import Matrix, column_space, solve
from .forms import as_matrix, dual_rows, is_pseudo_metric, is_smooth_form


@dataclass(frozen=True)
class DualBasis:
    space: DiffSpace
    rows: Matrix

    @property
    def k(self) -> int:
        return self.rows.nrows

    def functional(self, coords: Sequence) -> tuple[Fraction, ...]:
        """The covector ``F^T c`` on Q^n."""
        if len(coords) != self.k:
            raise DimensionMismatchError(f"{len(coords)} coordinates for a dual of dimension {self.k}")
        return self.rows.T.apply(coords)

    def coordinates(self, covector: Sequence) -> tuple[Fraction, ...]:
        """Inverse of :meth:`functional`; raises NoSolutionError if not smooth."""
        return solve(self.rows.T, covector, unique=True)


def dual_basis(space: DiffSpace) -> DualBasis:
    return DualBasis(space, dual_rows(space))


def psi(space: DiffSpace, A, v: Sequence) -> tuple[Fraction, ...]:
    """Dual coordinates of ``w -> <w|v>_A``."""
    A = as_matrix(A)
    if not is_smooth_form(space, A):
        raise NotSmoothError("form not smooth")
    return dual_basis(space).coordinates(A.apply(v))


def psi_inverse_on_v0(space: DiffSpace, A, coords: Sequence) -> tuple[Fraction, ...]:
    """The unique ``v`` in the column space of A with ``psi(v) = coords``."""
    A = as_matrix(A)
    verdict = is_pseudo_metric(space, A)
    if not verdict:
        raise NotPseudoMetricError(f"not a pseudo-metric: {verdict.reason}")
    target = dual_basis(space).functional(coords)
    Q = column_space(A).basis.T  # n x k, columns span V0
    y = solve(A @ Q, target, unique=True)
    return Q.apply(y)
