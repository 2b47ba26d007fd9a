"""Smooth symmetric bilinear forms and pseudo-metrics on a DiffSpace."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffeospace import DiffSpace
from .errors import DimensionMismatchError, NotSmoothError, NotSymmetricError
from .exactlin import Inertia, Matrix, kernel, symmetric_inertia


def dual_rows(space: DiffSpace) -> Matrix:
    """Canonical RREF rows spanning the smooth linear functionals."""
    return space.characteristic.annihilator().basis


def as_matrix(A) -> Matrix:
    return A.matrix if isinstance(A, BilinearForm) else A


def _check_shape(space: DiffSpace, A: Matrix) -> None:
    if A.shape != (space.dimension, space.dimension):
        raise DimensionMismatchError(f"{A.shape} matrix on a space of dimension {space.dimension}")
    if not A.is_symmetric():
        raise NotSymmetricError("not symmetric")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BilinearForm:
    space: DiffSpace
    matrix: Matrix

    def __post_init__(self):
        _check_shape(self.space, self.matrix)

    def __call__(self, v, w) -> Fraction:
        return self.matrix.bilinear(v, w)

    @property
    def is_smooth(self) -> bool:
        return is_smooth_form(self.space, self.matrix)

    @property
    def is_pseudo_metric(self) -> bool:
        return bool(is_pseudo_metric(self.space, self.matrix))

    @property
    def inertia(self) -> Inertia:
        return symmetric_inertia(self.matrix)


def is_smooth_form(space: DiffSpace, A) -> bool:
    """``<v|w> = v^T A w`` is smooth iff A kills every characteristic direction."""
    A = as_matrix(A)
    _check_shape(space, A)
    return all(x == 0 for c in space.characteristic.vectors for x in A.apply(c))


def smooth_form_space(space: DiffSpace) -> list[Matrix]:
    """Basis of the symmetric solutions of ``A c = 0`` for all ``c`` in C.

    Unknowns are the upper-triangular entries of A; the constraints are the
    linear equations ``(A c)_i = 0`` for each basis vector ``c``.
    """
    n = space.dimension
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    index = {s: k for k, s in enumerate(slots)}

    def slot(i, j):
        return index[(i, j) if i <= j else (j, i)]

    equations = []
    for c in space.characteristic.vectors:
        for i in range(n):
            row = [Fraction(0)] * len(slots)
            for j in range(n):
                row[slot(i, j)] += c[j]
            equations.append(row)
    solutions = kernel(Matrix(equations, cols=len(slots)))
    basis = []
    for sol in solutions.vectors:
        basis.append(Matrix([[sol[slot(i, j)] for j in range(n)] for i in range(n)], cols=n))
    return basis


def canonical_pseudo_metric(space: DiffSpace) -> BilinearForm:
    """The sum of squares of the canonical dual basis, ``F^T F``."""
    F = dual_rows(space)
    return BilinearForm(space, F.T @ F)


def is_pseudo_metric(space: DiffSpace, A) -> Verdict:
    A = as_matrix(A)
    _check_shape(space, A)
    if not is_smooth_form(space, A):
        return Verdict(False, "form not smooth")
    dim_c = space.characteristic.dim
    inertia = symmetric_inertia(A)
    if inertia.n_minus:
        return Verdict(False, f"has {inertia.n_minus} negative eigenvalue(s)")
    if inertia.n_zero != dim_c:
        return Verdict(False, f"zero eigenvalue multiplicity {inertia.n_zero} != {dim_c}")
    return Verdict(True, "pseudo-metric")


@dataclass(frozen=True)
class LemmaCheck:
    holds: bool
    n_zero: int
    bound: int

    def __bool__(self) -> bool:
        return self.holds


def signature_lemma_check(space: DiffSpace, A) -> LemmaCheck:
    """Check ``n_zero >= n - dim V*`` for a smooth symmetric form."""
    A = as_matrix(A)
    if not is_smooth_form(space, A):
        raise NotSmoothError("form not smooth")
    n_zero = symmetric_inertia(A).n_zero
    bound = space.characteristic.dim
    return LemmaCheck(n_zero >= bound, n_zero, bound)
