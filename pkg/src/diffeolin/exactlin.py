"""Exact rational linear algebra over Q, plus a float Jacobi eigensolver.

Everything except :func:`jacobi_eigen` works with :class:`fractions.Fraction`
entries and never rounds.  Matrices and subspaces are immutable values.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    AmbiguousSolutionError,
    DimensionMismatchError,
    NoConvergenceError,
    NoSolutionError,
    NotSymmetricError,
)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str | int) -> Fraction:
    """Parse ``INT`` or ``INT/POSINT`` exactly.  Python ints pass through."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def _vec(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


class Matrix:
    """Immutable row-major matrix of Fractions.

    A matrix with zero rows still knows its column count, so the zero
    subspace of Q^n is ``Matrix([], cols=n)``.
    """

    __slots__ = ("_rows", "ncols")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(_vec(r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionMismatchError("column count required for an empty matrix")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise DimensionMismatchError(f"ragged matrix: row of length {len(r)}, expected {cols}")
        self._rows = data
        self.ncols = cols

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> Matrix:
        return cls([[c[i] for c in columns] for i in range(nrows)], cols=len(columns))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ncols, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}], cols={self.ncols})"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> Matrix:
        return Matrix([self.column(j) for j in range(self.ncols)], cols=self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], cols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        c = Fraction(c)
        return Matrix([[c * a for a in r] for r in self._rows], cols=self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix([[_dot(r, c) for c in cols] for r in self._rows], cols=other.ncols)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.shape} matrix")
        v = _vec(v)
        return tuple(_dot(r, v) for r in self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def bilinear(self, u: Sequence, v: Sequence) -> Fraction:
        """``u^T M v``."""
        return _dot(_vec(u), self.apply(v))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._rows], dtype=float).reshape(self.shape)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot of lengths {len(u)} and {len(v)}")
    return _dot(_vec(u), _vec(v))


def _require_symmetric(A: Matrix) -> None:
    if not A.is_symmetric():
        raise NotSymmetricError("not symmetric")


# --------------------------------------------------------------------------
# Row reduction


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.  ``R`` keeps the shape of ``M``."""
    m, pivots = _rref_rows([list(r) for r in M.rows], M.ncols)
    return Matrix(m, cols=M.ncols), len(pivots)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def pivot_columns(M: Matrix) -> list[int]:
    return _rref_rows([list(r) for r in M.rows], M.ncols)[1]


# --------------------------------------------------------------------------
# Subspaces


class Subspace:
    """A linear subspace of Q^n held by its canonical RREF basis.

    Two subspaces compare equal iff they are equal as sets.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, basis: Matrix):
        m, pivots = _rref_rows([list(r) for r in basis.rows], basis.ncols)
        self.basis = Matrix(m[: len(pivots)], cols=basis.ncols)
        self.ambient_dim = basis.ncols

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int) -> Subspace:
        return cls(Matrix(list(vectors), cols=n))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(Matrix([], cols=n))

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.basis.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.ambient_dim}, basis={[list(map(str, r)) for r in self.vectors]})"

    def _check_ambient(self, other: Subspace) -> None:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError(f"subspaces of Q^{self.ambient_dim} and Q^{other.ambient_dim}")

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        return rank(Matrix(list(self.vectors) + [list(v)], cols=self.ambient_dim)) == self.dim

    def contains(self, other: Subspace) -> bool:
        """True iff ``other`` is a subset of ``self``."""
        self._check_ambient(other)
        return (self + other).dim == self.dim

    def __add__(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        return Subspace(Matrix(list(self.vectors) + list(other.vectors), cols=self.ambient_dim))

    def __and__(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def intersect(self, other: Subspace) -> Subspace:
        return self & other

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def annihilator(self) -> Subspace:
        return annihilator(self)

    def orthogonal_complement(self) -> Subspace:
        """Complement for the coordinate dot product; same rows as the annihilator."""
        return annihilator(self)


def kernel(M: Matrix) -> Subspace:
    """Canonical basis of ``{x : M x = 0}``."""
    n = M.ncols
    m, pivots = _rref_rows([list(r) for r in M.rows], n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return Subspace(Matrix(basis, cols=n))


def column_space(M: Matrix) -> Subspace:
    return Subspace(M.T)


def row_space(M: Matrix) -> Subspace:
    return Subspace(M)


def annihilator(S: Subspace) -> Subspace:
    """Covectors (as rows) vanishing on every vector of ``S``."""
    return kernel(S.basis)


def solve(M: Matrix, b: Sequence, unique: bool = False) -> tuple[Fraction, ...]:
    """One exact solution of ``M x = b``.

    Raises :class:`NoSolutionError` if the system is inconsistent and, when
    ``unique`` is set, :class:`AmbiguousSolutionError` if ``M`` has a
    nontrivial kernel.
    """
    if len(b) != M.nrows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {M.shape} matrix")
    n = M.ncols
    aug = [list(r) + [Fraction(x)] for r, x in zip(M.rows, b)]
    m, pivots = _rref_rows(aug, n + 1)
    if n in pivots:
        raise NoSolutionError("no solution")
    if unique and len(pivots) < n:
        raise AmbiguousSolutionError("ambiguous: kernel is nontrivial")
    x = [Fraction(0)] * n
    for row, pc in zip(m, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise DimensionMismatchError(f"cannot invert {M.shape} matrix")
    n = M.nrows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.rows)]
    m, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise NoSolutionError("singular matrix")
    return Matrix([r[n:] for r in m], cols=n)


# --------------------------------------------------------------------------
# Inertia


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


def symmetric_inertia(A: Matrix) -> Inertia:
    """Exact inertia by symmetric congruence diagonalization.

    A zero pivot with a nonzero off-diagonal entry ``s_ij`` is repaired by
    adding row/column ``j`` to row/column ``i``, which puts ``2 s_ij`` on the
    diagonal.
    """
    _require_symmetric(A)
    n = A.nrows
    s = [list(r) for r in A.rows]
    plus = minus = 0
    for k in range(n):
        p = next((i for i in range(k, n) if s[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if s[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            s[i] = [a + b for a, b in zip(s[i], s[j])]
            for r in s:
                r[i] += r[j]
            p = i
        if p != k:
            s[k], s[p] = s[p], s[k]
            for r in s:
                r[k], r[p] = r[p], r[k]
        d = s[k][k]
        for r in range(k + 1, n):
            f = s[r][k] / d
            if f:
                s[r] = [a - f * b for a, b in zip(s[r], s[k])]
                for row in s:
                    row[r] -= f * row[k]
        if d > 0:
            plus += 1
        else:
            minus += 1
    return Inertia(plus, minus, n - plus - minus)


# --------------------------------------------------------------------------
# Floating-point eigensolver (reporting only)

ZERO_EIGENVALUE_CUTOFF = 1e-9


def jacobi_eigen(A: Matrix | np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns eigenvalues in descending order and the matching orthonormal
    eigenvectors as columns.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(A, Matrix):
        _require_symmetric(A)
        a = A.to_float()
    else:
        a = np.array(A, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
            raise NotSymmetricError("not symmetric")
    n = a.shape[0]
    v = np.eye(n)

    def off_norm() -> float:
        return float(np.sqrt(np.sum((a - np.diag(np.diag(a))) ** 2)))

    for _ in range(max_sweeps):
        if off_norm() < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < abs(diff) * 1e-36:
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    else:
        if off_norm() >= tol:
            raise NoConvergenceError(f"no convergence after {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def eigen_signs(eigenvalues: Iterable[float], cutoff: float = ZERO_EIGENVALUE_CUTOFF) -> Inertia:
    ev = list(eigenvalues)
    plus = sum(1 for x in ev if x >= cutoff)
    minus = sum(1 for x in ev if x <= -cutoff)
    return Inertia(plus, minus, len(ev) - plus - minus)
