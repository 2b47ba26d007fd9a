"""Finite-dimensional diffeological vector spaces with ray-plot generators.

A space is Q^n (standing in for R^n) carrying the vector space diffeology
generated by finitely many plots ``x -> g(x) * w`` with ``g`` a catalog
symbol that is non-smooth at 0.  For this class every smoothness question
reduces to linear algebra on the characteristic subspace
``C = span{w : (g, w) a generator}``.

Catalog axiom (assumed, not checked): nonzero multiples of distinct catalog
functions never combine, modulo smooth functions and smooth
reparametrizations, into something smooth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatchError, InvalidSpaceError
from .exactlin import Subspace

SYMBOLS: dict[str, Callable[[float], float]] = {
    "abs": abs,
    "sign": lambda x: math.copysign(1.0, x) if x else 0.0,
    "cbrt": lambda x: math.copysign(abs(x) ** (1.0 / 3.0), x),
}

# Accepted in multi-term generators and dropped at load time.
SMOOTH_SYMBOL = "smooth"


@dataclass(frozen=True)
class GeneratorPlot:
    symbol: str
    vector: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(Fraction(x) for x in self.vector))

    def __call__(self, x: float) -> tuple[float, ...]:
        g = SYMBOLS[self.symbol](x)
        return tuple(g * float(w) for w in self.vector)


def validate_space(dimension: int, generators: Sequence[GeneratorPlot]) -> list[str]:
    """Diagnostics for a raw space description; empty means valid."""
    diags = []
    if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 0:
        diags.append(f"dimension must be a nonnegative integer, got {dimension!r}")
        return diags
    for i, g in enumerate(generators):
        if g.symbol not in SYMBOLS:
            diags.append(f"unknown symbol {g.symbol!r} at index {i}")
        if len(g.vector) != dimension:
            diags.append(f"vector length {len(g.vector)} != dimension {dimension} at index {i}")
        elif all(x == 0 for x in g.vector):
            diags.append(f"zero generator vector at index {i}")
    return diags


def normalize_terms(terms: Iterable[tuple[str, Sequence]]) -> list[GeneratorPlot]:
    """Split a multi-term plot ``sum_j g_j(x) w_j`` into one generator per
    non-smooth term.  Smooth terms are absorbed by the fine diffeology."""
    return [GeneratorPlot(sym, tuple(vec)) for sym, vec in terms if sym != SMOOTH_SYMBOL]


@dataclass(frozen=True)
class DiffSpace:
    dimension: int
    generators: tuple[GeneratorPlot, ...] = ()
    per_symbol: dict[str, Subspace] = field(init=False, compare=False, repr=False)
    characteristic: Subspace = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        diags = validate_space(self.dimension, gens)
        if diags:
            raise InvalidSpaceError(diags)
        n = self.dimension
        per_symbol = {}
        for sym in sorted({g.symbol for g in gens}):
            per_symbol[sym] = Subspace.span([g.vector for g in gens if g.symbol == sym], n)
        object.__setattr__(self, "per_symbol", per_symbol)
        object.__setattr__(self, "characteristic", Subspace.span([g.vector for g in gens], n))

    @classmethod
    def standard(cls, n: int) -> DiffSpace:
        return cls(n, ())

    @classmethod
    def of(cls, n: int, *generators: tuple[str, Sequence]) -> DiffSpace:
        """``DiffSpace.of(3, ("abs", (0, 1, 1)))``"""
        return cls(n, tuple(GeneratorPlot(s, tuple(v)) for s, v in generators))

    @property
    def dual_dimension(self) -> int:
        return self.dimension - self.characteristic.dim


def characteristic_subspace(space: DiffSpace) -> Subspace:
    return space.characteristic


def is_standard_subspace(space: DiffSpace, W: Subspace) -> bool:
    """Whether the subset diffeology on ``W`` is standard.

    Only same-symbol generators can combine into a plot with values in
    ``W``, so the test is ``W & C_g == 0`` for each symbol ``g``.
    """
    if W.ambient_dim != space.dimension:
        raise DimensionMismatchError(f"subspace of Q^{W.ambient_dim} in a space of dimension {space.dimension}")
    return all((W & Cg).is_zero() for Cg in space.per_symbol.values())
