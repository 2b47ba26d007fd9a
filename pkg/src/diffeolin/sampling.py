"""Seeded random generators for spaces, subspaces and forms.

Per-trial streams come from :func:`trial_rng`, so results depend only on
``(seed, trial, tag)`` and never on evaluation order.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .diffeospace import SYMBOLS, DiffSpace, GeneratorPlot
from .exactlin import Matrix, Subspace, rank
from .forms import BilinearForm, dual_rows

_SYMBOLS = sorted(SYMBOLS)


def trial_rng(seed: int, trial: int, tag: str = "") -> random.Random:
    # str seeds hash through sha512: stable across runs and platforms.
    return random.Random(f"{tag}:{seed}:{trial}")


def random_rational(rng: random.Random) -> Fraction:
    """Numerators in [-9, 9], denominators in [1, 4]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_vector(rng: random.Random, n: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(n)]


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([random_vector(rng, cols) for _ in range(rows)], cols=cols)


def random_subspace(rng: random.Random, n: int, d: int) -> Subspace:
    """Span of ``max(d, 0)`` random vectors; generically of dimension ``d``."""
    return Subspace.span([random_vector(rng, n) for _ in range(max(d, 0))], n)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        P = random_matrix(rng, n, n)
        if rank(P) == n:
            return P


def random_symmetric(rng: random.Random, n: int) -> Matrix:
    S = random_matrix(rng, n, n)
    return Matrix([[S[min(i, j), max(i, j)] for j in range(n)] for i in range(n)], cols=n)


def random_positive_definite(rng: random.Random, k: int) -> Matrix:
    G = random_matrix(rng, k, k)
    D = Matrix.diagonal([Fraction(rng.randint(1, 4), rng.randint(1, 4)) for _ in range(k)])
    return G.T @ G + D


def random_space(rng: random.Random, max_dim: int = 6, min_dim: int = 1) -> DiffSpace:
    """Random space; generator vectors are occasionally repeated or
    combined so that C_g and C overlap in nontrivial ways."""
    n = rng.randint(min_dim, max_dim)
    gens: list[GeneratorPlot] = []
    for _ in range(rng.randint(0, n + 1)):
        sym = rng.choice(_SYMBOLS)
        if gens and rng.random() < 0.25:
            base = rng.choice(gens).vector
            vec = [Fraction(rng.randint(1, 3)) * x for x in base]
        else:
            vec = random_vector(rng, n)
        if any(vec):
            gens.append(GeneratorPlot(sym, tuple(vec)))
    return DiffSpace(n, tuple(gens))


def random_pseudo_metric(rng: random.Random, space: DiffSpace) -> BilinearForm:
    """``F^T S F`` with ``S`` random positive definite."""
    F = dual_rows(space)
    S = random_positive_definite(rng, F.nrows)
    return BilinearForm(space, F.T @ S @ F)


def random_smooth_form(rng: random.Random, space: DiffSpace) -> BilinearForm:
    """``F^T S F`` with ``S`` random symmetric, possibly indefinite or singular."""
    F = dual_rows(space)
    S = random_symmetric(rng, F.nrows)
    return BilinearForm(space, F.T @ S @ F)
