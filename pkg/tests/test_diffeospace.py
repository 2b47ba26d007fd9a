import random

import pytest

from diffeolin.diffeospace import (
    DiffSpace,
    GeneratorPlot,
    characteristic_subspace,
    is_standard_subspace,
    normalize_terms,
    validate_space,
)
from diffeolin.errors import InvalidSpaceError
from diffeolin.exactlin import Subspace
from diffeolin.sampling import random_space, random_subspace, trial_rng


def span(*vecs, n=3):
    return Subspace.span(vecs, n)


def test_characteristic_examples(e3, e0, e2):
    assert characteristic_subspace(e3) == span((0, 1, 1))
    assert characteristic_subspace(e0).is_zero()
    assert characteristic_subspace(e2) == span((1, 0, 0), (0, 1, 0))


def test_characteristic_brute_force_annihilator(e2):
    # a covector kills C iff it kills each generator direction
    ann = characteristic_subspace(e2).annihilator()
    for phi in ann.vectors:
        assert all(sum(a * b for a, b in zip(phi, g.vector)) == 0 for g in e2.generators)
    assert ann == span((0, 0, 1))


def test_per_symbol_subspaces(e2):
    assert e2.per_symbol == {"abs": span((1, 0, 0)), "cbrt": span((0, 1, 0))}


@pytest.mark.parametrize(
    "W,expected",
    [
        (((1, 0, 0), (0, 1, 0)), True),
        (((0, 1, 0), (0, 0, 1)), False),
        (((1, 0, 0), (0, 1, 0), (0, 0, 1)), False),
        (((1, 0, 0), (0, 1, -1)), True),
        ((), True),
    ],
)
def test_standard_subspaces_of_e3(e3, W, expected):
    assert is_standard_subspace(e3, Subspace.span(W, 3)) is expected


def test_same_symbol_generators_combine():
    space = DiffSpace.of(3, ("abs", (1, 0, 0)), ("abs", (0, 1, 0)))
    assert not is_standard_subspace(space, span((1, 1, 0)))


def test_distinct_symbols_do_not_combine():
    space = DiffSpace.of(3, ("abs", (1, 0, 0)), ("cbrt", (0, 1, 0)))
    assert is_standard_subspace(space, span((1, 1, 0)))
    assert not is_standard_subspace(space, span((1, 1, 0), (0, 1, 0)))


def test_validate():
    e3gens = [GeneratorPlot("abs", (0, 1, 1))]
    assert validate_space(3, e3gens) == []
    assert validate_space(3, [GeneratorPlot("abs", (0, 0, 0))]) == ["zero generator vector at index 0"]
    diags = validate_space(3, [GeneratorPlot("exp", (1, 0, 0))])
    assert len(diags) == 1 and "unknown symbol" in diags[0]
    assert "length" in validate_space(2, e3gens)[0]
    assert validate_space(-1, [])


def test_invalid_space_raises():
    with pytest.raises(InvalidSpaceError) as info:
        DiffSpace.of(2, ("relu", (1, 0)))
    assert "unknown symbol" in str(info.value)


def test_normalize_terms_drops_smooth():
    gens = normalize_terms([("abs", (1, 0)), ("smooth", (0, 1)), ("sign", (1, 1))])
    assert [g.symbol for g in gens] == ["abs", "sign"]


def test_generator_evaluation():
    p = GeneratorPlot("abs", (0, 1, 1))
    assert p(-2.0) == (0.0, 2.0, 2.0)
    assert GeneratorPlot("cbrt", (1,))(-8.0)[0] == pytest.approx(-2.0)
    assert GeneratorPlot("sign", (1,))(-3.0) == (-1.0,)


def test_is_hashable_and_frozen(e3):
    assert e3 == DiffSpace.of(3, ("abs", (0, 1, 1)))
    hash(e3)


@pytest.mark.parametrize("trial", range(40))
def test_space_invariants(trial):
    rng = trial_rng(11, trial, "diffeospace")
    space = random_space(rng)
    n = space.dimension
    C = space.characteristic
    assert C.dim + C.annihilator().dim == n
    assert is_standard_subspace(space, Subspace.zero(n))
    assert is_standard_subspace(space, Subspace.full(n)) == (not space.generators)
    # monotonicity: subspaces of standard subspaces are standard
    W = random_subspace(rng, n, rng.randint(0, n))
    if is_standard_subspace(space, W) and W.dim:
        Wp = Subspace.span(W.vectors[: rng.randint(0, W.dim)], n)
        assert is_standard_subspace(space, Wp)


def test_cross_symbol_intersection_with_c_is_still_standard():
    # W meets C but no single C_g: standard under the per-symbol criterion
    space = DiffSpace.of(2, ("abs", (1, 0)), ("sign", (0, 1)))
    W = span((1, 1), n=2)
    assert not (W & space.characteristic).is_zero()
    assert is_standard_subspace(space, W)


def test_e3_span_with_c_never_standard(e3):
    rng = random.Random(5)
    for _ in range(20):
        extra = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(rng.randint(0, 2))]
        W = Subspace.span([(0, 1, 1)] + extra, 3)
        assert not is_standard_subspace(e3, W)
