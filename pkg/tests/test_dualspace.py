from fractions import Fraction as Q

import pytest

from diffeolin.dualspace import dual_basis, psi, psi_inverse_on_v0
from diffeolin.errors import NotPseudoMetricError, NotSmoothError
from diffeolin.exactlin import Matrix, column_space
from diffeolin.sampling import random_pseudo_metric, random_rational, random_smooth_form, random_space, random_vector, trial_rng

from .conftest import A_CANON, A_PAPER


def test_dual_basis_examples(e3, e0, e4):
    F = dual_basis(e3)
    assert F.rows == Matrix([[1, 0, 0], [0, 1, -1]]) and F.k == 2
    assert dual_basis(e0).rows == Matrix.identity(2)
    assert dual_basis(e4).k == 0


def test_dual_rows_kill_c(e3):
    for phi in dual_basis(e3).rows.rows:
        assert all(sum(a * b for a, b in zip(phi, c)) == 0 for c in e3.characteristic.vectors)


def test_psi_examples(e3):
    assert psi(e3, A_PAPER, (Q(2, 3), Q(-1, 6), Q(1, 6))) == (1, 0)
    assert psi(e3, A_PAPER, (0, 1, 1)) == (0, 0)
    assert psi(e3, A_CANON, (1, 0, 0)) == (1, 0)


def test_psi_rejects_non_smooth(e3):
    with pytest.raises(NotSmoothError):
        psi(e3, Matrix.identity(3), (1, 0, 0))


def test_psi_inverse_examples(e3, e0):
    assert psi_inverse_on_v0(e3, A_PAPER, (1, 0)) == (Q(2, 3), Q(-1, 6), Q(1, 6))
    assert psi_inverse_on_v0(e3, A_PAPER, (0, 1)) == (Q(-1, 3), Q(1, 3), Q(-1, 3))
    c = (Q(3, 2), Q(-7))
    assert psi_inverse_on_v0(e0, Matrix.identity(2), c) == c


def test_psi_inverse_preimages_forward_check(e3):
    # A applied to each printed preimage is the matching dual covector
    assert A_PAPER.apply((Q(2, 3), Q(-1, 6), Q(1, 6))) == (1, 0, 0)
    assert A_PAPER.apply((Q(-1, 3), Q(1, 3), Q(-1, 3))) == (0, 1, -1)


def test_psi_inverse_requires_pseudo_metric(e3):
    with pytest.raises(NotPseudoMetricError):
        psi_inverse_on_v0(e3, Matrix.zeros(3, 3), (1, 0))


@pytest.mark.parametrize("trial", range(40))
def test_round_trips_and_linearity(trial):
    rng = trial_rng(21, trial, "psi")
    space = random_space(rng)
    A = random_pseudo_metric(rng, space)
    k, n = space.dual_dimension, space.dimension
    assert dual_basis(space).k + space.characteristic.dim == n
    c = random_vector(rng, k)
    assert psi(space, A, psi_inverse_on_v0(space, A, c)) == tuple(c)
    V0 = column_space(A.matrix)
    coeffs = [random_rational(rng) for _ in range(V0.dim)]
    v = tuple(sum((a * b[j] for a, b in zip(coeffs, V0.vectors)), Q(0)) for j in range(n))
    assert psi_inverse_on_v0(space, A, psi(space, A, v)) == v
    u, w = random_vector(rng, n), random_vector(rng, n)
    a, b = random_rational(rng), random_rational(rng)
    lhs = psi(space, A, [a * x + b * y for x, y in zip(u, w)])
    assert lhs == tuple(a * x + b * y for x, y in zip(psi(space, A, u), psi(space, A, w)))


@pytest.mark.parametrize("trial", range(30))
def test_psi_kills_characteristic(trial):
    rng = trial_rng(22, trial, "psi")
    space = random_space(rng)
    A = random_smooth_form(rng, space)
    for c in space.characteristic.vectors:
        assert psi(space, A, c) == (0,) * space.dual_dimension
