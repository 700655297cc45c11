from math import factorial, prod

import pytest

from gpfusion.gp_ring import (amu_graded_dims, cmu_generators, default_points, dk, expected_component, orbit_size,
                              rmu_decompose, rmu_hilbert)
from gpfusion.kostka import kostka_hook, num_standard_tableaux, ssyt_count, tilde_transform
from gpfusion.partitions import dominance_leq, nstat, partitions_of
from gpfusion.polys import elementary_symmetric
from gpfusion.qpoly import ONE, Q, QPoly
from gpfusion.verify import corrupted_spec
from gpfusion.polys import NotInvariantError


def test_dk_examples():
    assert [dk((1, 1, 1), k) for k in (1, 2, 3)] == [0, 0, 3]
    assert [dk((3,), k) for k in (1, 2, 3)] == [1, 2, 3]
    assert dk((2, 1), 2) == 1
    for mu in partitions_of(5):
        assert dk(mu, 5) == 5
    with pytest.raises(ValueError):
        dk((2, 1), 4)


def test_cmu_generators_examples():
    gens = cmu_generators((1, 1, 1, 1)).generators
    assert sorted(g.canonical() for g in gens) == sorted(
        elementary_symmetric(r, range(4), 4).canonical() for r in range(1, 5))
    # (2,1): the three pair products and E_1, E_2, E_3
    gens = cmu_generators((2, 1)).generators
    assert sorted(g.degree() for g in gens) == [1, 2, 2, 2, 2, 3]
    # (N): every E_r of every subset, so all single variables appear
    gens = cmu_generators((3,)).generators
    assert sum(1 for g in gens if g.degree() == 1 and len(g.terms) == 1) == 3


@pytest.mark.parametrize("mu, expected", [((1, 1, 1), [1, 2, 2, 1]), ((3,), [1]), ((2, 1), [1, 2])])
def test_rmu_hilbert_examples(mu, expected):
    assert rmu_hilbert(mu).to_list() == expected


def test_rmu_decompose_examples():
    assert rmu_decompose((1, 1, 1)).component((2, 1)) == Q + Q**2
    assert rmu_decompose((2, 1)).component((2, 1)) == Q
    for mu in partitions_of(4):
        assert rmu_decompose(mu).component((4,)) == ONE


@pytest.mark.parametrize("N", range(1, 6))
def test_gp_theorem(N):
    for mu in partitions_of(N):
        dec = rmu_decompose(mu)
        hil = dec.hilbert
        assert hil.at_one() == orbit_size(mu) == factorial(N) // prod(factorial(p) for p in mu)
        assert hil.degree() == nstat(mu)
        total = QPoly()
        for lam in partitions_of(N):
            comp = dec.component(lam)
            assert comp == expected_component(lam, mu)
            assert comp.has_nonnegative_coeffs()
            assert comp.at_one() == ssyt_count(lam, mu)
            if not dominance_leq(mu, lam):
                assert comp.is_zero()
            total = total + comp * num_standard_tableaux(lam)
        assert total == hil


def test_coinvariant_ring_is_regular():
    dec = rmu_decompose((1, 1, 1, 1))
    for lam in partitions_of(4):
        assert dec.component(lam).at_one() == num_standard_tableaux(lam)
        assert dec.component(lam) == tilde_transform(kostka_hook(lam), (1, 1, 1, 1))


def test_amu_examples():
    assert amu_graded_dims((2, 1), (1, 2)) == [1, 2]
    assert amu_graded_dims((4,), (7,)) == [1]
    assert amu_graded_dims((1, 1), (0, 1)) == [1, 1]


@pytest.mark.parametrize("N", range(1, 6))
@pytest.mark.parametrize("choice", ["arith", "geom"])
def test_amu_matches_hilbert(N, choice):
    for mu in partitions_of(N):
        assert amu_graded_dims(mu, default_points(mu, choice)) == rmu_hilbert(mu).to_list()


def test_amu_repeated_points():
    with pytest.raises(ValueError):
        amu_graded_dims((2, 1), (3, 3))


def test_corrupted_generators_fail_with_degree():
    with pytest.raises(NotInvariantError) as e:
        rmu_decompose((2, 1), spec=corrupted_spec((2, 1)))
    assert e.value.degree == 2
