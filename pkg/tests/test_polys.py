from fractions import Fraction

import pytest

from gpfusion.linalg import EchelonBasis, IntegerRank
from gpfusion.polys import (GradedIdeal, MultiPoly, NotHomogeneousError, NotInvariantError, elementary_symmetric,
                            hilbert_function, ideal_slice, monomials, orbit_evaluation_ranks, orbit_points,
                            permute_poly, power_sum, quotient_dims, quotient_trace)


def z(n, i):
    return MultiPoly.var(n, i - 1)


def E(m, n):
    return elementary_symmetric(m, range(n), n)


# --- polynomials ------------------------------------------------------------

def test_elementary_symmetric_examples():
    assert E(1, 3) == z(3, 1) + z(3, 2) + z(3, 3)
    assert elementary_symmetric(2, (0, 1), 2) == z(2, 1) * z(2, 2)
    assert E(2, 3) == z(3, 1) * z(3, 2) + z(3, 1) * z(3, 3) + z(3, 2) * z(3, 3)
    assert E(0, 3) == MultiPoly.constant(3)
    with pytest.raises(ValueError):
        elementary_symmetric(3, (0, 1), 3)


def test_power_sum_examples():
    assert power_sum(1, 2) == z(2, 1) + z(2, 2)
    assert power_sum(2, 2) == z(2, 1) * z(2, 1) + z(2, 2) * z(2, 2)
    p = power_sum(3, 3)
    assert p.is_homogeneous() and p.degree() == 3 and len(p.terms) == 3


def test_permute_poly_examples():
    p = z(3, 1) * z(3, 2) * z(3, 2)
    assert permute_poly((0, 1, 2), p) == p
    assert permute_poly((1, 0, 2), z(3, 1)) == z(3, 2)
    assert permute_poly((1, 2, 0), p) == z(3, 2) * z(3, 3) * z(3, 3)


def test_multipoly_basics():
    p = z(2, 1) + MultiPoly.constant(2, 3)
    assert not p.is_homogeneous()
    assert p.homogeneous_part(1) == z(2, 1)
    assert p.evaluate((2, 5)) == 5
    assert (p - p).is_zero()
    assert repr(z(2, 1) * z(2, 2)) == "z1*z2"
    assert (2 * z(2, 1)).canonical() == z(2, 1).canonical()


def test_monomial_order():
    mons = monomials(3, 2)
    assert mons[0] == (2, 0, 0) and mons[-1] == (0, 0, 2)
    assert len(mons) == 6


# --- linear algebra -----------------------------------------------------------

def test_echelon_basis():
    b = EchelonBasis()
    assert b.add({0: 1, 1: 1})
    assert b.add({1: 2})
    assert not b.add({0: 3, 1: 5})
    assert b.rank == 2
    assert b.contains({0: Fraction(1, 2)})
    assert b.reduce({0: 1, 2: 1}) == {2: 1}


def test_integer_rank():
    r = IntegerRank(3)
    assert r.add([1, 2, 3])
    assert r.add([2, 4, 7])
    assert not r.add([3, 6, 10])
    assert r.rank == 2


# --- ideal slices -------------------------------------------------------------

def test_ideal_slice_examples():
    assert ideal_slice([z(2, 1) + z(2, 2)], 1).rank == 1
    assert ideal_slice([E(1, 2), E(2, 2)], 2).rank == 3
    assert ideal_slice([], 3, nvars=3).rank == 0
    sl = ideal_slice([E(1, 3)], 1)
    assert sl.rank + len(sl.complement) == sl.size == 3


def test_reduce_is_idempotent():
    sl = ideal_slice([E(1, 3), E(2, 3)], 2)
    p = z(3, 1) * z(3, 1) + 3 * z(3, 2) * z(3, 3)
    r = sl.reduce(p)
    assert sl.reduce(r) == r
    assert sl.contains(p - r)
    assert set(r.terms) <= set(sl.complement)


def test_non_homogeneous_generator():
    with pytest.raises(NotHomogeneousError):
        GradedIdeal([z(2, 1) + MultiPoly.constant(2)], 2)


def test_quotient_dims_examples():
    assert quotient_dims([E(1, 3), E(2, 3), E(3, 3)], 4) == [1, 2, 2, 1, 0]
    pairs = [z(3, 1) * z(3, 2), z(3, 1) * z(3, 3), z(3, 2) * z(3, 3)]
    assert quotient_dims(pairs + [E(1, 3), E(2, 3), E(3, 3)], 3) == [1, 2, 0, 0]
    everything = [elementary_symmetric(1, (i,), 3) for i in range(3)]
    assert quotient_dims(everything, 2) == [1, 0, 0]


def test_hilbert_function_stops_at_two_zeros():
    ideal = GradedIdeal([E(1, 2), E(2, 2)], 2)
    assert hilbert_function(ideal, 10) == ([1, 1], True)
    assert hilbert_function(GradedIdeal([E(1, 2)], 2), 3) == ([1, 1, 1, 1], False)


def test_quotient_trace_examples():
    gens = [E(1, 3), E(2, 3), E(3, 3)]
    for d, dim in enumerate([1, 2, 2, 1]):
        assert quotient_trace(gens, (0, 1, 2), d) == dim
    assert quotient_trace(gens, (1, 0, 2), 1) == 0
    assert quotient_trace(gens, (1, 2, 0), 3) == 1
    # the top slice is the sign representation
    assert quotient_trace(gens, (1, 0, 2), 3) == -1


def test_non_invariant_ideal_is_detected():
    gens = [z(3, 1) * z(3, 2), E(1, 3)]
    with pytest.raises(NotInvariantError) as e:
        quotient_trace(gens, (1, 2, 0), 2)
    assert e.value.degree == 2


# --- orbit evaluation ---------------------------------------------------------

def test_orbit_points():
    assert len(orbit_points((2, 1), (1, 2))) == 3
    with pytest.raises(ValueError):
        orbit_points((1, 1), (1, 1))


def test_orbit_evaluation_examples():
    assert orbit_evaluation_ranks((3,), (5,), 3) == [1, 1, 1, 1]
    assert orbit_evaluation_ranks((1, 1), (0, 1), 2) == [1, 2, 2]
    assert orbit_evaluation_ranks((2, 1), (1, 2), 2) == [1, 3, 3]
    assert orbit_evaluation_ranks((2, 1), (Fraction(1, 2), Fraction(-3, 7)), 2) == [1, 3, 3]
