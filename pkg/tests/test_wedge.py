import pytest

from gpfusion.kostka import kostka_hook, q_pochhammer, sln_irrep_dim
from gpfusion.partitions import conjugate, partitions_of
from gpfusion.qpoly import ONE, Q
from gpfusion.wedge import (alternating_isotype_dim, ground_shape, hook_factorization_check, limit_stabilization,
                            normalized_wedge_char, reduced_wedge_decompose, wedge_char, wedge_total_dim, winf_char)

QI = Q.invert()


def test_reduced_wedge_examples():
    assert reduced_wedge_decompose(2, 2).components == {(1, 1): ONE, (2,): QI}
    assert reduced_wedge_decompose(3, 3).components == {(1, 1, 1): ONE, (2, 1): QI + QI**2, (3,): QI**3}
    assert reduced_wedge_decompose(1, 4).components == {(1,): ONE}


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("N", range(1, 5))
def test_wedge_routes_agree(N, n):
    dec = reduced_wedge_decompose(N, n)
    assert dec.agree
    assert all(len(mu) <= n for mu in dec.components)


def test_wedge_char_examples():
    w = wedge_char(2, 2)
    assert sum(sln_irrep_dim(mu, 2) * k.at_one() for mu, k in w.items()) == 4
    assert wedge_char(3, 2)[(2, 1)] == QI + QI**2
    assert wedge_char(3, 3)[(1, 1, 1)] == ONE


@pytest.mark.parametrize("N", range(1, 6))
def test_conjugation_identity(N):
    for mu in partitions_of(N):
        assert kostka_hook(conjugate(mu)).shift(-N * (N - 1) // 2) == kostka_hook(mu).invert()


@pytest.mark.parametrize("N", range(1, 6))
@pytest.mark.parametrize("n", [2, 3])
def test_wedge_total_dimension(N, n):
    assert wedge_total_dim(N, n) == alternating_isotype_dim(N, n) == n**N


def test_normalized_wedge_examples():
    assert normalized_wedge_char(0, 1, 2) == {(1, 1): ONE, (2,): QI}
    assert normalized_wedge_char(1, 0, 2) == {(1,): ONE}
    assert normalized_wedge_char(1, 1, 2)[(2, 1)] == ONE + QI
    # i = n folds to i = 0 with m + 1
    assert normalized_wedge_char(2, 1, 2) == normalized_wedge_char(0, 2, 2)
    assert ground_shape(1, 1, 2) == (2, 1)


def test_winf_examples():
    assert winf_char((), 2, 5).coeff_list() == [1, 0, 1, 1, 2, 2]
    assert winf_char((), 1, 7).coeff_list() == [1, 0, 0, 0, 0, 0, 0, 0]
    assert winf_char((1,), 2, 3).coeff_list() == [0, 1, 1, 1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_winf_nonnegative(n):
    for size in range(0, 5):
        for mubar in partitions_of(size, max_length=n):
            s = winf_char(mubar, n, 12)
            assert all(c >= 0 for c in s.coeff_list())


def test_limit_stabilization_examples():
    rep = limit_stabilization((), 2, 0, depth=4, mmax=8)
    assert rep.stable_from is not None and rep.matches_winf
    assert list(rep.limit_window) == [1, 0, 1, 1, 2]
    rep = limit_stabilization((), 2, 0, depth=0, mmax=8)
    assert all(w[1] == (1,) for w in rep.windows.values())
    rep = limit_stabilization((1,), 2, 1, depth=3, mmax=8)
    assert rep.stable_from is not None and rep.stable_from <= 6
    assert rep.matches_winf


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("size", range(0, 6))
def test_limit_matches_winf_up_to_monomial(size, n):
    for mubar in partitions_of(size, max_length=n):
        rep = limit_stabilization(mubar, n, depth=4, mmax=10)
        assert rep.stable_from is not None and rep.stable_from < 10
        assert rep.matches_winf
        low = rep.windows[rep.stable_from][0]
        assert low == rep.fitted_exponent
        if rep.mbar <= 1:
            assert low == rep.reference_exponent
        else:
            assert low == rep.reference_exponent - rep.mbar * (rep.mbar - 1) * n


@pytest.mark.parametrize("mubar, n", [((1, 1), 2), ((2, 2), 2), ((3, 1), 2), ((1, 1, 1), 3), ((2, 2, 2), 3)])
def test_limit_independent_of_bookkeeping(mubar, n):
    # the same N = nm + i written with i = 0 and with i = n (one fewer m)
    a = limit_stabilization(mubar, n, 0, depth=5, mmax=9)
    b = limit_stabilization(mubar, n, n, depth=5, mmax=9)
    assert a.limit_window is not None
    assert a.limit_window == b.limit_window
    assert a.windows[a.stable_from][0] == b.windows[b.stable_from][0]


def test_limit_input_checks():
    with pytest.raises(ValueError):
        limit_stabilization((1, 1, 1), 2)
    with pytest.raises(ValueError):
        limit_stabilization((1,), 2, 0)


def test_hook_factorization_examples():
    rep = hook_factorization_check((2, 1), 2)
    assert rep.hook_product == (ONE - Q) ** 2 * (ONE - Q**3)
    assert rep.corrected_ok and not rep.variant_ok
    assert hook_factorization_check((4,), 1).hook_product == q_pochhammer(4)
    rep = hook_factorization_check((1, 1), 2)
    assert rep.hook_product == (ONE - Q) * (ONE - Q**2)
    assert rep.corrected_ok


@pytest.mark.parametrize("N", range(0, 9))
def test_hook_factorization_all(N):
    for mu in partitions_of(N, max_length=4):
        for n in range(max(1, len(mu)), 5):
            assert hook_factorization_check(mu, n).corrected_ok
