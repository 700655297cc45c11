from fractions import Fraction
from math import factorial

import pytest

from gpfusion.kostka import num_standard_tableaux
from gpfusion.partitions import conjugate, partitions_of
from gpfusion.symgroup import (ClassFunction, NonIntegralMultiplicity, character_table, class_size, conjugated,
                               cycle_type, decompose_class_function, irr_char, regular_character, representative,
                               sign_character)


def test_class_size_examples():
    assert class_size((1, 1, 1, 1)) == 1
    assert class_size((5,)) == factorial(4)
    assert class_size((2, 1)) == 3


@pytest.mark.parametrize("N", range(0, 8))
def test_class_sizes_sum(N):
    assert sum(class_size(rho) for rho in partitions_of(N)) == factorial(N)


def test_representative_has_cycle_type():
    for N in range(1, 7):
        for rho in partitions_of(N):
            perm = representative(rho)
            assert cycle_type(perm) == rho
            assert cycle_type(conjugated(perm, tuple(reversed(range(N))))) == rho


def test_irr_char_examples():
    for rho in partitions_of(5):
        assert irr_char((5,), rho) == 1
        assert irr_char((1,) * 5, rho) == (-1) ** (5 - len(rho))
    assert irr_char((2, 1), (1, 1, 1)) == 2
    assert irr_char((2, 1), (3,)) == -1
    assert irr_char((2, 1), (2, 1)) == 0


def test_character_table_s4_row():
    # columns in partitions_of order: (4), (3,1), (2,2), (2,1,1), (1^4)
    row = character_table(4)[(3, 1)]
    assert [row[rho] for rho in partitions_of(4)] == [-1, 0, -1, 1, 3]


@pytest.mark.parametrize("N", range(1, 8))
def test_orthonormality(N):
    tab = character_table(N)
    for lam in partitions_of(N):
        for nu in partitions_of(N):
            s = sum(class_size(rho) * tab[lam][rho] * tab[nu][rho] for rho in partitions_of(N))
            assert Fraction(s, factorial(N)) == (1 if lam == nu else 0)


@pytest.mark.parametrize("N", range(1, 8))
def test_dimensions(N):
    assert sum(irr_char(lam, (1,) * N) ** 2 for lam in partitions_of(N)) == factorial(N)
    for lam in partitions_of(N):
        assert irr_char(lam, (1,) * N) == num_standard_tableaux(lam)


def test_sign_twist_conjugates():
    sgn = sign_character(5)
    for lam in partitions_of(5):
        twisted = ClassFunction.irreducible(lam) * sgn
        assert decompose_class_function(twisted) == {conjugate(lam): 1}


def test_decompose_examples():
    reg = decompose_class_function(regular_character(4))
    assert reg == {lam: num_standard_tableaux(lam) for lam in partitions_of(4)}
    assert decompose_class_function(ClassFunction.irreducible((2, 1))) == {(2, 1): 1}
    perm = ClassFunction(3, {(1, 1, 1): 3, (2, 1): 1, (3,): 0})
    assert decompose_class_function(perm) == {(3,): 1, (2, 1): 1}


def test_decompose_rejects_non_characters():
    half = ClassFunction(2, {(1, 1): 1, (2,): 0})
    with pytest.raises(NonIntegralMultiplicity):
        decompose_class_function(half)
    neg = ClassFunction(2, {(1, 1): 0, (2,): 2})
    with pytest.raises(NonIntegralMultiplicity):
        decompose_class_function(neg)
    assert decompose_class_function(neg, require_character=False) == {(2,): 1, (1, 1): -1}


def test_class_function_needs_every_class():
    with pytest.raises(ValueError):
        ClassFunction(3, {(3,): 1})
