from fractions import Fraction
from itertools import product

import pytest

from skewhowe.crystals import (BudgetExceeded, Letter, TensorWord, RAISE, LOWER,
                               apply_operator, crystal_dimension, index_set,
                               is_highest_weight, letter_weight, letters,
                               multiplicity_oracle)
from skewhowe.multiplicity import TYPE_A, TYPE_B, TYPE_C, TYPE_D, weyl_dimension
from skewhowe.partitions import Partition, TypeDWeight


def test_letters_counts():
    assert len(letters("A", 3)) == 8
    assert len(letters("B", 2)) == 4
    assert len(letters("D", 3)) == 8
    assert len(letters("C", 2)) == 16  # exterior algebra of C^4


def test_rank1_spinor_flip():
    word = TensorWord((Letter("B", 1, (-1,)),))
    up = apply_operator(word, 1, RAISE)
    assert up.factors[0].content == (1,)
    assert apply_operator(up, 1, RAISE) is None


def test_type_a_signature_example():
    # [{1}] (x) [{1}]: lowering acts on the rightmost factor
    word = TensorWord((Letter("A", 2, (1,)), Letter("A", 2, (1,))))
    low = apply_operator(word, 1, LOWER)
    assert low.factors[0].content == (2,)
    assert low.factors[1].content == (1,)


def test_exhausted_signature_is_none():
    word = TensorWord((Letter("A", 2, (1, 2)),))
    assert apply_operator(word, 1, RAISE) is None
    assert apply_operator(word, 1, LOWER) is None


def test_index_set():
    assert list(index_set("A", 3)) == [1, 2]
    assert list(index_set("B", 2)) == [1, 2]
    assert list(index_set("D", 1)) == []


@pytest.mark.parametrize("series,n,k", [
    ("A", 2, 2), ("A", 2, 3), ("B", 2, 2), ("C", 1, 2), ("D", 2, 2),
])
def test_raise_lower_inverse(series, n, k):
    for combo in product(letters(series, n), repeat=k):
        word = TensorWord(combo)
        for i in index_set(series, n):
            up = apply_operator(word, i, RAISE)
            if up is not None:
                assert apply_operator(up, i, LOWER) == word
            down = apply_operator(word, i, LOWER)
            if down is not None:
                assert apply_operator(down, i, RAISE) == word


def _coroot_pairing(series, n, wt, i):
    if series in ("A", "C") and i < n or series in ("B", "D") and i < n:
        return wt[i - 1] - wt[i]
    if series == "B":
        return 2 * wt[n - 1]
    if series == "C":
        return wt[n - 1]
    return wt[n - 2] + wt[n - 1]


@pytest.mark.parametrize("series,n,k", [
    ("A", 3, 2), ("B", 2, 2), ("C", 2, 1), ("D", 2, 3),
])
def test_weight_string_axiom(series, n, k):
    # <wt(b), coroot_i> + eps_i(b) = phi_i(b)
    for combo in product(letters(series, n), repeat=k):
        word = TensorWord(combo)
        wt = word.weight()
        for i in index_set(series, n):
            eps = 0
            probe = word
            while True:
                probe = apply_operator(probe, i, RAISE)
                if probe is None:
                    break
                eps += 1
            phi = 0
            probe = word
            while True:
                probe = apply_operator(probe, i, LOWER)
                if probe is None:
                    break
                phi += 1
            assert _coroot_pairing(series, n, wt, i) + eps == phi


def test_oracle_examples():
    got = multiplicity_oracle("A", 2, 2)
    assert got == {Partition(()): 1, Partition((1,)): 2, Partition((1, 1)): 3,
                   Partition((2,)): 1, Partition((2, 1)): 2, Partition((2, 2)): 1}
    assert multiplicity_oracle("B", 1, 2) == {Partition((1,)): 1, Partition(()): 1}
    assert multiplicity_oracle("A", 3, 0) == {Partition(()): 1}
    assert multiplicity_oracle("D", 2, 0) == {TypeDWeight((0, 0)): 1}


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        multiplicity_oracle("C", 2, 10, budget=10**4)


_LIE_TYPE = {"A": TYPE_A, "B": TYPE_B, "C": TYPE_C, "D": TYPE_D}


@pytest.mark.parametrize("series,n,k", [
    ("A", 2, 3), ("A", 3, 2), ("B", 2, 3), ("C", 2, 2), ("D", 2, 4),
])
def test_dimension_sum(series, n, k):
    counts = multiplicity_oracle(series, n, k)
    total = 0
    for wt, mult in counts.items():
        coords = wt.parts if hasattr(wt, "parts") else tuple(wt)
        total += mult * weyl_dimension(_LIE_TYPE[series], n, coords)
    assert total == crystal_dimension(series, n) ** k


def test_letter_weights():
    assert letter_weight(Letter("A", 3, (1, 3))) == (1, 0, 1)
    assert letter_weight(Letter("C", 2, (1, 4))) == (0, 0)  # 1 and 1bar cancel
    assert letter_weight(Letter("B", 2, (1, -1))) == \
        (Fraction(1, 2), Fraction(-1, 2))


def test_highest_weight_shortcut_matches_operators():
    for combo in product(letters("C", 1), repeat=3):
        word = TensorWord(combo)
        direct = all(apply_operator(word, i, RAISE) is None
                     for i in index_set("C", 1))
        assert is_highest_weight(word) == direct


def _word(series, n, *factors_left_to_right):
    # displayed tensor products list the leftmost factor first
    return TensorWord(tuple(Letter(series, n, f)
                            for f in reversed(factors_left_to_right)))


def test_reference_highest_weight_word_type_a():
    # gl_5 exterior-algebra word of 6 factors with weight (5,4,4,2,1)
    word = _word("A", 5, (1, 3, 4), (1, 2, 3, 4, 5), (), (1, 2, 3), (1, 2, 3),
                 (1, 2))
    assert is_highest_weight(word)
    assert word.weight() == (5, 4, 4, 2, 1)


def test_reference_highest_weight_word_type_d():
    # so_8 spinor-sum word of 12 factors with weight (3,2,2,0)
    signs = [(-1, 1, 1, 1), (1, 1, 1, -1), (1, -1, -1, -1), (-1, 1, 1, -1),
             (1, -1, -1, 1), (1, -1, 1, 1), (1, 1, 1, 1), (1, 1, -1, 1),
             (-1, 1, 1, -1), (1, -1, -1, -1), (1, 1, 1, 1), (1, 1, 1, -1)]
    word = _word("D", 4, *signs)
    assert is_highest_weight(word)
    assert word.weight() == (3, 2, 2, 0)


def test_reference_highest_weight_word_rank_two():
    # D_2 word of 6 factors with weight zero
    signs = [(-1, 1), (-1, -1), (1, 1), (1, -1), (-1, -1), (1, 1)]
    word = _word("D", 2, *signs)
    assert is_highest_weight(word)
    assert word.weight() == (0, 0)
