from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewhowe.exact import (ExactDivisionError, HalfInt, QLaurent, SqrtPiValue,
                            catalan_triangle_q, gamma_half_integer, q_binomial,
                            q_factorial, q_int, q_power_plus_one,
                            reciprocal_gamma_regularized)


def test_qlaurent_canonical_form():
    p = QLaurent(-2, (0, 1, 0, 3, 0))
    assert p.min_exp == -1
    assert p.coeffs == (1, 0, 3)
    assert QLaurent(5, (0, 0)).is_zero
    assert QLaurent.zero().min_exp == 0


def test_qlaurent_arithmetic():
    p = q_int(3)             # 1 + q + q^2
    q = QLaurent.monomial(2, -1)
    assert (p + q).coeffs == (2, 1, 1, 1)
    assert (p - p).is_zero
    assert (p * q).min_exp == -1
    assert p(1) == 3
    assert p.at_one() == p(1)  # q = 1 evaluation is the coefficient sum
    assert p(Fraction(1, 2)) == Fraction(7, 4)
    assert (p ** 2).at_one() == 9
    assert p.shifted(4).min_exp == 4
    assert str(q_int(2)) == "1 + q"


def test_qlaurent_json_roundtrip():
    p = QLaurent(-3, (5, 0, -2, 1))
    assert QLaurent.from_json(p.to_json()) == p
    assert p.to_json()["coeffs"] == ["5", "0", "-2", "1"]


def test_qlaurent_pickles():
    import pickle
    p = QLaurent(-1, (1, 2, 3))
    assert pickle.loads(pickle.dumps(p)) == p


def test_q_binomial_examples():
    assert q_binomial(2, 1) == QLaurent(0, (1, 1))
    assert q_binomial(4, 2) == QLaurent(0, (1, 1, 2, 1, 1))
    assert q_binomial(3, 5).is_zero
    assert q_binomial(3, -1).is_zero
    assert all(c >= 0 for c in q_binomial(9, 4).coeffs)


@given(st.integers(0, 12), st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_q_binomial_symmetry_and_pascal(n, m):
    if m <= n:
        assert q_binomial(n, m) == q_binomial(n, n - m)
    if n >= 1:
        lhs = q_binomial(n, m)
        rhs = q_binomial(n - 1, m - 1) + q_binomial(n - 1, m).shifted(m)
        if 0 <= m <= n:
            assert lhs == rhs


def _below_diagonal_paths(n, k):
    def rec(x, y):
        if (x, y) == (n, k):
            return 1
        total = 0
        if x < n:
            total += rec(x + 1, y)
        if y < k and y + 1 <= x:
            total += rec(x, y + 1)
        return total

    return rec(0, 0) if k <= n else 0


def test_catalan_triangle_examples():
    assert catalan_triangle_q(5, 0) == QLaurent.one()
    assert catalan_triangle_q(2, 1) == QLaurent(0, (1, 1))
    assert catalan_triangle_q(8, 4).at_one() == 275
    assert catalan_triangle_q(-1, 0).is_zero
    assert catalan_triangle_q(3, 4).is_zero
    assert catalan_triangle_q(3, -2).is_zero


def test_catalan_triangle_counts_paths():
    for n in range(9):
        for k in range(n + 1):
            assert catalan_triangle_q(n, k).at_one() == _below_diagonal_paths(n, k)


def test_q_factorial_memo():
    assert q_factorial(0) == QLaurent.one()
    assert q_factorial(4) == q_int(1) * q_int(2) * q_int(3) * q_int(4)
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_exact_division():
    p = q_int(6) * q_int(4)
    assert p.divide_exact(q_int(4)) == q_int(6)
    with pytest.raises(ExactDivisionError):
        q_int(3).divide_exact(q_int(2))
    with pytest.raises(ZeroDivisionError):
        q_int(3).divide_exact(QLaurent.zero())


def test_halfint():
    h = HalfInt.of(Fraction(5, 2))
    assert not h.is_integer
    assert (h + 1).doubled == 7
    assert h - Fraction(1, 2) == 2
    assert HalfInt.of(3).as_int() == 3
    assert sorted([HalfInt(3), HalfInt(1), HalfInt(2)])[0] == HalfInt(1)
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_gamma_half_integer_examples():
    assert gamma_half_integer(1) == SqrtPiValue(Fraction(1), 0)
    assert gamma_half_integer(Fraction(1, 2)) == SqrtPiValue(Fraction(1), 1)
    assert gamma_half_integer(Fraction(5, 2)) == SqrtPiValue(Fraction(3, 4), 1)
    assert gamma_half_integer(4) == SqrtPiValue(Fraction(6), 0)
    assert gamma_half_integer(Fraction(-1, 2)) == SqrtPiValue(Fraction(-2), 1)
    with pytest.raises(ValueError):
        gamma_half_integer(0)
    with pytest.raises(ValueError):
        gamma_half_integer(-3)


def test_gamma_recurrence():
    for doubled in range(1, 21):
        t = HalfInt(doubled)
        lhs = gamma_half_integer(t + 1)
        rhs = SqrtPiValue(t.as_fraction()) * gamma_half_integer(t)
        assert lhs == rhs


def test_sqrt_pi_value_ops():
    a = SqrtPiValue(Fraction(3, 4), 1)
    b = SqrtPiValue(Fraction(2), 1)
    assert (a * b).sqrt_pi_power == 2
    assert a.ratio_to(b) == Fraction(3, 8)
    with pytest.raises(ValueError):
        a.ratio_to(SqrtPiValue(Fraction(1), 0))


def test_reciprocal_gamma_regularized():
    v, order = reciprocal_gamma_regularized(3)
    assert order == 0 and v == SqrtPiValue(Fraction(1, 2), 0)
    v, order = reciprocal_gamma_regularized(0)
    assert order == 1 and v == SqrtPiValue(Fraction(1), 0)
    v, order = reciprocal_gamma_regularized(-2)
    assert order == 1 and v == SqrtPiValue(Fraction(2), 0)
    v, order = reciprocal_gamma_regularized(Fraction(-1, 2))
    assert order == 0 and v.sqrt_pi_power == -1


def test_q_power_plus_one():
    assert q_power_plus_one(0) == QLaurent.of(2)
    assert q_power_plus_one(3) == QLaurent(0, (1, 0, 0, 1))


def qlaurents():
    return st.builds(
        QLaurent,
        st.integers(-4, 4),
        st.lists(st.integers(-9, 9), min_size=0, max_size=5))


@given(qlaurents(), qlaurents(), qlaurents())
@settings(max_examples=80, deadline=None)
def test_qlaurent_ring_axioms(a, b, c):
    assert a * b == b * a
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QLaurent.zero() == a
    assert a * QLaurent.one() == a
    assert (a - a).is_zero


@given(qlaurents(), qlaurents())
@settings(max_examples=60, deadline=None)
def test_exact_division_inverts_multiplication(a, b):
    if not b.is_zero:
        assert (a * b).divide_exact(b) == a


@given(qlaurents(), st.integers(1, 7).map(Fraction))
@settings(max_examples=40, deadline=None)
def test_evaluation_is_ring_homomorphism(a, q):
    b = q_int(3)
    assert (a * b)(q) == a(q) * b(q)
    assert (a + b)(q) == a(q) + b(q)
