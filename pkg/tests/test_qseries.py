from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mobilehook.qseries import (ONE, ZERO, IntPoly, NonExactDivision, add, eval_at_one, exact_div,
                                mul, one_minus_q_pow, pochhammer, q_binomial, q_factorial, q_int,
                                series_inverse_pochhammer)

polys = st.lists(st.integers(-50, 50), max_size=31).map(IntPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*c):
    return IntPoly(c)


def test_canonical_form_strips_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert ZERO.degree == -1


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.coeffs = (2,)


@pytest.mark.parametrize("a, b, expected", [
    (P(1, 1), P(0, 1, 1), P(1, 2, 1)),
    (P(3, 0, 4), ZERO, P(3, 0, 4)),
    (P(1, -1), P(0, 1), P(1)),
])
def test_add(a, b, expected):
    assert add(a, b) == expected == a + b


@pytest.mark.parametrize("a, b, expected", [
    (P(1, 1), P(1, -1), P(1, 0, -1)),
    (P(5, 0, 7), ONE, P(5, 0, 7)),
    (P(1, 1, 1), P(1, 1), P(1, 2, 2, 1)),
])
def test_mul(a, b, expected):
    assert mul(a, b) == expected == a * b


@pytest.mark.parametrize("a, b, expected", [
    (one_minus_q_pow(4), one_minus_q_pow(1), P(1, 1, 1, 1)),
    (P(2, 3, 4), ONE, P(2, 3, 4)),
    (mul(one_minus_q_pow(6), one_minus_q_pow(4)), mul(one_minus_q_pow(2), one_minus_q_pow(2)),
     mul(P(1, 0, 1, 0, 1), P(1, 0, 1))),
])
def test_exact_div(a, b, expected):
    assert exact_div(a, b) == expected


def test_exact_div_rejects_remainder():
    with pytest.raises(NonExactDivision):
        exact_div(P(1, 0, 1), P(1, 1))
    with pytest.raises(NonExactDivision):
        exact_div(P(1, 1), P(0, 2))
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, ZERO)


def test_q_integers():
    assert q_int(3) == P(1, 1, 1)
    assert q_int(0) == ZERO
    assert q_binomial(7, 0) == ONE
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert q_factorial(3) == P(1, 2, 2, 1)
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(3, -1)


def test_q_binomial_matches_inversion_count():
    # weight of a k-subset of {1..n}: inversions of its 0/1 word
    from itertools import combinations
    n, k = 6, 3
    hist = [0] * (k * (n - k) + 1)
    for S in combinations(range(n), k):
        word = [1 if i in S else 0 for i in range(n)]
        hist[sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])] += 1
    assert q_binomial(n, k) == IntPoly(hist)


def test_eval_at_one():
    assert eval_at_one(P(1, 1, 1)) == 3
    assert eval_at_one(ZERO) == 0
    assert P(1, 2, 3)(2) == 1 + 4 + 12


def test_serialization_round_trip():
    p = IntPoly([3, -(10 ** 30), 0, 7])
    assert p.to_json() == ["3", str(-(10 ** 30)), "0", "7"]
    assert IntPoly.from_json(p.to_json()) == p


def test_str():
    assert str(P(1, 0, 2, 1)) == "q^3 + 2q^2 + 1"


@given(polys, polys, polys)
@settings(max_examples=150)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a


@given(polys, nonzero_polys)
@settings(max_examples=150)
def test_exact_div_inverts_mul(a, b):
    assert exact_div(a * b, b) == a


@pytest.mark.parametrize("n", range(1, 13))
def test_q_binomial_recurrence_and_q_equals_one(n):
    for k in range(1, n + 1):
        rhs = q_binomial(n - 1, k) if k <= n - 1 else ZERO
        rhs = rhs + q_binomial(n - 1, k - 1).shift(n - k)
        assert q_binomial(n, k) == rhs
    for k in range(n + 1):
        assert eval_at_one(q_binomial(n, k)) == comb(n, k)
        assert all(c >= 0 for c in q_binomial(n, k).coeffs)


def test_series_inverse_pochhammer():
    for n in range(1, 6):
        prod = mul(pochhammer(n), series_inverse_pochhammer(n, 20)).truncate(20)
        assert prod == ONE
