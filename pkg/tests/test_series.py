from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from gmpy2 import mpq

from interpmac.compositions import poch_q
from interpmac.series import (
    TruncatedSeries,
    poch_infinite,
    product_ratio,
    sigma_q_series,
    sigma_series,
)


def _e(k, letters, one):
    out = one - one
    for combo in combinations(letters, k):
        term = one
        for x in combo:
            term = term * x
        out = out + term
    return out


def test_sigma_single_letter_difference(sym):
    a, b = sym.param("a"), sym.param("b")
    S = sigma_series([a], [b], 6, sym.one)
    assert S[0] == sym.one
    for k in range(1, 7):
        assert S[k] == a ** (k - 1) * (a - b)


def test_sigma_negative_alphabet_is_signed_elementary(sym):
    # [DERIVED] prod (1 - z y) = sum (-z)^k e_k(Y), brute-force e_k
    Y = [sym.param(x) for x in "abc"]
    S = sigma_series([], Y, 5, sym.one)
    for k in range(6):
        assert S[k] == (-1) ** k * _e(k, Y, sym.one)


def test_sigma_cancels_equal_alphabets(sym):
    a, b = sym.param("a"), sym.param("b")
    S = sigma_series([a, b], [b, a], 5, sym.one)
    assert S == TruncatedSeries([sym.one] + [sym.zero] * 5, 5)
    Sq = sigma_q_series([a], [a], 5, sym)
    assert Sq == TruncatedSeries([sym.one] + [sym.zero] * 5, 5)


def test_sigma_q_euler(sym):
    # [DERIVED] Euler: 1/(z)_inf = sum z^k/(q)_k
    S = sigma_q_series([sym.one], [], 6, sym)
    for k in range(7):
        assert S[k] == sym.one / poch_q(sym.q, k, sym)


def test_sigma_q_binomial_theorem(sym):
    # [DERIVED] q-binomial theorem: (bz)_inf / (az)_inf = sum_k (b/a)_k a^k z^k / (q)_k
    a, b = sym.param("a"), sym.param("b")
    S = sigma_q_series([a], [b], 5, sym)
    for k in range(6):
        assert S[k] == poch_q(b / a, k, sym) * a**k / poch_q(sym.q, k, sym)


def test_sigma_specialized_matches_symbolic(sym, spec_field):
    S = sigma_q_series([sym.param("a")], [sym.param("b")], 4, sym)
    T = sigma_q_series([spec_field(Fraction(1, 3))], [spec_field(Fraction(-2, 7))], 4, spec_field)
    values = {"q": spec_field.q, "t": spec_field.t, "a": mpq(1, 3), "b": mpq(-2, 7)}
    for k in range(5):
        assert sym.evaluate_symbolic(S[k], values) == T[k]


def test_series_index_guard(sym):
    S = sigma_series([], [], 2, sym.one)
    with pytest.raises(IndexError):
        S[3]
    with pytest.raises(ValueError):
        sigma_series([], [], -1, sym.one)
    with pytest.raises(ValueError):
        TruncatedSeries([sym.one], 2)


def test_poch_infinite_trivial():
    p = poch_infinite(0, 5, Fraction(1, 10))
    assert p.value == 1 and p.log_bound == 0 and p.rel_bound == 0
    with pytest.raises(ValueError):
        poch_infinite(Fraction(1, 2), 5, 1)


def test_poch_infinite_bounds_shrink_and_hold():
    b, q = Fraction(-3, 4), Fraction(1, 7)
    exact = poch_infinite(b, 200, q).value
    prev = None
    for depth in range(1, 12):
        p = poch_infinite(b, depth, q)
        err = abs(Fraction(exact / p.value) - 1)
        assert err <= p.rel_bound
        if prev is not None:
            assert p.rel_bound < prev
        prev = p.rel_bound


def test_poch_infinite_finite_quotient(spec_field):
    # (b)_inf / (b q^k)_inf = (b)_k
    q = spec_field.q
    b = mpq(5, 9)
    for k in range(6):
        value, rel = product_ratio([b], [b * q**k], 40, q)
        want = poch_q(b, k, spec_field)
        assert abs(Fraction(value / want) - 1) <= rel + Fraction(1, 10**30)


def test_product_ratio_rejects_vanishing_denominator():
    with pytest.raises(ZeroDivisionError):
        product_ratio([], [Fraction(10)], 4, Fraction(1, 10))
