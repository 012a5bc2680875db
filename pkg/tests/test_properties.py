"""Hypothesis property tests over a fixed specialized field."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from hypothesis import given, settings, strategies as st

from interpmac.binomial import ConnectionTable
from interpmac.compositions import poch
from interpmac.field import CoeffField
from interpmac.hecke import apply_Ti, apply_Ti_inv
from interpmac.laurent import LaurentPoly, evaluate
from interpmac.macdonald import MacdonaldFamily
from interpmac.series import TruncatedSeries

F = CoeffField.specialized(Fraction(2, 11), Fraction(3, 13))
_TABLE = {}

small = st.integers(-5, 5)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=20)


def _poly(n, max_deg=3, laurent=False):
    lo = -1 if laurent else 0
    exps = st.lists(st.integers(lo, max_deg), min_size=n, max_size=n).map(tuple)
    return st.dictionaries(exps, small.filter(bool), min_size=1, max_size=5).map(
        lambda d: LaurentPoly(n, {e: F(c) for e, c in d.items()})
    )


def _table(n, D):
    key = (n, D)
    if key not in _TABLE:
        _TABLE[key] = ConnectionTable(MacdonaldFamily(F, n), D)
    return _TABLE[key]


@settings(max_examples=40, deadline=None)
@given(_poly(3), st.integers(1, 2))
def test_hecke_quadratic_relation(p, i):
    Tp = apply_Ti(p, i, F)
    # (T - t)(T + 1) = 0
    lhs = apply_Ti(Tp, i, F) + Tp - Tp.scale(F.t) - p.scale(F.t)
    assert lhs.is_zero()
    assert apply_Ti_inv(Tp, i, F) == p


@settings(max_examples=30, deadline=None)
@given(_poly(3))
def test_hecke_braid_relation(p):
    T = lambda r, i: apply_Ti(r, i, F)  # noqa: E731
    assert T(T(T(p, 1), 2), 1) == T(T(T(p, 2), 1), 2)


@settings(max_examples=30, deadline=None)
@given(_poly(4))
def test_hecke_far_generators_commute(p):
    assert apply_Ti(apply_Ti(p, 1, F), 3, F) == apply_Ti(apply_Ti(p, 3, F), 1, F)


@settings(max_examples=60, deadline=None)
@given(_poly(2, laurent=True), _poly(2, laurent=True), _poly(2, laurent=True))
def test_laurent_ring_axioms(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(_poly(2, laurent=True), _poly(2, laurent=True), rationals.filter(bool), rationals.filter(bool))
def test_evaluation_is_a_ring_map(p, r, x, y):
    pt = (F(x), F(y))
    assert evaluate(p * r, pt, F.one) == evaluate(p, pt, F.one) * evaluate(r, pt, F.one)
    assert evaluate(p + r, pt, F.one) == evaluate(p, pt, F.one) + evaluate(r, pt, F.one)


@settings(max_examples=40, deadline=None)
@given(_poly(2, laurent=True))
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json(F), F) == p


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([(2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)]),
    st.sampled_from([(0, 0), (1, 0), (0, 1)]),
    rationals.filter(bool),
    rationals.filter(bool),
    rationals.filter(bool),
)
def test_connection_coefficients_are_homogeneous(u, v, a, b, lam):
    tab = _table(2, 3)
    a, b, lam = F(a), F(b), F(lam)
    k = sum(u) - sum(v)
    assert tab.value(u, v, lam * a, lam * b) == lam**k * tab.value(u, v, a, b)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), rationals)
def test_poch_depends_on_the_sorted_label(u, b):
    want = poch(F(b), tuple(sorted(u, reverse=True)), F)
    for perm in set(permutations(u)):
        assert poch(F(b), perm, F) == want


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
def test_series_product_is_cauchy(x, y):
    X = TruncatedSeries([F(c) for c in x], 3)
    Y = TruncatedSeries([F(c) for c in y], 3)
    Z = X * Y
    for k in range(4):
        assert Z[k] == sum((F(x[i]) * F(y[k - i]) for i in range(k + 1)), F.zero)
    assert X * Y == Y * X
