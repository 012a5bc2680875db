from __future__ import annotations

import pytest
from gmpy2 import mpq

from interpmac.laurent import (
    LaurentPoly,
    LinearSystem,
    SingularSystemError,
    evaluate,
    monomial_basis,
    solve_exact,
    top_homogeneous,
)


def _x(n, i, F):
    return LaurentPoly.variable(n, i, F.one)


def test_arithmetic_basics(sym):
    x1, x2 = _x(2, 1, sym), _x(2, 2, sym)
    one = LaurentPoly.constant(2, sym.one)
    assert (x1 + x2) * one == x1 + x2
    assert (x2 - one) - (x2 - one) == LaurentPoly(2)
    assert ((x2 - one) - (x2 - one)).is_zero()


def test_expansion(sym):
    x = _x(1, 1, sym)
    q = sym.q
    lhs = (x - LaurentPoly.constant(1, sym.one)) * (x - LaurentPoly.constant(1, q))
    want = x * x - x.scale(1 + q) + LaurentPoly.constant(1, q)
    assert lhs == want


def test_evaluate(sym):
    x2 = _x(2, 2, sym)
    p = x2 - LaurentPoly.constant(2, sym.one)
    assert evaluate(p, (sym.t, sym.one)) == sym.zero
    assert evaluate(LaurentPoly.constant(2, sym.one), (sym.q, sym.t)) == sym.one
    assert evaluate(_x(2, 1, sym), (sym.t, sym.one)) == sym.t


def test_top_homogeneous(sym):
    x1, x2 = _x(2, 1, sym), _x(2, 2, sym)
    one = LaurentPoly.constant(2, sym.one)
    assert top_homogeneous(x2 - one) == x2
    assert top_homogeneous(x1 * x1 + x1 * x2 + x1) == x1 * x1 + x1 * x2
    c = LaurentPoly.constant(2, sym.q)
    assert top_homogeneous(c) == c


def test_negative_exponents_and_swap(spec_field):
    p = LaurentPoly(2, {(-1, 2): mpq(3), (0, 0): mpq(1)})
    assert not p.is_polynomial()
    assert p.swap(1) == LaurentPoly(2, {(2, -1): mpq(3), (0, 0): mpq(1)})
    assert p.shift((1, -2)) == LaurentPoly(2, {(0, 0): mpq(3), (1, -2): mpq(1)})


def test_json_roundtrip(sym):
    x1, x2 = _x(2, 1, sym), _x(2, 2, sym)
    p = x1.scale(sym.q / (1 - sym.t)) - x2 * x2
    assert LaurentPoly.from_json(p.to_json(sym), sym) == p


def test_text_order(sym):
    x1, x2 = _x(2, 1, sym), _x(2, 2, sym)
    one = LaurentPoly.constant(2, sym.one)
    assert (x2 - one).to_text(sym) == "x2 - 1"
    assert (x1 + x2 * x2).to_text(sym) == "x2^2 + x1"


def test_identity_system(spec_field):
    I = [[mpq(1), mpq(0)], [mpq(0), mpq(1)]]
    assert solve_exact(LinearSystem(I, [mpq(3), mpq(-2)], mpq(0))) == [mpq(3), mpq(-2)]


def test_m10_system_hand_elimination(sym):
    # [DERIVED] M_(1,0) = x1 + A x2 + B vanishing at (t,1) and (1,qt):
    # A = (1-t)/(1-qt), B = (qt^2-1)/(1-qt)
    q, t = sym.q, sym.t
    A = [[sym.one, sym.one], [q * t, sym.one]]
    rhs = [-t, -sym.one]
    for ff in (False, True):
        sol = solve_exact(LinearSystem(A, rhs, sym.zero), fraction_free=ff)
        assert sol == [(1 - t) / (1 - q * t), (q * t**2 - 1) / (1 - q * t)]


def test_inconsistent_system():
    A = [[mpq(1)], [mpq(1)]]
    with pytest.raises(SingularSystemError):
        solve_exact(LinearSystem(A, [mpq(1), mpq(2)], mpq(0)))
    with pytest.raises(SingularSystemError):
        solve_exact(LinearSystem([[mpq(1), mpq(1)]], [mpq(1)], mpq(0)))


def test_bareiss_matches_gauss(spec_field):
    import random

    rng = random.Random(3)
    for _ in range(10):
        A = [[mpq(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)] for _ in range(4)]
        b = [mpq(rng.randint(-5, 5)) for _ in range(4)]
        try:
            x = solve_exact(LinearSystem(A, b, mpq(0)))
        except SingularSystemError:
            continue
        assert solve_exact(LinearSystem(A, b, mpq(0)), fraction_free=True) == x


def test_monomial_basis_size():
    assert len(monomial_basis(3, 2)) == 10
