from __future__ import annotations

import pytest

from interpmac.compositions import compositions_upto, n_prime, poch, poch_q, tau
from interpmac.hecke import apply_Xi, apply_Yi_inv
from interpmac.laurent import LaurentPoly, evaluate
from interpmac.macdonald import is_symmetric, normalize

from conftest import seeded_field


def _x(n, i, F):
    return LaurentPoly.variable(n, i, F.one)


def _c(n, v):
    return LaurentPoly.constant(n, v)


def test_one_variable_M3(sym, family_cache):
    fam = family_cache(sym, 1)
    x = _x(1, 1, sym)
    q = sym.q
    want = (x - _c(1, sym.one)) * (x - _c(1, q)) * (x - _c(1, q**2))
    assert fam.M((3,)) == want.scale(q**-3)


def test_two_variable_examples(sym, family_cache):
    fam = family_cache(sym, 2)
    q, t = sym.q, sym.t
    x1, x2 = _x(2, 1, sym), _x(2, 2, sym)
    assert fam.M((0, 1)) == x2 - _c(2, sym.one)
    A = (1 - t) / (1 - q * t)
    B = (q * t**2 - 1) / (1 - q * t)
    assert fam.M((1, 0)) == x1 + x2.scale(A) + _c(2, B)
    assert fam.E((1, 0)) == x1 + x2.scale(A)
    assert fam.E((0, 1)) == x2
    for n in (1, 2, 3):
        assert family_cache(sym, n).M((0,) * n) == _c(n, sym.one)


def test_recursion_matches_oracle(sym, family_cache):
    fam = family_cache(sym, 2)
    for u in compositions_upto(2, 3):
        assert fam.M(u) == fam.M_oracle(u)


def test_vanishing_and_leading_coefficient(family_cache):
    F = seeded_field(11, 3, 3)
    fam = family_cache(F, 3)
    for u in compositions_upto(3, 3):
        Mu = fam.M(u)
        assert Mu.coeff(u, F.zero) == F.qt(-n_prime(u), 0)
        for v in compositions_upto(3, sum(u)):
            if v != u:
                assert evaluate(Mu, fam.spec(v), F.one) == F.zero


def test_eigen_equations(family_cache):
    F = seeded_field(12, 3, 2)
    fam = family_cache(F, 3)
    for u in compositions_upto(3, 2):
        s = fam.spec(u)
        for i in range(1, 4):
            assert apply_Xi(fam.M(u), i, F) == fam.M(u).scale(1 / s[i - 1])
            assert apply_Yi_inv(fam.E(u), i, F) == fam.E(u).scale(1 / s[i - 1])


def test_E_by_eigenvectors(family_cache):
    F = seeded_field(13, 2, 3)
    fam = family_cache(F, 2)
    for u in compositions_upto(2, 3):
        assert fam.E(u) == fam.E_eigen(u)


def test_one_variable_closed_forms(sym, family_cache):
    fam = family_cache(sym, 1)
    x = _x(1, 1, sym)
    for u in range(6):
        prod = _c(1, sym.one)
        for i in range(u):
            prod = prod * (x - _c(1, sym.qt(i, 0)))
        qq = poch_q(sym.q, u, sym)
        assert fam.Mhat((u,)) == prod.scale(1 / qq)
        assert fam.Ehat((u,)) == (x**u).scale(1 / qq)


def test_mprime_one_variable(sym, family_cache):
    fam = family_cache(sym, 1)
    x = _x(1, 1, sym)
    q = sym.q
    want = (x - _c(1, sym.one)) * (x - _c(1, 1 / q))
    assert fam.Mprime_hat((2,)) == want.scale(1 / poch_q(q, 2, sym))
    assert fam.Mprime_hat((0,)) == _c(1, sym.one)


def test_mprime_principal(sym, family_cache):
    fam = family_cache(sym, 2)
    a = sym.param("a")
    for u in compositions_upto(2, 2):
        point = tuple(a * s for s in fam.spec((0, 0)))
        lhs = evaluate(fam.Mprime_hat(u), point, sym.one)
        assert lhs == poch(a, u, sym) * fam.Ehat_at_zero(u) / tau(u, sym)


def test_diagonal_and_zero_values(family_cache):
    F = seeded_field(14, 3, 3)
    fam = family_cache(F, 3)
    zero = (0, 0, 0)
    for u in compositions_upto(3, 3):
        assert fam.Mhat_at_spec(u, u) == tau(u, F) * F.qt(0, 2 * sum(u))
        assert evaluate(fam.Mhat(u), (F.zero,) * 3, F.one) == tau(u, F) * fam.Ehat_at_zero(u)
        assert fam.Ehat_at_zero(u) == evaluate(fam.Ehat(u), fam.spec(zero), F.one)


def test_symmetrizations(sym, family_cache):
    fam = family_cache(sym, 2)
    assert fam.P_hat((1, 0)) == fam.Ehat((1, 0)) + fam.Ehat((0, 1))
    for lam in [(0, 0), (1, 0), (2, 0), (1, 1), (2, 1)]:
        assert is_symmetric(fam.P_hat(lam))
        assert is_symmetric(fam.MS_hat(lam))
        assert is_symmetric(fam.MSprime_hat(lam))
    assert fam.P_hat((0, 0)) == fam.MS_hat((0, 0)) == _c(2, sym.one)
    with pytest.raises(ValueError):
        fam.P_hat((0, 1))


def test_records_and_normalize(sym, family_cache):
    fam = family_cache(sym, 2)
    raw = fam.record("M", (1, 0), hatted=False)
    hat = normalize(raw, "hatted", fam)
    assert hat.poly == fam.Mhat((1, 0))
    assert normalize(hat, "raw", fam).poly == raw.poly
    assert raw.name == "M_n2_1,0"
    with pytest.raises(ValueError):
        fam.record("Q", (1, 0))
    with pytest.raises(ValueError):
        fam.M((1,))
