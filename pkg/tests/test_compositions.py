from __future__ import annotations

from fractions import Fraction

from interpmac.compositions import (
    c_factors,
    composition_stats,
    compositions_upto,
    dominant,
    enumerate_compositions,
    n_prime,
    n_stat,
    orbit,
    partitions,
    poch,
    poch_q,
    spectral_vector,
    tau,
)


def test_spectral_vector_worked_example(sym):
    # [PAPER] <(2,4,2,0,1,2,1)> = (q^2t^5, q^4t^6, q^2t^4, 1, qt^2, q^2t^3, qt)
    q, t = sym.q, sym.t
    want = (q**2 * t**5, q**4 * t**6, q**2 * t**4, sym.one, q * t**2, q**2 * t**3, q * t)
    assert spectral_vector((2, 4, 2, 0, 1, 2, 1), sym) == want


def test_spectral_vector_of_zero_and_partition(sym):
    q, t = sym.q, sym.t
    assert spectral_vector((0, 0, 0), sym) == (t**2, t, sym.one)
    assert spectral_vector((2, 1), sym) == (q**2 * t, q)


def test_tau_values(sym):
    assert tau((0, 0), sym) == sym.one
    assert tau((1, 0), sym) == -sym.one
    assert tau((2,), sym) == sym.q
    assert n_stat((0, 0)) == n_prime((0, 0)) == 0


def test_poch_product_form(sym):
    b = sym.param("b")
    q, t = sym.q, sym.t
    assert poch(b, (0, 0), sym) == sym.one
    assert poch(b, (2, 1), sym) == (1 - b) * (1 - b * q) * (1 - b / t)
    assert poch(b, (0, 2), sym) == poch(b, (2, 0), sym)
    assert poch(b, (3,), sym) == poch_q(b, 3, sym)


def test_c_prime_one_variable(sym):
    for k in range(5):
        assert c_factors((k,), sym)[0] == poch_q(sym.q, k, sym)


def test_c_prime_from_leg_definition(sym):
    # the single cell of (1,0) has arm 0 and leg 0; that of (0,1) has leg 1
    q, t = sym.q, sym.t
    assert c_factors((0, 0, 0), sym) == (sym.one, sym.one, sym.one)
    assert c_factors((1, 0), sym)[0] == 1 - q
    assert c_factors((0, 1), sym)[0] == 1 - q * t
    cells = composition_stats((0, 1)).cells
    assert [(c.arm, c.leg) for c in cells] == [(0, 1)]


def test_c_prime_brute_force(sym):
    # [DERIVED] c'_u straight from the arm/leg definitions, all |u| <= 3, n = 3
    q, t = sym.q, sym.t
    for u in compositions_upto(3, 3):
        want = sym.one
        for i, ui in enumerate(u):
            for j in range(1, ui + 1):
                arm = ui - j
                leg = sum(1 for k in range(i + 1, 3) if j <= u[k] <= ui)
                leg += sum(1 for k in range(i) if j <= u[k] + 1 <= ui)
                want *= 1 - q ** (arm + 1) * t**leg
        assert c_factors(u, sym)[0] == want


def test_enumeration():
    assert enumerate_compositions(2, 1) == ((0, 1), (1, 0))
    assert enumerate_compositions(1, 3) == ((3,),)
    assert enumerate_compositions(3, 0) == ((0, 0, 0),)
    assert len(compositions_upto(3, 4)) == 35
    assert partitions(3, 3) == ((1, 1, 1), (2, 1, 0), (3, 0, 0))
    assert orbit((1, 0)) == ((0, 1), (1, 0))
    assert dominant((0, 2, 1)) == (2, 1, 0)


def test_tau_specialized_consistent(sym, spec_field):
    for u in compositions_upto(3, 3):
        s = sym.evaluate_symbolic(tau(u, sym), {"q": Fraction(2, 11), "t": Fraction(3, 13)})
        assert s == tau(u, spec_field)
