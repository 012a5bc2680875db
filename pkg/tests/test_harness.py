from __future__ import annotations

import random
from fractions import Fraction

import pytest

from interpmac.compositions import poch_q
from interpmac.harness import one_variable as ov
from interpmac.harness.catalog import BY_ID, CATALOG, EXACT_FINITE, NUMERIC, IdentityDescriptor, lookup
from interpmac.harness.context import Context, Session
from interpmac.harness.runner import (
    MAX_REDRAWS,
    RedrawLimitError,
    _run_trial,
    plan,
    trial_seed,
    verify,
    verify_all,
)
from interpmac.laurent import evaluate
from interpmac.series import sigma_q_series

from conftest import seeded_field


def _ctx(F, n, D, seed=0, numeric=False):
    return Context(Session(), F, n, D, random.Random(seed), numeric=numeric)


def test_catalog_is_complete_and_unique():
    ids = [d.id for d in CATALOG]
    assert len(ids) == len(set(ids)) == 41
    assert {"inv", "qps", "sears2", "gauss-gln", "ktw", "euler-trafo-sln", "n1-regression"} <= set(ids)
    with pytest.raises(KeyError, match="unknown identity"):
        lookup("nope")


@pytest.mark.parametrize("identity", ["inv", "qps", "sears", "dual2"])
def test_exact_identities_pass(identity):
    rep = verify(identity, 2, 3, 3, seed=4)
    assert rep.ok, rep.failures
    assert rep.residual == "0"
    assert len(rep.trials) == 3 and rep.checks > 0


def test_symbolic_exact_identity():
    rep = verify("qcv1", 2, 2, symbolic=True)
    assert rep.ok and rep.trials[0]["qt"] == "symbolic"


def test_numeric_identity_within_tolerance():
    rep = verify("gauss-gln", 2, 6, 2, seed=1)
    assert rep.ok, rep.failures
    assert float(rep.residual) < 1e-8
    assert rep.tail is not None and float(rep.tail) < 1e-8
    for trial in rep.trials:
        q, t = (Fraction(x) for x in trial["qt"].split(","))
        assert Fraction(1, 13) <= q <= Fraction(1, 10)
        assert Fraction(2, 3) <= t <= Fraction(3, 4)


def test_bounds_and_modes_are_checked():
    with pytest.raises(ValueError):
        verify("inv", 5, 2)
    with pytest.raises(ValueError):
        verify("inv", 2, -1)
    with pytest.raises(ValueError):
        verify("gauss-gln", 2, 4, symbolic=True)
    with pytest.raises(ValueError):
        verify("n1-regression", 2, 2)


def test_reports_are_deterministic():
    a = verify("erb", 2, 3, 2, seed=7).to_json()
    b = verify("erb", 2, 3, 2, seed=7).to_json()
    assert a == b
    assert '"ms"' not in a
    assert '"ms"' in verify("erb", 2, 2, 1, seed=7).to_json(timing=True)
    assert trial_seed(0, "inv", 2, 3, 0, 0) == trial_seed(0, "inv", 2, 3, 0, 0)
    assert trial_seed(0, "inv", 2, 3, 0, 0) != trial_seed(0, "inv", 2, 3, 1, 0)


def test_degenerate_draws_are_redrawn():
    calls = []

    def flaky(ctx):
        calls.append(ctx.F.fingerprint)
        if len(calls) < 3:
            raise ZeroDivisionError("degenerate")
        ctx.equal(1, 1, "ok")

    desc = IdentityDescriptor("flaky", "test", EXACT_FINITE, flaky)
    ctx, s = _run_trial(desc, Session(), 2, 2, 0, 0, False, Fraction(1, 10**8))
    assert len(calls) == 3 and ctx.out.ok
    assert s == trial_seed(0, "flaky", 2, 2, 0, 2)

    def hopeless(ctx):
        raise ZeroDivisionError("always")

    desc = IdentityDescriptor("hopeless", "test", EXACT_FINITE, hopeless)
    with pytest.raises(RedrawLimitError):
        _run_trial(desc, Session(), 2, 2, 0, 0, False, Fraction(1, 10**8))
    assert MAX_REDRAWS >= 10


def test_failures_are_reported():
    def wrong(ctx):
        ctx.equal(ctx.F.one, ctx.F.zero, "one is not zero")

    desc = IdentityDescriptor("wrong", "test", EXACT_FINITE, wrong)
    ctx, _ = _run_trial(desc, Session(), 2, 2, 0, 0, False, Fraction(1, 10**8))
    assert not ctx.out.ok and ctx.out.failures == ["one is not zero"]


def test_plan_levels():
    smoke = plan("smoke")
    assert len(smoke) == len(CATALOG)
    assert all(n <= d.max_n and D <= d.max_D for d, n, D in plan("desk"))
    assert {(2, 8), (3, 6)} <= {(n, D) for d, n, D in plan("desk") if d.mode == NUMERIC}
    with pytest.raises(ValueError):
        plan("overnight")


def test_smoke_run_passes():
    reports = verify_all("smoke", seed=3)
    assert [r.id for r in reports] == list(BY_ID)
    assert [r.id for r in reports if not r.ok] == []


def test_distinct_parameters():
    ctx = _ctx(seeded_field(0, 2, 3), 2, 3)
    vals = [ctx.param(s) for s in "abcde"]
    assert len(set(vals)) == 5
    assert all(ctx.admissible(v) for v in vals)


# one-variable regression ------------------------------------------------------


def test_n1_regression_passes():
    rep = verify("n1-regression", 1, 6, 2, seed=5)
    assert rep.ok, rep.failures
    with pytest.raises(ValueError):
        ov.check_n1_regression(_ctx(seeded_field(0, 2, 2), 2, 2))


def test_quotient_pairs_infinite_factors(spec_field):
    ctx = _ctx(spec_field, 1, 3)
    F = spec_field
    b = F(Fraction(3, 7))
    # [DERIVED] (b q^2)_inf / (b)_inf = 1 / (b)_2
    got = ov.quotient(ctx, ov.Product(F.one, [b * F.qt(2, 0)], [b]), ov.Product(F.one))
    assert got == F.one / poch_q(b, 2, F)
    # (b)_inf / (b q^3)_inf = (b)_3
    got = ov.quotient(ctx, ov.Product(F.one, [b], [b * F.qt(3, 0)]), ov.Product(F.one))
    assert got == poch_q(b, 3, F)
    with pytest.raises(ValueError, match="unpaired"):
        ov.quotient(ctx, ov.Product(F.one, [b], [F(Fraction(2, 9))]), ov.Product(F.one))


def test_classical_heine2_needs_x_in_the_prefactor():
    F = seeded_field(11, 1, 5)
    ctx = _ctx(F, 1, 5, seed=11)
    a, b, c, x = (ctx.param(s) for s in "abcx")
    N = 5

    def prod(A, B):
        S = sigma_q_series(A, B, N, F)
        return [S[k] for k in range(N + 1)]

    lhs = ov._scaled_phi(ctx, [a, b], [c], [], x, N)
    inner = ov._scaled_phi(ctx, [c / a, c / b], [c], [], a * b * x / c, N)
    assert lhs == ov._mul(ctx, prod([x], [a * b * x / c]), inner)
    # (c)_inf in place of (x)_inf is constant in z; even with that constant
    # normalized away the z-dependence is wrong
    printed = ov._mul(ctx, prod([], [a * b * x / c]), inner)
    assert printed[0] == lhs[0] == F.one
    assert lhs != printed


def test_ktw1_literal_substitution_fails_beyond_v0():
    F = seeded_field(2, 1, 4)
    ctx = _ctx(F, 1, 4, seed=2)
    fam = ctx.fam
    D = 4
    a, b, c, d = (ctx.param(s) for s in "abcd")
    e = a * b * c / d
    x = ctx.point("x")[0]
    M = {u: evaluate(fam.Mhat((u,)), (x,), F.one) for u in range(D + 1)}

    def terms(v, A, B, C, Dd, Ee):
        us = range(v, D + 1)
        TL = [poch_q(b, u, F) / (poch_q(d, u, F) * poch_q(e, u, F)) * ctx.E((u,), (v,), a, a * c) * M[u] for u in us]
        Ff = Dd * Ee / (B * C)
        tL = [ov.phi_term(ctx, [A, B, C], [Dd, Ee], Ff / A, j) for j in range(D - v + 1)]
        return TL, tL

    for v in (0, 1):
        qv = F.qt(v, 0)
        TL, tL = terms(v, qv / x, b * qv, c, d * qv, e * qv)
        assert ov._ratio(TL, tL) is not None
    TL, tL = terms(1, 1 / x, b * F.q, c, d * F.q, e * F.q)
    assert ov._ratio(TL, tL) is None
