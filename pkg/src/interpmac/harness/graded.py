"""Exact-graded identity checks: infinite sums compared one degree shell at a time.

Each identity is a formal power series in a grading variable (the total
x-degree, or a scalar a).  Shell d of the left side is a finite sum, and
shell d of the right side is a coefficient of a truncated plethystic product
from :mod:`interpmac.series`; the two are compared as polynomials in x.
"""

from __future__ import annotations

from ..compositions import partitions, poch_cell_factors
from ..laurent import LaurentPoly
from ..series import sigma_q_series, sigma_series
from .context import Context


def _scaled_vars(ctx: Context, c) -> list[LaurentPoly]:
    """The alphabet c*X = c x_1 + ... + c x_n."""
    return [LaurentPoly.variable(ctx.n, i, c) for i in range(1, ctx.n + 1)]


def _zero(ctx: Context) -> LaurentPoly:
    return LaurentPoly(ctx.n)


def _size(u) -> int:
    return sum(u)


def _product_coeffs(ctx: Context, A, B, order: int) -> list[LaurentPoly]:
    """Shells 0..order of prod (b)_inf / prod (a)_inf as polynomials in x."""
    one = LaurentPoly.constant(ctx.n, ctx.F.one)
    S = sigma_q_series(A, B, order, ctx.F, one)
    return [S[k] if isinstance(S[k], LaurentPoly) else one.scale(S[k]) for k in range(order + 1)]


def _times(series: list[LaurentPoly], shells: dict[int, LaurentPoly], d: int, zero: LaurentPoly):
    """Shell d of (sum_k series[k]) * (sum_j shells[j])."""
    out = zero
    for j, p in shells.items():
        if 0 <= d - j < len(series):
            out = out + series[d - j] * p
    return out


# gl_n q-binomial theorems ------------------------------------------------------------


def check_qbt_gln_i(ctx: Context) -> None:
    """sum_{|u|=k+|v|} [u v] Mhat_u = Mhat_v S_k[(X - V)/(1 - q)] for every k."""
    fam = ctx.fam
    X = ctx.xvars()
    for v in ctx.comps():
        V = [ctx.const(s) for s in fam.spec(v)]
        kmax = ctx.D - _size(v)
        S = sigma_q_series(X, V, kmax, ctx.F)
        for k in range(kmax + 1):
            lhs = _zero(ctx)
            for u in ctx.shell(k + _size(v)):
                b = ctx.qb(u, v)
                if b:
                    lhs = lhs + fam.Mhat(u).scale(b)
            ctx.equal(lhs, fam.Mhat(v) * S[k], f"v={v} k={k}")


def check_qbt_gln_ii(ctx: Context) -> None:
    """sum_{|u|=k} Mhat_u = S_k[(X - <0>)/(1 - q)], the v = 0 case."""
    fam = ctx.fam
    F = ctx.F
    X = ctx.xvars()
    zero_spec = [ctx.const(F.qt(0, ctx.n - i)) for i in range(1, ctx.n + 1)]
    S = sigma_q_series(X, zero_spec, ctx.D, F)
    for k in range(ctx.D + 1):
        lhs = _zero(ctx)
        for u in ctx.shell(k):
            lhs = lhs + fam.Mhat(u)
        ctx.equal(lhs, S[k], f"k={k}")


def check_phi11(ctx: Context) -> None:
    """The inverted binomial theorem, expanded in powers of a.

    Left: tau_u a^{|u|} [u v]_{1/q,1/t} Mhat_u / (a t^{n-1})_u, where the
    denominator is expanded as sigma_a over the cell letters t^{n-1} q^i t^j.
    Right: tau_v a^{|v|} Mhat_v prod (a x_i)_inf / (a t^{n-i})_inf.
    """
    fam = ctx.fam
    F = ctx.F
    n = ctx.n
    D = ctx.D
    X = ctx.xvars()
    ts = [ctx.const(F.qt(0, n - i)) for i in range(1, n + 1)]
    right = sigma_q_series(ts, X, D, F)
    for v in ctx.comps():
        lhs = [_zero(ctx) for _ in range(D + 1)]
        for u in ctx.comps():
            b = ctx.qbi(u, v)
            if not b:
                continue
            letters = [F.qt(i, n - 1 + j) for i, j in poch_cell_factors(u)]
            inv = sigma_series(letters, [], D - _size(u), F.one, var="a")
            base = fam.Mhat(u).scale(ctx.tau(u) * b)
            for m in range(D - _size(u) + 1):
                if inv[m]:
                    lhs[_size(u) + m] = lhs[_size(u) + m] + base.scale(inv[m])
        head = fam.Mhat(v).scale(ctx.tau(v))
        for d in range(_size(v), D + 1):
            ctx.equal(lhs[d], head * right[d - _size(v)], f"v={v} a^{d}")
        for d in range(_size(v)):
            ctx.equal(lhs[d], _zero(ctx), f"v={v} a^{d} vanishes")


# sl_n sums graded by x-degree -------------------------------------------------------


def check_euler_sln(ctx: Context) -> None:
    """sum_{|u|=d} [u v] Ehat_u = Ehat_v S_{d-|v|}[X/(1 - q)]."""
    fam = ctx.fam
    coeffs = _product_coeffs(ctx, ctx.xvars(), [], ctx.D)
    for v in ctx.comps():
        for d in range(_size(v), ctx.D + 1):
            lhs = _zero(ctx)
            for u in ctx.shell(d):
                b = ctx.qb(u, v)
                if b:
                    lhs = lhs + fam.Ehat(u).scale(b)
            ctx.equal(lhs, fam.Ehat(v) * coeffs[d - _size(v)], f"v={v} d={d}")


def check_qbt_sln_i(ctx: Context) -> None:
    """sum_{|u|=d} E_{uv}(a, b) Ehat_u = Ehat_v S_{d-|v|}[(a - b) X/(1 - q)]."""
    fam = ctx.fam
    a, b = ctx.param("a"), ctx.param("b")
    coeffs = _product_coeffs(ctx, _scaled_vars(ctx, a), _scaled_vars(ctx, b), ctx.D)
    for v in ctx.comps():
        for d in range(_size(v), ctx.D + 1):
            lhs = _zero(ctx)
            for u in ctx.shell(d):
                e = ctx.E(u, v, a, b)
                if e:
                    lhs = lhs + fam.Ehat(u).scale(e)
            ctx.equal(lhs, fam.Ehat(v) * coeffs[d - _size(v)], f"v={v} d={d}")


def _poch_sum(ctx: Context, a, d: int) -> LaurentPoly:
    out = _zero(ctx)
    for u in ctx.shell(d):
        out = out + ctx.fam.Ehat(u).scale(ctx.poch(a, u))
    return out


def check_qbt_sln_ii(ctx: Context) -> None:
    """sum_{|u|=d} (a)_u Ehat_u = S_d[(1 - a) X/(1 - q)]."""
    a = ctx.param("a")
    coeffs = _product_coeffs(ctx, ctx.xvars(), _scaled_vars(ctx, a), ctx.D)
    for d in range(ctx.D + 1):
        ctx.equal(_poch_sum(ctx, a, d), coeffs[d], f"d={d}")


def check_kaneko_equiv(ctx: Context) -> None:
    """The symmetric and nonsymmetric binomial theorems agree shell by shell."""
    fam = ctx.fam
    a = ctx.param("a")
    coeffs = _product_coeffs(ctx, ctx.xvars(), _scaled_vars(ctx, a), ctx.D)
    for d in range(ctx.D + 1):
        sym = _zero(ctx)
        for lam in partitions(ctx.n, d):
            sym = sym + fam.P_hat(lam).scale(ctx.poch(a, lam))
        nonsym = _poch_sum(ctx, a, d)
        ctx.equal(sym, nonsym, f"d={d} symmetric vs nonsymmetric")
        ctx.equal(sym, coeffs[d], f"d={d} symmetric vs product")
        for u in ctx.shell(d):
            ctx.equal(ctx.poch(a, u), ctx.poch(a, tuple(sorted(u, reverse=True))), f"(a)_u = (a)_u+ u={u}")


def check_euler_trafo_sln(ctx: Context) -> None:
    """The sl_n q-Euler transformation and its c = 0 form, by total x-degree."""
    fam = ctx.fam
    D = ctx.D
    a, b, c = ctx.param("a"), ctx.param("b"), ctx.param("c")
    prod = _product_coeffs(ctx, _scaled_vars(ctx, b), _scaled_vars(ctx, a), D)
    for v in ctx.comps():
        left, right, left0, right0 = {}, {}, {}, {}
        for d in range(_size(v), D + 1):
            l = r = l0 = r0 = _zero(ctx)
            for u in ctx.shell(d):
                Eu = fam.Ehat(u)
                e1 = ctx.E(u, v, b, c)
                if e1:
                    l = l + Eu.scale(ctx.poch(a, u) / ctx.poch(c, u) * e1)
                e2 = ctx.E(u, v, a, c)
                if e2:
                    r = r + Eu.scale(ctx.poch(b, u) / ctx.poch(c, u) * e2)
                qb = ctx.qb(u, v)
                if qb:
                    l0 = l0 + Eu.scale(b**d * ctx.poch(a, u) * qb)
                    r0 = r0 + Eu.scale(a**d * ctx.poch(b, u) * qb)
            left[d], right[d], left0[d], right0[d] = l, r, l0, r0
        pref = ctx.poch(a, v) / ctx.poch(b, v)
        pref0 = (b / a) ** _size(v) * pref
        for d in range(_size(v), D + 1):
            rhs = _times(prod, right, d, _zero(ctx)).scale(pref)
            ctx.equal(left[d], rhs, f"v={v} d={d}")
            rhs0 = _times(prod, right0, d, _zero(ctx)).scale(pref0)
            ctx.equal(left0[d], rhs0, f"c=0 v={v} d={d}")
