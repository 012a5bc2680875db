"""One-variable regression: n = 1 closed forms and reductions to classical series.

Every reduction is checked in two independent halves.  First the classical
identity itself is verified: terminating sums exactly, nonterminating ones as
formal power series in a scaling variable z.  Then the n = 1 case of the
multivariate identity is shown to be the classical one under the stated
substitution: the multivariate terms are proportional to the classical terms
(term by term, with one constant per side), and the constants are related by
the classical prefactor.  Infinite products are compared by pairing factors
(b q^m)_inf / (b)_inf = 1 / (b)_m, which leaves an exact finite quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..compositions import poch_q
from ..laurent import evaluate
from ..series import TruncatedSeries, sigma_q_series, sigma_series
from .context import Context

CLOSED_FORM_MAX = 8  # n = 1 closed forms are checked for u <= this
PAIRING_SPAN = 64  # largest |m| tried when pairing infinite-product factors


def _require_n1(ctx: Context) -> None:
    if ctx.n != 1:
        raise ValueError("the one-variable regression runs at n = 1 only")


def _p(ctx: Context, x, k: int):
    return poch_q(x, k, ctx.F)


def _ps(ctx: Context, xs, k: int):
    out = ctx.F.one
    for x in xs:
        out = out * poch_q(x, k, ctx.F)
    return out


def _qk(ctx: Context, k: int):
    return ctx.F.qt(k, 0)


def phi_term(ctx: Context, upper, lower, z, j: int):
    """Term j of an (r+1)phi_r series (no extra q-power factor)."""
    return _ps(ctx, upper, j) / _ps(ctx, [ctx.F.q] + list(lower), j) * z**j if j else ctx.F.one


# infinite products --------------------------------------------------------------


@dataclass
class Product:
    """finite * prod (n)_inf / prod (d)_inf, kept unevaluated."""

    finite: object
    numer: list = dc_field(default_factory=list)
    denom: list = dc_field(default_factory=list)


def quotient(ctx: Context, top: Product, bottom: Product):
    """top / bottom as an exact value, pairing every infinite factor.

    Raises ValueError if some factor has no partner differing by a power of q.
    """
    F = ctx.F
    value = top.finite / bottom.finite
    numer = list(top.numer) + list(bottom.denom)
    denom = list(top.denom) + list(bottom.numer)
    while numer:
        p = numer.pop()
        for idx, d in enumerate(denom):
            m = _q_power(ctx, p, d)
            if m is None:
                continue
            denom.pop(idx)
            # (d q^m)_inf / (d)_inf = 1/(d)_m ; (p)_inf / (p q^{-m})_inf = (p)_{-m}
            value = value / _p(ctx, d, m) if m >= 0 else value * _p(ctx, p, -m)
            break
        else:
            raise ValueError(f"unpaired infinite factor ({F.format(p)})_inf")
    if denom:
        raise ValueError("unpaired infinite factors in the denominator")
    return value


def _q_power(ctx: Context, p, d):
    """m with p = d q^m, |m| <= PAIRING_SPAN, else None."""
    if not d:
        return 0 if not p else None
    r = p / d
    for m in range(0, PAIRING_SPAN + 1):
        if r == ctx.F.qt(m, 0):
            return m
        if m and r == ctx.F.qt(-m, 0):
            return -m
    return None


# proportionality ------------------------------------------------------------------


def proportional(ctx: Context, T: list, t: list, label: str, *, reversible: bool = False):
    """The constant c with T[j] = c t[j] for all j (or c t[K-j] if ``reversible``).

    Records one check; returns None (and a failure) when no orientation works.
    """
    ctx.out.checks += 1
    orders = [t, list(reversed(t))] if reversible else [t]
    for s in orders:
        c = _ratio(T, s)
        if c is not None:
            return c
    ctx.out.failures.append(f"{label}: terms are not proportional")
    return None


def _ratio(T, t):
    if len(T) != len(t):
        return None
    pivot = next((j for j, x in enumerate(t) if x), None)
    if pivot is None:
        return None
    c = T[pivot] / t[pivot]
    if all(T[j] == c * t[j] for j in range(len(t))):
        return c
    return None


# closed forms ---------------------------------------------------------------------


def check_closed_forms(ctx: Context) -> None:
    """Mhat_u, Ehat_u, [u v] and E_{uv}(1, b) against their n = 1 product forms."""
    _require_n1(ctx)
    F = ctx.F
    fam = ctx.fam
    x = ctx.xvars()[0]
    one = ctx.const(F.one)
    top = max(CLOSED_FORM_MAX, ctx.D)
    for u in range(top + 1):
        qq = _p(ctx, F.q, u)
        # x^u (1/x)_u = prod_{i<u} (x - q^i)
        m = one
        for i in range(u):
            m = m * (x - ctx.const(_qk(ctx, i)))
        ctx.equal(fam.Mhat((u,)), m.scale(F.one / qq), f"Mhat_{u} = x^u (1/x)_u/(q)_u")
        ctx.equal(fam.Ehat((u,)), (x**u).scale(F.one / qq), f"Ehat_{u} = x^u/(q)_u")
    b = ctx.param("b")
    for u in range(top + 1):
        for v in range(u + 1):
            gauss = _p(ctx, _qk(ctx, u - v + 1), v) / _p(ctx, F.q, v)
            ctx.equal(ctx.qb((u,), (v,)), gauss, f"[{u} {v}] Gaussian polynomial")
            if u <= ctx.D + 2:
                ctx.equal(ctx.E((u,), (v,), F.one, b), _p(ctx, b, u - v) * gauss, f"E_{u}{v}(1,b)")
        for v in range(u + 1, u + 3):
            ctx.equal(ctx.qb((u,), (v,)), F.zero, f"[{u} {v}] = 0")


# classical identities, checked on their own ---------------------------------------


def _classical_terminating(ctx: Context) -> None:
    F = ctx.F
    q = F.q
    a, b, c, d, e = (ctx.param(s) for s in "abcde")
    for k in range(ctx.D + 1):
        qk = F.qt(-k, 0)
        # qcv: 2phi1(a, q^-k; c; c q^k / a) = (c/a)_k / (c)_k
        lhs = sum((phi_term(ctx, [a, qk], [c], c * F.qt(k, 0) / a, j) for j in range(k + 1)), F.zero)
        ctx.equal(lhs, _p(ctx, c / a, k) / _p(ctx, c, k), f"qcv k={k}")
        # qcv2: 2phi1(a, q^-k; c; q) = (c/a)_k a^k / (c)_k
        lhs = sum((phi_term(ctx, [a, qk], [c], q, j) for j in range(k + 1)), F.zero)
        ctx.equal(lhs, _p(ctx, c / a, k) / _p(ctx, c, k) * a**k if k else F.one, f"qcv2 k={k}")
        # qps1: 3phi2(a, b, q^-k; c, ab q^{1-k}/c; q)
        lower = [c, a * b * F.qt(1 - k, 0) / c]
        lhs = sum((phi_term(ctx, [a, b, qk], lower, q, j) for j in range(k + 1)), F.zero)
        rhs = _ps(ctx, [c / a, c / b], k) / _ps(ctx, [c, c / (a * b)], k)
        ctx.equal(lhs, rhs, f"qps1 k={k}")
        # Sears1 with abc = def q^{k-1}: f is derived, never drawn
        f = ctx.derived("f", a * b * c / (d * e * F.qt(k - 1, 0)))
        ctx.balanced(a * b * c, d * e * f * F.qt(k - 1, 0), "abc = def q^{k-1}")
        lhs = sum((phi_term(ctx, [a, b, c, qk], [d, e, f], q, j) for j in range(k + 1)), F.zero)
        up = [a, d / b, d / c, qk]
        lo = [d, a * F.qt(1 - k, 0) / e, a * F.qt(1 - k, 0) / f]
        inner = sum((phi_term(ctx, up, lo, q, j) for j in range(k + 1)), F.zero)
        pref = _ps(ctx, [e / a, f / a], k) / _ps(ctx, [e, f], k) * (a**k if k else F.one)
        ctx.equal(lhs, pref * inner, f"Sears1 k={k}")


def _zseries(ctx: Context, order: int, coeffs: dict) -> list:
    out = [ctx.F.zero] * (order + 1)
    for k, v in coeffs.items():
        if k <= order:
            out[k] = out[k] + v
    return out


def _scaled_phi(ctx: Context, upper, lower_fixed, lower_scaled, zarg, order: int) -> list:
    """sum_j (upper)_j / (q, lower_fixed, z*lower_scaled)_j (z*zarg)^j through z^order."""
    F = ctx.F
    out = [F.zero] * (order + 1)
    for j in range(order + 1):
        head = _ps(ctx, upper, j) / _ps(ctx, [F.q] + list(lower_fixed), j) * (zarg**j if j else F.one)
        letters = [y * F.qt(i, 0) for y in lower_scaled for i in range(j)]
        inv = sigma_series(letters, [], order - j, F.one)
        for m in range(order - j + 1):
            out[j + m] = out[j + m] + head * inv[m]
    return out


def _mul(ctx: Context, s: list, t: list) -> list:
    order = len(s) - 1
    prod = TruncatedSeries(list(s), order) * TruncatedSeries(list(t), order)
    return [prod[k] for k in range(order + 1)]


def _classical_nonterminating(ctx: Context) -> None:
    F = ctx.F
    N = ctx.D
    a, b, c, d, x = (ctx.param(s) for s in "abcdx")

    def prod(A, B):  # prod (zb)_inf / prod (za)_inf
        S = sigma_q_series(A, B, N, F)
        return [S[k] for k in range(N + 1)]

    # qbt: 1phi0(a; -; xz) = (axz)_inf / (xz)_inf
    lhs = _scaled_phi(ctx, [a], [], [], x, N)
    ctx.equal(lhs, prod([x], [a * x]), "qbt")
    # qG with c -> cz: 2phi1(a, b; cz; cz/ab)
    lhs = _scaled_phi(ctx, [a, b], [], [c], c / (a * b), N)
    ctx.equal(lhs, prod([c, c / (a * b)], [c / a, c / b]), "qG")
    # Heine1 with x -> xz, c -> cz
    lhs = _scaled_phi(ctx, [a, b], [], [c], x, N)
    inner = _scaled_phi(ctx, [a, a * b * x / c], [], [a * x], c / a, N)
    ctx.equal(lhs, _mul(ctx, prod([c, x], [c / a, a * x]), inner), "Heine1")
    # Heine2 with x -> xz; the prefactor is (abx/c)_inf / (x)_inf
    lhs = _scaled_phi(ctx, [a, b], [c], [], x, N)
    inner = _scaled_phi(ctx, [c / a, c / b], [c], [], a * b * x / c, N)
    ctx.equal(lhs, _mul(ctx, prod([x], [a * b * x / c]), inner), "Heine2")
    # KTW1 with e -> ez (so f = de/bc -> fz); e is drawn as the scaled parameter
    e = ctx.param("e")
    f = ctx.derived("f", d * e / (b * c))
    lhs = _scaled_phi(ctx, [a, b, c], [d], [e], f / a, N)
    inner = _scaled_phi(ctx, [a, d / b, d / c], [d], [f], e / a, N)
    ctx.equal(lhs, _mul(ctx, prod([f / a, e], [e / a, f]), inner), "KTW1")


def check_classical(ctx: Context) -> None:
    """The classical one-variable identities, independently of any Macdonald theory."""
    _classical_terminating(ctx)
    _classical_nonterminating(ctx)


# reductions of the terminating multivariate sums -------------------------------------


def _sum_reduction(ctx, T, rhs_multi, t, rhs_classical, label, *, reversible=True):
    """T ~ c t termwise and rhs_multi = c rhs_classical."""
    c = proportional(ctx, T, t, label, reversible=reversible)
    if c is not None:
        ctx.equal(rhs_multi, c * rhs_classical, f"{label}: right sides")


def _qcv_terms(ctx, A, C, K):
    F = ctx.F
    qk = F.qt(-K, 0)
    t = [phi_term(ctx, [A, qk], [C], C * F.qt(K, 0) / A, j) for j in range(K + 1)]
    return t, _p(ctx, C / A, K) / _p(ctx, C, K)


def _qcv2_terms(ctx, A, C, K):
    F = ctx.F
    qk = F.qt(-K, 0)
    t = [phi_term(ctx, [A, qk], [C], F.q, j) for j in range(K + 1)]
    return t, _p(ctx, C / A, K) / _p(ctx, C, K) * (A**K if K else F.one)


def _pairs(ctx: Context):
    for u in range(ctx.D + 1):
        for w in range(u + 1):
            yield u, w


def check_reductions_terminating(ctx: Context) -> None:
    _require_n1(ctx)
    F = ctx.F
    fam = ctx.fam
    E = lambda u, v, x, y: ctx.E((u,), (v,), x, y)  # noqa: E731
    qb = lambda u, v: ctx.qb((u,), (v,))  # noqa: E731
    a, b, c = ctx.param("a"), ctx.param("b"), ctx.param("c")
    xs = [ctx.point("x1")[0], ctx.point("x2")[0]]

    # Sahi I -> qcv2 with (a, c, k) -> (x, 1/a, u)
    for x in xs:
        for u in range(ctx.D + 1):
            Mu = evaluate(fam.Mhat((u,)), (a,), F.one)
            T = [
                a**v * ctx.qbi((u,), (v,)) * Mu / evaluate(fam.Mhat((v,)), (a,), F.one)
                * evaluate(fam.Mprime_hat((v,)), (x,), F.one)
                for v in range(u + 1)
            ]
            t, r = _qcv2_terms(ctx, x, F.one / a, u)
            _sum_reduction(ctx, T, evaluate(fam.Mhat((u,)), (a * x,), F.one), t, r, f"sahi1 u={u}")
    # Sahi II -> qcv with (a, c, k) -> (1/ax, 1/a, u)
    for x in xs:
        for u in range(ctx.D + 1):
            Mu = evaluate(fam.Mhat((u,)), (a,), F.one)
            T = [
                ctx.tau((v,)) / ctx.tau((u,)) * qb(u, v) * Mu / evaluate(fam.Mhat((v,)), (a,), F.one)
                * evaluate(fam.Mhat((v,)), (a * x,), F.one)
                for v in range(u + 1)
            ]
            t, r = _qcv_terms(ctx, F.one / (a * x), F.one / a, u)
            lhs = a**u * evaluate(fam.Mprime_hat((u,)), (x,), F.one)
            _sum_reduction(ctx, T, lhs, t, r, f"sahi2 u={u}")

    for u, w in _pairs(ctx):
        K = u - w
        vs = range(w, u + 1)
        # qCV1 -> qcv with (c, k) -> (q^{w-u+1} a/b, u-w)
        T = [E(u, v, a, b) * E(v, w, F.one, a) for v in vs]
        t, r = _qcv_terms(ctx, a, F.qt(w - u + 1, 0) * a / b, K)
        _sum_reduction(ctx, T, E(u, w, F.one, b), t, r, f"qcv1 u={u} w={w}")
        # qCV2 -> qcv2 with (a, c, k) -> (b/a, q^{w-u+1}/a, u-w)
        T = [E(u, v, F.one, a) * E(v, w, a, b) for v in vs]
        t, r = _qcv2_terms(ctx, b / a, F.qt(w - u + 1, 0) / a, K)
        _sum_reduction(ctx, T, E(u, w, F.one, b), t, r, f"qcv2 u={u} w={w}")
        # qCV3 -> qcv with (a, c, k) -> (b/a, b q^w, u-w)
        T = [
            ctx.tau((v,)) / ctx.tau((w,)) * _p(ctx, b, u) / _p(ctx, b, v) * qb(u, v) * E(v, w, a, b)
            for v in vs
        ]
        rhs = _p(ctx, a, u) / _p(ctx, a, w) * qb(u, w)
        t, r = _qcv_terms(ctx, b / a, b * F.qt(w, 0), K)
        _sum_reduction(ctx, T, rhs, t, r, f"qcv3 u={u} w={w}")
        # qCV4 -> qcv2 with (a, c, k) -> (a q^w, q^{w-u+1} a/b, u-w)
        T = [b ** (v - w) * _p(ctx, a, v) / _p(ctx, a, w) * E(u, v, a, b) * qb(v, w) for v in vs]
        rhs = a**K * _p(ctx, b, u) / _p(ctx, b, w) * qb(u, w)
        t, r = _qcv2_terms(ctx, a * F.qt(w, 0), F.qt(w - u + 1, 0) * a / b, K)
        _sum_reduction(ctx, T, rhs, t, r, f"qcv4 u={u} w={w}")
        # qPS -> qps1 with (a, b, c, k) -> (a q^w, c/b, c q^w, u-w)
        T = [_p(ctx, a, v) / _p(ctx, c, v) * E(u, v, a, b) * E(v, w, b, c) for v in vs]
        rhs = _p(ctx, a, w) * _p(ctx, b, u) / (_p(ctx, b, w) * _p(ctx, c, u)) * E(u, w, a, c)
        A, B, C = a * F.qt(w, 0), c / b, c * F.qt(w, 0)
        lower = [C, A * B * F.qt(1 - K, 0) / C]
        t = [phi_term(ctx, [A, B, F.qt(-K, 0)], lower, F.q, j) for j in range(K + 1)]
        r = _ps(ctx, [C / A, C / B], K) / _ps(ctx, [C, C / (A * B)], K)
        _sum_reduction(ctx, T, rhs, t, r, f"qps u={u} w={w}")
    _sears_reduction(ctx)


def _sears_reduction(ctx: Context) -> None:
    """The multiple Sears transformation at n = 1 against Sears1 (exponent k, not n)."""
    F = ctx.F
    q = F.q
    E = lambda u, v, x, y: ctx.E((u,), (v,), x, y)  # noqa: E731
    a, b, c, d, e = (ctx.param(s) for s in ("sa", "sb", "sc", "sd", "se"))
    g = a * a * q * q / (b * c * d * e)
    for u, w in _pairs(ctx):
        K = u - w
        vs = range(w, u + 1)
        TL = [
            _ps(ctx, [a * q / b, a * q / c], u) * _ps(ctx, [d, e], v)
            / (_ps(ctx, [a * q / b, a * q / c], v) * _ps(ctx, [d, e], w))
            * E(u, v, F.one, a * q / (d * e)) * E(v, w, a * q / (d * e), g)
            for v in vs
        ]
        TR = [
            _ps(ctx, [a * q / b, a * q / d], u) * _ps(ctx, [c, e], v)
            / (_ps(ctx, [a * q / b, a * q / d], v) * _ps(ctx, [c, e], w))
            * E(u, v, F.one, a * q / (c * e)) * E(v, w, a * q / (c * e), g)
            for v in vs
        ]
        qw = F.qt(w, 0)
        A, B, C = e * qw, d * qw, a * q / (b * c)
        D, Ee, Ff = a * qw * q / b, a * qw * q / c, F.qt(w - u, 0) * d * e / a
        ctx.balanced(A * B * C, D * Ee * Ff * F.qt(K - 1, 0), f"Sears1 balance u={u} w={w}")
        qK = F.qt(-K, 0)
        tL = [phi_term(ctx, [A, B, C, qK], [D, Ee, Ff], q, j) for j in range(K + 1)]
        lo = [D, A * F.qt(1 - K, 0) / Ee, A * F.qt(1 - K, 0) / Ff]
        tR = [phi_term(ctx, [A, D / B, D / C, qK], lo, q, j) for j in range(K + 1)]
        pref = _ps(ctx, [Ee / A, Ff / A], K) / _ps(ctx, [Ee, Ff], K) * (A**K if K else F.one)
        cL = proportional(ctx, TL, tL, f"sears u={u} w={w} left", reversible=True)
        cR = proportional(ctx, TR, tR, f"sears u={u} w={w} right", reversible=True)
        if cL is not None and cR is not None:
            ctx.equal(cR, cL * pref, f"sears u={u} w={w}: constants")


# reductions of the nonterminating multivariate series ------------------------------------


def _series_reduction(ctx, TL, tL, Pm, Pc, label, TR=None, tR=None):
    """Summation (TR None): c P_c = P_m.  Transformation: c_L P_c = P_m c_R."""
    cL = proportional(ctx, TL, tL, f"{label} left")
    if cL is None:
        return
    if TR is None:
        ctx.equal(cL, quotient(ctx, Pm, Pc), f"{label}: products")
        return
    cR = proportional(ctx, TR, tR, f"{label} right")
    if cR is not None:
        ctx.equal(cL, quotient(ctx, Pm, Pc) * cR, f"{label}: products")


def check_reductions_series(ctx: Context) -> None:
    _require_n1(ctx)
    F = ctx.F
    fam = ctx.fam
    D = ctx.D
    E = lambda u, v, x, y: ctx.E((u,), (v,), x, y)  # noqa: E731
    qb = lambda u, v: ctx.qb((u,), (v,))  # noqa: E731
    a, b, c, d = (ctx.param(s) for s in "abcd")
    xs = [ctx.point("x1")[0], ctx.point("x2")[0]]
    for x in xs:
        M = {u: evaluate(fam.Mhat((u,)), (x,), F.one) for u in range(D + 1)}
        Ex = {u: evaluate(fam.Ehat((u,)), (x,), F.one) for u in range(D + 1)}
        # qbt from the sl_n binomial theorem I at v = 0: (a, x) -> (b/a, ax)
        TL = [E(u, 0, a, b) * Ex[u] for u in range(D + 1)]
        tL = [phi_term(ctx, [b / a], [], a * x, j) for j in range(D + 1)]
        _series_reduction(
            ctx, TL, tL, Product(F.one, [b * x], [a * x]), Product(F.one, [b * x], [a * x]), f"qbt x={x}"
        )
        for v in range(D + 1):
            js = range(D - v + 1)
            us = [v + j for j in js]
            qv = F.qt(v, 0)
            # qG from the gl_n q-Gauss sum: (a, b, c) -> (q^v/x, b/a, b q^v)
            TL = [_p(ctx, b, v) / _p(ctx, b, u) * E(u, v, a, b) * M[u] for u in us]
            A, B, C = qv / x, b / a, b * qv
            tL = [phi_term(ctx, [A, B], [C], C / (A * B), j) for j in js]
            Pm = Product(M[v], [a * qv, b * x], [b * qv, a * x])
            Pc = Product(F.one, [C / A, C / B], [C, C / (A * B)])
            _series_reduction(ctx, TL, tL, Pm, Pc, f"qG v={v} x={x}")
            # Heine1 from the gl_n Heine transformation: (a, b, c, x) -> (q^v/x, b q^v, c q^v, ax)
            TL = [a**u * _p(ctx, b, u) / _p(ctx, c, u) * qb(u, v) * M[u] for u in us]
            TR = [c**u * _p(ctx, a * b / c, u) / _p(ctx, a, u) * qb(u, v) * M[u] for u in us]
            A, B, C, X = qv / x, b * qv, c * qv, a * x
            tL = [phi_term(ctx, [A, B], [C], X, j) for j in js]
            tR = [phi_term(ctx, [A, A * B * X / C], [A * X], C / A, j) for j in js]
            pm = (a / c) ** v * _p(ctx, b, v) / _p(ctx, a * b / c, v) if v else F.one
            Pm = Product(pm, [a, c * x], [c, a * x])
            Pc = Product(F.one, [C / A, A * X], [C, X])
            _series_reduction(ctx, TL, tL, Pm, Pc, f"Heine1 v={v} x={x}", TR, tR)
            # Heine2 from the sl_n q-Euler transformation: (a, b, c, x) -> (a q^v, c/b, c q^v, bx)
            TL = [_p(ctx, a, u) / _p(ctx, c, u) * E(u, v, b, c) * Ex[u] for u in us]
            TR = [_p(ctx, b, u) / _p(ctx, c, u) * E(u, v, a, c) * Ex[u] for u in us]
            A, B, C, X = a * qv, c / b, c * qv, b * x
            tL = [phi_term(ctx, [A, B], [C], X, j) for j in js]
            tR = [phi_term(ctx, [C / A, C / B], [C], A * B * X / C, j) for j in js]
            Pm = Product(_p(ctx, a, v) / _p(ctx, b, v), [a * x], [b * x])
            Pc = Product(F.one, [A * B * X / C], [X])
            _series_reduction(ctx, TL, tL, Pm, Pc, f"Heine2 v={v} x={x}", TR, tR)
            # KTW1 from the gl_n KTW formula: (a, b, c, d, e, f) -> (q^v/x, b q^v, c, d q^v, e q^v, a q^v)
            e = ctx.derived("e", a * b * c / d)
            ctx.balanced(a * b * c, d * e, "abc = de")
            TL = [_p(ctx, b, u) / _ps(ctx, [d, e], u) * E(u, v, a, a * c) * M[u] for u in us]
            TR = [_p(ctx, d / c, u) / _ps(ctx, [d, a], u) * E(u, v, e, a * c) * M[u] for u in us]
            A, B, C, Dd, Ee = qv / x, b * qv, c, d * qv, e * qv
            Ff = Dd * Ee / (B * C)
            tL = [phi_term(ctx, [A, B, C], [Dd, Ee], Ff / A, j) for j in js]
            tR = [phi_term(ctx, [A, Dd / B, Dd / C], [Dd, Ff], Ee / A, j) for j in js]
            Pm = Product(_p(ctx, b, v) / _p(ctx, d / c, v), [a, e * x], [e, a * x])
            Pc = Product(F.one, [Ee / A, Ff], [Ff / A, Ee])
            _series_reduction(ctx, TL, tL, Pm, Pc, f"KTW1 v={v} x={x}", TR, tR)


def check_n1_regression(ctx: Context) -> None:
    """All one-variable checks in one entry."""
    _require_n1(ctx)
    check_closed_forms(ctx)
    check_classical(ctx)
    check_reductions_terminating(ctx)
    check_reductions_series(ctx)
