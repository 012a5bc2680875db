"""Numeric-truncated checks: exact rational partial sums with explicit tail bounds.

Infinite products are truncated with a rigorous bound (see
:func:`interpmac.series.poch_infinite`).  Series tails are bounded by a
ratio estimate over the last degree shells: with ``s_k`` the sum of absolute
term values in shell k and ``r`` the last ratio ``s_D / s_{D-1}`` when the
last three ratios are nonincreasing (otherwise the largest of them), the tail
is taken as ``s_D r / (1 - r)``.  This is a heuristic, not a proof: it assumes
the observed trend continues.  The check refuses to pass when ``r >= 1/2``.

The terminating specializations x = <w> are checked exactly in the same
entries, since then every infinite product collapses to finite factors.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from ..compositions import poch
from ..laurent import evaluate
from ..series import poch_infinite, product_ratio
from .context import Context

PRODUCT_DEPTH_LIMIT = 400
MIN_SHELLS = 5  # shells past the leading one that every truncated series keeps


def _frac(x) -> Fraction:
    x = mpq(x)
    return Fraction(int(x.numerator), int(x.denominator))


class Truncated:
    """A series accumulated shell by shell."""

    def __init__(self):
        self.value = mpq(0)
        self.shells: dict[int, Fraction] = {}

    def add(self, k: int, term) -> None:
        self.value += term
        self.shells[k] = self.shells.get(k, Fraction(0)) + abs(_frac(term))

    def tail(self, D: int) -> Fraction | None:
        """Heuristic bound on the omitted shells k > D, or None when not convergent."""
        window = range(max(1, D - 2), D + 1)
        if all(not self.shells.get(k) for k in window):
            # the series has terminated
            return Fraction(0)
        ratios = []
        for k in window:
            prev = self.shells.get(k - 1)
            if not prev:
                return None
            ratios.append(self.shells.get(k, Fraction(0)) / prev)
        # nonincreasing ratios (the q-factorial regime) make the last one a
        # bound for every later ratio, provided the trend continues
        monotone = all(x >= y for x, y in zip(ratios, ratios[1:]))
        r = ratios[-1] if monotone else max(ratios)
        if r >= Fraction(1, 2):
            return None
        return self.shells.get(D, Fraction(0)) * r / (1 - r)


def _depth_for(values, q, target=Fraction(1, 10**16)) -> int:
    depth = 16
    while depth < PRODUCT_DEPTH_LIMIT:
        total = sum((poch_infinite(b, depth, q).log_bound for b in values), Fraction(0))
        if total < target:
            return depth
        depth *= 2
    return PRODUCT_DEPTH_LIMIT


def infinite_ratio(numer, denom, q):
    """prod (n)_inf / prod (d)_inf and its relative error bound."""
    depth = _depth_for(list(numer) + list(denom), q)
    return product_ratio(numer, denom, depth, q)


def record(ctx: Context, label: str, lhs: Truncated, rhs_value, rhs_series: Truncated | None, rhs_rel: Fraction):
    """Compare a truncated left side with a right side; update the outcome.

    ``rhs_value`` is the full right side, ``rhs_series`` the truncated series
    inside it (if any) and ``rhs_rel`` the relative error of its products.
    """
    ctx.out.checks += 1
    if not rhs_value:
        ctx.out.failures.append(f"{label}: right side vanished")
        return
    ref = abs(_frac(rhs_value))
    err = abs(_frac(lhs.value) - _frac(rhs_value)) / ref
    if ctx.out.rel_error is None or err > ctx.out.rel_error:
        ctx.out.rel_error = err
    bound = None
    left_tail = lhs.tail(ctx.D)
    if left_tail is not None:
        bound = left_tail / ref + rhs_rel
        if rhs_series is not None:
            right_tail = rhs_series.tail(ctx.D)
            if right_tail is None or not rhs_series.value:
                bound = None
            else:
                bound += right_tail / abs(_frac(rhs_series.value)) * (1 + rhs_rel)
    if bound is None:
        ctx.out.failures.append(f"{label}: series does not visibly converge")
        return
    if ctx.out.tail_bound is None or bound > ctx.out.tail_bound:
        ctx.out.tail_bound = bound
    if err > ctx.tolerance:
        ctx.out.failures.append(f"{label}: relative error {float(err):.3e}")
    elif bound > ctx.tolerance / 2:
        ctx.out.failures.append(f"{label}: tail bound {float(bound):.3e} exceeds half the tolerance")


def _spec_products(ctx: Context, scalar, v):
    return [scalar * s for s in ctx.fam.spec(v)]


PAIR_GAP = Fraction(1, 8)


def _close(ctx: Context, *pairs) -> bool:
    """0 < |x - y| <= 1/8 for every pair fed to E_{uv}(x, y) (numeric mode only).

    E_{uv}(x, y) is a plethystic evaluation at (x - y)/(1 - t), so x - y is one
    of the arguments that governs the decay of the shells.  x = y is excluded
    because E_{uv}(x, x) = delta_{uv} collapses the series to one term.
    """
    if not ctx.numeric or ctx.symbolic:
        return True
    return all(0 < abs(_frac(x) - _frac(y)) <= PAIR_GAP for x, y in pairs)


def _gauss_params(ctx: Context):
    for _ in range(100):
        a, b = ctx.param("a"), ctx.param("b")
        if _close(ctx, (a, b)):
            return a, b
    raise ZeroDivisionError("could not draw (a, b) with |a - b| <= 1/8")


def _targets(ctx: Context):
    """The fixed labels v used on the left; kept small so the series stays long.

    A series indexed by |u| >= |v| has D - |v| shells past its leading term;
    five of them are needed to certify 1e-8 at the numeric specializations.
    """
    return list(ctx.comps(min(2, max(0, ctx.D - MIN_SHELLS))))


# gl_n q-Gauss sums -----------------------------------------------------------------


def gauss_exact(ctx: Context, a, b) -> None:
    """x = <w>: every infinite product reduces to finite q-shifted factorials."""
    F = ctx.F
    tn = ctx.tn1()
    for v in ctx.comps(min(2, ctx.D)):
        for w in ctx.comps(min(3, ctx.D)):
            lhs = F.zero
            for u in ctx.comps(sum(w)):
                m = ctx.fam.Mhat_at_spec(u, w)
                if m:
                    lhs = lhs + poch(b * tn, v, F) / poch(b * tn, u, F) * ctx.E(u, v, a, b) * m
            rhs = (
                ctx.fam.Mhat_at_spec(v, w)
                * poch(a * tn, w, F)
                * poch(b * tn, v, F)
                / (poch(a * tn, v, F) * poch(b * tn, w, F))
            )
            ctx.equal(lhs, rhs, f"x=<w> v={v} w={w}")


def check_gauss_gln(ctx: Context) -> None:
    a, b = _gauss_params(ctx)
    if ctx.symbolic:
        gauss_exact(ctx, a, b)
        return
    gauss_exact(ctx, a, b)
    x = ctx.point()
    F = ctx.F
    tn = ctx.tn1()
    fam = ctx.fam
    for v in _targets(ctx):
        lhs = Truncated()
        for u in ctx.comps():
            e = ctx.E(u, v, a, b)
            if e:
                lhs.add(sum(u), poch(b * tn, v, F) / poch(b * tn, u, F) * e * evaluate(fam.Mhat(u), x, F.one))
        numer = _spec_products(ctx, a, v) + [b * xi for xi in x]
        denom = _spec_products(ctx, b, v) + [a * xi for xi in x]
        prod, rel = infinite_ratio(numer, denom, F.q)
        rhs = evaluate(fam.Mhat(v), x, F.one) * prod
        record(ctx, f"v={v}", lhs, rhs, None, rel)


def check_gauss_gln_ii(ctx: Context) -> None:
    a, b = ctx.param("a"), ctx.param("b")
    F = ctx.F
    n = ctx.n
    tn = ctx.tn1()
    fam = ctx.fam
    if ctx.symbolic:
        raise ValueError("gauss-gln-II is numeric only")
    x = ctx.point()
    lhs = Truncated()
    for u in ctx.comps():
        k = sum(u)
        lhs.add(k, a**k * poch(b, u, F) / poch(a * b * tn, u, F) * evaluate(fam.Mhat(u), x, F.one))
    ts = [F.qt(0, n - i) for i in range(1, n + 1)]
    numer = [a * s for s in ts] + [a * b * xi for xi in x]
    denom = [a * b * s for s in ts] + [a * xi for xi in x]
    prod, rel = infinite_ratio(numer, denom, F.q)
    record(ctx, "sum", lhs, prod, None, rel)


# gl_n Kummer-Thomae-Whipple and Heine ---------------------------------------------


def _ktw_params(ctx: Context):
    """a, b, c, d drawn; e = abc/d computed from the balancing constraint."""
    for _ in range(100):
        a, b, c, d = (ctx.param(x) for x in "abcd")
        e = a * b * c / d
        if ctx.symbolic or (
            abs(e) <= Fraction(1, 4)
            and ctx.admissible(e)
            and ctx.admissible(d / c)
            and _close(ctx, (a, a * c), (e, a * c))
        ):
            ctx.derived("e", e)
            ctx.balanced(a * b * c, d * e, "abc = de")
            return a, b, c, d, e
    raise ZeroDivisionError("could not draw admissible parameters with |abc/d| <= 1/4")


def ktw_exact(ctx: Context, a, b, c, d, e) -> None:
    """x = <w>: both products collapse and the identity is finite."""
    F = ctx.F
    tn = ctx.tn1()
    fam = ctx.fam
    for v in ctx.comps(min(2, ctx.D)):
        for w in ctx.comps(min(3, ctx.D)):
            lhs = rhs = F.zero
            for u in ctx.comps(sum(w)):
                m = fam.Mhat_at_spec(u, w)
                if not m:
                    continue
                lhs = lhs + poch(b, u, F) / (poch(d, u, F) * poch(e * tn, u, F)) * ctx.E(u, v, a, a * c) * m
                rhs = rhs + poch(d / c, u, F) / (poch(d, u, F) * poch(a * tn, u, F)) * ctx.E(u, v, e, a * c) * m
            rhs = rhs * poch(b, v, F) / poch(d / c, v, F) * poch(a * tn, w, F) / poch(e * tn, w, F)
            ctx.equal(lhs, rhs, f"x=<w> v={v} w={w}")


def check_ktw(ctx: Context) -> None:
    a, b, c, d, e = _ktw_params(ctx)
    ktw_exact(ctx, a, b, c, d, e)
    if ctx.symbolic:
        return
    F = ctx.F
    n = ctx.n
    tn = ctx.tn1()
    fam = ctx.fam
    x = ctx.point()
    Mx = {u: evaluate(fam.Mhat(u), x, F.one) for u in ctx.comps()}
    for v in _targets(ctx):
        lhs, right = Truncated(), Truncated()
        for u in ctx.comps():
            k = sum(u)
            e1 = ctx.E(u, v, a, a * c)
            if e1:
                lhs.add(k, poch(b, u, F) / (poch(d, u, F) * poch(e * tn, u, F)) * e1 * Mx[u])
            e2 = ctx.E(u, v, e, a * c)
            if e2:
                right.add(k, poch(d / c, u, F) / (poch(d, u, F) * poch(a * tn, u, F)) * e2 * Mx[u])
        ts = [F.qt(0, n - i) for i in range(1, n + 1)]
        prod, rel = infinite_ratio([a * s for s in ts] + [e * xi for xi in x], [e * s for s in ts] + [a * xi for xi in x], F.q)
        pref = poch(b, v, F) / poch(d / c, v, F) * prod
        record(ctx, f"v={v}", lhs, pref * right.value, right, rel)


def heine_exact(ctx: Context, a, b, c) -> None:
    F = ctx.F
    tn = ctx.tn1()
    fam = ctx.fam
    for v in ctx.comps(min(2, ctx.D)):
        for w in ctx.comps(min(3, ctx.D)):
            lhs = rhs = F.zero
            for u in ctx.comps(sum(w)):
                m = fam.Mhat_at_spec(u, w)
                if not m:
                    continue
                x = ctx.qb(u, v)
                if not x:
                    continue
                k = sum(u)
                lhs = lhs + a**k * poch(b, u, F) / poch(c * tn, u, F) * x * m
                rhs = rhs + c**k * poch(a * b / c, u, F) / poch(a * tn, u, F) * x * m
            kv = sum(v)
            rhs = rhs * (a / c) ** kv * poch(b, v, F) / poch(a * b / c, v, F)
            rhs = rhs * poch(a * tn, w, F) / poch(c * tn, w, F)
            ctx.equal(lhs, rhs, f"x=<w> v={v} w={w}")


def _heine_params(ctx: Context):
    for _ in range(100):
        a, b, c = ctx.param("a"), ctx.param("b"), ctx.param("c")
        if ctx.admissible(a * b / c):
            return a, b, c
    raise ZeroDivisionError("could not draw admissible parameters with (ab/c)_u nonzero")


def check_heine_gln(ctx: Context) -> None:
    a, b, c = _heine_params(ctx)
    heine_exact(ctx, a, b, c)
    if ctx.symbolic:
        return
    F = ctx.F
    n = ctx.n
    tn = ctx.tn1()
    fam = ctx.fam
    x = ctx.point()
    Mx = {u: evaluate(fam.Mhat(u), x, F.one) for u in ctx.comps()}
    for v in _targets(ctx):
        lhs, right = Truncated(), Truncated()
        for u in ctx.comps():
            qb = ctx.qb(u, v)
            if not qb:
                continue
            k = sum(u)
            lhs.add(k, a**k * poch(b, u, F) / poch(c * tn, u, F) * qb * Mx[u])
            right.add(k, c**k * poch(a * b / c, u, F) / poch(a * tn, u, F) * qb * Mx[u])
        ts = [F.qt(0, n - i) for i in range(1, n + 1)]
        prod, rel = infinite_ratio([a * s for s in ts] + [c * xi for xi in x], [c * s for s in ts] + [a * xi for xi in x], F.q)
        kv = sum(v)
        pref = (a / c) ** kv * poch(b, v, F) / poch(a * b / c, v, F) * prod
        record(ctx, f"v={v}", lhs, pref * right.value, right, rel)


# nonsymmetric skew Cauchy identity ----------------------------------------------


def check_skew_cauchy(ctx: Context) -> None:
    """Both sides divided by prod (bd<0>_i)_inf, using (x t^{n-1})_u for the ratios."""
    if ctx.symbolic:
        raise ValueError("skew-cauchy is numeric only")
    for _ in range(100):
        a, b, c, d = (ctx.param(x, tiny=True) for x in "abcd")
        if _close(ctx, (a, b), (c, d)):
            break
    else:
        raise ZeroDivisionError("could not draw parameters with |a - b|, |c - d| <= 1/8")
    F = ctx.F
    n = ctx.n
    tn = ctx.tn1()
    fam = ctx.fam
    E0 = fam.Ehat_at_zero

    def Fuv(u, v, p, r):
        return E0(u) / E0(v) * ctx.E(u, v, p, r)

    ts = [F.qt(0, n - i) for i in range(1, n + 1)]
    zprod, rel = infinite_ratio(
        [a * d * s for s in ts] + [b * c * s for s in ts],
        [a * c * s for s in ts] + [b * d * s for s in ts],
        F.q,
    )
    for v in _targets(ctx):
        for w in _targets(ctx):
            if sum(v) + sum(w) > ctx.D - MIN_SHELLS:
                continue
            lhs = Truncated()
            for u in ctx.comps():
                e1 = ctx.E(u, v, a, b)
                if not e1:
                    continue
                f = Fuv(u, w, c, d)
                if f:
                    lhs.add(sum(u), e1 * f / poch(b * d * tn, u, F))
            finite = F.zero
            for u in ctx.comps(min(sum(v), sum(w))):
                finite = finite + poch(a * c * tn, u, F) * ctx.E(w, u, a, b) * Fuv(v, u, c, d)
            rhs = zprod * finite / (poch(a * d * tn, v, F) * poch(b * c * tn, w, F))
            if not finite:
                # both sides vanish identically for this (v, w); compare absolutely
                ctx.out.checks += 1
                if abs(_frac(lhs.value)) > ctx.tolerance:
                    ctx.out.failures.append(f"v={v} w={w}: left side {float(lhs.value):.3e} should vanish")
                continue
            record(ctx, f"v={v} w={w}", lhs, rhs, None, rel)
