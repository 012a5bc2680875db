"""Hecke-type operators acting on the left of Laurent polynomials.

``f T_i = t f + (f ∂_i)(t x_{i+1} - x_i)`` where ``f ∂_i`` is the divided
difference ``(f^{s_i} - f) / (x_{i+1} - x_i)``.  All operators are functions
``(poly, field, ...) -> poly``.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

from .laurent import LaurentPoly

# Set by ``corrupted_hecke`` for mutation testing; added to the scalar term of T_i.
_T_OFFSET = 0
CHECK_DIVISION = False


class CancellationError(AssertionError):
    """The divided difference failed to be exact; indicates an internal bug."""


@contextmanager
def corrupted_hecke():
    """Temporarily replace the scalar coefficient t of T_i by t + 1."""
    global _T_OFFSET
    old = _T_OFFSET
    _T_OFFSET = 1
    try:
        yield
    finally:
        _T_OFFSET = old


@dataclass(frozen=True)
class OperatorDescriptor:
    kind: str  # Ti, TiInv, Shift, Phi, Xi, YiInv
    index: int | None = None

    def check(self, n: int) -> None:
        if self.kind in ("Ti", "TiInv"):
            if self.index is None or not 1 <= self.index <= n - 1:
                raise ValueError(f"{self.kind} needs 1 <= i <= n-1, got {self.index}")
        elif self.kind in ("Xi", "YiInv"):
            if self.index is None or not 1 <= self.index <= n:
                raise ValueError(f"{self.kind} needs 1 <= i <= n, got {self.index}")
        elif self.kind not in ("Shift", "Phi"):
            raise ValueError(f"unknown operator kind {self.kind!r}")


def divided_difference(p: LaurentPoly, i: int) -> LaurentPoly:
    """(f^{s_i} - f) / (x_{i+1} - x_i), computed monomial by monomial."""
    k = i - 1
    out: dict = {}
    for e, c in p.terms.items():
        a, b = e[k], e[k + 1]
        if a == b:
            continue
        # x_i^b x_{i+1}^a - x_i^a x_{i+1}^b = sign (x_i x_{i+1})^m (x_{i+1}^d - x_i^d)
        if a > b:
            m, d, coef = b, a - b, c
        else:
            m, d, coef = a, b - a, -c
        for j in range(d):
            new = list(e)
            new[k] = m + d - 1 - j
            new[k + 1] = m + j
            new = tuple(new)
            s = out.get(new)
            out[new] = coef if s is None else s + coef
    q = LaurentPoly(p.n, out)
    if CHECK_DIVISION:
        lhs = q * _x(p.n, i + 1, p) - q * _x(p.n, i, p)
        if lhs != p.swap(i) - p:
            raise CancellationError(f"divided difference at i={i} is not exact")
    return q


def _x(n, i, like):
    one = next(iter(like.terms.values())) ** 0 if like.terms else 1
    return LaurentPoly.variable(n, i, one)


def apply_Ti(p: LaurentPoly, i: int, field) -> LaurentPoly:
    OperatorDescriptor("Ti", i).check(p.n)
    t = field.t
    d = divided_difference(p, i)
    k = i - 1
    up = [0] * p.n
    up[k + 1] = 1
    here = [0] * p.n
    here[k] = 1
    scalar = t + _T_OFFSET if _T_OFFSET else t
    return p.scale(scalar) + d.shift(up).scale(t) - d.shift(here)


def apply_Ti_inv(p: LaurentPoly, i: int, field) -> LaurentPoly:
    """T_i^{-1} = (T_i - t + 1) / t."""
    t = field.t
    return (apply_Ti(p, i, field) - p.scale(t - field.one)).scale(1 / t)


def apply_shift(p: LaurentPoly, field) -> LaurentPoly:
    """f(x) tau = f(x_n / q, x_1, ..., x_{n-1})."""
    out = {}
    for e, c in p.terms.items():
        out[e[1:] + e[:1]] = c * field.qt(-e[0], 0) if e[0] else c
    return LaurentPoly(p.n, out)


def _times_xn_minus_1(p: LaurentPoly) -> LaurentPoly:
    up = [0] * p.n
    up[-1] = 1
    return p.shift(up) - p


def apply_phi(p: LaurentPoly, field) -> LaurentPoly:
    """f(x) phi = f(x tau) (x_n - 1)."""
    return _times_xn_minus_1(apply_shift(p, field))


def _divide_by_x(p: LaurentPoly, i: int) -> LaurentPoly:
    e = [0] * p.n
    e[i - 1] = -1
    return p.shift(e)


def apply_Xi(p: LaurentPoly, i: int, field) -> LaurentPoly:
    """Knop's operator: t^{1-n} T_{i-1}..T_1 tau (x_n - 1) T_{n-1}..T_i (1/x_i) + 1/x_i."""
    n = p.n
    OperatorDescriptor("Xi", i).check(n)
    f = p
    for j in range(i - 1, 0, -1):
        f = apply_Ti(f, j, field)
    f = _times_xn_minus_1(apply_shift(f, field))
    for j in range(n - 1, i - 1, -1):
        f = apply_Ti(f, j, field)
    f = _divide_by_x(f, i).scale(field.qt(0, 1 - n))
    return f + _divide_by_x(p, i)


def apply_Xi_alt(p: LaurentPoly, i: int, field) -> LaurentPoly:
    """Second form: t^{1-i} T_{i-1}..T_1 tau (1 - 1/x_n) T_{n-1}^{-1}..T_i^{-1} + 1/x_i."""
    n = p.n
    OperatorDescriptor("Xi", i).check(n)
    f = p
    for j in range(i - 1, 0, -1):
        f = apply_Ti(f, j, field)
    f = apply_shift(f, field)
    f = f - _divide_by_x(f, n)
    for j in range(n - 1, i - 1, -1):
        f = apply_Ti_inv(f, j, field)
    return f.scale(field.qt(0, 1 - i)) + _divide_by_x(p, i)


def apply_Yi_inv(p: LaurentPoly, i: int, field) -> LaurentPoly:
    """Y_i^{-1} = t^{1-i} T_{i-1}..T_1 tau T_{n-1}^{-1}..T_i^{-1}."""
    n = p.n
    OperatorDescriptor("YiInv", i).check(n)
    f = p
    for j in range(i - 1, 0, -1):
        f = apply_Ti(f, j, field)
    f = apply_shift(f, field)
    for j in range(n - 1, i - 1, -1):
        f = apply_Ti_inv(f, j, field)
    return f.scale(field.qt(0, 1 - i))


def apply(p: LaurentPoly, op: OperatorDescriptor, field) -> LaurentPoly:
    op.check(p.n)
    if op.kind == "Ti":
        return apply_Ti(p, op.index, field)
    if op.kind == "TiInv":
        return apply_Ti_inv(p, op.index, field)
    if op.kind == "Shift":
        return apply_shift(p, field)
    if op.kind == "Phi":
        return apply_phi(p, field)
    if op.kind == "Xi":
        return apply_Xi(p, op.index, field)
    return apply_Yi_inv(p, op.index, field)
