"""Truncated power series for plethystic products and q-shifted factorials.

Coefficients may be field elements or :class:`LaurentPoly` values (the latter
when an alphabet contains the variables x_i).  Products always keep a
polynomial operand on the left so that scalar backends never see one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from gmpy2 import mpq

from .laurent import LaurentPoly


def _mul(x, y):
    if isinstance(y, LaurentPoly) and not isinstance(x, LaurentPoly):
        return y * x
    return x * y


@dataclass
class TruncatedSeries:
    """c_0 + c_1 z + ... + c_D z^D; nothing beyond z^D is ever consulted."""

    coeffs: list
    order: int
    var: str = "z"

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    def __getitem__(self, k):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        D = min(self.order, other.order)
        out = []
        for k in range(D + 1):
            s = None
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if _is_zero(a) or _is_zero(b):
                    continue
                term = _mul(a, b)
                s = term if s is None else s + term
            out.append(s if s is not None else self.coeffs[0] - self.coeffs[0])
        return TruncatedSeries(out, D, self.var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            _is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs)
        )


def _is_zero(x) -> bool:
    return not x


def _letter_one(letters, one):
    """The unit of the coefficient ring the letters live in."""
    for x in letters:
        if isinstance(x, LaurentPoly):
            return LaurentPoly.constant(x.n, one)
    return one


def geometric(letter, order, one, var="z"):
    """1 / (1 - z*letter)."""
    coeffs = [one]
    for _ in range(order):
        coeffs.append(_mul(coeffs[-1], letter))
    return TruncatedSeries(coeffs, order, var)


def linear_factor(letter, order, one, var="z"):
    """1 - z*letter."""
    zero = one - one
    coeffs = [one, -letter] + [zero] * (order - 1)
    return TruncatedSeries(coeffs[: order + 1], order, var)


def sigma_series(A, B, order: int, one, var="z") -> TruncatedSeries:
    """sigma_z[A - B] = prod_b (1 - z b) / prod_a (1 - z a) through z^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = TruncatedSeries([one] + [one - one] * order, order, var)
    for a in A:
        out = out * geometric(a, order, one, var)
    for b in B:
        out = out * linear_factor(b, order, one, var)
    return out


def euler_inverse(letter, order, field, one, var="z"):
    """1 / (z*letter; q)_inf = sum_m (z*letter)^m / (q; q)_m."""
    coeffs = [one]
    power = one
    qpoch = field.one
    for m in range(1, order + 1):
        power = _mul(power, letter)
        qpoch = qpoch * (field.one - field.qt(m, 0))
        coeffs.append(_mul(power, field.one / qpoch))
    return TruncatedSeries(coeffs, order, var)


def euler_direct(letter, order, field, one, var="z"):
    """(z*letter; q)_inf = sum_m (-1)^m q^{m(m-1)/2} (z*letter)^m / (q; q)_m."""
    coeffs = [one]
    power = one
    qpoch = field.one
    for m in range(1, order + 1):
        power = _mul(power, letter)
        qpoch = qpoch * (field.one - field.qt(m, 0))
        c = field.qt(comb(m, 2), 0) / qpoch
        coeffs.append(_mul(power, -c if m % 2 else c))
    return TruncatedSeries(coeffs, order, var)


def sigma_q_series(A, B, order: int, field, one=None, var="z") -> TruncatedSeries:
    """sigma_z[(A - B)/(1 - q)] = prod_b (zb)_inf / prod_a (za)_inf through z^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if one is None:
        one = _letter_one(list(A) + list(B), field.one)
    out = TruncatedSeries([one] + [one - one] * order, order, var)
    for a in A:
        out = out * euler_inverse(a, order, field, one, var)
    for b in B:
        out = out * euler_direct(b, order, field, one, var)
    return out


# numeric infinite products -----------------------------------------------------


@dataclass(frozen=True)
class PartialProduct:
    """prod_{i=0}^{depth} (1 - b q^i) with a bound on the omitted factor.

    ``log_bound`` bounds |log(full / partial)|; ``rel_bound`` bounds
    |full / partial - 1|.  Both are exact rationals.
    """

    value: mpq
    depth: int
    log_bound: Fraction
    rel_bound: Fraction


def poch_infinite(b, depth: int, q) -> PartialProduct:
    """(b; q)_inf truncated after the factor i = depth, with |q| < 1."""
    q = mpq(q)
    b = mpq(b)
    if abs(q) >= 1:
        raise ValueError("the infinite product needs |q| < 1")
    value = mpq(1)
    qi = mpq(1)
    for _ in range(depth + 1):
        value *= 1 - b * qi
        qi *= q
    aq, ab = Fraction(abs(q)), Fraction(abs(b))
    head = ab * aq ** (depth + 1)
    if head >= 1:
        return PartialProduct(value, depth, Fraction(10**9), Fraction(10**9))
    # sum_{i>depth} -log(1 - |b||q|^i) <= sum |b||q|^i / (1 - head)
    log_bound = head / ((1 - aq) * (1 - head))
    rel = log_bound / (1 - log_bound) if log_bound < 1 else Fraction(10**9)
    return PartialProduct(value, depth, log_bound, rel)


def product_ratio(numer, denom, depth: int, q) -> tuple[mpq, Fraction]:
    """prod (n)_inf / prod (d)_inf with a combined relative error bound."""
    value = mpq(1)
    log_total = Fraction(0)
    for b in numer:
        p = poch_infinite(b, depth, q)
        value *= p.value
        log_total += p.log_bound
    for b in denom:
        p = poch_infinite(b, depth, q)
        if p.value == 0:
            raise ZeroDivisionError("an infinite product in the denominator vanished")
        value /= p.value
        log_total += p.log_bound
    rel = log_total / (1 - log_total) if log_total < 1 else Fraction(10**9)
    return value, rel
