"""Exact coefficient fields.

Two modes share one interface:

* symbolic: the rational function field Q(q, t) (plus a few free scalar
  indeterminates a, b, c, d, e, z), backed by sympy's sparse ``FracField``;
* specialized: q and t fixed to exact rationals, elements are ``gmpy2.mpq``.

Elements are the raw backend objects; they support ``+ - * / **`` and ``==``
directly.  The :class:`CoeffField` carries the mode, the images of q and t,
text conversion and the cache fingerprint.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from gmpy2 import mpq
from sympy import ZZ, Symbol
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.fields import FracElement, field
from sympy.polys.euclidtools import dmp_inner_gcd
from sympy.polys.heuristicgcd import heugcd
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import HeuristicGCDFailed
from sympy.polys.rings import PolyElement

SYMBOLIC_GENS = ("q", "t", "a", "b", "c", "d", "e", "z")

FieldElement = Union[mpq, FracElement]


def _gcd_ZZ(f, g):
    # Sparse integer gcd in sympy is heuristic-only and gives up on some
    # multivariate inputs; the dense routine retries with a PRS gcd.
    try:
        return heugcd(f, g)
    except HeuristicGCDFailed:
        R = f.ring
        h, cff, cfg = dmp_inner_gcd(f.to_dense(), g.to_dense(), R.ngens - 1, R.domain)
        return R.from_dense(h), R.from_dense(cff), R.from_dense(cfg)


PolyElement._gcd_ZZ = _gcd_ZZ


class FieldDivisionError(ZeroDivisionError):
    """Division by a zero field element."""

    def __init__(self, numerator, denominator):
        super().__init__(f"division by zero: ({numerator}) / ({denominator})")
        self.numerator = numerator
        self.denominator = denominator


class DegenerateSpecialization(ArithmeticError):
    """A declared denominator vanished at the chosen specialization."""


@lru_cache(maxsize=None)
def _symbolic_field():
    K, *gens = field(",".join(SYMBOLIC_GENS), ZZ, order=grlex)
    return K, dict(zip(SYMBOLIC_GENS, gens))


class CoeffField:
    """A coefficient field with distinguished elements ``q`` and ``t``."""

    def __init__(self, *, symbolic: bool, q, t, fingerprint: str, base=None):
        self.symbolic = symbolic
        self.q = q
        self.t = t
        self.fingerprint = fingerprint
        self._base = base
        self._powers: dict[tuple[int, int], Any] = {}
        if symbolic:
            K, _ = _symbolic_field()
            self.zero, self.one = K.zero, K.one
        else:
            self.zero, self.one = mpq(0), mpq(1)

    # construction ---------------------------------------------------------

    @classmethod
    def symbolic_field(cls) -> CoeffField:
        _, g = _symbolic_field()
        return cls(symbolic=True, q=g["q"], t=g["t"], fingerprint="symbolic")

    @classmethod
    def specialized(cls, q, t) -> CoeffField:
        q, t = mpq(q), mpq(t)
        if q == 0 or t == 0:
            raise ValueError("q and t must be nonzero")
        return cls(symbolic=False, q=q, t=t, fingerprint=f"{q},{t}")

    @classmethod
    def from_specialization(cls, spec: Specialization) -> CoeffField:
        return cls.specialized(spec.q_value, spec.t_value)

    def inverted(self) -> CoeffField:
        """The same field with (q, t) replaced by (1/q, 1/t)."""
        if self._base is not None:
            return self._base
        if self.symbolic:
            fp = "symbolic-inverse" if self.fingerprint == "symbolic" else "symbolic"
        else:
            fp = f"{1 / self.q},{1 / self.t}"
        return CoeffField(
            symbolic=self.symbolic, q=1 / self.q, t=1 / self.t, fingerprint=fp, base=self
        )

    # elements -------------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, str):
            return self.parse(value)
        if self.symbolic:
            K, _ = _symbolic_field()
            if isinstance(value, (Fraction, type(mpq(0)))):
                return K(int(value.numerator)) / K(int(value.denominator))
            return K(value)
        if isinstance(value, FracElement):
            raise TypeError("cannot coerce a symbolic element into a specialized field")
        return mpq(value)

    def param(self, name: str) -> FieldElement:
        """The free scalar indeterminate ``name`` (symbolic mode only)."""
        if not self.symbolic:
            raise ValueError("free indeterminates exist only in symbolic mode")
        if name in ("q", "t"):
            raise ValueError("q and t are not free parameters")
        return _symbolic_field()[1][name]

    def qt(self, i: int, j: int) -> FieldElement:
        """q^i t^j (negative exponents allowed)."""
        key = (i, j)
        val = self._powers.get(key)
        if val is None:
            val = self.q**i * self.t**j
            self._powers[key] = val
        return val

    def is_zero(self, x) -> bool:
        return not x

    def __repr__(self):
        return f"CoeffField({self.fingerprint!r})"

    # text -----------------------------------------------------------------

    def format(self, x, *, always_fraction: bool = False) -> str:
        """Textual form, e.g. ``(q*t - 1)/(q - 1)``; ``always_fraction`` gives ``(n)/(d)``."""
        if self.symbolic:
            num, den = _format_poly(x.numer), _format_poly(x.denom)
        else:
            x = mpq(x)
            num, den = str(x.numerator), str(x.denominator)
        if always_fraction:
            return f"({num})/({den})"
        if den == "1":
            return num
        return f"({num})/({den})" if _compound(num) else f"{num}/({den})" if _compound(den) else f"{num}/{den}"

    def parse(self, text: str) -> FieldElement:
        if self.symbolic:
            K, gens = _symbolic_field()
            local = {name: Symbol(name) for name in gens}
            expr = parse_expr(text.replace("^", "**"), local_dict=local)
            return K.from_expr(expr)
        m = re.fullmatch(r"\s*\(?\s*(-?\d+)\s*\)?\s*(?:/\s*\(?\s*(-?\d+)\s*\)?)?\s*", text)
        if m is None:
            raise ValueError(f"not a rational literal: {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise FieldDivisionError(num, den)
        return mpq(num, den)

    def evaluate_symbolic(self, x: FracElement, values: dict[str, Any]) -> mpq:
        """Specialize a symbolic element by substituting rationals for its generators."""
        return _eval_poly(x.numer, values) / _eval_poly(x.denom, values)


def _compound(s: str) -> bool:
    return " " in s or s.startswith("-")


def _format_poly(p) -> str:
    terms = p.terms()  # already sorted descending in grlex with q > t > ...
    if not terms:
        return "0"
    out = []
    for k, (monom, coeff) in enumerate(terms):
        coeff = int(coeff)
        factors = []
        for name, e in zip(SYMBOLIC_GENS, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        if k == 0:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append((" - " if coeff < 0 else " + ") + body)
    return "".join(out)


def _eval_poly(p, values: dict[str, Any]) -> mpq:
    vals = [mpq(values[name]) if name in values else None for name in SYMBOLIC_GENS]
    total = mpq(0)
    for monom, coeff in p.terms():
        term = mpq(int(coeff))
        for v, e in zip(vals, monom):
            if e:
                if v is None:
                    raise KeyError("missing value for a generator present in the element")
                term *= v**e
        total += term
    return total


def field_arith(a, b, op: str):
    """Apply ``op`` in {add, sub, mul, div} to two elements of the same field."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise FieldDivisionError(a, b)
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# specializations ----------------------------------------------------------


@dataclass(frozen=True)
class Specialization:
    q_value: Fraction
    t_value: Fraction
    seed: int


def guard_ok(q, t, n: int, dmax: int) -> bool:
    """True when q^i t^j != 1 on the box |i| <= 2*dmax, |j| <= 2*n, (i, j) != (0, 0)."""
    q, t = mpq(q), mpq(t)
    if q == 0 or t == 0 or abs(q) >= 1:
        return False
    for i in range(-2 * dmax, 2 * dmax + 1):
        qi = q**i
        for j in range(-2 * n, 2 * n + 1):
            if (i or j) and qi * t**j == 1:
                return False
    return True


def draw_specialization(seed: int, n: int, dmax: int) -> Specialization:
    """Deterministic guarded (q, t) for a seed; q in (0, 1/3], t in (0, 1)."""
    if n < 1 or dmax < 0:
        raise ValueError("need n >= 1 and Dmax >= 0")
    rng = random.Random(f"qt:{seed}")
    # dmax is bounded below by 1 so q = q^1 t^0 = 1 is always excluded
    box = max(dmax, 1)
    while True:
        qd = rng.randint(4, 13)
        q = Fraction(rng.randint(1, qd // 3), qd)
        td = rng.randint(3, 13)
        t = Fraction(rng.randint(1, td - 1), td)
        if guard_ok(q, t, n, box):
            return Specialization(q, t, seed)


NUMERIC_Q_RANGE = (Fraction(1, 13), Fraction(1, 10))
NUMERIC_T_RANGE = (Fraction(2, 3), Fraction(3, 4))


def draw_numeric_specialization(seed: int, n: int, dmax: int) -> Specialization:
    """Guarded (q, t) for truncated-series checks: small q, t bounded away from 0 and 1.

    Shell ratios of the gl_n series scale with q and with t^{1-n}; these ranges
    keep five shells past the leading one enough for a 1e-8 comparison.
    """
    if n < 1 or dmax < 0:
        raise ValueError("need n >= 1 and Dmax >= 0")
    rng = random.Random(f"qt-numeric:{seed}")
    box = max(dmax, 1)
    (qlo, qhi), (tlo, thi) = NUMERIC_Q_RANGE, NUMERIC_T_RANGE
    qs = [Fraction(p, d) for d in range(2, 14) for p in range(1, d) if qlo <= Fraction(p, d) <= qhi]
    ts = [Fraction(p, d) for d in range(2, 14) for p in range(1, d) if tlo <= Fraction(p, d) <= thi]
    qs, ts = sorted(set(qs)), sorted(set(ts))
    while True:
        q, t = rng.choice(qs), rng.choice(ts)
        if guard_ok(q, t, n, box):
            return Specialization(q, t, seed)
