"""Per-instance state for identity checks: field, families, parameters and results."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from gmpy2 import mpq

from ..binomial import ConnectionTable, StructureConstants, qbinom, sym_qbinom
from ..compositions import compositions_upto, enumerate_compositions, poch, tau
from ..field import CoeffField
from ..laurent import LaurentPoly
from ..macdonald import MacdonaldFamily


class BalancingError(AssertionError):
    """A balancing condition on the parameters of a series does not hold."""


class Session:
    """Shares families and tables between the identities of one run."""

    def __init__(self):
        self._families: dict = {}
        self._tables: dict = {}
        self._structs: dict = {}

    def family(self, field: CoeffField, n: int) -> MacdonaldFamily:
        key = (field.fingerprint, n)
        fam = self._families.get(key)
        if fam is None:
            fam = MacdonaldFamily(field, n)
            self._families[key] = fam
        return fam

    def table(self, family: MacdonaldFamily, D: int) -> ConnectionTable:
        key = (family.field.fingerprint, family.n)
        tab = self._tables.get(key)
        if tab is None or tab.D < D:
            tab = ConnectionTable(family, D)
            self._tables[key] = tab
        return tab

    def structure(self, family: MacdonaldFamily, D: int) -> StructureConstants:
        key = (family.field.fingerprint, family.n)
        st = self._structs.get(key)
        if st is None or st.D < D:
            st = StructureConstants(family, D)
            self._structs[key] = st
        return st


@dataclass
class Outcome:
    checks: int = 0
    failures: list = dc_field(default_factory=list)
    rel_error: Fraction | None = None
    tail_bound: Fraction | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class Context:
    """Everything one identity check needs for one specialization."""

    def __init__(
        self,
        session: Session,
        field: CoeffField,
        n: int,
        D: int,
        rng: random.Random,
        *,
        numeric: bool = False,
        tolerance: Fraction = Fraction(1, 10**8),
    ):
        self.session = session
        self.field = field
        self.n = n
        self.D = D
        self.rng = rng
        self.numeric = numeric
        self.tolerance = tolerance
        self.fam = session.family(field, n)
        self.out = Outcome()
        self.params: dict[str, str] = {}
        self._drawn: set = set()

    # shorthands -------------------------------------------------------------

    @property
    def F(self) -> CoeffField:
        return self.field

    @property
    def symbolic(self) -> bool:
        return self.field.symbolic

    def comps(self, D: int | None = None):
        return compositions_upto(self.n, self.D if D is None else D)

    def shell(self, k: int):
        return enumerate_compositions(self.n, k)

    def zero_comp(self):
        return (0,) * self.n

    def table(self, D: int | None = None) -> ConnectionTable:
        return self.session.table(self.fam, self.D if D is None else D)

    def inverse_table(self, D: int | None = None) -> ConnectionTable:
        return self.session.table(self.fam.inverse_family(), self.D if D is None else D)

    def structure(self, D: int | None = None) -> StructureConstants:
        return self.session.structure(self.fam, self.D if D is None else D)

    def E(self, u, v, a, b):
        """E_{uv}(a, b)."""
        D = max(sum(u), self.D)
        return self.table(D).value(u, v, a, b)

    def qb(self, u, v):
        return qbinom(self.fam, u, v)

    def qbi(self, u, v):
        return qbinom(self.fam, u, v, inverse=True)

    def sqb(self, lam, mu, *, inverse=False):
        return sym_qbinom(self.fam, lam, mu, inverse=inverse)

    def tau(self, u):
        return tau(u, self.field)

    def poch(self, x, u):
        return poch(x, u, self.field)

    def pochs(self, xs, u):
        out = self.field.one
        for x in xs:
            out = out * poch(x, u, self.field)
        return out

    def tn1(self):
        return self.field.qt(0, self.n - 1)

    def const(self, c) -> LaurentPoly:
        return LaurentPoly.constant(self.n, c)

    def xvars(self) -> list[LaurentPoly]:
        return [LaurentPoly.variable(self.n, i, self.field.one) for i in range(1, self.n + 1)]

    # parameters -------------------------------------------------------------

    def param(self, name: str, *, small: bool | None = None, tiny: bool = False):
        """A free scalar: an indeterminate in symbolic mode, else a guarded rational.

        ``small`` caps the magnitude at 1/4 (the default in numeric mode) and
        ``tiny`` at 1/8, for series whose terms decay like products of two
        connection coefficients.
        """
        if self.symbolic:
            val = self.field.param(name)
            self.params[name] = name
            return val
        small = self.numeric if small is None else small
        # distinct scalars: a = b would collapse E_uv(a, b) to a delta
        while True:
            val = self._draw(small, tiny)
            if val not in self._drawn or len(self._drawn) >= 6:
                break
        self._drawn.add(val)
        self.params[name] = str(val)
        return val

    def derived(self, name: str, value):
        """Record a parameter computed from a constraint (never drawn)."""
        self.params[name] = self.field.format(value) if self.symbolic else str(value)
        return value

    def point(self, name: str = "x") -> tuple:
        """A numeric evaluation point for x with small entries."""
        vals = []
        for i in range(self.n):
            v = self._draw(True)
            if self.numeric:
                v = v * self._damping()
            vals.append(v)
        self.params[name] = ",".join(str(v) for v in vals)
        return tuple(vals)

    def _damping(self):
        """t^{n-1} when t < 1: shells grow like t^{1-n}, so numeric points shrink with it."""
        t = self.field.qt(0, 1)
        return t ** (self.n - 1) if t < 1 else self.field.one

    def _draw(self, small: bool, tiny: bool = False):
        while True:
            if tiny or (small and self.numeric):
                d = self.rng.randint(10, 13)
                p = 1
            elif small:
                # magnitude at most 1/4 for fast convergence
                d = self.rng.randint(8, 13)
                p = self.rng.randint(1, 2)
            else:
                d = self.rng.randint(2, 13)
                p = self.rng.randint(1, 13)
            if self.rng.random() < 0.5:
                p = -p
            val = mpq(p, d)
            if self.admissible(val):
                return val

    def admissible(self, val) -> bool:
        """False when (val)_v or (val t^{n-1})_v could vanish for |v| <= 2D."""
        if self.symbolic:
            return True
        if val in (0, 1, -1):
            return False
        F = self.field
        return not any(
            val * F.qt(i, -j) == 1 for i in range(2 * self.D + 1) for j in range(-self.n, self.n + 1)
        )

    # assertions -------------------------------------------------------------

    def equal(self, lhs, rhs, label: str) -> bool:
        self.out.checks += 1
        if lhs == rhs:
            return True
        if len(self.out.failures) < 5:
            self.out.failures.append(label)
        else:
            self.out.failures.append(None)
        return False

    def balanced(self, lhs, rhs, label: str) -> None:
        if lhs != rhs:
            raise BalancingError(f"balancing condition fails: {label}")
