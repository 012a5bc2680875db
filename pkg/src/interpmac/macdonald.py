"""Interpolation Macdonald polynomials and their relatives.

A :class:`MacdonaldFamily` owns one coefficient field and one variable count
and memoizes every polynomial it builds:

* ``M(u)``        raw interpolation polynomial (Yang-Baxter recursion)
* ``M_oracle(u)`` the same, by solving the vanishing conditions directly
* ``E(u)``        nonsymmetric Macdonald polynomial, ``q^{n'(u)}`` times the top part of ``M(u)``
* ``Mhat(u)``, ``Ehat(u)``, ``Mprime_hat(u)`` normalized versions
* ``MS_hat``, ``P_hat``, ``MSprime_hat`` symmetrizations over an orbit
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hecke
from .compositions import (
    c_factors,
    compositions_upto,
    enumerate_compositions,
    format_composition,
    is_dominant,
    n_prime,
    n_stat,
    orbit,
    spectral_exponents,
    spectral_vector,
    tau,
)
from .field import CoeffField, DegenerateSpecialization
from .laurent import (
    LaurentPoly,
    LinearSystem,
    evaluate,
    solve_exact,
    substitute_scaled,
    top_homogeneous,
)

KINDS = ("M", "E", "Mprime", "MS", "P", "MSprime")


@dataclass
class MacdonaldRecord:
    kind: str
    label: tuple[int, ...]
    n: int
    poly: LaurentPoly
    hatted: bool
    fingerprint: str

    @property
    def name(self) -> str:
        return f"{self.kind}_n{self.n}_{format_composition(self.label)}"


class MacdonaldFamily:
    """All polynomials of one field and one ``n``, built on demand and memoized."""

    def __init__(self, field: CoeffField, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.field = field
        self.n = n
        self._M: dict = {(0,) * n: LaurentPoly.constant(n, field.one)}
        self._memo: dict = {}
        self._evals: dict = {}
        self._inverse: MacdonaldFamily | None = None

    # helpers --------------------------------------------------------------

    def _check(self, u) -> tuple[int, ...]:
        u = tuple(u)
        if len(u) != self.n or any(x < 0 for x in u):
            raise ValueError(f"{u} is not a composition with {self.n} parts")
        return u

    def one(self) -> LaurentPoly:
        return LaurentPoly.constant(self.n, self.field.one)

    def spec(self, u) -> tuple:
        return spectral_vector(u, self.field)

    def inverse_family(self) -> MacdonaldFamily:
        """The family over the same field with (q, t) -> (1/q, 1/t)."""
        if self._inverse is None:
            self._inverse = MacdonaldFamily(self.field.inverted(), self.n)
            self._inverse._inverse = self
        return self._inverse

    def norm(self, u):
        """q^{n'(u)} t^{n(u)} / c'_u, the factor taking M_u to its hatted form."""
        key = ("norm", u)
        val = self._memo.get(key)
        if val is None:
            cp = c_factors(u, self.field)[0]
            val = self.field.qt(n_prime(u), n_stat(u)) / cp
            self._memo[key] = val
        return val

    def _cached(self, key, build):
        val = self._memo.get(key)
        if val is None:
            val = build()
            self._memo[key] = val
        return val

    # construction ---------------------------------------------------------

    def M(self, u) -> LaurentPoly:
        """M_u by the recursion through T_i steps and the raising operator."""
        u = self._check(u)
        val = self._M.get(u)
        if val is not None:
            return val
        F = self.field
        for i in range(self.n - 1):
            if u[i] > u[i + 1]:
                prev = u[:i] + (u[i + 1], u[i]) + u[i + 2 :]
                base = self.M(prev)
                (a1, b1), (a2, b2) = spectral_exponents(prev)[i : i + 2]
                ratio = F.qt(a2 - a1, b2 - b1)
                if ratio == F.one:
                    raise DegenerateSpecialization(f"spectral collision while building M{u}")
                coef = (F.t - F.one) / (ratio - F.one)
                val = hecke.apply_Ti(base, i + 1, F) + base.scale(coef)
                break
        else:
            prev = (u[-1] - 1,) + u[:-1]
            val = hecke.apply_phi(self.M(prev), F)
        self._M[u] = val
        return val

    def M_oracle(self, u) -> LaurentPoly:
        """M_u from its vanishing conditions and leading coefficient."""
        u = self._check(u)
        F = self.field
        monomials = list(compositions_upto(self.n, sum(u)))
        rows, rhs = [], []
        for v in monomials:
            if v == u:
                continue
            point = self.spec(v)
            rows.append([_monomial_value(m, point, F) for m in monomials])
            rhs.append(F.zero)
        rows.append([F.one if m == u else F.zero for m in monomials])
        rhs.append(F.qt(-n_prime(u), 0))
        sol = solve_exact(LinearSystem(rows, rhs, F.zero), fraction_free=F.symbolic)
        return LaurentPoly(self.n, dict(zip(monomials, sol)))

    def E(self, u) -> LaurentPoly:
        u = self._check(u)
        return self._cached(
            ("E", u), lambda: top_homogeneous(self.M(u)).scale(self.field.qt(n_prime(u), 0))
        )

    def E_eigen(self, u) -> LaurentPoly:
        """E_u as the normalized joint eigenvector of the Y_i^{-1} (no recursion used)."""
        u = self._check(u)
        F = self.field
        monomials = list(enumerate_compositions(self.n, sum(u)))
        spec = self.spec(u)
        rows, rhs = [], []
        images = []
        for m in monomials:
            mono = LaurentPoly.monomial(m, F.one)
            images.append([hecke.apply_Yi_inv(mono, i, F) for i in range(1, self.n + 1)])
        for i in range(self.n):
            ev = F.one / spec[i]
            for target in monomials:
                rows.append(
                    [
                        images[k][i].coeff(target, F.zero) - (ev if m == target else F.zero)
                        for k, m in enumerate(monomials)
                    ]
                )
                rhs.append(F.zero)
        rows.append([F.one if m == u else F.zero for m in monomials])
        rhs.append(F.one)
        sol = solve_exact(LinearSystem(rows, rhs, F.zero), fraction_free=F.symbolic)
        return LaurentPoly(self.n, dict(zip(monomials, sol)))

    def Mhat(self, u) -> LaurentPoly:
        u = self._check(u)
        return self._cached(("Mhat", u), lambda: self.M(u).scale(self.norm(u)))

    def Ehat(self, u) -> LaurentPoly:
        u = self._check(u)
        return self._cached(("Ehat", u), lambda: top_homogeneous(self.Mhat(u)))

    def Mprime_hat(self, u) -> LaurentPoly:
        """The dual polynomial: top part Ehat(u), zero at <-v> for |v| < |u|."""
        u = self._check(u)

        def build():
            F = self.field
            top = self.Ehat(u)
            k = sum(u)
            if k == 0:
                return top
            monomials = list(compositions_upto(self.n, k - 1))
            rows, rhs = [], []
            for v in monomials:
                point = self.spec(tuple(-x for x in v))
                rows.append([_monomial_value(m, point, F) for m in monomials])
                rhs.append(-evaluate(top, point, F.one))
            sol = solve_exact(LinearSystem(rows, rhs, F.zero), fraction_free=F.symbolic)
            return top + LaurentPoly(self.n, dict(zip(monomials, sol)))

        return self._cached(("Mprime", u), build)

    def MS_hat(self, lam) -> LaurentPoly:
        lam = self._partition(lam)
        return self._cached(("MS", lam), lambda: _sum(self.Mhat(u) for u in orbit(lam)))

    def P_hat(self, lam) -> LaurentPoly:
        lam = self._partition(lam)
        return self._cached(("P", lam), lambda: _sum(self.Ehat(u) for u in orbit(lam)))

    def MSprime_hat(self, lam) -> LaurentPoly:
        """tau_lam^{-1} (t^{n-1}/q)^{|lam|} MS_lam(t^{1-n} x; 1/q, 1/t)."""
        lam = self._partition(lam)

        def build():
            F = self.field
            inv = self.inverse_family().MS_hat(lam)
            k = sum(lam)
            pref = F.qt(-k, (self.n - 1) * k) / tau(lam, F)
            return inv.scale_variables(F.qt(0, 1 - self.n)).scale(pref)

        return self._cached(("MSprime", lam), build)

    def _partition(self, lam) -> tuple[int, ...]:
        lam = self._check(lam)
        if not is_dominant(lam):
            raise ValueError(f"{lam} is not a partition")
        return lam

    # evaluations ----------------------------------------------------------

    def Mhat_at_spec(self, v, u):
        """Mhat_v(<u>), memoized."""
        key = (v, u)
        val = self._evals.get(key)
        if val is None:
            val = evaluate(self.Mhat(v), self.spec(u), self.field.one)
            self._evals[key] = val
        return val

    def Ehat_at_zero(self, u):
        """Ehat_u(<0>)."""
        u = self._check(u)
        return self._cached(
            ("E0", u), lambda: evaluate(self.Ehat(u), self.spec((0,) * self.n), self.field.one)
        )

    def principal(self, poly: LaurentPoly) -> LaurentPoly:
        """poly(z <0>) as a polynomial in z (one-variable LaurentPoly)."""
        return substitute_scaled(poly, self.spec((0,) * self.n), self.field.one)

    # records --------------------------------------------------------------

    def record(self, kind: str, label, hatted: bool = True) -> MacdonaldRecord:
        label = self._check(label)
        F = self.field
        if kind == "M":
            poly = self.Mhat(label) if hatted else self.M(label)
        elif kind == "E":
            poly = self.Ehat(label) if hatted else self.E(label)
        elif kind == "Mprime":
            poly = self.Mprime_hat(label)
            hatted = True
        elif kind == "MS":
            poly = self.MS_hat(label)
            hatted = True
        elif kind == "P":
            poly = self.P_hat(label)
            hatted = True
        elif kind == "MSprime":
            poly = self.MSprime_hat(label)
            hatted = True
        else:
            raise ValueError(f"unknown kind {kind!r}")
        return MacdonaldRecord(kind, label, self.n, poly, hatted, F.fingerprint)


def normalize(rec: MacdonaldRecord, target: str, family: MacdonaldFamily) -> MacdonaldRecord:
    """Switch an M or E record between raw and hatted normalization."""
    if rec.kind not in ("M", "E"):
        raise ValueError("only M and E records have a raw form")
    want = target == "hatted"
    if target not in ("hatted", "raw"):
        raise ValueError(f"unknown target {target!r}")
    if rec.hatted == want:
        return rec
    u = rec.label
    F = family.field
    factor = family.norm(u) if rec.kind == "M" else F.qt(0, n_stat(u)) / c_factors(u, F)[0]
    if not want:
        factor = F.one / factor
    return MacdonaldRecord(rec.kind, u, rec.n, rec.poly.scale(factor), want, rec.fingerprint)


def _monomial_value(m, point, F):
    val = F.one
    for x, a in zip(point, m):
        if a:
            val = val * x**a
    return val


def _sum(polys) -> LaurentPoly:
    out = None
    for p in polys:
        out = p if out is None else out + p
    return out


def is_symmetric(p: LaurentPoly) -> bool:
    return all(p.swap(i) == p for i in range(1, p.n))
