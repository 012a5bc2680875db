"""Generalized q-binomial coefficients, connection coefficients and structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .compositions import (
    compositions_upto,
    enumerate_compositions,
    orbit,
    partitions,
    poch,
    tau,
)
from .laurent import LinearSystem, solve_exact
from .macdonald import MacdonaldFamily


def qbinom(family: MacdonaldFamily, u, v, *, inverse: bool = False):
    """[u v] = Mhat_v(<u>) / Mhat_v(<v>); ``inverse`` uses (1/q, 1/t)."""
    fam = family.inverse_family() if inverse else family
    u, v = tuple(u), tuple(v)
    return fam.Mhat_at_spec(v, u) / fam.Mhat_at_spec(v, v)


def sym_qbinom(family: MacdonaldFamily, lam, mu, *, u=None, inverse: bool = False):
    """(lam mu) as the orbit sum of [u v] over v+ = mu, for a chosen u with u+ = lam."""
    u = tuple(lam) if u is None else tuple(u)
    if tuple(sorted(u, reverse=True)) != tuple(lam):
        raise ValueError("u must lie in the orbit of lam")
    total = family.field.zero
    for v in orbit(tuple(mu)):
        total = total + qbinom(family, u, v, inverse=inverse)
    return total


@dataclass
class ConnectionEntry:
    """E_{uv}(a, b) = sum_j coeffs[j] a^j b^{degree - j}."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    degree: int
    coeffs: dict[int, object] = dc_field(default_factory=dict)
    polynomial: bool = True  # False if a negative power of a or b appeared

    def __call__(self, a, b, zero=0):
        total = zero
        for j, c in self.coeffs.items():
            k = self.degree - j
            # explicit branches: sympy refuses 0**0
            term = c * a**j if j else c
            total = total + (term * b**k if k else term)
        return total

    def to_json(self, field) -> dict:
        return {
            "u": ",".join(map(str, self.u)),
            "v": ",".join(map(str, self.v)),
            "value": self.text(field),
        }

    def text(self, field) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in sorted(self.coeffs, reverse=True):
            k = self.degree - j
            mono = "*".join(
                s for s in (_power("a", j), _power("b", k)) if s
            )
            c = field.format(self.coeffs[j])
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def _power(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


class ConnectionTable:
    """All E_{uv}(a, b) with |u| <= D, by exact change of basis.

    With B the matrix of the basis {Mhat_v} on monomials of degree <= D,
    c_{uv}(a, b) = sum_k (a/b)^k C_k[u, v] where C_k collects the degree-k
    coefficients of Mhat_u against B^{-1}.
    """

    def __init__(self, family: MacdonaldFamily, D: int):
        self.family = family
        self.D = D
        F = family.field
        self.comps = list(compositions_upto(family.n, D))
        index = {m: k for k, m in enumerate(self.comps)}
        N = len(self.comps)
        B = [[F.zero] * N for _ in range(N)]
        for r, v in enumerate(self.comps):
            for m, c in family.Mhat(v).terms.items():
                B[r][index[m]] = c
        ident = [[F.one if i == j else F.zero for j in range(N)] for i in range(N)]
        self.Binv = solve_exact(LinearSystem(B, ident, F.zero), fraction_free=F.symbolic)
        self._index = index
        self._entries: dict = {}

    def entry(self, u, v) -> ConnectionEntry:
        u, v = tuple(u), tuple(v)
        key = (u, v)
        e = self._entries.get(key)
        if e is not None:
            return e
        fam = self.family
        F = fam.field
        if sum(u) > self.D or sum(v) > self.D:
            raise ValueError(f"entry ({u}, {v}) exceeds the table degree {self.D}")
        col = self._index[v]
        shells: dict[int, object] = {}
        for m, c in fam.Mhat(u).terms.items():
            x = self.Binv[self._index[m]][col]
            if x:
                k = sum(m)
                shells[k] = shells.get(k, F.zero) + c * x
        ratio = fam.Ehat_at_zero(v) / fam.Ehat_at_zero(u)
        du, dv = sum(u), sum(v)
        coeffs, poly = {}, True
        for k, c in shells.items():
            if not c:
                continue
            j = k - dv
            if j < 0 or du - k < 0:
                poly = False
            coeffs[j] = c * ratio
        e = ConnectionEntry(u, v, du - dv, coeffs, poly)
        self._entries[key] = e
        return e

    def value(self, u, v, a, b):
        return self.entry(u, v)(a, b, self.family.field.zero)


# explicit formulas ----------------------------------------------------------


def skew_er(family: MacdonaldFamily, u, w, a, b):
    """E_{uw}(a, b) as a sum over v of q-binomials (first explicit form)."""
    F = family.field
    u, w = tuple(u), tuple(w)
    total = F.zero
    for v in compositions_upto(family.n, sum(u)):
        x = qbinom(family, u, v, inverse=True)
        if not x:
            continue
        y = qbinom(family, v, w)
        if not y:
            continue
        total = total + (
            tau(w, F) / tau(v, F) * poch(b, u, F) * poch(a, v, F) / (poch(b, v, F) * poch(a, w, F))
        ) * x * y
    return total


def skew_erb(family: MacdonaldFamily, u, w, a, b):
    """E_{uw}(a, b) as a polynomial sum (second explicit form)."""
    F = family.field
    u, w = tuple(u), tuple(w)
    total = F.zero
    for v in compositions_upto(family.n, sum(u)):
        x = qbinom(family, u, v, inverse=True)
        if not x:
            continue
        y = qbinom(family, v, w)
        if not y:
            continue
        total = total + a ** (sum(v) - sum(w)) * b ** (sum(u) - sum(v)) * (
            tau(u, F) / tau(v, F)
        ) * x * y
    return total


# structure constants ----------------------------------------------------------


class StructureConstants:
    """g^u_{vw} with Ehat_v Ehat_w = sum_u g^u_{vw} Ehat_u, for |v| + |w| <= D."""

    def __init__(self, family: MacdonaldFamily, D: int):
        self.family = family
        self.D = D
        self._inv: dict[int, tuple] = {}
        self._g: dict = {}

    def _basis(self, d):
        got = self._inv.get(d)
        if got is None:
            F = self.family.field
            comps = list(enumerate_compositions(self.family.n, d))
            index = {m: k for k, m in enumerate(comps)}
            N = len(comps)
            B = [[self.family.Ehat(u).coeff(m, F.zero) for m in comps] for u in comps]
            ident = [[F.one if i == j else F.zero for j in range(N)] for i in range(N)]
            inv = solve_exact(LinearSystem(B, ident, F.zero), fraction_free=F.symbolic)
            got = (comps, index, inv)
            self._inv[d] = got
        return got

    def row(self, v, w) -> dict:
        """{u: g^u_{vw}} over all u with |u| = |v| + |w|."""
        v, w = tuple(v), tuple(w)
        key = (v, w)
        got = self._g.get(key)
        if got is not None:
            return got
        d = sum(v) + sum(w)
        if d > self.D:
            raise ValueError(f"|v| + |w| = {d} exceeds {self.D}")
        F = self.family.field
        comps, index, inv = self._basis(d)
        prod = self.family.Ehat(v) * self.family.Ehat(w)
        got = {}
        for k, u in enumerate(comps):
            s = F.zero
            for m, c in prod.terms.items():
                x = inv[index[m]][k]
                if x:
                    s = s + c * x
            got[u] = s
        self._g[key] = got
        return got

    def g(self, u, v, w):
        u = tuple(u)
        if sum(u) != sum(v) + sum(w):
            return self.family.field.zero
        return self.row(v, w)[u]


def symmetric_structure_constants(family: MacdonaldFamily, lam, mu, nu):
    """f^lam_{mu nu} with Phat_mu Phat_nu = sum f^lam_{mu nu} Phat_lam."""
    F = family.field
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    d = sum(mu) + sum(nu)
    if sum(lam) != d:
        return F.zero
    basis = list(partitions(family.n, d))
    B = [[family.P_hat(p).coeff(m, F.zero) for m in basis] for p in basis]
    prod = family.P_hat(mu) * family.P_hat(nu)
    rhs = [prod.coeff(m, F.zero) for m in basis]
    # solve x B = rhs, i.e. B^T x = rhs
    BT = [list(col) for col in zip(*B)]
    sol = solve_exact(LinearSystem(BT, rhs, F.zero), fraction_free=F.symbolic)
    return sol[basis.index(lam)]


def skew_principal(table: ConnectionTable, u, mu, a, b):
    """P_{lam/mu}[(a - b)/(1 - t)] (hatted) as the orbit sum of E_{uv}(a, b) over v+ = mu."""
    total = table.family.field.zero
    for v in orbit(tuple(mu)):
        total = total + table.value(u, v, a, b)
    return total
