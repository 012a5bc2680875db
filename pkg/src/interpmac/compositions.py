"""Compositions, their diagram statistics and composition q-shifted factorials.

Compositions are plain tuples of integers.  Cells are (row, column) pairs,
1-based as in the usual diagram convention: row i holds columns 1..u_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb

Composition = tuple[int, ...]


def parse_composition(text: str) -> Composition:
    return tuple(int(part) for part in text.split(","))


def format_composition(u) -> str:
    return ",".join(str(x) for x in u)


def dominant(u) -> Composition:
    """The partition u+ in the S_n-orbit of u."""
    return tuple(sorted(u, reverse=True))


def is_dominant(u) -> bool:
    return all(u[i] >= u[i + 1] for i in range(len(u) - 1))


def contained(v, u) -> bool:
    """Diagram containment v ⊆ u."""
    return all(a <= b for a, b in zip(v, u))


@lru_cache(maxsize=None)
def leg_colengths(u: Composition) -> tuple[int, ...]:
    """l'(i) for every row, empty rows included; works for any integer vector."""
    n = len(u)
    return tuple(
        sum(1 for k in range(i + 1, n) if u[k] > u[i]) + sum(1 for k in range(i) if u[k] >= u[i])
        for i in range(n)
    )


@lru_cache(maxsize=None)
def spectral_exponents(u: Composition) -> tuple[tuple[int, int], ...]:
    """<u> as exponent pairs: entry i is q^{u_i} t^{n-1-l'(i)}.

    Negative entries are allowed (the extension of <.> to integral vectors).
    """
    n = len(u)
    return tuple((u[i], n - 1 - lp) for i, lp in enumerate(leg_colengths(u)))


def spectral_vector(u, field) -> tuple:
    return tuple(field.qt(a, b) for a, b in spectral_exponents(tuple(u)))


def spectral_exponents_by_permutation(u: Composition) -> tuple[tuple[int, int], ...]:
    """Independent route to <u>: minimal-length sigma with u = u+ sigma.

    Among the permutations of q^{u+} t^delta matching u, pick the one where equal
    parts carry decreasing t-exponents left to right.
    """
    n = len(u)
    best = None
    for perm in permutations(range(n)):
        # entry i takes the cell (u+_{perm(i)}, delta_{perm(i)})
        lam = dominant(u)
        if any(lam[perm[i]] != u[i] for i in range(n)):
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if best is None or inversions < best[0]:
            best = (inversions, perm)
    perm = best[1]
    return tuple((u[i], n - 1 - perm[i]) for i in range(n))


@dataclass(frozen=True)
class CellStats:
    row: int
    col: int
    arm: int
    arm_colength: int
    leg: int
    leg_colength: int


@dataclass(frozen=True)
class CompositionStats:
    cells: tuple[CellStats, ...]
    n_stat: int  # n(u) = sum of legs
    n_prime: int  # n'(u) = sum of arms
    sigma: tuple[int, ...]  # sigma_u(i) = l'(i) + 1, so u_i = u+_{sigma(i)}

    def tau_exponents(self, u) -> tuple[int, int, int]:
        """(sign exponent, q exponent, t exponent) of tau_u."""
        return sum(u), self.n_prime, -composition_stats(dominant(u)).n_stat


@lru_cache(maxsize=None)
def composition_stats(u: Composition) -> CompositionStats:
    n = len(u)
    lps = leg_colengths(u)
    cells = []
    for i in range(n):
        for j in range(1, u[i] + 1):
            leg = sum(1 for k in range(i + 1, n) if j <= u[k] <= u[i]) + sum(
                1 for k in range(i) if j <= u[k] + 1 <= u[i]
            )
            cells.append(CellStats(i + 1, j, u[i] - j, j - 1, leg, lps[i]))
    return CompositionStats(
        cells=tuple(cells),
        n_stat=sum(c.leg for c in cells),
        n_prime=sum(comb(x, 2) for x in u),
        sigma=tuple(lp + 1 for lp in lps),
    )


def n_stat(u) -> int:
    return composition_stats(tuple(u)).n_stat


def n_prime(u) -> int:
    return sum(comb(x, 2) for x in u)


def tau(u, field):
    """tau_u = (-1)^{|u|} q^{n'(u)} t^{-n(u+)}."""
    u = tuple(u)
    val = field.qt(n_prime(u), -n_stat(dominant(u)))
    return -val if sum(u) % 2 else val


def poch_cell_factors(u) -> list[tuple[int, int]]:
    """Exponent pairs (a'(s), -l'(s)) so that (b)_u = prod (1 - b q^i t^j)."""
    return [(c.arm_colength, -c.leg_colength) for c in composition_stats(tuple(u)).cells]


def poch(b, u, field):
    """(b; q, t)_u for a field element b."""
    out = field.one
    for i, j in poch_cell_factors(u):
        out = out * (field.one - b * field.qt(i, j))
    return out


def poch_multi(params, u, field):
    """(b_1, ..., b_N)_u."""
    out = field.one
    for b in params:
        out = out * poch(b, u, field)
    return out


def poch_q(b, k: int, field):
    """The ordinary (b; q)_k."""
    out = field.one
    for i in range(k):
        out = out * (field.one - b * field.qt(i, 0))
    return out


def poch_poly(u, field):
    """(b)_u as a polynomial in the indeterminate b (a one-variable LaurentPoly)."""
    from .laurent import LaurentPoly

    out = LaurentPoly.constant(1, field.one)
    for i, j in poch_cell_factors(u):
        out = out * LaurentPoly(1, {(0,): field.one, (1,): -field.qt(i, j)})
    return out


def c_factors(u, field):
    """(c'_u, c_u, b_u)."""
    cp, c = field.one, field.one
    for s in composition_stats(tuple(u)).cells:
        cp = cp * (field.one - field.qt(s.arm + 1, s.leg))
        c = c * (field.one - field.qt(s.arm, s.leg + 1))
    return cp, c, c / cp


@lru_cache(maxsize=None)
def enumerate_compositions(n: int, degree: int) -> tuple[Composition, ...]:
    """All u in N^n with |u| = degree, lexicographically increasing."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if n == 1:
        return ((degree,),)
    out = []
    for first in range(degree + 1):
        for rest in enumerate_compositions(n - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions_upto(n: int, degree: int) -> tuple[Composition, ...]:
    """All u with |u| <= degree, graded by |u| then lexicographic."""
    out: list[Composition] = []
    for d in range(degree + 1):
        out.extend(enumerate_compositions(n, d))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n: int, degree: int) -> tuple[Composition, ...]:
    """Dominant u in N^n with |u| = degree."""
    return tuple(u for u in enumerate_compositions(n, degree) if is_dominant(u))


@lru_cache(maxsize=None)
def orbit(lam: Composition) -> tuple[Composition, ...]:
    """All compositions with u+ = lam, lexicographically increasing."""
    return tuple(sorted(set(permutations(lam))))
