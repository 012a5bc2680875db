"""Sparse multivariate Laurent polynomials over a coefficient field, and exact solves."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


class LaurentPoly:
    """Immutable sparse Laurent polynomial in x_1..x_n.

    ``terms`` maps exponent tuples (negatives allowed) to nonzero coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Exponent, object] | None = None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, n, terms):
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def constant(cls, n: int, c) -> LaurentPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int, one) -> LaurentPoly:
        """x_i with 1-based i."""
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): one})

    @classmethod
    def monomial(cls, exp: Sequence[int], c) -> LaurentPoly:
        return cls(len(exp), {tuple(exp): c})

    # ring operations ------------------------------------------------------

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(self.n, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return LaurentPoly(self.n, out)

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.n, {tuple(k * a for a in e): c**k})
        out = None
        base = self
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        if out is None:
            one = next(iter(self.terms.values())) ** 0 if self.terms else 1
            return LaurentPoly.constant(self.n, one)
        return out

    def scale(self, c) -> LaurentPoly:
        if not c:
            return LaurentPoly._raw(self.n, {})
        return LaurentPoly(self.n, {e: v * c for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial x^exp."""
        return LaurentPoly._raw(
            self.n, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        raise TypeError("LaurentPoly is not hashable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, terms={len(self.terms)})"

    # structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(min(e, default=0) >= 0 for e in self.terms)

    def degree(self) -> int:
        """Maximal total degree (-1 for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, k: int) -> LaurentPoly:
        return LaurentPoly._raw(self.n, {e: c for e, c in self.terms.items() if sum(e) == k})

    def coeff(self, exp: Sequence[int], zero=0):
        return self.terms.get(tuple(exp), zero)

    def permute(self, perm: Sequence[int]) -> LaurentPoly:
        """Substitute x_i -> x_{perm[i]} (0-based perm)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return LaurentPoly._raw(self.n, out)

    def swap(self, i: int) -> LaurentPoly:
        """f^{s_i}: exchange x_i and x_{i+1} (1-based i)."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return LaurentPoly._raw(self.n, out)

    def scale_variables(self, a) -> LaurentPoly:
        """f(a x) for a scalar a."""
        if not a:
            return LaurentPoly(self.n, {e: c for e, c in self.terms.items() if not any(e)})
        return LaurentPoly(self.n, {e: c * a ** sum(e) for e, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        """Terms in descending graded-lex order on exponents."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def map_coeffs(self, fn) -> LaurentPoly:
        return LaurentPoly(self.n, {e: fn(c) for e, c in self.terms.items()})

    # text and JSON --------------------------------------------------------

    def to_text(self, field) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            neg = False
            if not mono:
                body = field.format(c)
                if body.startswith("-") and " " not in body:
                    neg, body = True, body[1:]
            elif c == field.one:
                body = mono
            elif c == -field.one:
                neg, body = True, mono
            else:
                s = field.format(c)
                if s.startswith("-") and " " not in s and "/" not in s:
                    neg, s = True, s[1:]
                body = (f"({s})" if (" " in s or "/" in s) else s) + "*" + mono
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def to_json(self, field) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exp": list(e), "coeff": field.format(c, always_fraction=True)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict, field) -> LaurentPoly:
        n = data["n"]
        terms = {}
        for item in data["terms"]:
            exp = tuple(int(a) for a in item["exp"])
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not have arity {n}")
            terms[exp] = field.parse(item["coeff"])
        return cls(n, terms)

    def dumps(self, field) -> str:
        return json.dumps(self.to_json(field), sort_keys=True)


def evaluate(p: LaurentPoly, point: Sequence, one=None):
    """Exact evaluation at a point of field elements."""
    if len(point) != p.n:
        raise ValueError("point has the wrong arity")
    if one is None:
        one = point[0] ** 0 if point else 1
    cache: list[dict[int, object]] = [dict() for _ in range(p.n)]
    total = one - one
    for e, c in p.terms.items():
        term = c
        for i, a in enumerate(e):
            if a:
                pw = cache[i].get(a)
                if pw is None:
                    x = point[i]
                    if a < 0 and not x:
                        raise ZeroDivisionError(f"x{i + 1} = 0 meets a negative exponent")
                    pw = x**a
                    cache[i][a] = pw
                term = term * pw
        total = total + term
    return total


def top_homogeneous(p: LaurentPoly) -> LaurentPoly:
    return p.homogeneous_part(p.degree()) if p.terms else p


def substitute_scaled(p: LaurentPoly, point: Sequence, var_one) -> LaurentPoly:
    """p(z * point) as a one-variable Laurent polynomial in z."""
    out: dict = {}
    for e, c in p.terms.items():
        term = c
        for i, a in enumerate(e):
            if a:
                term = term * point[i] ** a
        k = (sum(e),)
        s = out.get(k)
        out[k] = term if s is None else s + term
    return LaurentPoly(1, out)


# exact linear algebra ------------------------------------------------------


class SingularSystemError(ArithmeticError):
    """No pivot found, or the system is inconsistent."""

    def __init__(self, message: str, stage: int):
        super().__init__(message)
        self.stage = stage


@dataclass
class LinearSystem:
    matrix: list[list]
    rhs: list  # a vector, or a list of rows when solving for several right-hand sides
    zero: object = 0

    def __post_init__(self):
        rows = len(self.matrix)
        if rows and any(len(r) != len(self.matrix[0]) for r in self.matrix):
            raise ValueError("ragged matrix")
        if len(self.rhs) != rows:
            raise ValueError("right-hand side length does not match the matrix")


def solve_exact(sys: LinearSystem, *, fraction_free: bool = False) -> list:
    """Unique exact solution of A x = b.

    ``rhs`` may be a vector or a list of rows (one per equation) giving several
    right-hand sides at once.  ``fraction_free`` selects Bareiss elimination.
    The solution is checked by substitution before it is returned.
    """
    A = sys.matrix
    m = len(A)
    ncols = len(A[0]) if m else 0
    multi = bool(sys.rhs) and isinstance(sys.rhs[0], (list, tuple))
    B = [list(r) if multi else [r] for r in sys.rhs]
    if ncols > m:
        raise SingularSystemError(f"underdetermined: {m} equations, {ncols} unknowns", 0)
    M = [list(A[i]) + B[i] for i in range(m)]
    if fraction_free:
        _bareiss(M, ncols)
    else:
        _gauss(M, ncols)
    width = len(B[0]) if B else 0
    for r in range(ncols, m):
        if any(M[r][ncols + k] for k in range(width)):
            raise SingularSystemError(f"inconsistent equation at row {r}", r)
    X = [[None] * width for _ in range(ncols)]
    for r in range(ncols - 1, -1, -1):
        piv = M[r][r]
        for k in range(width):
            s = M[r][ncols + k]
            for c in range(r + 1, ncols):
                if M[r][c]:
                    s = s - M[r][c] * X[c][k]
            X[r][k] = s / piv
    for i in range(m):
        for k in range(width):
            s = sys.zero
            for c in range(ncols):
                if A[i][c]:
                    s = s + A[i][c] * X[c][k]
            if s != B[i][k]:
                raise SingularSystemError(f"back-substitution check failed at row {i}", i)
    return X if multi else [x[0] for x in X]


def _pivot(M, r, ncols):
    for i in range(r, len(M)):
        if M[i][r]:
            if i != r:
                M[r], M[i] = M[i], M[r]
            return
    raise SingularSystemError(f"no pivot in column {r}", r)


def _gauss(M, ncols):
    width = len(M[0])
    for r in range(ncols):
        _pivot(M, r, ncols)
        inv = 1 / M[r][r]
        row = M[r]
        nz = [c for c in range(r + 1, width) if row[c]]
        for i in range(r + 1, len(M)):
            f = M[i][r]
            if f:
                f = f * inv
                Mi = M[i]
                Mi[r] = f - f
                for c in nz:
                    Mi[c] = Mi[c] - f * row[c]


def _bareiss(M, ncols):
    width = len(M[0])
    prev = None
    for r in range(ncols):
        _pivot(M, r, ncols)
        p = M[r][r]
        for i in range(r + 1, len(M)):
            Mi = M[i]
            f = Mi[r]
            for c in range(r + 1, width):
                val = p * Mi[c] - f * M[r][c]
                Mi[c] = val if prev is None else val / prev
            Mi[r] = f - f
        prev = p


def monomial_basis(n: int, degree: int) -> list[Exponent]:
    from .compositions import compositions_upto

    return list(compositions_upto(n, degree))


def coefficient_matrix(polys: Iterable[LaurentPoly], monomials: Sequence[Exponent], zero) -> list[list]:
    return [[p.terms.get(m, zero) for m in monomials] for p in polys]
