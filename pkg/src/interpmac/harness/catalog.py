"""The identity catalog: one descriptor per verifiable identity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import exact, graded, numeric, one_variable

EXACT_FINITE = "exact-finite"
EXACT_GRADED = "exact-graded"
NUMERIC = "numeric"
MODES = (EXACT_FINITE, EXACT_GRADED, NUMERIC)


@dataclass(frozen=True)
class IdentityDescriptor:
    """What one catalog entry checks and at which sizes it runs.

    ``smoke`` and ``desk`` are lists of (n, D) runs.  ``params`` names the free
    scalars with their guard, in the order the check draws them.
    """

    id: str
    anchor: str
    mode: str
    check: Callable
    params: str = ""
    smoke: tuple = ((2, 2),)
    desk: tuple = ((2, 3), (3, 3))
    symbolic_ok: bool = True
    max_n: int = 4
    max_D: int = 8

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


_EXACT_DESK = ((1, 3), (2, 3), (3, 3))
_GRADED_DESK = ((2, 4), (3, 4))
_NUMERIC_SMOKE = ((2, 8),)
_NUMERIC_DESK = ((2, 8), (3, 6))


def _exact(id, anchor, check, params="", **kw):
    kw.setdefault("desk", _EXACT_DESK)
    kw.setdefault("max_D", 5)
    return IdentityDescriptor(id, anchor, EXACT_FINITE, check, params, **kw)


def _graded(id, anchor, check, params="", **kw):
    kw.setdefault("desk", _GRADED_DESK)
    kw.setdefault("max_D", 5)
    return IdentityDescriptor(id, anchor, EXACT_GRADED, check, params, **kw)


def _numeric(id, anchor, check, params):
    return IdentityDescriptor(
        id, anchor, NUMERIC, check, params,
        smoke=_NUMERIC_SMOKE, desk=_NUMERIC_DESK, symbolic_ok=False, max_n=3, max_D=8,
    )


_SMALL = "small guarded rationals, |.| <= 1/10, pairs within 1/8"
_FREE = "guarded rationals, (.)_v != 0 for |v| <= 2D"

CATALOG: tuple[IdentityDescriptor, ...] = (
    _exact("inv", "inversion of the two binomial theorems", exact.check_inv),
    _exact("orthogonality", "E_uv(a, b) E_vw(b, a) summed over v is a delta", exact.check_orthogonality, "a, b: " + _FREE),
    _exact("qcv1", "multiple q-Chu-Vandermonde sum I and its connection corollary", exact.check_qcv1, "a, b: " + _FREE),
    _exact("qcv2", "multiple q-Chu-Vandermonde sum II", exact.check_qcv2, "a, b: " + _FREE),
    _exact("qcv3", "multiple q-Chu-Vandermonde sum III", exact.check_qcv3, "a, b: " + _FREE),
    _exact("qcv4", "multiple q-Chu-Vandermonde sum IV", exact.check_qcv4, "a, b: " + _FREE),
    _exact("qps", "multiple q-Pfaff-Saalschuetz sum", exact.check_qps, "a, b, c: " + _FREE),
    _exact("er", "polynomiality of the connection coefficients", exact.check_er, "a, b: " + _FREE),
    _exact("erb", "the b -> infinity form and (a, b)-homogeneity of E_uv", exact.check_erb, "a, b: " + _FREE),
    _exact("sears", "multiple Sears transformation", exact.check_sears, "a, b, c, d, e: " + _FREE),
    _exact("sears2", "multiple Sears transformation, second form with abc = de", exact.check_sears2, "a, b, c, d; e = abc/d"),
    _exact("dual1", "duality of type I, per degree shell", exact.check_dual1, "a, b: " + _FREE),
    _exact("dual2", "duality of type II for skew coefficients", exact.check_dual2, "a, b, c, d: " + _FREE),
    _exact("eg", "expansion of Ehat_u times Ehat_v via structure constants", exact.check_eg),
    _exact("sahi1", "Sahi's binomial theorem", exact.check_sahi1, "a: " + _FREE),
    _exact("sahi2", "the dual binomial theorem", exact.check_sahi2, "a: " + _FREE),
    _exact("okounkov", "Okounkov's binomial formula", exact.check_okounkov),
    _exact("msdual", "symmetric duality of the binomial coefficients", exact.check_msdual),
    _exact("deltasym", "symmetric binomial coefficients as a delta", exact.check_deltasym),
    _exact("me", "Mhat_u expanded in the Ehat_v", exact.check_me),
    _exact("em", "Ehat_u expanded in the Mhat_v", exact.check_em),
    _exact("eqav", "a-weighted binomial sum over compositions", exact.check_eqav, "a: " + _FREE),
    _exact("ada", "its inverse over compositions", exact.check_ada, "a: " + _FREE),
    _exact("chi", "coefficientwise form of the gl_n binomial theorem", exact.check_chi),
    _exact("mprime-principal", "principal specialisation of Mhat'_u at a<0>", exact.check_mprime_principal, "a: " + _FREE),
    _exact("principal", "principal specialisation, value at zero and Mhat_u(<u>)", exact.check_principal),
    _exact("ppf", "plethystic identities behind the Pfaff-Saalschuetz proof", exact.check_ppf, "a, b, c: " + _FREE),
    _graded("qbt-gln-I", "gl_n q-binomial theorem I", graded.check_qbt_gln_i),
    _graded("qbt-gln-II", "gl_n q-binomial theorem II", graded.check_qbt_gln_ii),
    _graded("euler-sln", "sl_n Euler sum", graded.check_euler_sln),
    _graded("phi11", "generalised 1phi1 summation", graded.check_phi11),
    _graded("qbt-sln-I", "sl_n q-binomial theorem I", graded.check_qbt_sln_i, "a, b: " + _FREE),
    _graded("qbt-sln-II", "sl_n q-binomial theorem II", graded.check_qbt_sln_ii, "a: " + _FREE),
    _graded("kaneko-equiv", "Kaneko-Macdonald q-binomial theorem, symmetric vs nonsymmetric", graded.check_kaneko_equiv, "a: " + _FREE),
    _graded("euler-trafo-sln", "sl_n q-Euler transformation and its c = 0 form", graded.check_euler_trafo_sln, "a, b, c: " + _FREE),
    _numeric("gauss-gln", "gl_n q-Gauss sum I", numeric.check_gauss_gln, "a, b, x: " + _SMALL),
    _numeric("gauss-gln-II", "gl_n q-Gauss sum II", numeric.check_gauss_gln_ii, "a, b, x: " + _SMALL),
    _numeric("ktw", "gl_n q-Kummer-Thomae-Whipple formula", numeric.check_ktw, "a, b, c, d, x: " + _SMALL + "; e = abc/d"),
    _numeric("heine-gln", "gl_n Heine transformation", numeric.check_heine_gln, "a, b, c, x: " + _SMALL),
    _numeric("skew-cauchy", "nonsymmetric skew Cauchy-type identity", numeric.check_skew_cauchy, "a, b, c, d: " + _SMALL),
    IdentityDescriptor(
        "n1-regression",
        "one-variable catalog: qbt, qG, qcv, qcv2, qps1, Heine1, Heine2, KTW1, Sears1 and their n = 1 reductions",
        EXACT_FINITE,
        one_variable.check_n1_regression,
        "a, b, c, d, e, x: " + _FREE,
        smoke=((1, 2),),
        desk=((1, 6),),
        symbolic_ok=False,
        max_n=1,
        max_D=10,
    ),
)

BY_ID = {d.id: d for d in CATALOG}


def lookup(identity: str) -> IdentityDescriptor:
    try:
        return BY_ID[identity]
    except KeyError:
        raise KeyError(f"unknown identity {identity!r}; known: {', '.join(BY_ID)}") from None
