"""Command-line front end.

Exit status: 0 on success or all-pass, 1 on a verification failure, 2 on a
usage error (bad flags, unknown identity, malformed labels).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cache
from .binomial import ConnectionTable, qbinom
from .compositions import format_composition, parse_composition
from .field import CoeffField, DegenerateSpecialization, draw_specialization, guard_ok
from .harness.catalog import BY_ID
from .harness.runner import LEVELS, verify, verify_all
from .macdonald import KINDS, MacdonaldFamily
from .series import sigma_q_series, sigma_series


class UsageError(Exception):
    pass


def parse_qt(text: str, n: int, D: int) -> CoeffField:
    """``symbolic``, ``seed:N`` or an explicit pair ``q,t`` of rationals."""
    if text == "symbolic":
        return CoeffField.symbolic_field()
    if text.startswith("seed:"):
        try:
            seed = int(text[5:])
        except ValueError:
            raise UsageError(f"bad seed in --qt {text!r}") from None
        return CoeffField.from_specialization(draw_specialization(seed, n, D))
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--qt must be 'symbolic', 'seed:N' or 'q,t', not {text!r}")
    try:
        q, t = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--qt values must be rationals, got {text!r}") from None
    if not guard_ok(q, t, n, max(D, 1)):
        raise UsageError(f"(q, t) = ({q}, {t}) is degenerate at n = {n}, degree {D}")
    return CoeffField.specialized(q, t)


def _comp(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        u = parse_composition(text)
    except ValueError:
        raise UsageError(f"not a composition: {text!r}") from None
    if any(x < 0 for x in u):
        raise UsageError(f"composition parts must be nonnegative: {text!r}")
    if n is not None and len(u) != n:
        raise UsageError(f"{text!r} does not have {n} parts")
    return u


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload) if args.format == "json" else text)


# subcommands ----------------------------------------------------------------------


def cmd_compute(args) -> int:
    u = _comp(args.u, args.n)
    F = parse_qt(args.qt, args.n, sum(u))
    fam = MacdonaldFamily(F, args.n)
    hatted = args.hatted or args.kind not in ("M", "E")
    if args.kind in ("MS", "P", "MSprime") and list(u) != sorted(u, reverse=True):
        raise UsageError(f"{args.kind} is labelled by partitions; got {args.u}")
    if args.cache_dir:
        rec = cache.PolyCache(args.cache_dir, F).get(fam, args.kind, u, hatted)
    else:
        rec = fam.record(args.kind, u, hatted)
    text = rec.poly.to_text(F)
    payload = {"kind": rec.kind, "n": rec.n, "label": format_composition(rec.label),
               "hatted": rec.hatted, "qt": rec.fingerprint, "poly": rec.poly.to_json(F)}
    _emit(args, text, payload)
    return 0


def cmd_binom(args) -> int:
    u = _comp(args.u, args.n)
    v = _comp(args.v, len(u))
    F = parse_qt(args.qt, len(u), max(sum(u), sum(v)))
    fam = MacdonaldFamily(F, len(u))
    value = qbinom(fam, u, v, inverse=args.inverse_params)
    text = F.format(value)
    _emit(args, text, {"u": args.u, "v": args.v, "inverse": args.inverse_params, "qt": F.fingerprint, "value": text})
    return 0


def cmd_connect(args) -> int:
    u = _comp(args.u, args.n)
    v = _comp(args.v, len(u))
    F = parse_qt(args.qt, len(u), max(sum(u), sum(v)))
    if (args.a is None) != (args.b is None):
        raise UsageError("give both --a and --b, or neither")
    fam = MacdonaldFamily(F, len(u))
    entry = ConnectionTable(fam, max(sum(u), sum(v))).entry(u, v)
    if args.a is None:
        text = entry.text(F)
    else:
        a, b = _element(F, args.a), _element(F, args.b)
        text = F.format(entry(a, b, F.zero))
    _emit(args, text, {"u": args.u, "v": args.v, "qt": F.fingerprint, "value": text})
    return 0


def _element(F: CoeffField, text: str):
    try:
        return F.parse(text)
    except Exception as exc:  # sympy raises a zoo of parse errors
        raise UsageError(f"cannot parse {text!r} as a field element: {exc}") from None


def cmd_sigma(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    F = parse_qt(args.qt, 1, args.order)
    A = [_element(F, x) for x in args.A]
    B = [_element(F, x) for x in args.B]
    S = sigma_q_series(A, B, args.order, F) if args.q else sigma_series(A, B, args.order, F.one)
    coeffs = [F.format(S[k]) for k in range(args.order + 1)]
    text = "\n".join(f"S_{k} = {c}" for k, c in enumerate(coeffs))
    _emit(args, text, {"A": args.A, "B": args.B, "order": args.order, "q_series": args.q, "coeffs": coeffs})
    return 0


def cmd_verify(args) -> int:
    if args.id not in BY_ID:
        raise UsageError(f"unknown identity {args.id!r}; known: {', '.join(BY_ID)}")
    tol = Fraction(args.tol) if args.tol else Fraction(1, 10**8)
    try:
        rep = verify(args.id, args.n, args.deg, args.trials, args.seed, symbolic=args.symbolic, tolerance=tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(rep.to_json(timing=args.timing))
    return 0 if rep.ok else 1


def cmd_verify_all(args) -> int:
    reports = verify_all(args.level, args.seed, trials=args.trials)
    for rep in reports:
        print(rep.to_json(timing=args.timing))
    failed = [r.id for r in reports if not r.ok]
    print(f"{len(reports) - len(failed)}/{len(reports)} passed", file=sys.stderr)
    return 0 if not failed else 1


def cmd_cache(args) -> int:
    if args.clear:
        removed = cache.clear(args.dir)
        print(json.dumps({"dir": str(args.dir), "removed": removed}))
    else:
        print(json.dumps(cache.stats(args.dir)))
    return 0


# parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="interpmac", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, qt=True):
        if qt:
            sp.add_argument("--qt", default="symbolic", help="symbolic | seed:N | q,t (default symbolic)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compute", help="print a Macdonald polynomial")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--u", required=True, help="label, e.g. 0,1")
    c.add_argument("--hatted", action="store_true", help="normalized M/E (other kinds are always hatted)")
    c.add_argument("--cache-dir", default=None)
    common(c)
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("binom", help="generalized q-binomial coefficient [u v]")
    b.add_argument("--u", required=True)
    b.add_argument("--v", required=True)
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--inverse-params", action="store_true", help="the (1/q, 1/t) variant")
    common(b)
    b.set_defaults(func=cmd_binom)

    k = sub.add_parser("connect", help="connection coefficient E_uv(a, b)")
    k.add_argument("--u", required=True)
    k.add_argument("--v", required=True)
    k.add_argument("--n", type=int, default=None)
    k.add_argument("--a", default=None)
    k.add_argument("--b", default=None)
    common(k)
    k.set_defaults(func=cmd_connect)

    s = sub.add_parser("sigma", help="coefficients of sigma_z[A - B] or sigma_z[(A - B)/(1 - q)]")
    s.add_argument("--A", nargs="*", default=[])
    s.add_argument("--B", nargs="*", default=[])
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--q", action="store_true", help="divide the alphabet by 1 - q")
    common(s)
    s.set_defaults(func=cmd_sigma)

    v = sub.add_parser("verify", help="check one catalog identity")
    v.add_argument("--id", required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--deg", type=int, required=True)
    v.add_argument("--trials", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--symbolic", action="store_true", help="exact modes over Q(q, t, a, ...)")
    v.add_argument("--tol", default=None, help="numeric relative tolerance (default 1e-8)")
    v.add_argument("--timing", action="store_true", help="add runtimes (ms) to the report")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("verify-all", help="run the whole catalog")
    a.add_argument("--level", choices=LEVELS, default="smoke")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--trials", type=int, default=None)
    a.add_argument("--timing", action="store_true")
    a.set_defaults(func=cmd_verify_all)

    ca = sub.add_parser("cache", help="inspect or clear a cache directory")
    ca.add_argument("--dir", default=str(cache.default_dir()))
    g = ca.add_mutually_exclusive_group(required=True)
    g.add_argument("--clear", action="store_true")
    g.add_argument("--stats", action="store_true")
    ca.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"interpmac: error: {exc}", file=sys.stderr)
        return 2
    except (cache.CacheError, DegenerateSpecialization) as exc:
        print(f"interpmac: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
