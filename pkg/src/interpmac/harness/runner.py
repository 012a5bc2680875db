"""Run catalog identities over guarded specializations and collect reports."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..field import (
    CoeffField,
    DegenerateSpecialization,
    draw_numeric_specialization,
    draw_specialization,
)
from ..laurent import SingularSystemError
from .catalog import CATALOG, NUMERIC, IdentityDescriptor, lookup
from .context import BalancingError, Context, Session

MAX_REDRAWS = 20
DEFAULT_TOLERANCE = Fraction(1, 10**8)
LEVELS = ("smoke", "desk")
_REDRAW_ON = (ZeroDivisionError, DegenerateSpecialization, SingularSystemError, BalancingError)


class RedrawLimitError(RuntimeError):
    """Every specialization tried for one trial was degenerate."""


@dataclass
class IdentityReport:
    id: str
    n: int
    D: int
    mode: str
    seed: int
    status: str = "pass"
    residual: str = "0"
    checks: int = 0
    trials: list = dc_field(default_factory=list)
    tail: str | None = None
    failures: list = dc_field(default_factory=list)
    ms: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self, *, timing: bool = False) -> dict:
        out = {
            "id": self.id,
            "n": self.n,
            "D": self.D,
            "mode": self.mode,
            "status": self.status,
            "residual": self.residual,
            "seed": self.seed,
            "checks": self.checks,
            "trials": self.trials,
        }
        if self.tail is not None:
            out["tail"] = self.tail
        if self.failures:
            out["failures"] = self.failures
        if timing and self.ms is not None:
            out["ms"] = self.ms
        return out

    def to_json(self, *, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing=timing), sort_keys=False)


def trial_seed(seed: int, identity: str, n: int, D: int, trial: int, attempt: int) -> int:
    """A per-trial seed that depends on nothing but its arguments."""
    return random.Random(f"{seed}:{identity}:{n}:{D}:{trial}:{attempt}").getrandbits(31)


def _sci(x: Fraction) -> str:
    return "0" if not x else f"{float(x):.3e}"


def _field_for(desc: IdentityDescriptor, n: int, D: int, s: int, symbolic: bool) -> CoeffField:
    if symbolic:
        return CoeffField.symbolic_field()
    draw = draw_numeric_specialization if desc.mode == NUMERIC else draw_specialization
    return CoeffField.from_specialization(draw(s, n, D))


def _run_trial(desc, session, n, D, seed, trial, symbolic, tolerance):
    """One trial, redrawn on degenerate specializations. Returns (context, seed used)."""
    last = None
    for attempt in range(MAX_REDRAWS):
        s = trial_seed(seed, desc.id, n, D, trial, attempt)
        field = _field_for(desc, n, D, s, symbolic)
        ctx = Context(
            session, field, n, D, random.Random(s),
            numeric=desc.mode == NUMERIC, tolerance=tolerance,
        )
        try:
            desc.check(ctx)
        except _REDRAW_ON as exc:
            if symbolic:
                raise
            last = exc
            continue
        return ctx, s
    raise RedrawLimitError(f"{desc.id}: {MAX_REDRAWS} degenerate draws in a row ({last})")


def verify(
    identity: str,
    n: int,
    D: int,
    trials: int = 3,
    seed: int = 0,
    *,
    symbolic: bool = False,
    tolerance: Fraction = DEFAULT_TOLERANCE,
    session: Session | None = None,
) -> IdentityReport:
    """Check one identity at (n, D) over ``trials`` guarded specializations."""
    desc = lookup(identity)
    if n < 1 or D < 0 or trials < 1:
        raise ValueError("need n >= 1, D >= 0 and trials >= 1")
    if n > desc.max_n or D > desc.max_D:
        raise ValueError(f"{identity}: (n, D) = ({n}, {D}) is beyond n <= {desc.max_n}, D <= {desc.max_D}")
    if symbolic and not desc.symbolic_ok:
        raise ValueError(f"{identity} has no symbolic mode")
    session = session or Session()
    report = IdentityReport(identity, n, D, desc.mode, seed)
    start = time.perf_counter()
    worst = Fraction(0)
    tail = Fraction(0)
    for trial in range(1 if symbolic else trials):
        ctx, s = _run_trial(desc, session, n, D, seed, trial, symbolic, tolerance)
        out = ctx.out
        report.checks += out.checks
        entry = {"qt": ctx.F.fingerprint, "seed": s, "status": "pass" if out.ok else "fail"}
        if ctx.params:
            entry["params"] = dict(sorted(ctx.params.items()))
        report.trials.append(entry)
        if not out.ok:
            report.status = "fail"
            report.failures.extend(f for f in out.failures if f is not None and len(report.failures) < 5)
        if out.rel_error is not None:
            worst = max(worst, out.rel_error)
        if out.tail_bound is not None:
            tail = max(tail, out.tail_bound)
    if desc.mode == NUMERIC:
        report.residual = _sci(worst)
        report.tail = _sci(tail)
    else:
        report.residual = "0" if report.ok else "nonzero"
    report.ms = round((time.perf_counter() - start) * 1000)
    return report


def plan(level: str) -> list[tuple[IdentityDescriptor, int, int]]:
    """The (identity, n, D) runs of a level, in catalog order."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    return [(d, n, D) for d in CATALOG for n, D in (d.smoke if level == "smoke" else d.desk)]


def verify_all(level: str = "smoke", seed: int = 0, *, trials: int | None = None) -> list[IdentityReport]:
    """Every identity at the sizes of ``level``; a failure never stops the run."""
    trials = trials or (1 if level == "smoke" else 3)
    session = Session()
    reports = []
    for desc, n, D in plan(level):
        try:
            reports.append(verify(desc.id, n, D, trials, seed, session=session))
        except RedrawLimitError as exc:
            r = IdentityReport(desc.id, n, D, desc.mode, seed, status="error", residual="none")
            r.failures.append(str(exc))
            reports.append(r)
    return reports
