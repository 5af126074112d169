"""Verification reports: named rows of ball-checked identities.

Each row records what was checked and whether it held.  A check that cannot
be decided at the working precision raises InsufficientPrecision instead of
guessing, so callers can retry with a larger precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InsufficientPrecision, VerificationFailed

DEFAULT_TOLERANCE = Fraction(1, 10 ** 20)


@dataclass
class ReportRow:
    label: str
    passed: bool
    value: str = ""
    radius_exponent: int | None = None
    detail: str = ""

    def to_json(self):
        return {
            "label": self.label,
            "passed": self.passed,
            "value": self.value,
            "radius_exponent": self.radius_exponent,
            "detail": self.detail,
        }


@dataclass
class IdentityReport:
    title: str
    precision: int
    rows: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    def failing(self):
        return [r for r in self.rows if not r.passed]

    def add(self, row):
        self.rows.append(row)

    def raise_if_failed(self):
        bad = self.failing()
        if bad:
            summary = "; ".join(f"{r.label}: {r.detail or 'failed'}" for r in bad[:8])
            raise VerificationFailed(f"{self.title}: {len(bad)} check(s) failed: {summary}")
        return self

    def to_json(self):
        return {
            "title": self.title,
            "precision": self.precision,
            "passed": self.passed,
            "rows": [r.to_json() for r in self.rows],
        }


def check_zero(label, ball, tol=DEFAULT_TOLERANCE):
    """Row asserting a ball encloses 0 tightly."""
    if not ball.contains_zero():
        low, _ = ball.abs_bounds()
        return ReportRow(
            label,
            False,
            ball.midpoint_str(12),
            ball.radius_exponent(),
            f"ball excludes 0 (|value| >= {float(low):.3g})",
        )
    if ball.rad > tol:
        raise InsufficientPrecision(f"{label}: radius {float(ball.rad):.3g} above tolerance")
    return ReportRow(label, True, ball.midpoint_str(12), ball.radius_exponent())


def check_overlap(label, ball, target, tol=DEFAULT_TOLERANCE):
    """Row asserting two balls overlap and both are tight."""
    if not ball.overlaps(target):
        return ReportRow(
            label,
            False,
            ball.midpoint_str(12),
            ball.radius_exponent(),
            f"disjoint from target {target.midpoint_str(12)}",
        )
    if ball.rad > tol or target.rad > tol:
        raise InsufficientPrecision(f"{label}: radius above tolerance")
    return ReportRow(label, True, ball.midpoint_str(12), ball.radius_exponent())


def check_near_point(label, ball, p_re, p_im, slack):
    """Row asserting the ball contains a point within `slack` of (p_re, p_im).

    Used for comparisons against published finite-precision decimals; the
    check is exactrational on the midpoint and radius.
    """
    dr = ball.mid_re - Fraction(p_re)
    di = ball.mid_im - Fraction(p_im)
    bound = ball.rad + Fraction(slack)
    ok = dr * dr + di * di <= bound * bound
    detail = "" if ok else f"midpoint further than {float(Fraction(slack)):.3g} from reference"
    return ReportRow(label, ok, ball.midpoint_str(12), ball.radius_exponent(), detail)
