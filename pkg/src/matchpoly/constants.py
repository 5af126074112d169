"""The two sub-gadget weight families and the crossing constant.

Every constant is produced as a complex ball evaluated from its closed form
at a requested precision.  Two variants are maintained:

* "legacy": the weights exactly as published.  They solve the published
  (transcribed) equation systems, and their decimal expansions reproduce the
  published decimals, but they do not make the gadget boundary identities
  true, because the published xyz bracket differs from the recomputed one.
* "corrected": weights derived from the recomputed systems.  These satisfy
  the gadget identities exactly and are the default everywhere a reduction
  actually has to count something.

For the corrected family the closed forms are

    delta1:  ab = -1/2,  bc = -5/3,  b = i*sqrt(7)/2,
             a = i/sqrt(7),  c = 10i/(3*sqrt(7)),  C1 = -7/3
    delta2:  ab = (-3+sqrt(3)i)/2,  bc = -(2+sqrt(3)i),
             b = cbrt((1+3*sqrt(3)i)/2),  a = ab/b,  c = bc/b,
             C2 = b^2*(1-sqrt(3)i), with C2^3 = 52-12*sqrt(3)i

both obtained by eliminating c from the recomputed three-equation systems
the same way the published derivation eliminates it from the transcribed
ones (the middle equation is shared, so c = (-4-3ab)/(2b+ab^2) in every
case).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .balls import BallComplex
from .errors import PreconditionError
from .identities import KINDS

VARIANTS = ("corrected", "legacy")
MIN_PRECISION = 8
MAX_PRECISION = 1 << 20

# published six-digit decimals (delta2 weights and the crossing constant)
PUBLISHED_DECIMALS = {
    "a_delta2": (Fraction(-684979, 10 ** 6), Fraction(767825, 10 ** 6)),
    "b_delta2": (Fraction(1598509, 10 ** 6), Fraction(527535, 10 ** 6)),
    "c_delta2": (Fraction(-1063699, 10 ** 6), Fraction(921191, 10 ** 6)),
    "C2": (Fraction(1299527, 10 ** 6), Fraction(-564309, 10 ** 6)),
    "C": (Fraction(-1524493, 10 ** 5), Fraction(42854005, 10 ** 6)),
}


@dataclass
class SubgadgetWeights:
    kind: str
    variant: str
    precision: int
    a: BallComplex
    b: BallComplex
    c: BallComplex
    norm: BallComplex

    def tag_prefixed(self):
        """Weight map keyed by this kind's tags (a1/b1/c1 or a2/b2/c2)."""
        suffix = "1" if self.kind == "delta1" else "2"
        return {"a" + suffix: self.a, "b" + suffix: self.b, "c" + suffix: self.c}

    def as_dict(self):
        return {"a": self.a, "b": self.b, "c": self.c}


@dataclass
class CrossingConstant:
    variant: str
    precision: int
    c1: BallComplex
    c2: BallComplex
    value: BallComplex  # (C1*C2)^3


def _check_args(kind, precision, variant):
    if kind not in KINDS:
        raise PreconditionError(f"unknown sub-gadget kind {kind!r}")
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}")
    if not isinstance(precision, int) or not MIN_PRECISION <= precision <= MAX_PRECISION:
        raise PreconditionError(
            f"precision must be an int in [{MIN_PRECISION}, {MAX_PRECISION}]"
        )


def gadget_constants(kind, precision=128, variant="corrected"):
    _check_args(kind, precision, variant)
    if variant == "legacy":
        return _legacy(kind, precision)
    return _corrected(kind, precision)


def _legacy(kind, prec):
    i = BallComplex.i(prec)
    if kind == "delta2":
        s3 = BallComplex.from_int(3, prec).sqrt()
        w = 11 + 9 * s3 * i
        b = (w / 4).cbrt()
        a = (-3 + s3 * i) / (2 * w).cbrt()
        c = -(2 + s3 * i) / b
        norm = b * b * (1 - s3 * i) / 4
        return SubgadgetWeights("delta2", "legacy", prec, a, b, c, norm)
    r105 = BallComplex.from_int(105, prec).sqrt()
    b = i * ((77 - r105) / 2).sqrt() / 4
    a = -(i * (r105 - 13)) / (2 * (77 - r105)).sqrt()
    c = (-4 - 3 * a * b) / (2 * b + a * b * b)
    norm = (r105 - 77) / (2 * (r105 + 3))
    return SubgadgetWeights("delta1", "legacy", prec, a, b, c, norm)


def legacy_delta1_c_display(precision=128):
    """The separately displayed closed form for c in the delta1 family.

    Kept distinct from the value produced by the shared c-elimination
    formula; the two disagree, which is one of the documented
    inconsistencies in the published constants.
    """
    _check_args("delta1", precision, "legacy")
    i = BallComplex.i(precision)
    r105 = BallComplex.from_int(105, precision).sqrt()
    denom = (Fraction(3, 2) * (679 + 29 * r105)).sqrt()
    return -2 * i * (71 - 3 * r105) / denom


def _corrected(kind, prec):
    i = BallComplex.i(prec)
    if kind == "delta1":
        r7 = BallComplex.from_int(7, prec).sqrt()
        b = i * r7 / 2
        a = i / r7
        c = 10 * i / (3 * r7)
        norm = BallComplex.from_fraction(Fraction(-7, 3), prec=prec)
        return SubgadgetWeights("delta1", "corrected", prec, a, b, c, norm)
    s3 = BallComplex.from_int(3, prec).sqrt()
    t = (-3 + s3 * i) / 2
    b = ((1 + 3 * s3 * i) / 2).cbrt()
    a = t / b
    c = -(2 + s3 * i) / b
    norm = b * b * (1 - s3 * i)
    return SubgadgetWeights("delta2", "corrected", prec, a, b, c, norm)


def crossing_constant(precision=128, variant="corrected"):
    _check_args("delta1", precision, variant)
    w1 = gadget_constants("delta1", precision, variant)
    w2 = gadget_constants("delta2", precision, variant)
    return CrossingConstant(
        variant, precision, w1.norm, w2.norm, (w1.norm * w2.norm) ** 3
    )


def weight_map(precision=128, variant="corrected"):
    """Ball values for all six gadget tags at one precision."""
    out = {}
    for kind in KINDS:
        out.update(gadget_constants(kind, precision, variant).tag_prefixed())
    return out


def verify_constants(precision=256, variants=VARIANTS):
    """Residual checks tying each weight family to its equation systems.

    Legacy weights are checked against the transcribed systems, the
    two-equation reduced systems, and the elimination cubic; corrected
    weights against the recomputed systems and their closed-form norms.
    The shared c-elimination identity is checked for both.  Every row must
    pass for every requested variant.
    """
    from . import identities
    from .report import IdentityReport, check_overlap, check_zero

    report = IdentityReport("constants", precision)
    for variant in variants:
        if variant not in VARIANTS:
            raise PreconditionError(f"unknown variant {variant!r}")
        source = "transcribed" if variant == "legacy" else "recomputed"
        for kind in KINDS:
            w = gadget_constants(kind, precision, variant)
            assign = {"a": w.a, "b": w.b, "c": w.c}
            for idx, poly in enumerate(identities.system(kind, source), start=1):
                report.add(
                    check_zero(
                        f"{variant}/{kind}: {source} system residual {idx}",
                        poly.evaluate(assign),
                    )
                )
            num, den = identities.c_from_reduction()
            report.add(
                check_zero(
                    f"{variant}/{kind}: c elimination identity",
                    w.c * den.evaluate(assign) - num.evaluate(assign),
                )
            )
            # the published delta2 norm is a quarter of the all-in bracket;
            # everywhere else the two agree directly
            scale = 4 if (variant, kind) == ("legacy", "delta2") else 1
            report.add(
                check_overlap(
                    f"{variant}/{kind}: norm matches all-in bracket (x{scale})",
                    identities.bracket_all_in().evaluate(assign),
                    scale * w.norm,
                )
            )
            if variant == "legacy":
                for idx, poly in enumerate(identities.reduced_system(kind), start=1):
                    report.add(
                        check_zero(
                            f"legacy/{kind}: reduced system residual {idx}",
                            poly.evaluate({"a": w.a, "b": w.b}),
                        )
                    )
        if variant == "legacy":
            x = (BallComplex.from_int(105, precision).sqrt() - 13) / 8
            report.add(
                check_zero(
                    "legacy: elimination cubic at (sqrt(105)-13)/8",
                    identities.elimination_cubic().evaluate({"x": x}),
                )
            )
            w1 = gadget_constants("delta1", precision, "legacy")
            report.add(
                check_overlap(
                    "legacy/delta1: ab equals the cubic root",
                    w1.a * w1.b,
                    x,
                )
            )
        else:
            s3 = BallComplex.from_int(3, precision).sqrt()
            i = BallComplex.i(precision)
            w1 = gadget_constants("delta1", precision, "corrected")
            w2 = gadget_constants("delta2", precision, "corrected")
            report.add(
                check_zero(
                    "corrected/delta1: ab = -1/2",
                    w1.a * w1.b + Fraction(1, 2),
                )
            )
            report.add(
                check_zero(
                    "corrected/delta1: bc = -5/3",
                    w1.b * w1.c + Fraction(5, 3),
                )
            )
            report.add(
                check_zero(
                    "corrected/delta1: C1 = -7/3",
                    w1.norm + Fraction(7, 3),
                )
            )
            report.add(
                check_zero(
                    "corrected/delta2: ab = (-3+sqrt(3)i)/2",
                    w2.a * w2.b - (s3 * i - 3) / 2,
                )
            )
            report.add(
                check_zero(
                    "corrected/delta2: bc = -(2+sqrt(3)i)",
                    w2.b * w2.c + 2 + s3 * i,
                )
            )
            report.add(
                check_zero(
                    "corrected/delta2: C2^3 = 52-12*sqrt(3)i",
                    w2.norm ** 3 - 52 + 12 * s3 * i,
                )
            )
    return report
