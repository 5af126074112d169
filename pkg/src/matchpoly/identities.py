"""Bracket polynomials and equation systems for the sub-gadget weights.

The 10-vertex sub-gadget template has three terminals x, y, z and internal
weights a, b, c.  Its matching polynomial, expanded by which terminals stay
uncovered, is

    E + L2*(x+y+z) + L3*(xy+xz+yz) + X*xyz

where the brackets below give E, L2, L3 and X as polynomials in a, b, c.
Two versions of the xyz bracket are kept side by side: `transcribed` is the
published expansion, `recomputed` is what brute-force expansion of the
template actually yields.  The two differ by exactly 3*a*xyz, and the rest
of the package treats both as first-class objects so every downstream
consequence of the discrepancy can be tested explicitly.

`system(kind, source)` returns the three-equation system (as polynomials
whose roots are the admissible weights) for each sub-gadget kind:

    delta1: profile C1 on the all-in and one-in patterns, 0 elsewhere
    delta2: profile C2 on the all-in and none-in patterns, 0 elsewhere
"""

from __future__ import annotations

from .polyring import MultiPoly

KINDS = ("delta1", "delta2")
SOURCES = ("transcribed", "recomputed")

_A = MultiPoly.variable("a")
_B = MultiPoly.variable("b")
_C = MultiPoly.variable("c")


def bracket_all_in():
    """MP of the internal graph with every attachment vertex removed."""
    return _B ** 3 * _C + 3 * _B ** 2


def bracket_two_in():
    """MP of the internal graph minus two attachment vertices."""
    return _B * bracket_two_in_reduced()


def bracket_two_in_reduced():
    """The two-in bracket with its overall factor b removed."""
    return 4 + 3 * _A * _B + 2 * _B * _C + _A * _B ** 2 * _C


def bracket_one_in():
    """MP of the internal graph minus one attachment vertex."""
    return (
        3
        + 8 * _A * _B
        + 3 * _B * _C
        + 3 * _A ** 2 * _B ** 2
        + 4 * _A * _B ** 2 * _C
        + _A ** 2 * _B ** 3 * _C
    )


def bracket_none_in(source="recomputed"):
    """MP of the untouched internal graph, by source of the expansion."""
    _check_source(source)
    common = _C * (2 + 9 * _A * _B + 6 * _A ** 2 * _B ** 2 + _A ** 3 * _B ** 3)
    if source == "transcribed":
        return common + 3 * (2 * _A + 4 * _A ** 2 * _B + _A ** 3 * _B ** 2)
    return common + 3 * (3 * _A + 4 * _A ** 2 * _B + _A ** 3 * _B ** 2)


def expansion(source="recomputed"):
    """Full template matching polynomial in a, b, c, x, y, z."""
    _check_source(source)
    x = MultiPoly.variable("x")
    y = MultiPoly.variable("y")
    z = MultiPoly.variable("z")
    return (
        bracket_all_in()
        + bracket_two_in() * (x + y + z)
        + bracket_one_in() * (x * y + x * z + y * z)
        + bracket_none_in(source) * (x * y * z)
    )


def expansion_discrepancy():
    """recomputed minus transcribed; a single monomial."""
    return expansion("recomputed") - expansion("transcribed")


def allowed_in_counts(kind):
    """Numbers of matched boundary edges on which the profile is nonzero."""
    _check_kind(kind)
    return (1, 3) if kind == "delta1" else (0, 3)


def norm_polynomial(kind):
    """The bracket whose value at the weights is the norm constant."""
    return bracket_all_in()


def system(kind, source="recomputed"):
    """Three polynomials in a, b, c that must vanish at the weights.

    delta2 wants none-in = all-in and both mixed brackets zero; delta1 wants
    one-in = all-in, the two-in bracket zero, and none-in zero.  The reduced
    two-in bracket is used for the middle equation, matching the published
    presentation; b = 0 is excluded separately.
    """
    _check_kind(kind)
    _check_source(source)
    if kind == "delta2":
        return [
            bracket_none_in(source) - bracket_all_in(),
            bracket_two_in_reduced(),
            bracket_one_in(),
        ]
    return [
        bracket_one_in() - bracket_all_in(),
        bracket_two_in_reduced(),
        bracket_none_in(source),
    ]


def reduced_system(kind):
    """The published two-equation systems in a, b after eliminating c."""
    _check_kind(kind)
    ab = _A * _B
    e_long = -8 - 30 * ab - 21 * ab ** 2 - 4 * ab ** 3
    e_short = -6 * _B - 6 * _A * _B ** 2 - 2 * _A ** 2 * _B ** 3
    two_b3 = 2 * _B ** 3
    if kind == "delta2":
        return [e_long - two_b3, e_short]
    return [e_short - two_b3, e_long]


def elimination_cubic():
    """The published cubic in x = ab for the delta1 reduction."""
    x = MultiPoly.variable("x")
    return 4 * x ** 3 + 21 * x ** 2 + 30 * x + 8


def c_from_reduction():
    """c as a rational expression in a, b: returns (numerator, denominator)."""
    return (-4 - 3 * _A * _B, 2 * _B + _A * _B ** 2)


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _check_source(source):
    if source not in SOURCES:
        raise ValueError(f"source must be one of {SOURCES}, got {source!r}")
