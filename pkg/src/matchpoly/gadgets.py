"""Sub-gadget templates, the crossing gadget, and their identity checks.

The 10-vertex sub-gadget template: terminals x, y, z, attachment vertices
a1, a2, a3, ring vertices b1, b2, b3, and a center c.  The internal graph is
the 6-cycle a1-b1-a2-b3-a3-b2 with c joined to each b.  Both weight families
use the same topology; only the weight tags differ.

The crossing gadget packs six blocks, alternating kinds, joined by seven
connector edges, with four terminals x, y, z, w.  Its boundary profile must
be C1^3*C2^3 on the four patterns where the x,y edges agree and the z,w
edges agree, and 0 on the other twelve.  That identity is checked two ways:
composing the three-edge profiles of the six blocks over all connector
states, and direct recursion on the assembled graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constants import crossing_constant, gadget_constants, weight_map
from .errors import OrientationConflict
from .graphs import Drawing, Graph, GraphFormatError, Vertex, check_bipartite
from .identities import KINDS, allowed_in_counts
from .matching import DEFAULT_NODE_BUDGET, boundary_profile, matching_polynomial
from .polyring import MultiPoly
from .report import DEFAULT_TOLERANCE, IdentityReport, ReportRow, check_overlap, check_zero

_F = Fraction

# internal edges shared by every block, in template-local vertex names
_TEMPLATE_INTERNAL_EDGES = (
    ("a1", "b1"),
    ("b1", "a2"),
    ("a1", "b2"),
    ("b2", "a3"),
    ("a2", "b3"),
    ("b3", "a3"),
    ("b1", "c"),
    ("b2", "c"),
    ("b3", "c"),
)

_TEMPLATE_COORDS = {
    "x": (_F(0), _F(0)),
    "y": (_F(12), _F(0)),
    "z": (_F(6), _F(9)),
    "a1": (_F(2), _F(1)),
    "a2": (_F(10), _F(1)),
    "a3": (_F(6), _F(7)),
    "b1": (_F(6), _F(1)),
    "b2": (_F(4), _F(4)),
    "b3": (_F(8), _F(4)),
    "c": (_F(6), _F(3)),
}

# which slot of each block carries which external terminal or connector
_SLOT_TABLE = {
    1: ("z", "K1", "K3"),
    2: ("K1", "K2", "K5"),
    3: ("K2", "y", "K7"),
    4: ("x", "K4", "K3"),
    5: ("K4", "K6", "K5"),
    6: ("K6", "w", "K7"),
}

ATTACHMENTS = {"z": "g1.a1", "y": "g3.a2", "x": "g4.a1", "w": "g6.a2"}
TERMINAL_ORDER = ("x", "y", "z", "w")

# block-local coordinates; the top row (blocks 4-6) mirrors y -> 7 - y
_BLOCK_LOCAL = {
    "a1": (_F(0), _F(0)),
    "a2": (_F(4), _F(0)),
    "a3": (_F(2), _F(3)),
    "b1": (_F(2), _F(0)),
    "b2": (_F(1), _F(3, 2)),
    "b3": (_F(3), _F(3, 2)),
    "c": (_F(2), _F(1)),
}
_BLOCK_OFFSET = {1: 0, 2: 5, 3: 10, 4: 0, 5: 5, 6: 10}
_TERMINAL_COORDS = {
    "z": (_F(0), _F(-1)),
    "y": (_F(14), _F(-1)),
    "x": (_F(0), _F(8)),
    "w": (_F(14), _F(8)),
}


@dataclass
class SubgadgetTemplate:
    kind: str
    graph: Graph
    drawing: Drawing
    boundary: tuple  # ((edge, terminal), ...) in (x, y, z) order
    attachments: dict


@dataclass
class CrossingGadget:
    graph: Graph
    drawing: Drawing
    boundary: tuple  # in TERMINAL_ORDER
    attachments: dict
    blocks: tuple  # ((index, kind), ...)
    connectors: tuple


def _tag(kind, letter):
    return letter + ("1" if kind == "delta1" else "2")


def build_subgadget(kind):
    """The 10-vertex template carrying the weight tags of one kind."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    verts = []
    for name in ("x", "y", "z"):
        verts.append(Vertex(name, "1", "B"))
    for name in ("a1", "a2", "a3"):
        verts.append(Vertex(name, _tag(kind, "a"), "A"))
    for name in ("b1", "b2", "b3"):
        verts.append(Vertex(name, _tag(kind, "b"), "B"))
    verts.append(Vertex("c", _tag(kind, "c"), "A"))
    edges = [("x", "a1"), ("y", "a2"), ("z", "a3")] + list(_TEMPLATE_INTERNAL_EDGES)
    g = Graph(verts, edges)
    drawing = Drawing(dict(_TEMPLATE_COORDS))
    boundary = (
        (("a1", "x"), "x"),
        (("a2", "y"), "y"),
        (("a3", "z"), "z"),
    )
    attachments = {"x": "a1", "y": "a2", "z": "a3"}
    return SubgadgetTemplate(kind, g, drawing, boundary, attachments)


def symbolic_gadget_polynomial(budget=DEFAULT_NODE_BUDGET):
    """Template MP over the ring Z[a, b, c, x, y, z], by direct recursion."""
    t = build_subgadget("delta1")
    g = t.graph.relabel_weights({"x": "t1", "y": "t2", "z": "t3"})
    assignment = {
        "a1": MultiPoly.variable("a"),
        "b1": MultiPoly.variable("b"),
        "c1": MultiPoly.variable("c"),
        "t1": MultiPoly.variable("x"),
        "t2": MultiPoly.variable("y"),
        "t3": MultiPoly.variable("z"),
    }
    return matching_polynomial(g, assignment, budget=budget)


def subgadget_profile(kind, precision=256, variant="corrected", *, budget=DEFAULT_NODE_BUDGET, perturb_b=None):
    """Ball-valued boundary profile of one sub-gadget at its weights.

    perturb_b shifts the b weight by the given rational amount; used as a
    negative control to show the identities are sharp.
    """
    t = build_subgadget(kind)
    w = gadget_constants(kind, precision, variant)
    weights = w.tag_prefixed()
    if perturb_b is not None:
        weights[_tag(kind, "b")] = w.b + Fraction(perturb_b)
    return boundary_profile(t.graph, t.boundary, weights, budget=budget)


def verify_subgadget(
    kind,
    precision=256,
    variant="corrected",
    *,
    tol=DEFAULT_TOLERANCE,
    budget=DEFAULT_NODE_BUDGET,
    perturb_b=None,
):
    """Check the profile of one sub-gadget against its target pattern."""
    w = gadget_constants(kind, precision, variant)
    prof = subgadget_profile(
        kind, precision, variant, budget=budget, perturb_b=perturb_b
    )
    allowed = allowed_in_counts(kind)
    report = IdentityReport(f"{kind} profile ({variant}, {precision}-bit)", precision)
    hot = []
    for pattern in prof.patterns():
        val = prof.table[pattern]
        n_in = sum(pattern)
        label = f"{kind} pattern in={pattern}"
        if n_in in allowed:
            report.add(check_overlap(label + " = norm", val, w.norm, tol))
            hot.append((pattern, val))
        else:
            report.add(check_zero(label + " = 0", val, tol))
    for i in range(len(hot)):
        for j in range(i + 1, len(hot)):
            pi, vi = hot[i]
            pj, vj = hot[j]
            report.add(
                check_overlap(f"{kind} allowed {pi} ~ {pj}", vi, vj, tol)
            )
    return report


def build_crossing_gadget():
    """Assemble the 46-vertex crossing gadget with sides, tags, and drawing."""
    verts = []
    edges = []
    blocks = []
    coords = {}
    for j in range(1, 7):
        kind = "delta1" if j % 2 == 1 else "delta2"
        a_side = "A" if j % 2 == 1 else "B"
        b_side = "B" if j % 2 == 1 else "A"
        pref = f"g{j}."
        for name in ("a1", "a2", "a3"):
            verts.append(Vertex(pref + name, _tag(kind, "a"), a_side))
        for name in ("b1", "b2", "b3"):
            verts.append(Vertex(pref + name, _tag(kind, "b"), b_side))
        verts.append(Vertex(pref + "c", _tag(kind, "c"), a_side))
        for u, v in _TEMPLATE_INTERNAL_EDGES:
            edges.append((pref + u, pref + v))
        off = _BLOCK_OFFSET[j]
        mirror = j >= 4
        for name, (lx, ly) in _BLOCK_LOCAL.items():
            coords[pref + name] = (lx + off, (7 - ly) if mirror else ly)
        blocks.append((j, kind))
    connectors = (
        ("g1.a2", "g2.a1"),
        ("g2.a2", "g3.a1"),
        ("g1.a3", "g4.a3"),
        ("g4.a2", "g5.a1"),
        ("g2.a3", "g5.a3"),
        ("g5.a2", "g6.a1"),
        ("g3.a3", "g6.a3"),
    )
    edges.extend(connectors)
    for term, side in (("x", "A"), ("y", "B"), ("z", "B"), ("w", "A")):
        verts.append(Vertex(term, "1", side))
        edges.append((term, ATTACHMENTS[term]))
        coords[term] = _TERMINAL_COORDS[term]
    try:
        g = Graph(verts, edges)
        check_bipartite(g)
    except GraphFormatError as exc:
        raise OrientationConflict(str(exc)) from exc
    boundary = tuple(
        (tuple(sorted((t, ATTACHMENTS[t]))), t) for t in TERMINAL_ORDER
    )
    return CrossingGadget(
        g, Drawing(coords), boundary, dict(ATTACHMENTS), tuple(blocks), connectors
    )


def allowed_crossing_patterns():
    """(x, y, z, w) in-patterns on which the gadget profile is nonzero."""
    return ((0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1))


def compose_crossing_profile(precision=256, variant="corrected", *, budget=DEFAULT_NODE_BUDGET):
    """Gadget profile by tensor contraction of the six block profiles.

    Sums over the 2^7 connector matchings; a connector edge in the matching
    marks both its endpoint slots as matched.  Returns a dict keyed by
    (x, y, z, w) in-pattern.
    """
    block_profiles = {}
    for kind in KINDS:
        block_profiles[kind] = subgadget_profile(
            kind, precision, variant, budget=budget
        ).table
    kinds = {j: ("delta1" if j % 2 == 1 else "delta2") for j in range(1, 7)}
    table = {}
    for bits in range(16):
        ext = dict(zip(TERMINAL_ORDER, ((bits >> i) & 1 for i in range(4))))
        total = None
        for ks in range(128):
            kstate = {f"K{i + 1}": (ks >> i) & 1 for i in range(7)}
            term = None
            for j, slots in _SLOT_TABLE.items():
                pat = tuple(
                    ext[s] if s in ext else kstate[s] for s in slots
                )
                v = block_profiles[kinds[j]][pat]
                term = v if term is None else term * v
            total = term if total is None else total + term
        table[tuple(ext[t] for t in TERMINAL_ORDER)] = total
    return table


def direct_crossing_profile(precision=256, variant="corrected", *, budget=DEFAULT_NODE_BUDGET):
    """Gadget profile by direct matching-polynomial recursion."""
    cg = build_crossing_gadget()
    prof = boundary_profile(
        cg.graph, cg.boundary, weight_map(precision, variant), budget=budget
    )
    return {p: prof.table[p] for p in prof.table}


def _swap(pattern, i, j):
    p = list(pattern)
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def verify_crossing_gadget(
    precision=256,
    variant="corrected",
    *,
    tol=DEFAULT_TOLERANCE,
    budget=DEFAULT_NODE_BUDGET,
    direct=True,
):
    """Check the crossing-gadget profile by one or both routes."""
    comp = compose_crossing_profile(precision, variant, budget=budget)
    cc = crossing_constant(precision, variant)
    allowed = set(allowed_crossing_patterns())
    report = IdentityReport(
        f"crossing gadget ({variant}, {precision}-bit)", precision
    )
    for pattern in sorted(comp):
        val = comp[pattern]
        label = f"composition in={pattern}"
        if pattern in allowed:
            report.add(check_overlap(label + " = (C1*C2)^3", val, cc.value, tol))
        else:
            report.add(check_zero(label + " = 0", val, tol))
    for pattern in sorted(comp):
        for name, swapped in (
            ("x<->y", _swap(pattern, 0, 1)),
            ("z<->w", _swap(pattern, 2, 3)),
            ("(x,y)<->(z,w)", pattern[2:] + pattern[:2]),
        ):
            if swapped <= pattern:
                continue
            report.add(
                check_overlap(
                    f"symmetry {name}: {pattern} ~ {swapped}",
                    comp[pattern],
                    comp[swapped],
                    tol,
                )
            )
    if direct:
        dt = direct_crossing_profile(precision, variant, budget=budget)
        for pattern in sorted(comp):
            report.add(
                check_overlap(
                    f"direct ~ composition in={pattern}",
                    dt[pattern],
                    comp[pattern],
                    tol,
                )
            )
    return report
