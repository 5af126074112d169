"""Reductions: crossing replacement, certified counting, weight elimination.

replace_crossings rewires every pairwise crossing of a drawn bipartite graph
through the 42-vertex crossing gadget and produces an exact rational drawing
of the result that is re-validated to be crossing-free, so planarity of the
output is certified rather than assumed.

Placement geometry: around each crossing point P a clearance radius delta is
computed as a quarter of a rational lower bound on the distance from P to
everything else in the drawing (vertices, non-incident edges, other
crossings).  The gadget's reference drawing is mapped into the disk of
radius delta at P by the affine map taking the two attachment axes onto the
two crossed segments; the four attachment images land on the original
segments at distance at most delta/4 from P, and the whole image lies inside
the disk, which meets nothing else.  Chain edges between consecutive gadgets
along one original edge run inside that edge's original segment.

Roles are deterministic: at each crossing the lexicographically smaller edge
plays (x, y) and the other plays (z, w); on each edge the endpoint in
bipartition class A enters the gadget on the x (respectively w) attachment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .balls import BallComplex
from .constants import crossing_constant, weight_map
from .errors import (
    GraphFormatError,
    OddCycle,
    OrientationConflict,
    PreconditionError,
    ResourceError,
    UnknownTag,
    VerificationFailed,
)
from .gadgets import ATTACHMENTS, build_crossing_gadget
from .graphs import (
    Drawing,
    Graph,
    Vertex,
    check_bipartite,
    circular_layout,
    detect_crossings,
    is_rational_tag,
    pendant_extension,
)
from .matching import (
    DEFAULT_NODE_BUDGET,
    ORACLE_BOUND,
    count_matchings,
    count_maximum_matchings,
    matching_polynomial,
    max_matching_size,
)
from .polyring import MultiPoly, vandermonde_solve

_TERMINALS = ("x", "y", "z", "w")


@dataclass
class CrossingPlacement:
    index: int
    prefix: str
    crossing: object
    xy_edge: tuple
    zw_edge: tuple
    xy_a_end: str
    zw_a_end: str


@dataclass
class WeightedPlanarInstance:
    graph: Graph
    drawing: Drawing
    k: int
    placements: tuple


@dataclass
class ReductionCertificate:
    count: int
    k: int
    precision: int
    variant: str
    midpoint: str
    radius_exponent: int | None
    cross_checked: bool
    seed: int | None
    instance_vertices: int
    instance_edges: int

    def to_json(self):
        return {
            "count": self.count,
            "crossings": self.k,
            "precision": self.precision,
            "variant": self.variant,
            "midpoint": self.midpoint,
            "radius_exponent": self.radius_exponent,
            "cross_checked": self.cross_checked,
            "seed": self.seed,
            "instance_vertices": self.instance_vertices,
            "instance_edges": self.instance_edges,
        }


def _dist2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _point_segment_dist2(p, a, b):
    abx, aby = b[0] - a[0], b[1] - a[1]
    apx, apy = p[0] - a[0], p[1] - a[1]
    den = abx * abx + aby * aby
    if den == 0:
        return apx * apx + apy * apy
    t = (apx * abx + apy * aby) / den
    t = min(max(t, Fraction(0)), Fraction(1))
    dx, dy = apx - t * abx, apy - t * aby
    return dx * dx + dy * dy


def _sqrt_lower(q):
    """Rational lower bound for sqrt of a positive Fraction."""
    n, d = q.numerator, q.denominator
    return Fraction(math.isqrt(n * d), d)


def replace_crossings(g, drawing):
    """Rewire every crossing through the gadget; certify the new drawing."""
    cs = detect_crossings(g, drawing)
    bip = check_bipartite(g)
    if cs.k == 0:
        return WeightedPlanarInstance(g, drawing, 0, ())
    base = "cg"
    while any(vid.startswith(base) for vid in g.ids):
        base = "_" + base
    cg = build_crossing_gadget()
    internal_ids = [v for v in cg.graph.ids if v not in _TERMINALS]
    internal_edges = [
        e for e in cg.graph.edges if e[0] not in _TERMINALS and e[1] not in _TERMINALS
    ]

    placements = []
    by_crossing = {}
    for idx, crossing in enumerate(cs.crossings, start=1):
        e1, e2 = crossing.edge1, crossing.edge2
        if e2 < e1:
            e1, e2 = e2, e1
        pl = CrossingPlacement(
            idx,
            f"{base}{idx}.",
            crossing,
            e1,
            e2,
            e1[0] if bip.side[e1[0]] == "A" else e1[1],
            e2[0] if bip.side[e2[0]] == "A" else e2[1],
        )
        placements.append(pl)
        by_crossing[crossing] = pl

    verts = [Vertex(v.id, v.weight, bip.side[v.id]) for v in g.vertices]
    edges = []
    crossed = set(cs.edges_involved())
    for e in g.edges:
        if e not in crossed:
            edges.append(e)
    for pl in placements:
        for vid in internal_ids:
            tv = cg.graph.vertex(vid)
            verts.append(Vertex(pl.prefix + vid, tv.weight, tv.side))
        for u, v in internal_edges:
            edges.append((pl.prefix + u, pl.prefix + v))
    for e in sorted(crossed):
        hits = cs.on_edge(e)
        a_end = None
        for pl_probe in placements:
            if pl_probe.xy_edge == e:
                a_end = pl_probe.xy_a_end
            elif pl_probe.zw_edge == e:
                a_end = pl_probe.zw_a_end
            if a_end is not None:
                break
        ordered = sorted(hits, key=lambda tc: tc[0], reverse=(a_end != e[0]))
        prev = a_end
        for _, crossing in ordered:
            pl = by_crossing[crossing]
            if pl.xy_edge == e:
                entry = pl.prefix + ATTACHMENTS["x"]
                exit_ = pl.prefix + ATTACHMENTS["y"]
            else:
                entry = pl.prefix + ATTACHMENTS["w"]
                exit_ = pl.prefix + ATTACHMENTS["z"]
            edges.append((prev, entry))
            prev = exit_
        edges.append((prev, e[0] if e[1] == a_end else e[1]))

    try:
        g1 = Graph(verts, edges)
        check_bipartite(g1)
    except (GraphFormatError, OddCycle) as exc:
        raise OrientationConflict(
            f"rewired instance is not two-colorable: {exc}"
        ) from exc

    d1 = _g1_drawing(g, drawing, cs, placements, cg)
    leftover = detect_crossings(g1, d1)
    if leftover.k != 0:
        raise VerificationFailed(
            f"crossing replacement left {leftover.k} crossing(s) in the drawing"
        )
    return WeightedPlanarInstance(g1, d1, cs.k, tuple(placements))


def _g1_drawing(g, drawing, cs, placements, cg):
    coords = dict(drawing.coords)
    ctr = (Fraction(7), Fraction(7, 2))
    local = {
        vid: cg.drawing.coords[vid]
        for vid in cg.graph.ids
        if vid not in _TERMINALS
    }
    for pl in placements:
        p = pl.crossing.point
        involved = {pl.crossing.edge1, pl.crossing.edge2}
        d2s = [_dist2(p, drawing.coords[vid]) for vid in g.ids]
        for e in g.edges:
            if e in involved:
                continue
            d2s.append(
                _point_segment_dist2(p, drawing.coords[e[0]], drawing.coords[e[1]])
            )
        for other in cs.crossings:
            if other is pl.crossing:
                continue
            d2s.append(_dist2(p, other.point))
        delta = _sqrt_lower(min(d2s)) / 4
        if delta <= 0:
            raise VerificationFailed("degenerate clearance around a crossing point")

        def _axis(edge, a_end):
            b_end = edge[0] if edge[1] == a_end else edge[1]
            dx = drawing.coords[b_end][0] - drawing.coords[a_end][0]
            dy = drawing.coords[b_end][1] - drawing.coords[a_end][1]
            s = delta / (4 * (abs(dx) + abs(dy)))
            return s * dx, s * dy

        v1 = _axis(pl.xy_edge, pl.xy_a_end)
        v2x, v2y = _axis(pl.zw_edge, pl.zw_a_end)
        v2 = (-v2x, -v2y)
        col1 = ((v1[0] + v2[0]) / 14, (v1[1] + v2[1]) / 14)
        col2 = ((v2[0] - v1[0]) / 7, (v2[1] - v1[1]) / 7)
        for vid, (lx, ly) in local.items():
            qx, qy = lx - ctr[0], ly - ctr[1]
            coords[pl.prefix + vid] = (
                p[0] + col1[0] * qx + col2[0] * qy,
                p[1] + col1[1] * qx + col2[1] * qy,
            )
    return Drawing(coords, drawing.seed)


@dataclass
class PrecisionPolicy:
    start: int = 128
    cap: int = 1 << 20


def count_via_reduction(
    g,
    drawing=None,
    *,
    seed=0,
    policy=None,
    variant="corrected",
    budget=DEFAULT_NODE_BUDGET,
    cross_check=True,
    oracle_bound=ORACLE_BOUND,
):
    """Count matchings of a bipartite graph through the planar reduction.

    Draws the graph if no drawing is given, replaces the crossings, computes
    the ball matching polynomial of the weighted planar instance, divides by
    C^k, and certifies the integer, doubling precision on demand.
    """
    for v in g.vertices:
        if v.weight != "1":
            raise PreconditionError(
                "reduction input must be unweighted (all tags '1'); "
                f"vertex {v.id} has tag {v.weight!r}"
            )
    policy = policy or PrecisionPolicy()
    if drawing is None:
        drawing = circular_layout(g, seed)
    inst = replace_crossings(g, drawing)
    last_resource_error = None
    prec = policy.start
    count = None
    ball = None
    while prec <= policy.cap:
        try:
            if inst.k == 0:
                exact = matching_polynomial(inst.graph, budget=budget)
                ball = BallComplex.from_int(exact, prec)
                count = exact
            else:
                weights = weight_map(prec, variant)
                mp = matching_polynomial(inst.graph, weights, budget=budget)
                c = crossing_constant(prec, variant).value
                ball = mp / c ** inst.k
                count = ball.certify_integer()
            break
        except ResourceError as exc:
            last_resource_error = exc
            prec *= 2
    if count is None:
        raise last_resource_error
    checked = False
    if cross_check and g.n <= oracle_bound:
        direct = count_matchings(g, budget=budget)
        if direct != count:
            raise VerificationFailed(
                f"reduction count {count} disagrees with direct count {direct}"
            )
        checked = True
    return ReductionCertificate(
        count,
        inst.k,
        prec,
        variant,
        ball.midpoint_str(20),
        ball.radius_exponent(),
        checked,
        drawing.seed,
        inst.graph.n,
        inst.graph.m,
    )


# -- pendant extension (total count as a maximum count) ---------------------


def pendant_map(g, g_prime):
    """Recover {smaller-class vertex: its pendant} from the extension."""
    orig = set(g.ids)
    out = {}
    for vid in g_prime.ids:
        if vid in orig:
            continue
        nbrs = g_prime.adj[vid]
        if len(nbrs) != 1:
            raise PreconditionError(f"{vid} is not a pendant vertex")
        out[nbrs[0]] = vid
    return out


def phi(g, g_prime, matching):
    """Forward map: maximum matching of the extension -> matching of g."""
    orig = set(g.ids)
    return tuple(
        sorted(e for e in matching if e[0] in orig and e[1] in orig)
    )


def phi_prime(g, g_prime, matching):
    """Inverse map: matching of g -> maximum matching of the extension."""
    pm = pendant_map(g, g_prime)
    covered = set()
    for u, v in matching:
        covered.add(u)
        covered.add(v)
    out = list(matching)
    for u, pid in pm.items():
        if u not in covered:
            out.append(tuple(sorted((u, pid))))
    return tuple(sorted(out))


def count_matchings_via_pendant(
    g, *, budget=DEFAULT_NODE_BUDGET, cross_check=True
):
    """M(G) computed as MM(pendant_extension(G))."""
    bip = check_bipartite(g)
    gp = pendant_extension(g, bip)
    _, members = bip.smaller_class()
    nu = max_matching_size(gp)
    if nu != len(members):
        raise VerificationFailed(
            f"extension has maximum matching size {nu}, expected {len(members)}"
        )
    return count_maximum_matchings(gp, cross_check=cross_check, budget=budget)


# -- weight elimination by interpolation -------------------------------------


@dataclass
class InterpolationRun:
    tag: str
    tagged_count: int
    nodes: tuple
    values: tuple
    coefficients: tuple
    result: object

    def to_json(self):
        return {
            "tag": self.tag,
            "tagged_count": self.tagged_count,
            "nodes": list(self.nodes),
            "values": [str(v) for v in self.values],
            "coefficients": [str(c) for c in self.coefficients],
            "result": str(self.result),
        }


def build_gi(g, x_tag, i):
    """G_i: i pendant neighbors on every x-tagged vertex, tag reset to 1.

    A vertex of weight x with i fresh degree-1 neighbors of weight 1
    contributes 1 + i where it contributed x, so MP(G_i) = MP(G)|x=i+1.
    """
    if i < 1:
        raise PreconditionError("pendant multiplicity must be at least 1")
    tagged = [v for v in g.vertices if v.weight == x_tag]
    if not tagged:
        raise PreconditionError(f"no vertex carries weight tag {x_tag!r}")
    ids = set(g.ids)
    verts = [
        Vertex(v.id, "1" if v.weight == x_tag else v.weight, v.side)
        for v in g.vertices
    ]
    edges = list(g.edges)
    for v in tagged:
        opp = {"A": "B", "B": "A"}.get(v.side)
        for j in range(i):
            pid = f"{v.id}~q{j}"
            while pid in ids:
                pid += "_"
            ids.add(pid)
            verts.append(Vertex(pid, "1", opp))
            edges.append((v.id, pid))
    return Graph(verts, edges)


def _scalar_value_for(tag, weights):
    weights = weights or {}
    if tag in weights:
        return weights[tag]
    if is_rational_tag(tag):
        f = Fraction(tag)
        return int(f) if f.denominator == 1 else f
    return None


def eliminate_weight(g, x_tag, weights=None, *, budget=DEFAULT_NODE_BUDGET):
    """Recover MP(G) as a polynomial in one weight tag by interpolation.

    Evaluates MP(G_i) for i = 1..m+1 (m = number of x-tagged vertices),
    solves the Vandermonde system at nodes i+1, re-checks each evaluation
    against the recovered coefficients, and returns the run.  The result is
    the polynomial evaluated at the tag's value when one is available, else
    symbolic in the tag name.
    """
    if x_tag == "1":
        raise PreconditionError("cannot eliminate the unit weight")
    m = sum(1 for v in g.vertices if v.weight == x_tag)
    if m == 0:
        raise PreconditionError(f"no vertex carries weight tag {x_tag!r}")
    reduced_weights = {t: v for t, v in (weights or {}).items() if t != x_tag}
    nodes = []
    values = []
    for i in range(1, m + 2):
        gi = build_gi(g, x_tag, i)
        nodes.append(i + 1)
        values.append(matching_polynomial(gi, reduced_weights, budget=budget))
    coeffs = vandermonde_solve(list(zip(nodes, values)))
    for node, value in zip(nodes, values):
        acc = 0
        for j in range(len(coeffs) - 1, -1, -1):
            acc = acc * node + coeffs[j]
        if not (acc == value):
            raise VerificationFailed(
                f"interpolation failed to reproduce MP(G_{node - 1}) at node {node}"
            )
    x0 = _scalar_value_for(x_tag, weights)
    if x0 is None:
        xv = MultiPoly.variable(x_tag)
        result = sum((coeffs[j] * xv ** j for j in range(len(coeffs))), MultiPoly.zero())
    else:
        result = 0
        for j in range(len(coeffs) - 1, -1, -1):
            result = result * x0 + coeffs[j]
    return InterpolationRun(x_tag, m, tuple(nodes), tuple(values), tuple(coeffs), result)


def eliminate_all(g, weights=None, *, budget=DEFAULT_NODE_BUDGET):
    """Full chain: eliminate every non-unit tag, innermost counts all-ones.

    Recursion mirrors the interpolation reduction end to end: each G_i is
    itself resolved by eliminating its remaining tags, so the only direct
    matching-polynomial computations happen on all-ones graphs.
    """
    tags = sorted(t for t in g.weight_tags() if t != "1")
    if not tags:
        return matching_polynomial(g, budget=budget)
    x_tag = tags[0]
    x0 = _scalar_value_for(x_tag, weights)
    if x0 is None:
        raise UnknownTag(f"no value for weight tag {x_tag!r} in the elimination chain")
    m = sum(1 for v in g.vertices if v.weight == x_tag)
    nodes = []
    values = []
    for i in range(1, m + 2):
        gi = build_gi(g, x_tag, i)
        nodes.append(i + 1)
        values.append(eliminate_all(gi, weights, budget=budget))
    coeffs = vandermonde_solve(list(zip(nodes, values)))
    result = 0
    for j in range(len(coeffs) - 1, -1, -1):
        result = result * x0 + coeffs[j]
    return result
