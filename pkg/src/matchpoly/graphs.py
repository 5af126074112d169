"""Graph, drawing, and planarity-adjacent primitives.

Graphs are finite simple undirected graphs with string vertex ids, an
optional declared side per vertex ("A"/"B"), and a weight tag per vertex.
Drawings map vertex ids to exact rational points; all geometric predicates
are decided in Fraction arithmetic, never floating point.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateDrawing,
    GraphFormatError,
    LayoutFailure,
    OddCycle,
)

_TAG_FIXED = {"1", "a1", "b1", "c1", "a2", "b2", "c2"}
_TAG_SYMBOL = re.compile(r"t[0-9]+\Z")
_TAG_RATIONAL = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?\Z")


def is_valid_tag(tag):
    if not isinstance(tag, str) or not tag:
        return False
    return bool(tag in _TAG_FIXED or _TAG_SYMBOL.match(tag) or _TAG_RATIONAL.match(tag))


def is_rational_tag(tag):
    return isinstance(tag, str) and bool(_TAG_RATIONAL.match(tag))


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: str = "1"
    side: str | None = None


class Graph:
    """Immutable simple graph.  Edges are stored as sorted id pairs."""

    def __init__(self, vertices, edges):
        verts = []
        for v in vertices:
            if isinstance(v, str):
                v = Vertex(v)
            verts.append(v)
        ids = [v.id for v in verts]
        if len(set(ids)) != len(ids):
            raise GraphFormatError("duplicate vertex ids")
        for v in verts:
            if not isinstance(v.id, str) or not v.id:
                raise GraphFormatError(f"bad vertex id: {v.id!r}")
            if v.side not in (None, "A", "B"):
                raise GraphFormatError(f"bad side for {v.id}: {v.side!r}")
            if not is_valid_tag(v.weight):
                raise GraphFormatError(f"bad weight tag for {v.id}: {v.weight!r}")
        idset = set(ids)
        canon = []
        seen = set()
        for e in edges:
            u, v = e
            if u not in idset or v not in idset:
                raise GraphFormatError(f"edge endpoint not a vertex: {(u, v)}")
            if u == v:
                raise GraphFormatError(f"self loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
            canon.append(key)
        self.vertices = tuple(verts)
        self.edges = tuple(canon)
        self.ids = tuple(ids)
        self.index = {vid: i for i, vid in enumerate(ids)}
        adj = {vid: [] for vid in ids}
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = {vid: tuple(sorted(nbrs)) for vid, nbrs in adj.items()}
        if all(v.side is not None for v in verts) and verts:
            by_id = {v.id: v for v in verts}
            for u, v in canon:
                if by_id[u].side == by_id[v].side:
                    raise GraphFormatError(
                        f"declared sides put edge ({u},{v}) inside one class"
                    )

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    def vertex(self, vid):
        return self.vertices[self.index[vid]]

    def degree(self, vid):
        return len(self.adj[vid])

    def has_edge(self, u, v):
        key = (u, v) if u < v else (v, u)
        return key in set(self.edges)

    def weight_tags(self):
        return sorted({v.weight for v in self.vertices})

    def induced_subgraph(self, keep):
        keep = set(keep)
        verts = [v for v in self.vertices if v.id in keep]
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return Graph(verts, edges)

    def relabel_weights(self, mapping):
        """New graph with weight tags rewritten through mapping (id -> tag)."""
        verts = [
            Vertex(v.id, mapping.get(v.id, v.weight), v.side) for v in self.vertices
        ]
        return Graph(verts, self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class Drawing:
    coords: dict
    seed: int | None = None

    def point(self, vid):
        return self.coords[vid]


@dataclass(frozen=True)
class Bipartition:
    side: dict

    @property
    def class_a(self):
        return tuple(sorted(v for v, s in self.side.items() if s == "A"))

    @property
    def class_b(self):
        return tuple(sorted(v for v, s in self.side.items() if s == "B"))

    def smaller_class(self):
        """The class driving the pendant construction.

        Ties break toward the class holding the lexicographically smallest
        vertex id, so the choice is reproducible.
        """
        a, b = self.class_a, self.class_b
        if len(a) < len(b):
            return "A", a
        if len(b) < len(a):
            return "B", b
        if not a:
            return "A", a
        return ("A", a) if min(a) < min(b) else ("B", b)


@dataclass(frozen=True)
class Crossing:
    edge1: tuple
    edge2: tuple
    point: tuple


@dataclass
class CrossingSet:
    crossings: list
    _per_edge: dict = field(default_factory=dict)

    @property
    def k(self):
        return len(self.crossings)

    def edges_involved(self):
        out = set()
        for c in self.crossings:
            out.add(c.edge1)
            out.add(c.edge2)
        return sorted(out)

    def on_edge(self, edge):
        """Crossings on one edge, ordered by parameter from edge[0]."""
        return list(self._per_edge.get(edge, ()))


# -- JSON ----------------------------------------------------------------


def _coord_to_json(q):
    return str(q) if q.denominator != 1 else int(q)


def _coord_from_json(v, where):
    try:
        if isinstance(v, bool):
            raise ValueError
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
    except (ValueError, ZeroDivisionError):
        pass
    raise GraphFormatError(f"bad coordinate {v!r} at {where}")


def graph_to_json(g, drawing=None):
    verts = []
    for v in g.vertices:
        rec = {"id": v.id}
        if v.side is not None:
            rec["side"] = v.side
        if v.weight != "1":
            rec["weight"] = v.weight
        if drawing is not None:
            x, y = drawing.coords[v.id]
            rec["x"] = _coord_to_json(x)
            rec["y"] = _coord_to_json(y)
        verts.append(rec)
    return {"vertices": verts, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj):
    """Parse the interchange dict.  Returns (Graph, Drawing or None)."""
    if not isinstance(obj, dict):
        raise GraphFormatError("top level must be an object")
    vrecs = obj.get("vertices")
    erecs = obj.get("edges", [])
    if not isinstance(vrecs, list) or not isinstance(erecs, list):
        raise GraphFormatError("vertices and edges must be lists")
    verts = []
    coords = {}
    n_with_coords = 0
    for rec in vrecs:
        if not isinstance(rec, dict) or "id" not in rec:
            raise GraphFormatError(f"bad vertex record: {rec!r}")
        vid = rec["id"]
        if not isinstance(vid, str):
            raise GraphFormatError(f"vertex id must be a string: {vid!r}")
        side = rec.get("side")
        weight = rec.get("weight", "1")
        verts.append(Vertex(vid, weight, side))
        if "x" in rec or "y" in rec:
            if not ("x" in rec and "y" in rec):
                raise GraphFormatError(f"vertex {vid} has only one coordinate")
            coords[vid] = (
                _coord_from_json(rec["x"], f"{vid}.x"),
                _coord_from_json(rec["y"], f"{vid}.y"),
            )
            n_with_coords += 1
    for e in erecs:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphFormatError(f"bad edge record: {e!r}")
    try:
        g = Graph(verts, [tuple(e) for e in erecs])
    except GraphFormatError:
        raise
    drawing = None
    if n_with_coords:
        if n_with_coords != len(verts):
            raise GraphFormatError("either all vertices carry coordinates or none")
        drawing = Drawing(coords)
    return g, drawing


def load_graph(path):
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    with fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_json(obj)


def dump_graph(g, drawing=None, path=None):
    obj = graph_to_json(g, drawing)
    text = json.dumps(obj, indent=2)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text


# -- bipartiteness -------------------------------------------------------


def check_bipartite(g):
    """Two-color by BFS, then re-verify every edge across the coloring.

    The lex-smallest vertex of each component lands in class A.  Raises
    OddCycle with an explicit odd closed walk when no two-coloring exists.
    """
    color = {}
    parent = {}
    for root in sorted(g.ids):
        if root in color:
            continue
        color[root] = "A"
        parent[root] = None
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in g.adj[u]:
                if w not in color:
                    color[w] = "B" if color[u] == "A" else "A"
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise OddCycle(_odd_cycle_witness(parent, u, w))
    for u, v in g.edges:
        if color[u] == color[v]:
            raise OddCycle(_odd_cycle_witness(parent, u, v))
    return Bipartition(color)


def _odd_cycle_witness(parent, u, v):
    # walk u and v to the root, splice the two paths at their meeting point
    up, seen = [u], {u: 0}
    x = u
    while parent[x] is not None:
        x = parent[x]
        up.append(x)
        seen[x] = len(up) - 1
    x = v
    while x not in seen:
        x = parent[x]
    lca = x
    left = up[: seen[lca] + 1]
    right = []
    x = v
    while x != lca:
        right.append(x)
        x = parent[x]
    # closed walk: u .. lca .. v, then the conflicting edge back to u
    return left + right[::-1] + [u]


# -- exact geometry ------------------------------------------------------


def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_closed_segment(p, a, b):
    if _orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _proper_crossing_point(p1, p2, q1, q2):
    """Intersection of open segments crossing transversally, else None."""
    o1 = _orient(p1, p2, q1)
    o2 = _orient(p1, p2, q2)
    o3 = _orient(q1, q2, p1)
    o4 = _orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        r = (p2[0] - p1[0], p2[1] - p1[1])
        s = (q2[0] - q1[0], q2[1] - q1[1])
        denom = r[0] * s[1] - r[1] * s[0]
        # exact division; integer coordinates must not fall back to floats
        t = Fraction((q1[0] - p1[0]) * s[1] - (q1[1] - p1[1]) * s[0], 1) / denom
        return (p1[0] + t * r[0], p1[1] + t * r[1]), t
    return None


def validate_drawing(g, drawing):
    """Raise DegenerateDrawing unless the drawing is in general position.

    General position: distinct vertex points, no vertex in the interior of a
    non-incident edge, and no three edges through one crossing point.
    """
    coords = drawing.coords
    for vid in g.ids:
        if vid not in coords:
            raise DegenerateDrawing("missing-coordinate", vid)
    pts = {}
    for vid in g.ids:
        p = coords[vid]
        if p in pts:
            raise DegenerateDrawing("coincident-vertices", (pts[p], vid))
        pts[p] = vid
    for u, v in g.edges:
        a, b = coords[u], coords[v]
        for wid in g.ids:
            if wid in (u, v):
                continue
            if _on_closed_segment(coords[wid], a, b):
                raise DegenerateDrawing("vertex-on-edge", (wid, (u, v)))
    by_point = {}
    edges = g.edges
    for i in range(len(edges)):
        u1, v1 = edges[i]
        for j in range(i + 1, len(edges)):
            u2, v2 = edges[j]
            if {u1, v1} & {u2, v2}:
                continue
            hit = _proper_crossing_point(
                coords[u1], coords[v1], coords[u2], coords[v2]
            )
            if hit is None:
                continue
            point = hit[0]
            group = by_point.setdefault(point, set())
            group.update({edges[i], edges[j]})
            if len(group) > 2:
                raise DegenerateDrawing("concurrent-crossings", (point, sorted(group)))


def detect_crossings(g, drawing):
    """All proper pairwise edge crossings of a validated drawing."""
    validate_drawing(g, drawing)
    coords = drawing.coords
    crossings = []
    per_edge = {}
    edges = g.edges
    for i in range(len(edges)):
        e1 = edges[i]
        for j in range(i + 1, len(edges)):
            e2 = edges[j]
            if set(e1) & set(e2):
                continue
            hit = _proper_crossing_point(
                coords[e1[0]], coords[e1[1]], coords[e2[0]], coords[e2[1]]
            )
            if hit is None:
                continue
            point, t1 = hit
            c = Crossing(e1, e2, point)
            crossings.append(c)
            per_edge.setdefault(e1, []).append((t1, c))
            t2 = _param_on_edge(point, coords[e2[0]], coords[e2[1]])
            per_edge.setdefault(e2, []).append((t2, c))
    for edge in per_edge:
        per_edge[edge].sort(key=lambda tc: tc[0])
    return CrossingSet(crossings, per_edge)


def _param_on_edge(point, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx != 0:
        return (point[0] - a[0]) / dx
    return (point[1] - a[1]) / dy


# -- layout ---------------------------------------------------------------


def circular_layout(g, seed=0, attempts=64):
    """Place vertices on a circle (input order) with a small seeded jitter.

    Retries with successor seeds until the drawing passes validate_drawing;
    the seed that worked is recorded on the Drawing.  Coordinates are exact
    rationals with denominator 16.
    """
    import math

    n = g.n
    if n == 0:
        return Drawing({}, seed)
    radius = 64 * n
    for attempt in range(attempts):
        used = seed + attempt
        rng = random.Random(used)
        coords = {}
        for idx, v in enumerate(g.vertices):
            angle = 2.0 * math.pi * idx / n
            bx = round(radius * math.cos(angle))
            by = round(radius * math.sin(angle))
            jx = Fraction(rng.randrange(-64, 65), 16)
            jy = Fraction(rng.randrange(-64, 65), 16)
            coords[v.id] = (Fraction(bx) + jx, Fraction(by) + jy)
        drawing = Drawing(coords, used)
        try:
            validate_drawing(g, drawing)
        except DegenerateDrawing:
            continue
        return drawing
    raise LayoutFailure(f"no general-position circular layout after {attempts} seeds")


# -- pendants --------------------------------------------------------------


def pendant_extension(g, bip=None):
    """Attach one pendant to every vertex of the smaller color class.

    The output graph carries explicit sides from the two-coloring.  Every
    maximum matching of the output covers the chosen class, which makes the
    maximum count of the output equal the total matching count of the input.
    """
    if bip is None:
        bip = check_bipartite(g)
    cls, members = bip.smaller_class()
    ids = set(g.ids)
    verts = [Vertex(v.id, v.weight, bip.side[v.id]) for v in g.vertices]
    edges = list(g.edges)
    opposite = "B" if cls == "A" else "A"
    for u in members:
        pid = u + "_p"
        while pid in ids:
            pid += "_"
        ids.add(pid)
        verts.append(Vertex(pid, "1", opposite))
        edges.append((u, pid))
    return Graph(verts, edges)
