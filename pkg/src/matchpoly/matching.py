"""Matching polynomial computation, enumeration oracles, boundary profiles.

The engine computes the vertex-weighted matching polynomial

    MP(G) = sum over matchings M of prod over vertices v not covered by M of w(v)

by pivot recursion with memoization on induced-subgraph bitmasks:

    MP(G) = w(v) * MP(G - v) + sum over u adjacent to v of MP(G - v - u)

The pivot v is a maximum-degree vertex of the current component, ties broken
toward the smallest id, and connected components are factored out and
multiplied, so the whole computation is deterministic for a given graph.

Weights live in any commutative ring whose values support + and * with each
other and with ints: ints, Fractions, MultiPoly, BallComplex.  The weight
value 1 (the int) is special-cased away from multiplications, which keeps
the all-ones specialization on the fast integer path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadBoundary,
    ResourceBudgetExceeded,
    TooLargeForOracle,
    UnknownTag,
    VerificationFailed,
)
from .graphs import check_bipartite, is_rational_tag

DEFAULT_NODE_BUDGET = 5_000_000
ORACLE_BOUND = 20


def resolve_weights(g, weights=None, uniform_weight=None):
    """Per-vertex weight values in sorted-id order.

    Tags resolve through the mapping first, then "1" -> 1 and rational tags
    -> Fraction; anything else without a mapping raises UnknownTag.
    """
    order = sorted(g.ids)
    if uniform_weight is not None:
        return order, [uniform_weight] * len(order)
    weights = weights or {}
    vals = []
    for vid in order:
        tag = g.vertex(vid).weight
        if tag in weights:
            vals.append(weights[tag])
        elif tag == "1":
            vals.append(1)
        elif is_rational_tag(tag):
            f = Fraction(tag)
            vals.append(int(f) if f.denominator == 1 else f)
        else:
            raise UnknownTag(f"no value assigned to weight tag {tag!r}")
    return order, vals


class _Engine:
    __slots__ = ("adj", "w", "w_is_one", "memo", "calls", "budget", "order", "pos")

    def __init__(self, g, order, vals, budget):
        self.order = order
        self.pos = {vid: k for k, vid in enumerate(order)}
        n = len(order)
        self.adj = [0] * n
        for u, v in g.edges:
            iu, iv = self.pos[u], self.pos[v]
            self.adj[iu] |= 1 << iv
            self.adj[iv] |= 1 << iu
        self.w = vals
        self.w_is_one = [isinstance(x, int) and x == 1 for x in vals]
        self.memo = {}
        self.calls = 0
        self.budget = budget

    def full_mask(self):
        return (1 << len(self.order)) - 1

    def mask_without(self, ids):
        m = self.full_mask()
        for vid in ids:
            m &= ~(1 << self.pos[vid])
        return m

    def _component(self, mask):
        frontier = mask & -mask
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= self.adj[b.bit_length() - 1]
            frontier = nxt & mask & ~comp
        return comp

    def mp(self, mask):
        if mask == 0:
            return 1
        memo = self.memo
        got = memo.get(mask)
        if got is not None:
            return got
        self.calls += 1
        if self.calls > self.budget:
            raise ResourceBudgetExceeded(
                f"matching polynomial recursion exceeded {self.budget} nodes"
            )
        comp = self._component(mask)
        if comp != mask:
            val = self.mp(comp) * self.mp(mask ^ comp)
        else:
            adj = self.adj
            best, best_deg = -1, -1
            m = mask
            while m:
                b = m & -m
                m ^= b
                i = b.bit_length() - 1
                d = (adj[i] & mask).bit_count()
                if d > best_deg:
                    best, best_deg = i, d
            rest = mask & ~(1 << best)
            tail = self.mp(rest)
            val = tail if self.w_is_one[best] else self.w[best] * tail
            m = adj[best] & mask
            while m:
                b = m & -m
                m ^= b
                val = val + self.mp(rest & ~b)
        memo[mask] = val
        return val


def matching_polynomial(g, weights=None, *, uniform_weight=None, budget=DEFAULT_NODE_BUDGET):
    """The vertex-weighted matching polynomial value of g."""
    order, vals = resolve_weights(g, weights, uniform_weight)
    eng = _Engine(g, order, vals, budget)
    return eng.mp(eng.full_mask())


def enumerate_matchings(g, bound=ORACLE_BOUND):
    """All matchings of g, each a tuple of canonical edges; empty first.

    Deliberately naive take/skip recursion over the edge list, used as the
    independent oracle against the recursion engine.  Refuses graphs with
    more than `bound` vertices.
    """
    if g.n > bound:
        raise TooLargeForOracle(f"{g.n} vertices exceeds enumeration bound {bound}")
    edges = g.edges
    out = []
    covered = set()
    current = []

    def rec(i):
        if i == len(edges):
            out.append(tuple(current))
            return
        rec(i + 1)
        u, v = edges[i]
        if u not in covered and v not in covered:
            covered.add(u)
            covered.add(v)
            current.append(edges[i])
            rec(i + 1)
            current.pop()
            covered.discard(u)
            covered.discard(v)

    rec(0)
    return out


def matching_polynomial_by_enumeration(
    g, weights=None, *, uniform_weight=None, bound=ORACLE_BOUND
):
    """Oracle MP: explicit sum over enumerate_matchings."""
    order, vals = resolve_weights(g, weights, uniform_weight)
    wt = dict(zip(order, vals))
    total = None
    for matching in enumerate_matchings(g, bound):
        covered = set()
        for u, v in matching:
            covered.add(u)
            covered.add(v)
        term = 1
        for vid in order:
            if vid not in covered:
                term = term * wt[vid]
        total = term if total is None else total + term
    return 0 if total is None else total


@dataclass(frozen=True)
class SizeDistribution:
    counts: tuple  # counts[j] = number of matchings with j edges
    nu: int  # maximum matching size
    total: int  # M(G)
    maximum: int  # MM(G)


def size_distribution(g, *, budget=DEFAULT_NODE_BUDGET):
    """Matching counts by size, from the y-uniform matching polynomial."""
    from .polyring import MultiPoly

    y = MultiPoly.variable("y")
    p = matching_polynomial(g, uniform_weight=y, budget=budget)
    if isinstance(p, int):
        p = MultiPoly.constant(p)
    n = g.n
    counts = []
    for j in range(n // 2 + 1):
        c = p.coefficient({"y": n - 2 * j})
        counts.append(c.constant_value())
    if counts and counts[0] != 1:
        raise VerificationFailed("empty matching count is not 1")
    nu = max((j for j, c in enumerate(counts) if c), default=0)
    return SizeDistribution(tuple(counts), nu, sum(counts), counts[nu])


def count_matchings(g, *, cross_check=True, budget=DEFAULT_NODE_BUDGET, bound=ORACLE_BOUND):
    """M(G), with an enumeration cross-check on oracle-sized graphs."""
    total = matching_polynomial(g, uniform_weight=1, budget=budget)
    if cross_check and g.n <= bound:
        oracle = len(enumerate_matchings(g, bound))
        if oracle != total:
            raise VerificationFailed(
                f"matching count mismatch: recursion {total}, enumeration {oracle}"
            )
    return total


def count_maximum_matchings(
    g, *, cross_check=True, budget=DEFAULT_NODE_BUDGET, bound=ORACLE_BOUND
):
    """MM(G), with enumeration and augmenting-path cross-checks."""
    sd = size_distribution(g, budget=budget)
    if cross_check and g.n <= bound:
        sizes = [len(m) for m in enumerate_matchings(g, bound)]
        nu = max(sizes, default=0)
        mm = sizes.count(nu)
        if (nu, mm) != (sd.nu, sd.maximum):
            raise VerificationFailed(
                f"maximum matching mismatch: distribution ({sd.nu}, {sd.maximum}),"
                f" enumeration ({nu}, {mm})"
            )
    return sd.maximum


def max_matching_size(g):
    """Maximum matching size of a bipartite graph, by augmenting paths."""
    bip = check_bipartite(g)
    match = {}

    def augment(u, visited):
        for w in g.adj[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match or augment(match[w], visited):
                match[w] = u
                return True
        return False

    size = 0
    for u in bip.class_a:
        if augment(u, set()):
            size += 1
    return size


@dataclass
class BoundaryProfile:
    boundary: tuple  # ((edge, terminal_id), ...) in pattern bit order
    table: dict  # tuple of 0/1 (1 = boundary edge in the matching) -> value

    def value(self, pattern):
        return self.table[tuple(int(b) for b in pattern)]

    def patterns(self):
        return sorted(self.table)


def boundary_profile(g, boundary, weights=None, *, budget=DEFAULT_NODE_BUDGET):
    """Weighted matching sums of the interior, per boundary in/out pattern.

    `boundary` lists (edge, terminal_id) pairs; each terminal must be a
    degree-1 endpoint of its edge, and terminals must be pairwise distinct.
    Pattern bit i = 1 means boundary edge i is in the matching, which removes
    its attachment vertex from the interior.  Terminal weights are never
    included; patterns forcing one attachment into two matched boundary
    edges get value 0.
    """
    boundary = tuple((tuple(sorted(e)), t) for e, t in boundary)
    eset = set(g.edges)
    terminals = []
    attachments = []
    for edge, term in boundary:
        if edge not in eset:
            raise BadBoundary(f"boundary edge {edge} is not in the graph")
        if term not in edge:
            raise BadBoundary(f"terminal {term} is not an endpoint of {edge}")
        if g.degree(term) != 1:
            raise BadBoundary(f"terminal {term} has degree {g.degree(term)}, want 1")
        terminals.append(term)
        attachments.append(edge[0] if edge[1] == term else edge[1])
    if len(set(terminals)) != len(terminals):
        raise BadBoundary("boundary edges share a terminal")
    interior_ids = [vid for vid in g.ids if vid not in set(terminals)]
    interior = g.induced_subgraph(interior_ids)
    order, vals = resolve_weights(interior, weights)
    eng = _Engine(interior, order, vals, budget)
    table = {}
    kb = len(boundary)
    for bits in range(1 << kb):
        pattern = tuple((bits >> i) & 1 for i in range(kb))
        used = [attachments[i] for i in range(kb) if pattern[i]]
        if len(set(used)) != len(used):
            table[pattern] = 0
            continue
        table[pattern] = eng.mp(eng.mask_without(used))
    return BoundaryProfile(boundary, table)
