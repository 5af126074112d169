"""Top-level acceptance checks, one test per criterion.

Each criterion is asserted exactly as stated, at the stated precision and
tolerance.  Two of them pin known defects in the published constants and
stay red on purpose; CRITERION_NOTES carries the one-line explanation that
the summary hook prints next to the verdict.
"""

import random
import time
from fractions import Fraction

from matchpoly import (
    BallComplex,
    Drawing,
    Graph,
    MultiPoly,
    Vertex,
    check_bipartite,
    compose_crossing_profile,
    count_matchings,
    count_matchings_via_pendant,
    count_via_reduction,
    crossing_constant,
    direct_crossing_profile,
    eliminate_weight,
    enumerate_matchings,
    gadget_constants,
    matching_polynomial,
    matching_polynomial_by_enumeration,
    max_matching_size,
    pendant_extension,
    phi,
    phi_prime,
    replace_crossings,
    symbolic_gadget_polynomial,
    verify_crossing_gadget,
    verify_subgadget,
    weight_map,
)
from matchpoly.constants import PUBLISHED_DECIMALS
from matchpoly import identities

from conftest import cycle_graph, path_graph, random_graph, random_grid_subgraph

F = Fraction

CRITERION_NOTES = {
    1: "published C2 decimal sits ~8.3e-7 from the computed ball, over the "
    "5e-7 gate; a, b, C pass and the c mismatch is itself the expected "
    "outcome",
    3: "displayed expansion differs from the brute-force template polynomial "
    "by exactly 3*a*x*y*z",
}


def _near(ball, ref, slack):
    """Does the ball contain a point within `slack` of the reference?"""
    dr = ball.mid_re - ref[0]
    di = ball.mid_im - ref[1]
    bound = ball.rad + F(slack)
    return dr * dr + di * di <= bound * bound


def square_x():
    g = cycle_graph(4)
    return g, Drawing({"v1": (0, 0), "v2": (3, 3), "v3": (3, 0), "v4": (0, 3)})


def hexagon_two_crossings():
    g = cycle_graph(6)
    d = Drawing(
        {
            "v1": (0, 0),
            "v2": (1, 2),
            "v3": (2, -2),
            "v4": (4, -2),
            "v5": (5, 2),
            "v6": (6, 0),
        }
    )
    return g, d


def test_criterion_01():
    # 128-bit balls for the published constant family vs their decimals
    w = gadget_constants("delta2", 128, "legacy")
    cons = crossing_constant(128, "legacy")
    tight, loose = F(5, 10 ** 7), F(5, 10 ** 5)
    checks = {
        "a(delta2) within 5e-7": _near(w.a, PUBLISHED_DECIMALS["a_delta2"], tight),
        "b(delta2) within 5e-7": _near(w.b, PUBLISHED_DECIMALS["b_delta2"], tight),
        "C2 within 5e-7": _near(w.norm, PUBLISHED_DECIMALS["C2"], tight),
        "C within 5e-5": _near(cons.value, PUBLISHED_DECIMALS["C"], loose),
        "published c(delta2) decimal does not match the closed form": not _near(
            w.c, PUBLISHED_DECIMALS["c_delta2"], tight
        ),
    }
    print("recomputed c(delta2) =", w.c.midpoint_str(20))
    print("computed C2          =", w.norm.midpoint_str(20))
    bad = [label for label, ok in checks.items() if not ok]
    assert not bad, f"failed sub-checks: {bad}"


def test_criterion_02():
    tol = F(1, 10 ** 20)
    for kind in ("delta1", "delta2"):
        w = gadget_constants(kind, 256, "legacy")
        assign = {"a": w.a, "b": w.b, "c": w.c}
        for poly in identities.system(kind, "transcribed"):
            residual = poly.evaluate(assign)
            assert residual.contains_zero()
            assert residual.rad < tol
    root = (BallComplex.from_int(105, 256).sqrt() - 13) / 8
    val = identities.elimination_cubic().evaluate({"x": root})
    assert val.contains_zero()
    assert val.rad < tol


def test_criterion_03():
    mp = symbolic_gadget_polynomial()
    displayed = identities.expansion("transcribed")
    assert mp == displayed, f"difference: {mp - displayed}"


def test_criterion_04():
    for kind, n_allowed in (("delta1", 4), ("delta2", 2)):
        rep = verify_subgadget(kind, 256)
        assert rep.passed, [r.label for r in rep.failing()]
        assert sum("= norm" in r.label for r in rep.rows) == n_allowed
        assert sum("= 0" in r.label for r in rep.rows) == 8 - n_allowed
        assert all(
            r.radius_exponent is None or r.radius_exponent <= -66 for r in rep.rows
        )
        control = verify_subgadget(kind, 256, perturb_b=F(1, 1000))
        assert not control.passed


def test_criterion_05():
    t0 = time.perf_counter()
    comp = compose_crossing_profile(128)
    t_compose = time.perf_counter() - t0
    t0 = time.perf_counter()
    direct = direct_crossing_profile(128)
    t_direct = time.perf_counter() - t0
    cc = crossing_constant(128)
    tol = F(1, 10 ** 20)
    allowed = {(0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)}
    for pattern in comp:
        for val in (comp[pattern], direct[pattern]):
            assert val.rad < tol
        assert comp[pattern].overlaps(direct[pattern])
        if pattern in allowed:
            assert comp[pattern].overlaps(cc.value)
            assert direct[pattern].overlaps(cc.value)
        else:
            assert comp[pattern].contains_zero()
            assert direct[pattern].contains_zero()
    rep = verify_crossing_gadget(128, direct=True)
    assert rep.passed, [r.label for r in rep.failing()]
    sym_rows = [r for r in rep.rows if r.label.startswith("symmetry")]
    assert len(sym_rows) >= 12
    print(f"composition: {t_compose:.2f}s, direct recursion: {t_direct:.2f}s")
    assert t_compose < 10
    assert t_direct < 600


def test_criterion_06():
    g, d = square_x()
    cert = count_via_reduction(g, d)
    assert cert.count == 7 == count_matchings(g)
    assert cert.k == 1 and cert.cross_checked
    g6, d6 = hexagon_two_crossings()
    cert6 = count_via_reduction(g6, d6)
    assert cert6.count == 18 == count_matchings(g6)
    assert cert6.k == 2
    plain = Drawing({"v1": (0, 0), "v2": (3, 0), "v3": (3, 3), "v4": (0, 3)})
    cert0 = count_via_reduction(cycle_graph(4), plain)
    assert (cert0.count, cert0.k) == (7, 0)


def test_criterion_07():
    rng = random.Random(20260815)
    t1, t2 = MultiPoly.variable("t1"), MultiPoly.variable("t2")
    ring_weights = [
        {"t1": 3, "t2": -2},
        {"t1": F(2, 3), "t2": F(-7, 5)},
        {"t1": t1, "t2": t2},
    ]
    for trial in range(200):
        g = random_graph(rng, n_max=14, edge_prob=0.3, tag_pool=["t1", "t2"])
        weights = ring_weights[trial % 3]
        direct = matching_polynomial(g, weights)
        oracle = matching_polynomial_by_enumeration(g, weights)
        assert direct == oracle
        # component multiplicativity on a prefixed disjoint union
        h = random_graph(rng, n_max=6, edge_prob=0.4)
        union = Graph(
            [Vertex("L" + v.id, v.weight) for v in g.vertices]
            + [Vertex("R" + v.id, v.weight) for v in h.vertices],
            [("L" + u, "L" + v) for u, v in g.edges]
            + [("R" + u, "R" + v) for u, v in h.edges],
        )
        y = MultiPoly.variable("y")
        assert matching_polynomial(union, uniform_weight=y) == matching_polynomial(
            g, uniform_weight=y
        ) * matching_polynomial(h, uniform_weight=y)
        # all-ones specialization counts matchings
        poly = matching_polynomial(g, uniform_weight=y)
        assert poly.evaluate({"y": 1}) == len(enumerate_matchings(g))


def test_criterion_08():
    rng = random.Random(8151015)
    horner = lambda coeffs, x: sum(
        c * x ** j for j, c in enumerate(coeffs)
    )
    trials = 0
    while trials < 100:
        g = random_graph(
            rng, n_max=10, edge_prob=0.35, tag_pool=["2/3", "-1/2"], tag_prob=0.3
        )
        tags = sorted(t for t in (v.weight for v in g.vertices) if t != "1")
        if not tags or len([v for v in g.vertices if v.weight == tags[0]]) > 4:
            continue
        trials += 1
        x_tag = tags[0]
        run = eliminate_weight(g, x_tag)
        assert run.result == matching_polynomial(g)
        for node, value in zip(run.nodes, run.values):
            assert horner(run.coefficients, node) == value
        assert run.nodes == tuple(range(2, run.tagged_count + 3))


def test_criterion_09():
    rng = random.Random(91212)
    for _ in range(100):
        g = random_grid_subgraph(rng, n_max=12)
        bip = check_bipartite(g)
        gp = pendant_extension(g, bip)
        _, members = bip.smaller_class()
        assert max_matching_size(gp) == len(members)
        total = count_matchings(g)
        assert total == count_matchings_via_pendant(g)
        maximal = set()
        for m in enumerate_matchings(g):
            mx = phi_prime(g, gp, m)
            assert len(mx) == len(members)
            assert phi(g, gp, mx) == tuple(sorted(m))
            maximal.add(mx)
        assert len(maximal) == total
        for mm in enumerate_matchings(gp):
            if len(mm) != len(members):
                continue
            assert phi_prime(g, gp, phi(g, gp, mm)) == tuple(sorted(mm))
    assert count_matchings_via_pendant(path_graph(3)) == 3
    assert count_matchings_via_pendant(path_graph(2)) == 2
    assert count_matchings_via_pendant(cycle_graph(4)) == 7


def test_criterion_10():
    g, d = square_x()
    inst = replace_crossings(g, d)
    syms = {t: MultiPoly.variable(t) for t in ("a1", "b1", "c1", "a2", "b2", "c2")}
    mp = matching_polynomial(inst.graph, syms, budget=50_000_000)
    assert all(isinstance(c, int) for c in mp.terms.values())
    wm = weight_map(256)
    val = mp.evaluate(wm)
    ratio = val / crossing_constant(256).value
    assert ratio.certify_integer() == 7
