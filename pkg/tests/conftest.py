"""Shared builders for seeded random graphs plus the acceptance summary."""

import re

from matchpoly import Graph, Vertex


def random_graph(rng, n_max=14, edge_prob=0.35, tag_pool=None, tag_prob=0.35):
    """Erdos-Renyi style graph with ids v01..; tags drawn from tag_pool."""
    n = rng.randint(1, n_max)
    ids = [f"v{i:02d}" for i in range(1, n + 1)]
    verts = []
    for vid in ids:
        tag = "1"
        if tag_pool and rng.random() < tag_prob:
            tag = rng.choice(tag_pool)
        verts.append(Vertex(vid, tag))
    edges = [
        (u, v)
        for i, u in enumerate(ids)
        for v in ids[i + 1 :]
        if rng.random() < edge_prob
    ]
    return Graph(verts, edges)


def random_grid_subgraph(rng, n_max=12, keep=0.7):
    """Random edge-subgraph of a w x h grid: bipartite and planar by birth."""
    shapes = [(w, h) for w in range(1, 7) for h in range(1, 4) if w * h <= n_max]
    w, h = rng.choice(shapes)
    ids = {(i, j): f"g{i}_{j}" for i in range(w) for j in range(h)}
    verts = [Vertex(v) for v in sorted(ids.values())]
    edges = []
    for (i, j), u in ids.items():
        for di, dj in ((1, 0), (0, 1)):
            if (i + di, j + dj) in ids and rng.random() < keep:
                edges.append((u, ids[(i + di, j + dj)]))
    return Graph(verts, edges)


def path_graph(n, prefix="p"):
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph([Vertex(i) for i in ids], list(zip(ids, ids[1:])))


def cycle_graph(n, prefix="v"):
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(ids[i], ids[(i + 1) % n]) for i in range(n)]
    return Graph([Vertex(i) for i in ids], edges)


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for bucket in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(bucket, ()):
            if getattr(rep, "when", "call") != "call" and bucket != "error":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                outcomes[int(m.group(1))] = bucket
    if not outcomes:
        return
    try:
        from test_acceptance import CRITERION_NOTES
    except Exception:
        CRITERION_NOTES = {}
    tw = terminalreporter
    tw.section("acceptance criteria")
    for num in sorted(outcomes):
        verdict = "PASS" if outcomes[num] == "passed" else "FAIL"
        note = CRITERION_NOTES.get(num, "")
        line = f"ACCEPTANCE CRITERION {num:02d}: {verdict}"
        if note and verdict == "FAIL":
            line += f"  ({note})"
        tw.write_line(line)
