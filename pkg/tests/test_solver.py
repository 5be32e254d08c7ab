import random

import pytest

from gborsuk.quotient import LoopyGraph, QuotGraph
from gborsuk.solver import (ColoringProblem, ImproperPrecoloring, SolverTimeout, dsatur_upper,
                            exact_chromatic, export_ilp, extend_precoloring, format_solution,
                            import_solution, k_colorable, max_clique, verify_coloring)
from oracles import brute_chromatic, brute_clique, brute_colorable, circulant


def graph(n, edges):
    return QuotGraph.from_edges(n, edges)


def complete(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


C12 = graph(12, circulant(12, (3, 4, 5)))


def random_graph(rng, n, p):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_dsatur_examples():
    assert dsatur_upper(complete(6)).num_colors_used == 6
    assert dsatur_upper(C12).num_colors_used <= 5
    assert dsatur_upper(graph(10, [])).num_colors_used == 1
    assert dsatur_upper(C12).is_proper(C12)


def test_max_clique_examples():
    assert len(max_clique(complete(6))) == 6
    q = max_clique(C12)
    assert len(q) == 3 and all(C12.has_edge(a, b) for a in q for b in q if a != b)
    bip = graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert len(max_clique(bip)) == 2


def test_exact_examples():
    assert exact_chromatic(C12)[0] == 4
    assert exact_chromatic(complete(6))[0] == 6
    assert exact_chromatic(graph(9, [(i, (i + 1) % 9) for i in range(9)]))[0] == 3
    assert exact_chromatic(graph(0, []))[0] == 0
    assert k_colorable(C12, 3) is None


def test_extend_examples():
    path = graph(3, [(0, 1), (1, 2)])
    col = extend_precoloring(ColoringProblem(path, 2, {0: 0, 2: 0}))
    assert col.colors == (0, 1, 0)
    with pytest.raises(ImproperPrecoloring):
        extend_precoloring(ColoringProblem(complete(3), 3, {0: 0, 1: 0}))
    p = ColoringProblem(C12, 4, {0: 0, 3: 1, 6: 2, 9: 3})
    for method in ("bnb", "milp"):
        col = extend_precoloring(p, method=method)
        assert not verify_coloring(C12, col.colors, 4, p.precolored)
    assert extend_precoloring(ColoringProblem(C12, 3)) is None
    assert extend_precoloring(ColoringProblem(C12, 3), method="milp") is None


def test_problem_validation():
    with pytest.raises(LoopyGraph):
        ColoringProblem(QuotGraph.from_edges(2, [(0, 0)]), 2)
    with pytest.raises(ValueError):
        ColoringProblem(C12, 2, {0: 5})


def test_random_graphs_against_brute_force():
    rng = random.Random(12345)
    bad = 0
    for trial in range(220):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.choice((0.2, 0.4, 0.6, 0.8)))
        chi, col = exact_chromatic(g)
        bad += chi != brute_chromatic(n, g.edges) or not col.is_proper(g) or col.num_colors_used != chi
        bad += len(max_clique(g)) != brute_clique(n, g.edges)
        k = rng.randint(1, 4)
        pre = {}
        for v in rng.sample(range(n), rng.randint(0, min(n, 3))):
            c = rng.randrange(k)
            if all(pre.get(w) != c for w in g.adj[v]):
                pre[v] = c
        truth = brute_colorable(n, g.edges, k, pre) is not None
        for method in ("bnb", "milp") if trial % 10 == 0 else ("bnb",):
            got = extend_precoloring(ColoringProblem(g, k, pre), method=method)
            bad += (got is not None) != truth
            if got is not None:
                bad += bool(verify_coloring(g, got.colors, k, pre))
    assert bad == 0


def test_twelve_vertex_graphs():
    rng = random.Random(7)
    for p in (0.2, 0.3, 0.3, 0.4):
        g = random_graph(rng, 12, p)
        chi, _ = exact_chromatic(g)
        assert chi == brute_chromatic(12, g.edges)


def test_deterministic():
    rng = random.Random(3)
    g = random_graph(rng, 60, 0.3)
    a = exact_chromatic(g)
    b = exact_chromatic(g)
    assert a == b


def test_budget_timeout_reports_bracket():
    rng = random.Random(5)
    g = random_graph(rng, 70, 0.5)
    with pytest.raises(SolverTimeout) as info:
        exact_chromatic(g, budget=3)
    assert info.value.upper is not None


def test_ilp_shape():
    text = export_ilp(ColoringProblem(complete(3), 3))
    lines = text.splitlines()
    assert sum(1 for l in lines if l.startswith(" a_")) == 3
    assert sum(1 for l in lines if l.startswith(" e_")) == 9
    binaries = lines[lines.index("Binary") + 1:lines.index("End")]
    assert sum(len(l.split()) for l in binaries) == 9
    fixed = export_ilp(ColoringProblem(complete(3), 3, {1: 2}))
    assert " x_1_2 = 1" in fixed.splitlines()


def test_import_solution():
    p = ColoringProblem(C12, 4, {0: 0})
    col = extend_precoloring(p)
    assert import_solution(p, format_solution(col)) == col
    lp_style = "".join(f"x_{v}_{c} 1\n" for v, c in enumerate(col.colors))
    assert import_solution(p, lp_style) == col
    wrong = format_solution(col).replace("v 0 0", "v 0 1")
    with pytest.raises(ValueError):
        import_solution(p, wrong)
    with pytest.raises(ValueError):
        import_solution(p, "v 0 0\n")
