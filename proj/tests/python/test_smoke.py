import distsum


def test_bounds_identity():
    for delta in range(2, 12):
        p = distsum.bound_params(delta, 2)
        assert p.palette_max == 13 * delta - 6
        assert p.k_val == p.m_quot + delta - 1


def test_color_and_verify_roundtrip():
    g = distsum.cycle_graph(6)
    coloring = distsum.color_distinguishing(g, 2)
    report = distsum.verify(g, coloring, 2)
    assert report.ok()
    assert report.proper and report.distinguishing
    p = distsum.bound_params(g.max_degree(), 2)
    assert report.max_color <= p.palette_max


def test_star_sums():
    g = distsum.star_graph(4)
    coloring = distsum.color_distinguishing(g, 3)
    sums = {v: distsum.weighted_degree(g, coloring, v) for v in range(g.n)}
    assert sums[0] == 10
    assert sorted(sums[v] for v in range(1, 5)) == [1, 2, 3, 4]


def test_exact_anchors():
    res = distsum.exact_index(distsum.cycle_graph(4), 2, 10)
    assert res is not None
    k, witness = res
    assert k == 4
    assert distsum.verify(distsum.cycle_graph(4), witness, 2).ok()

    loose = distsum.exact_sr(distsum.path_graph(3), 1, 10)
    assert loose is not None and loose[0] == 1


def test_bad_coloring_is_reported():
    g = distsum.cycle_graph(4)
    bad = [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]
    report = distsum.verify(g, bad, 2)
    assert report.proper
    assert not report.distinguishing
    assert len(report.conflicts) == 6


def test_generators_and_neighborhoods():
    graphs = distsum.all_connected(5)
    assert len(graphs) == 21
    db = distsum.de_bruijn_undirected(2, 2)
    assert db.n == 4 and db.max_degree() <= 4
    assert distsum.r_neighborhood(distsum.cycle_graph(6), 0, 2) == [1, 2, 4, 5]


def test_isolated_edge_rejected():
    import pytest

    g = distsum.Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        distsum.color_distinguishing(g, 2)
