import random

import pytest

from unicyclic_eds.graph import (
    Graph,
    GraphError,
    bfs_distances,
    build_graph,
    degree_distance,
    eccentricity,
    eds,
    eds_by_pairs,
    format_edge_list,
    girth,
    invariant_report,
    max_degree,
    parse_edge_list,
    relabel,
    transmission,
    unique_cycle,
    wiener,
)
from unicyclic_eds.families import make_cycle, make_hnk, make_named
from unicyclic_eds.enumeration import enumerate_unicyclic


def test_build_graph_basics():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and len(g.edges) == 3
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.adj[0] == (1, 3)


def test_build_graph_rejects_bad_input():
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 0)])
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(3, [(0, 0)])
    with pytest.raises(GraphError, match="out of range"):
        build_graph(3, [(0, 5)])


def test_graph_is_immutable():
    g = make_cycle(4)
    with pytest.raises(AttributeError):
        g.n = 7


def test_bfs_distances():
    assert bfs_distances(make_cycle(4), 0) == (0, 1, 2, 1)
    assert bfs_distances(make_cycle(6), 0) == (0, 1, 2, 3, 2, 1)
    path = build_graph(3, [(0, 1), (1, 2)])
    assert bfs_distances(path, 0) == (0, 1, 2)


def test_disconnected_is_an_error():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError, match="disconnected"):
        bfs_distances(g, 0)
    with pytest.raises(GraphError, match="disconnected"):
        eds(g)


def test_eccentricity_and_transmission_on_cycles():
    c6 = make_cycle(6)
    assert all(eccentricity(c6, v) == 3 and transmission(c6, v) == 9 for v in range(6))
    c5 = make_cycle(5)
    assert all(eccentricity(c5, v) == 2 and transmission(c5, v) == 6 for v in range(5))
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert eccentricity(star, 0) == 1 and transmission(star, 0) == 4


def test_eds_values():
    assert eds(make_cycle(4)) == 32
    assert eds(make_cycle(5)) == 60
    assert eds(make_named("U", 4, 2)) == 29


def test_wiener_and_degree_distance():
    assert wiener(make_cycle(4)) == 8
    assert wiener(make_cycle(5)) == 15
    assert degree_distance(build_graph(2, [(0, 1)])) == 2


def test_unique_cycle():
    assert unique_cycle(make_cycle(5)) == (0, 1, 2, 3, 4)
    assert unique_cycle(make_hnk(6, 3)) == (0, 1, 2)
    tree = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert unique_cycle(tree) is None
    dense = build_graph(4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)])
    with pytest.raises(GraphError, match="more than one cycle"):
        unique_cycle(dense)


def test_unique_cycle_orientation_is_deterministic():
    # same cycle, scrambled labels: orientation rule still applies
    g = build_graph(5, [(4, 2), (2, 0), (0, 4), (4, 1), (1, 3)])
    cycle = unique_cycle(g)
    assert cycle[0] == min(cycle)
    assert cycle[1] == min(w for w in g.adj[cycle[0]] if w in set(cycle))


def test_girth():
    assert girth(make_cycle(7)) == 7
    assert girth(make_hnk(8, 4)) == 4
    assert girth(build_graph(4, [(0, 1), (1, 2), (2, 3)])) == 0
    dense = build_graph(4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)])
    assert girth(dense) == 3


def test_eds_pair_form_agrees():
    for n in range(4, 8):
        for _, g in enumerate_unicyclic(n):
            assert eds(g) == eds_by_pairs(g)


def test_relabel_preserves_scalars():
    rng = random.Random(20240811)
    graphs = [make_named("U", 9, 4), make_hnk(8, 5), make_cycle(7)]
    for g in graphs:
        base = (eds(g), wiener(g), degree_distance(g), max_degree(g))
        for _ in range(25):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert (eds(h), wiener(h), degree_distance(h), max_degree(h)) == base


def test_invariant_report():
    report = invariant_report(make_named("U", 10, 5))
    assert report.eds == 672
    assert report.matching_number == 5
    assert report.girth == 3
    assert report.max_degree == 6
    assert sum(report.transmissions) == 2 * report.wiener
    assert report.radius <= report.diameter <= 2 * report.radius
    assert report.eds == sum(e * t for e, t in
                             zip(report.eccentricities, report.transmissions))


def test_edge_list_round_trip():
    g = make_named("U1", 10, 4)
    text = format_edge_list(g)
    back = parse_edge_list(text)
    assert back.n == g.n and back.edges == g.edges


def test_edge_list_accepts_comments():
    g = parse_edge_list("# a triangle\nn 3\n0 1\n1 2\n# last edge\n2 0\n")
    assert len(g.edges) == 3


@pytest.mark.parametrize("text,fragment", [
    ("0 1\n", "expected 'n <order>'"),
    ("n 3\n0\n", "expected '<u> <v>'"),
    ("n 3\n0 x\n", "not integers"),
    ("n 3\n0 7\n", "line 2"),
    ("n 3\n1 1\n", "self-loop"),
    ("n 3\n0 1\n0 1\n", "line 3"),
    ("# nothing\n", "no 'n <order>'"),
])
def test_edge_list_diagnostics(text, fragment):
    with pytest.raises(GraphError, match=None) as err:
        parse_edge_list(text)
    assert fragment in str(err.value)
