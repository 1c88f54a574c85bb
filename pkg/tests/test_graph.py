from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from gluedvis import (
    DisconnectedGraphError,
    GraphInputError,
    VertexSet,
    claw_centers,
    count_shortest_paths,
    format_edge_list,
    from_edge_list,
    is_isometric_subgraph,
    on_some_shortest_path,
    parse_edge_list,
    simplicial_vertices,
)
from oracles import to_nx
from strategies import connected_graphs

# GT(2) labels: roots 0 and 3; depth-1 vertices 1, 2 (copy 1) and 4, 5 (copy 2);
# quasi-leaves 6, 7 under 1/4 and 8, 9 under 2/5.
ROOT1, ROOT2 = 0, 3


def test_c4_distances(c4):
    assert c4.dist[0][2] == 2
    assert c4.spcount[0][2] == 2


def test_single_edge():
    g = from_edge_list(2, [(0, 1)])
    assert g.dist[0][1] == 1
    assert g.spcount[0][1] == 1


def test_gt2_root_to_root(gt2):
    g, _ = gt2
    expected = len(list(nx.all_shortest_paths(to_nx(g), ROOT1, ROOT2)))
    assert expected == 4
    assert g.dist[ROOT1][ROOT2] == 4
    assert count_shortest_paths(g, ROOT1, ROOT2) == 4


def test_duplicate_edges_merged():
    g = from_edge_list(3, [(0, 1), (1, 0), (1, 2), (0, 1)])
    assert g.num_edges == 2
    assert g.adjacency[1] == (0, 2)


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 1)], DisconnectedGraphError),
        (2, [(0, 2)], GraphInputError),
        (2, [(1, 1), (0, 1)], GraphInputError),
        (0, [], GraphInputError),
    ],
)
def test_rejects_bad_input(n, edges, exc):
    with pytest.raises(exc):
        from_edge_list(n, edges)


def test_disconnected_message():
    with pytest.raises(DisconnectedGraphError, match="graph must be connected"):
        from_edge_list(4, [(0, 1), (2, 3)])


def test_graph_is_immutable(c4):
    with pytest.raises(AttributeError):
        c4.n = 5


def test_edge_list_round_trip(gt2):
    g, _ = gt2
    text = format_edge_list(g)
    assert text.splitlines()[0] == "10 12"
    again = parse_edge_list("# GT(2)\n" + text)
    assert again.edges() == g.edges()


@pytest.mark.parametrize(
    "text",
    ["", "3 1\n0 1\n1 2\n", "2 1\n0 x\n", "2 1\n0 1 2\n"],
)
def test_parse_errors(text):
    with pytest.raises(GraphInputError):
        parse_edge_list(text)


def test_on_some_shortest_path(gt2, c4):
    g, meta = gt2
    for leaf in meta.quasi_leaves:
        assert on_some_shortest_path(g, ROOT1, ROOT2, leaf)
    assert not on_some_shortest_path(c4, 0, 1, 2)
    assert on_some_shortest_path(c4, 0, 2, 0)


def test_isometric_tree_copies(gt2):
    g, meta = gt2
    for c in (0, 1):
        copy = [v for v, owner in meta.copy_of.items() if owner in (c, "shared")]
        assert len(copy) == 7
        assert is_isometric_subgraph(g, copy)
    assert not is_isometric_subgraph(g, [ROOT1, 6])


def test_isometric_c4(c4):
    assert is_isometric_subgraph(c4, [0, 1, 2])
    assert not is_isometric_subgraph(c4, [0, 2])


@pytest.mark.parametrize("r, t", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)])
def test_glued_copies_isometric(r, t):
    from gluedvis import build_glued

    g, meta = build_glued(r, t)
    for c in (0, 1):
        copy = [v for v, owner in meta.copy_of.items() if owner in (c, "shared")]
        assert is_isometric_subgraph(g, copy)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_path_count_within_a_copy(r):
    from gluedvis import build_glued

    g, meta = build_glued(r, 2)
    leaves = meta.quasi_leaves
    copy = [v for v, owner in meta.copy_of.items() if owner in (0, "shared")]
    for u, v in combinations(copy, 2):
        expected = 2 if u in leaves and v in leaves else 1
        assert count_shortest_paths(g, u, v) == expected, (u, v)


def test_twin_and_parent_path_counts(gt2):
    g, _ = gt2
    assert count_shortest_paths(g, 6, 7) == 2
    assert count_shortest_paths(g, ROOT1, 1) == 1


def test_simplicial(gt2, c4):
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert simplicial_vertices(p3).to_list() == [0, 2]
    assert len(simplicial_vertices(gt2[0])) == 0
    assert len(simplicial_vertices(c4)) == 0


def test_claw_centers(gt2, c4):
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert claw_centers(star).to_list() == [0]
    assert len(claw_centers(c4)) == 0
    g, _ = gt2
    h = to_nx(g)
    brute = [
        v for v in h
        if any(not (h.has_edge(a, b) or h.has_edge(a, c) or h.has_edge(b, c)) for a, b, c in combinations(h[v], 3))
    ]
    # roots have degree 2 in a binary copy, so only the depth-1 vertices qualify
    assert brute == [1, 2, 4, 5]
    assert claw_centers(g).to_list() == brute


def test_vertex_set_algebra():
    a = VertexSet(6, [0, 2, 4])
    b = VertexSet(6, [2, 3])
    assert (a | b).to_list() == [0, 2, 3, 4]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 4]
    assert (~a).to_list() == [1, 3, 5]
    assert 2 in a and 3 not in a and 9 not in a
    assert len(a) == 3
    with pytest.raises(GraphInputError):
        VertexSet(3, [3])
    with pytest.raises(ValueError):
        a | VertexSet(5, [1])


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_metric_matches_networkx(g):
    h = to_nx(g)
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    for u in range(g.n):
        assert g.spcount[u][u] == 1
        for v in range(g.n):
            assert g.dist[u][v] == lengths[u][v] == g.dist[v][u]
            assert (g.dist[u][v] == 0) == (u == v)
            if u != v:
                assert g.spcount[u][v] == len(list(nx.all_shortest_paths(h, u, v)))
            if v in g.adjacency[u]:
                assert g.spcount[u][v] == 1


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_metric_invariants(g):
    n = g.n
    for u in range(n):
        for v in range(n):
            for w in range(n):
                assert g.dist[u][v] <= g.dist[u][w] + g.dist[w][v]
                if on_some_shortest_path(g, u, v, w):
                    assert g.dist[u][w] <= g.dist[u][v]
            if u != v:
                d = g.dist[u][v]
                assert g.spcount[u][v] == sum(g.spcount[u][p] for p in g.adjacency[v] if g.dist[u][p] == d - 1)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8))
def test_interval_mask(g):
    for u in range(g.n):
        for v in range(g.n):
            expected = {w for w in range(g.n) if on_some_shortest_path(g, u, v, w)}
            assert VertexSet(g.n, g.interval(u, v)).to_list() == sorted(expected)
