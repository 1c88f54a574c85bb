import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from gluedvis import KIND_ORDER, VariantKind as K, classify_set, s_positionable, s_visible, simplicial_vertices
from gluedvis.visibility import first_violation
from oracles import PathOracle, nx_simplicial, to_nx
from strategies import connected_graphs

ROOT1, ROOT2 = 0, 3
L2 = [6, 7, 8, 9]


def test_visibility_examples(gt2):
    g, _ = gt2
    for leaf in L2:
        assert s_visible(g, ROOT1, leaf, L2 + [ROOT1])
    assert not s_visible(g, ROOT1, ROOT2, L2 + [ROOT1, ROOT2])
    for u, v in combinations(range(g.n), 2):
        assert s_visible(g, u, v, [])
        assert s_positionable(g, u, v, [])


def test_positionable_examples(gt2):
    g, _ = gt2
    for u, v in g.edges():
        assert s_positionable(g, u, v, range(g.n))
    for leaf in L2:
        assert not s_positionable(g, ROOT1, ROOT2, [leaf])


def test_classify_examples(gt2):
    g, _ = gt2
    assert classify_set(g, L2 + [ROOT1], K.MV)
    assert classify_set(g, L2, K.OUTER_MV)
    assert classify_set(g, [6, 8], K.TOTAL_MV)
    for kind in KIND_ORDER:
        assert classify_set(g, [], kind)
    # (L minus the twin pair {6, 7}) plus N(6) = {1, 4}
    assert classify_set(g, [8, 9, 1, 4], K.GP)
    assert not classify_set(g, L2 + [ROOT1, ROOT2], K.MV)
    assert first_violation(g, L2 + [ROOT1, ROOT2], K.MV) == (ROOT1, ROOT2)
    assert first_violation(g, L2, K.OUTER_MV) is None


def test_kind_metadata():
    assert [k.domain for k in KIND_ORDER] == ["plain", "outer", "dual", "total"] * 2
    assert [k.hereditary for k in KIND_ORDER] == [True, True, False, True] * 2
    assert K.DUAL_GP.plain is K.GP and K.DUAL_MV.total is K.TOTAL_MV
    assert K.parse("gp_d") is K.DUAL_GP
    assert K.parse("TOTAL_MV") is K.TOTAL_MV
    assert K.parse("gpo") is K.OUTER_GP
    with pytest.raises(ValueError):
        K.parse("nope")


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
def test_pair_predicates_match_path_enumeration(g, rnd):
    oracle = PathOracle(to_nx(g))
    for _ in range(20):
        s = rnd.getrandbits(g.n)
        for u, v in combinations(range(g.n), 2):
            vis = s_visible(g, u, v, s)
            pos = s_positionable(g, u, v, s)
            assert vis == oracle.visible(u, v, s)
            assert pos == oracle.positionable(u, v, s)
            assert vis or not pos


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
def test_classify_matches_oracle_and_chains(g, rnd):
    oracle = PathOracle(to_nx(g))
    for _ in range(10):
        s = rnd.getrandbits(g.n)
        got = {k: classify_set(g, s, k) for k in KIND_ORDER}
        for k in KIND_ORDER:
            assert got[k] == oracle.classify(s, k.value)
        for mu, gp in zip(KIND_ORDER[:4], KIND_ORDER[4:]):
            assert got[mu] or not got[gp]
        for base in ("mu", "gp"):
            total, outer, dual, plain = (got[K(base + sfx)] for sfx in ("_t", "_o", "_d", ""))
            assert not total or (outer and dual)
            assert not outer or plain
            assert not dual or plain


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
def test_hereditary_kinds_are_downward_closed(g, rnd):
    for kind in KIND_ORDER:
        if not kind.hereditary:
            continue
        for _ in range(10):
            s = rnd.getrandbits(g.n)
            if classify_set(g, s, kind):
                sub = s & rnd.getrandbits(g.n)
                assert classify_set(g, sub, kind)


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    from gluedvis import DisconnectedGraphError, from_edge_list

    for bitsel in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bitsel >> i & 1]
        try:
            yield from_edge_list(n, edges)
        except DisconnectedGraphError:
            continue


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_total_gp_sets_are_simplicial_exhaustive(n):
    for g in _all_graphs(n):
        simp = simplicial_vertices(g)
        assert set(simp) == nx_simplicial(to_nx(g))
        for s in range(1 << n):
            assert classify_set(g, s, K.TOTAL_GP) == (s & ~simp.mask == 0)


@pytest.mark.parametrize("seed", range(3))
def test_total_gp_simplicial_random_up_to_eight(seed):
    from gluedvis.properties import random_connected_graph

    rng = random.Random(seed)
    for _ in range(15):
        g = random_connected_graph(rng, n=rng.randint(6, 8), p=rng.choice([0.3, 0.5, 0.7]))
        simp = simplicial_vertices(g).mask
        for s in range(1 << g.n):
            assert classify_set(g, s, K.TOTAL_GP) == (s & ~simp == 0)


def test_dual_hereditariness_is_only_reported(capsys):
    """Dual kinds are not assumed hereditary; print what small graphs show."""
    from gluedvis.properties import random_connected_graph

    rng = random.Random(7)
    found = {K.DUAL_MV: None, K.DUAL_GP: None}
    for _ in range(200):
        g = random_connected_graph(rng, n=rng.randint(4, 7))
        for kind in found:
            if found[kind] is not None:
                continue
            for s in range(1 << g.n):
                if not classify_set(g, s, kind):
                    continue
                for v in range(g.n):
                    if s >> v & 1 and not classify_set(g, s & ~(1 << v), kind):
                        found[kind] = (g.edges(), s, v)
                        break
                if found[kind]:
                    break
    with capsys.disabled():
        for kind, example in found.items():
            if example is None:
                print(f"\n[dual hereditariness] {kind.value}: no counterexample in sample")
            else:
                edges, s, v = example
                members = [i for i in range(8) if s >> i & 1]
                print(f"\n[dual hereditariness] {kind.value}: {members} valid, dropping {v} is not; edges {edges}")
