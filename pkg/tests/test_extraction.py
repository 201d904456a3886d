import pytest
from hypothesis import given, settings, strategies as st

from kchords.extraction import (
    EdgeBoundCertificate,
    ExtractionError,
    best_layer,
    bfs_layers,
    check_noninterference,
    extract_once,
    extraction_sequence,
    is_unimodal,
    resolve_biclique_path_overlap,
    unimodal_path,
)
from kchords.gadgets import gen_mycielski
from kchords.graph import (
    Cycle,
    PathWitness,
    build_graph,
    chord_count,
    chromatic_number,
    complete_bipartite,
    complete_graph,
    cycle_graph,
)
from kchords.random_graphs import overlap_instance, random_connected_graph

from oracles import brute_chords, brute_distances


def test_star_layers():
    state = bfs_layers(complete_bipartite(1, 4), 0)
    assert [sorted(x) for x in state.layers] == [[0], [1, 2, 3, 4]]


def test_c6_layers():
    state = bfs_layers(cycle_graph(6), 0)
    assert [len(x) for x in state.layers] == [1, 2, 2, 1]
    assert state.father == {1: 0, 5: 0, 2: 1, 4: 5, 3: 2}


def test_disconnected_layers():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    state = bfs_layers(g, 0)
    assert set().union(*state.layers) == {0, 1, 2}


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**32), st.sampled_from([0.1, 0.3, 0.6]))
def test_layers_are_distance_classes(n, seed, p):
    g = random_connected_graph(n, p, seed)
    root = seed % n
    state = bfs_layers(g, root)
    dist = brute_distances(g, root)
    for i, layer in enumerate(state.layers):
        assert layer == {v for v, d in dist.items() if d == i}
    for v, f in state.father.items():
        prev = {w for w in g.neighbors(v) if dist[w] == dist[v] - 1}
        assert f == min(prev)


def test_best_layer_examples():
    assert best_layer(complete_bipartite(1, 4), 0) == (1, 1)
    assert best_layer(cycle_graph(5), 0) == (2, 2)
    for root in range(11):
        _, value = best_layer(gen_mycielski(4), root)
        assert value >= 2
    with pytest.raises(ExtractionError):
        best_layer(build_graph(1, []), 0)
    with pytest.raises(ExtractionError):
        best_layer(build_graph(3, [(0, 1)]), 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 11), st.integers(0, 2**32))
def test_best_layer_keeps_half(n, seed):
    g = random_connected_graph(n, 0.4, seed)
    _, value = best_layer(g, 0)
    assert 2 * value >= chromatic_number(g)


def test_extract_once():
    step = extract_once(cycle_graph(6), 0)
    assert len(step.vertices) == 2
    step = extract_once(complete_graph(6), 2)
    assert step.vertices == frozenset({0, 1, 3, 4, 5})
    assert step.chi_after == 5
    for v in step.vertices:
        assert step.state.father[v] not in step.vertices


def test_extraction_sequence():
    g = gen_mycielski(4)
    assert extraction_sequence(g, 0).chis == [4]
    chain = extraction_sequence(g, 1)
    assert chain.chis[1] >= 2
    chain = extraction_sequence(gen_mycielski(5), 2)
    assert chain.chis[2] >= 2
    assert not chain.bottomed_out


def test_sequence_bottoms_out():
    chain = extraction_sequence(complete_graph(2), 3)
    assert chain.bottomed_out
    assert chain.chis == [2, 1]


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**32), st.integers(1, 3))
def test_chain_certificates(n, seed, p):
    g = random_connected_graph(n, 0.45, seed)
    chain = extraction_sequence(g, p)
    sets = chain.vertex_sets
    for j, vs in enumerate(sets):
        sub, _ = g.induced_subgraph(vs)
        assert chromatic_number(sub) * 2**j >= chain.chi0
        if j:
            assert vs <= sets[j - 1]
            for v in vs:
                assert g.neighbors(v) & (sets[j - 1] - vs)


def test_unimodal_on_c6():
    state = bfs_layers(cycle_graph(6), 0)
    path = unimodal_path(state, 2, 4)
    assert path.vertices == (2, 1, 0, 5, 4)
    assert is_unimodal(state, path)
    with pytest.raises(ExtractionError):
        unimodal_path(state, 1, 3)
    with pytest.raises(ExtractionError):
        unimodal_path(state, 2, 2)


def test_unimodal_common_father():
    g = build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    state = bfs_layers(g, 0)
    path = unimodal_path(state, 2, 3)
    assert path.vertices == (2, 1, 3)
    assert is_unimodal(state, path)


def test_unimodal_tree_with_clique_layer():
    # binary tree of depth 3 whose leaves form a clique
    edges = [(v, 2 * v + 1) for v in range(7)] + [(v, 2 * v + 2) for v in range(7)]
    leaves = list(range(7, 15))
    edges += [(a, b) for i, a in enumerate(leaves) for b in leaves[i + 1 :]]
    g = build_graph(15, edges)
    state = bfs_layers(g, 0)
    for x in leaves:
        for y in leaves:
            if x < y:
                path = unimodal_path(state, x, y)
                assert is_unimodal(state, path)
    assert unimodal_path(state, 7, 14).vertices == (7, 3, 1, 0, 2, 6, 14)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 14), st.integers(0, 2**32), st.sampled_from([0.15, 0.3, 0.5]))
def test_unimodal_property(n, seed, p):
    g = random_connected_graph(n, p, seed)
    state = bfs_layers(g, seed % n)
    for layer in state.layers[1:]:
        vs = sorted(layer)
        for i, x in enumerate(vs):
            for y in vs[i + 1 :]:
                assert is_unimodal(state, unimodal_path(state, x, y))


def test_noninterference():
    g = build_graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
    p, q = PathWitness((0, 1, 2, 3)), PathWitness((4, 5, 6, 7))
    assert check_noninterference(g, p, q, (0, 3), (4, 7))
    shared = PathWitness((4, 1, 7))
    g2 = build_graph(8, [(0, 1), (1, 2), (2, 3), (4, 1), (1, 7)])
    assert not check_noninterference(g2, PathWitness((3, 2, 1, 0)), shared, (3, 3), (4, 7))
    g3 = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (2, 8), (8, 6)])
    assert check_noninterference(g3, PathWitness((0, 1, 2, 3, 4)), PathWitness((5, 6, 7)), (0, 4), (5, 7))
    g4 = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (2, 6)])
    assert not check_noninterference(g4, PathWitness((0, 1, 2, 3, 4)), PathWitness((5, 6, 7)), (0, 4), (5, 7))
    with pytest.raises(ValueError):
        check_noninterference(g, p, q, (0, 9), (4, 7))


def test_noninterference_between_layer_paths():
    # two unimodal paths in separate branches of a tree, one layer apart
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (4, 8), (5, 9), (6, 10)]
    g = build_graph(11, edges)
    state = bfs_layers(g, 0)
    p = unimodal_path(state, 7, 8)
    q = unimodal_path(state, 5, 6)
    assert check_noninterference(g, p, q, p.ends, q.ends)


def test_resolver_certificate():
    g, sides, path, u = overlap_instance(100, 15, 3, seed=0)
    out = resolve_biclique_path_overlap(g, sides, path, u, 100)
    assert isinstance(out, EdgeBoundCertificate)
    assert out.count == 3 and out.holds()


@pytest.mark.parametrize("seed", range(6))
def test_resolver_cycle(seed):
    g, sides, path, u = overlap_instance(100, 15, 90, seed=seed)
    out = resolve_biclique_path_overlap(g, sides, path, u, 100)
    assert isinstance(out, Cycle)
    assert chord_count(g, out) == 100 == brute_chords(g, out.vertices)


def _clean_instance(ell, hits_at, extra_u):
    """Biclique, a bare path from x = 0, and u adjacent to the listed path positions."""
    side1, side2 = list(range(ell)), list(range(ell, 2 * ell))
    length = max(hits_at) + 3
    path = [0] + list(range(2 * ell, 2 * ell + length))
    u = 2 * ell + length
    edges = [(a, b) for a in side1 for b in side2] + list(zip(path, path[1:]))
    edges += [(u, path[i]) for i in hits_at] + [(u, w) for w in extra_u]
    return build_graph(u + 1, edges), (side1, side2), PathWitness(tuple(path)), u


def test_resolver_boundary_closes_at_first_neighbour():
    # with a = 3 and w on the far side: Q on 6 vertices with 4 chords; u sees only w,
    # so k'' = 4 + 0 and b = 0 when k = 4
    g, sides, path, u = _clean_instance(15, list(range(2, 60)), [15])
    out = resolve_biclique_path_overlap(g, sides, path, u, 4, a=3)
    assert chord_count(g, out) == 4
    first = path.vertices[2]
    assert first in out.vertices and path.vertices[3] not in out.vertices


def test_resolver_preconditions():
    g, sides, path, u = _clean_instance(15, list(range(2, 90)), [15])
    with pytest.raises(ExtractionError):
        resolve_biclique_path_overlap(g, (sides[0][:10], sides[1][:10]), path, u, 100)
    with pytest.raises(ExtractionError):
        resolve_biclique_path_overlap(g, sides, path, path.vertices[5], 100)
    bad = build_graph(g.n, g.edges() + [(path.vertices[10], 3)])
    with pytest.raises(ExtractionError):
        resolve_biclique_path_overlap(bad, sides, path, u, 100)
    lonely = _clean_instance(15, list(range(2, 90)), [])
    with pytest.raises(ExtractionError):
        resolve_biclique_path_overlap(*lonely, 100)
