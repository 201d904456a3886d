from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kchords.chordsearch import (
    WheelWitness,
    chord_spectrum,
    fan_to_chorded_cycle,
    find_cycle_with_exact_chords,
    find_k_wheel,
    wheel_to_chorded_cycle,
)
from kchords.graph import (
    Cycle,
    InvalidCycleError,
    PathWitness,
    build_graph,
    chord_count,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from kchords.gadgets import gen_mycielski, gen_wheel

from oracles import brute_chords, brute_cycles


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(3, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


def test_k4():
    g = complete_graph(4)
    assert find_cycle_with_exact_chords(g, 2, 4) == Cycle((0, 1, 2, 3))
    assert find_cycle_with_exact_chords(g, 1, 4) is None
    assert chord_spectrum(g, 4).achievable == {0, 2}


def test_k33_spectrum():
    # bipartite, so only 4- and 6-cycles: the former induced, the latter Hamiltonian with 3 chords
    g = complete_bipartite(3, 3)
    report = chord_spectrum(g, 6)
    assert report.achievable == {0, 3}
    assert report.exhaustive
    assert find_cycle_with_exact_chords(g, 3, 6) == Cycle((0, 3, 1, 4, 2, 5))
    assert find_cycle_with_exact_chords(g, 1, 6) is None


def test_tree_and_bounds():
    assert find_cycle_with_exact_chords(path_graph(6), 0, 6) is None
    assert chord_spectrum(path_graph(6), 6).achievable == frozenset()
    assert find_cycle_with_exact_chords(complete_graph(4), 0, 2) is None
    assert not chord_spectrum(complete_graph(5), 4).exhaustive
    with pytest.raises(ValueError):
        find_cycle_with_exact_chords(complete_graph(4), -1, 4)


def test_complete_graph_spectrum():
    # a cycle on m vertices of K_n has m(m-3)/2 chords
    assert chord_spectrum(complete_graph(6), 6).achievable == {0, 2, 5, 9}


def test_mycielski_has_no_triangles():
    report = chord_spectrum(gen_mycielski(4), 6)
    assert all(len(c) >= 4 for c in report.witnesses.values())
    assert report.achievable == {0, 1}


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_spectrum_and_search_match_oracle(g):
    brute = {}
    for order in sorted(brute_cycles(g, g.n)):
        brute.setdefault(brute_chords(g, order), []).append(Cycle(order))
    report = chord_spectrum(g, g.n)
    assert report.achievable == set(brute)
    for k, cycles in brute.items():
        least = min(cycles, key=lambda c: c.vertices)
        assert report.witnesses[k] == least
        assert find_cycle_with_exact_chords(g, k, g.n) == least
    missing = next(k for k in range(40) if k not in brute)
    assert find_cycle_with_exact_chords(g, missing, g.n) is None


def test_wheel_gives_every_chord_count():
    w = gen_wheel(8, 6)
    wit = WheelWitness(8, w.distinguished, 6)
    for j in range(5):
        c = wheel_to_chorded_cycle(w.graph, wit, j)
        assert chord_count(w.graph, c) == j
        assert 8 in c.vertices


def test_full_wheel_limit():
    # hub adjacent to the whole rim: using every spoke makes the closing rim edge a chord too
    w = gen_wheel(5, 5)
    wit = WheelWitness(5, w.distinguished, 5)
    assert chord_count(w.graph, wheel_to_chorded_cycle(w.graph, wit, 2)) == 2
    with pytest.raises(ValueError):
        wheel_to_chorded_cycle(w.graph, wit, 3)
    with pytest.raises(ValueError):
        wheel_to_chorded_cycle(w.graph, WheelWitness(5, w.distinguished, 4), 1)


def test_find_k_wheel():
    w = gen_wheel(7, 7)
    wit = find_k_wheel(w.graph, 7, 7)
    assert wit is not None and wit.hub == 7 and wit.spokes == 7
    assert find_k_wheel(cycle_graph(6), 3, 6) is None


def test_fan_cycle():
    g = build_graph(7, [(i, i + 1) for i in range(5)] + [(6, 0), (6, 2), (6, 5)])
    c = fan_to_chorded_cycle(g, PathWitness(tuple(range(6))), 6, 3)
    assert chord_count(g, c) == 1
    with pytest.raises(ValueError):
        fan_to_chorded_cycle(g, PathWitness(tuple(range(6))), 6, 4)
    bad = build_graph(7, [(i, i + 1) for i in range(5)] + [(6, 0), (6, 5), (1, 3)])
    with pytest.raises(InvalidCycleError):
        fan_to_chorded_cycle(bad, PathWitness(tuple(range(6))), 6, 2)


def test_full_seven_wheel_skips_five_chords():
    # with the hub on the whole rim: arcs of t rim vertices give t-2 chords, the whole rim gives 6
    report = chord_spectrum(gen_wheel(7, 7).graph, 8)
    assert report.achievable == {0, 1, 2, 3, 4, 6}
