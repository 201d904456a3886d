"""Slow, obviously-correct reference implementations used to check the library.

Nothing here shares code with the package beyond the ``Graph`` container.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def brute_cycles(g, max_len):
    """Every cycle as a frozenset of edges, found by trying all vertex orders."""
    seen = set()
    for m in range(3, max_len + 1):
        for vs in combinations(range(g.n), m):
            first = vs[0]
            for rest in permutations(vs[1:]):
                if rest[0] > rest[-1]:
                    continue
                order = (first,) + rest
                if all(g.has_edge(order[i], order[(i + 1) % m]) for i in range(m)):
                    seen.add(order)
    return seen


def brute_chords(g, order):
    """Pairs adjacent in ``g`` but not consecutive along the cyclic ``order``."""
    m = len(order)
    pos = {v: i for i, v in enumerate(order)}
    count = 0
    for u, v in combinations(order, 2):
        gap = abs(pos[u] - pos[v])
        if g.has_edge(u, v) and gap not in (1, m - 1):
            count += 1
    return count


def brute_path_chords(g, order):
    pos = {v: i for i, v in enumerate(order)}
    return sum(1 for u, v in combinations(order, 2) if g.has_edge(u, v) and abs(pos[u] - pos[v]) > 1)


def brute_chromatic(g):
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if colours[0] == 0 and all(colours[u] != colours[v] for u, v in edges):
                return k
    return g.n


def brute_clique(g):
    best = 0
    for r in range(1, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def brute_distances(g, root):
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in range(g.n):
                if g.has_edge(v, w) and w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist
