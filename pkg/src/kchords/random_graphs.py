"""Seeded random instances: uniform random graphs, connected graphs, and
biclique/path overlap instances.  All randomness comes from an explicit
``random.Random(seed)``.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, PathWitness, build_graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """A random spanning tree (random attachment) plus independent ``p``-edges."""
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rng.random() < p}
    return build_graph(n, edges)


def graph_corpus(count: int, max_n: int, seed: int, connected: bool = False) -> list[Graph]:
    """``count`` graphs with ``n`` in ``1..max_n`` (``2..max_n`` if connected) and varying density."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2 if connected else 1, max_n)
        p = rng.choice((0.2, 0.35, 0.5, 0.7))
        sub = rng.getrandbits(64)
        out.append(random_connected_graph(n, p, sub) if connected else random_graph(n, p, sub))
    return out


def overlap_instance(k: int, ell: int, u_hits: int, seed: int, path_len: int | None = None):
    """Induced ``K_{ell,ell}`` (ids ``0..2ell-1``), a path leaving it from ``x = 0``,
    and a vertex ``u`` with ``u_hits`` neighbours on the path and a few in the biclique.

    The second path vertex and the last two may also send random edges to
    the biclique.  Returns ``(graph, (side1, side2), path, u)``.
    """
    rng = random.Random(seed)
    length = path_len if path_len is not None else u_hits + rng.randint(5, 40)
    if u_hits > length:
        raise ValueError("more hits than path vertices")
    side1, side2 = list(range(ell)), list(range(ell, 2 * ell))
    inner = list(range(2 * ell, 2 * ell + length))
    u = 2 * ell + length
    path = [0] + inner
    edges = [(a, b) for a in side1 for b in side2] + list(zip(path, path[1:]))
    kset = side1 + side2
    for v in (path[1], path[-1], path[-2]):
        edges += [(v, w) for w in rng.sample(kset[1:], rng.randint(0, 3))]
    edges += [(u, v) for v in rng.sample(path, u_hits)]
    edges += [(u, w) for w in rng.sample(kset[1:], rng.randint(1, 4))]
    return build_graph(u + 1, edges), (tuple(side1), tuple(side2)), PathWitness(tuple(path)), u


def bipartite_pair(m: int, d: int, seed: int):
    """Random ``g1`` inside ``g2`` on sides ``0..m-1`` / ``m..2m-1`` meeting the
    double-matching preconditions: every A-vertex has a ``g1``-edge and every
    B-vertex has ``g2``-degree at most ``d``."""
    rng = random.Random(seed)
    A, B = list(range(m)), list(range(m, 2 * m))
    load = {b: 0 for b in B}
    g1 = set()
    for a in A:
        b = rng.choice([b for b in B if load[b] < d] or B)
        if load[b] >= d:
            raise ValueError("cannot place g1 edges within the degree bound")
        g1.add((a, b))
        load[b] += 1
    g2 = set(g1)
    for _ in range(rng.randint(0, m * d)):
        a, b = rng.choice(A), rng.choice(B)
        if (a, b) not in g2 and load[b] < d:
            g2.add((a, b))
            load[b] += 1
    return build_graph(2 * m, g1), build_graph(2 * m, g2), A, B
