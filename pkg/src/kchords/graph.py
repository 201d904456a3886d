"""Simple undirected graphs, cycles, paths and exact small-graph invariants.

Vertices are dense ids ``0..n-1``.  Everything here is exact; the
colouring and clique routines refuse instances above a vertex cap rather
than fall back to heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_VERTICES = 24


class GraphError(ValueError):
    """Malformed graph input (bad id, self-loop, ...)."""


class InvalidCycleError(ValueError):
    """A vertex sequence is not a cycle (or path) of the host graph."""


class SizeLimitError(ValueError):
    """Instance is larger than the configured exact-search cap."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_masks", "_m")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        self._n = n
        self._adj = tuple(frozenset(nb) for nb in adjacency)
        masks = []
        for nb in self._adj:
            mask = 0
            for v in nb:
                mask |= 1 << v
            masks.append(mask)
        self._masks = tuple(masks)
        self._m = sum(len(nb) for nb in self._adj) // 2

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs ``(u, v)`` with ``u < v``, lexicographically ordered."""
        return [(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def edges_within(self, vertices: Iterable[int]) -> int:
        """Number of edges of the subgraph induced by ``vertices``."""
        vs = set(vertices)
        return sum(len(self._adj[v] & vs) for v in vs) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Return ``(H, labels)`` where ``H`` is induced on ``vertices`` reindexed
        in increasing order and ``labels[i]`` is the original id of vertex ``i``."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        adj = [[index[w] for w in self._adj[v] if w in index] for v in labels]
        return Graph(len(labels), adj), labels

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged.

    Raises
    ------
    GraphError
        On negative ``n``, an endpoint outside ``0..n-1`` or a self-loop.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# cycles and paths


def canonical_rotation(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic sequence so it starts at its minimum and
    its second entry is smaller than its last."""
    m = len(vertices)
    i = min(range(m), key=vertices.__getitem__)
    seq = tuple(vertices[i:]) + tuple(vertices[:i])
    if m > 2 and seq[1] > seq[-1]:
        seq = (seq[0],) + tuple(reversed(seq[1:]))
    return seq


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertex order; stored in canonical form."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise InvalidCycleError(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise InvalidCycleError(f"repeated vertex in cycle {vs}")
        object.__setattr__(self, "vertices", canonical_rotation(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def cycle_edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def rotated_from(self, start: int, towards: int | None = None) -> tuple[int, ...]:
        """The vertex order beginning at ``start``, continuing to ``towards`` if given."""
        vs = self.vertices
        i = vs.index(start)
        seq = vs[i:] + vs[:i]
        if towards is not None and seq[1] != towards:
            seq = (seq[0],) + tuple(reversed(seq[1:]))
            if seq[1] != towards:
                raise ValueError(f"{towards} is not next to {start} on the cycle")
        return seq


@dataclass(frozen=True)
class PathWitness:
    """A path given by its ordered, distinct vertices."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if not vs:
            raise InvalidCycleError("empty path")
        if len(set(vs)) != len(vs):
            raise InvalidCycleError(f"repeated vertex in path {vs}")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


def validate_cycle(g: Graph, c: Cycle) -> None:
    for u, v in c.cycle_edges():
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise InvalidCycleError(f"vertex out of range in cycle {c.vertices}")
        if not g.has_edge(u, v):
            raise InvalidCycleError(f"({u}, {v}) is not an edge, so {c.vertices} is not a cycle")


def validate_path(g: Graph, p: PathWitness) -> None:
    vs = p.vertices
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidCycleError(f"vertex {v} out of range in path {vs}")
    for u, v in zip(vs, vs[1:]):
        if not g.has_edge(u, v):
            raise InvalidCycleError(f"({u}, {v}) is not an edge, so {vs} is not a path")


def chord_count(g: Graph, c: Cycle) -> int:
    """Number of chords of ``c`` in ``g``, computed as ``e(G[V(C)]) - |C|``."""
    validate_cycle(g, c)
    return g.edges_within(c.vertices) - len(c)


def cycle_chords(g: Graph, c: Cycle) -> list[tuple[int, int]]:
    """The chords themselves: adjacent pairs that are not consecutive on ``c``."""
    validate_cycle(g, c)
    vs = c.vertices
    m = len(vs)
    out = []
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            if g.has_edge(vs[i], vs[j]):
                out.append(tuple(sorted((vs[i], vs[j]))))
    return sorted(out)


def path_chord_count(g: Graph, p: PathWitness) -> int:
    validate_path(g, p)
    return g.edges_within(p.vertices) - (len(p) - 1)


def path_chords(g: Graph, p: PathWitness) -> list[tuple[int, int]]:
    validate_path(g, p)
    vs = p.vertices
    return sorted(
        tuple(sorted((vs[i], vs[j])))
        for i in range(len(vs))
        for j in range(i + 2, len(vs))
        if g.has_edge(vs[i], vs[j])
    )


def is_induced_cycle(g: Graph, c: Cycle) -> bool:
    return chord_count(g, c) == 0


# ---------------------------------------------------------------------------
# enumeration


def enumerate_cycles(g: Graph, max_len: int) -> Iterator[Cycle]:
    """Yield every cycle of length ``3..max_len`` exactly once.

    Cycles come out in canonical form and in lexicographic order of their
    canonical vertex sequences: a depth-first search from each start vertex
    ``s`` over vertices larger than ``s``, visiting neighbours in increasing
    order, emits in pre-order, which is exactly lexicographic order.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    for s in range(g.n):
        yield from _cycles_from(g, s, max_len)


def _cycles_from(g: Graph, s: int, max_len: int) -> Iterator[Cycle]:
    path = [s]
    on_path = {s}
    stack = [iter(w for w in g.sorted_neighbors(s) if w > s)]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if v in on_path:
            continue
        path.append(v)
        on_path.add(v)
        if len(path) >= 3 and g.has_edge(v, s) and path[1] < v:
            yield Cycle(tuple(path))
        if len(path) < max_len:
            stack.append(iter(w for w in g.sorted_neighbors(v) if w > s))
        else:
            on_path.discard(path.pop())


# ---------------------------------------------------------------------------
# cliques


def max_clique(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    """A maximum clique, sorted; among maximum cliques the lexicographically
    least sorted vertex list is returned."""
    _check_cap(g, max_vertices)
    return _max_clique_masks([g.neighbor_mask(v) for v in range(g.n)], g.n)


def clique_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return len(max_clique(g, max_vertices))


def _max_clique_masks(masks: list[int], n: int) -> list[int]:
    best: list[int] = []

    def extend(current: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = current[:]
            return
        if len(current) + bin(cand).count("1") <= len(best):
            return
        while cand:
            if len(current) + bin(cand).count("1") <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            current.append(v)
            extend(current, cand & masks[v])
            current.pop()

    extend([], (1 << n) - 1)
    return best


# ---------------------------------------------------------------------------
# colouring


def _check_cap(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise SizeLimitError(
            f"graph has {g.n} vertices, above the exact-search cap of {max_vertices}"
        )


def optimal_coloring(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    """A proper colouring with exactly ``chi(g)`` colours (colours ``0..chi-1``).

    DSATUR branch and bound seeded with a maximum clique, run per connected
    component.
    """
    _check_cap(g, max_vertices)
    colors = [0] * g.n
    for comp in g.components():
        sub, labels = g.induced_subgraph(comp)
        for i, c in enumerate(_color_connected(sub)):
            colors[labels[i]] = c
    return colors


def chromatic_number(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Exact chromatic number; raises :class:`SizeLimitError` above the cap."""
    if g.n == 0:
        return 0
    return max(optimal_coloring(g, max_vertices)) + 1


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def _greedy_dsatur(masks: list[int], n: int) -> list[int]:
    colors = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(sat[u]).count("1"), bin(masks[u]).count("1"), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        m = masks[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            sat[w] |= 1 << c
    return colors


def _color_connected(g: Graph) -> list[int]:
    n = g.n
    if n == 1:
        return [0]
    masks = [g.neighbor_mask(v) for v in range(n)]
    clique = _max_clique_masks(masks, n)
    lower = len(clique)
    best = _greedy_dsatur(masks, n)
    best_k = max(best) + 1
    if best_k == lower:
        return best

    colors = [-1] * n
    # per-vertex count of coloured neighbours holding each colour
    counts = [[0] * n for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        m = masks[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            counts[w][c] += 1
            sat[w] |= 1 << c

    def unassign(v: int, c: int) -> None:
        colors[v] = -1
        m = masks[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            counts[w][c] -= 1
            if not counts[w][c]:
                sat[w] &= ~(1 << c)

    for i, v in enumerate(clique):
        assign(v, i)
    uncolored = [v for v in range(n) if colors[v] < 0]
    uncolored_mask = sum(1 << v for v in uncolored)

    def pick(umask: int) -> int:
        best_v, best_key = -1, None
        m = umask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            key = (bin(sat[v]).count("1"), bin(masks[v] & umask).count("1"))
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def search(umask: int, used: int) -> bool:
        nonlocal best, best_k
        if not umask:
            best = colors[:]
            best_k = used
            return best_k == lower
        v = pick(umask)
        rest = umask & ~(1 << v)
        c = 0
        # best_k may shrink inside the recursion, so re-read it every round
        while c < min(used + 1, best_k - 1):
            if not sat[v] >> c & 1:
                assign(v, c)
                done = search(rest, max(used, c + 1))
                unassign(v, c)
                if done:
                    return True
            c += 1
        return False

    search(uncolored_mask, lower)
    return best


# ---------------------------------------------------------------------------
# bicliques and induced copies


def find_biclique(
    g: Graph, side_a: Iterable[int], side_b: Iterable[int], ell: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find ``A' subset side_a``, ``B' subset side_b`` of size ``ell`` each with
    every cross pair adjacent.  Exhaustive; lexicographically least ``A'`` first.

    Raises
    ------
    ValueError
        If the sides overlap or ``ell`` exceeds the smaller side.
    """
    sa = sorted(set(side_a))
    sb = sorted(set(side_b))
    if set(sa) & set(sb):
        raise ValueError("biclique sides must be disjoint")
    if ell > min(len(sa), len(sb)):
        raise ValueError(f"ell={ell} exceeds the smaller side ({min(len(sa), len(sb))})")
    if ell <= 0:
        return (), ()
    b_mask = sum(1 << v for v in sb)
    candidates = [a for a in sa if bin(g.neighbor_mask(a) & b_mask).count("1") >= ell]

    def grow(start: int, chosen: list[int], common: int):
        if len(chosen) == ell:
            picked = []
            m = common
            while m and len(picked) < ell:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                picked.append(v)
            return tuple(chosen), tuple(picked)
        for i in range(start, len(candidates)):
            if len(chosen) + len(candidates) - i < ell:
                break
            a = candidates[i]
            nxt = common & g.neighbor_mask(a)
            if bin(nxt).count("1") >= ell:
                chosen.append(a)
                found = grow(i + 1, chosen, nxt)
                chosen.pop()
                if found:
                    return found
        return None

    return grow(0, [], b_mask)


def is_induced_copy(g: Graph, pattern: Graph, mapping: dict[int, int] | Sequence[int]) -> bool:
    """True iff ``mapping`` (pattern vertex -> host vertex) is injective and
    preserves both edges and non-edges."""
    if not isinstance(mapping, dict):
        mapping = dict(enumerate(mapping))
    if set(mapping) != set(range(pattern.n)):
        return False
    image = list(mapping.values())
    if len(set(image)) != len(image) or any(not 0 <= v < g.n for v in image):
        return False
    for u, v in combinations(range(pattern.n), 2):
        if pattern.has_edge(u, v) != g.has_edge(mapping[u], mapping[v]):
            return False
    return True
