"""BFS layering, chromatic-number-preserving extraction chains, unimodal
paths between vertices of one layer, and the biclique/path overlap
resolver that either finds a cycle with exactly ``k`` chords or certifies
that a vertex sends few edges to a path.

All vertex ids are those of the host graph; nothing is relabelled in the
returned objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Iterable, Sequence

from .graph import (
    DEFAULT_MAX_VERTICES,
    Cycle,
    Graph,
    PathWitness,
    chord_count,
    chromatic_number,
    path_chord_count,
    validate_path,
)


class ExtractionError(ValueError):
    """Preconditions of an extraction-level operation do not hold."""


# ---------------------------------------------------------------------------
# layers


@dataclass(frozen=True)
class LayeredState:
    """Distance classes ``N_0 = {root}, N_1, ...`` of ``graph`` from ``root``.

    ``father[v]`` is the lowest-id neighbour of ``v`` one layer closer to the
    root.  Unreachable vertices appear in no layer.
    """

    graph: Graph
    root: int
    layers: tuple[frozenset[int], ...]
    father: dict[int, int] = field(hash=False, compare=False)
    depth: dict[int, int] = field(hash=False, compare=False)

    def layer_of(self, v: int) -> int:
        return self.depth[v]

    def to_dict(self) -> dict[str, Any]:
        return {
            "root": self.root,
            "layers": [sorted(layer) for layer in self.layers],
            "father": {str(v): f for v, f in sorted(self.father.items())},
        }


def bfs_layers(g: Graph, root: int, within: Iterable[int] | None = None) -> LayeredState:
    """Breadth-first layering of ``g`` (or of ``g[within]``) from ``root``."""
    allowed = None if within is None else frozenset(within)
    if not 0 <= root < g.n or (allowed is not None and root not in allowed):
        raise ExtractionError(f"root {root} is not a vertex of the graph")
    depth = {root: 0}
    layers: list[list[int]] = [[root]]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in depth or (allowed is not None and w not in allowed):
                continue
            depth[w] = depth[v] + 1
            if depth[w] == len(layers):
                layers.append([])
            layers[depth[w]].append(w)
            queue.append(w)
    father: dict[int, int] = {}
    for i in range(1, len(layers)):
        prev = set(layers[i - 1])
        for w in layers[i]:
            father[w] = min(v for v in g.neighbors(w) if v in prev)
    return LayeredState(g, root, tuple(frozenset(layer) for layer in layers), father, depth)


def _layer_chi(g: Graph, layer: Iterable[int], max_vertices: int) -> int:
    sub, _ = g.induced_subgraph(layer)
    return chromatic_number(sub, max_vertices)


def best_layer(g: Graph, root: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> tuple[int, int]:
    """Index ``i >= 1`` maximising ``chi(N_i(root))`` (lowest index on ties) and that value.

    In a connected graph the returned value ``v`` satisfies ``2 v >= chi(g)``:
    colouring odd layers from one palette and even layers from another is
    proper, since edges only join equal or consecutive layers.
    """
    if g.n <= 1:
        raise ExtractionError("a single-vertex graph has no layer beyond the root")
    if not g.is_connected():
        raise ExtractionError("best_layer needs a connected graph")
    state = bfs_layers(g, root)
    best_i, best_v = 0, -1
    for i in range(1, len(state.layers)):
        v = _layer_chi(g, state.layers[i], max_vertices)
        if v > best_v:
            best_i, best_v = i, v
    return best_i, best_v


# ---------------------------------------------------------------------------
# extraction chains


@dataclass(frozen=True)
class ExtractionStep:
    """One extraction: ``vertices`` is layer ``layer_index`` of ``state``."""

    state: LayeredState
    layer_index: int
    vertices: frozenset[int]
    chi_before: int
    chi_after: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "root": self.state.root,
            "layer_index": self.layer_index,
            "vertices": sorted(self.vertices),
            "chi_before": self.chi_before,
            "chi_after": self.chi_after,
            "layers": [sorted(layer) for layer in self.state.layers],
            "father": {str(v): self.state.father[v] for v in sorted(self.vertices)},
        }


@dataclass(frozen=True)
class ExtractionChain:
    """Nested subgraphs ``G_0 = g, G_1, ..., G_p`` given by vertex sets, with per-step certificates.

    ``bottomed_out`` is set when the chain stopped early because the
    current subgraph had no vertex with a neighbour (nothing to extract).
    """

    graph: Graph
    steps: tuple[ExtractionStep, ...]
    chi0: int
    bottomed_out: bool = False

    @property
    def vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(range(self.graph.n))] + [s.vertices for s in self.steps]

    @property
    def chis(self) -> list[int]:
        return [self.chi0] + [s.chi_after for s in self.steps]

    def subgraph(self, j: int) -> tuple[Graph, tuple[int, ...]]:
        return self.graph.induced_subgraph(self.vertex_sets[j])

    def to_dict(self) -> dict[str, Any]:
        return {
            "chi": self.chis,
            "bottomed_out": self.bottomed_out,
            "steps": [s.to_dict() for s in self.steps],
        }


def extract_once(g: Graph, root: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> ExtractionStep:
    """Extraction of a connected graph: the induced subgraph on its best BFS layer."""
    index, value = best_layer(g, root, max_vertices)
    state = bfs_layers(g, root)
    return ExtractionStep(state, index, state.layers[index], chromatic_number(g, max_vertices), value)


def _step_on(g: Graph, vertices: frozenset[int], max_vertices: int) -> ExtractionStep | None:
    sub, labels = g.induced_subgraph(vertices)
    comps = sub.components()
    chis = [chromatic_number(sub.induced_subgraph(c)[0], max_vertices) for c in comps]
    top = max(chis)
    comp = comps[chis.index(top)]
    if len(comp) == 1:
        return None
    csub, clabels = sub.induced_subgraph(comp)
    inner = extract_once(csub, 0, max_vertices)
    back = [labels[i] for i in clabels]
    state = bfs_layers(g, back[0], within=[back[i] for i in range(csub.n)])
    layer = frozenset(back[v] for v in inner.vertices)
    return ExtractionStep(state, inner.layer_index, layer, top, inner.chi_after)


def extraction_sequence(g: Graph, p: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> ExtractionChain:
    """Chain of up to ``p`` successive extractions.

    Each step works in the component of the current subgraph with the
    largest chromatic number (lowest vertex on ties), rooted at its lowest
    vertex, so ``chi(G_j) * 2**j >= chi(g)`` along the chain.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    chi0 = chromatic_number(g, max_vertices)
    steps: list[ExtractionStep] = []
    current = frozenset(range(g.n))
    for _ in range(p):
        if not current:
            return ExtractionChain(g, tuple(steps), chi0, True)
        step = _step_on(g, current, max_vertices)
        if step is None:
            return ExtractionChain(g, tuple(steps), chi0, True)
        steps.append(step)
        current = step.vertices
    return ExtractionChain(g, tuple(steps), chi0, False)


# ---------------------------------------------------------------------------
# unimodal paths


def _shortest_path(g: Graph, allowed: set[int], x: int, y: int) -> list[int] | None:
    """BFS shortest ``x``-``y`` path in ``g[allowed]`` without the edge ``xy``; lowest ids first."""
    prev = {x: x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in g.sorted_neighbors(v):
            if w not in allowed or w in prev or (v == x and w == y):
                continue
            prev[w] = v
            if w == y:
                path = [y]
                while path[-1] != x:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def unimodal_path(state: LayeredState, x: int, y: int) -> PathWitness:
    """Path from ``x`` to ``y`` (same layer ``N_i``) through earlier layers.

    Fathers of ``x`` and ``y`` are chased in step until the two chains meet
    or become adjacent; the result is then shortened to a shortest path
    inside the chased vertices, which keeps it induced apart from a possible
    ``xy`` edge.
    """
    g = state.graph
    if x == y:
        raise ExtractionError("unimodal path needs two distinct vertices")
    if x not in state.depth or y not in state.depth:
        raise ExtractionError("both ends must be reachable from the root")
    i = state.depth[x]
    if state.depth[y] != i:
        raise ExtractionError(f"{x} lies in layer {i} but {y} lies in layer {state.depth[y]}")
    if i == 0:
        raise ExtractionError("layer 0 holds only the root")
    left, right = [x], [y]
    while True:
        a, b = state.father[left[-1]], state.father[right[-1]]
        left.append(a)
        right.append(b)
        if a == b or g.has_edge(a, b):
            break
    allowed = set(left) | set(right)
    path = _shortest_path(g, allowed, x, y)
    assert path is not None  # the chased chains themselves connect x and y
    return PathWitness(tuple(path))


def is_unimodal(state: LayeredState, path: PathWitness) -> bool:
    """Audit: induced except the end pair, interior strictly below the ends' layer,
    and interior vertices two or more steps from both ends send no edge to that layer."""
    g = state.graph
    vs = path.vertices
    try:
        validate_path(g, path)
    except ValueError:
        return False
    if len(vs) < 2 or any(v not in state.depth for v in vs):
        return False
    i = state.depth[vs[0]]
    if state.depth[vs[-1]] != i:
        return False
    inner_chords = path_chord_count(g, path) - (1 if len(vs) > 2 and g.has_edge(vs[0], vs[-1]) else 0)
    if inner_chords != 0:
        return False
    top = state.layers[i]
    for pos in range(1, len(vs) - 1):
        v = vs[pos]
        if state.depth[v] >= i:
            return False
        if pos >= 2 and len(vs) - 1 - pos >= 2 and g.neighbors(v) & top:
            return False
    return True


def check_noninterference(
    g: Graph,
    p_path: PathWitness,
    q_path: PathWitness,
    ends_p: Sequence[int],
    ends_q: Sequence[int],
) -> bool:
    """True iff the core of each path (its vertices minus the given ends and
    their path-neighbours) avoids the other path and sends it no edges."""
    cores = []
    for path, ends in ((p_path, ends_p), (q_path, ends_q)):
        vs = path.vertices
        if any(e not in vs for e in ends):
            raise ValueError(f"ends {tuple(ends)} are not on the path {vs}")
        skip = set()
        for e in ends:
            j = vs.index(e)
            skip.update(vs[max(j - 1, 0) : j + 2])
        cores.append([v for v in vs if v not in skip])
    for core, other in ((cores[0], q_path), (cores[1], p_path)):
        others = set(other.vertices)
        for v in core:
            if v in others or g.neighbors(v) & others:
                return False
    return True


# ---------------------------------------------------------------------------
# biclique / path overlap


@dataclass(frozen=True)
class EdgeBoundCertificate:
    """``u`` sends at most ``8 sqrt(k)`` edges to the path; ``edges`` lists them all."""

    u: int
    k: int
    edges: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.edges)

    def holds(self) -> bool:
        return self.count * self.count <= 64 * self.k


def _check_overlap_instance(g, sides, path, u, k):
    side1, side2 = (tuple(sorted(set(s))) for s in sides)
    ell = min(len(side1), len(side2))
    if len(side1) != len(side2):
        raise ExtractionError("biclique sides differ in size")
    if set(side1) & set(side2):
        raise ExtractionError("biclique sides overlap")
    need = isqrt(k - 1) + 1 + 2 if k > 0 else 2  # ceil(sqrt k) + 2
    if ell < need:
        raise ExtractionError(f"biclique has sides of size {ell}, need at least {need}")
    for s in (side1, side2):
        for i, v in enumerate(s):
            if any(g.has_edge(v, w) for w in s[i + 1 :]):
                raise ExtractionError("biclique side is not independent")
    if any(not g.has_edge(a, b) for a in side1 for b in side2):
        raise ExtractionError("biclique is not complete between its sides")
    validate_path(g, path)
    vs = path.vertices
    if len(vs) < 3:
        raise ExtractionError("path needs at least three vertices")
    kset = set(side1) | set(side2)
    x = vs[0]
    if x not in kset or kset & set(vs[1:]):
        raise ExtractionError("path must start in the biclique and leave it immediately")
    ends = {vs[0], vs[1], vs[-1], vs[-2]}
    for v in vs:
        if v not in ends and g.neighbors(v) & kset:
            raise ExtractionError(f"path vertex {v} away from the ends has an edge into the biclique")
    if u in vs or u in kset:
        raise ExtractionError("u must lie outside the path and the biclique")
    return side1, side2, kset


def _q_path(x: int, w: int, own: Sequence[int], other: Sequence[int], size: int) -> list[int]:
    """Alternating path in the biclique from ``x`` to ``w`` on ``size`` vertices.

    ``own`` is the side of ``x``.  ``size`` must have the parity that puts
    ``w`` on the correct side.
    """
    same = w in own
    pool_own = [v for v in own if v not in (x, w)]
    pool_other = [v for v in other if v not in (x, w)]
    seq = [x]
    for pos in range(1, size - 1):
        pool = pool_other if pos % 2 else pool_own
        seq.append(pool[(pos - 1) // 2])
    seq.append(w)
    assert (size % 2 == 1) == same
    return seq


def resolve_biclique_path_overlap(
    g: Graph,
    biclique: tuple[Sequence[int], Sequence[int]],
    path: PathWitness,
    u: int,
    k: int,
    a: int | None = None,
) -> Cycle | EdgeBoundCertificate:
    """Cycle with exactly ``k`` chords, or a certificate that ``u`` sends at most
    ``8 sqrt(k)`` edges to ``path``.

    ``path`` starts at ``x`` in the induced biclique and runs to ``y``.  With
    many edges from ``u`` to the path, an alternating path ``Q`` from ``x``
    to a neighbour ``w`` of ``u`` is taken in the biclique, the chords ``k''``
    of ``u w Q x x^-`` are counted, and the path is cut at the
    ``(k - k'' + 1)``-th neighbour of ``u`` after ``x^-``.  ``a`` defaults to
    ``isqrt(k) - 2``; the cycle is always re-verified before returning.
    """
    if k < 1:
        raise ValueError("k must be positive")
    side1, side2, kset = _check_overlap_instance(g, biclique, path, u, k)
    vs = path.vertices
    x, x_minus = vs[0], vs[1]
    hits = [v for v in vs if g.has_edge(u, v)]
    if len(hits) ** 2 <= 64 * k:
        return EdgeBoundCertificate(u, k, tuple((u, v) for v in hits))

    ws = sorted(v for v in g.neighbors(u) if v in kset and v != x)
    if not ws:
        raise ExtractionError("u has no neighbour in the biclique other than x")
    w = ws[0]
    own, other = (side1, side2) if x in side1 else (side2, side1)
    if a is None:
        a = isqrt(k) - 2
    if a < 1:
        raise ExtractionError(f"a={a} is too small to build a biclique path")
    targets = [v for v in vs[2:] if g.has_edge(u, v)]  # neighbours of u after x^-
    same = w in own
    top = 2 * a + 1 if same else 2 * a
    sizes = list(range(top, 1, -2))
    for size in sizes:
        q = _q_path(x, w, own, other, size)
        head = [u] + q[::-1] + [x_minus]  # u w ... x x^-
        k2 = path_chord_count(g, PathWitness(tuple(head)))
        b = k - k2
        if b < 0:
            continue
        if b >= len(targets):
            break
        cycle = _close(head, vs, targets[b])
        if chord_count(g, cycle) == k:
            return cycle
        break
    # the closed form is off only when y or y^- touch the biclique; scan exactly
    for size in sizes:
        q = _q_path(x, w, own, other, size)
        head = [u] + q[::-1] + [x_minus]
        for t in targets:
            cycle = _close(head, vs, t)
            if chord_count(g, cycle) == k:
                return cycle
    raise ExtractionError(f"no cycle with exactly {k} chords along this biclique and path")


def _close(head: list[int], vs: tuple[int, ...], stop: int) -> Cycle:
    end = vs.index(stop)
    return Cycle(tuple(head) + vs[2 : end + 1])
