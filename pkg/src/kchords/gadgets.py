"""Explicit constructions paired with closed-form chord counts.

Every factory returns a :class:`GadgetBlueprint` whose predicted chord
count has already been checked against a direct count on the built graph;
a mismatch raises :class:`GadgetError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .chordsearch import fan_to_chorded_cycle
from .graph import (
    Cycle,
    Graph,
    PathWitness,
    build_graph,
    chord_count,
    path_chord_count,
)


class GadgetError(ValueError):
    """Bad gadget parameters, or a built gadget disagreeing with its formula."""


@dataclass(frozen=True)
class GadgetBlueprint:
    """A host graph, a distinguished cycle or path, and its predicted chord count.

    ``measured`` is filled in at construction from the graph itself.
    """

    graph: Graph
    distinguished: Cycle | PathWitness
    predicted_chords: int
    formula_id: str
    parameters: Mapping[str, Any] = field(default_factory=dict, hash=False)
    measured: int = field(init=False)

    def __post_init__(self):
        if isinstance(self.distinguished, Cycle):
            measured = chord_count(self.graph, self.distinguished)
        else:
            measured = path_chord_count(self.graph, self.distinguished)
        object.__setattr__(self, "measured", measured)
        if measured != self.predicted_chords:
            raise GadgetError(
                f"{self.formula_id}: predicted {self.predicted_chords} chords, measured {measured}"
            )

    def to_dict(self) -> dict[str, Any]:
        kind = "cycle" if isinstance(self.distinguished, Cycle) else "path"
        return {
            "formula_id": self.formula_id,
            "parameters": dict(self.parameters),
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges()]},
            "distinguished": {"kind": kind, "vertices": list(self.distinguished.vertices)},
            "predicted_chords": self.predicted_chords,
            "measured_chords": self.measured,
        }


class _Builder:
    """Incremental vertex/edge collector."""

    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def add(self, count: int = 1) -> list[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def complete(self, us: Iterable[int], vs: Iterable[int]) -> None:
        vs = list(vs)
        for u in us:
            for v in vs:
                self.join(u, v)

    def path(self, vs: Sequence[int]) -> None:
        for u, v in zip(vs, vs[1:]):
            self.join(u, v)

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


# ---------------------------------------------------------------------------
# wheels, fans, bicliques


def gen_wheel(rim_len: int, spokes: int) -> GadgetBlueprint:
    """Rim ``0..rim_len-1`` plus hub ``rim_len`` joined to rim vertices ``0..spokes-1``.

    The distinguished cycle is the rim itself (no chords).
    """
    if not 3 <= spokes <= rim_len:
        raise GadgetError(f"need 3 <= spokes <= rim_len, got spokes={spokes}, rim_len={rim_len}")
    b = _Builder()
    rim = b.add(rim_len)
    (hub,) = b.add()
    b.path(rim + [rim[0]])
    for v in rim[:spokes]:
        b.join(hub, v)
    return GadgetBlueprint(
        b.graph(), Cycle(tuple(rim)), 0, "wheel-rim", {"rim_len": rim_len, "spokes": spokes}
    )


def _spread(path_len: int, k: int) -> list[int]:
    if k == 1:
        return [0]
    return sorted({round(i * (path_len - 1) / (k - 1)) for i in range(k)})


def gen_fan(path_len: int, k: int, neighbours: Sequence[int] | None = None) -> GadgetBlueprint:
    """Path ``0..path_len-1`` plus hub ``path_len`` with exactly ``k`` neighbours on it.

    Neighbours default to ``k`` positions spread evenly along the path.  The
    distinguished cycle joins the first and last neighbour through the hub
    and has ``k - 2`` chords.
    """
    if not 2 <= k <= path_len:
        raise GadgetError(f"need 2 <= k <= path_len, got k={k}, path_len={path_len}")
    nbrs = sorted(set(neighbours)) if neighbours is not None else _spread(path_len, k)
    if len(nbrs) != k or any(not 0 <= v < path_len for v in nbrs):
        raise GadgetError(f"need {k} distinct neighbours among 0..{path_len - 1}, got {nbrs}")
    b = _Builder()
    path = b.add(path_len)
    (hub,) = b.add()
    b.path(path)
    for v in nbrs:
        b.join(hub, v)
    g = b.graph()
    try:
        cycle = fan_to_chorded_cycle(g, PathWitness(tuple(path)), hub, k)
    except ValueError as exc:
        raise GadgetError(str(exc)) from exc
    params = {"path_len": path_len, "k": k}
    return GadgetBlueprint(g, cycle, k - 2, "fan-cycle", params)


def biclique_path(ell: int, a: int) -> GadgetBlueprint:
    """``K_{ell,ell}`` (sides ``0..ell-1`` and ``ell..2ell-1``) with an alternating
    path on ``2a + 2`` vertices, which carries ``a^2`` chords."""
    if a < 0 or a + 1 > ell:
        raise GadgetError(f"need 0 <= a and a + 1 <= ell, got a={a}, ell={ell}")
    b = _Builder()
    left, right = b.add(ell), b.add(ell)
    b.complete(left, right)
    seq = []
    for i in range(a + 1):
        seq += [left[i], right[i]]
    return GadgetBlueprint(b.graph(), PathWitness(tuple(seq)), a * a, "biclique-path", {"ell": ell, "a": a})


def gen_mycielski(t: int) -> Graph:
    """Triangle-free graph with chromatic number ``t`` (``M_1 = K_1``, ``M_2 = K_2``)."""
    if t < 1:
        raise GadgetError("t must be at least 1")
    if t == 1:
        return build_graph(1, [])
    g = build_graph(2, [(0, 1)])
    for _ in range(t - 2):
        g = mycielski_step(g)
    return g


def mycielski_step(g: Graph) -> Graph:
    """Shadow vertex ``n + v`` for each ``v`` joined to ``N(v)``, plus apex ``2n`` joined to all shadows."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(n + u, v), (n + v, u)]
    edges += [(n + v, 2 * n) for v in range(n)]
    return build_graph(2 * n + 1, edges)


# ---------------------------------------------------------------------------
# hub-and-biclique assemblies


def _check_assembly(r: int, ell: int, a: Sequence[int], hub_edges) -> list[tuple[int, int]]:
    if r < 2:
        raise GadgetError("need at least two copies")
    if len(a) != r:
        raise GadgetError(f"expected {r} path parameters, got {len(a)}")
    if any(ai < 0 or ai + 1 > ell for ai in a):
        raise GadgetError(f"every a_i must satisfy 0 <= a_i and a_i + 1 <= ell={ell}")
    out = set()
    for i, j in hub_edges:
        if not (0 <= i < r and 0 <= j < r) or i == j:
            raise GadgetError(f"bad hub edge ({i}, {j})")
        out.add((min(i, j), max(i, j)))
    return sorted(out)


def assemble_complete_case(
    r: int, ell: int, a: Sequence[int], hub_edges: Iterable[tuple[int, int]] = ()
) -> GadgetBlueprint:
    """``r`` disjoint ``K_{ell,ell}`` and ``r`` hubs, every hub complete to every copy.

    The cycle ``x_1 Q_1 x_2 ... x_r Q_r x_1`` uses a path ``Q_i`` of ``2a_i + 1``
    edges in copy ``i`` and has ``sum(a_i^2 + 2r a_i + 2r - 2) + x`` chords,
    ``x`` being the number of hub-hub edges (indices into ``0..r-1``).
    """
    hub_edges = _check_assembly(r, ell, a, hub_edges)
    b = _Builder()
    copies = [(b.add(ell), b.add(ell)) for _ in range(r)]
    hubs = b.add(r)
    for left, right in copies:
        b.complete(left, right)
        b.complete(hubs, left + right)
    for i, j in hub_edges:
        b.join(hubs[i], hubs[j])
    order = []
    for i, (left, right) in enumerate(copies):
        order.append(hubs[i])
        for t in range(a[i] + 1):
            order += [left[t], right[t]]
    predicted = sum(ai * ai + 2 * r * ai + 2 * r - 2 for ai in a) + len(hub_edges)
    params = {"r": r, "ell": ell, "a": list(a), "x": len(hub_edges)}
    return GadgetBlueprint(b.graph(), Cycle(tuple(order)), predicted, "assembly-complete", params)


def assemble_oneside_case(
    r: int, ell: int, a: Sequence[int], hub_edges: Iterable[tuple[int, int]] = ()
) -> GadgetBlueprint:
    """As :func:`assemble_complete_case`, but hubs see only the first side of each copy.

    ``Q_i`` has ``2a_i`` edges with both ends on the first side, giving
    ``sum(a_i^2 + (r-1) a_i + r - 2) + x`` chords.
    """
    hub_edges = _check_assembly(r, ell, a, hub_edges)
    b = _Builder()
    copies = [(b.add(ell), b.add(ell)) for _ in range(r)]
    hubs = b.add(r)
    for left, right in copies:
        b.complete(left, right)
        b.complete(hubs, left)
    for i, j in hub_edges:
        b.join(hubs[i], hubs[j])
    order = []
    for i, (left, right) in enumerate(copies):
        order.append(hubs[i])
        for t in range(a[i]):
            order += [left[t], right[t]]
        order.append(left[a[i]])
    predicted = sum(ai * ai + (r - 1) * ai + r - 2 for ai in a) + len(hub_edges)
    params = {"r": r, "ell": ell, "a": list(a), "x": len(hub_edges)}
    return GadgetBlueprint(b.graph(), Cycle(tuple(order)), predicted, "assembly-oneside", params)


@dataclass(frozen=True)
class ConnectorModel:
    """Which connector vertices are complete to which biclique sides.

    Connector ``(i, j)`` (copy ``i`` in ``1..r``, side ``j`` in ``1..2``) is a
    two-vertex path ``v_{i,j} u_{i,j}`` from the hub copy to copy ``i``.
    ``complete`` maps ``(i, j, role)`` with ``role`` in ``{"u", "v"}`` to the
    set of sides ``(s, t)`` that vertex is complete to; every other side is
    anti-complete.
    """

    r: int
    complete: Mapping[tuple[int, int, str], frozenset[tuple[int, int]]] = field(
        default_factory=dict, hash=False
    )

    def validate(self) -> None:
        for (i, j, role), sides in self.complete.items():
            if not (1 <= i <= self.r and j in (1, 2) and role in ("u", "v")):
                raise GadgetError(f"unknown connector vertex {(i, j, role)}")
            for s, t in sides:
                if not (1 <= s <= self.r and t in (1, 2)):
                    raise GadgetError(f"unknown biclique side {(s, t)}")

    def t(self, s: int) -> int:
        """Number of (connector vertex, side of copy ``s``) completeness pairs."""
        return sum(1 for sides in self.complete.values() for side in sides if side[0] == s)


def assemble_multi_biclique(
    r: int, ell: int, a: Sequence[int], connectors: ConnectorModel, c0: int | None = None
) -> GadgetBlueprint:
    """Hub copy ``K_0`` plus copies ``K_1..K_r`` joined by two-vertex connectors.

    The cycle leaves ``K_0`` on side 1, crosses connector ``(i, 1)`` into
    ``K_i``, runs a path of ``2a_i + 1`` edges there, returns through
    connector ``(i, 2)`` and steps to the next copy inside ``K_0``.  The
    chord count is ``sum a_s^2 + sum t_s a_s + C_0`` where ``C_0`` does not
    depend on ``a``; it is measured at ``a = 0`` unless passed in.
    """
    connectors.validate()
    if connectors.r != r:
        raise GadgetError(f"connector model is for r={connectors.r}, not r={r}")
    if r < 1 or len(a) != r or any(ai < 0 or ai + 1 > ell for ai in a):
        raise GadgetError("need r >= 1 and r parameters with 0 <= a_i < ell")
    if c0 is None:
        c0 = _measure_multi(r, ell, [0] * r, connectors)
    g, cycle = build_multi_biclique(r, ell, a, connectors)
    predicted = sum(x * x + connectors.t(s) * x for s, x in enumerate(a, 1)) + c0
    params = {"r": r, "ell": ell, "a": list(a), "c0": c0, "t": [connectors.t(s) for s in range(1, r + 1)]}
    return GadgetBlueprint(g, cycle, predicted, "multi-biclique", params)


def _measure_multi(r, ell, a, connectors) -> int:
    g, cycle = build_multi_biclique(r, ell, a, connectors)
    return chord_count(g, cycle)


def build_multi_biclique(
    r: int, ell: int, a: Sequence[int], connectors: ConnectorModel
) -> tuple[Graph, Cycle]:
    """Raw multi-biclique graph and its distinguished cycle, with no chord prediction.

    Parameters are not validated here; see ``assemble_multi_biclique``.
    """
    b = _Builder()
    side0 = max(ell, r)
    hub1, hub2 = b.add(side0), b.add(side0)
    b.complete(hub1, hub2)
    copies = {}
    for s in range(1, r + 1):
        left, right = b.add(ell), b.add(ell)
        b.complete(left, right)
        copies[s] = {1: left, 2: right}
    conn = {}
    for i in range(1, r + 1):
        for j in (1, 2):
            v, u = b.add(2)
            conn[i, j] = {"u": u, "v": v}
            b.join(v, u)
            b.join(v, (hub1 if j == 1 else hub2)[i - 1])
            b.join(u, copies[i][j][0])
    for (i, j, role), sides in connectors.complete.items():
        for s, t in sides:
            for w in copies[s][t]:
                if w != copies[i][j][0] or role != "u":
                    b.join(conn[i, j][role], w)
    order = []
    for i in range(1, r + 1):
        left, right = copies[i][1], copies[i][2]
        inner = [left[0]]
        for t in range(1, a[i - 1] + 1):
            inner += [right[t], left[t]]
        inner.append(right[0])
        order += [hub1[i - 1], conn[i, 1]["v"], conn[i, 1]["u"]]
        order += inner
        order += [conn[i, 2]["u"], conn[i, 2]["v"], hub2[i - 1]]
    return b.graph(), Cycle(tuple(order))


# ---------------------------------------------------------------------------
# subdivided-edge gadgets


def _block_cycle(blocks: int, path_lens: Sequence[int], f_to_y: bool, formula: str, params):
    if blocks < 1:
        raise GadgetError("need at least one block")
    if len(path_lens) != blocks or any(p < 1 for p in path_lens):
        raise GadgetError(f"need {blocks} connector lengths, each at least 1")
    b = _Builder()
    pieces = []
    for i in range(blocks):
        x, f, e, y = b.add(4)
        b.path([x, e, y])
        b.join(f, e)
        b.join(f, x)
        if f_to_y:
            b.join(f, y)
        inner = b.add(path_lens[i])
        b.path([y] + inner)
        pieces.append([x, f, e, y] + inner)
    for i, piece in enumerate(pieces):
        b.join(piece[-1], pieces[(i + 1) % blocks][0])
    order = [v for piece in pieces for v in piece]
    per = 2 if f_to_y else 1
    return GadgetBlueprint(b.graph(), Cycle(tuple(order)), per * blocks, formula, params)


def case1_gadget(k: int, path_lens: Sequence[int] | None = None) -> GadgetBlueprint:
    """``k`` blocks ``x_i f_i e_i y_i`` (``e_i`` subdividing ``x_i y_i``, ``f_i`` a
    common neighbour of ``x_i`` and ``e_i``) chained by chordless connectors.

    The cycle through all blocks has exactly the ``k`` chords ``x_i e_i``.
    ``path_lens[i]`` is the number of interior connector vertices after block ``i``.
    """
    lens = list(path_lens) if path_lens is not None else [1] * k
    return _block_cycle(k, lens, False, "case1-blocks", {"k": k, "path_lens": lens})


def case2_gadget(s: int, path_lens: Sequence[int] | None = None) -> GadgetBlueprint:
    """As :func:`case1_gadget` with ``f_i`` also adjacent to ``y_i``: ``2s`` chords,
    namely ``x_i e_i`` and ``f_i y_i``."""
    lens = list(path_lens) if path_lens is not None else [1] * s
    return _block_cycle(s, lens, True, "case2-blocks", {"s": s, "path_lens": lens})


# host ids for the five-vertex gadget
CLAIM_X, CLAIM_Y, CLAIM_E, CLAIM_F, CLAIM_G = range(5)
_G_NEIGHBOURS = {
    0: (),
    1: (CLAIM_E,),
    2: (CLAIM_X, CLAIM_E),
    3: (CLAIM_X, CLAIM_Y, CLAIM_E),
}
_X, _Y, _E, _F, _G = CLAIM_X, CLAIM_Y, CLAIM_E, CLAIM_F, CLAIM_G
_CLAIM_PATHS = {
    (0, 1): (_G, _F, _E, _Y),
    (0, 2): (_G, _F, _X, _E, _Y),
    (1, 0): (_G, _F, _X),
    (1, 2): (_G, _F, _E, _Y),
    (1, 3): (_G, _F, _X, _E, _Y),
    (2, 1): (_G, _X, _E, _Y),
    (2, 2): (_G, _F, _E, _Y),
    (3, 1): (_G, _E, _Y),
    (3, 2): (_G, _X, _E, _Y),
}


def claim_legal_pairs() -> list[tuple[int, int]]:
    return sorted(_CLAIM_PATHS)


def claim47_host(sigma: int) -> Graph:
    """Host on ``x, y, e, f, g`` (ids 0..4): ``e`` subdivides ``xy``, ``f`` is
    adjacent to ``x, y, e``, and ``g`` is adjacent to ``f`` and to ``sigma`` of ``x, y, e``."""
    if sigma not in _G_NEIGHBOURS:
        raise GadgetError(f"sigma must be 0..3, got {sigma}")
    edges = [(_X, _E), (_E, _Y), (_F, _X), (_F, _Y), (_F, _E), (_G, _F)]
    edges += [(_G, v) for v in _G_NEIGHBOURS[sigma]]
    return build_graph(5, edges)


def claim47_path(sigma: int, requirement: int) -> GadgetBlueprint:
    """Path from ``g`` to ``x`` or ``y`` inside the five-vertex host with exactly
    ``requirement`` chords.

    Legal pairs: ``sigma = 1`` allows 0, 2, 3 chords; other ``sigma`` allow 1, 2.
    """
    host = claim47_host(sigma)
    try:
        path = _CLAIM_PATHS[sigma, requirement]
    except KeyError:
        raise GadgetError(f"(sigma={sigma}, requirement={requirement}) is not realisable") from None
    params = {"sigma": sigma, "requirement": requirement}
    return GadgetBlueprint(host, PathWitness(path), requirement, "five-vertex-path", params)


# ---------------------------------------------------------------------------
# induced double matching


def induced_double_matching(
    g1: Graph, g2: Graph, side_a: Sequence[int], side_b: Sequence[int], d: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Subsets ``A'`` of ``A`` and ``B'`` of ``B`` inducing a perfect matching in both ``g1`` and ``g2``.

    Greedy over ``A_0`` (vertices of ``g2``-degree at most ``2d``): add ``a``
    when none of its ``g2``-neighbours is already a ``g2``-neighbour of the
    chosen set, matching it to its lowest ``g1``-neighbour.  The result has
    ``|A'| >= m / (4 d^2)``.  ``B'[i]`` is the partner of ``A'[i]``.
    """
    A, B = list(side_a), list(side_b)
    sa, sb = set(A), set(B)
    m = len(A)
    if len(B) != m or sa & sb or len(sa) != m or len(sb) != m:
        raise GadgetError("sides must be disjoint and of equal size")
    if g1.n != g2.n:
        raise GadgetError("g1 and g2 must share a vertex set")
    if d < 1:
        raise GadgetError("d must be at least 1")
    for h in (g1, g2):
        for u, v in h.edges():
            if not ((u in sa and v in sb) or (u in sb and v in sa)):
                raise GadgetError(f"edge ({u}, {v}) does not cross the bipartition")
    if any(not g2.has_edge(u, v) for u, v in g1.edges()):
        raise GadgetError("g1 is not a subgraph of g2")
    if any(not g1.neighbors(a) for a in A):
        raise GadgetError("every A-vertex needs a g1-neighbour")
    if any(g2.degree(b) > d for b in B):
        raise GadgetError(f"a B-vertex has g2-degree above d={d}")
    chosen_a: list[int] = []
    chosen_b: list[int] = []
    covered: set[int] = set()  # N_{g2}(A')
    for a in sorted(A):
        if g2.degree(a) > 2 * d or g2.neighbors(a) & covered:
            continue
        chosen_a.append(a)
        chosen_b.append(min(g1.neighbors(a)))
        covered |= g2.neighbors(a)
    return tuple(chosen_a), tuple(chosen_b)


def is_double_matching(g1: Graph, g2: Graph, a_side: Sequence[int], b_side: Sequence[int]) -> bool:
    """Both ``g1[A', B']`` and ``g2[A', B']`` are the perfect matching ``A'[i] B'[i]``."""
    if len(a_side) != len(b_side):
        return False
    for h in (g1, g2):
        for i, a in enumerate(a_side):
            for j, b in enumerate(b_side):
                if h.has_edge(a, b) != (i == j):
                    return False
    return True
