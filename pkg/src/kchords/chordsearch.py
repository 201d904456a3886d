"""Exhaustive search for cycles with a prescribed number of chords, and the
wheel / fan constructions that produce such cycles directly.

Searches are bounded by ``max_len``.  A ``None`` answer means "no such
cycle of length at most ``max_len``"; it is a global absence claim only
when ``max_len >= g.n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import (
    Cycle,
    Graph,
    InvalidCycleError,
    PathWitness,
    chord_count,
    enumerate_cycles,
    validate_cycle,
    validate_path,
)


@dataclass(frozen=True)
class ChordSpectrumReport:
    """Chord counts realised up to ``max_len``, one witness per count.

    ``exhaustive`` is set when ``max_len`` covers every cycle of the host.
    """

    max_len: int
    witnesses: dict[int, Cycle] = field(default_factory=dict)
    exhaustive: bool = False

    @property
    def achievable(self) -> frozenset[int]:
        return frozenset(self.witnesses)


@dataclass(frozen=True)
class WheelWitness:
    hub: int
    rim: Cycle
    spokes: int


def _search(g: Graph, max_len: int, target: int | None) -> Iterator[tuple[Cycle, int]]:
    """Yield ``(cycle, chords)`` in lexicographic canonical order.

    With ``target`` set, partial paths already carrying more than ``target``
    chords are cut.  The running count excludes the pair (first, last) since
    that pair becomes a cycle edge if the path closes right away; chords
    among path vertices never disappear as the path grows, so the count is a
    valid lower bound for every completion.
    """
    for s in range(g.n):
        path = [s]
        on_path = {s}
        inner = [0]  # chord lower bound for each prefix length
        stack = [iter([w for w in g.sorted_neighbors(s) if w > s])]
        while stack:
            v = next(stack[-1], None)
            if v is None:
                stack.pop()
                on_path.discard(path.pop())
                inner.pop()
                continue
            if v in on_path:
                continue
            prev = path[-1]
            gained = 0
            if len(path) >= 3 and g.has_edge(s, prev):
                gained += 1
            nb = g.neighbors(v)
            for i in range(1, len(path) - 1):
                if path[i] in nb:
                    gained += 1
            count = inner[-1] + gained
            if target is not None and count > target:
                continue
            path.append(v)
            on_path.add(v)
            inner.append(count)
            if len(path) >= 3 and s in nb and path[1] < v:
                yield Cycle(tuple(path)), count
            if len(path) < max_len:
                stack.append(iter([w for w in g.sorted_neighbors(v) if w > s]))
            else:
                on_path.discard(path.pop())
                inner.pop()


def find_cycle_with_exact_chords(g: Graph, k: int, max_len: int) -> Cycle | None:
    """Lexicographically least cycle of length ``<= max_len`` with exactly ``k`` chords.

    Returns ``None`` when no such cycle exists up to the bound.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if max_len < 3:
        return None
    for cycle, count in _search(g, max_len, k):
        if count == k:
            return cycle
    return None


def chord_spectrum(g: Graph, max_len: int) -> ChordSpectrumReport:
    """All chord counts realised by cycles of length ``<= max_len``, each with
    its lexicographically least witness."""
    witnesses: dict[int, Cycle] = {}
    if max_len >= 3:
        for cycle, count in _search(g, max_len, None):
            witnesses.setdefault(count, cycle)
    return ChordSpectrumReport(max_len, dict(sorted(witnesses.items())), max_len >= g.n)


def find_k_wheel(g: Graph, k: int, max_rim: int) -> WheelWitness | None:
    """An induced cycle (rim) of length ``<= max_rim`` plus a vertex off the rim
    with at least ``k`` neighbours on it."""
    if max_rim < 3:
        return None
    for rim in enumerate_cycles(g, max_rim):
        if len(rim) < max(k, 3) or chord_count(g, rim) != 0:
            continue
        on_rim = set(rim.vertices)
        for hub in range(g.n):
            if hub in on_rim:
                continue
            spokes = len(g.neighbors(hub) & on_rim)
            if spokes >= k:
                return WheelWitness(hub, rim, spokes)
    return None


def _check_wheel(g: Graph, w: WheelWitness) -> list[int]:
    validate_cycle(g, w.rim)
    if chord_count(g, w.rim) != 0:
        raise ValueError("wheel rim is not an induced cycle")
    if w.hub in w.rim.vertices:
        raise ValueError("wheel hub lies on its rim")
    positions = [i for i, v in enumerate(w.rim.vertices) if g.has_edge(w.hub, v)]
    if len(positions) != w.spokes:
        raise ValueError(f"wheel claims {w.spokes} spokes but the hub has {len(positions)} rim neighbours")
    return positions


def wheel_to_chorded_cycle(g: Graph, w: WheelWitness, j: int) -> Cycle:
    """Cycle with exactly ``j`` chords, all incident with the hub.

    Takes ``j + 2`` consecutive hub neighbours ``u_0..u_{j+1}`` on the rim,
    the rim arc from ``u_0`` to ``u_{j+1}`` through ``u_1..u_j``, and closes
    it through the hub.  The arc must leave at least one rim vertex out, or
    its end pair would be a rim edge and hence an extra chord.
    """
    positions = _check_wheel(g, w)
    if j < 0:
        raise ValueError("j must be non-negative")
    rim = w.rim.vertices
    m = len(rim)
    s = len(positions)
    if j + 2 > s:
        raise ValueError(f"j={j} needs {j + 2} spokes, wheel has {s}")
    # choose the window of j+2 consecutive spokes whose complementary rim arc is non-empty
    for start in range(s):
        first = positions[start]
        last = positions[(start + j + 1) % s]
        span = (last - first) % m
        if span < m - 1:
            arc = [rim[(first + t) % m] for t in range(span + 1)]
            return Cycle(tuple(arc) + (w.hub,))
    raise ValueError(
        f"j={j} is too large for a wheel whose {s} spokes cover its whole rim; at most {s - 3}"
    )


def fan_to_chorded_cycle(g: Graph, path: PathWitness, hub: int, k: int) -> Cycle:
    """Cycle with ``k - 2`` chords through the hub of a ``k``-fan.

    The cycle is the path segment between the first and last hub neighbour,
    closed through the hub; the chords are the hub's interior spokes.
    """
    validate_path(g, path)
    vs = path.vertices
    if hub in vs:
        raise ValueError("fan hub lies on the path")
    idx = [i for i, v in enumerate(vs) if g.has_edge(hub, v)]
    if len(idx) < 2:
        raise ValueError(f"hub has {len(idx)} neighbours on the path; a fan needs at least 2")
    if len(idx) != k:
        raise ValueError(f"hub has {len(idx)} neighbours on the path, expected k={k}")
    cycle = Cycle(vs[idx[0] : idx[-1] + 1] + (hub,))
    if chord_count(g, cycle) != k - 2:
        raise InvalidCycleError("fan path segment is not induced; its chords spoil the count")
    return cycle
