"""Cycles with a prescribed number of chords: exact search, constructions and
the number-theoretic decompositions that drive them."""

from .graph import (
    Cycle,
    Graph,
    GraphError,
    InvalidCycleError,
    PathWitness,
    SizeLimitError,
    build_graph,
    chord_count,
    chromatic_number,
    clique_number,
    cycle_chords,
    enumerate_cycles,
)
from .chordsearch import chord_spectrum, find_cycle_with_exact_chords

__all__ = [
    "Cycle",
    "Graph",
    "GraphError",
    "InvalidCycleError",
    "PathWitness",
    "SizeLimitError",
    "build_graph",
    "chord_count",
    "chord_spectrum",
    "chromatic_number",
    "clique_number",
    "cycle_chords",
    "enumerate_cycles",
    "find_cycle_with_exact_chords",
]

__version__ = "0.1.0"
