"""Command-line front end.

Every command prints one JSON report on stdout (keys sorted, so identical
invocations give identical bytes) and exits 0 on success, 2 when nothing
was found up to the given bound, and 1 on errors or failed verification.
Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from . import gadgets, numtheory
from .chordsearch import chord_spectrum, find_cycle_with_exact_chords
from .extraction import extraction_sequence
from .graph import Cycle, Graph, PathWitness, chord_count, chromatic_number, cycle_chords, path_chords
from .io import format_dimacs, format_json, read_graph
from .random_graphs import random_connected_graph, random_graph

EXIT_OK, EXIT_ERROR, EXIT_NONE = 0, 1, 2


class Report:
    def __init__(self, command: str, inputs: dict[str, Any]):
        self.command = command
        self.inputs = inputs
        self.outcome: Any = None
        self.verification = "pass"
        self.exit_code = EXIT_OK

    def fail(self, predicted: Any, measured: Any) -> None:
        self.verification = "fail"
        self.exit_code = EXIT_ERROR
        print(f"verification failed: predicted {predicted}, measured {measured}", file=sys.stderr)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "verification": self.verification,
        }


def _load(args) -> Graph:
    if not args.graph:
        raise ValueError("--graph is required")
    g, _ = read_graph(args.graph, args.format)
    return g


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _direct_cycle_chords(g: Graph, cycle: Cycle) -> int:
    """Chord count from the non-consecutive adjacent pairs, independent of the edge-count formula."""
    return len(cycle_chords(g, cycle))


# ---------------------------------------------------------------------------
# commands


def cmd_chords(args) -> Report:
    g = _load(args)
    cycle = Cycle(tuple(_int_list(args.cycle)))
    rep = Report("chords", {"graph": args.graph, "cycle": list(cycle.vertices)})
    count = chord_count(g, cycle)
    rep.outcome = {"chords": count, "chord_list": [list(c) for c in cycle_chords(g, cycle)]}
    if _direct_cycle_chords(g, cycle) != count:
        rep.fail(count, _direct_cycle_chords(g, cycle))
    return rep


def cmd_find(args) -> Report:
    g = _load(args)
    rep = Report("find", {"graph": args.graph, "k": args.k, "max_len": args.max_len})
    cycle = find_cycle_with_exact_chords(g, args.k, args.max_len)
    if cycle is None:
        rep.outcome = None
        rep.exit_code = EXIT_NONE
        return rep
    rep.outcome = {"cycle": list(cycle.vertices), "chords": args.k}
    measured = _direct_cycle_chords(g, cycle)
    if measured != args.k:
        rep.fail(args.k, measured)
    return rep


def cmd_spectrum(args) -> Report:
    g = _load(args)
    rep = Report("spectrum", {"graph": args.graph, "max_len": args.max_len})
    spectrum = chord_spectrum(g, args.max_len)
    rep.outcome = {
        "achievable": sorted(spectrum.achievable),
        "witnesses": {str(k): list(c.vertices) for k, c in spectrum.witnesses.items()},
        "exhaustive": spectrum.exhaustive,
    }
    for k, c in spectrum.witnesses.items():
        measured = _direct_cycle_chords(g, c)
        if measured != k:
            rep.fail(k, measured)
    if not spectrum.witnesses:
        rep.exit_code = EXIT_NONE
    return rep


def cmd_decompose(args) -> Report:
    kind, k, c = args.kind, args.k, args.c
    rep = Report("decompose", {"kind": kind, "k": k, "c": c})
    try:
        if kind == "squares4":
            terms = numtheory.four_squares(k)
            ok = sum(x * x for x in terms) == k
        elif kind == "squares20":
            terms = numtheory.twenty_squares_above(k, c).terms
            ok = len(terms) == 20 and sum(x * x for x in terms) == k and all(x > c for x in terms)
        else:
            terms = numtheory.eighty_pronic(k, c).terms
            ok = len(terms) == 80 and sum(x * (x + 1) for x in terms) == k and all(x >= c for x in terms)
    except numtheory.InfeasibleError as exc:
        print(str(exc), file=sys.stderr)
        rep.exit_code = EXIT_NONE
        return rep
    rep.outcome = {"terms": list(terms)}
    if not ok:
        rep.fail(k, terms)
    return rep


def _gadget_blueprint(name: str, params: list[str]):
    ints = [int(p) for p in params if "," not in p]

    def seq(i: int) -> list[int]:
        return _int_list(params[i])

    if name == "wheel":
        return gadgets.gen_wheel(*ints[:2])
    if name == "fan":
        return gadgets.gen_fan(ints[0], ints[1])
    if name == "biclique-path":
        return gadgets.biclique_path(ints[0], ints[1])
    if name == "complete-case":
        r, ell = int(params[0]), int(params[1])
        return gadgets.assemble_complete_case(r, ell, seq(2))
    if name == "oneside-case":
        r, ell = int(params[0]), int(params[1])
        return gadgets.assemble_oneside_case(r, ell, seq(2))
    if name == "claim":
        return gadgets.claim47_path(ints[0], ints[1])
    if name == "case1":
        return gadgets.case1_gadget(int(params[0]), seq(1) if len(params) > 1 else None)
    if name == "case2":
        return gadgets.case2_gadget(int(params[0]), seq(1) if len(params) > 1 else None)
    raise ValueError(f"unknown gadget {name!r}")


def cmd_gadget(args) -> Report:
    rep = Report("gadget", {"name": args.name, "params": list(args.params)})
    if args.name == "mycielski":
        t = int(args.params[0])
        g = gadgets.gen_mycielski(t)
        chi = chromatic_number(g)
        rep.outcome = {"n": g.n, "edges": [list(e) for e in g.edges()], "chi": chi}
        if chi != t:
            rep.fail(t, chi)
        return rep
    bp = _gadget_blueprint(args.name, list(args.params))
    rep.outcome = bp.to_dict()
    dist = bp.distinguished
    if isinstance(dist, Cycle):
        measured = _direct_cycle_chords(bp.graph, dist)
    else:
        measured = len(path_chords(bp.graph, PathWitness(dist.vertices)))
    if measured != bp.predicted_chords:
        rep.fail(bp.predicted_chords, measured)
    return rep


def cmd_extract(args) -> Report:
    g = _load(args)
    rep = Report("extract", {"graph": args.graph, "p": args.p})
    chain = extraction_sequence(g, args.p)
    rep.outcome = chain.to_dict()
    for j, vs in enumerate(chain.vertex_sets):
        sub, _ = g.induced_subgraph(vs)
        chi = chromatic_number(sub) if vs else 0
        if chi * 2**j < chain.chi0:
            rep.fail(f"chi(G_{j}) * 2^{j} >= {chain.chi0}", chi * 2**j)
    return rep


def cmd_random(args) -> Report:
    n, prob, seed = args.n, args.prob, args.seed
    rep = Report("random", {"n": n, "prob": prob, "seed": seed, "connected": args.connected})
    g = (random_connected_graph if args.connected else random_graph)(n, prob, seed)
    rep.outcome = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if args.graph_out:
        text = format_dimacs(g) if args.format == "dimacs" else format_json(g)
        Path(args.graph_out).write_text(text)
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph file (DIMACS or JSON)")
    common.add_argument("--format", choices=("dimacs", "json"), help="graph file format")
    common.add_argument("--out", help="also write the JSON report here")
    common.add_argument("--timing", action="store_true", help="add wall_time_ms to the report")

    parser = argparse.ArgumentParser(prog="kchords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chords", parents=[common], help="count chords of a given cycle")
    p.add_argument("--cycle", required=True, help="vertex ids, comma separated")
    p.set_defaults(func=cmd_chords)

    p = sub.add_parser("find", parents=[common], help="find a cycle with exactly k chords")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("spectrum", parents=[common], help="all chord counts up to a cycle length")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("decompose", parents=[common], help="additive decompositions")
    p.add_argument("kind", choices=("squares4", "squares20", "pronic80"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gadget", parents=[common], help="build and verify a construction")
    p.add_argument(
        "name",
        choices=("wheel", "fan", "biclique-path", "complete-case", "oneside-case", "claim", "case1", "case2", "mycielski"),
    )
    p.add_argument("params", nargs="*", help="integers; sequences as comma lists")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("extract", parents=[common], help="extraction chain with chi certificates")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("random", parents=[common], help="seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, required=True, help="64-bit seed")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--graph-out", help="write the graph file here")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is not None and not 0 <= args.seed < 2**64:
        print("--seed must fit in 64 bits", file=sys.stderr)
        return EXIT_ERROR
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except (ValueError, OSError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        rep = Report(args.command, {k: v for k, v in sorted(vars(args).items()) if k != "func"})
        rep.outcome = {"error": str(exc)}
        rep.verification = "fail"
        rep.exit_code = EXIT_ERROR
    doc = rep.to_dict()
    if args.timing:
        doc["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    text = json.dumps(doc, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return rep.exit_code

