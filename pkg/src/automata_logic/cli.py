"""Command-line front end.

Every command reads a graph file, builds its whole output in memory and
writes it only on success, so a failing run prints nothing to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import Graph, GraphFormatError, format_set, parse_graph, run
from .experiments import (
    Ensemble,
    describe_macrostate,
    infer_macrostate,
    run_protocol,
    run_protocol_exhaustive,
)
from .macro_logic import (
    MacroLogic,
    build_macro_logic,
    check_ortholattice,
    check_orthomodular,
    overlap_report,
)
from .micro_logic import MicroLogic, build_micro_logic, recognize_mo_n
from .order_toolkit import hasse_edges, to_dot

COMMANDS = ("analyze", "micro", "macro", "compare", "simulate", "run")


class UsageError(Exception):
    pass


def _set_list(a) -> list[int]:
    return sorted(a)


def _parse_ints(text: str, what: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"{what} must be a list of integers, got {text!r}") from None


def _fmt_family(sets) -> str:
    return ", ".join(format_set(a) for a in sets) if sets else "(none)"


# -- micro ---------------------------------------------------------------

def micro_text(m: MicroLogic) -> list[str]:
    k = recognize_mo_n(m)
    lines = ["partitions:"]
    if not m.partitions:
        lines.append("  (none: every input answers 1 for every state)")
    for p in m.partitions:
        inputs = ",".join(str(v) for v in sorted(p.input_class))
        lines.append(f"  inputs {inputs}: V = {format_set(p.v1)} ∪ {format_set(p.v0)}")
    lines.append(f"micro logic: MO{k} with {len(m.elements)} elements")
    lines.append(f"  elements: {_fmt_family(m.elements)}")
    return lines


def micro_json(m: MicroLogic) -> dict:
    return {
        "elements": [_set_list(a) for a in m.elements],
        "mo_n": recognize_mo_n(m),
        "order": [[i, j] for i in range(len(m.elements)) for j in range(len(m.elements)) if m.poset.le(i, j)],
        "covers": [list(e) for e in hasse_edges(m.poset)],
        "partitions": [
            {"inputs": sorted(p.input_class), "v0": _set_list(p.v0), "v1": _set_list(p.v1)}
            for p in m.partitions
        ],
    }


# -- macro ---------------------------------------------------------------

def macro_text(m: MacroLogic) -> list[str]:
    lines = [f"macro logic: {len(m.closed_sets)} closed sets"]
    lines.append(f"  closed sets: {_fmt_family(m.closed_sets)}")
    lines.append(f"  proper testable sets: {_fmt_family(m.proper_sets())}")
    lines.append("  orthocomplement: " + ", ".join(
        f"{format_set(a)}' = {format_set(m.ortho[a])}" for a in m.closed_sets))
    report = check_ortholattice(m)
    lines.append("ortholattice: " + ("pass" if report.passed else "FAIL"))
    lines.extend("  " + line for line in report.lines())
    modular, witness = check_orthomodular(m)
    if modular:
        lines.append("orthomodular: yes")
    else:
        a, b = witness
        lines.append(f"orthomodular: no (counterexample a = {format_set(a)}, b = {format_set(b)})")
    return lines


def macro_json(m: MacroLogic) -> dict:
    els = m.closed_sets
    modular, witness = check_orthomodular(m)
    report = check_ortholattice(m)
    return {
        "closed_sets": [_set_list(a) for a in els],
        "order": [[i, j] for i in range(len(els)) for j in range(len(els)) if m.poset.le(i, j)],
        "covers": [list(e) for e in hasse_edges(m.poset)],
        "ortho": [[_set_list(a), _set_list(m.ortho[a])] for a in els],
        "ortholattice": {name: not bad for name, bad in report.failures.items()},
        "orthomodular": modular,
        "orthomodular_counterexample": None if modular else [_set_list(x) for x in witness],
    }


# -- compare -------------------------------------------------------------

def compare_text(g: Graph) -> list[str]:
    r = overlap_report(g)
    return [
        "testable families:",
        f"  micro: {_fmt_family(r.micro)}",
        f"  macro: {_fmt_family(r.macro)}",
        f"  both: {_fmt_family(r.both)}",
        f"  micro only: {_fmt_family(r.micro_only)}",
        f"  macro only: {_fmt_family(r.macro_only)}",
    ]


def compare_json(g: Graph) -> dict:
    r = overlap_report(g)
    return {
        "micro": [_set_list(a) for a in r.micro],
        "macro": [_set_list(a) for a in r.macro],
        "both": [_set_list(a) for a in r.both],
        "micro_only": [_set_list(a) for a in r.micro_only],
        "macro_only": [_set_list(a) for a in r.macro_only],
    }


# -- commands ------------------------------------------------------------

def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def cmd_analyze(g: Graph, fmt: str) -> str:
    micro, macro = build_micro_logic(g), build_macro_logic(g)
    if fmt == "json":
        return _dump({"graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]},
                      "micro": micro_json(micro), "macro": macro_json(macro), "compare": compare_json(g)})
    edges = " ".join(f"{u}-{v}" for u, v in g.sorted_edges()) or "(none)"
    lines = [f"graph: n = {g.n}, edges: {edges}"]
    lines += micro_text(micro) + macro_text(macro) + compare_text(g)
    return "\n".join(lines) + "\n"


def cmd_micro(g: Graph, fmt: str) -> str:
    m = build_micro_logic(g)
    if fmt == "dot":
        return to_dot(m.poset, format_set, name="micro")
    if fmt == "json":
        return _dump(micro_json(m))
    return "\n".join(micro_text(m)) + "\n"


def cmd_macro(g: Graph, fmt: str) -> str:
    m = build_macro_logic(g)
    if fmt == "dot":
        return to_dot(m.poset, format_set, name="macro")
    if fmt == "json":
        return _dump(macro_json(m))
    return "\n".join(macro_text(m)) + "\n"


def cmd_compare(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return _dump(compare_json(g))
    return "\n".join(compare_text(g)) + "\n"


def cmd_simulate(g: Graph, fmt: str, support, samples: int, seed: int, exhaustive: bool) -> str:
    try:
        ensemble = Ensemble(g, frozenset(support))
    except ValueError as exc:
        raise UsageError(f"bad support: {exc}") from None
    if exhaustive:
        protocol = run_protocol_exhaustive(ensemble)
    else:
        protocol = run_protocol(ensemble, samples, seed)
    zero = protocol.zero_rows()
    inferred = infer_macrostate(g, protocol)
    if fmt == "json":
        return _dump({
            "support": _set_list(ensemble.support),
            "mode": "exhaustive" if exhaustive else "sampled",
            "seed": protocol.seed,
            "samples_per_row": protocol.samples_per_row,
            "rows": {str(v): "".join(map(str, protocol.rows[v])) for v in sorted(protocol.rows)},
            "zero_rows": sorted(zero),
            "inference": _set_list(inferred),
        })
    mode = "exhaustive" if exhaustive else f"sampled, seed {seed}"
    head = f"ensemble support {format_set(ensemble.support)} ({mode}, {protocol.samples_per_row} samples per input)\n"
    return (head + protocol.to_text()
            + f"zero rows: {format_set(zero)}\n"
            + f"inference: {describe_macrostate(g, inferred)}\n")


def cmd_run(g: Graph, fmt: str, initial: int, inputs) -> str:
    try:
        bits = run(g, initial, inputs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if fmt == "json":
        return _dump({"initial": initial, "inputs": list(inputs), "outputs": bits})
    return " ".join(str(b) for b in bits) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="automata-logic",
        description="Micro- and macrostatement logics of normalized automata.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("graph", type=Path, help="graph file: vertex count, then one 'u v' edge per line")
    parser.add_argument("--format", choices=("text", "dot", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--exhaustive", action="store_true", help="one sample per support state")
    parser.add_argument("--support", help='ensemble support, e.g. "1,2,3"')
    parser.add_argument("--initial", type=int, default=None, help="initial state for run")
    parser.add_argument("--inputs", default="", help='input sequence for run, e.g. "2 3 3"')
    return parser


def execute(args: argparse.Namespace) -> str:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.format == "dot" and args.command not in ("micro", "macro"):
        raise UsageError("dot output is only available for micro and macro")
    try:
        text = args.graph.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
    g = parse_graph(text)
    if args.command == "analyze":
        return cmd_analyze(g, args.format)
    if args.command == "micro":
        return cmd_micro(g, args.format)
    if args.command == "macro":
        return cmd_macro(g, args.format)
    if args.command == "compare":
        return cmd_compare(g, args.format)
    if args.command == "simulate":
        if not args.support:
            raise UsageError("simulate needs --support")
        return cmd_simulate(g, args.format, _parse_ints(args.support, "--support"),
                            args.samples, args.seed, args.exhaustive)
    if args.initial is None:
        raise UsageError("run needs --initial")
    return cmd_run(g, args.format, args.initial, _parse_ints(args.inputs, "--inputs"))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = execute(args)
    except GraphFormatError as exc:
        print(f"{args.graph}: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
