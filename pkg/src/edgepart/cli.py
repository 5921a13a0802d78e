"""Command-line entry point ``edgepart``.

Exit codes: 0 success, 1 malformed or invalid input, 2 no partition exists
(UNSAT), 3 the exact search hit its node limit.
"""

from __future__ import annotations

import argparse
import logging
import sys
import warnings
from typing import Sequence, TextIO

from . import gadgets
from .deg1 import build_2sat, partition_deg1
from .deg3 import partition_deg3
from .graph import GraphError, is_3connected, is_ic, is_nic, validate
from .io import (
    FormatError,
    GraphDocument,
    caps_from_mapping,
    export_dot,
    format_coloring,
    parse,
    parse_coloring,
    parse_planar3sat,
    serialize,
)
from .oracle import SearchAborted, Status, decide_k, min_k

EXIT_OK, EXIT_INPUT, EXIT_UNSAT, EXIT_ABORT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str, stdout: TextIO) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _cmd_validate(args, out: TextIO) -> int:
    doc = parse(_read(args.file), check=False)
    rep = validate(doc.graph)
    if rep.ok:
        out.write("valid\n")
        return EXIT_OK
    for v in rep.violations:
        print(v, file=sys.stderr)
    return EXIT_INPUT


def _cmd_props(args, out: TextIO) -> int:
    g = parse(_read(args.file)).graph
    out.write(f"n: {g.n}\nm: {g.m}\ncrossings: {len(g.crossings)}\n")
    out.write(f"is_nic: {_bool(is_nic(g))}\nis_ic: {_bool(is_ic(g))}\n")
    out.write(f"is_3connected: {_bool(is_3connected(g))}\n")
    return EXIT_OK


def _cmd_partition(args, out: TextIO) -> int:
    g = parse(_read(args.file)).graph
    if args.k == 1:
        col = partition_deg1(g)
        if col is None:
            print("no degree-1 partition exists", file=sys.stderr)
            return EXIT_UNSAT
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            col = partition_deg3(g).coloring
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    _write(args.output, format_coloring(col), out)
    return EXIT_OK


def _parse_caps(items: Sequence[str]) -> dict[str, int]:
    caps = {}
    for item in items:
        ref, sep, val = item.rpartition(":")
        if not sep or not ref:
            raise FormatError(f"--cap expects VERTEX:N, got {item!r}")
        try:
            caps[ref] = int(val)
        except ValueError:
            raise FormatError(f"--cap expects an integer cap, got {val!r}") from None
    return caps


def _cmd_oracle(args, out: TextIO) -> int:
    doc = parse(_read(args.file))
    caps = caps_from_mapping(doc, _parse_caps(args.cap))
    if args.min:
        try:
            k, col = min_k(doc.graph, caps, node_limit=args.node_limit)
        except SearchAborted as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_ABORT
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_UNSAT
        out.write(f"{k}\n")
        if args.witness:
            _write(args.witness, format_coloring(col), out)
        return EXIT_OK
    res = decide_k(doc.graph, args.decide, caps, node_limit=args.node_limit)
    out.write(f"{res.status.value}\n")
    logging.getLogger(__name__).info("nodes explored: %d", res.nodes_explored)
    if res.status is Status.SAT:
        if args.witness:
            _write(args.witness, format_coloring(res.coloring), out)
        return EXIT_OK
    if res.status is Status.UNSAT:
        return EXIT_UNSAT
    print(f"node limit reached after {res.nodes_explored} nodes", file=sys.stderr)
    return EXIT_ABORT


def _gen(args) -> GraphDocument:
    kind, params = args.kind, args.params

    def need(count: int, usage: str) -> list[str]:
        if len(params) != count:
            raise FormatError(f"usage: gen {kind} {usage}".rstrip())
        return params

    if kind == "kite":
        need(0, "")
        return GraphDocument.from_gadget(gadgets.kite())
    if kind == "fan":
        (k,) = need(1, "K")
        return GraphDocument.from_gadget(gadgets.fan_of_crossings(int(k)))
    if kind == "blob":
        need(0, "")
        return GraphDocument.from_gadget(gadgets.blob())
    if kind == "variable":
        (m,) = need(1, "M")
        return GraphDocument.from_gadget(gadgets.variable_gadget(int(m), args.mode))
    if kind == "clause":
        need(0, "")
        return GraphDocument.from_gadget(gadgets.clause_gadget())
    if kind == "lb":
        (n,) = need(1, "N")
        return GraphDocument(gadgets.lower_bound_family(int(n), args.make_3connected))
    if kind == "random":
        seed, size, frac = need(3, "SEED SIZE FRAC")
        return GraphDocument(gadgets.random_nic(int(seed), int(size), float(frac)))
    if kind == "reduce":
        (path,) = need(1, "PHI_FILE")
        phi = parse_planar3sat(_read(path))
        return GraphDocument.from_gadget(gadgets.reduce_planar3sat(phi, args.mode))
    raise FormatError(f"unknown generator {kind!r}")


def _cmd_gen(args, out: TextIO) -> int:
    _write(args.output, serialize(_gen(args)), out)
    return EXIT_OK


def _cmd_export(args, out: TextIO) -> int:
    g = parse(_read(args.file)).graph
    col = parse_coloring(_read(args.coloring), g.m) if args.coloring else None
    _write(args.dot, export_dot(g, col), out)
    return EXIT_OK


def _cmd_sat2cnf(args, out: TextIO) -> int:
    g = parse(_read(args.file)).graph
    _write(args.output, build_2sat(g).to_dimacs(), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgepart", description="Red/blue edge partitions of 1-plane graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check structural invariants")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(run=_cmd_validate)

    s = sub.add_parser("props", help="print size and NIC/IC/3-connectivity")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(run=_cmd_props)

    s = sub.add_parser("partition", help="degree-1 (2-SAT) or degree-3 (NIC) partition")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--k", type=int, choices=(1, 3), required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(run=_cmd_partition)

    s = sub.add_parser("oracle", help="exact search for degree-k partitions")
    s.add_argument("file", nargs="?", default="-")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--decide", type=int, metavar="K")
    mode.add_argument("--min", action="store_true")
    s.add_argument("--cap", action="append", default=[], metavar="VERTEX:N",
                   help="red-degree cap; VERTEX is an id or a label (repeatable)")
    s.add_argument("--node-limit", type=int, default=None)
    s.add_argument("--witness", metavar="FILE", help="write the found coloring here")
    s.set_defaults(run=_cmd_oracle)

    s = sub.add_parser("gen", help="generate gadgets and graph families")
    s.add_argument("kind", choices=("kite", "fan", "blob", "variable", "clause", "lb", "random", "reduce"))
    s.add_argument("params", nargs="*")
    s.add_argument("--mode", choices=("full", "constraint"), default="constraint")
    s.add_argument("--make-3connected", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(run=_cmd_gen)

    s = sub.add_parser("export", help="write a DOT drawing")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--coloring")
    s.add_argument("--dot", required=True, metavar="OUT")
    s.set_defaults(run=_cmd_export)

    s = sub.add_parser("sat2cnf", help="degree-1 instance as DIMACS CNF")
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("-o", "--output")
    s.set_defaults(run=_cmd_sat2cnf)
    return p


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.run(args, out)
    except (FormatError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
