"""
Command line front end.

    tanglemoves classify FILE        arc-decomposition, type and standard form
    tanglemoves normalize FILE       standard form plus witness word
    tanglemoves equiv FILE_A FILE_B  whether two moves are equivalent
    tanglemoves order A B            order verdict between classes, e.g. 2,2 3
    tanglemoves hasse                DOT picture of the order
    tanglemoves count N              number of ST(N) classes
    tanglemoves enumerate N          all ST(N) moves as JSON lines
    tanglemoves u-index A            unknotting index of an X-type class
    tanglemoves examples             run the built-in suite
    tanglemoves render A             ASCII picture of a standard move

FILE may be '-' for standard input and may hold JSON lines.  Exit status is 0
on success, 1 on a domain error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import DiagramError
from .engine import EngineError, apply_sequence
from .io import DocumentError, MoveDocument, move_to_data, ops_to_data, parse_documents
from .moves import (ArcDecomposition, MoveError, arc_decomposition, class_count, enumerate_st_moves,
                    equivalent, parity_type, standard_move)
from .normalize import BraidedMove, ConsistencyError, normalize
from .poset import leq, hasse_export
from .realize import RealizationError
from .render import render_move
from .showcase import run_checks
from .unknotting import u_index

DOMAIN_ERRORS = (MoveError, DiagramError, EngineError, DocumentError, RealizationError,
                 ConsistencyError, ValueError)


class UsageError(Exception):
    pass


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("TANGLEMOVES_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"TANGLEMOVES_BUDGET must be an integer, got {env!r}")
    return None


def _read(path: str) -> list[MoveDocument]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}")
    return parse_documents(text)


def _source(doc: MoveDocument):
    """The move a document describes, with its braid word applied if present."""
    if doc.word:
        return BraidedMove(doc.move, doc.word)
    return doc.move


def _partition(text: str) -> ArcDecomposition:
    try:
        return ArcDecomposition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(args, data, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_classify(args) -> int:
    for doc in _read(args.file):
        nf = normalize(_source(doc), _budget(args))
        lam = nf.partition
        data = {"partition": list(lam.parts), "type": parity_type(lam),
                "standard": move_to_data(nf.standard)}
        if args.format == "ascii":
            print(f"{lam} {parity_type(lam)}-type")
            print(render_move(nf.standard), end="")
        else:
            _emit(args, data, f"{lam} {parity_type(lam)}-type")
    return 0


def cmd_normalize(args) -> int:
    for doc in _read(args.file):
        source = _source(doc)
        if doc.sequence is not None:
            # apply the document's sequence first, then normalize the outcome
            from .engine import extract_trivial_pair
            base = source.pair() if isinstance(source, BraidedMove) else source
            source = extract_trivial_pair(apply_sequence(base, doc.sequence), _budget(args))
        nf = normalize(source, _budget(args))
        data = {"partition": list(nf.partition.parts), "standard": move_to_data(nf.standard),
                "witness": ops_to_data(nf.witness)}
        if args.format == "ascii":
            print(f"{nf.partition} witness: {nf.witness.notation()}")
            print(render_move(nf.standard), end="")
        else:
            _emit(args, data, f"{nf.partition} witness: {nf.witness.notation()}")
    return 0


def cmd_equiv(args) -> int:
    a = _read(args.file_a)
    b = _read(args.file_b)
    if len(a) != len(b):
        raise UsageError("both inputs must hold the same number of moves")
    for da, db in zip(a, b):
        la = normalize(_source(da), _budget(args)).partition
        lb = normalize(_source(db), _budget(args)).partition
        same = la == lb
        _emit(args, {"equivalent": same, "left": list(la.parts), "right": list(lb.parts)},
              "true" if same else "false")
    return 0


def cmd_order(args) -> int:
    src, dst = _partition(args.source), _partition(args.target)
    verdict = leq(src, dst, args.search_depth)
    text = str(verdict)
    if verdict.witness is not None:
        text += f"\nwitness: {verdict.witness}"
    _emit(args, verdict.to_dict(), text)
    return 0


def cmd_hasse(args) -> int:
    h = hasse_export(args.n_max if args.n_max is not None else 4, args.search_depth)
    if args.format == "json":
        print(json.dumps(h.to_dict(), sort_keys=True))
    else:
        print(h.to_dot(), end="")
    return 0


def cmd_count(args) -> int:
    value = class_count(args.n)
    _emit(args, value, str(value))
    return 0


def cmd_enumerate(args) -> int:
    guard = args.n_max if args.n_max is not None else 6
    moves = enumerate_st_moves(args.n, guard)
    if args.up_to_equivalence:
        seen = {}
        for m in moves:
            seen.setdefault(arc_decomposition(m), m)
        moves = [standard_move(lam) for lam in sorted(seen)]
    for m in moves:
        if args.format == "ascii":
            print(arc_decomposition(m))
            print(render_move(m))
        else:
            data = move_to_data(m)
            data["partition"] = list(arc_decomposition(m).parts)
            print(json.dumps(data, sort_keys=True))
    return 0


def cmd_u_index(args) -> int:
    value = u_index(_partition(args.partition)).value
    _emit(args, value, str(value))
    return 0


def cmd_examples(args) -> int:
    results = run_checks()
    for r in results:
        if args.format == "json":
            print(json.dumps({"name": r.name, "passed": r.passed, "detail": r.detail}))
        else:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def cmd_render(args) -> int:
    lam = _partition(args.partition)
    print(render_move(standard_move(lam)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="simplification budget per diagram (default 10*crossings+100, "
                             "or $TANGLEMOVES_BUDGET)")
    common.add_argument("--n-max", type=int, default=None,
                        help="size limit for hasse (default 4) and enumerate (default 6)")
    common.add_argument("--search-depth", type=int, default=None,
                        help="connect-sequence steps allowed in witness search (default: unlimited)")
    common.add_argument("--format", choices=("json", "dot", "ascii"), default=None,
                        help="output format; plain text when omitted")
    common.add_argument("--up-to-equivalence", action="store_true",
                        help="enumerate: one standard move per class")

    parser = argparse.ArgumentParser(prog="tanglemoves", description="Extended ST-moves up to braiding.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("classify", cmd_classify, "classify moves").add_argument("file")
    add("normalize", cmd_normalize, "standard form with witness").add_argument("file")
    p = add("equiv", cmd_equiv, "compare two moves")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p = add("order", cmd_order, "order verdict between two classes")
    p.add_argument("source")
    p.add_argument("target")
    add("hasse", cmd_hasse, "DOT export of the order")
    add("count", cmd_count, "number of classes").add_argument("n", type=int)
    add("enumerate", cmd_enumerate, "list ST(n)-moves").add_argument("n", type=int)
    add("u-index", cmd_u_index, "unknotting index").add_argument("partition")
    add("examples", cmd_examples, "run the built-in suite")
    add("render", cmd_render, "ASCII standard move").add_argument("partition")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
