"""
Moves with crossings: both diagrams of a local move carried together through
braiding and connecting operations, then simplified and read back as a
crossingless move.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagram import DiagramError, TangleDiagram, greedy_reduce, simplify
from .moves import ArcDecomposition, LocalMove, arc_decomposition, trace_components
from .ops import BraidLetter, Connect, Op, OpSequence


class EngineError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class MovePair:
    top: TangleDiagram
    bottom: TangleDiagram

    @classmethod
    def from_move(cls, move: LocalMove) -> "MovePair":
        return cls(TangleDiagram.from_matching(move.top), TangleDiagram.from_matching(move.bottom))

    @property
    def n(self) -> int:
        return self.top.n

    @property
    def initial(self) -> frozenset[int]:
        return self.top.initial

    @property
    def crossing_count(self) -> int:
        return self.top.crossing_count + self.bottom.crossing_count

    def partners(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.top.partner(), self.bottom.partner()

    def apply(self, op: Op, reduce: bool = False) -> "MovePair":
        t, b = self.top.copy(), self.bottom.copy()
        try:
            if isinstance(op, BraidLetter):
                t._braid(op.index, op.sign)
                b._braid(op.index, op.sign)
            else:
                t._connect(op.index)
                b._connect(op.index)
        except DiagramError as exc:
            raise EngineError(exc.kind, f"{op}: {exc.kind}: {exc}") from exc
        if reduce:
            greedy_reduce(t)
            greedy_reduce(b)
        return MovePair(t, b)


Source = Union[LocalMove, MovePair]


def as_pair(source: Source) -> MovePair:
    return source if isinstance(source, MovePair) else MovePair.from_move(source)


def apply_braiding(pair: Source, letter: BraidLetter) -> MovePair:
    return as_pair(pair).apply(letter)


def apply_connecting(pair: Source, i: int) -> MovePair:
    return as_pair(pair).apply(Connect(i))


def apply_sequence(pair: Source, seq, reduce: bool = True) -> MovePair:
    """
    Apply every operation in order.  With `reduce`, kinks and bigons are removed
    after each step, which only changes the diagrams by Reidemeister moves.
    """
    cur = as_pair(pair)
    for op in seq:
        cur = cur.apply(op, reduce)
    return cur


def extract_trivial_pair(pair: Source, budget: int | None = None) -> LocalMove:
    """Simplify both diagrams and return the crossingless move they reduce to."""
    pair = as_pair(pair)
    out = []
    for side, d in (("top", pair.top), ("bottom", pair.bottom)):
        res = simplify(d, budget)
        if not res.trivial:
            note = " (budget exhausted)" if res.exhausted else ""
            raise EngineError("reduction",
                              f"{side} diagram kept {res.diagram.crossing_count} crossings{note}")
        out.append(res.diagram.to_matching())
    return LocalMove(out[0], out[1])


def pair_decomposition(pair: Source) -> ArcDecomposition:
    """
    Arc-decomposition read from boundary connectivity.  Braiding relabels top
    and bottom endpoints by the same transposition, so the union components are
    defined even while collar crossings survive simplification.
    """
    pair = as_pair(pair)
    return ArcDecomposition(tuple(tr.arcs for tr in
                                  trace_components(pair.top.partner(), pair.bottom.partner(), pair.initial)))


@dataclass(frozen=True)
class Verification:
    ok: bool
    diagnostic: str = ""
    result: LocalMove | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_sequence(source: Source, seq: OpSequence, target: LocalMove,
                    up_to_equivalence: bool = False, budget: int | None = None) -> Verification:
    """
    Apply `seq` to `source` in the diagram engine, simplify, extract and
    compare with `target`, exactly or by arc-decomposition.
    """
    try:
        pair = apply_sequence(source, seq)
    except EngineError as exc:
        return Verification(False, str(exc))
    try:
        got = extract_trivial_pair(pair, budget)
    except EngineError as exc:
        return Verification(False, str(exc))
    if up_to_equivalence:
        if got.n != target.n or arc_decomposition(got) != arc_decomposition(target):
            return Verification(False, f"result {arc_decomposition(got)} differs from "
                                       f"{arc_decomposition(target)}", got)
    elif got != target:
        return Verification(False, "result differs from the target move", got)
    return Verification(True, "", got)
