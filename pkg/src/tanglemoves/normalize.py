"""
Reduction of any ST-move to its standard representative by braiding, with
the braid word kept as a witness.

The pipeline works on endpoint connectivity only (partner arrays), where a
braiding letter just transposes two labels.  The diagram engine then checks
that the recorded word really carries the input diagrams to the standard move.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import EngineError, MovePair, apply_sequence, as_pair, extract_trivial_pair
from .moves import (ArcDecomposition, LocalMove, MoveError, arc_decomposition,
                    standard_move, trace_components)
from .ops import BraidLetter, OpSequence


class ConsistencyError(RuntimeError):
    """The normalization witness failed its own check.  Should never happen."""


@dataclass(frozen=True)
class BraidedMove:
    """A crossingless move together with a braid word applied to it."""
    base: LocalMove
    word: OpSequence

    def pair(self) -> MovePair:
        return apply_sequence(self.base, self.word)


@dataclass(frozen=True)
class NormalForm:
    standard: LocalMove
    witness: OpSequence
    partition: ArcDecomposition


class _State:
    def __init__(self, move: LocalMove):
        self.top = list(move.top.partner())
        self.bottom = list(move.bottom.partner())
        self.initial = set(move.initial)
        self.size = 2 * move.n
        self.word: list[BraidLetter] = []

    def swap(self, i: int) -> None:
        j = i % self.size + 1
        for arr in (self.top, self.bottom):
            pi, pj = arr[i], arr[j]
            if pi == j:
                continue
            arr[pi], arr[pj] = j, i
            arr[i], arr[j] = pj, pi
        a, b = i in self.initial, j in self.initial
        if a != b:
            self.initial ^= {i, j}
        self.word.append(BraidLetter(i, 1))

    def move_down(self, src: int, dst: int) -> None:
        """Carry the e-point at `src` down to `dst`, shifting the ones between up."""
        for i in range(src - 1, dst - 1, -1):
            self.swap(i)

    def components(self):
        return trace_components(self.top, self.bottom, self.initial)

    def move(self) -> LocalMove:
        from .moves import validate_move
        n = self.size // 2
        pairs_t = [(j, self.top[j]) for j in range(1, self.size + 1) if j < self.top[j]]
        pairs_b = [(j, self.bottom[j]) for j in range(1, self.size + 1) if j < self.bottom[j]]
        return validate_move(pairs_t, pairs_b, self.initial, n)


def _guard(steps: int, size: int) -> None:
    if steps > 4 * size * size + 16:
        raise ConsistencyError("sorting pass does not terminate")


def _make_appropriate(st: _State) -> None:
    # gather every component onto consecutive labels
    steps = 0
    while True:
        for comp in st.components():
            if comp.l_set:
                l = min(comp.l_set)
                st.move_down(comp.b_seq[l - 1], comp.b_seq[l - 2] + 1)
                break
        else:
            return
        steps += 1
        _guard(steps, st.size)


def _order_blocks(st: _State) -> list[tuple[int, int]]:
    placed = 0
    blocks = []
    while placed < st.size:
        comps = [c for c in st.components() if c.b_seq[0] > placed]
        best = min(comps, key=lambda c: (len(c.b_seq), c.b_seq[0]))
        o, width = best.b_seq[0], len(best.b_seq)
        if o != placed + 1:
            for t in range(width):
                st.move_down(o + t, placed + 1 + t)
        blocks.append((placed + 1, width))
        placed += width
    return blocks


def _standardize_block(st: _State, o: int, width: int) -> None:
    shifts = 0
    while o not in st.initial:
        st.move_down(o + width - 1, o)
        shifts += 1
        if shifts > width:
            raise ConsistencyError("no initial e-point reachable in block")
    steps = 0
    while True:
        comp = next(c for c in st.components() if c.b_seq[0] == o)
        if not comp.s_set:
            return
        s = min(comp.s_set)
        src, dst = comp.a_seq[s - 1], comp.a_seq[s - 2] + 1
        if src < dst:
            raise ConsistencyError(f"sorting pass would move e-point {src} upward")
        st.move_down(src, dst)
        steps += 1
        _guard(steps, st.size)


def sorting_word(move: LocalMove) -> OpSequence:
    """The braid word carrying `move` to standard form, computed on connectivity."""
    if not move.is_st:
        raise MoveError("not-st", "only ST-moves have a standard form")
    st = _State(move)
    _make_appropriate(st)
    for o, width in _order_blocks(st):
        _standardize_block(st, o, width)
    target = standard_move(arc_decomposition(move))
    if st.move() != target:
        raise ConsistencyError("sorting did not reach the standard move")
    return OpSequence(st.word)


def _trivial_prefix(braided: BraidedMove) -> tuple[int, LocalMove]:
    """Longest prefix of the word after which greedy reduction leaves no crossings."""
    pair = as_pair(braided.base)
    best = (0, braided.base)
    for k, op in enumerate(braided.word, start=1):
        pair = pair.apply(op, reduce=True)
        if pair.crossing_count == 0:
            best = (k, LocalMove(pair.top.to_matching(), pair.bottom.to_matching()))
    return best


def normalize(source: LocalMove | MovePair | BraidedMove, budget: int | None = None,
              check: bool = True) -> NormalForm:
    """
    Standard form of an ST-move plus a braid word carrying the input to it.

    A braided input is first simplified back to a crossingless move.  When its
    diagrams do not simplify, a braided move that still knows its history is
    handled by undoing the tail of the word after the longest prefix that
    reduces to a crossingless move.
    """
    if isinstance(source, LocalMove):
        start, prefix = source, OpSequence()
    elif isinstance(source, BraidedMove):
        try:
            start = extract_trivial_pair(source.pair(), budget)
            prefix = OpSequence()
        except EngineError:
            k, start = _trivial_prefix(source)
            prefix = source.word[k:].inverse()
    else:
        start = extract_trivial_pair(source, budget)
        prefix = OpSequence()
    witness = prefix + sorting_word(start)
    lam = arc_decomposition(start)
    target = standard_move(lam)
    if check:
        from .engine import verify_sequence
        origin = source.pair() if isinstance(source, BraidedMove) else source
        res = verify_sequence(origin, witness, target, budget=budget)
        if not res:
            raise ConsistencyError(f"normalization witness failed: {res.diagnostic}")
    return NormalForm(target, witness, lam)
