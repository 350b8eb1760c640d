"""
Explicit operation sequences between move classes.

Every step starts from a standard move, applies one connect sequence (mirror
letters followed by a connection), and renormalizes.  Chaining such steps
gives witnesses for relations between classes; the diagram engine checks
each witness before it is returned.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .diagram import simplify
from .engine import EngineError, MovePair, Verification, apply_sequence, extract_trivial_pair, verify_sequence
from .moves import ArcDecomposition, LocalMove, MoveError, arc_decomposition, enumerate_st_moves, parity_type, standard_move
from .normalize import ConsistencyError, normalize
from .poset import leq_from_sh, leq_to_sh
from .ops import BraidLetter, Connect, OpSequence, connect_sequence

SEARCH_GUARD = 8


class RealizationError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    source: ArcDecomposition
    target: ArcDecomposition
    sequence: OpSequence


def _sh(n: int) -> ArcDecomposition:
    return ArcDecomposition((n,))


@lru_cache(maxsize=None)
def successors(lam: ArcDecomposition) -> tuple[Step, ...]:
    """
    Classes reachable from standard(lam) by one connect sequence whose result
    is again a crossingless ST-move, each with a witness ending in standard form.
    One witness (the shortest found) is kept per target class.
    """
    if lam.n > SEARCH_GUARD:
        raise MoveError("guard", f"successor search beyond n={SEARCH_GUARD}")
    n = lam.n
    start = standard_move(lam)
    pair = MovePair.from_move(start)
    best: dict[ArcDecomposition, OpSequence] = {}
    for k1 in range(1, 2 * n + 1):
        for length in range(2 * n - 1):
            kr = (k1 - 1 + length) % (2 * n) + 1
            seq = connect_sequence(n, k1, kr)
            try:
                moved = extract_trivial_pair(apply_sequence(pair, seq))
            except EngineError:
                continue
            if not moved.is_st:
                continue
            full = seq + normalize(moved, check=False).witness
            mu = arc_decomposition(moved)
            if mu not in best or len(full) < len(best[mu]):
                best[mu] = full
    return tuple(Step(lam, mu, best[mu]) for mu in sorted(best))


def find_path(src: ArcDecomposition, dst: ArcDecomposition) -> OpSequence | None:
    """Breadth-first search through successor steps; None when no path exists."""
    if src == dst:
        return OpSequence()
    prev: dict[ArcDecomposition, tuple[ArcDecomposition, OpSequence] | None] = {src: None}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur.n <= dst.n:
            continue
        for step in successors(cur):
            if step.target in prev:
                continue
            prev[step.target] = (cur, step.sequence)
            if step.target == dst:
                parts = []
                node = dst
                while prev[node] is not None:
                    node, seq = prev[node]
                    parts.append(seq)
                out = OpSequence()
                for seq in reversed(parts):
                    out = out + seq
                return out
            queue.append(step.target)
    return None


def _junction_merge(lam: ArcDecomposition) -> OpSequence:
    # join the last e-point of each block to the first of the next, left to right
    ops = []
    total = 0
    for i, k in enumerate(lam.parts[:-1]):
        total += k
        ops.append(Connect(2 * total - 2 * i))
    return OpSequence(ops)


def _merge_to_sh(lam: ArcDecomposition) -> OpSequence:
    seq = _junction_merge(lam)
    if not seq:
        return seq
    merged = extract_trivial_pair(apply_sequence(standard_move(lam), seq))
    return seq + normalize(merged, check=False).witness


@lru_cache(maxsize=None)
def _descent_step(k: int) -> OpSequence:
    """H_{k+2} to H_k: a splitting connect sequence, then a junction merge."""
    for step in successors(_sh(k + 2)):
        if step.target.c == 2:
            return step.sequence + _merge_to_sh(step.target)
    raise RealizationError(f"no splitting step found from <{k + 2}>")


def descend_sh(m: int, n: int) -> OpSequence:
    """Witness for H_m below H_n, for n <= m of the same parity."""
    if n > m or (m - n) % 2:
        raise RealizationError(f"<{m}> does not descend to <{n}>")
    out = OpSequence()
    for k in range(m - 2, n - 1, -2):
        out = out + _descent_step(k)
    return out


def verified(src: ArcDecomposition, seq: OpSequence, dst: ArcDecomposition) -> OpSequence:
    """Return `seq` after checking it carries standard(src) into the class of dst."""
    res = verify_sequence(standard_move(src), seq, standard_move(dst), up_to_equivalence=True)
    if not res:
        raise ConsistencyError(f"witness from {src} to {dst} failed: {res.diagnostic}")
    return seq


def realize_to_sh(lam: ArcDecomposition, n: int) -> OpSequence:
    """Verified sequence from standard(lam) into the class of H_n."""
    if not lam.is_st_valid or not leq_to_sh(lam, n):
        raise RealizationError(f"{lam} is not below <{n}>")
    seq = _merge_to_sh(lam) + descend_sh(lam.n - lam.c + 1, n)
    return verified(lam, seq, _sh(n))


def realize_from_sh(n: int, lam: ArcDecomposition) -> OpSequence:
    """Verified sequence from H_n into the class of standard(lam)."""
    if not lam.is_st_valid or not leq_from_sh(n, lam):
        raise RealizationError(f"<{n}> is not below {lam}")
    top = lam.n + lam.c - 1
    tail = find_path(_sh(top), lam)
    if tail is None:
        raise RealizationError(f"no splitting path from <{top}> to {lam}")
    seq = descend_sh(n, top) + tail
    return verified(_sh(n), seq, lam)


# -- crossing change ------------------------------------------------------------

CROSSING_CHANGE_TAIL = OpSequence([BraidLetter(2, -1), BraidLetter(3, -1), Connect(4)])


def crossing_change_check(pair: MovePair) -> bool:
    """Both diagrams have one crossing, wired alike, with opposite over-strands."""
    t, b = pair.top, pair.bottom
    if t.n != 2 or t.crossing_count != 1 or b.crossing_count != 1 or t.initial != b.initial:
        return False
    (ct,), (cb,) = t.over, b.over
    ends_t = [t.adj[4 * ct + k] for k in range(4)]
    ends_b = [b.adj[4 * cb + k] for k in range(4)]
    if any(x >= 0 for x in ends_t + ends_b):
        return False
    for r in range(4):
        if all(ends_t[k] == ends_b[(k + r) & 3] for k in range(4)):
            return t.is_over(4 * ct) != b.is_over(4 * cb + r)
    return False


def verify_crossing_change(source, seq: OpSequence, budget: int | None = None) -> Verification:
    try:
        pair = apply_sequence(source, seq)
    except EngineError as exc:
        return Verification(False, str(exc))
    top = simplify(pair.top, budget).diagram
    bottom = simplify(pair.bottom, budget).diagram
    if crossing_change_check(MovePair(top, bottom)):
        return Verification(True)
    return Verification(False, "result is not a crossing change")


@lru_cache(maxsize=None)
def crossing_change_representative() -> tuple[LocalMove, OpSequence]:
    """
    A move T in the class of H_3 on which the tail (mirror 2, mirror 3, Con(4))
    produces the crossing change, with a braid word carrying standard H_3 to T.
    """
    for move in enumerate_st_moves(3):
        for cand in (move, move.swapped()):
            if arc_decomposition(cand) != _sh(3):
                continue
            if not verify_crossing_change(cand, CROSSING_CHANGE_TAIL):
                continue
            word = normalize(cand, check=False).witness
            return cand, word.inverse()
    raise RealizationError("no representative of <3> yields the crossing change")


@lru_cache(maxsize=None)
def smoothing_representative() -> LocalMove:
    """A move in the class of <1,2> whose Con(2) result lies in the class of H_2."""
    for move in enumerate_st_moves(3):
        if arc_decomposition(move) != ArcDecomposition((1, 2)):
            continue
        try:
            got = extract_trivial_pair(apply_sequence(move, [Connect(2)]))
        except EngineError:
            continue
        if got.is_st and arc_decomposition(got) == _sh(2):
            return move
    raise RealizationError("no representative of <1,2> connects to H_2")


@dataclass(frozen=True)
class Reduction:
    target: str
    sequence: OpSequence
    verified: bool


def reduce_to_primitive(lam: ArcDecomposition) -> Reduction:
    """
    X-type classes go to the crossing change through H_3, O-type classes go
    to the band-smoothing move H_2.
    """
    if parity_type(lam) == "O":
        seq = realize_to_sh(lam, 2)
        return Reduction("SH(2)", seq, True)
    _, prefix = crossing_change_representative()
    seq = realize_to_sh(lam, 3) + prefix + CROSSING_CHANGE_TAIL
    res = verify_crossing_change(standard_move(lam), seq)
    if not res:
        raise ConsistencyError(f"crossing change witness for {lam} failed: {res.diagnostic}")
    return Reduction("X", seq, True)
