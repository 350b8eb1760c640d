"""
Crossingless local moves and their classification.

A trivial n-tangle diagram is stored as an oriented non-crossing perfect
matching of the boundary e-points 1..2n: which e-points are joined by an arc,
and which end of every arc is the initial one.  A local move is an unordered
pair of such matchings with the same initial e-points.  Gluing the two
matchings along the boundary gives a union made of closed alternating walks;
the multiset of half-lengths of those walks (the arc-decomposition) is the
complete invariant of a move class under braiding.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .combinatorics import noncrossing_matchings, partition_count, partitions

ENUMERATION_GUARD = 6


class MoveError(ValueError):
    """A move or matching failed validation.  `kind` names the violated rule."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class OrientedMatching:
    size: int
    pairs: tuple[tuple[int, int], ...]
    initial: frozenset[int]

    @classmethod
    def build(cls, pairs: Iterable[Sequence[int]], initial: Iterable[int],
              size: int | None = None) -> "OrientedMatching":
        norm = []
        for p in pairs:
            if len(p) != 2:
                raise MoveError("malformed", f"pair {tuple(p)} does not have two labels")
            a, b = int(p[0]), int(p[1])
            norm.append((min(a, b), max(a, b)))
        norm.sort()
        if size is None:
            size = len(norm)
        initial = frozenset(int(j) for j in initial)
        m = cls(size, tuple(norm), initial)
        m.check()
        return m

    def check(self) -> None:
        n = self.size
        if n < 1:
            raise MoveError("malformed", "a matching needs at least one arc")
        seen = [a for p in self.pairs for a in p]
        if len(self.pairs) != n or sorted(seen) != list(range(1, 2 * n + 1)):
            raise MoveError("not-perfect", f"pairs do not form a perfect matching of 1..{2 * n}")
        for (a, b), (c, d) in itertools.combinations(self.pairs, 2):
            if a < c < b < d or c < a < d < b:
                raise MoveError("crossing", f"pairs {(a, b)} and {(c, d)} cross")
        if len(self.initial) != n or not self.initial <= set(range(1, 2 * n + 1)):
            raise MoveError("polarity", f"initial set must hold {n} labels from 1..{2 * n}")
        for a, b in self.pairs:
            if (a in self.initial) == (b in self.initial):
                raise MoveError("polarity", f"arc {(a, b)} needs exactly one initial e-point")

    def partner(self) -> tuple[int, ...]:
        """partner()[j] is the e-point joined to j; index 0 is unused."""
        out = [0] * (2 * self.size + 1)
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return tuple(out)


@dataclass(frozen=True)
class LocalMove:
    top: OrientedMatching
    bottom: OrientedMatching

    @property
    def n(self) -> int:
        return self.top.size

    @property
    def initial(self) -> frozenset[int]:
        return self.top.initial

    @property
    def is_st(self) -> bool:
        """The two trivial diagrams differ, so this is an ST-move."""
        return self.top.pairs != self.bottom.pairs

    def swapped(self) -> "LocalMove":
        return LocalMove(self.bottom, self.top)

    def relabeled(self, perm: Sequence[int]) -> "LocalMove":
        """Apply the label map j -> perm[j] (perm[0] unused) to both diagrams."""
        def move(m: OrientedMatching) -> OrientedMatching:
            return OrientedMatching.build(((perm[a], perm[b]) for a, b in m.pairs),
                                          (perm[j] for j in m.initial), m.size)
        return LocalMove(move(self.top), move(self.bottom))

    def rotated(self, m: int) -> "LocalMove":
        """Relabel every e-point j as j + m (mod 2n)."""
        size = 2 * self.n
        perm = [0] + [(j - 1 + m) % size + 1 for j in range(1, size + 1)]
        return self.relabeled(perm)


def validate_move(top: Iterable[Sequence[int]], bottom: Iterable[Sequence[int]],
                  initial: Iterable[int], n: int | None = None) -> LocalMove:
    """
    Build a LocalMove from raw pair lists, raising MoveError on a crossing
    pair, a polarity violation or mismatched boundary data.  A move with equal
    diagrams is still returned; check `is_st` to tell it apart.
    """
    initial = list(initial)
    t = OrientedMatching.build(top, initial, n)
    b = OrientedMatching.build(bottom, initial, n)
    if t.size != b.size:
        raise MoveError("size-mismatch", f"top has {t.size} arcs but bottom has {b.size}")
    if t.initial != b.initial:
        raise MoveError("initial-mismatch", "the diagrams have different initial e-points")
    return LocalMove(t, b)


@dataclass(frozen=True)
class ComponentTrace:
    labels: tuple[int, ...]
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]
    s_set: frozenset[int]
    l_set: frozenset[int]
    initial_first: bool

    @property
    def arcs(self) -> int:
        return len(self.labels) // 2


def _defects(seq: Sequence[int]) -> frozenset[int]:
    # 1-based positions i >= 2 where the sequence does not step by exactly one
    return frozenset(i + 1 for i in range(1, len(seq)) if seq[i] - seq[i - 1] != 1)


def trace_components(top: Sequence[int], bottom: Sequence[int],
                     initial: Iterable[int]) -> list[ComponentTrace]:
    """
    Walk the union of two perfect matchings given as partner arrays.

    The matchings need not be non-crossing, so this also serves the
    connectivity-level bookkeeping of braided moves.  Components come out
    ordered by their minimum label.
    """
    size = len(top) - 1
    initial = set(initial)
    seen = [False] * (size + 1)
    out = []
    for start in range(1, size + 1):
        if seen[start]:
            continue
        walk = [start]
        seen[start] = True
        cur, use_top = start, True
        while True:
            nxt = top[cur] if use_top else bottom[cur]
            use_top = not use_top
            if nxt == start:
                break
            walk.append(nxt)
            seen[nxt] = True
            cur = nxt
        b_seq = tuple(sorted(walk))
        out.append(ComponentTrace(
            labels=b_seq, a_seq=tuple(walk), b_seq=b_seq,
            s_set=_defects(walk), l_set=_defects(b_seq),
            initial_first=start in initial))
    return out


def union_components(move: LocalMove) -> list[ComponentTrace]:
    return trace_components(move.top.partner(), move.bottom.partner(), move.initial)


@dataclass(frozen=True, order=True)
class ArcDecomposition:
    parts: tuple[int, ...] = field()

    def __post_init__(self):
        parts = tuple(sorted(int(p) for p in self.parts))
        if not parts or parts[0] < 1:
            raise ValueError(f"an arc-decomposition needs positive parts, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "ArcDecomposition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "ArcDecomposition":
        """Accept '2,2', '<2,2>', '⟨2,2⟩' or '2 2'."""
        cleaned = text.strip().strip("<>⟨⟩[]()").replace(",", " ")
        try:
            return cls(tuple(int(tok) for tok in cleaned.split()))
        except ValueError as exc:
            raise ValueError(f"cannot read a partition from {text!r}") from exc

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def c(self) -> int:
        return len(self.parts)

    @property
    def is_st_valid(self) -> bool:
        return self.parts[-1] >= 2

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.parts)) + ">"


def arc_decomposition(move: LocalMove) -> ArcDecomposition:
    return ArcDecomposition(tuple(tr.arcs for tr in union_components(move)))


def _require_st(lam: ArcDecomposition) -> None:
    if not lam.is_st_valid:
        raise MoveError("not-st", f"{lam} has only single-arc parts, so both diagrams coincide")


def standard_move(lam: ArcDecomposition) -> LocalMove:
    """
    The standard representative: blocks in ascending size, each block on
    labels o..o+2k-1 with top arcs (o,o+1),(o+2,o+3),... and bottom arcs
    (o+1,o+2),...,(o+2k-1,o).  Odd labels are initial.
    """
    _require_st(lam)
    top, bottom = [], []
    o = 1
    for k in lam.parts:
        for i in range(k):
            top.append((o + 2 * i, o + 2 * i + 1))
        for i in range(k - 1):
            bottom.append((o + 2 * i + 1, o + 2 * i + 2))
        bottom.append((o, o + 2 * k - 1))
        o += 2 * k
    initial = range(1, 2 * lam.n + 1, 2)
    return validate_move(top, bottom, initial, lam.n)


def sh_move(n: int) -> LocalMove:
    """The single-cycle standard move on n arcs."""
    return standard_move(ArcDecomposition((n,)))


def equivalent(m1: LocalMove, m2: LocalMove) -> bool:
    for m in (m1, m2):
        if not m.is_st:
            raise MoveError("not-st", "equivalence is defined for ST-moves only")
    return arc_decomposition(m1) == arc_decomposition(m2)


def class_count(n: int) -> int:
    if n < 2:
        raise ValueError("class counts are defined for n >= 2")
    return partition_count(n) - 1


def parity_type(lam: ArcDecomposition) -> str:
    """'X' when arcs minus components is even, 'O' when odd."""
    _require_st(lam)
    return "X" if (lam.n - lam.c) % 2 == 0 else "O"


def st_partitions(n: int) -> list[ArcDecomposition]:
    """All ST-valid arc-decompositions of n, in a fixed order."""
    return [ArcDecomposition(p) for p in partitions(n) if max(p) >= 2]


def _polarity_choices(top: Sequence[int], bottom: Sequence[int]) -> list[frozenset[int]]:
    # along every union cycle the polarity alternates, so each cycle has two choices
    comps = trace_components(top, bottom, ())
    halves = [(frozenset(tr.a_seq[0::2]), frozenset(tr.a_seq[1::2])) for tr in comps]
    out = []
    for pick in itertools.product((0, 1), repeat=len(halves)):
        out.append(frozenset().union(*(h[i] for h, i in zip(halves, pick))))
    return sorted(out, key=sorted)


def enumerate_st_moves(n: int, guard: int = ENUMERATION_GUARD) -> list[LocalMove]:
    """
    Every ST(n)-move, counting a move and its swap once: unordered pairs of
    distinct non-crossing matchings together with every admissible initial set.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > guard:
        raise MoveError("guard", f"enumeration of n={n} exceeds the guard {guard}")
    matchings = list(noncrossing_matchings(tuple(range(1, 2 * n + 1))))
    out = []
    for i, j in itertools.combinations(range(len(matchings)), 2):
        top = OrientedMatching(n, matchings[i], frozenset()).partner()
        bottom = OrientedMatching(n, matchings[j], frozenset()).partner()
        for initial in _polarity_choices(top, bottom):
            out.append(LocalMove(OrientedMatching(n, matchings[i], initial),
                                 OrientedMatching(n, matchings[j], initial)))
    return out
