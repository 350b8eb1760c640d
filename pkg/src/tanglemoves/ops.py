"""
Braiding letters, connecting operations and operation sequences.

Sequences are stored in application order: the first item acts first.  The
conventional operator notation writes the same sequence right to left, which
is what `OpSequence.notation` produces.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


@dataclass(frozen=True)
class BraidLetter:
    """sigma_i for sign +1, its mirror for sign -1.  Index 2n wraps 2n and 1."""
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise ValueError(f"braid index must be positive, got {self.index}")

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"s{self.index}" if self.sign == 1 else f"S{self.index}"


@dataclass(frozen=True)
class Connect:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"connect index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"Con({self.index})"


Op = Union[BraidLetter, Connect]


@dataclass(frozen=True)
class OpSequence:
    items: tuple[Op, ...] = ()

    def __init__(self, items: Iterable[Op] = ()):
        object.__setattr__(self, "items", tuple(items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return OpSequence(self.items[k])
        return self.items[k]

    def __add__(self, other: "OpSequence | Iterable[Op]") -> "OpSequence":
        return OpSequence(self.items + tuple(other))

    @property
    def is_braid_word(self) -> bool:
        return all(isinstance(op, BraidLetter) for op in self.items)

    @property
    def connects(self) -> int:
        return sum(isinstance(op, Connect) for op in self.items)

    def inverse(self) -> "OpSequence":
        if not self.is_braid_word:
            raise ValueError("only braid words can be inverted")
        return OpSequence(op.inverse() for op in reversed(self.items))

    def check_indices(self, n: int) -> None:
        """Raise ValueError when some index is out of range for the evolving size."""
        for pos, op in enumerate(self.items):
            if op.index > 2 * n:
                raise ValueError(f"item {pos} ({op}) exceeds 2n = {2 * n}")
            if isinstance(op, Connect):
                n -= 1
                if n < 1:
                    raise ValueError(f"item {pos} ({op}) would leave no arcs")

    def notation(self) -> str:
        """Operator notation, last operation leftmost; s = sigma, S = its mirror."""
        return " ".join(str(op) for op in reversed(self.items)) or "1"

    def __str__(self) -> str:
        return ", ".join(str(op) for op in self.items) or "(empty)"


def rotation_word(n: int, m: int) -> OpSequence:
    """
    Braid word rotating the boundary labels by m steps (j -> j+m mod 2n).
    For m = 1 this is sigma_1 sigma_2 ... sigma_{2n-1} in operator notation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m > 0:
        block = [BraidLetter(i, 1) for i in range(2 * n - 1, 0, -1)]
    else:
        block = [BraidLetter(i, -1) for i in range(1, 2 * n)]
    return OpSequence(block * abs(m))


def connect_sequence(n: int, k1: int, kr: int) -> OpSequence:
    """
    Mirror letters along the cyclic run k1, k1+1, ..., kr (mod 2n) followed by
    Con(kr).  The net effect joins the e-points originally labelled k1 and kr+1.
    """
    size = 2 * n
    if not (1 <= k1 <= size and 1 <= kr <= size):
        raise ValueError(f"run endpoints must lie in 1..{size}")
    length = (kr - k1) % size
    if length == size - 1:
        raise ValueError("a run covering every index would join a point to itself")
    ops: list[Op] = [BraidLetter((k1 - 1 + t) % size + 1, -1) for t in range(length)]
    ops.append(Connect(kr))
    return OpSequence(ops)


def parse_word(text: str) -> OpSequence:
    """
    Read a whitespace or comma separated sequence in application order.
    Tokens: s3 or +3 (sigma_3), S3 or -3 (mirror), C3 or Con(3).
    """
    ops: list[Op] = []
    for tok in text.replace(",", " ").split():
        t = tok.strip()
        low = t.lower()
        if low.startswith("con(") and t.endswith(")"):
            ops.append(Connect(int(t[4:-1])))
        elif t[0] in "cC":
            ops.append(Connect(int(t[1:])))
        elif t[0] == "s":
            ops.append(BraidLetter(int(t[1:]), 1))
        elif t[0] == "S":
            ops.append(BraidLetter(int(t[1:]), -1))
        elif t[0] in "+-":
            ops.append(BraidLetter(int(t[1:]), 1 if t[0] == "+" else -1))
        else:
            raise ValueError(f"cannot read operation {tok!r}")
    return OpSequence(ops)
