"""
ASCII pictures of crossingless moves: the top matching is drawn above the
row of e-points, the bottom matching below it, each arc as a bracket whose
height is its nesting depth.
"""
from __future__ import annotations

from .moves import LocalMove

WIDTH = 4


def _depths(pairs) -> dict[tuple[int, int], int]:
    depth = {}
    for a, b in sorted(pairs, key=lambda p: p[1] - p[0]):
        inner = [depth[q] for q in depth if a < q[0] and q[1] < b]
        depth[(a, b)] = 1 + max(inner, default=0)
    return depth


def _rows(pairs, size: int) -> list[str]:
    depth = _depths(pairs)
    width = WIDTH * size
    rows = []
    for level in range(1, max(depth.values(), default=0) + 1):
        row = [" "] * width
        for (a, b), d in depth.items():
            ca, cb = WIDTH * (a - 1) + 1, WIDTH * (b - 1) + 1
            if d == level:
                for x in range(ca, cb + 1):
                    row[x] = "-"
                row[ca] = row[cb] = "+"
            elif d > level:
                row[ca] = row[cb] = "|"
        rows.append("".join(row).rstrip())
    return rows


def render_move(move: LocalMove) -> str:
    """Top arcs above, bottom arcs below; 'i' marks initial e-points, 't' terminal."""
    size = 2 * move.n
    labels = "".join(f"{j:<{WIDTH}}" for j in range(1, size + 1))
    labels = " " + labels.rstrip()
    marks = " " + "".join(f"{'i' if j in move.initial else 't':<{WIDTH}}"
                          for j in range(1, size + 1)).rstrip()
    above = list(reversed(_rows(move.top.pairs, size)))
    below = _rows(move.bottom.pairs, size)
    return "\n".join(above + [marks, labels] + below) + "\n"
