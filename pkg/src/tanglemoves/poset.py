"""
The order between move classes: one class lies below another when some
sequence of braiding and connecting operations carries the first into the
second.  Verdicts are three-valued because the order is only characterized
when one side has a single component.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .moves import ArcDecomposition, MoveError, st_partitions
from .ops import OpSequence

HASSE_GUARD = 8


@dataclass(frozen=True)
class OrderVerdict:
    value: str
    criterion: str | None = None
    witness: OpSequence | None = None
    obstruction: str | None = None

    def __str__(self) -> str:
        reason = self.criterion or self.obstruction
        return f"{self.value} ({reason})" if reason else self.value

    def to_dict(self) -> dict:
        out = {"value": self.value}
        if self.criterion:
            out["criterion"] = self.criterion
        if self.obstruction:
            out["obstruction"] = self.obstruction
        if self.witness is not None:
            out["witness"] = [str(op) for op in self.witness]
        return out


def sh_leq(m: int, n: int) -> bool:
    """H_m below H_n."""
    return n % 2 == m % 2 and n <= m


def leq_to_sh(lam: ArcDecomposition, n: int) -> bool:
    """lam below H_n: n has the parity of m - c + 1 and does not exceed it."""
    top = lam.n - lam.c + 1
    return n >= 2 and n % 2 == top % 2 and n <= top


def leq_from_sh(n: int, lam: ArcDecomposition) -> bool:
    """H_n below lam: m has the parity of n - c + 1 and m + c - 1 <= n."""
    m, c = lam.n, lam.c
    return m % 2 == (n - c + 1) % 2 and m + c - 1 <= n


def parity_obstruction(src: ArcDecomposition, dst: ArcDecomposition) -> bool:
    """True when arcs-minus-components parity differs or the target is larger."""
    return (src.n - src.c) % 2 != (dst.n - dst.c) % 2 or dst.n > src.n


def obstruction(src: ArcDecomposition, dst: ArcDecomposition) -> str | None:
    """
    A reason why src cannot lie below dst, or None.  Braiding keeps the class;
    each connection lowers n by one and changes the component count by one.
    """
    if dst.n > src.n:
        return "size"
    if (src.n - src.c) % 2 != (dst.n - dst.c) % 2:
        return "parity"
    if dst.n == src.n and dst != src:
        return "distinct classes of equal size"
    if abs(src.c - dst.c) > src.n - dst.n:
        return "component count"
    return None


def shnr_leq(n: int, r: int, s: int) -> bool:
    """H(n, r) below H(n, s): for even n also s = r mod 2; always s <= r."""
    if n % 2 == 0:
        return s % 2 == r % 2 and s <= r
    return s <= r


def shnr_bounds(a: int, b: int) -> tuple[int, int]:
    """SH indices bracketing H(a, b): H_{ab+b-1} <= H(a, b) <= H_{ab-b+1}."""
    if a < 2 or b < 1:
        raise ValueError("need a >= 2 and b >= 1")
    return a * b + b - 1, a * b - b + 1


def leq(src: ArcDecomposition, dst: ArcDecomposition, budget: int | None = None,
        witness: bool = True) -> OrderVerdict:
    """
    Decide src below dst where possible.

    `budget` caps the number of connect-sequence steps explored by the
    witness search (default: as many as the size difference allows).  With
    `witness` off, criterion-based answers skip building their sequences.
    """
    from . import realize

    for lam in (src, dst):
        if not lam.is_st_valid:
            raise MoveError("not-st", f"{lam} is not an ST class")
    if src == dst:
        return OrderVerdict("yes", "reflexivity", OpSequence() if witness else None)
    reason = obstruction(src, dst)
    if reason:
        return OrderVerdict("no", obstruction=reason)

    def build(fn, *args):
        if not witness or max(src.n, dst.n) > realize.SEARCH_GUARD:
            return None
        return fn(*args)

    if dst.c == 1 and leq_to_sh(src, dst.n):
        return OrderVerdict("yes", "sh-target criterion", build(realize.realize_to_sh, src, dst.n))
    if src.c == 1 and leq_from_sh(src.n, dst):
        return OrderVerdict("yes", "sh-source criterion", build(realize.realize_from_sh, src.n, dst))
    for k in range(dst.n + dst.c - 1, src.n - src.c + 2):
        if leq_to_sh(src, k) and leq_from_sh(k, dst):
            seq = None
            if witness and src.n <= realize.SEARCH_GUARD:
                seq = realize.realize_to_sh(src, k) + realize.realize_from_sh(k, dst)
                realize.verified(src, seq, dst)
            return OrderVerdict("yes", f"through <{k}>", seq)
    depth = src.n - dst.n if budget is None else min(budget, src.n - dst.n)
    if src.n <= realize.SEARCH_GUARD and depth == src.n - dst.n:
        seq = realize.find_path(src, dst)
        if seq is not None:
            realize.verified(src, seq, dst)
            return OrderVerdict("yes", "search witness", seq)
    return OrderVerdict("unknown")


@dataclass
class HasseDiagram:
    nodes: list[ArcDecomposition]
    edges: list[tuple[ArcDecomposition, ArcDecomposition]]
    unknown: list[tuple[ArcDecomposition, ArcDecomposition]] = field(default_factory=list)

    def to_dot(self) -> str:
        lines = ["digraph classes {", "  rankdir=BT;", "  node [shape=box];"]
        for lam in self.nodes:
            lines.append(f'  "{lam}" [label="{lam}\\nn={lam.n}"];')
        for a, b in self.edges:
            lines.append(f'  "{a}" -> "{b}";')
        for a, b in self.unknown:
            lines.append(f'  // unknown: "{a}" -> "{b}"')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"nodes": [str(x) for x in self.nodes],
                "edges": [[str(a), str(b)] for a, b in self.edges],
                "unknown": [[str(a), str(b)] for a, b in self.unknown]}


def hasse_export(n_max: int, budget: int | None = None) -> HasseDiagram:
    """
    Classes with 2..n_max arcs; edges are the covering relations among the
    yes-verdicts, pairs with an unknown verdict are listed separately.
    """
    import networkx as nx

    if n_max > HASSE_GUARD:
        raise MoveError("guard", f"n_max={n_max} exceeds the guard {HASSE_GUARD}")
    nodes = [lam for n in range(2, n_max + 1) for lam in st_partitions(n)]
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    unknown = []
    for a in nodes:
        for b in nodes:
            if a == b:
                continue
            v = leq(a, b, budget, witness=False)
            if v.value == "yes":
                g.add_edge(a, b)
            elif v.value == "unknown":
                unknown.append((a, b))
    red = nx.transitive_reduction(g)
    edges = sorted(red.edges(), key=lambda e: (nodes.index(e[0]), nodes.index(e[1])))
    return HasseDiagram(nodes, edges, unknown)
