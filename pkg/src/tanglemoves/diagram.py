"""
Planar tangle diagrams with crossings, stored as a PD-style rotation system.

Endpoints are integers.  Boundary e-point j is the endpoint -j; port k of
crossing c is 4*c + k, ports numbered counter-clockwise so that ports k and
k+2 belong to the same strand.  `adj` pairs endpoints joined by an edge.
`over[c]` is 0 when ports 0 and 2 carry the over-strand and 1 when ports 1
and 3 do.  The boundary e-points sit counter-clockwise on the disk boundary.

Diagrams are mutated only inside this module; every public operation
returns a fresh object.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .moves import LocalMove, OrientedMatching


class DiagramError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _port(c: int, k: int) -> int:
    return 4 * c + (k & 3)


class TangleDiagram:
    __slots__ = ("n", "adj", "over", "initial", "next_id")

    def __init__(self, n: int, adj: dict[int, int], over: dict[int, int],
                 initial: Iterable[int], next_id: int | None = None):
        self.n = n
        self.adj = adj
        self.over = over
        self.initial = frozenset(initial)
        self.next_id = next_id if next_id is not None else max(over, default=-1) + 1

    @classmethod
    def from_matching(cls, m: OrientedMatching) -> "TangleDiagram":
        adj = {}
        for a, b in m.pairs:
            adj[-a] = -b
            adj[-b] = -a
        return cls(m.size, adj, {}, m.initial, 0)

    def copy(self) -> "TangleDiagram":
        return TangleDiagram(self.n, dict(self.adj), dict(self.over), self.initial, self.next_id)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TangleDiagram) and self.n == other.n
                and self.adj == other.adj and self.over == other.over
                and self.initial == other.initial)

    def __repr__(self) -> str:
        return f"TangleDiagram(n={self.n}, crossings={len(self.over)})"

    @property
    def crossing_count(self) -> int:
        return len(self.over)

    def is_over(self, port: int) -> bool:
        return (port & 1) == self.over[port >> 2]

    def strand_end(self, j: int) -> int:
        """Follow the strand starting at e-point j and return its other end."""
        cur = self.adj[-j]
        steps = 0
        while cur >= 0:
            cur = self.adj[cur ^ 2]
            steps += 1
            if steps > 2 * len(self.over) + 2:
                raise DiagramError("closed", "strand walk does not terminate")
        return -cur

    def strand_ports(self, j: int) -> list[int]:
        """Ports met along the strand from e-point j, each as its entry port."""
        out = []
        cur = self.adj[-j]
        while cur >= 0:
            out.append(cur)
            cur = self.adj[cur ^ 2]
        return out

    def partner(self) -> tuple[int, ...]:
        """Endpoint connectivity as a partner array (index 0 unused)."""
        out = [0] * (2 * self.n + 1)
        for j in range(1, 2 * self.n + 1):
            out[j] = self.strand_end(j)
        return tuple(out)

    def to_matching(self) -> OrientedMatching:
        if self.over:
            raise DiagramError("crossings", f"diagram still has {len(self.over)} crossings")
        p = self.partner()
        pairs = [(j, p[j]) for j in range(1, 2 * self.n + 1) if j < p[j]]
        return OrientedMatching.build(pairs, self.initial, self.n)

    # -- braiding and connecting -------------------------------------------

    def _braid(self, i: int, sign: int) -> None:
        size = 2 * self.n
        if not 1 <= i <= size:
            raise DiagramError("index", f"braid index {i} outside 1..{size}")
        j = i % size + 1
        c = self.next_id
        self.next_id += 1
        adj = self.adj
        ni, nj = adj.pop(-i), adj.pop(-j)
        p0, p1, p2, p3 = 4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3
        if ni == -j:
            adj[p0] = p3
            adj[p3] = p0
        else:
            adj[p0] = ni
            adj[ni] = p0
            adj[p3] = nj
            adj[nj] = p3
        adj[p1] = -i
        adj[-i] = p1
        adj[p2] = -j
        adj[-j] = p2
        self.over[c] = 0 if sign == 1 else 1
        ini = set(self.initial)
        a, b = i in ini, j in ini
        ini.discard(i)
        ini.discard(j)
        if a:
            ini.add(j)
        if b:
            ini.add(i)
        self.initial = frozenset(ini)

    def braid(self, i: int, sign: int = 1) -> "TangleDiagram":
        d = self.copy()
        d._braid(i, sign)
        return d

    def _connect(self, i: int) -> None:
        size = 2 * self.n
        if not 1 <= i <= size:
            raise DiagramError("index", f"connect index {i} outside 1..{size}")
        if self.n < 2:
            raise DiagramError("size", "cannot connect the last arc")
        j = i % size + 1
        if (i in self.initial) == (j in self.initial):
            raise DiagramError("polarity", f"e-points {i} and {j} have the same polarity")
        if self.strand_end(i) == j:
            raise DiagramError("closed loop", f"e-points {i} and {j} bound one strand")
        adj = self.adj
        ni, nj = adj.pop(-i), adj.pop(-j)
        adj[ni] = nj
        adj[nj] = ni
        if i < size:
            def relabel(x: int) -> int:
                return x - 2 if x >= i + 2 else x
        else:
            def relabel(x: int) -> int:
                return x - 1
        new_adj = {}
        for u, v in adj.items():
            new_adj[-relabel(-u) if u < 0 else u] = -relabel(-v) if v < 0 else v
        self.adj = new_adj
        self.initial = frozenset(relabel(x) for x in self.initial if x not in (i, j))
        self.n -= 1

    def connect(self, i: int) -> "TangleDiagram":
        d = self.copy()
        d._connect(i)
        return d

    # -- structure checks ----------------------------------------------------

    def _darts(self) -> list:
        darts = []
        for j in range(1, 2 * self.n + 1):
            darts += [("s", j), ("+", j), ("-", j)]
        for c in self.over:
            darts += [("p", 4 * c + k) for k in range(4)]
        return darts

    def _opposite(self, dart):
        kind, x = dart
        size = 2 * self.n
        if kind == "+":
            return ("-", x % size + 1)
        if kind == "-":
            return ("+", (x - 2) % size + 1)
        y = self.adj[-x if kind == "s" else x]
        return ("s", -y) if y < 0 else ("p", y)

    @staticmethod
    def _turn(dart):
        # clockwise neighbour at the same vertex; the boundary rotation is (+, s, -)
        kind, x = dart
        if kind == "p":
            return ("p", (x & ~3) | ((x - 1) & 3))
        return ({"+": "-", "s": "+", "-": "s"}[kind], x)

    def faces(self) -> list[list]:
        """Faces of the disk graph (boundary circle included) as dart cycles."""
        seen = set()
        out = []
        for d in self._darts():
            if d in seen:
                continue
            face = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = self._turn(self._opposite(cur))
            out.append(face)
        return out

    def validate(self) -> None:
        """Raise DiagramError unless the data describe a planar n-tangle diagram."""
        n, adj = self.n, self.adj
        expected = {-j for j in range(1, 2 * n + 1)}
        expected |= {4 * c + k for c in self.over for k in range(4)}
        if set(adj) != expected:
            raise DiagramError("structure", "endpoint set does not match crossings and boundary")
        for u, v in adj.items():
            if adj.get(v) != u or u == v:
                raise DiagramError("structure", f"edge {u}-{v} is not symmetric")
        if any(val not in (0, 1) for val in self.over.values()):
            raise DiagramError("structure", "over designation must be 0 or 1")
        visited = set()
        for j in range(1, 2 * n + 1):
            for p in self.strand_ports(j):
                visited.add(p)
                visited.add(p ^ 2)
        if len(visited) != 4 * len(self.over):
            raise DiagramError("closed", "diagram contains a closed component")
        if len(self.initial) != n:
            raise DiagramError("polarity", "initial set has the wrong size")
        for j in range(1, 2 * n + 1):
            if (j in self.initial) == (self.strand_end(j) in self.initial):
                raise DiagramError("polarity", f"strand at {j} does not have one initial end")
        verts = 2 * n + len(self.over)
        edges = len(adj) // 2 + 2 * n
        if verts - edges + len(self.faces()) != 2:
            raise DiagramError("planarity", "rotation system is not planar")

    def crossing_sign(self, c: int) -> int:
        """Writhe sign of crossing c for the orientation given by the initial set."""
        entry = {}
        for j in self.initial:
            for p in self.strand_ports(j):
                if p >> 2 == c:
                    entry[p & 1] = p & 3
        o = entry[self.over[c]]
        u = entry[1 - self.over[c]]
        return 1 if u == (o + 1) & 3 else -1


@dataclass
class SimplifyResult:
    diagram: TangleDiagram
    moves: int
    exhausted: bool

    @property
    def trivial(self) -> bool:
        return self.diagram.crossing_count == 0


def default_budget(crossings: int) -> int:
    return 10 * crossings + 100


# -- Reidemeister moves, in place ---------------------------------------------

def _splice_out(d: TangleDiagram, removed: set[int]) -> set[int]:
    """Delete the crossings in `removed`, joining the strands that ran through them."""
    adj = d.adj
    ports = {4 * c + k for c in removed for k in range(4)}
    links = []
    for p in ports:
        s = adj[p]
        if s in ports:
            continue
        cur = p
        while True:
            t = adj[cur ^ 2]
            if t in ports:
                cur = t
                continue
            break
        links.append((s, t))
    for p in ports:
        del adj[p]
    for c in removed:
        del d.over[c]
    touched = set()
    for s, t in links:
        adj[s] = t
        adj[t] = s
        if s >= 0:
            touched.add(s >> 2)
    return touched


def _r1_at(d: TangleDiagram, c: int):
    adj = d.adj
    for k in range(4):
        if adj[4 * c + k] == _port(c, k + 1):
            return _splice_out(d, {c})
    return None


def _r2_at(d: TangleDiagram, a_c: int):
    adj = d.adj
    for a in range(4):
        t = adj[4 * a_c + a]
        if t < 0 or t >> 2 == a_c:
            continue
        b_c, b = t >> 2, t & 3
        if adj[_port(a_c, a + 1)] == _port(b_c, b - 1) and d.is_over(4 * a_c + a) == d.is_over(t):
            return _splice_out(d, {a_c, b_c})
    return None


def greedy_reduce(d: TangleDiagram, limit: int | None = None) -> int:
    """Remove kinks and bigons until none remain.  Returns the number of moves."""
    work = set(d.over)
    moves = 0
    while work:
        if limit is not None and moves >= limit:
            break
        c = work.pop()
        if c not in d.over:
            continue
        touched = _r1_at(d, c)
        if touched is None:
            touched = _r2_at(d, c)
        if touched is None:
            continue
        moves += 1
        work |= {x for x in touched if x in d.over}
    return moves


@dataclass(frozen=True)
class Triangle:
    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]


def triangles(d: TangleDiagram) -> list[Triangle]:
    """Triangular faces on which a third-type move is allowed."""
    adj = d.adj
    out = []
    seen = set()
    for A in sorted(d.over):
        for a in range(4):
            t = adj[4 * A + a]
            if t < 0:
                continue
            B, b = t >> 2, t & 3
            u = adj[_port(B, b - 1)]
            if u < 0:
                continue
            C, c = u >> 2, u & 3
            if len({A, B, C}) < 3 or adj[_port(C, c - 1)] != _port(A, a + 1):
                continue
            key = frozenset((A, B, C))
            if key in seen:
                continue
            x = d.is_over(4 * A + a) == d.is_over(t)
            y = d.is_over(_port(B, b - 1)) == d.is_over(u)
            z = d.is_over(_port(C, c - 1)) == d.is_over(_port(A, a + 1))
            if not (x or y or z):
                continue
            seen.add(key)
            out.append(Triangle((A, a), (B, b), (C, c)))
    return out


def _r3(d: TangleDiagram, tri: Triangle) -> None:
    (A, a), (B, b), (C, c) = tri.a, tri.b, tri.c
    P = _port
    a1, a2, b1, b2, cy, cz = a, a + 1, b, b - 1, c, c - 1
    ext = {
        P(A, a1 + 2): P(B, b1), P(A, a2 + 2): P(C, cz),
        P(B, b1 + 2): P(A, a1), P(B, b2 + 2): P(C, cy),
        P(C, cy + 2): P(B, b2), P(C, cz + 2): P(A, a2),
    }
    adj = d.adj
    old = {p: adj[p] for p in ext}
    for k in range(4):
        for x in (A, B, C):
            adj.pop(4 * x + k, None)
    for p, s in old.items():
        q = ext[p]
        t = ext.get(s, s)
        adj[q] = t
        adj[t] = q
    for p, q in ((P(A, a1 + 2), P(B, b1 + 2)), (P(A, a2 + 2), P(C, cz + 2)),
                 (P(B, b2 + 2), P(C, cy + 2))):
        adj[p] = q
        adj[q] = p


def reidemeister3(d: TangleDiagram, tri: Triangle) -> TangleDiagram:
    out = d.copy()
    _r3(out, tri)
    return out


# -- strand rerouting -----------------------------------------------------------

def _reroute(d: TangleDiagram, j: int):
    """
    If the strand from e-point j passes entirely over (or under) everything
    and never meets itself, redraw it along a shortest path in the dual graph.
    Returns the new diagram, or None when not applicable.
    """
    ports = d.strand_ports(j)
    if not ports:
        return None
    cs = [p >> 2 for p in ports]
    if len(set(cs)) != len(cs):
        return None
    status = {d.is_over(p) for p in ports}
    if len(status) != 1:
        return None
    over_val = 1 if status.pop() else 0
    k = d.strand_end(j)
    work = d.copy()
    _splice_out(work, set(cs))
    u, v = j, k
    nu, nv = work.adj.pop(-u), work.adj.pop(-v)
    if nu != -v:
        work.adj[nu] = nv
        work.adj[nv] = nu
    # temporarily the boundary points u, v are free; find a dual path between them
    path = _dual_path(work, u, v)
    if path is None:
        return None
    prev = -u
    for x, y in path:
        c = work.next_id
        work.next_id += 1
        P = 4 * c
        del work.adj[x]
        del work.adj[y]
        # the new strand crosses the edge x-y, entering on its left side
        work.adj[P] = y
        work.adj[y] = P
        work.adj[P + 2] = x
        work.adj[x] = P + 2
        work.adj[P + 1] = prev
        work.adj[prev] = P + 1
        prev = P + 3
        # the new strand runs through ports 1 and 3
        work.over[c] = over_val
    work.adj[prev] = -v
    work.adj[-v] = prev
    return work


def _dual_path(d: TangleDiagram, u: int, v: int):
    """
    Shortest sequence of strand edges to cross when drawing a new arc from
    boundary point u to v.  Each step is an edge (x, y) oriented so that the
    arc crosses it from the face on its right to the face on its left.
    """
    size = 2 * d.n
    missing = {u, v}

    def opposite(dart):
        kind, x = dart
        if kind == "+":
            return ("-", x % size + 1)
        if kind == "-":
            return ("+", (x - 2) % size + 1)
        y = d.adj[-x if kind == "s" else x]
        return ("s", -y) if y < 0 else ("p", y)

    def turn(dart):
        kind, x = dart
        if kind == "p":
            return ("p", (x & ~3) | ((x - 1) & 3))
        if x in missing:
            return ({"+": "-", "-": "+"}[kind], x)
        return ({"+": "-", "s": "+", "-": "s"}[kind], x)

    face_of = {}
    faces = []
    darts = []
    for jj in range(1, size + 1):
        darts += [("+", jj), ("-", jj)]
        if jj not in missing:
            darts.append(("s", jj))
    for c in d.over:
        darts += [("p", 4 * c + k) for k in range(4)]
    for dt in darts:
        if dt in face_of:
            continue
        idx = len(faces)
        face = []
        cur = dt
        while cur not in face_of:
            face_of[cur] = idx
            face.append(cur)
            cur = turn(opposite(cur))
        faces.append(face)
    start = face_of[("+", u)]
    goal = face_of[("+", v)]
    prev = {start: None}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        if f == goal:
            break
        for dt in faces[f]:
            if dt[0] == "+" or dt[0] == "-":
                continue
            back = opposite(dt)
            g = face_of[back]
            if g not in prev:
                prev[g] = (f, dt)
                queue.append(g)
    if goal not in prev:
        return None
    steps = []
    f = goal
    while prev[f] is not None:
        pf, dt = prev[f]
        steps.append(dt)
        f = pf
    steps.reverse()
    out = []
    for kind, x in steps:
        a = -x if kind == "s" else x
        b = d.adj[a]
        out.append((a, b))
    return out


def _try_reroute(d: TangleDiagram):
    best = None
    for j in range(1, 2 * d.n + 1):
        if j not in d.initial:
            continue
        cand = _reroute(d, j)
        if cand is not None:
            greedy_reduce(cand)
            if best is None or cand.crossing_count < best.crossing_count:
                best = cand
    if best is not None and best.crossing_count < d.crossing_count:
        return best
    return None


def simplify(d: TangleDiagram, budget: int | None = None) -> SimplifyResult:
    """
    Bounded Reidemeister simplification fixing the boundary.

    Kinks and bigons are removed greedily.  When that stalls, third-type moves
    on triangles are tried one and two deep, and all-over or all-under strands
    are redrawn, as long as the budget of exploratory moves lasts.  The
    crossing count of the returned diagram never exceeds that of the input.
    """
    if budget is None:
        budget = default_budget(d.crossing_count)
    cur = d.copy()
    moves = greedy_reduce(cur)
    spent = 0
    while cur.over:
        nxt, used, performed = _lookahead(cur, budget - spent)
        spent += used
        if nxt is None and spent < budget:
            nxt = _try_reroute(cur)
            spent += 1
            performed = 1
        if nxt is None:
            return SimplifyResult(cur, moves, spent >= budget)
        moves += performed
        cur = nxt
    return SimplifyResult(cur, moves, False)


def _lookahead(d: TangleDiagram, allowance: int):
    """
    Look for at most two third-type moves after which greedy reduction lowers
    the crossing count.  Returns (diagram or None, moves tried, moves made).
    """
    target = d.crossing_count
    used = 0
    frontier = [(d, 0)]
    for depth in (1, 2):
        nxt = []
        for base, _ in frontier:
            for tri in triangles(base):
                if used >= allowance:
                    return None, used, 0
                used += 1
                trial = reidemeister3(base, tri)
                m = greedy_reduce(trial)
                if trial.crossing_count < target:
                    return trial, used, depth + m
                nxt.append((trial, m))
        frontier = nxt
    return None, used, 0
