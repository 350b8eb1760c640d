"""
Built-in suite of the worked instances behind the library: small class
counts, the rotation word, the smoothing and crossing-change relations, the
order between SH-moves and the H(n, r) arithmetic.  Each check recomputes its
claim through the engine.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .engine import verify_sequence
from .moves import ArcDecomposition, arc_decomposition, class_count, enumerate_st_moves, equivalent, standard_move
from .ops import Connect, OpSequence, rotation_word
from .poset import leq, sh_leq, shnr_bounds, shnr_leq
from .realize import (CROSSING_CHANGE_TAIL, crossing_change_representative, realize_from_sh,
                      realize_to_sh, reduce_to_primitive, smoothing_representative, verify_crossing_change)
from .unknotting import shnr_partition, u_index

A = ArcDecomposition.of


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _counts() -> tuple[bool, str]:
    got = [len({arc_decomposition(m) for m in enumerate_st_moves(n)}) for n in range(2, 6)]
    return got == [1, 2, 4, 6] and class_count(3) == 2, f"classes for n=2..5: {got}"


def _two_st3_classes() -> tuple[bool, str]:
    ok = not equivalent(standard_move(A(3)), standard_move(A(1, 2)))
    return ok, "<3> and <1,2> are distinct"


def _rotation() -> tuple[bool, str]:
    word = rotation_word(3, 1)
    move = standard_move(A(3))
    res = verify_sequence(move, word, move.rotated(1))
    return res.ok and word.notation() == "s1 s2 s3 s4 s5", word.notation()


def _smoothing() -> tuple[bool, str]:
    t = smoothing_representative()
    res = verify_sequence(t, OpSequence([Connect(2)]), standard_move(A(2)), up_to_equivalence=True)
    return res.ok, "Con(2) carries a <1,2> move to the class of H_2"


def _crossing_change() -> tuple[bool, str]:
    t, _ = crossing_change_representative()
    res = verify_crossing_change(t, CROSSING_CHANGE_TAIL)
    return res.ok, f"tail {CROSSING_CHANGE_TAIL.notation()} on a <3> move"


def _example2() -> tuple[bool, str]:
    lower, upper = shnr_bounds(2, 2)
    a = realize_to_sh(A(2, 2), upper)
    b = realize_from_sh(lower, A(2, 2))
    return (lower, upper) == (5, 3) and a is not None and b is not None, "H_5 <= <2,2> <= H_3"


def _sh_chain() -> tuple[bool, str]:
    ok = sh_leq(5, 3) and not sh_leq(4, 3) and leq(A(5), A(3)).value == "yes"
    return ok, "H_5 <= H_3, H_4 not <= H_3"


def _primitive() -> tuple[bool, str]:
    targets = {str(lam): reduce_to_primitive(lam).target for lam in (A(3), A(2), A(1, 2), A(2, 2))}
    ok = targets == {"<3>": "X", "<2>": "SH(2)", "<1,2>": "SH(2)", "<2,2>": "X"}
    return ok, str(targets)


def _shnr() -> tuple[bool, str]:
    ok = (shnr_leq(3, 3, 2) and shnr_partition(4, 1) == A(4) and shnr_bounds(3, 2) == (7, 5)
          and u_index(shnr_partition(3, 2)).value == shnr_bounds(3, 2)[1])
    return ok, "H(n,r) predicates and bounds"


def _fiber() -> tuple[bool, str]:
    vals = [u_index(lam).value for lam in (A(3), A(2, 2), A(1, 3))]
    return vals == [3, 3, 3], f"u-indices {vals}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("class counts p(n)-1", _counts),
    ("two ST(3) classes", _two_st3_classes),
    ("rotation word", _rotation),
    ("smoothing from <1,2>", _smoothing),
    ("crossing change from <3>", _crossing_change),
    ("H(2,2) between H_5 and H_3", _example2),
    ("SH chain", _sh_chain),
    ("reduction to primitives", _primitive),
    ("H(n,r) arithmetic", _shnr),
    ("equal u-index fiber", _fiber),
]


def run_checks() -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is reported as a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail))
    return out
