"""
Index arithmetic for unknotting numbers by X-type moves.

For an X-type class with parts s_1..s_c put N = sum(s_i - 1).  The move then
has the same unknotting number as H_{N+1} on every oriented knot, so moves
compare by N alone.  Concrete knots never enter; where a knot's unknotting
number is needed it is supplied by the caller.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .moves import ArcDecomposition, MoveError, parity_type


class PreconditionWarning(UserWarning):
    pass


@dataclass(frozen=True, order=True)
class UIndex:
    value: int

    @property
    def n_sum(self) -> int:
        return self.value - 1


def _n_sum(lam: ArcDecomposition) -> int:
    if parity_type(lam) != "X":
        raise MoveError("o-type", f"{lam} is O-type; it changes the number of knot components")
    return sum(s - 1 for s in lam.parts)


def u_index(lam: ArcDecomposition) -> UIndex:
    """The k with u_T = u_{H_k}: one more than the sum of (part - 1)."""
    return UIndex(1 + _n_sum(lam))


def u_compare(lam: ArcDecomposition, other: ArcDecomposition) -> str:
    """'eq', 'leq' or 'geq' for u_lam(K) against u_other(K), valid for every knot K."""
    a, b = _n_sum(lam), _n_sum(other)
    if a == b:
        return "eq"
    return "leq" if a < b else "geq"


def single_move_partition(u0: int, other: ArcDecomposition) -> ArcDecomposition:
    """
    A two-part X-type class <1, p+1> with p = u0 * N(other).  If some knot K
    has u_other(K) = u0, a single move of the returned class unknots K.
    """
    if u0 < 1:
        raise ValueError("u0 must be positive")
    p = u0 * _n_sum(other)
    return ArcDecomposition((1, p + 1))


def shnr_partition(n: int, r: int) -> ArcDecomposition:
    """H(n, r): r components of n arcs each."""
    if n < 2 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    return ArcDecomposition((n,) * r)


def shnr_u_equal(a: int, b: int, c: int, d: int) -> bool:
    """
    Whether H(a, b) and H(c, d) share unknotting numbers, i.e. b(a-1) = d(c-1).
    Arguments with b or d below 2 still compute but raise a PreconditionWarning.
    """
    if b < 2 or d < 2:
        warnings.warn("the comparison is stated for b, d >= 2", PreconditionWarning, stacklevel=2)
    left = u_index(shnr_partition(a, b))
    right = u_index(shnr_partition(c, d))
    return left == right
