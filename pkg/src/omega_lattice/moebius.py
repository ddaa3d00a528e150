"""Möbius function of the poset of orders.

``mobius_closed`` is the closed form through the Frattini subrelation;
``mobius_recursive`` runs the defining recursion over the interval, and
``reduced_euler_characteristic`` counts chains of the open interval. The
three are independent routes to the same integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from ._poset import strict_up_sets
from .omega import Interval, IntervalError, frattini, interval_orders
from .relation import OrderRelation, is_subrelation

T = TypeVar("T")


@dataclass(frozen=True)
class MobiusResult:
    lower: OrderRelation
    upper: OrderRelation
    value: int


def _require_comparable(r: OrderRelation, s: OrderRelation) -> Interval:
    if r.n != s.n or not is_subrelation(r, s):
        raise IntervalError("Möbius function needs lower contained in upper")
    return Interval(r, s)


def mobius_closed(r: OrderRelation, s: OrderRelation) -> int:
    _require_comparable(r, s)
    if not is_subrelation(frattini(s), r):
        return 0
    return -1 if (len(s) - len(r)) % 2 else 1


def mobius_recursive(r: OrderRelation, s: OrderRelation) -> int:
    """mu(r, r) = 1 and sum over [r, t] of mu(r, .) = 0 for r < t."""
    iv = _require_comparable(r, s)
    # interval_orders sorts by pair count, so every subrelation comes first
    elems = interval_orders(iv, "closed")
    memo: dict[OrderRelation, int] = {}
    for t in elems:
        if t == iv.lower:
            memo[t] = 1
            continue
        memo[t] = -sum(v for u, v in memo.items() if is_subrelation(u, t))
    return memo[iv.upper]


def mobius(r: OrderRelation, s: OrderRelation) -> MobiusResult:
    closed = mobius_closed(r, s)
    recursive = mobius_recursive(r, s)
    if closed != recursive:
        raise AssertionError(f"Möbius routes disagree: {closed} vs {recursive}")
    return MobiusResult(r, s, closed)


def chain_counts(elements: Sequence[T], leq: Callable[[T, T], bool]) -> list[int]:
    """``counts[k]`` is the number of chains with k elements (``counts[0] == 1``)."""
    up = strict_up_sets(elements, leq)
    k = len(elements)
    # linear extension: elements with more strict successors come first
    order = sorted(range(k), key=lambda i: -up[i].bit_count())
    ending: dict[int, list[int]] = {}
    totals = [1]
    for i in order:
        vec = [0, 1]
        for j in order:
            if j in ending and (up[j] >> i) & 1:
                for length, c in enumerate(ending[j]):
                    if length + 1 >= len(vec):
                        vec.extend([0] * (length + 2 - len(vec)))
                    vec[length + 1] += c
        ending[i] = vec
        if len(vec) > len(totals):
            totals.extend([0] * (len(vec) - len(totals)))
        for length in range(1, len(vec)):
            totals[length] += vec[length]
    return totals


def reduced_euler_characteristic(
    elements: Sequence[T], leq: Callable[[T, T], bool]
) -> int:
    """Sum over k of (-1)^(k-1) times the number of k-element chains.

    The empty chain contributes -1, so the empty poset gives -1.
    """
    return sum(c if k % 2 else -c for k, c in enumerate(chain_counts(elements, leq)))
