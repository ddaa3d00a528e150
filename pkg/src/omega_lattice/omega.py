"""The poset of all order relations on a finite set, ordered by inclusion."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Literal

from .relation import (
    OmegaError,
    OrderRelation,
    Relation,
    as_order,
    compose,
    difference,
    intersection,
    is_order,
    opposite,
    transitive_closure,
    union,
)

Pair = tuple[int, int]

ENUMERATION_CAP = 5
OVERRIDE_CAP = 6


class CapExceeded(OmegaError):
    pass


class IntervalError(OmegaError):
    pass


def enumeration_cap() -> int:
    """Largest n enumerated without an explicit override (env ``OMEGA_MAX_N``)."""
    raw = os.environ.get("OMEGA_MAX_N")
    if raw is None:
        return ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise OmegaError(f"OMEGA_MAX_N must be an integer, got {raw!r}") from exc


def check_cap(n: int, allow_large: bool = False) -> None:
    limit = max(enumeration_cap(), OVERRIDE_CAP if allow_large else 0)
    if n > limit:
        hint = "" if allow_large or n > OVERRIDE_CAP else " (n=6 needs the override flag)"
        raise CapExceeded(f"n={n} exceeds the enumeration cap {limit}{hint}")


def _bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_element(r: Relation, *xs: int) -> None:
    for x in xs:
        if not (isinstance(x, int) and 0 <= x < r.n):
            raise OmegaError(f"element {x!r} is outside a ground set of size {r.n}")


# element intervals inside one order

def closed_below(r: OrderRelation, x: int) -> frozenset[int]:
    _check_element(r, x)
    return frozenset(_bits_of(r.column(x)))


def strict_below(r: OrderRelation, x: int) -> frozenset[int]:
    return closed_below(r, x) - {x}


def closed_above(r: OrderRelation, x: int) -> frozenset[int]:
    _check_element(r, x)
    return frozenset(_bits_of(r.rows[x]))


def strict_above(r: OrderRelation, x: int) -> frozenset[int]:
    return closed_above(r, x) - {x}


def closed_interval(r: OrderRelation, x: int, y: int) -> frozenset[int]:
    return closed_above(r, x) & closed_below(r, y)


def open_interval(r: OrderRelation, x: int, y: int) -> frozenset[int]:
    return strict_above(r, x) & strict_below(r, y)


def adjacent_pairs(s: OrderRelation) -> frozenset[Pair]:
    """Pairs x < y of ``s`` with nothing strictly between them."""
    return frozenset(
        (x, y) for x, y in s.pairs() if x != y and not open_interval(s, x, y)
    )


def frattini(s: OrderRelation) -> Relation:
    """Intersection of the maximal order subrelations of ``s``.

    Computed as ``diagonal | (s - diagonal)^2`` and cross-checked against
    ``s`` minus its adjacent pairs.
    """
    diag = Relation.diagonal(s.n)
    strict = difference(s, diag)
    via_square = union(diag, compose(strict, strict))
    via_adjacent = difference(s, Relation.from_pairs(s.n, adjacent_pairs(s)))
    if via_square != via_adjacent:
        raise AssertionError(f"frattini forms disagree for {s!r}")
    return via_square


def maximal_subrelations(s: OrderRelation) -> list[OrderRelation]:
    n = s.n
    out = []
    for x, y in sorted(adjacent_pairs(s)):
        rows = list(s.rows)
        rows[x] &= ~(1 << y)
        out.append(OrderRelation(n, rows))
    return out


def pair_order_leq(r: OrderRelation, p: Pair, q: Pair) -> bool:
    """(x, y) <= (x', y') in the product of ``r`` with its opposite."""
    (x, y), (xp, yp) = p, q
    _check_element(r, x, y, xp, yp)
    return (x, xp) in r and (yp, y) in r


def _missing_pairs(r: Relation) -> list[Pair]:
    both = union(r, opposite(r))
    return [(x, y) for x in range(r.n) for y in range(r.n) if (x, y) not in both]


def _minimal_by_pair_order(r: OrderRelation) -> frozenset[Pair]:
    cands = _missing_pairs(r)
    return frozenset(
        c for c in cands
        if not any(d != c and pair_order_leq(r, d, c) for d in cands)
    )


def inclusion_condition_pairs(r: OrderRelation) -> frozenset[Pair]:
    """Pairs outside r | r^op with ]., a[ <= ]., b[ and ]b, .[ <= ]a, .[."""
    return frozenset(
        (a, b) for a, b in _missing_pairs(r)
        if strict_below(r, a) <= strict_below(r, b)
        and strict_above(r, b) <= strict_above(r, a)
    )


def minimal_missing_pairs(r: OrderRelation) -> frozenset[Pair]:
    """Minimal elements of the complement of ``r | r^op`` under the pair order.

    Evaluated twice, by direct minimality and by the inclusions
    ``]., a[ <= ]., b[`` and ``]b, .[ <= ]a, .[``; the two must agree.
    """
    direct = _minimal_by_pair_order(r)
    by_condition = inclusion_condition_pairs(r)
    if direct != by_condition:
        raise AssertionError(f"minimality tests disagree for {r!r}")
    return direct


def covers_above(r: OrderRelation) -> list[OrderRelation]:
    n = r.n
    out = []
    for x, y in sorted(minimal_missing_pairs(r)):
        rows = list(r.rows)
        rows[x] |= 1 << y
        out.append(OrderRelation(n, rows))
    return out


# enumeration

def rows_are_order(rows: list[int]) -> bool:
    """Order test on raw reflexive bit rows, without building a Relation."""
    for x, row in enumerate(rows):
        others = row & ~(1 << x)
        while others:
            low = others & -others
            y = low.bit_length() - 1
            if (rows[y] >> x) & 1 or rows[y] & ~row:
                return False
            others ^= low
    return True


def _brute_orders(n: int) -> list[OrderRelation]:
    """Scan every reflexive relation and keep the orders."""
    width = n - 1
    diag = [1 << x for x in range(n)]
    found = []
    for mask in range(1 << (n * width)):
        # row x takes the n-1 off-diagonal bits at block x of mask
        rows = []
        for x in range(n):
            block = (mask >> (x * width)) & ((1 << width) - 1)
            low = block & ((1 << x) - 1)
            rows.append(diag[x] | low | ((block >> x) << (x + 1)))
        if rows_are_order(rows):
            found.append(OrderRelation(n, rows))
    return found


def _cover_bfs(start: OrderRelation) -> list[OrderRelation]:
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in covers_above(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return list(seen)


@lru_cache(maxsize=None)
def _enumerate(n: int, strategy: str) -> tuple[OrderRelation, ...]:
    if strategy == "brute":
        found = _brute_orders(n)
    elif strategy == "covers":
        found = _cover_bfs(OrderRelation(n, [1 << x for x in range(n)]))
    else:
        raise OmegaError(f"unknown strategy {strategy!r}")
    return tuple(sorted(found, key=Relation.bitstring))


def enumerate_orders(
    n: int, strategy: Literal["brute", "covers"] = "covers", allow_large: bool = False
) -> list[OrderRelation]:
    """All orders on ``range(n)``, sorted by row-major bit string."""
    check_cap(n, allow_large)
    return list(_enumerate(n, strategy))


def upper_orders(r: OrderRelation, allow_large: bool = False) -> list[OrderRelation]:
    """Orders strictly containing ``r`` (cover BFS from ``r``)."""
    check_cap(r.n, allow_large)
    r = as_order(r)
    return sorted((t for t in _cover_bfs(r) if t != r), key=Relation.bitstring)


# intervals of the poset of orders

@dataclass(frozen=True)
class Interval:
    lower: OrderRelation
    upper: OrderRelation

    def __post_init__(self):
        lower, upper = as_order(self.lower), as_order(self.upper)
        if lower.n != upper.n:
            raise IntervalError("interval bounds live on different ground sets")
        if not lower <= upper:
            raise IntervalError("lower bound is not contained in upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __contains__(self, t: Relation) -> bool:
        return t.n == self.lower.n and self.lower <= t <= self.upper

    def gap(self) -> int:
        return len(self.upper) - len(self.lower)


def interval_orders(
    iv: Interval, openness: Literal["closed", "open"] = "closed"
) -> list[OrderRelation]:
    """Orders T with lower <= T <= upper, scanning subsets of upper - lower."""
    if openness not in ("closed", "open"):
        raise OmegaError(f"openness must be 'closed' or 'open', got {openness!r}")
    n = iv.lower.n
    extra = difference(iv.upper, iv.lower).pairs()
    found = []
    for mask in range(1 << len(extra)):
        if openness == "open" and (mask == 0 or mask == (1 << len(extra)) - 1):
            continue
        rows = list(iv.lower.rows)
        for i in _bits_of(mask):
            x, y = extra[i]
            rows[x] |= 1 << y
        cand = Relation(n, rows)
        if is_order(cand):
            found.append(OrderRelation(n, rows))
    found.sort(key=lambda t: (len(t), t.bitstring()))
    return found


def _in_interval(iv: Interval, *ts: Relation) -> None:
    for t in ts:
        if t not in iv:
            raise IntervalError(f"{t!r} is not in the interval")


def meet(iv: Interval, t: OrderRelation, u: OrderRelation) -> OrderRelation:
    _in_interval(iv, t, u)
    return as_order(intersection(t, u))


def join(iv: Interval, t: OrderRelation, u: OrderRelation) -> OrderRelation:
    _in_interval(iv, t, u)
    out = as_order(transitive_closure(union(t, u)))
    _in_interval(iv, out)
    return out


def intersect_all(rels: list[Relation], default: Relation) -> Relation:
    return reduce(intersection, rels, default)
