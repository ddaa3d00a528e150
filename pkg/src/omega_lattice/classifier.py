"""Homotopy type of the upper interval of an order (all orders strictly above it).

The verdict depends only on the set ``E`` of pairs (a, b) outside
``r | r^op`` with ``]., a[ <= ]., b[`` and ``]b, .[ <= ]a, .[``. If ``E`` is
not symmetric the upper interval is contractible; otherwise ``diagonal | E``
is an equivalence relation with r classes and the upper interval is a
homology sphere of dimension n - r - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .omega import (
    Pair,
    inclusion_condition_pairs,
    minimal_missing_pairs,
    strict_above,
    strict_below,
    upper_orders,
)
from .relation import OrderRelation, Relation, is_equivalence, union


@dataclass(frozen=True)
class ESet:
    order: OrderRelation
    pairs: frozenset[Pair]

    def is_symmetric(self) -> bool:
        return all((b, a) in self.pairs for a, b in self.pairs)


@dataclass(frozen=True)
class EquivalencePartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class Contractible:
    witness: Pair

    def to_json(self) -> dict:
        return {"verdict": "contractible", "witness": list(self.witness)}


@dataclass(frozen=True)
class Sphere:
    partition: EquivalencePartition
    dimension: int

    def to_json(self) -> dict:
        return {
            "verdict": "sphere",
            "classes": [list(c) for c in self.partition.classes],
            "dimension": self.dimension,
        }


UpperIntervalClass = Union[Contractible, Sphere]


def e_set(r: OrderRelation) -> ESet:
    pairs = inclusion_condition_pairs(r)
    if pairs != minimal_missing_pairs(r):
        raise AssertionError(f"E-set differs from the minimal missing pairs of {r!r}")
    return ESet(r, pairs)


def _partition(equiv: Relation) -> EquivalencePartition:
    seen: set[int] = set()
    classes = []
    for x in range(equiv.n):
        if x in seen:
            continue
        cls = tuple(y for y in range(equiv.n) if (x, y) in equiv)
        seen.update(cls)
        classes.append(cls)
    return EquivalencePartition(tuple(classes))


def classify_upper(r: OrderRelation) -> UpperIntervalClass:
    es = e_set(r)
    for a, b in sorted(es.pairs):
        if (b, a) not in es.pairs:
            return Contractible((a, b))
    equiv = union(Relation.diagonal(r.n), Relation.from_pairs(r.n, es.pairs))
    if not is_equivalence(equiv):
        raise AssertionError(f"diagonal | E is not an equivalence for {r!r}")
    for a, b in es.pairs:
        if strict_below(r, a) != strict_below(r, b) or strict_above(r, a) != strict_above(r, b):
            raise AssertionError(f"E-pair {(a, b)} does not have equal strict intervals")
    part = _partition(equiv)
    return Sphere(part, r.n - part.r - 1)


def upper_interval_poset(r: OrderRelation, allow_large: bool = False) -> list[OrderRelation]:
    return upper_orders(r, allow_large)
