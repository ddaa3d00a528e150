"""Binary relations on a finite set {0, ..., n-1} stored as bit rows.

Row ``x`` is an int whose bit ``y`` is set iff the pair ``(x, y)`` belongs to
the relation. Composition gathers rows with OR, so closure and products cost
O(n^2) big-int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_N = 12


class OmegaError(ValueError):
    """Base class for user-facing errors in this package."""


class GroundSetMismatch(OmegaError):
    pass


class NotAnOrder(OmegaError):
    pass


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise OmegaError(f"ground set size must be a non-negative int, got {n!r}")
    if n > MAX_N:
        raise OmegaError(f"ground set size {n} exceeds the maximum {MAX_N}")


class Relation:
    """Immutable relation on ``range(n)``.

    Equality and hashing depend on ``(n, rows)`` only, so an ``OrderRelation``
    compares equal to a plain ``Relation`` with the same pairs.
    """

    __slots__ = ("n", "rows")

    n: int
    rows: tuple[int, ...]

    def __init__(self, n: int, rows: Iterable[int]):
        _check_n(n)
        rows = tuple(rows)
        if len(rows) != n:
            raise OmegaError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for row in rows:
            if row < 0 or row & ~full:
                raise OmegaError("row has bits outside the ground set")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")

    # construction helpers

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]):
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise OmegaError(f"pair ({x}, {y}) is outside a ground set of size {n}")
            rows[x] |= 1 << y
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int):
        return cls(n, [0] * n)

    @classmethod
    def diagonal(cls, n: int):
        return cls(n, [1 << x for x in range(n)])

    @classmethod
    def from_bits(cls, n: int, code: int):
        """Inverse of :meth:`bits`: bit ``x*n + y`` of ``code`` is the pair (x, y)."""
        mask = (1 << n) - 1
        return cls(n, [(code >> (x * n)) & mask for x in range(n)])

    # views

    def bits(self) -> int:
        code = 0
        for x, row in enumerate(self.rows):
            code |= row << (x * self.n)
        return code

    def bitstring(self) -> str:
        """Row-major bit string; character ``x*n + y`` is '1' iff (x, y) is present."""
        return "".join(
            "1" if (row >> y) & 1 else "0" for row in self.rows for y in range(self.n)
        )

    def sort_key(self) -> tuple[int, str]:
        return (self.n, self.bitstring())

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rows) for y in range(self.n) if (row >> y) & 1]

    def column(self, y: int) -> int:
        bit = 1 << y
        return sum(1 << x for x, row in enumerate(self.rows) if row & bit)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return 0 <= x < self.n and 0 <= y < self.n and bool((self.rows[x] >> y) & 1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs())

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __le__(self, other: Relation) -> bool:
        return is_subrelation(self, other)

    def __lt__(self, other: Relation) -> bool:
        return is_subrelation(self, other) and self.rows != other.rows

    def __ge__(self, other: Relation) -> bool:
        return is_subrelation(other, self)

    def __gt__(self, other: Relation) -> bool:
        return is_subrelation(other, self) and self.rows != other.rows

    def __or__(self, other: Relation) -> Relation:
        return union(self, other)

    def __and__(self, other: Relation) -> Relation:
        return intersection(self, other)

    def __sub__(self, other: Relation) -> Relation:
        return difference(self, other)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {self.pairs()})"


class OrderRelation(Relation):
    """A relation that is reflexive, transitive and antisymmetric."""

    __slots__ = ()

    def __init__(self, n: int, rows: Iterable[int]):
        super().__init__(n, rows)
        if not is_order(self):
            raise NotAnOrder(f"not an order relation: {self.pairs()}")

    @classmethod
    def chain(cls, n: int):
        """The total order 0 < 1 < ... < n-1."""
        return cls(n, [((1 << n) - 1) & ~((1 << x) - 1) for x in range(n)])


def as_order(r: Relation) -> OrderRelation:
    if isinstance(r, OrderRelation):
        return r
    return OrderRelation(r.n, r.rows)


def _same_ground(r: Relation, s: Relation) -> None:
    if r.n != s.n:
        raise GroundSetMismatch(f"ground sets differ: {r.n} vs {s.n}")


def is_subrelation(r: Relation, s: Relation) -> bool:
    _same_ground(r, s)
    return all(a & ~b == 0 for a, b in zip(r.rows, s.rows))


def _plain(n: int, rows) -> Relation:
    return Relation(n, rows)


def compose(r: Relation, s: Relation) -> Relation:
    """Pairs (x, y) with some z such that (x, z) in r and (z, y) in s."""
    _same_ground(r, s)
    out = []
    for row in r.rows:
        acc = 0
        while row:
            low = row & -row
            acc |= s.rows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return _plain(r.n, out)


def opposite(r: Relation) -> Relation:
    return _plain(r.n, [r.column(y) for y in range(r.n)])


def union(r: Relation, s: Relation) -> Relation:
    _same_ground(r, s)
    return _plain(r.n, [a | b for a, b in zip(r.rows, s.rows)])


def intersection(r: Relation, s: Relation) -> Relation:
    _same_ground(r, s)
    return _plain(r.n, [a & b for a, b in zip(r.rows, s.rows)])


def difference(r: Relation, s: Relation) -> Relation:
    _same_ground(r, s)
    return _plain(r.n, [a & ~b for a, b in zip(r.rows, s.rows)])


def contains_pair(r: Relation, x: int, y: int) -> bool:
    if not (0 <= x < r.n and 0 <= y < r.n):
        raise OmegaError(f"pair ({x}, {y}) is outside a ground set of size {r.n}")
    return (x, y) in r


def pair_count(r: Relation) -> int:
    return len(r)


def transitive_closure(r: Relation) -> Relation:
    """Least preorder containing ``r``.

    Non-reflexive input is closed as ``r | diagonal``, so the result always
    contains the diagonal. Computed by repeated squaring until stable.
    """
    current = union(r, Relation.diagonal(r.n))
    while True:
        squared = compose(current, current)
        if squared == current:
            return current
        current = squared


def is_reflexive(r: Relation) -> bool:
    return all((row >> x) & 1 for x, row in enumerate(r.rows))


def is_transitive(r: Relation) -> bool:
    return is_subrelation(compose(r, r), r)


def is_antisymmetric(r: Relation) -> bool:
    return is_subrelation(intersection(r, opposite(r)), Relation.diagonal(r.n))


def is_symmetric(r: Relation) -> bool:
    return r == opposite(r)


def is_preorder(r: Relation) -> bool:
    return is_reflexive(r) and is_transitive(r)


def is_order(r: Relation) -> bool:
    return is_preorder(r) and is_antisymmetric(r)


def is_equivalence(r: Relation) -> bool:
    return is_preorder(r) and is_symmetric(r)
