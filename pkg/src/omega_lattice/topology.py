"""Order complexes and their integral reduced homology.

Homology is computed exactly over the integers: boundary matrices are kept
sparse, unit pivots are eliminated first, and whatever is left is reduced to
Smith normal form with arbitrary-precision ints. Homotopy equivalence itself
is out of reach; sphere and contractibility claims are checked at the level
of reduced homology, plus the explicit conical contraction for intervals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from ._poset import strict_up_sets
from .omega import Interval, _bits_of, frattini, interval_orders
from .relation import (
    OmegaError,
    OrderRelation,
    Relation,
    difference,
    is_order,
    is_subrelation,
    transitive_closure,
    union,
)

T = TypeVar("T")
Simplex = tuple[int, ...]


class ChainComplexError(AssertionError):
    """A boundary-of-boundary or Smith form check failed."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite complex; ``simplices[k]`` holds the sorted k-simplices."""

    vertex_count: int
    simplices: tuple[tuple[Simplex, ...], ...] = ()

    def __post_init__(self):
        cleaned = tuple(tuple(sorted(set(layer))) for layer in self.simplices)
        while cleaned and not cleaned[-1]:
            cleaned = cleaned[:-1]
        object.__setattr__(self, "simplices", cleaned)
        for k, layer in enumerate(cleaned):
            for s in layer:
                if len(s) != k + 1 or any(a >= b for a, b in zip(s, s[1:])):
                    raise OmegaError(f"bad {k}-simplex {s!r}")
                if s[0] < 0 or s[-1] >= self.vertex_count:
                    raise OmegaError(f"simplex {s!r} uses an unknown vertex")
        for k in range(1, len(cleaned)):
            below = set(cleaned[k - 1])
            for s in cleaned[k]:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in below:
                        raise OmegaError(f"face of {s!r} is missing")

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def count(self, k: int) -> int:
        if k == -1:
            return 1
        return len(self.simplices[k]) if 0 <= k < len(self.simplices) else 0

    def dump_lines(self) -> list[str]:
        return [
            json.dumps({"dim": k, "simplices": [list(s) for s in layer]})
            for k, layer in enumerate(self.simplices)
        ]


def order_complex(elements: Sequence[T], leq: Callable[[T, T], bool]) -> SimplicialComplex:
    """Simplices are the chains of the poset; vertex i is ``elements[i]``."""
    up = strict_up_sets(elements, leq)
    layers: list[list[Simplex]] = []

    def extend(chain: list[int], top: int) -> None:
        k = len(chain) - 1
        if len(layers) <= k:
            layers.append([])
        layers[k].append(tuple(sorted(chain)))
        for j in _bits_of(up[top]):
            chain.append(j)
            extend(chain, j)
            chain.pop()

    for i in range(len(elements)):
        extend([i], i)
    return SimplicialComplex(len(elements), tuple(tuple(layer) for layer in layers))


def poset_complex(orders: Sequence[Relation]) -> SimplicialComplex:
    """Order complex of a family of relations ordered by inclusion."""
    return order_complex(list(orders), is_subrelation)


# sparse integer matrices

@dataclass
class SparseMatrix:
    """Integer matrix stored as one ``{column: value}`` dict per row."""

    nrows: int
    ncols: int
    rows: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None):
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        rows = []
        for line in dense:
            if len(line) != ncols:
                raise OmegaError("ragged matrix")
            rows.append({j: int(v) for j, v in enumerate(line) if v})
        return cls(len(dense), ncols, rows)

    def to_dense(self) -> list[list[int]]:
        return [[row.get(j, 0) for j in range(self.ncols)] for row in self.rows]

    def matmul(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise OmegaError("shape mismatch in product")
        out = []
        for row in self.rows:
            acc: dict[int, int] = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.rows)


def boundary_matrix(c: SimplicialComplex, k: int) -> SparseMatrix:
    """Boundary from k-chains to (k-1)-chains; k = 0 is the augmentation."""
    if k < 0:
        raise OmegaError("boundary dimension must be >= 0")
    cols = c.simplices[k] if k <= c.dimension else ()
    if k == 0:
        return SparseMatrix(1, len(cols), [{j: 1 for j in range(len(cols))}])
    faces = c.simplices[k - 1] if k - 1 <= c.dimension else ()
    index = {s: i for i, s in enumerate(faces)}
    m = SparseMatrix(len(faces), len(cols))
    for j, s in enumerate(cols):
        for i in range(len(s)):
            m.rows[index[s[:i] + s[i + 1:]]][j] = -1 if i % 2 else 1
    return m


# Smith normal form

@dataclass(frozen=True)
class SmithForm:
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)


def _as_sparse(m) -> SparseMatrix:
    if isinstance(m, SparseMatrix):
        return SparseMatrix(m.nrows, m.ncols, [dict(r) for r in m.rows])
    return SparseMatrix.from_dense(m)


def _eliminate_units(m: SparseMatrix) -> tuple[int, list[dict[int, int]]]:
    """Pivot on +-1 entries until none remain; return (#pivots, leftover rows)."""
    rows = {i: r for i, r in enumerate(m.rows) if r}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    pivots = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols):
            holders = cols.get(j)
            if not holders:
                continue
            units = [i for i in holders if rows[i][j] in (1, -1)]
            if not units:
                continue
            p = min(units, key=lambda i: (len(rows[i]), i))
            prow = rows.pop(p)
            v = prow[j]
            for jj in prow:
                cols[jj].discard(p)
            for i in sorted(cols[j]):
                r = rows[i]
                f = r[j] * v
                for jj, a in prow.items():
                    new = r.get(jj, 0) - f * a
                    if new:
                        if jj not in r:
                            cols[jj].add(i)
                        r[jj] = new
                    elif jj in r:
                        del r[jj]
                        cols[jj].discard(i)
                if not r:
                    del rows[i]
            del cols[j]
            pivots += 1
            progress = True
    return pivots, [rows[i] for i in sorted(rows)]


def _dense_smith(a: list[list[int]]) -> list[int]:
    """Invariant factors of a dense matrix, pivoting on the smallest |entry|."""
    factors = []
    while True:
        entries = [(abs(v), i, j) for i, r in enumerate(a) for j, v in enumerate(r) if v]
        if not entries:
            return factors
        _, pi, pj = min(entries)
        a[0], a[pi] = a[pi], a[0]
        for r in a:
            r[0], r[pj] = r[pj], r[0]
        while True:
            done = True
            p = a[0][0]
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        done = False
            for j in range(1, len(a[0])):
                if a[0][j]:
                    q = a[0][j] // p
                    for r in a:
                        r[j] -= q * r[0]
                    if a[0][j]:
                        done = False
            if done:
                bad = next(
                    (i for i in range(1, len(a)) if any(x % p for x in a[i][1:])), None
                )
                if bad is None:
                    break
                a[0] = [x + y for x, y in zip(a[0], a[bad])]
                done = False
            # move the smallest nonzero of the pivot row/column to the corner
            line = [(abs(a[i][0]), i, 0) for i in range(len(a)) if a[i][0]]
            line += [(abs(a[0][j]), 0, j) for j in range(1, len(a[0])) if a[0][j]]
            _, pi, pj = min(line)
            a[0], a[pi] = a[pi], a[0]
            for r in a:
                r[0], r[pj] = r[pj], r[0]
        factors.append(abs(a[0][0]))
        a = [r[1:] for r in a[1:]]
        if not a or not a[0]:
            return factors


def smith_normal_form(m) -> SmithForm:
    """Invariant factors d1 | d2 | ... of an integer matrix (dense or sparse)."""
    sp = _as_sparse(m)
    units, rest = _eliminate_units(sp)
    factors = [1] * units
    if rest:
        used = sorted({j for r in rest for j in r})
        where = {j: k for k, j in enumerate(used)}
        dense = [[0] * len(used) for _ in rest]
        for i, r in enumerate(rest):
            for j, v in r.items():
                dense[i][where[j]] = v
        factors += sorted(_dense_smith(dense))
    return SmithForm(tuple(factors))


def rational_rank(m) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    sp = _as_sparse(m)
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in sp.rows:
        r = {j: Fraction(v) for j, v in row.items()}
        while r:
            j = min(r)
            if j not in pivots:
                pivots[j] = r
                rank += 1
                break
            f = r[j] / pivots[j][j]
            for jj, a in pivots[j].items():
                new = r.get(jj, 0) - f * a
                if new:
                    r[jj] = new
                else:
                    r.pop(jj, None)
    return rank


def check_smith_form(m, form: SmithForm) -> None:
    """Positivity, divisibility chain, and rank agreement with :func:`rational_rank`."""
    fs = form.factors
    if any(d <= 0 for d in fs):
        raise ChainComplexError(f"non-positive invariant factor in {fs}")
    if any(b % a for a, b in zip(fs, fs[1:])):
        raise ChainComplexError(f"divisibility chain broken in {fs}")
    rr = rational_rank(m)
    if rr != form.rank:
        raise ChainComplexError(f"Smith rank {form.rank} != rational rank {rr}")


# reduced homology

@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"dim": self.dim, "free_rank": self.free_rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology groups for dimensions -1 .. top dimension."""

    groups: tuple[HomologyGroup, ...]

    def __getitem__(self, dim: int) -> HomologyGroup:
        for g in self.groups:
            if g.dim == dim:
                return g
        return HomologyGroup(dim, 0)

    def euler_characteristic(self) -> int:
        return sum(-g.free_rank if g.dim % 2 else g.free_rank for g in self.groups)

    def to_json(self) -> list[dict]:
        return [g.to_json() for g in self.groups]


@dataclass
class HomologyStats:
    """Counters filled in by :func:`reduced_homology` when passed in."""

    complexes: int = 0
    boundary_checks: int = 0
    smith_checks: int = 0


def reduced_homology(
    c: SimplicialComplex, check: bool = True, stats: HomologyStats | None = None
) -> HomologyProfile:
    """Reduced integral homology of the augmented chain complex of ``c``.

    With ``check`` on, every composite of consecutive boundaries is verified
    to vanish and every Smith form is re-checked against the rational rank.
    """
    top = c.dimension
    bounds = [boundary_matrix(c, k) for k in range(top + 1)]
    if check:
        for k in range(1, top + 1):
            if not bounds[k - 1].matmul(bounds[k]).is_zero():
                raise ChainComplexError(f"boundary squared is nonzero in degree {k}")
            if stats is not None:
                stats.boundary_checks += 1
    forms = []
    for b in bounds:
        form = smith_normal_form(b)
        if check:
            check_smith_form(b, form)
            if stats is not None:
                stats.smith_checks += 1
        forms.append(form)
    if stats is not None:
        stats.complexes += 1

    # bounds[k] is the boundary out of degree k; nothing leaves degree -1
    def rank_out(k: int) -> int:
        return forms[k].rank if 0 <= k <= top else 0

    def torsion_into(k: int) -> tuple[int, ...]:
        return forms[k + 1].torsion if k + 1 <= top else ()

    groups = tuple(
        HomologyGroup(k, c.count(k) - rank_out(k) - rank_out(k + 1), torsion_into(k))
        for k in range(-1, max(top, -1) + 1)
    )
    return HomologyProfile(groups)


def is_sphere_profile(h: HomologyProfile, d: int) -> bool:
    if d < -1:
        return False
    if h[d] != HomologyGroup(d, 1):
        return False
    return all(g.is_zero() for g in h.groups if g.dim != d)


def is_trivial_profile(h: HomologyProfile) -> bool:
    return all(g.is_zero() for g in h.groups)


def interval_complex(iv: Interval) -> SimplicialComplex:
    return poset_complex(interval_orders(iv, "open"))


# intervals of orders

@dataclass(frozen=True)
class ConicalCertificate:
    passed: bool
    apex: OrderRelation | None
    checked: int
    counterexample: str | None = None


def conical_certificate(iv: Interval) -> ConicalCertificate:
    """Check that T -> closure(T | frattini(upper)) contracts the open interval.

    Verifies, for every T strictly between the bounds, that the image stays
    strictly between them, contains T, contains the apex
    closure(lower | frattini(upper)), and that the map is monotone.
    """
    phi = frattini(iv.upper)
    if is_subrelation(phi, iv.lower):
        raise OmegaError("frattini(upper) is inside lower: interval is not in the contractible case")
    inner = interval_orders(iv, "open")

    def strictly_inside(t: Relation) -> bool:
        return is_order(t) and iv.lower < t < iv.upper

    apex = transitive_closure(union(iv.lower, phi))
    if not strictly_inside(apex):
        return ConicalCertificate(False, None, 0, f"apex {apex!r} is not strictly inside")
    apex = OrderRelation(apex.n, apex.rows)
    image = {}
    for t in inner:
        f = transitive_closure(union(t, phi))
        if not strictly_inside(f):
            return ConicalCertificate(False, apex, len(image), f"image of {t!r} leaves the interval")
        if not is_subrelation(t, f):
            return ConicalCertificate(False, apex, len(image), f"{t!r} is not below its image")
        if not is_subrelation(apex, f):
            return ConicalCertificate(False, apex, len(image), f"image of {t!r} misses the apex")
        image[t] = f
    for t in inner:
        for u in inner:
            if is_subrelation(t, u) and not is_subrelation(image[t], image[u]):
                return ConicalCertificate(
                    False, apex, len(image), f"map is not monotone on {t!r} <= {u!r}"
                )
    return ConicalCertificate(True, apex, len(inner))


def boolean_interval_isomorphism(iv: Interval) -> bool:
    """True iff the open interval is the poset of proper non-empty subsets of upper - lower.

    Checks that T -> T - lower is a bijection onto those subsets and that it
    carries the order complex of the interval onto the order complex of the
    subset poset simplex for simplex.
    """
    gap = difference(iv.upper, iv.lower).pairs()
    c = len(gap)
    inner = interval_orders(iv, "open")
    subsets = [m for m in range(1, (1 << c) - 1)]
    if len(inner) != len(subsets):
        return False
    code = {}
    for t in inner:
        extra = set(difference(t, iv.lower).pairs())
        code[t] = sum(1 << i for i, p in enumerate(gap) if p in extra)
    if sorted(code.values()) != subsets:
        return False
    by_code = {m: i for i, m in enumerate(subsets)}
    relabel = [by_code[code[t]] for t in inner]
    left = poset_complex(inner)
    right = order_complex(subsets, lambda a, b: a & ~b == 0)
    mapped = tuple(
        tuple(tuple(sorted(relabel[v] for v in s)) for s in layer) for layer in left.simplices
    )
    return SimplicialComplex(len(subsets), mapped) == right
