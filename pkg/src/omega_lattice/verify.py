"""Desk-scale verification battery.

Each suite walks every relevant input for a given n and records a failure
entry per mismatch. Full integral homology is used for n <= 3; at n = 4 the
homology suites fall back to reduced Euler characteristics unless
``exhaustive`` is set (the interval suite still runs full homology on a
deterministic spread of pairs).
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable

from .classifier import Contractible, Sphere, classify_upper, e_set
from .moebius import mobius_closed, mobius_recursive, reduced_euler_characteristic
from .omega import (
    Interval,
    covers_above,
    enumerate_orders,
    frattini,
    interval_orders,
    intersect_all,
    maximal_subrelations,
    minimal_missing_pairs,
    upper_orders,
)
from .relation import OmegaError, OrderRelation, Relation, is_subrelation
from .serialization import dumps, from_hex, loads, to_hex
from .topology import (
    HomologyStats,
    boolean_interval_isomorphism,
    conical_certificate,
    interval_complex,
    is_sphere_profile,
    is_trivial_profile,
    poset_complex,
    reduced_homology,
)

SUITES = ("mobius", "intervals", "covers", "upper", "global")
MAX_VERIFY_N = 4
FULL_HOMOLOGY_N = 3
INTERVAL_HOMOLOGY_PAIRS = 500
_UNCHECKED = object()


@dataclass
class VerifyReport:
    suite: str
    n: int
    checks_run: int = 0
    failures: list[dict] = field(default_factory=list)
    homology: HomologyStats = field(default_factory=HomologyStats)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, name: str, inputs, expected, got) -> bool:
        self.checks_run += 1
        if expected != got:
            self.failures.append(
                {"check": name, "inputs": _show(inputs), "expected": _show(expected), "got": _show(got)}
            )
            return False
        return True

    def guarded(self, name: str, inputs, fn: Callable[[], object], expected=_UNCHECKED):
        """Run ``fn``; an internal assertion counts as a failed check.

        Without ``expected`` the call only has to complete; its value is returned.
        """
        try:
            got = fn()
        except AssertionError as exc:
            self.checks_run += 1
            self.failures.append(
                {"check": name, "inputs": _show(inputs), "expected": _show(expected), "got": f"error: {exc}"}
            )
            return None
        if expected is _UNCHECKED:
            self.checks_run += 1
        else:
            self.check(name, inputs, expected, got)
        return got

    def to_json(self) -> dict:
        self.failures.sort(key=lambda f: (f["check"], str(f["inputs"])))
        return {
            "suite": self.suite,
            "n": self.n,
            "checks_run": self.checks_run,
            "failures": self.failures,
            "homology": asdict(self.homology),
        }


def _show(value):
    if isinstance(value, Relation):
        return [list(p) for p in value.pairs()]
    if isinstance(value, (tuple, list)):
        return [_show(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_show(v) for v in value)
    if isinstance(value, (int, str, bool, float)) or value is None:
        return value
    return repr(value)


def _euler_of(orders: list[OrderRelation]) -> int:
    return reduced_euler_characteristic(orders, is_subrelation)


def _sphere_euler(d: int) -> int:
    return -1 if d % 2 else 1


def _maybe_sample(items: list, sample: int | None, seed: int) -> list:
    if sample is None or sample >= len(items):
        return items
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(len(items)), sample))
    return [items[i] for i in picked]


def strict_pairs(n: int) -> list[tuple[OrderRelation, OrderRelation]]:
    """All (r, s) with r strictly inside s, in canonical order."""
    out = []
    for s in enumerate_orders(n):
        for r in interval_orders(Interval(Relation.diagonal(n), s)):
            if r != s:
                out.append((r, s))
    return out


def spread(items: list, k: int) -> list:
    """``k`` items at evenly spaced positions (all of them if fewer)."""
    if len(items) <= k:
        return list(items)
    return [items[(i * len(items)) // k] for i in range(k)]


def suite_mobius(rep: VerifyReport, sample=None, seed=0) -> None:
    n = rep.n
    for s in _maybe_sample(enumerate_orders(n), sample, seed):
        below = interval_orders(Interval(Relation.diagonal(n), s))
        for r in below:
            closed = mobius_closed(r, s)
            rep.check("mobius closed = recursive", (r, s), closed, mobius_recursive(r, s))
            if r != s:
                # mu(r, r) = 1 is definitional; the Euler identity needs r < s
                chi = _euler_of(interval_orders(Interval(r, s), "open"))
                rep.check("mobius closed = euler", (r, s), closed, chi)
                row = sum(mobius_closed(r, t) for t in interval_orders(Interval(r, s)))
                rep.check("mobius row sum", (r, s), 0, row)


def suite_intervals(rep: VerifyReport, exhaustive=False, sample=None, seed=0) -> None:
    n = rep.n
    pairs = _maybe_sample(strict_pairs(n), sample, seed)
    if n <= FULL_HOMOLOGY_N or exhaustive:
        full = set(range(len(pairs)))
    else:
        full = set(spread(list(range(len(pairs))), INTERVAL_HOMOLOGY_PAIRS))
    for idx, (r, s) in enumerate(pairs):
        iv = Interval(r, s)
        inner = interval_orders(iv, "open")
        chi = _euler_of(inner)
        gap = len(s) - len(r)
        if is_subrelation(frattini(s), r):
            rep.check("every intermediate set is an order", (r, s), 2 ** gap, len(interval_orders(iv)))
            rep.check("boolean interval isomorphism", (r, s), True, boolean_interval_isomorphism(iv))
            rep.check("sphere euler", (r, s), _sphere_euler(gap - 2), chi)
            if idx in full:
                h = rep.guarded("homology", (r, s), lambda: _homology(rep, iv))
                if h is not None:
                    rep.check("sphere profile", (r, s), gap - 2, _sphere_dim(h, gap - 2))
                    rep.check("euler consistency", (r, s), chi, h.euler_characteristic())
        else:
            cert = conical_certificate(iv)
            rep.check("conical certificate", (r, s), True, cert.passed)
            rep.check("contractible euler", (r, s), 0, chi)
            if idx in full:
                h = rep.guarded("homology", (r, s), lambda: _homology(rep, iv))
                if h is not None:
                    rep.check("trivial profile", (r, s), True, is_trivial_profile(h))
                    rep.check("euler consistency", (r, s), chi, h.euler_characteristic())


def _homology(rep: VerifyReport, iv: Interval):
    return reduced_homology(interval_complex(iv), stats=rep.homology)


def _sphere_dim(h, d: int):
    return d if is_sphere_profile(h, d) else h.to_json()


def suite_covers(rep: VerifyReport, sample=None, seed=0) -> None:
    n = rep.n
    orders = enumerate_orders(n)
    rep.check("enumeration brute = covers", n, enumerate_orders(n, "brute"), orders)
    for r in _maybe_sample(orders, sample, seed):
        brute = [
            s for s in orders
            if r < s and not interval_orders(Interval(r, s), "open")
        ]
        rep.guarded("covers_above = brute covers", r, lambda: set(covers_above(r)), set(brute))
        mm = rep.guarded(
            "minimal missing pairs (both tests)", r, lambda: minimal_missing_pairs(r),
            _brute_minimal(r),
        )
        if mm is not None:
            rep.guarded("e_set = minimal missing pairs", r, lambda: e_set(r).pairs, mm)
        maxes = maximal_subrelations(r)
        rep.check("frattini = intersection of maximals", r, intersect_all(maxes, r), frattini(r))


def _brute_minimal(r: OrderRelation) -> frozenset:
    """Minimal missing pairs read off the one-pair covers found by enumeration."""
    n = r.n
    return frozenset(
        (s - r).pairs()[0]
        for s in enumerate_orders(n)
        if r < s and len(s) - len(r) == 1
    )


def suite_upper(rep: VerifyReport, exhaustive=False, sample=None, seed=0) -> None:
    n = rep.n
    use_full = n <= FULL_HOMOLOGY_N or exhaustive
    for r in _maybe_sample(enumerate_orders(n), sample, seed):
        verdict = rep.guarded("classify_upper", r, lambda: _classify_kind(r), _expected_kind(r))
        if verdict is None:
            continue
        v = classify_upper(r)
        upper = upper_orders(r)
        chi = _euler_of(upper)
        if isinstance(v, Contractible):
            rep.check("upper contractible euler", r, 0, chi)
        else:
            rep.check("upper sphere euler", r, _sphere_euler(v.dimension), chi)
        if use_full:
            h = rep.guarded(
                "upper homology", r, lambda: reduced_homology(poset_complex(upper), stats=rep.homology)
            )
            if h is None:
                continue
            if isinstance(v, Contractible):
                rep.check("upper trivial profile", r, True, is_trivial_profile(h))
            else:
                rep.check("upper sphere profile", r, v.dimension, _sphere_dim(h, v.dimension))


def _classify_kind(r: OrderRelation) -> str:
    v = classify_upper(r)
    if isinstance(v, Contractible):
        a, b = v.witness
        es = e_set(r).pairs
        return "contractible" if (a, b) in es and (b, a) not in es else "bad witness"
    return "sphere"


def _expected_kind(r: OrderRelation) -> str:
    es = e_set(r).pairs
    return "sphere" if all((b, a) in es for a, b in es) else "contractible"


def suite_global(rep: VerifyReport, exhaustive=False) -> None:
    n = rep.n
    if n < 1:
        return
    nontrivial = [t for t in enumerate_orders(n) if t != Relation.diagonal(n)]
    rep.check("euler of nontrivial orders", n, _sphere_euler(n - 2), _euler_of(nontrivial))
    if n <= FULL_HOMOLOGY_N or exhaustive:
        h = rep.guarded(
            "homology of nontrivial orders", n,
            lambda: reduced_homology(poset_complex(nontrivial), stats=rep.homology),
        )
        if h is not None:
            rep.check("nontrivial orders sphere profile", n, n - 2, _sphere_dim(h, n - 2))
    v = classify_upper(OrderRelation(n, [1 << x for x in range(n)]))
    got = ("sphere", v.dimension) if isinstance(v, Sphere) else ("contractible",)
    rep.check("classify_upper(diagonal)", n, ("sphere", n - 2), got)


def suite_roundtrip(rep: VerifyReport) -> None:
    """Serialization round trips over every relation on n <= 3 (orders for larger n)."""
    n = rep.n
    if n <= 3:
        rels = [
            Relation.from_pairs(n, [p for p, keep in zip(product(range(n), repeat=2), bits) if keep])
            for bits in product((0, 1), repeat=n * n)
        ]
    else:
        rels = enumerate_orders(n)
    for r in rels:
        rep.check("json round trip", r, r, loads(dumps(r)))
        rep.check("hex round trip", r, r, from_hex(n, to_hex(r)))


def run_suite(
    n: int, suite: str = "all", exhaustive: bool = False, sample: int | None = None, seed: int = 0
) -> VerifyReport:
    if suite != "all" and suite not in SUITES:
        raise OmegaError(f"unknown suite {suite!r}")
    if not (0 <= n <= MAX_VERIFY_N):
        raise OmegaError(f"verify supports 0 <= n <= {MAX_VERIFY_N}, got {n}")
    rep = VerifyReport(suite, n)
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name == "mobius":
            suite_mobius(rep, sample, seed)
        elif name == "intervals":
            suite_intervals(rep, exhaustive, sample, seed)
        elif name == "covers":
            suite_covers(rep, sample, seed)
        elif name == "upper":
            suite_upper(rep, exhaustive, sample, seed)
        elif name == "global":
            suite_global(rep, exhaustive)
    if suite == "all":
        suite_roundtrip(rep)
    return rep

