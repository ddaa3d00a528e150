import pytest

from conftest import order
from omega_lattice.classifier import (
    Contractible,
    Sphere,
    classify_upper,
    e_set,
    upper_interval_poset,
)
from omega_lattice.moebius import reduced_euler_characteristic
from omega_lattice.omega import CapExceeded, enumerate_orders, minimal_missing_pairs
from omega_lattice.relation import OrderRelation, Relation, is_equivalence, is_subrelation
from omega_lattice.topology import (
    is_sphere_profile,
    is_trivial_profile,
    poset_complex,
    reduced_homology,
)


class TestESet:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_diagonal(self, n):
        es = e_set(OrderRelation.diagonal(n))
        assert es.pairs == {(a, b) for a in range(n) for b in range(n) if a != b}

    def test_total_order(self):
        assert e_set(OrderRelation.chain(4)).pairs == frozenset()

    def test_one_pair(self):
        # (2, 0) fails: ]0, .[ = {1} is not inside ]2, .[ = {}
        es = e_set(order(3, (0, 1)))
        assert es.pairs == {(0, 2), (2, 1)}
        assert not es.is_symmetric()

    @pytest.mark.parametrize("n", range(5))
    def test_equals_minimal_missing_pairs(self, n):
        for r in enumerate_orders(n):
            es = e_set(r)
            assert es.pairs == minimal_missing_pairs(r)
            assert not any(p in r or (p[1], p[0]) in r for p in es.pairs)


class TestClassify:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_diagonal_is_sphere(self, n):
        v = classify_upper(OrderRelation.diagonal(n))
        assert isinstance(v, Sphere)
        assert v.partition.r == 1 and v.dimension == n - 2

    def test_contractible_witness(self):
        v = classify_upper(order(3, (0, 1)))
        assert v == Contractible((0, 2))
        assert v.to_json() == {"verdict": "contractible", "witness": [0, 2]}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_total_order(self, n):
        v = classify_upper(OrderRelation.chain(n))
        assert isinstance(v, Sphere) and v.partition.r == n and v.dimension == -1
        assert v.to_json()["classes"] == [[x] for x in range(n)]

    def test_partition_example(self):
        # 0 and 1 both below 2, incomparable: same strict intervals
        v = classify_upper(order(3, (0, 2), (1, 2)))
        assert isinstance(v, Sphere)
        assert v.partition.classes == ((0, 1), (2,))
        assert v.dimension == 0

    @pytest.mark.parametrize("n", range(5))
    def test_symmetric_e_gives_equivalence(self, n):
        for r in enumerate_orders(n):
            es = e_set(r)
            if es.is_symmetric():
                eq = Relation.diagonal(n) | Relation.from_pairs(n, es.pairs)
                assert is_equivalence(eq)

    @pytest.mark.parametrize("n", range(1, 4))
    def test_verdict_matches_homology(self, n):
        for r in enumerate_orders(n):
            v = classify_upper(r)
            h = reduced_homology(poset_complex(upper_interval_poset(r)))
            if isinstance(v, Contractible):
                assert is_trivial_profile(h)
            else:
                assert is_sphere_profile(h, v.dimension)

    def test_verdict_matches_euler_n4(self):
        for r in enumerate_orders(4):
            v = classify_upper(r)
            chi = reduced_euler_characteristic(upper_interval_poset(r), is_subrelation)
            if isinstance(v, Contractible):
                assert chi == 0
            else:
                assert chi == (-1 if v.dimension % 2 else 1)


def test_upper_poset_cap():
    with pytest.raises(CapExceeded):
        upper_interval_poset(OrderRelation.diagonal(6))
