from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import order
from omega_lattice.moebius import reduced_euler_characteristic
from omega_lattice.omega import Interval, enumerate_orders, frattini, interval_orders
from omega_lattice.relation import OmegaError, OrderRelation, is_subrelation
from omega_lattice.topology import (
    ChainComplexError,
    HomologyGroup,
    HomologyProfile,
    HomologyStats,
    SimplicialComplex,
    SmithForm,
    SparseMatrix,
    boolean_interval_isomorphism,
    boundary_matrix,
    check_smith_form,
    conical_certificate,
    interval_complex,
    is_sphere_profile,
    is_trivial_profile,
    order_complex,
    poset_complex,
    rational_rank,
    reduced_homology,
    smith_normal_form,
)
import oracles


def subset_leq(a, b):
    return a <= b


def full_simplex_boundary(c):
    """Boundary of the (c-1)-simplex: every proper non-empty vertex subset."""
    layers = [tuple(combinations(range(c), k + 1)) for k in range(c - 1)]
    return SimplicialComplex(c, tuple(layers))


POINT = SimplicialComplex(1, (((0,),),))
S0 = SimplicialComplex(2, (((0,), (1,)),))
EMPTY = SimplicialComplex(0)


class TestComplex:
    def test_downward_closure_enforced(self):
        with pytest.raises(OmegaError):
            SimplicialComplex(2, ((), ((0, 1),)))
        with pytest.raises(OmegaError):
            SimplicialComplex(2, (((1, 0),),))
        with pytest.raises(OmegaError):
            SimplicialComplex(1, (((0,), (3,)),))

    def test_order_complex_examples(self):
        assert order_complex([], subset_leq) == EMPTY
        assert order_complex([frozenset({0}), frozenset({1})], subset_leq) == S0
        subs = [frozenset(s) for s in oracles.subsets(range(3)) if 0 < len(s) < 3]
        hexagon = order_complex(subs, subset_leq)
        assert [len(layer) for layer in hexagon.simplices] == [6, 6]
        assert is_sphere_profile(reduced_homology(hexagon), 1)

    def test_order_complex_matches_chain_oracle(self):
        subs = [frozenset(s) for s in oracles.subsets(range(4)) if 0 < len(s) < 4]
        cx = order_complex(subs, subset_leq)
        want = {tuple(sorted(ch)) for ch in oracles.chains(subs, lambda a, b: a < b)}
        got = {s for layer in cx.simplices for s in layer}
        assert got == want

    def test_rejects_non_order(self):
        with pytest.raises(OmegaError):
            order_complex([1, 2], lambda a, b: True)

    def test_dump_lines(self):
        assert S0.dump_lines() == ['{"dim": 0, "simplices": [[0], [1]]}']


class TestBoundary:
    def test_edge(self):
        edge = SimplicialComplex(2, (((0,), (1,)), ((0, 1),)))
        assert boundary_matrix(edge, 1).to_dense() == [[-1], [1]]
        assert boundary_matrix(edge, 0).to_dense() == [[1, 1]]

    def test_triangle_rank(self):
        tri = full_simplex_boundary(3)
        b1 = boundary_matrix(tri, 1)
        assert smith_normal_form(b1).rank == 2
        assert rational_rank(b1) == 2

    @pytest.mark.parametrize("c", [1, 2, 3, 4, 5])
    def test_boundary_squared_zero(self, c):
        cx = full_simplex_boundary(c)
        for k in range(1, cx.dimension + 1):
            assert boundary_matrix(cx, k - 1).matmul(boundary_matrix(cx, k)).is_zero()

    def test_empty_complex_augmentation(self):
        assert boundary_matrix(EMPTY, 0).nrows == 1
        assert boundary_matrix(EMPTY, 0).ncols == 0


class TestSmith:
    def test_examples(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == SmithForm(())
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == (1, 1, 1)
        assert smith_normal_form([[2, 0], [0, 4]]).factors == (2, 4)
        assert smith_normal_form([[2, 0], [0, 3]]).factors == (1, 6)
        assert smith_normal_form([]).factors == ()

    def test_torsion_example(self):
        assert smith_normal_form([[2]]).torsion == (2,)
        assert smith_normal_form([[4, 6], [6, 9]]).factors == (1,)

    def test_check_rejects_bad_form(self):
        with pytest.raises(ChainComplexError):
            check_smith_form([[2, 0], [0, 3]], SmithForm((2, 3)))
        with pytest.raises(ChainComplexError):
            check_smith_form([[1, 0], [0, 0]], SmithForm((1, 1)))

    @settings(max_examples=150, deadline=None)
    @given(
        st.integers(1, 4).flatmap(
            lambda r: st.integers(1, 4).flatmap(
                lambda c: st.lists(
                    st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r
                )
            )
        )
    )
    def test_factors_match_minor_gcds(self, m):
        form = smith_normal_form(m)
        check_smith_form(m, form)
        # d1 * ... * dk equals the gcd of the k x k minors
        prod = 1
        for k, d in enumerate(form.factors, start=1):
            prod *= d
            assert oracles.gcd_of_minors(m, k) == prod
        if form.rank < min(len(m), len(m[0])):
            assert oracles.gcd_of_minors(m, form.rank + 1) == 0

    def test_large_entries_stay_exact(self):
        big = 10**30
        m = [[big, 0], [0, big * 7]]
        assert smith_normal_form(m).factors == (big, 7 * big)

    def test_sparse_input(self):
        m = SparseMatrix.from_dense([[0, 2], [3, 0]])
        assert smith_normal_form(m).factors == (1, 6)
        assert m.to_dense() == [[0, 2], [3, 0]]


class TestHomology:
    def test_examples(self):
        assert is_trivial_profile(reduced_homology(POINT))
        tri = reduced_homology(full_simplex_boundary(3))
        assert tri[1] == HomologyGroup(1, 1) and is_sphere_profile(tri, 1)
        empty = reduced_homology(EMPTY)
        assert empty[-1] == HomologyGroup(-1, 1)
        assert is_sphere_profile(empty, -1)

    def test_profile_predicates(self):
        s0 = reduced_homology(S0)
        assert is_sphere_profile(s0, 0)
        assert not is_sphere_profile(reduced_homology(POINT), 0)
        assert not is_sphere_profile(s0, 1)
        assert not is_sphere_profile(s0, -2)
        torsion = HomologyProfile((HomologyGroup(1, 1, (2,)),))
        assert not is_sphere_profile(torsion, 1)
        assert not is_trivial_profile(torsion)

    @pytest.mark.parametrize("c", [1, 2, 3, 4, 5, 6])
    def test_spheres(self, c):
        assert is_sphere_profile(reduced_homology(full_simplex_boundary(c)), c - 2)

    def test_torsion_detected(self):
        # minimal triangulation of the real projective plane: H1 = Z/2
        faces = [
            (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
            (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
        ]
        edges = sorted({e for f in faces for e in combinations(f, 2)})
        rp2 = SimplicialComplex(6, (tuple((v,) for v in range(6)), tuple(edges), tuple(faces)))
        h = reduced_homology(rp2)
        assert h[1] == HomologyGroup(1, 0, (2,))
        assert h[2].is_zero() and h[0].is_zero()

    def test_stats_and_checks(self):
        stats = HomologyStats()
        reduced_homology(full_simplex_boundary(4), stats=stats)
        assert stats.complexes == 1 and stats.boundary_checks == 2 and stats.smith_checks == 3

    @pytest.mark.parametrize("n", [2, 3])
    def test_euler_consistency_on_intervals(self, n):
        orders = enumerate_orders(n)
        for s in orders:
            for r in interval_orders(Interval(OrderRelation.diagonal(n), s)):
                if r == s:
                    continue
                inner = interval_orders(Interval(r, s), "open")
                h = reduced_homology(poset_complex(inner))
                assert h.euler_characteristic() == reduced_euler_characteristic(inner, is_subrelation)


class TestConical:
    def test_chain3(self, chain3):
        cert = conical_certificate(Interval(OrderRelation.diagonal(3), chain3))
        assert cert.passed and cert.checked == 5
        assert cert.apex == order(3, (0, 2))

    def test_chain4(self):
        cert = conical_certificate(Interval(OrderRelation.diagonal(4), OrderRelation.chain(4)))
        assert cert.passed

    def test_wrong_branch(self, vee3):
        with pytest.raises(OmegaError):
            conical_certificate(Interval(OrderRelation.diagonal(3), vee3))

    @pytest.mark.parametrize("n", [3, 4])
    def test_all_contractible_intervals(self, n):
        for s in enumerate_orders(n):
            for r in interval_orders(Interval(OrderRelation.diagonal(n), s)):
                if not is_subrelation(frattini(s), r):
                    assert conical_certificate(Interval(r, s)).passed


class TestBooleanModel:
    def test_vee(self, vee3):
        iv = Interval(OrderRelation.diagonal(3), vee3)
        assert boolean_interval_isomorphism(iv)
        assert is_sphere_profile(reduced_homology(interval_complex(iv)), 0)

    def test_not_boolean(self, chain3):
        assert not boolean_interval_isomorphism(Interval(OrderRelation.diagonal(3), chain3))
