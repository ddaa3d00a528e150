"""Exact computations in the poset of order relations on a finite set."""

from .classifier import Contractible, Sphere, classify_upper, e_set
from .moebius import mobius, mobius_closed, mobius_recursive, reduced_euler_characteristic
from .omega import (
    Interval,
    adjacent_pairs,
    covers_above,
    enumerate_orders,
    frattini,
    interval_orders,
    join,
    maximal_subrelations,
    meet,
    minimal_missing_pairs,
    pair_order_leq,
)
from .relation import (
    GroundSetMismatch,
    NotAnOrder,
    OmegaError,
    OrderRelation,
    Relation,
    compose,
    opposite,
    transitive_closure,
)
from .topology import (
    SimplicialComplex,
    conical_certificate,
    order_complex,
    reduced_homology,
    smith_normal_form,
)

__version__ = "0.1.0"
