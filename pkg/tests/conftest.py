import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from omega_lattice.relation import OrderRelation, Relation


def rel(n, *pairs, reflexive=True):
    base = [(x, x) for x in range(n)] if reflexive else []
    return Relation.from_pairs(n, base + list(pairs))


def order(n, *pairs):
    return OrderRelation.from_pairs(n, [(x, x) for x in range(n)] + list(pairs))


@pytest.fixture
def chain3():
    return order(3, (0, 1), (1, 2), (0, 2))


@pytest.fixture
def vee3():
    """0 < 1 > 2."""
    return order(3, (0, 1), (2, 1))
