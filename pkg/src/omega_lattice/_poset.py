"""Finite posets given as an element list plus a comparison callable."""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

from .relation import OmegaError

T = TypeVar("T")


def strict_up_sets(elements: Sequence[T], leq: Callable[[T, T], bool]) -> list[int]:
    """Bitmask of strictly greater indices per index, after validating ``leq``."""
    k = len(elements)
    up = [0] * k
    for i, a in enumerate(elements):
        if not leq(a, a):
            raise OmegaError(f"comparison is not reflexive at {a!r}")
        for j, b in enumerate(elements):
            if i != j and leq(a, b):
                up[i] |= 1 << j
    for i in range(k):
        rest = up[i]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            if (up[j] >> i) & 1:
                raise OmegaError("comparison is not antisymmetric")
            if up[j] & ~up[i]:
                raise OmegaError("comparison is not transitive")
            rest ^= low
    return up
