"""Ordered compositions of a positive integer and multiset multiplicities.

A composition of n is an ordered tuple of positive parts summing to n;
order matters, so (4, 1) and (1, 4) are distinct.  There are 2**(n-1)
of them.  Compositions index the terms of every signed diagram-count
expansion in this package, so enumeration must be exhaustive,
duplicate-free, and deterministic.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Mapping


def enumerate_compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every composition of n exactly once, lazily.

    A composition corresponds to an (n-1)-bit mask of cut positions
    between n aligned units; masks are traversed in ascending binary
    order, so the stream starts at (n,) and ends at (1,)*n.  The order
    is fixed and identical across calls.  n = 0 yields the single empty
    composition by convention.
    """
    if n < 0:
        raise ValueError(f"cannot compose a negative total: {n}")
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        parts = []
        prev = 0
        m = mask
        while m:
            pos = (m & -m).bit_length()  # cut sits after unit `pos`
            parts.append(pos - prev)
            prev = pos
            m &= m - 1
        parts.append(n - prev)
        yield tuple(parts)


def count_compositions(n: int) -> int:
    """Number of compositions of n: 2**(n-1), and 1 for the empty n = 0."""
    if n < 0:
        raise ValueError(f"cannot compose a negative total: {n}")
    return 1 if n == 0 else 1 << (n - 1)


def multiset_multiplicity(ms: Mapping[int, int]) -> int:
    """How many compositions share the part multiset `ms`.

    `ms` maps part value -> multiplicity.  Returns the multinomial
    (sum of multiplicities)! / product of multiplicity factorials, which
    is how often that multiset occurs in the composition stream of its
    weighted total.
    """
    if not ms:
        raise ValueError("part multiset must be non-empty")
    for part, mult in ms.items():
        if part < 1 or mult < 1:
            raise ValueError(f"parts and multiplicities must be >= 1, got {part}: {mult}")
    result = math.factorial(sum(ms.values()))
    for mult in ms.values():
        result //= math.factorial(mult)
    return result
