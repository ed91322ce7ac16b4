"""Deterministic enumeration of Jordan types and symplectic classes.

Sweeps, tables and verification reports all iterate in the same order:
partitions in reverse-lexicographic order (largest parts first), and within
a partition the tag assignments with larger sizes varying slowest and the
tagged choice first.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .hesselink import SymplecticType, alpha_of
from .jordan import JordanType


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples.

    Enumerated reverse-lexicographically: (n,) first, (1, ..., 1) last.
    """
    if n == 0:
        yield ()
        return
    top = min(n, max_part) if max_part is not None else n
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def jordan_from_partition(p: tuple[int, ...]) -> JordanType:
    counts: dict[int, int] = {}
    for part in p:
        counts[part] = counts.get(part, 0) + 1
    return JordanType.from_dict(counts)


def jordan_types(n: int, include_trivial: bool = True) -> Iterator[JordanType]:
    """Jordan types of dimension n, in table order."""
    for p in partitions(n):
        if not include_trivial and all(part == 1 for part in p):
            continue
        yield jordan_from_partition(p)


def symplectic_partitions(dim: int) -> Iterator[tuple[int, ...]]:
    """Partitions of dim in which every odd part has even multiplicity."""
    for p in partitions(dim):
        counts: dict[int, int] = {}
        for part in p:
            counts[part] = counts.get(part, 0) + 1
        if all(d % 2 == 0 or m % 2 == 0 for d, m in counts.items()):
            yield p


def epsilon_variants(p: tuple[int, ...]) -> Iterator[SymplecticType]:
    """All symplectic classes over one Jordan partition, in table order.

    Odd sizes and even sizes of odd multiplicity have forced tags; the
    remaining sizes are free.  Free choices vary with larger sizes slowest,
    tagged (eps = 1) before untagged.
    """
    counts: dict[int, int] = {}
    for part in p:
        counts[part] = counts.get(part, 0) + 1
    free = [d for d, m in counts.items() if d % 2 == 0 and m % 2 == 0]
    free.sort(reverse=True)
    forced = {d: (1 if d % 2 == 0 else 0) for d, m in counts.items() if d not in free}
    for choice in product((1, 0), repeat=len(free)):
        tags = dict(forced)
        tags.update(zip(free, choice))
        yield SymplecticType(tuple((d, m, tags[d]) for d, m in sorted(counts.items())))


def symplectic_types(
    dim: int,
    alpha_positive: bool = False,
    include_trivial: bool = True,
) -> Iterator[SymplecticType]:
    """All symplectic classes of the given dimension, in table order."""
    for p in symplectic_partitions(dim):
        if not include_trivial and all(part == 1 for part in p):
            continue
        for s in epsilon_variants(p):
            if alpha_positive and alpha_of(s) == 0:
                continue
            yield s
