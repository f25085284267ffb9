"""Brute-force partition, flag and coloured-flag enumeration.

This module is the ground truth the series engines are tested against: every
count here is obtained by direct enumeration of partitions and nestings, not
from any closed formula.
"""

from __future__ import annotations

from functools import lru_cache

from .shapes import SkewShape, skew_class_of_cells


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def num_parts(self) -> int:
        return len(self)

    def multiplicities(self) -> dict:
        """Map part value -> multiplicity."""
        out = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self):
        return {(x, y) for y, row in enumerate(self) for x in range(row)}

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(
            tuple(sum(1 for p in self if p > i) for i in range(self[0]))
        )


class FlagSpec(tuple):
    """Weakly increasing tuple of nonnegative sizes for a nesting."""

    def __new__(cls, sizes=()):
        sizes = tuple(int(n) for n in sizes)
        if any(n < 0 for n in sizes):
            raise ValueError("sizes must be nonnegative")
        if any(a > b for a, b in zip(sizes, sizes[1:])):
            raise ValueError("sizes must be weakly increasing")
        return super().__new__(cls, sizes)


@lru_cache(maxsize=None)
def enum_partitions(n: int):
    """All partitions of n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n), via the classic product-expansion recurrence."""
    if n < 0:
        return 0
    table = [1] + [0] * n
    for j in range(1, n + 1):
        for m in range(j, n + 1):
            table[m] += table[m - j]
    return table[n]


def count_partitions_with_k_parts(n: int, k: int) -> int:
    """Number of partitions of n into exactly k parts (0 when infeasible)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return _parts_table(n, k)


@lru_cache(maxsize=None)
def _parts_table(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    # either a part equal to 1 is present, or subtract 1 from every part
    return _parts_table(n - 1, k - 1) + _parts_table(n - k, k)


def contains(inner, outer) -> bool:
    """True iff inner_i <= outer_i rowwise (missing rows count as 0)."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def count_nested_flags(spec) -> int:
    """Number of nested chains of partitions with the given sizes, by
    exhaustive enumeration over sub-partitions."""
    spec = FlagSpec(spec)
    if not spec:
        return 1
    return sum(_chains_below(mu, spec[:-1]) for mu in enum_partitions(spec[-1]))


@lru_cache(maxsize=None)
def _chains_below(outer, sizes) -> int:
    """Chains lambda_1 c ... c lambda_k c outer with the given inner sizes."""
    if not sizes:
        return 1
    return sum(
        _chains_below(nu, sizes[:-1])
        for nu in enum_partitions(sizes[-1])
        if contains(nu, outer)
    )


def count_coloured_flags(r: int, spec) -> int:
    """Number of r-tuples of nested chains whose sizes sum to ``spec``,
    obtained by convolving the one-colour counts over all splittings of the
    size vector into r weakly increasing summand vectors."""
    if r < 1:
        raise ValueError("the number of colours must be positive")
    spec = FlagSpec(spec)
    if not spec:
        return 1
    vectors = _increasing_vectors_below(spec)
    single = {v: count_nested_flags(v) for v in vectors}
    table = {(0,) * len(spec): 1}
    for _ in range(r):
        merged = {}
        for partial, cp in table.items():
            for v, cv in single.items():
                if not cv:
                    continue
                w = tuple(a + b for a, b in zip(partial, v))
                if all(a <= b for a, b in zip(w, spec)):
                    merged[w] = merged.get(w, 0) + cp * cv
        table = merged
    return table.get(tuple(spec), 0)


@lru_cache(maxsize=None)
def _increasing_vectors_below(spec):
    """All weakly increasing vectors componentwise <= spec."""
    out = []

    def build(i, acc):
        if i == len(spec):
            out.append(tuple(acc))
            return
        lo = acc[-1] if acc else 0
        for v in range(lo, spec[i] + 1):
            build(i + 1, acc + [v])

    build(0, [])
    return tuple(out)


def insertion_count(shape: SkewShape, m: int) -> int:
    """Number of pairs nu c mu with |nu| = m whose set difference realizes
    ``shape`` up to translation, by exhaustive flag enumeration."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = 0
    for mu in enum_partitions(m + shape.size):
        mu_cells = mu.cells()
        for nu in enum_partitions(m):
            if contains(nu, mu):
                if skew_class_of_cells(mu_cells - nu.cells()) == shape:
                    total += 1
    return total
