"""Fast evaluation of flag generating series over skew diagram classes.

For a connected diagram with north-west path data (west runs ell_i, south
runs v_i, totals L and V, offset weight B), placing it against the boundary
staircase of an ambient partition at offset j >= 0 contributes the weight

    q^(j*V + B) * prod_{p=1}^{L-1} (1 - q^(j+p)),

and the ratio (flag series / partition series) is the sum of these weights
over all offsets.  Disconnected diagrams sum the product of component
weights over placements at pairwise disjoint offset intervals of lengths
L_c, one weight per component, with identical components unordered.  The
combinatorial insertion oracle in :mod:`flagseries.partitions` is the
referee for all of this.
"""

from __future__ import annotations

import itertools
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import comb

from . import kernels
from .series import QSeries, RationalForm, clear_denominator
from .shapes import (
    ConnectedSkew,
    SkewShape,
    enum_skew_classes,
    rp_count,
    transpose,
)

__all__ = [
    "PlacementWeight",
    "default_guard",
    "fz_lambda",
    "fz_D",
    "fz_k",
    "fz_ratio_lambda",
    "fz_ratio_D",
    "fz_ratio_k",
    "partition_series",
    "rational_form_lambda",
    "rational_form_D",
    "rational_form_k",
    "rational_form_degree_bound",
    "rational_form_k_degree_bound",
]


def default_guard() -> int:
    """Trailing-coefficient guard for rationality checks (env-overridable)."""
    return int(os.environ.get("FLAGSERIES_GUARD", "10"))


@lru_cache(maxsize=None)
def _z_dense(n: int) -> tuple:
    """Partition generating function, dense up to degree n."""
    out = [1] + [0] * n
    for j in range(1, n + 1):
        for m in range(j, n + 1):
            out[m] += out[m - j]
    return tuple(out)


def partition_series(truncation: int) -> QSeries:
    """The partition generating function as a q-series."""
    return QSeries.from_dense("q", list(_z_dense(truncation)), truncation)


class PlacementWeight:
    """Evaluated weight of one connected component at offset j.

    The weight polynomial is q^(j*V + B) * prod_{p=1}^{L-1} (1 - q^(j+p));
    its expansion is stored as sparse terms (t, c, sign) with exponent
    j*(V+t) + B + c, one term per subset of the L-1 binomial factors.
    """

    __slots__ = ("L", "V", "B", "terms")

    def __init__(self, component: ConnectedSkew):
        path = component.nw_path()
        self.L = path.west_total
        self.V = path.south_total
        self.B = path.offset_weight
        terms = []
        for t in range(self.L):
            for subset in itertools.combinations(range(1, self.L), t):
                terms.append((self.V + t, self.B + sum(subset), (-1) ** t))
        self.terms = tuple(sorted(terms))

    def exponents_at(self, offset: int, n: int):
        """(exponent, sign) pairs of the weight at the given offset."""
        for tplus, base, sign in self.terms:
            e = offset * tplus + base
            if e <= n:
                yield e, sign

    def degree_at(self, offset: int) -> int:
        return offset * self.V + self.B + comb(self.L, 2) + (self.L - 1) * offset


def _relative_connected(weight: PlacementWeight, n: int) -> list:
    """Sum of placement weights over all offsets, dense up to degree n."""
    out = [0] * (n + 1)
    jmax = (n - weight.B) // weight.V if weight.B <= n else -1
    for j in range(jmax + 1):
        for tplus, base, sign in weight.terms:
            e = j * tplus + base
            if e <= n:
                out[e] += sign
    return out


def _relative_multiset(components, n: int) -> list:
    """Placement sum for a multiset of components over disjoint intervals.

    States are multisets of still-unplaced component types; U(state, j) sums
    the weights of all placements of the state with every offset >= j.
    Conditioning on the leftmost placed component gives

        U(state, j) = U(state, j+1)
                      + sum_c W_c(j) * U(state - c, j + L_c).
    """
    types = []
    mults = []
    for comp, group in itertools.groupby(components):
        types.append(PlacementWeight(comp))
        mults.append(sum(1 for _ in group))
    k = len(types)
    full = tuple(mults)

    def v_and_b(state):
        return (
            sum(c * t.V for c, t in zip(state, types)),
            sum(c * t.B for c, t in zip(state, types)),
        )

    # tables[state] = (jmax, [dense list for j = 0..jmax])
    tables = {}
    states_by_size = {}
    for state in itertools.product(*(range(m + 1) for m in mults)):
        states_by_size.setdefault(sum(state), []).append(state)

    for size in range(1, sum(mults) + 1):
        for state in states_by_size[size]:
            vs, bs = v_and_b(state)
            jmax = (n - bs) // vs if bs <= n else -1
            arrays = [None] * (jmax + 1)
            prev = [0] * (n + 1)
            for j in range(jmax, -1, -1):
                arr = list(prev)
                for ci in range(k):
                    if not state[ci]:
                        continue
                    w = types[ci]
                    sub = list(state)
                    sub[ci] -= 1
                    sub = tuple(sub)
                    j_next = j + w.L
                    if size == 1:
                        for e, sign in w.exponents_at(j, n):
                            arr[e] += sign
                        continue
                    sub_jmax, sub_arrays = tables[sub]
                    if j_next > sub_jmax:
                        continue
                    src = sub_arrays[j_next]
                    for e, sign in w.exponents_at(j, n):
                        kernels.addmul_shifted(arr, src, e, sign, n)
                arrays[j] = arr
                prev = arr
            tables[state] = (jmax, arrays)
        if size >= 2:
            for state in states_by_size[size - 2]:
                tables.pop(state, None)

    jmax, arrays = tables[full]
    return arrays[0] if jmax >= 0 else [0] * (n + 1)


_memo_lock = threading.Lock()
_relative_memo: dict = {}


def _placement_cost(shape: SkewShape) -> int:
    return sum(2 ** (c.nw_path().west_total - 1) for c in shape.components)


def _compute_relative_dense(shape: SkewShape, n: int) -> list:
    """Honest evaluation of the placement sum for the given orientation."""
    if shape.is_connected:
        return _relative_connected(PlacementWeight(shape.components[0]), n)
    return _relative_multiset(shape.components, n)


def _relative_dense(shape: SkewShape, n: int) -> list:
    """(flag series / partition series) for one shape class, dense to n.

    Transposition leaves the series invariant, so the cheaper of the two
    orientations is evaluated and the result cached under both keys.
    """
    key = shape.key()
    with _memo_lock:
        hit = _relative_memo.get(key)
    if hit is not None and hit[0] >= n:
        return list(hit[1][: n + 1])
    flipped = transpose(shape)
    candidate = shape
    if flipped.key() != key:
        if (_placement_cost(flipped), flipped.key()) < (
            _placement_cost(shape),
            key,
        ):
            candidate = flipped
    out = _compute_relative_dense(candidate, n)
    with _memo_lock:
        _relative_memo[key] = (n, tuple(out))
        _relative_memo[flipped.key()] = (n, tuple(out))
    return out


def fz_ratio_lambda(shape: SkewShape, truncation: int) -> QSeries:
    """The ratio (insertion series of ``shape``) / (partition series)."""
    return QSeries.from_dense(
        "q", _relative_dense(shape, truncation), truncation
    )


def fz_lambda(shape: SkewShape, truncation: int) -> QSeries:
    """Series whose q^m coefficient counts insertions of ``shape`` into all
    partitions of size m (pairs nu c mu with difference class ``shape``)."""
    out = kernels.mul_trunc(
        _relative_dense(shape, truncation), list(_z_dense(truncation)), truncation
    )
    return QSeries.from_dense("q", out, truncation)


def _sum_relative_chunk(D, n, start, stop, weights=None):
    classes = enum_skew_classes(D)
    acc = [0] * (n + 1)
    for idx in range(start, stop):
        rel = _relative_dense(classes[idx], n)
        w = 1 if weights is None else weights[idx - start]
        if not w:
            continue
        for i, c in enumerate(rel):
            if c:
                acc[i] += w * c
    return acc


def _sum_relatives(D, n, weights=None, jobs=1):
    classes = enum_skew_classes(D)
    total = len(classes)
    if jobs is None or jobs <= 1 or total < 8:
        return _sum_relative_chunk(D, n, 0, total, weights)
    jobs = min(jobs, total)
    bounds = [(total * i) // jobs for i in range(jobs + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(
                _sum_relative_chunk,
                D,
                n,
                bounds[i],
                bounds[i + 1],
                None if weights is None else weights[bounds[i] : bounds[i + 1]],
            )
            for i in range(jobs)
        ]
        acc = [0] * (n + 1)
        for fut in futures:
            part = fut.result()
            for i, c in enumerate(part):
                if c:
                    acc[i] += c
    return acc


def fz_ratio_D(D: int, truncation: int, jobs: int = 1) -> QSeries:
    """Sum of shape ratios over all classes of size D (equals FZ_D / Z)."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    if D == 0:
        return QSeries.one(("q",), (truncation,))
    return QSeries.from_dense(
        "q", _sum_relatives(D, truncation, jobs=jobs), truncation
    )


def fz_D(D: int, truncation: int, jobs: int = 1) -> QSeries:
    """Series whose q^n coefficient is the number of nested partition pairs
    of sizes (n, n+D); equivalently the Euler characteristic of the punctual
    nested Hilbert scheme with that size vector."""
    rel = fz_ratio_D(D, truncation, jobs=jobs).dense()
    out = kernels.mul_trunc(rel, list(_z_dense(truncation)), truncation)
    return QSeries.from_dense("q", out, truncation)


def _rp_weights(D, block_sizes):
    classes = enum_skew_classes(D)
    return [rp_count(shape, block_sizes) for shape in classes]


def fz_ratio_k(block_sizes, truncation: int, jobs: int = 1) -> QSeries:
    """Filling-weighted sum of shape ratios (equals FZ_k / Z)."""
    block_sizes = tuple(int(x) for x in block_sizes)
    if any(x < 0 for x in block_sizes):
        raise ValueError("gap sizes must be nonnegative")
    K = sum(block_sizes)
    if K == 0:
        return QSeries.one(("q",), (truncation,))
    weights = _rp_weights(K, block_sizes)
    return QSeries.from_dense(
        "q", _sum_relatives(K, truncation, weights=weights, jobs=jobs), truncation
    )


def fz_k(block_sizes, truncation: int, jobs: int = 1) -> QSeries:
    """Series whose q^n coefficient counts nested chains of partitions with
    sizes (n, n+k_1, n+k_1+k_2, ...)."""
    rel = fz_ratio_k(block_sizes, truncation, jobs=jobs).dense()
    out = kernels.mul_trunc(rel, list(_z_dense(truncation)), truncation)
    return QSeries.from_dense("q", out, truncation)


def rational_form_degree_bound(D: int) -> int:
    """Numerator degree bound for the one-gap ratio over prod_{j<=D}(1-q^j)."""
    return comb(D, 2) + comb(D - 1, 2) + (D * D + 3) // 4


def rational_form_k_degree_bound(K: int) -> int:
    """Numerator degree bound for a multi-gap ratio: (5/4)K^2 - K/2 + 1."""
    return (5 * K * K - 2 * K + 4 + 3) // 4


def rational_form_lambda(shape: SkewShape, guard: int | None = None) -> RationalForm:
    """Closed rational form of the single-shape ratio.

    Connected shapes use the refined denominator
    prod_{i=max(L,V)}^{L+V-1} (1 - q^i); general shapes use
    prod_{j=1}^{size} (1 - q^j).  The re-expansion identity is enforced by
    the guarded denominator clearing.
    """
    if guard is None:
        guard = default_guard()
    if shape.is_connected:
        path = shape.components[0].nw_path()
        lo = max(path.west_total, path.south_total)
        hi = path.length - 1
        denominator = {i: 1 for i in range(lo, hi + 1)}
        max_deg = comb(path.length - 1, 2) + path.offset_weight
    else:
        D = shape.size
        denominator = {j: 1 for j in range(1, D + 1)}
        max_deg = rational_form_degree_bound(D)
    den_deg = sum(j * e for j, e in denominator.items())
    truncation = max_deg + den_deg + guard
    ratio = fz_ratio_lambda(shape, truncation)
    return clear_denominator(ratio, denominator, max_deg, guard)


def rational_form_D(D: int, guard: int | None = None, jobs: int = 1) -> RationalForm:
    """Closed rational form of FZ_D / Z over prod_{j=1}^{D} (1 - q^j)."""
    if D < 1:
        raise ValueError("D must be positive")
    if guard is None:
        guard = default_guard()
    max_deg = rational_form_degree_bound(D)
    truncation = max_deg + D * (D + 1) // 2 + guard
    ratio = fz_ratio_D(D, truncation, jobs=jobs)
    return clear_denominator(ratio, {j: 1 for j in range(1, D + 1)}, max_deg, guard)


def rational_form_k(block_sizes, guard: int | None = None, jobs: int = 1) -> RationalForm:
    """Closed rational form of FZ_k / Z over prod_{j=1}^{K} (1 - q^j)."""
    block_sizes = tuple(int(x) for x in block_sizes)
    K = sum(block_sizes)
    if K < 1:
        raise ValueError("the gap sizes must sum to at least 1")
    if guard is None:
        guard = default_guard()
    max_deg = rational_form_k_degree_bound(K)
    truncation = max_deg + K * (K + 1) // 2 + guard
    ratio = fz_ratio_k(block_sizes, truncation, jobs=jobs)
    return clear_denominator(ratio, {j: 1 for j in range(1, K + 1)}, max_deg, guard)
