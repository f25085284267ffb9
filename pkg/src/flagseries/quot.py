"""Higher-rank flag series and the functional identities relating them
to the rank-one theory.

The rank-r count with one gap D splits over r-tuples of gaps summing to D,
so every rank-r series is a polynomial expression in the rank-one series.
The three verify_* routines check the closed functional equations; each
builds both sides independently and compares coefficients exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, perm

from .engine import (
    _z_dense,
    default_guard,
    fz_D,
    fz_ratio_D,
    rational_form_degree_bound,
)
from .partitions import count_coloured_flags, enum_partitions
from .series import QSeries, RationalForm, clear_denominator, ps_inv, ps_mul
from . import kernels

__all__ = [
    "RankSeriesBundle",
    "q_rank_series",
    "fq_rD",
    "fq_rD_via_generating",
    "rank_series_bundle",
    "rational_form_rD",
    "verify_q_identity",
    "verify_fq_functional",
    "verify_exponential_identity",
    "verify_fq2_example",
]


def q_rank_series(r: int, truncation: int) -> QSeries:
    """Rank-r unnested series: the r-th power of the partition series."""
    if r < 0:
        raise ValueError("rank must be nonnegative")
    return QSeries.from_dense("q", _z_pow_dense(r, truncation), truncation)


@lru_cache(maxsize=None)
def _z_pow_dense(r: int, n: int) -> list:
    out = [1] + [0] * n
    z = list(_z_dense(n))
    for _ in range(r):
        out = kernels.mul_trunc(out, z, n)
    return out


def _injections(r: int, parts) -> int:
    """Ways to assign the multiset of gaps ``parts`` to r distinct colours."""
    l = len(parts)
    if l > r:
        return 0
    denom = 1
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    for m in mult.values():
        denom *= factorial(m)
    return perm(r, l) // denom


def _ratio_rD_dense(r: int, D: int, n: int) -> list:
    """FQ_{r,D} / Z^r, dense: gap multisets weighted by colour injections."""
    acc = [0] * (n + 1)
    for lam in enum_partitions(D):
        weight = _injections(r, lam)
        if not weight:
            continue
        prod = [1] + [0] * n
        for part in lam:
            prod = kernels.mul_trunc(prod, fz_ratio_D(part, n).dense(), n)
        kernels.addmul_shifted(acc, prod, 0, weight, n)
    return acc


def fq_rD(r: int, D: int, truncation: int) -> QSeries:
    """Series whose q^n coefficient counts r-coloured nested pairs of sizes
    (n, n+D): the sum over gap compositions D = d_1 + ... + d_r of the
    product of one-colour gap series."""
    if r < 1:
        raise ValueError("rank must be positive")
    if D < 0:
        raise ValueError("D must be nonnegative")
    out = kernels.mul_trunc(
        _ratio_rD_dense(r, D, truncation), _z_pow_dense(r, truncation), truncation
    )
    return QSeries.from_dense("q", out, truncation)


def fq_rD_via_generating(r: int, D: int, truncation: int) -> QSeries:
    """Same series extracted as the v^D coefficient of (sum_d FZ_d v^d)^r;
    kept as an independent route for consistency checks."""
    n = truncation
    # dense-in-v list of dense-in-q lists
    fz = [fz_D(d, n).dense() for d in range(D + 1)]
    power = [[1] + [0] * n] + [[0] * (n + 1) for _ in range(D)]
    for _ in range(r):
        nxt = [[0] * (n + 1) for _ in range(D + 1)]
        for a in range(D + 1):
            if not any(power[a]):
                continue
            for b in range(D + 1 - a):
                prod = kernels.mul_trunc(power[a], fz[b], n)
                kernels.addmul_shifted(nxt[a + b], prod, 0, 1, n)
        power = nxt
    return QSeries.from_dense("q", power[D], n)


@dataclass(frozen=True)
class RankSeriesBundle:
    """A rank-r, gap-D series together with its rational form over Z^r."""

    rank: int
    gap: int
    truncation: int
    series: QSeries
    rational_form: RationalForm


def rank_series_bundle(r: int, D: int, truncation: int) -> RankSeriesBundle:
    return RankSeriesBundle(
        rank=r,
        gap=D,
        truncation=truncation,
        series=fq_rD(r, D, truncation),
        rational_form=rational_form_rD(r, D),
    )


@lru_cache(maxsize=None)
def _best_excess(remaining: int, slots: int) -> int:
    """Max over gap multisets of sum_i (num degree bound - denominator
    degree) for each gap, used to bound the common-denominator numerator."""
    if remaining == 0:
        return 0
    if slots == 0:
        return -(10**9)
    best = -(10**9)
    for d in range(1, remaining + 1):
        g = rational_form_degree_bound(d) - d * (d + 1) // 2
        rest = _best_excess(remaining - d, slots - 1)
        if rest > -(10**9) and g + rest > best:
            best = g + rest
    return best


def rational_form_rD(r: int, D: int, guard: int | None = None) -> RationalForm:
    """Rational form of FQ_{r,D} / Z^r over the canonical denominator
    prod_{j=1}^{D} (1 - q^j)^{min(r, D // j)}."""
    if r < 1 or D < 1:
        raise ValueError("rank and gap must be positive")
    if guard is None:
        guard = default_guard()
    denominator = {j: min(r, D // j) for j in range(1, D + 1)}
    den_deg = sum(j * e for j, e in denominator.items())
    max_deg = den_deg + max(0, _best_excess(D, r))
    truncation = max_deg + den_deg + guard
    ratio = QSeries.from_dense(
        "q", _ratio_rD_dense(r, D, truncation), truncation
    )
    return clear_denominator(ratio, denominator, max_deg, guard)


# -- functional identities -------------------------------------------------


def _q_into(variables, qdense, exps_rest, truncation):
    """Embed a dense q-list as a multivariate series times a monomial."""
    coeffs = {}
    for a, c in enumerate(qdense):
        if c and a <= truncation[0]:
            coeffs[(a,) + exps_rest] = c
    return QSeries(variables, truncation, coeffs)


def q_surface(nq: int, ns: int) -> QSeries:
    """Q(q, s) = sum_r Z(q)^r s^r, built termwise."""
    variables = ("q", "s")
    trunc = (nq, ns)
    total = QSeries.zero(variables, trunc)
    for r in range(ns + 1):
        total = total + _q_into(variables, _z_pow_dense(r, nq), (r,), trunc)
    return total


def verify_q_identity(nq: int, ns: int) -> bool:
    """Check Q(q,s) * (1 - s Z(q)) = 1 by building both sides separately."""
    variables = ("q", "s")
    trunc = (nq, ns)
    lhs = q_surface(nq, ns)
    one = QSeries.one(variables, trunc)
    s_z = _q_into(variables, list(_z_dense(nq)), (1,), trunc)
    rhs = ps_inv(one - s_z)
    return lhs == rhs


def fq_surface(nq: int, ns: int, nv: int) -> QSeries:
    """FQ(q, s, v) = sum_{r, D} FQ_{r,D}(q) s^r v^D, built termwise."""
    variables = ("q", "s", "v")
    trunc = (nq, ns, nv)
    coeffs = {}
    for D in range(nv + 1):
        coeffs[(0, 0, D)] = 1 if D == 0 else 0
        for r in range(1, ns + 1):
            for a, c in enumerate(kernels.mul_trunc(
                _ratio_rD_dense(r, D, nq), _z_pow_dense(r, nq), nq
            )):
                if c:
                    coeffs[(a, r, D)] = c
    coeffs = {e: c for e, c in coeffs.items() if c}
    return QSeries(variables, trunc, coeffs)


def _fz_qv(nq: int, nv: int, variables, trunc, normalized=False) -> QSeries:
    """FZ(q, v) = sum_D FZ_D(q) v^D embedded into a larger variable list;
    with ``normalized`` the D-th coefficient is divided by Z."""
    out = QSeries.zero(variables, trunc)
    pos_v = variables.index("v")
    for D in range(nv + 1):
        dense = (
            fz_ratio_D(D, nq).dense() if normalized else fz_D(D, nq).dense()
        )
        exps_rest = [0] * (len(variables) - 1)
        exps_rest[pos_v - 1] = D
        out = out + _q_into(variables, dense, tuple(exps_rest), trunc)
    return out


def verify_fq_functional(nq: int, ns: int, nv: int) -> bool:
    """Check FQ(q,s,v) * (1 - FZ(q,v) s) = 1 with both sides independent."""
    variables = ("q", "s", "v")
    trunc = (nq, ns, nv)
    lhs = fq_surface(nq, ns, nv)
    one = QSeries.one(variables, trunc)
    fz = _fz_qv(nq, nv, variables, trunc)
    s = QSeries.monomial(variables, trunc, (0, 1, 0))
    rhs = ps_inv(one - ps_mul(fz, s))
    return lhs == rhs


def binomial_weighted_derivative(series: QSeries, order: int) -> QSeries:
    """Apply (s^l / l!) d^l/ds^l termwise: s^r picks up a factor C(r, l).

    Exact integer weights, no intermediate rationals and no coefficient
    loss at the top s-order.
    """
    pos = series.variables.index("s")
    out = {}
    for exps, c in series.coefficients.items():
        w = comb(exps[pos], order)
        if w:
            out[exps] = c * w
    return QSeries(series.variables, series.truncation, out)


def verify_exponential_identity(nq: int, ns: int, nv: int) -> bool:
    """Check the exponential-operator expression for FQ(q,s,v).

    The exponential of the normalized gap series, expanded in v with the
    number of factors tracked, turns each product of l gap factors into the
    operator (s^l / l!) d^l/ds^l applied to Q(q,s).  Tracking l (rather than
    the v-degree) is forced by the v^2 coefficient already mixing one- and
    two-factor terms; divided factorials pair with falling factorials into
    binomials, keeping everything integral.
    """
    variables = ("q", "s", "v")
    trunc = (nq, ns, nv)
    lhs = fq_surface(nq, ns, nv)
    gaps = _fz_qv(nq, nv, variables, trunc, normalized=True) - QSeries.one(
        variables, trunc
    )
    q_big = QSeries(
        variables,
        trunc,
        {(a, r, 0): c for (a, r), c in q_surface(nq, ns).coefficients.items()},
    )
    rhs = QSeries.zero(variables, trunc)
    power = QSeries.one(variables, trunc)
    for order in range(nv + 1):
        if order:
            power = ps_mul(power, gaps)
            if power.is_zero():
                break
        rhs = rhs + ps_mul(power, binomial_weighted_derivative(q_big, order))
    return lhs == rhs


def verify_fq2_example(nq: int, ns: int) -> bool:
    """Check the closed expression for the series of rank-r counts of
    2-in-n coloured nestings against the coloured oracle and against the
    displayed second-order differential operator applied to Q(q,s)."""
    variables = ("q", "s")
    trunc = (nq, ns)

    oracle = {}
    for r in range(1, ns + 1):
        for n in range(2, nq + 1):
            c = count_coloured_flags(r, (2, n))
            if c:
                oracle[(n, r)] = c
    oracle_series = QSeries(variables, trunc, oracle)

    inv_1q = kernels.inv_trunc([1, -1], nq)
    closed = {}
    for r in range(ns + 1):
        qr = _z_pow_dense(r, nq)
        qr1 = _z_pow_dense(r - 1, nq) if r >= 1 else [0] * (nq + 1)
        qr2 = _z_pow_dense(r - 2, nq) if r >= 2 else [0] * (nq + 1)
        qr1_over = kernels.mul_trunc(qr1, inv_1q, nq)
        for a in range(nq + 1):
            val = 2 * r * (qr[a] - qr1_over[a]) + comb(r, 2) * (
                qr[a] - 2 * qr1[a] + qr2[a]
            )
            if val:
                closed[(a, r)] = val
    closed_series = QSeries(variables, trunc, closed)

    # (s^2 - 2s/(1-q) + (2s(1-s+s^2) - 2s^2/(1-q)) d/ds
    #      + (s^2 (1-s)^2 / 2) d^2/ds^2) . Q(q, s)
    operator = {}
    for r in range(ns + 1):
        qr = _z_pow_dense(r, nq)
        shifts = (
            (2, 1),                   # s^2
            (0, 2 * r),               # 2 s d/ds
            (1, -2 * r),              # -2 s^2 d/ds
            (2, 2 * r),               # 2 s^3 d/ds
            (0, comb(r, 2)),          # s^2/2 d^2/ds^2
            (1, -r * (r - 1)),        # -s^3 d^2/ds^2
            (2, comb(r, 2)),          # s^4/2 d^2/ds^2
        )
        for a in range(nq + 1):
            c = qr[a]
            if not c:
                continue
            for ds, w in shifts:
                rr = r + ds
                if rr <= ns and w:
                    key = (a, rr)
                    operator[key] = operator.get(key, 0) + w * c
            # terms carrying the 1/(1-q) factor: -2s/(1-q) and -2s^2/(1-q) d/ds
            w1 = -2 - 2 * r
            rr = r + 1
            if rr <= ns:
                for b in range(nq + 1 - a):
                    cc = c * inv_1q[b]
                    if cc:
                        key = (a + b, rr)
                        operator[key] = operator.get(key, 0) + w1 * cc
    operator_series = QSeries(
        variables, trunc, {e: c for e, c in operator.items() if c}
    )

    return oracle_series == closed_series == operator_series
