"""Closed motivic formulas for punctual Hilbert schemes, their
Hilbert-Samuel strata, and nestings with smallest part 2 or 3.

All classes live in Z[L] and every closed branch formula is asserted
against the stratification complement, so the module is self-checking on
construction of the series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .series import LEFSCHETZ as L
from .series import LPoly, lpoly_eval_at_one, projective_space

P1 = projective_space(1)
P2 = projective_space(2)

__all__ = [
    "HSVector",
    "StrataMotives",
    "BASE_NESTED_MOTIVES",
    "GLOBAL_PLANE_MOTIVES",
    "a_coefficients",
    "component_count",
    "gottsche_punctual",
    "hs_dimension",
    "hs_motive_exponent",
    "motive_2n",
    "motive_3n",
    "motive_Y1112",
    "motive_strata",
    "series_2bullet",
    "series_3bullet",
]


@lru_cache(maxsize=None)
def gottsche_punctual(order: int):
    """Motives of the punctual Hilbert schemes of a surface point,
    as coefficients of prod_{j>=1} 1/(1 - L^(j-1) t^j) up to t^order."""
    coeffs = [LPoly((1,))] + [LPoly()] * order
    for j in range(1, order + 1):
        weight = L ** (j - 1)
        for n in range(j, order + 1):
            coeffs[n] = coeffs[n] + weight * coeffs[n - j]
    return tuple(coeffs)


@dataclass(frozen=True)
class StrataMotives:
    """Motives of the curvilinear locus and of the strata of non-curvilinear
    ideals split by the second Hilbert-Samuel value."""

    curvilinear: LPoly
    h1: LPoly
    h2: LPoly
    h2_split: tuple  # (one repeated root, two distinct roots)
    h3: LPoly

    def total(self) -> LPoly:
        return self.curvilinear + self.h1 + self.h2 + self.h3


def motive_strata(n: int) -> StrataMotives:
    """Stratification of the length-n punctual Hilbert scheme; strata below
    their existence threshold are zero."""
    if n < 2:
        raise ValueError("the stratification needs n >= 2")
    curvilinear = P1 * L ** (n - 2)
    if n == 4:
        h1 = P2
    elif n >= 5:
        h1 = P1 * L ** (n - 3)
    else:
        h1 = LPoly()
    if n >= 5:
        k = n // 2
        if n % 2 == 0:
            split = (
                (1 + (k - 2) * L) * P1 * L ** (n - 5),
                (k - 2) * P1 * L ** (n - 3),
            )
        else:
            split = (
                (1 + (k - 2) * L) * P1 * L ** (n - 5),
                (1 + (k - 2) * P1) * L ** (n - 3),
            )
        h2 = split[0] + split[1]
    else:
        split = (LPoly(), LPoly())
        h2 = LPoly()
    h3 = gottsche_punctual(n)[n] - curvilinear - h1 - h2
    if n >= 5:
        closed = _h3_closed(n)
        if closed != h3:
            raise AssertionError(
                f"closed complement formula disagrees at n={n}: "
                f"{closed} vs {h3}"
            )
    return StrataMotives(curvilinear, h1, h2, split, h3)


def _h3_closed(n: int) -> LPoly:
    hilb = gottsche_punctual(n)[n]
    k = n // 2
    if n % 2 == 0:
        return hilb - (1 + (k - 2) * P1 * L + P1 * L**2) * P1 * L ** (n - 5)
    return hilb - (P2 + (k - 2) * P1 * P1 * L + P1 * P1 * L**2) * L ** (n - 5)


def motive_2n(n: int) -> LPoly:
    """Motive of the punctual nested Hilbert scheme with sizes (2, n)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return P1 * (gottsche_punctual(n)[n] - L ** (n - 1))


def motive_3n(n: int) -> LPoly:
    """Motive of the punctual nested Hilbert scheme with sizes (3, n)."""
    if n < 3:
        raise ValueError("needs n >= 3")
    if n == 3:
        return LPoly((1, 1, 1))
    if n == 4:
        return 1 + L * (1 + L) * (2 + L)
    hilb = gottsche_punctual(n)[n]
    k_term = LPoly(((n - 4) // 2,)) * L**2
    sign = 1 if n % 2 == 0 else -1
    parity = (1 + sign) // 2
    inner = P2 * L + k_term + sign * L - (parity - L) * P1
    return P2 * hilb - L ** (n - 3) * inner * P1


def motive_Y1112(n: int) -> LPoly:
    """Motive of the stratum of (3, n)-nestings whose big ideal has second
    Hilbert-Samuel value 2 and small ideal is the fat point of length 3."""
    if n < 5:
        raise ValueError("needs n >= 5")
    k = n // 2
    return L ** (n - 4) * LPoly(
        (1, 3 * k - n + 1, k + n - 6, 2 * ((n - 5) // 2))
    )


def strata_assembly_3n(n: int) -> LPoly:
    """Reassemble the (3, n) motive from its stratification pieces."""
    if n < 5:
        raise ValueError("needs n >= 5")
    strata = motive_strata(n)
    curvilinear_3 = P1 * L  # curvilinear locus of the length-3 punctual scheme
    return (
        gottsche_punctual(n)[n]
        + strata.h1 * L
        + motive_Y1112(n)
        + strata.h3 * curvilinear_3
    )


def series_2bullet(order: int):
    """Generating series of the (2, n) motives, built both termwise and from
    the closed rational expression, asserted equal."""
    termwise = [LPoly()] * 2 + [motive_2n(n) for n in range(2, order + 1)]
    hilb = gottsche_punctual(order)
    geom = [L**n for n in range(order + 1)]  # 1/(1 - L t)
    closed = []
    for n in range(order + 1):
        tail = (L - 1) * geom[n - 1] - geom[n] if n >= 1 else -geom[0]
        closed.append(P1 * hilb[n] + P1 * tail)
    if closed != termwise:
        raise AssertionError("closed form disagrees with termwise build")
    return tuple(termwise)


def series_3bullet(order: int):
    """Generating series of the (3, n) motives, built both termwise and from
    the closed rational expression, asserted equal."""
    termwise = [LPoly()] * 3 + [motive_3n(n) for n in range(3, order + 1)]
    termwise = termwise[: order + 1]
    hilb = gottsche_punctual(order)
    h_coeffs = {
        0: P2,
        1: -(L**3 - 1),
        2: -(L**3 - 1) * P1,
        3: -(L**2 - L**5),
        4: -(L**2),
        6: L**3 * (L**2 - 1),
        7: -(L**4) * (L**2 - 1),
    }
    # 1 / ((1 - L t)(1 - L^2 t^2)) expanded in t
    inv = [LPoly()] * (order + 1)
    inv[0] = LPoly((1,))
    for n in range(1, order + 1):
        acc = L * inv[n - 1]
        if n >= 2:
            acc = acc + L**2 * inv[n - 2]
            if n >= 3:
                acc = acc - L**3 * inv[n - 3]
        inv[n] = acc
    closed = []
    for n in range(order + 1):
        acc = P2 * hilb[n]
        for d, h in h_coeffs.items():
            if d <= n:
                acc = acc - h * inv[n - d]
        closed.append(acc)
    if closed != termwise:
        raise AssertionError("closed form disagrees with termwise build")
    return tuple(termwise)


def a_coefficients(n: int):
    """Second- and third-from-top coefficients of the punctual Hilbert
    scheme motive as a polynomial in L."""
    if n <= 3:
        raise ValueError("needs n > 3")
    return (n // 2, n * (n - 6) // 12 + (n - 1) // 2 + 1)


def component_count(kind: str, n: int) -> int:
    """Number of top-dimensional irreducible components of the (2, n) or
    (3, n) punctual nested Hilbert scheme."""
    if n < 4:
        raise ValueError("needs n >= 4")
    if kind == "2n":
        return n // 2
    if kind == "3n":
        return n * (n - 6) // 12 + (n - 1) // 2 + 1
    raise ValueError("kind must be '2n' or '3n'")


@dataclass(frozen=True)
class HSVector:
    """A Hilbert-Samuel dimension vector (1, h_1, ..., h_t).

    Admissible vectors start with the staircase (1, 2, ..., d) for a unique
    d >= 1, drop below at index d, and are weakly decreasing from there on.
    """

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values or values[0] != 1:
            raise ValueError("a Hilbert-Samuel vector starts with 1")
        if any(v <= 0 for v in values):
            raise ValueError("stored entries are positive")
        d = self.staircase_length
        for i in range(d, len(values) - 1):
            if values[i] < values[i + 1]:
                raise ValueError("entries must weakly decrease past the staircase")

    @property
    def staircase_length(self) -> int:
        d = 0
        while d < len(self.values) and self.values[d] == d + 1:
            d += 1
        if d < len(self.values) and self.values[d] > d + 1:
            raise ValueError("entries may never exceed the staircase")
        return d

    @property
    def size(self) -> int:
        return sum(self.values)

    def entry(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0


def hs_dimension(h: HSVector) -> int:
    """Dimension of the locus of fat points with this Hilbert-Samuel vector:
    |h| - d - sum_{i >= d} binom(h_{i-1} - h_i, 2)."""
    d = h.staircase_length
    total = h.size - d
    for i in range(d, len(h.values) + 1):
        total -= comb(h.entry(i - 1) - h.entry(i), 2)
    return total


def hs_motive_exponent(h: HSVector) -> int:
    """Power of L relating the stratum class to its homogeneous sublocus:
    binom(d, 2) - sum_{i >= d} ((h_{i-1} - h_i)(h_{i-1} + h_i - 2h_{i+1} - 1)/2
    - h_{i+1})."""
    d = h.staircase_length
    total = comb(d, 2)
    for i in range(d, len(h.values) + 1):
        a = h.entry(i - 1)
        b = h.entry(i)
        c = h.entry(i + 1)
        total -= (a - b) * (a + b - 2 * c - 1) // 2 - c
    return total


def hs_homogeneous_dimension(h: HSVector) -> int:
    """Dimension of the homogeneous (torus-fixed) sublocus of the stratum."""
    d = h.staircase_length
    return sum(
        (h.entry(i - 1) - h.entry(i) + 1) * (h.entry(i) - h.entry(i + 1))
        for i in range(d, len(h.values) + 1)
    )


#: Registered small nested motives (no general engine for three-step
#: nestings; the (2, 3, 4) entry is a recorded constant).
BASE_NESTED_MOTIVES = {
    (0, 2): P1,
    (1, 3): P2,
    (2, 4): LPoly((1, 2, 3, 2)),
    (3, 5): LPoly((1, 2, 4, 4, 2)),
    (0, 1, 2): P1,
    (1, 2, 3): P1 * P1,
    (2, 3, 4): P1 * LPoly((1, 2, 2)),
}

#: Global nested classes of the affine plane, recorded for reference only;
#: their Euler specialization (L -> 1) must match the punctual flag counts
#: because the plane has Euler characteristic 1.
GLOBAL_PLANE_MOTIVES = {
    (0, 2): P1 * L**3,
    (1, 3): LPoly((-1, -1, 0, 2, 3)) * L**2,
}


def euler_of_motive(p: LPoly) -> int:
    return lpoly_eval_at_one(p)
