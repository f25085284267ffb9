"""Global invariants of surfaces from punctual ones.

At the Euler-characteristic level the power structure on unit series is
ordinary exponentiation, so the two-variable punctual table raised to the
surface Euler characteristic gives the global nested counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import count_coloured_flags
from .quot import fq_rD
from .series import QSeries, ps_pow

__all__ = [
    "DEL_PEZZO_TARGET",
    "SurfaceProfile",
    "SurfaceResolutionError",
    "globalize",
    "punctual_nested_table",
    "resolve_dp6_exponent",
]

#: Published rank-6 global count on the sixth del Pezzo surface for the
#: size vector (6, 12); used to pin down that surface's Euler characteristic
#: empirically rather than trusting a naming convention.
DEL_PEZZO_TARGET = 120806108165466


class SurfaceResolutionError(RuntimeError):
    """No (or no unique) exponent reproduces the published value."""


@dataclass(frozen=True)
class SurfaceProfile:
    """A surface, reduced to the only datum the Euler level needs."""

    name: str
    euler_characteristic: int

    def __post_init__(self):
        if self.euler_characteristic < 0:
            raise ValueError(
                "only nonnegative Euler characteristics are supported by the "
                "exponentiation path"
            )


@lru_cache(maxsize=None)
def punctual_nested_table(rank: int, max1: int, max2: int) -> QSeries:
    """Two-variable table of r-coloured nested counts: the coefficient of
    q1^a q2^b is the number of r-coloured nested pairs of sizes (a, b).

    Built from the colouring oracle, then cross-checked against the series
    engine on every diagonal it covers.
    """
    if max1 > max2:
        raise ValueError("need max1 <= max2")
    coeffs = {}
    for a in range(max1 + 1):
        for b in range(a, max2 + 1):
            c = count_coloured_flags(rank, (a, b))
            if c:
                coeffs[(a, b)] = c
    table = QSeries(("q1", "q2"), (max1, max2), coeffs)
    for gap in range(max2 - max1 + 1):
        engine_side = fq_rD(rank, gap, max1)
        for a in range(max1 + 1):
            if a + gap > max2:
                break
            if engine_side[(a,)] != table[(a, a + gap)]:
                raise AssertionError(
                    f"oracle/engine mismatch at sizes ({a}, {a + gap}), "
                    f"rank {rank}"
                )
    return table


def globalize(punctual: QSeries, surface: SurfaceProfile) -> QSeries:
    """Raise a punctual series to the surface Euler characteristic."""
    if punctual.constant_term() != 1:
        raise ValueError("punctual series must have constant term 1")
    return ps_pow(punctual, surface.euler_characteristic)


def resolve_dp6_exponent(candidates=range(2, 13)) -> int:
    """Euler characteristic of the sixth del Pezzo surface, resolved by
    scanning which exponent reproduces the published rank-6 count of
    (6, 12)-nestings.  Raises unless exactly one candidate matches."""
    table = punctual_nested_table(6, 6, 12)
    matches = []
    for e in candidates:
        powered = ps_pow(table, e)
        if powered[(6, 12)] == DEL_PEZZO_TARGET:
            matches.append(e)
    if len(matches) != 1:
        raise SurfaceResolutionError(
            f"expected exactly one matching exponent, found {matches}"
        )
    return matches[0]
