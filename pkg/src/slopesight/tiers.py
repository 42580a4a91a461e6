"""The tiered slope system and the fixed query order built from it.

Tier 1 is {horizontal, vertical}, tier 2 is {1, -1}, and tier t >= 3 holds
the slopes +-k/D and +-D/k for odd 0 < k < D = 2**(t-2). Within a tier the
order is, for each odd k ascending: k/D, -D/k, D/k, -k/D. For tier 3 this
gives 1/2, -2, 2, -1/2, so the first eight slopes are

    0, vertical, 1, -1, 1/2, -2, 2, -1/2
"""
from __future__ import annotations

from fractions import Fraction
from itertools import count, islice

from .errors import InvalidTier
from .geometry import VERTICAL, Slope


def tier_slopes(t: int) -> list[Slope]:
    if t < 1:
        raise InvalidTier(f"tier index must be >= 1, got {t}")
    if t == 1:
        return [Fraction(0), VERTICAL]
    if t == 2:
        return [Fraction(1), Fraction(-1)]
    d = 2 ** (t - 2)
    out: list[Slope] = []
    for k in range(1, d, 2):
        out += [Fraction(k, d), Fraction(-d, k), Fraction(d, k), Fraction(-k, d)]
    return out


def iter_tiered_slopes():
    """Yield the tiered slopes forever, tier by tier."""
    for t in count(1):
        yield from tier_slopes(t)


def slope_sequence(count: int) -> list[Slope]:
    """First ``count`` slopes of the tiered order."""
    if count < 0:
        raise ValueError("count must be non-negative")
    return list(islice(iter_tiered_slopes(), count))


TABLE_ORDER = tuple(slope_sequence(8))


def _power_of_two_exponent(v: int) -> int | None:
    if v > 0 and v & (v - 1) == 0:
        return v.bit_length() - 1
    return None


def tier_of(s: Slope) -> int | None:
    """Tier containing ``s``, or ``None`` when the slope is outside the system."""
    if s is VERTICAL or s == 0:
        return 1
    m = abs(Fraction(s))
    if m == 1:
        return 2
    small, big = sorted((m.numerator, m.denominator))
    # one part must be 2**(t-2), the other odd and smaller
    e = _power_of_two_exponent(big)
    if e is None or e < 1 or small % 2 == 0:
        return None
    return e + 2
