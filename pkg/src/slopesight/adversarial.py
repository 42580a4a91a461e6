"""The sharpness construction: n points whose common center is a phantom.

Point i sits on the line through the center with the i-th tiered slope, so
after the first n slopes the center lies on an observed line of every slope
without being occupied. Each point is placed at the primitive integer
direction of its slope (q, p for slope p/q) rather than at unit Euclidean
distance; only collinearity with the center matters, and this keeps every
coordinate rational.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import ORIGIN, VERTICAL, Point, Slope
from .observation import Configuration, observe, potential_points
from .solver import Semantics, Unique, determinacy, required_slopes
from .tiers import slope_sequence


def primitive_direction(s: Slope) -> Point:
    if s is VERTICAL:
        return Point(0, 1)
    return Point(s.denominator, s.numerator)


@dataclass(frozen=True)
class AdversarialInstance:
    n: int
    center: Point
    configuration: Configuration
    slopes: tuple[Slope, ...]


def adversarial_configuration(n: int, center: Point = ORIGIN) -> AdversarialInstance:
    if n < 1:
        raise ValueError("n must be at least 1")
    slopes = tuple(slope_sequence(n))
    points = tuple(center + primitive_direction(s) for s in slopes)
    return AdversarialInstance(n, center, Configuration(points), slopes)


@dataclass
class AdversarialReport:
    instance: AdversarialInstance
    phantom_at_center: bool
    nophantom_verdict_with_n: object
    unique_verdict_with_n: object
    verdict_with_n_plus_1: object
    nophantom_verdict_with_n_plus_1: object
    required_nophantom: int


def verify_adversarial(n: int, center: Point = ORIGIN) -> AdversarialReport:
    inst = adversarial_configuration(n, center)
    c = inst.configuration
    slopes = slope_sequence(n + 1)
    obs_n = observe(c, slopes[:n])
    obs_n1 = observe(c, slopes)
    pot = potential_points(obs_n)
    phantom = pot is not None and center in pot and center not in c
    return AdversarialReport(
        instance=inst,
        phantom_at_center=phantom,
        nophantom_verdict_with_n=determinacy(obs_n, n, Semantics.NO_PHANTOM, c),
        unique_verdict_with_n=determinacy(obs_n, n, Semantics.UNIQUE, c, limit=None),
        verdict_with_n_plus_1=determinacy(obs_n1, n, Semantics.UNIQUE, c),
        nophantom_verdict_with_n_plus_1=determinacy(obs_n1, n, Semantics.NO_PHANTOM, c),
        required_nophantom=required_slopes(c, slopes, Semantics.NO_PHANTOM),
    )


def is_sharp(report: AdversarialReport) -> bool:
    """True when the center is a phantom and one more slope removes all doubt."""
    return (
        report.phantom_at_center
        and isinstance(report.verdict_with_n_plus_1, Unique)
        and isinstance(report.nophantom_verdict_with_n_plus_1, Unique)
    )
