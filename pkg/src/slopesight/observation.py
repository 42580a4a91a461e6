"""Observations of a hidden configuration and the candidate locations they leave."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateSlope,
    EmptySlopeList,
    InconsistentPair,
    InvalidConfiguration,
    UnboundedPotential,
)
from .geometry import (
    Line,
    Point,
    Slope,
    as_slope,
    intersect,
    line_sort_key,
    line_through,
    slope_of,
)


def _as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(*p)


@dataclass(frozen=True, order=True)
class Configuration:
    """A set of distinct points, stored in lexicographic order."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(sorted(_as_point(p) for p in self.points))
        if not pts:
            raise InvalidConfiguration("a configuration needs at least one point")
        if len(set(pts)) != len(pts):
            raise InvalidConfiguration("configuration points must be distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, *points) -> Configuration:
        return cls(tuple(points))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return _as_point(p) in self.points

    def __repr__(self):
        inner = ", ".join(f"({p.x}, {p.y})" for p in self.points)
        return f"Configuration({inner})"


@dataclass(frozen=True)
class Observation:
    """Per queried slope, the distinct lines of that slope through the hidden points.

    Entries keep query order; the lines of each entry are canonically sorted.
    """

    entries: tuple[tuple[Slope, tuple[Line, ...]], ...]

    def __post_init__(self):
        entries = []
        seen = set()
        for s, lines in self.entries:
            s = as_slope(s)
            if s in seen:
                raise DuplicateSlope(f"slope {s} observed twice")
            seen.add(s)
            lines = tuple(sorted(set(lines), key=line_sort_key))
            if not lines:
                raise InvalidConfiguration(f"no lines recorded for slope {s}")
            if any(slope_of(l) != s for l in lines):
                raise InvalidConfiguration(f"line with the wrong slope under {s}")
            entries.append((s, lines))
        object.__setattr__(self, "entries", tuple(entries))

    @property
    def slopes(self) -> tuple[Slope, ...]:
        return tuple(s for s, _ in self.entries)

    def lines_for(self, s: Slope) -> tuple[Line, ...]:
        for slope, lines in self.entries:
            if slope == s:
                return lines
        raise KeyError(s)

    def prefix(self, k: int) -> Observation:
        return Observation(self.entries[:k])

    def __len__(self):
        return len(self.entries)


def _check_slopes(slopes: Sequence) -> list[Slope]:
    slopes = [as_slope(s) for s in slopes]
    if not slopes:
        raise EmptySlopeList("at least one slope is required")
    if len(set(slopes)) != len(slopes):
        raise DuplicateSlope("slopes must be pairwise distinct")
    return slopes


def observe(c: Configuration, slopes: Iterable) -> Observation:
    slopes = _check_slopes(list(slopes))
    return Observation(
        tuple((s, tuple({line_through(p, s) for p in c.points})) for s in slopes)
    )


def potential_points(o: Observation) -> tuple[Point, ...] | None:
    """Points lying on an observed line of every slope, or ``None`` if unbounded.

    The two smallest bundles are intersected pairwise and the candidates are
    filtered through the rest.
    """
    if len(o.entries) < 2:
        return None
    bundles = sorted(o.entries, key=lambda e: len(e[1]))
    (_, first), (_, second) = bundles[0], bundles[1]
    rest = [(s, frozenset(lines)) for s, lines in bundles[2:]]
    found = set()
    for a in first:
        for b in second:
            p = intersect(a, b).point
            if p is not None and all(line_through(p, s) in ls for s, ls in rest):
                found.add(p)
    return tuple(sorted(found))


def phantoms(o: Observation, c: Configuration) -> tuple[Point, ...]:
    """Potential points that are not actual points of ``c``."""
    pot = potential_points(o)
    if pot is None:
        raise UnboundedPotential("fewer than two slopes observed")
    pot_set = set(pot)
    missing = [p for p in c.points if p not in pot_set]
    if missing:
        raise InconsistentPair(f"actual point {missing[0]} is not a potential point")
    actual = set(c.points)
    return tuple(p for p in pot if p not in actual)


def no_phantom_revealed(c: Configuration, slopes: Sequence) -> bool:
    slopes = list(slopes)
    if len(slopes) < 2:
        raise UnboundedPotential("at least two slopes are needed")
    return not phantoms(observe(c, slopes), c)
