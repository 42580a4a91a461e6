"""Exact rational plane geometry: slopes, points, lines and the square's symmetries.

Scalars are :class:`fractions.Fraction`, which already keeps the canonical
reduced form with a positive denominator. A slope is either a ``Fraction`` or
the :data:`VERTICAL` singleton.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import DocumentError, ZeroDenominator

Rational = Fraction


class _Vertical:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "VERTICAL"

    def __str__(self):
        return "vertical"

    def __reduce__(self):
        return (_Vertical, ())


VERTICAL = _Vertical()
Slope = Union[Fraction, _Vertical]


def make_rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_slope(value) -> Slope:
    """Coerce ints, Fractions, ``VERTICAL`` or slope text into a slope."""
    if value is VERTICAL:
        return VERTICAL
    if isinstance(value, str):
        return parse_slope(value)
    if isinstance(value, float):
        raise TypeError("float slopes are not exact; pass a Fraction or text")
    return Fraction(value)


def is_vertical(s: Slope) -> bool:
    return s is VERTICAL


def slope_sort_key(s: Slope):
    # vertical sorts after every finite slope
    return (1, Fraction(0)) if s is VERTICAL else (0, s)


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return make_rational(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise DocumentError(f"not a rational: {text!r}") from None


def format_slope(s: Slope) -> str:
    return "vertical" if s is VERTICAL else format_rational(s)


def parse_slope(text: str) -> Slope:
    if text.strip().lower() == "vertical":
        return VERTICAL
    return parse_rational(text)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class VerticalLine:
    """The line ``x = x0``."""

    x0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x0", Fraction(self.x0))

    @property
    def slope(self) -> Slope:
        return VERTICAL


@dataclass(frozen=True)
class SlantLine:
    """The line ``y = m*x + b``."""

    m: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def slope(self) -> Slope:
        return self.m


Line = Union[VerticalLine, SlantLine]


def slope_of(line: Line) -> Slope:
    return line.slope


def line_sort_key(line: Line):
    if isinstance(line, VerticalLine):
        return (slope_sort_key(VERTICAL), line.x0)
    return (slope_sort_key(line.m), line.b)


def line_through(p: Point, s: Slope) -> Line:
    if s is VERTICAL:
        return VerticalLine(p.x)
    return SlantLine(s, p.y - s * p.x)


def contains(line: Line, p: Point) -> bool:
    if isinstance(line, VerticalLine):
        return p.x == line.x0
    return p.y == line.m * p.x + line.b


class Intersection(NamedTuple):
    """Result of :func:`intersect`; ``point`` is set only when ``kind == "at"``."""

    kind: str
    point: Point | None = None


PARALLEL = Intersection("parallel")
COINCIDENT = Intersection("coincident")


def intersect(a: Line, b: Line) -> Intersection:
    if a == b:
        return COINCIDENT
    if slope_of(a) == slope_of(b):
        return PARALLEL
    if isinstance(b, VerticalLine):
        a, b = b, a
    if isinstance(a, VerticalLine):
        x = a.x0
        return Intersection("at", Point(x, b.m * x + b.b))
    x = (b.b - a.b) / (a.m - b.m)
    return Intersection("at", Point(x, a.m * x + a.b))


class Dihedral(enum.Enum):
    """Symmetries of the axis-aligned square, as integer 2x2 matrices (a, b, c, d).

    A point (x, y) maps to (a*x + b*y, c*x + d*y). ``REFLECT_H`` flips across
    the horizontal axis (y -> -y), ``REFLECT_V`` across the vertical one.
    The two diagonal reflections close the set under composition.
    """

    IDENTITY = (1, 0, 0, 1)
    ROT90 = (0, -1, 1, 0)
    ROT180 = (-1, 0, 0, -1)
    ROT270 = (0, 1, -1, 0)
    REFLECT_H = (1, 0, 0, -1)
    REFLECT_V = (-1, 0, 0, 1)
    REFLECT_DIAG = (0, 1, 1, 0)
    REFLECT_ANTIDIAG = (0, -1, -1, 0)

    def __mul__(self, other: Dihedral) -> Dihedral:
        a, b, c, d = self.value
        e, f, g, h = other.value
        return Dihedral((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def inverse(self) -> Dihedral:
        # orthogonal matrices: inverse is the transpose
        a, b, c, d = self.value
        return Dihedral((a, c, b, d))

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_label(cls, label: str) -> Dihedral:
        try:
            return cls[label.strip().upper().replace("-", "_")]
        except KeyError:
            raise ValueError(f"unknown transform {label!r}") from None


# the six maps used in the rotation/reflection invariance argument
LEMMA_TRANSFORMS = (
    Dihedral.IDENTITY,
    Dihedral.ROT90,
    Dihedral.ROT180,
    Dihedral.ROT270,
    Dihedral.REFLECT_H,
    Dihedral.REFLECT_V,
)

ORIGIN = Point(0, 0)


@dataclass(frozen=True)
class Transform:
    op: Dihedral
    center: Point = ORIGIN

    def __call__(self, p: Point) -> Point:
        return apply_transform(self, p)

    def inverse(self) -> Transform:
        return Transform(self.op.inverse(), self.center)

    def compose(self, other: Transform) -> Transform:
        """``self`` after ``other``; both must share a center."""
        if self.center != other.center:
            raise ValueError("can only compose transforms about the same center")
        return Transform(self.op * other.op, self.center)


def apply_transform(t: Transform, p: Point) -> Point:
    a, b, c, d = t.op.value
    dx, dy = p.x - t.center.x, p.y - t.center.y
    return Point(t.center.x + a * dx + b * dy, t.center.y + c * dx + d * dy)


def transform_slope(t: Transform | Dihedral, s: Slope) -> Slope:
    op = t.op if isinstance(t, Transform) else t
    a, b, c, d = op.value
    # image of the direction (1, m), or (0, 1) for vertical
    if s is VERTICAL:
        dx, dy = Fraction(b), Fraction(d)
    else:
        dx, dy = a + b * s, c + d * s
    if dx == 0:
        return VERTICAL
    return dy / dx


def transform_line(t: Transform, line: Line) -> Line:
    if isinstance(line, VerticalLine):
        anchor = Point(line.x0, 0)
    else:
        anchor = Point(0, line.b)
    return line_through(apply_transform(t, anchor), transform_slope(t, slope_of(line)))
