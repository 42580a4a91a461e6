"""Exhaustive census of unit-grid configurations and their required slope counts.

The universe for n points: every placement on an r x c integer grid
(r, c <= n) in which each row and each column holds at least one point.
Full row/column coverage makes the bounding grid minimal, so no placement is
counted under two shapes. For n = 1..4 this gives 1, 4, 24 and 196
placements.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .errors import OrderTooShort
from .geometry import Point, Slope, as_slope
from .observation import Configuration
from .solver import Semantics, required_slopes
from .tiers import TABLE_ORDER

# rows of the published census: n -> (placements, {slopes required: count})
TABLE_1 = {
    1: (1, {2: 1}),
    2: (4, {2: 2, 3: 2}),
    3: (24, {2: 2, 3: 9, 4: 13}),
    4: (196, {2: 3, 3: 23, 4: 104, 5: 66}),
}


@dataclass(frozen=True, order=True)
class GridShape:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid shapes need at least one row and column")


def grid_shapes(n: int) -> list[GridShape]:
    return [GridShape(r, c) for r in range(1, n + 1) for c in range(1, n + 1) if r * c >= n]


def shape_configurations(shape: GridShape, n: int) -> Iterator[Configuration]:
    """Placements of n points on ``shape`` occupying every row and column."""
    r, c = shape.rows, shape.cols
    cells = [(x, y) for x in range(c) for y in range(r)]
    for chosen in combinations(cells, n):
        if len({x for x, _ in chosen}) == c and len({y for _, y in chosen}) == r:
            yield Configuration(tuple(Point(x, y) for x, y in chosen))


def enumerate_grid_configurations(n: int) -> Iterator[Configuration]:
    if n < 1:
        raise ValueError("n must be at least 1")
    for shape in grid_shapes(n):
        yield from shape_configurations(shape, n)


def grid_coverage_count(r: int, c: int, n: int) -> int:
    """Number of n-subsets of an r x c grid meeting every row and column.

    Inclusion-exclusion over the sets of rows and columns left empty.
    """
    return sum(
        (-1) ** (i + j) * comb(r, i) * comb(c, j) * comb((r - i) * (c - j), n)
        for i in range(r + 1)
        for j in range(c + 1)
    )


def grid_configuration_count(n: int) -> int:
    return sum(grid_coverage_count(r, c, n) for r in range(1, n + 1) for c in range(1, n + 1))


@dataclass
class CensusReport:
    n: int
    total_examples: int
    histogram: dict[int, int]
    semantics: Semantics
    order: tuple[Slope, ...]
    per_configuration: list[tuple[Configuration, int]] = field(default_factory=list, repr=False)

    @property
    def max_required(self) -> int:
        return max(k for k, v in self.histogram.items() if v)


def _census_shape(args):
    shape, n, order, semantics = args
    return [(c, required_slopes(c, order, semantics)) for c in shape_configurations(shape, n)]


def default_jobs() -> int:
    return int(os.environ.get("SLOPESIGHT_JOBS", "1"))


def census(
    n: int,
    order: Sequence = TABLE_ORDER,
    semantics: Semantics = Semantics.UNIQUE,
    jobs: int | None = None,
) -> CensusReport:
    """Histogram of required slope counts over every grid configuration of n points.

    Work is split by grid shape; results are merged in shape order, so the
    report is identical for every ``jobs`` value.
    """
    order = tuple(as_slope(s) for s in order)
    if len(order) < n + 1 or len(set(order[: n + 1])) != n + 1:
        raise OrderTooShort(f"order must start with {n + 1} distinct slopes for n={n}")
    jobs = default_jobs() if jobs is None else jobs
    tasks = [(shape, n, order, semantics) for shape in grid_shapes(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_census_shape, tasks))
    else:
        chunks = [_census_shape(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    hist = Counter(k for _, k in rows)
    return CensusReport(
        n=n,
        total_examples=len(rows),
        histogram=dict(sorted(hist.items())),
        semantics=semantics,
        order=order,
        per_configuration=rows,
    )


@dataclass
class TableComparison:
    """How a census run lines up with the published row for the same n."""

    n: int
    matches: bool
    expected_total: int
    expected_histogram: dict[int, int]
    other_semantics_histogram: dict[int, int] = field(default_factory=dict)
    # configurations whose required count differs between the two semantics
    discrepancies: list[tuple[Configuration, int, int]] = field(default_factory=list)


def compare_with_table(report: CensusReport) -> TableComparison | None:
    """Check ``report`` against the published row; ``None`` when there is none.

    Only runs that use the published slope order are comparable. On a mismatch
    the census is rerun under the other semantics and every configuration
    whose count differs between the two is listed.
    """
    if report.n not in TABLE_1 or report.order[: len(TABLE_ORDER)] != TABLE_ORDER[: len(report.order)]:
        return None
    total, hist = TABLE_1[report.n]
    ok = report.total_examples == total and report.histogram == hist
    cmp = TableComparison(report.n, ok, total, dict(hist))
    if ok:
        return cmp
    other = Semantics.NO_PHANTOM if report.semantics is Semantics.UNIQUE else Semantics.UNIQUE
    alt = census(report.n, report.order, other, jobs=1)
    cmp.other_semantics_histogram = alt.histogram
    alt_counts = dict(alt.per_configuration)
    cmp.discrepancies = [
        (c, k, alt_counts[c]) for c, k in report.per_configuration if alt_counts[c] != k
    ]
    return cmp
