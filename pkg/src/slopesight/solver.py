"""Reconstruct every configuration consistent with an observation and decide determinacy.

Two notions of "the points are located" are supported:

* ``Semantics.UNIQUE``: exactly one n-point configuration generates the
  observation (points may be deduced, as in a case analysis).
* ``Semantics.NO_PHANTOM``: the candidate set is exactly the hidden
  configuration, with no potential point left over.

``NO_PHANTOM`` determinacy implies ``UNIQUE`` determinacy, not conversely.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Protocol, Sequence, Union

from .errors import (
    InconsistentPair,
    OracleInconsistent,
    OrderExhausted,
    UnboundedPotential,
)
from .geometry import Line, Point, Slope, as_slope, line_through
from .observation import Configuration, Observation, observe, potential_points


class Semantics(enum.Enum):
    UNIQUE = "unique"
    NO_PHANTOM = "nophantom"


@dataclass(frozen=True)
class Unique:
    configuration: Configuration
    kind = "unique"


@dataclass(frozen=True)
class Ambiguous:
    """More than one reading of the observation.

    Under ``UNIQUE`` semantics ``witnesses`` holds at least two consistent
    configurations. Under ``NO_PHANTOM`` it starts with the true configuration
    and ``phantoms`` is non-empty; a second witness is listed when one exists.
    """

    witnesses: tuple[Configuration, ...]
    exhaustive: bool
    count: int | None
    phantoms: tuple[Point, ...] = ()
    kind = "ambiguous"


@dataclass(frozen=True)
class Infeasible:
    kind = "infeasible"


@dataclass(frozen=True)
class Undecidable:
    reason: str = "unbounded potential"
    kind = "undecidable"


Verdict = Union[Unique, Ambiguous, Infeasible, Undecidable]


class _Search:
    """Backtracking over candidate points until every observed line is hit.

    Each candidate lies on exactly one observed line per slope, so a chosen
    set generates the observation iff it meets every observed line. Branching
    on line L with candidates c1..ck, branch i takes ci and forbids c1..c(i-1),
    which yields each set exactly once.
    """

    def __init__(self, o: Observation, candidates: Sequence[Point], n: int, limit: int | None):
        self.n = n
        self.limit = limit
        self.candidates = list(candidates)
        self.results: list[tuple[int, ...]] = []
        self.truncated = False

        line_ids: dict[tuple[int, Line], int] = {}
        self.line_slope: list[int] = []
        for si, (_, lines) in enumerate(o.entries):
            for line in lines:
                line_ids[(si, line)] = len(self.line_slope)
                self.line_slope.append(si)
        self.n_slopes = len(o.entries)
        # lines through each candidate, candidates on each line (both in canonical order)
        self.point_lines: list[tuple[int, ...]] = []
        self.line_points: list[list[int]] = [[] for _ in self.line_slope]
        for ci, p in enumerate(self.candidates):
            ids = tuple(line_ids[(si, line_through(p, s))] for si, (s, _) in enumerate(o.entries))
            self.point_lines.append(ids)
            for li in ids:
                self.line_points[li].append(ci)

    def run(self):
        n_lines = len(self.line_slope)
        self.hits = [0] * n_lines
        self.uncovered = set(range(n_lines))
        self.uncovered_per_slope = [0] * self.n_slopes
        for si in self.line_slope:
            self.uncovered_per_slope[si] += 1
        self.banned = [False] * len(self.candidates)
        self._step([])

    def _full(self) -> bool:
        if self.limit is not None and len(self.results) >= self.limit:
            self.truncated = True
            return True
        return False

    def _choose(self, ci: int):
        for li in self.point_lines[ci]:
            if self.hits[li] == 0:
                self.uncovered.discard(li)
                self.uncovered_per_slope[self.line_slope[li]] -= 1
            self.hits[li] += 1

    def _unchoose(self, ci: int):
        for li in self.point_lines[ci]:
            self.hits[li] -= 1
            if self.hits[li] == 0:
                self.uncovered.add(li)
                self.uncovered_per_slope[self.line_slope[li]] += 1

    def _step(self, chosen: list[int]):
        budget = self.n - len(chosen)
        if not self.uncovered:
            self._complete(chosen, budget)
            return
        # each uncovered line of one slope needs its own point
        if max(self.uncovered_per_slope) > budget:
            return
        best_opts = None
        # fewest open candidates first; ties go to the lowest line id
        for li in sorted(self.uncovered):
            opts = [ci for ci in self.line_points[li] if not self.banned[ci]]
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if not opts:
                    return
        newly_banned = []
        for ci in best_opts:
            if self._full():
                break
            chosen.append(ci)
            self.banned[ci] = True
            self._choose(ci)
            self._step(chosen)
            self._unchoose(ci)
            chosen.pop()
            # later branches exclude this candidate
            newly_banned.append(ci)
        for ci in newly_banned:
            self.banned[ci] = False

    def _complete(self, chosen: list[int], budget: int):
        # every line is hit; pad with any remaining candidates
        free = [ci for ci in range(len(self.candidates)) if not self.banned[ci]]
        for extra in combinations(free, budget):
            if self._full():
                return
            self.results.append(tuple(sorted(chosen + list(extra))))


def consistent_configurations(
    o: Observation, n: int, limit: int | None = None
) -> tuple[list[Configuration], bool]:
    """All n-point configurations whose observation under ``o``'s slopes equals ``o``.

    Returns ``(configurations, exhaustive)``; ``exhaustive`` is False when the
    enumeration stopped at ``limit``. Configurations are deduplicated and sorted.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    candidates = potential_points(o)
    if candidates is None:
        raise UnboundedPotential("fewer than two slopes observed")
    search = _Search(o, candidates, n, limit)
    search.run()
    configs = sorted({Configuration(tuple(candidates[i] for i in r)) for r in search.results})
    return configs, not search.truncated


def _check_truth(o: Observation, truth: Configuration, n: int):
    if truth.n != n:
        raise InconsistentPair(f"truth has {truth.n} points, expected {n}")
    if observe(truth, o.slopes) != o:
        raise InconsistentPair("truth does not generate the observation")


def determinacy(
    o: Observation,
    n: int,
    semantics: Semantics = Semantics.UNIQUE,
    truth: Configuration | None = None,
    limit: int | None = 2,
):
    """Decide whether ``o`` pins down an n-point configuration.

    ``limit`` caps the witness search; the default of 2 is all determinacy
    needs. Pass ``None`` to count every consistent configuration.
    """
    if len(o) < 2:
        return Undecidable()
    if truth is not None:
        _check_truth(o, truth, n)
    if semantics is Semantics.NO_PHANTOM:
        if truth is None:
            raise ValueError("no-phantom semantics needs the true configuration")
        pot = potential_points(o)
        actual = set(truth.points)
        extra = tuple(p for p in pot if p not in actual)
        if not extra:
            return Unique(truth)
        configs, exhaustive = consistent_configurations(o, n, None if limit is None else max(limit, 2))
        others = [c for c in configs if c != truth]
        witnesses = (truth,) + tuple(others[:1])
        count = len(configs) if exhaustive else None
        return Ambiguous(witnesses, exhaustive, count, extra)

    if limit is not None:
        limit = max(limit, 2)
    configs, exhaustive = consistent_configurations(o, n, limit)
    if not configs:
        return Infeasible()
    if len(configs) == 1:
        return Unique(configs[0])
    return Ambiguous(tuple(configs), exhaustive, len(configs) if exhaustive else None)


def required_slopes(
    c: Configuration, order: Sequence, semantics: Semantics = Semantics.UNIQUE
) -> int:
    """Length of the shortest prefix (at least 2) of ``order`` that determines ``c``."""
    order = [as_slope(s) for s in order]
    if len(order) < 2:
        raise OrderExhausted("the order needs at least two slopes")
    full = observe(c, order)
    for k in range(2, len(order) + 1):
        verdict = determinacy(full.prefix(k), c.n, semantics, c)
        if isinstance(verdict, Unique):
            return k
    raise OrderExhausted(f"{len(order)} slopes do not determine {c}")


class SearchOracle(Protocol):
    def query(self, s: Slope) -> tuple[Line, ...]: ...


class HiddenConfiguration:
    """Oracle answering slope queries about a fixed hidden configuration."""

    def __init__(self, hidden: Configuration):
        self._hidden = hidden
        self.queries: list[Slope] = []

    def query(self, s: Slope) -> tuple[Line, ...]:
        self.queries.append(s)
        return observe(self._hidden, [s]).entries[0][1]


@dataclass
class SearchResult:
    configuration: Configuration
    slopes_used: int
    slopes: list = field(default_factory=list)


def adaptive_search(
    oracle: SearchOracle,
    n: int,
    order: Sequence,
    semantics: Semantics = Semantics.UNIQUE,
) -> SearchResult:
    """Query slopes of ``order`` one at a time until the answers locate the points.

    With ``NO_PHANTOM`` semantics the search stops once the candidate set has
    exactly n points; since the hidden points are always candidates, this
    needs no knowledge of the truth.
    """
    entries = []
    for s in order:
        s = as_slope(s)
        entries.append((s, tuple(oracle.query(s))))
        if len(entries) < 2:
            continue
        o = Observation(tuple(entries))
        if semantics is Semantics.NO_PHANTOM:
            pot = potential_points(o)
            if len(pot) < n:
                raise OracleInconsistent(f"only {len(pot)} candidate points for n={n}")
            if len(pot) == n:
                found = Configuration(pot)
                if observe(found, o.slopes) != o:
                    raise OracleInconsistent("candidates do not generate the answers")
                return SearchResult(found, len(entries), [e[0] for e in entries])
            continue
        configs, _ = consistent_configurations(o, n, limit=2)
        if not configs:
            raise OracleInconsistent(f"no {n}-point configuration matches the answers")
        if len(configs) == 1:
            return SearchResult(configs[0], len(entries), [e[0] for e in entries])
    raise OrderExhausted(f"order of {len(entries)} slopes did not locate the points")
