"""
Rotations, reflections and slope-by-slope search
================================================

Rotating or reflecting a configuration together with its slopes keeps the
tiers and the verdict. A searcher that queries one slope at a time stops as
soon as the answers admit a single configuration.
"""
from slopesight import (
    LEMMA_TRANSFORMS,
    TABLE_ORDER,
    Configuration,
    HiddenConfiguration,
    Point,
    Transform,
    adaptive_search,
    determinacy,
    observe,
    tier_of,
    transform_slope,
)

c = Configuration.of((0, 0), (1, 1), (2, 1))
slopes = list(TABLE_ORDER[:3])
center = Point(1, 1)
for op in LEMMA_TRANSFORMS:
    t = Transform(op, center)
    tc = Configuration(tuple(t(p) for p in c.points))
    ts = [transform_slope(t, s) for s in slopes]
    verdict = determinacy(observe(tc, ts), 3).kind
    print(f"{op.label:10s} slopes {[str(s) for s in ts]} tiers {[tier_of(s) for s in ts]} -> {verdict}")

oracle = HiddenConfiguration(Configuration.of((0, 2), (1, 0), (2, 3), (3, 1)))
result = adaptive_search(oracle, 4, TABLE_ORDER)
print("found", result.configuration, "after", result.slopes_used, "slopes:",
      [str(s) for s in oracle.queries])
