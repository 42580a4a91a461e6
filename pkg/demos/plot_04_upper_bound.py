"""
n + 1 slopes are always enough
==============================

A phantom point would need one actual point on each of its n + 1 lines,
which n points cannot supply. We check this on random rational
configurations with random slopes.
"""
import random
from fractions import Fraction

from slopesight import Configuration, Point, Semantics, Unique, determinacy, observe

rng = random.Random(1)


def rational():
    return Fraction(rng.randint(-16, 16), rng.randint(1, 16))


ok = 0
for _ in range(200):
    n = rng.randint(1, 6)
    pts = set()
    while len(pts) < n:
        pts.add(Point(rational(), rational()))
    c = Configuration(tuple(pts))
    slopes = set()
    while len(slopes) < n + 1:
        slopes.add(rational())
    o = observe(c, sorted(slopes))
    ok += all(determinacy(o, n, s, c) == Unique(c) for s in Semantics)
print(f"{ok}/200 configurations determined by n + 1 random slopes")
