"""
Lines, potential points and phantoms
====================================

Three hidden points are observed through horizontal and vertical lines,
then through diagonals, and we watch the candidate set shrink.
"""
from fractions import Fraction

from slopesight import VERTICAL, Configuration, observe, phantoms, potential_points

# Three points, each in its own row and column: 3 x 3 = 9 grid crossings.
hidden = Configuration.of((0, 0), (1, 2), (2, 1))

o = observe(hidden, [Fraction(0), VERTICAL])
print("after horizontal + vertical:", len(potential_points(o)), "potential points")

# Each extra slope can only remove candidates.
for slopes in ([0, VERTICAL, 1], [0, VERTICAL, 1, -1]):
    o = observe(hidden, slopes)
    print(f"slopes {[str(s) for s in o.slopes]}:", len(potential_points(o)), "potential,",
          "phantoms:", phantoms(o, hidden))

# Three points on one row are revealed by the first two slopes.
row = Configuration.of((0, 0), (1, 0), (2, 0))
print("row:", potential_points(observe(row, [0, VERTICAL])) == row.points)
