"""
A configuration that needs n + 1 slopes
=======================================

Put point i on the line through a center z with the i-th tiered slope.
After n slopes, z lies on an observed line of every slope but is empty.
"""
from slopesight import Point, adversarial_configuration, verify_adversarial

inst = adversarial_configuration(4, center=Point(0, 0))
print("points:", inst.configuration)
print("slopes:", [str(s) for s in inst.slopes])

for n in range(2, 9):
    r = verify_adversarial(n)
    print(
        f"n={n}: center phantom={r.phantom_at_center}, "
        f"with n slopes as configurations: {r.unique_verdict_with_n.kind}, "
        f"with n+1: {r.verdict_with_n_plus_1.kind}, "
        f"no-phantom slopes needed: {r.required_nophantom}"
    )
