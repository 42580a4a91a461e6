"""
Reconstructing every consistent configuration
=============================================

A phantom point does not always mean the points are unknown: sometimes only
one set of n candidates produces exactly the observed lines.
"""
from slopesight import (
    TABLE_ORDER,
    Configuration,
    Semantics,
    consistent_configurations,
    determinacy,
    observe,
    required_slopes,
)

hidden = Configuration.of((0, 0), (1, 1), (2, 1))

for k in (2, 3, 4):
    o = observe(hidden, TABLE_ORDER[:k])
    configs, exhaustive = consistent_configurations(o, hidden.n)
    print(f"{k} slopes -> {len(configs)} consistent configuration(s)")
    for c in configs:
        print("   ", c)

# The two ways to say "located" can disagree.
c = Configuration.of((0, 1), (1, 0), (2, 0))
for semantics in Semantics:
    print(semantics.value, "needs", required_slopes(c, TABLE_ORDER, semantics), "slopes")

v = determinacy(observe(c, TABLE_ORDER[:3]), 3, Semantics.NO_PHANTOM, c)
print("phantoms after 3 slopes:", v.phantoms)
