"""
Census of small grid configurations
===================================

Every placement of n points on a unit grid with no empty row or column,
queried in the order 0, vertical, 1, -1, 1/2, -2, 2, -1/2.
"""
from slopesight import TABLE_1, Semantics, census, compare_with_table, grid_configuration_count

print("placements per n:", [grid_configuration_count(n) for n in range(1, 6)])

for semantics in Semantics:
    print(f"\n{semantics.value}")
    for n in range(1, 5):
        report = census(n, semantics=semantics)
        hist = " ".join(f"{k}:{v}" for k, v in report.histogram.items())
        mark = "matches" if compare_with_table(report).matches else "differs from"
        published = " ".join(f"{k}:{v}" for k, v in TABLE_1[n][1].items())
        print(f"  {n} | {report.total_examples:3d} | {hist:28s} {mark} {published}")

# Which configurations separate the two semantics at n = 3?
cmp = compare_with_table(census(3))
for c, k_unique, k_nophantom in cmp.discrepancies:
    print(c, "unique:", k_unique, "no-phantom:", k_nophantom)
