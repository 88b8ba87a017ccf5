"""
A small virtual knot table
==========================

Group the bundled virtual knots by their enhancement value.
"""

from collections import defaultdict

from birackpoly import datasets
from birackpoly.invariant import phi_delta

m = datasets.module("z5q_b")
groups = defaultdict(list)
for kid in datasets.vknot_ids():
    ms = phi_delta(datasets.vknot(kid), m)
    groups[str(ms)].append(kid)

for value, ids in sorted(groups.items(), key=lambda kv: kv[1][0]):
    print(f"{value:32s} {', '.join(ids)}")

# the same table from the shell:
#   birackpoly table src/birackpoly/data/biracks/rank2.txt src/birackpoly/data/modules/z5q_b.txt src/birackpoly/data/vknots --format text --grouped
