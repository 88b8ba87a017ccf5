"""
Bead enhancement
================

Each labeling gives a module presentation whose solution set we count.
"""

from birackpoly import datasets
from birackpoly.invariant import bead_count, phi_beads, presentation_matrix
from birackpoly.labeling import enumerate_labelings

z5 = datasets.module("z5_beads")
d = datasets.link("figure_eight")

f = enumerate_labelings(d, z5.birack)[0]
p = presentation_matrix(f, z5)
# rows are crossing relations, columns are semiarc generators
for row in p.matrix.to_rows():
    print(" ".join(f"{str(e):>2s}" for e in row))
print("beads per labeling:", bead_count(f, z5))

# the enhancement collects one u^|beads| per labeling in the tile
for name in ("figure_eight", "unknot", "trefoil"):
    print(name, phi_beads(datasets.link(name), z5))
