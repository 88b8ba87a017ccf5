"""
Counting birack labelings
=========================

A birack labels the semiarcs of a diagram. The number of labelings
changes under kinks, so we average over a framing tile.
"""

from birackpoly import datasets
from birackpoly.birack import format_cycles
from birackpoly.diagram import framing_tile
from birackpoly.labeling import basic_counting, enumerate_labelings, integral_counting

# the two-element birack used throughout the demos
b = datasets.birack("rank2")
print("kink map", format_cycles(b.pi), "rank", b.rank)

# per-writhe counts over the tile, then their sum
for name in ("figure_eight", "unknot", "virtual_trefoil"):
    d = datasets.link(name)
    per = [basic_counting(dd, b) for _, dd in framing_tile(d, b.rank)]
    print(f"{name:16s} per writhe {per}  integral {integral_counting(d, b)}")

# individual labelings of the figure-eight, one label per semiarc
for f in enumerate_labelings(datasets.link("figure_eight"), b):
    print(f.assignment)
