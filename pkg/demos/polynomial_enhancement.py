"""
Polynomial enhancement
======================

Over Z5[q] we keep the determinant of the presentation matrix instead of a
count, normalized up to units.  The one-element birack recovers classical
polynomials.
"""

from birackpoly import datasets
from birackpoly.invariant import alexander, phi_delta, presentation_matrix, sawollek
from birackpoly.labeling import enumerate_labelings
from birackpoly.linalg import determinant
from birackpoly.poly import normalize_up_to_units

m = datasets.module("z5q_a")
vt = datasets.link("virtual_trefoil")

for f in enumerate_labelings(vt, m.birack):
    a = presentation_matrix(f, m).matrix
    print(f.assignment, "det", determinant(a), "->", normalize_up_to_units(determinant(a)))

print("virtual trefoil", phi_delta(vt, m))
print("unknot         ", phi_delta(datasets.link("unknot"), m))

# higher elementary ideals: k = 1 uses the gcd of the next minors down
print("k=1            ", phi_delta(vt, m, 1))

# the singleton birack with Z[t] and Z[t,r] coefficients
for name in ("trefoil", "figure_eight", "virtual_trefoil"):
    d = datasets.link(name)
    print(f"{name:16s} Alexander {alexander(d)}   Sawollek {sawollek(d)}")
