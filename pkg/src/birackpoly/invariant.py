"""Bead-module presentation matrices and the enhanced counting invariants.

For a positive crossing with over-in bead ``a`` (label ``x``), under-in bead
``b`` (label ``y``), under-out bead ``c`` and over-out bead ``d`` the bead
relations are::

    c = t[x][y] * b + s[x][y] * a
    d = r[x][y] * a

Negative crossings use the same relations with incoming and outgoing beads
exchanged, ``(x, y)`` then being the outgoing labels.  Each crossing gives
two matrix rows; columns are semiarcs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .birack import validate_birack
from .diagram import LinkDiagram
from .labeling import XLabeling, crossing_inputs, tile_labelings
from .linalg import RingMatrix, count_nullspace, minors_gcd
from .module import BirackModule, validate_module
from .poly import LaurentPoly, RingSpec, format_poly, normalize_up_to_units

__all__ = [
    "PresentationMatrix",
    "PolyMultiset",
    "BeadMultiset",
    "presentation_matrix",
    "bead_count",
    "phi_beads",
    "elementary_ideal_generator",
    "phi_delta",
    "sawollek_module",
    "alexander_module",
    "sawollek",
    "alexander",
]


@dataclass(frozen=True)
class PresentationMatrix:
    matrix: RingMatrix
    provenance: tuple[tuple[int, str], ...]  # (crossing id, "c" or "d") per row

    @property
    def generators(self) -> int:
        return self.matrix.cols


def presentation_matrix(f: XLabeling, m: BirackModule) -> PresentationMatrix:
    """Presentation matrix of the fundamental module of a labeled diagram."""
    d = f.diagram
    ring = m.ring
    lab = f.assignment
    rows = 2 * d.num_crossings
    mat = RingMatrix(ring, rows, d.num_semiarcs)
    minus_one = -ring.one()
    prov = []
    for k, c in enumerate(d.crossings):
        a, b, cc, dd = crossing_inputs(c)
        x, y = lab[a], lab[b]
        r1, r2 = 2 * k, 2 * k + 1
        mat[r1, b] = mat[r1, b] + m.T[x][y]
        mat[r1, a] = mat[r1, a] + m.S[x][y]
        mat[r1, cc] = mat[r1, cc] + minus_one
        mat[r2, a] = mat[r2, a] + m.R[x][y]
        mat[r2, dd] = mat[r2, dd] + minus_one
        prov += [(c.id, "c"), (c.id, "d")]
    return PresentationMatrix(mat, tuple(prov))


def bead_count(f: XLabeling, m: BirackModule) -> int:
    """Number of bead labelings ``|M[f]|`` for a module over constants ``Z_n``."""
    return count_nullspace(presentation_matrix(f, m).matrix)


class PolyMultiset:
    """Multiset of normalized polynomials, printed as ``{ 2 x (1+q+3q^2) }``."""

    def __init__(self, values: Iterable[LaurentPoly]):
        counts = Counter(values)
        self.items: tuple[tuple[LaurentPoly, int], ...] = tuple(
            sorted(counts.items(), key=lambda pc: pc[0].sort_key()))

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.items)

    def as_dict(self) -> dict[LaurentPoly, int]:
        return dict(self.items)

    def __eq__(self, other):
        return isinstance(other, PolyMultiset) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __str__(self):
        if not self.items:
            return "{ }"
        body = ", ".join(f"{c} x ({format_poly(p)})" for p, c in self.items)
        return "{ " + body + " }"

    def __repr__(self):
        return f"PolyMultiset({self})"


class BeadMultiset:
    """Multiset of bead counts, printed as a polynomial in ``u``: ``2u^25``."""

    def __init__(self, counts: Iterable[int]):
        self.items: tuple[tuple[int, int], ...] = tuple(sorted(Counter(counts).items()))

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.items)

    def __eq__(self, other):
        return isinstance(other, BeadMultiset) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __str__(self):
        if not self.items:
            return "0"
        parts = []
        for e, c in self.items:
            mono = "u" if e == 1 else f"u^{e}"
            if e == 0:
                mono = ""
            parts.append(f"{c}{mono}" if (c != 1 or not mono) else mono)
        return "+".join(parts)

    def __repr__(self):
        return f"BeadMultiset({self})"


def phi_beads(d: LinkDiagram, m: BirackModule) -> BeadMultiset:
    """Bead counts over all labelings of a complete framing tile."""
    return BeadMultiset(bead_count(f, m) for _, f in tile_labelings(d, m.birack))


def elementary_ideal_generator(p: PresentationMatrix, k: int) -> LaurentPoly:
    """``Delta_k``: normalized gcd of the ``(g - k)``-minors, ``g`` the generator count."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return minors_gcd(p.matrix, p.generators - k)


def phi_delta(d: LinkDiagram, m: BirackModule, k: int = 0) -> PolyMultiset:
    """Multiset of ``Delta_k`` over all labelings of a complete framing tile."""
    return PolyMultiset(
        elementary_ideal_generator(presentation_matrix(f, m), k)
        for _, f in tile_labelings(d, m.birack))


_SINGLETON = None


def _singleton():
    global _SINGLETON
    if _SINGLETON is None:
        _SINGLETON = validate_birack([[1]], [[1]])
    return _SINGLETON


def sawollek_module() -> BirackModule:
    """Singleton-birack module ``[t | 1-tr | r]`` over ``Z[t, r]``."""
    ring = RingSpec(0, ("t", "r"))
    return validate_module(_singleton(), ring, [["t"]], [["1-tr"]], [["r"]])


def alexander_module() -> BirackModule:
    """Singleton-birack module ``[t | 1-t | 1]`` over ``Z[t]``."""
    ring = RingSpec(0, ("t",))
    return validate_module(_singleton(), ring, [["t"]], [["1-t"]], [[1]])


def _single_entry(ms: PolyMultiset) -> LaurentPoly:
    (p, _), = ms.items
    return normalize_up_to_units(p)


def sawollek(d: LinkDiagram) -> LaurentPoly:
    """Generalized Alexander polynomial, normalized up to units."""
    return _single_entry(phi_delta(d, sawollek_module(), 0))


def alexander(d: LinkDiagram, k: int = 1) -> LaurentPoly:
    """``k``-th Alexander polynomial from the fundamental module, normalized."""
    if k < 1:
        raise ValueError("k must be positive")
    return _single_entry(phi_delta(d, alexander_module(), k))
