"""Birack labelings of link diagrams and the counting invariants.

At a positive crossing the labels satisfy
``(under_out, over_out) = B(over_in, under_in)``; at a negative crossing the
picture is read backwards, ``(under_in, over_in) = B(over_out, under_out)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .birack import Birack
from .diagram import Crossing, LinkDiagram, framing_tile

__all__ = [
    "XLabeling",
    "crossing_inputs",
    "is_labeling",
    "enumerate_labelings",
    "basic_counting",
    "integral_counting",
    "tile_labelings",
]


@dataclass(frozen=True)
class XLabeling:
    diagram: LinkDiagram
    assignment: tuple[int, ...]  # semiarc -> 0-based birack element

    def labels(self) -> tuple[int, ...]:
        """1-based labels."""
        return tuple(v + 1 for v in self.assignment)


def crossing_inputs(c: Crossing) -> tuple[int, int, int, int]:
    """Semiarcs ``(a, b, u, v)`` with ``B(label a, label b) = (label u, label v)``.

    ``a``/``v`` are on the over strand, ``b``/``u`` on the under strand.
    """
    if c.sign > 0:
        return c.over_in, c.under_in, c.under_out, c.over_out
    return c.over_out, c.under_out, c.under_in, c.over_in


def is_labeling(d: LinkDiagram, b: Birack, assignment) -> bool:
    for c in d.crossings:
        a, bb, u, v = crossing_inputs(c)
        if b.B(assignment[a], assignment[bb]) != (assignment[u], assignment[v]):
            return False
    return True


def _propagate(cons, lab: list, b: Birack) -> bool:
    """Fill forced labels in place; False on a contradiction."""
    n = b.n
    changed = True
    while changed:
        changed = False
        for a, bb, u, v in cons:
            la, lb, lu, lv = lab[a], lab[bb], lab[u], lab[v]
            known = (la is not None) + (lb is not None) + (lu is not None) + (lv is not None)
            if known < 2:
                continue
            if la is not None and lb is not None:
                sol = [(la, lb)]
            elif lu is not None and lv is not None:
                sol = [b.B_inv(lu, lv)]
            else:
                xs = [la] if la is not None else range(n)
                ys = [lb] if lb is not None else range(n)
                sol = [(x, y) for x in xs for y in ys]
            hits = []
            for x, y in sol:
                ou, ov = b.b1[x][y], b.b2[x][y]
                if (lu is None or lu == ou) and (lv is None or lv == ov):
                    hits.append((x, y, ou, ov))
            if not hits:
                return False
            if len(hits) > 1:
                continue
            x, y, ou, ov = hits[0]
            for slot, val in ((a, x), (bb, y), (u, ou), (v, ov)):
                if lab[slot] is None:
                    lab[slot] = val
                    changed = True
                elif lab[slot] != val:
                    return False
    return True


def enumerate_labelings(d: LinkDiagram, b: Birack) -> list[XLabeling]:
    """All labelings of ``d`` by ``b``, in lexicographic order of assignments.

    Backtracking search: branch on the lowest unlabeled semiarc, then
    propagate forced labels through every crossing in either direction
    (B, B^-1, or the sideways relations).
    """
    cons = [crossing_inputs(c) for c in d.crossings]
    m = d.num_semiarcs
    out: list[tuple[int, ...]] = []

    def rec(lab):
        try:
            free = lab.index(None)
        except ValueError:
            out.append(tuple(lab))
            return
        for val in range(b.n):
            trial = lab[:]
            trial[free] = val
            if _propagate(cons, trial, b):
                rec(trial)

    rec([None] * m)
    out.sort()
    return [XLabeling(d, a) for a in out]


def basic_counting(d: LinkDiagram, b: Birack) -> int:
    return len(enumerate_labelings(d, b))


def tile_labelings(d: LinkDiagram, b: Birack) -> list[tuple[tuple[int, ...], XLabeling]]:
    """Labelings over a complete framing tile mod the birack rank, with their writhe vectors."""
    out = []
    for w, dd in framing_tile(d, b.rank):
        out.extend((w, f) for f in enumerate_labelings(dd, b))
    return out


def integral_counting(d: LinkDiagram, b: Birack) -> int:
    return sum(basic_counting(dd, b) for _, dd in framing_tile(d, b.rank))
