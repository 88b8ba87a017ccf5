"""Link diagrams from signed Gauss codes.

Virtual crossings never appear in a Gauss code, so any code in which each
crossing occurs once over and once under with matching signs is a valid
(virtual) link diagram.

Semiarc numbering: the semiarcs are numbered globally in token order, semiarc
``k`` being the arc that *enters* the ``k``-th token; a crossing-free
component contributes one free loop after the semiarcs of the tokens before
it.  At a crossing whose over token sits at position ``i`` and under token at
``j``, the over strand runs ``i -> succ(i)`` and the under strand
``j -> succ(j)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

__all__ = [
    "GaussCodeError",
    "Token",
    "GaussCode",
    "Crossing",
    "LinkDiagram",
    "parse_gauss_code",
    "format_gauss_code",
    "build_diagram",
    "add_kinks",
    "framing_tile",
    "load_link",
]


class GaussCodeError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    over: bool
    crossing: int
    sign: int

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Token, ...], ...]

    def crossing_ids(self) -> list[int]:
        return sorted({t.crossing for comp in self.components for t in comp})

    def __str__(self):
        return format_gauss_code(self)


_TOKEN_RE = re.compile(r"\s*([OU])(\d+)([+-])")


def _parse_component(line: str, lineno: int) -> tuple[Token, ...]:
    body = line.strip()
    if body == "()":
        return ()
    tokens = []
    pos = 0
    while pos < len(line):
        if line[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(line, pos)
        if not m:
            raise GaussCodeError(f"line {lineno}: bad token at column {pos + 1}: {line[pos:].strip()[:8]!r}")
        tokens.append(Token(m.group(1) == "O", int(m.group(2)), 1 if m.group(3) == "+" else -1))
        pos = m.end()
    if not tokens:
        raise GaussCodeError(f"line {lineno}: empty component (write '()' for a crossing-free loop)")
    return tuple(tokens)


def _check(components: Sequence[Sequence[Token]]) -> None:
    seen: dict[int, list[Token]] = {}
    for comp in components:
        for t in comp:
            seen.setdefault(t.crossing, []).append(t)
    for cid, toks in sorted(seen.items()):
        if len(toks) != 2:
            raise GaussCodeError(f"crossing {cid} appears {len(toks)} times, expected 2")
        if toks[0].over == toks[1].over:
            kind = "O" if toks[0].over else "U"
            raise GaussCodeError(f"crossing {cid} appears twice as {kind}")
        if toks[0].sign != toks[1].sign:
            raise GaussCodeError(f"crossing {cid} has inconsistent signs")


def parse_gauss_code(text: str) -> GaussCode:
    """Parse the link file format: one component per line, ``#`` comments.

    >>> len(parse_gauss_code("O1+O2+U1+U2+").components)
    1
    """
    comps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        comps.append(_parse_component(line, lineno))
    _check(comps)
    return GaussCode(tuple(comps))


def format_gauss_code(g: GaussCode) -> str:
    lines = ["".join(str(t) for t in comp) if comp else "()" for comp in g.components]
    return "\n".join(lines)


@dataclass(frozen=True)
class Crossing:
    """A classical crossing with its four semiarc slots (0-based)."""

    id: int
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class LinkDiagram:
    code: GaussCode
    crossings: tuple[Crossing, ...]
    num_semiarcs: int
    successor: tuple[int, ...]
    component_of: tuple[int, ...]
    component_semiarcs: tuple[tuple[int, ...], ...]
    writhe: tuple[int, ...]
    free_loops: tuple[int, ...] = field(default=())

    @property
    def num_components(self) -> int:
        return len(self.component_semiarcs)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)


def build_diagram(g: GaussCode) -> LinkDiagram:
    """Semiarc structure, successor map and writhe vector of a Gauss code."""
    successor: list[int] = []
    component_of: list[int] = []
    comp_arcs = []
    free = []
    where: dict[int, dict[bool, tuple[int, int]]] = {}
    sign: dict[int, int] = {}
    idx = 0
    for ci, comp in enumerate(g.components):
        if not comp:
            successor.append(idx)
            component_of.append(ci)
            comp_arcs.append((idx,))
            free.append(idx)
            idx += 1
            continue
        start = idx
        k = len(comp)
        arcs = tuple(range(start, start + k))
        for p, tok in enumerate(comp):
            here = start + p
            nxt = start + (p + 1) % k
            successor.append(nxt)
            component_of.append(ci)
            where.setdefault(tok.crossing, {})[tok.over] = (here, nxt)
            sign[tok.crossing] = tok.sign
        comp_arcs.append(arcs)
        idx += k
    crossings = []
    writhe = [0] * len(g.components)
    for cid in sorted(where):
        (oi, oo), (ui, uo) = where[cid][True], where[cid][False]
        crossings.append(Crossing(cid, sign[cid], oi, oo, ui, uo))
        if component_of[oi] == component_of[ui]:
            writhe[component_of[oi]] += sign[cid]
    return LinkDiagram(g, tuple(crossings), idx, tuple(successor), tuple(component_of),
                       tuple(comp_arcs), tuple(writhe), tuple(free))


def add_kinks(d: LinkDiagram, component: int, count: int, sign: int = 1) -> LinkDiagram:
    """Insert ``count`` curls of the given sign on ``component``.

    The curls go on the component's lowest-numbered semiarc (in front of its
    first token) as ``O c U c`` pairs with fresh crossing ids; a positive
    curl carries labels through the kink map.
    """
    if not 0 <= component < d.num_components:
        raise IndexError(f"no component {component}")
    if count < 0:
        raise ValueError("kink count must be nonnegative")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if count == 0:
        return d
    ids = d.code.crossing_ids()
    nxt = (ids[-1] if ids else 0) + 1
    kinks = []
    for i in range(count):
        kinks += [Token(True, nxt + i, sign), Token(False, nxt + i, sign)]
    comps = list(d.code.components)
    comps[component] = tuple(kinks) + comps[component]
    return build_diagram(GaussCode(tuple(comps)))


def framing_tile(d: LinkDiagram, N: int) -> list[tuple[tuple[int, ...], LinkDiagram]]:
    """Diagrams realising every writhe vector modulo ``N``, in lexicographic order."""
    if N < 1:
        raise ValueError("rank must be positive")
    out = []
    for w in product(range(N), repeat=d.num_components):
        dd = d
        for j, target in enumerate(w):
            k = (target - d.writhe[j]) % N
            dd = add_kinks(dd, j, k, 1)
        out.append((w, dd))
    return out


def load_link(path) -> LinkDiagram:
    with open(path) as fh:
        return build_diagram(parse_gauss_code(fh.read()))
