"""Birack module structures ``[T|S|R]`` on a coefficient ring.

A module assigns ring elements ``t[x][y]``, ``s[x][y]``, ``r[x][y]`` to ordered
pairs of birack elements.  It is valid when every generator of the birack
algebra ideal evaluates to zero; the generators come in six families indexed
by triples and one rank-product family indexed by single elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .birack import Birack
from .poly import (
    LaurentPoly,
    ParseError,
    RingSpec,
    format_poly,
    is_unit,
    parse_poly,
    parse_ring,
)

__all__ = [
    "ModuleError",
    "BirackModule",
    "SearchShape",
    "relation_instances",
    "validate_module",
    "search_modules",
    "parse_module",
    "format_module",
    "load_module",
    "FAMILIES",
]

FAMILIES = ("r-r", "t-r", "s-r", "t-t", "t-s", "s-ts", "rank")


class ModuleError(ValueError):
    """A matrix triple violating a birack module relation.

    ``family`` is one of :data:`FAMILIES` and ``instance`` the 1-based
    ``(x, y, z)`` (or ``(x,)`` for the rank family) where it fails.
    """

    def __init__(self, message: str, family: str | None = None, instance: tuple | None = None):
        self.family = family
        self.instance = instance
        super().__init__(message)


@dataclass(frozen=True)
class BirackModule:
    birack: Birack
    ring: RingSpec
    T: tuple[tuple[LaurentPoly, ...], ...]
    S: tuple[tuple[LaurentPoly, ...], ...]
    R: tuple[tuple[LaurentPoly, ...], ...]

    def t(self, x: int, y: int) -> LaurentPoly:
        return self.T[x][y]

    def s(self, x: int, y: int) -> LaurentPoly:
        return self.S[x][y]

    def r(self, x: int, y: int) -> LaurentPoly:
        return self.R[x][y]


# A relation instance is a list of signed monomials in the module variables:
# (sign, ((kind, x, y), ...)) with kind in "tsr", evaluated as sum(sign*prod).
Term = tuple[int, tuple[tuple[str, int, int], ...]]


def relation_instances(b: Birack) -> Iterator[tuple[str, tuple[int, ...], list[Term]]]:
    """All generators of the ideal as ``(family, instance, terms)`` (0-based).

    A constant term is written as a product of no variables.
    """
    n = b.n
    B1, B2 = b.b1, b.b2
    for x, y, z in product(range(n), repeat=3):
        zy = B1[y][z]          # z^y
        yz = B2[y][z]          # y_z
        xy = B2[x][y]          # x_y
        yx = B1[x][y]          # y^x
        x_zy = B2[x][zy]       # x_{z^y}
        z_xy = B1[xy][z]       # z^{x_y}
        inst = (x, y, z)
        yield "r-r", inst, [(1, (("r", xy, z), ("r", x, y))),
                            (-1, (("r", x_zy, yz), ("r", x, zy)))]
        yield "t-r", inst, [(1, (("t", x_zy, yz), ("r", y, z))),
                            (-1, (("r", yx, z_xy), ("t", x, y)))]
        yield "s-r", inst, [(1, (("s", x_zy, yz), ("r", x, zy))),
                            (-1, (("r", yx, z_xy), ("s", x, y)))]
        yield "t-t", inst, [(1, (("t", x, zy), ("t", y, z))),
                            (-1, (("t", yx, z_xy), ("t", xy, z)))]
        yield "t-s", inst, [(1, (("t", x, zy), ("s", y, z))),
                            (-1, (("s", yx, z_xy), ("t", x, y)))]
        yield "s-ts", inst, [(1, (("s", x, zy),)),
                             (-1, (("t", yx, z_xy), ("s", xy, z), ("r", x, y))),
                             (-1, (("s", yx, z_xy), ("s", x, y)))]


def _orbit_pairs(b: Birack, x: int) -> list[tuple[int, int]]:
    pairs = []
    v = x
    for _ in range(b.rank):
        pairs.append((v, b.alpha[v]))
        v = b.pi[v]
    return pairs


def _eval_terms(terms: list[Term], T, S, R, ring: RingSpec) -> LaurentPoly:
    tables = {"t": T, "s": S, "r": R}
    acc = ring.zero()
    for sign, factors in terms:
        val = ring.one()
        for kind, i, j in factors:
            val = val * tables[kind][i][j]
        acc = acc + val if sign > 0 else acc - val
    return acc


def _rank_value(b: Birack, x: int, T, S, R, ring: RingSpec) -> LaurentPoly:
    prod_ = ring.one()
    for u, v in _orbit_pairs(b, x):
        prod_ = prod_ * (T[u][v] * R[u][v] + S[u][v])
    return ring.one() - prod_


def _freeze(rows, ring: RingSpec, n: int, name: str):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ModuleError(f"{name} must be {n}x{n}")
    out = []
    for r in rows:
        row = []
        for v in r:
            if isinstance(v, int):
                v = ring.const(v)
            elif isinstance(v, str):
                v = parse_poly(v, ring)
            if v.ring != ring:
                raise ModuleError(f"{name} entry {v} is not in {ring.header()}")
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def validate_module(b: Birack, ring: RingSpec, T, S, R) -> BirackModule:
    """Check all ideal generators vanish and T, R are units; return the module.

    Entries may be :class:`LaurentPoly`, ints or polynomial strings.  Raises
    :class:`ModuleError` with the family tag and 1-based instance of the
    first violation.
    """
    n = b.n
    T = _freeze(T, ring, n, "T")
    S = _freeze(S, ring, n, "S")
    R = _freeze(R, ring, n, "R")
    for name, tab in (("T", T), ("R", R)):
        for i, j in product(range(n), repeat=2):
            if not is_unit(tab[i][j])[0]:
                raise ModuleError(
                    f"{name}[{i + 1}][{j + 1}] = {format_poly(tab[i][j])} is not a unit",
                    family="unit", instance=(i + 1, j + 1))
    for family, inst, terms in relation_instances(b):
        val = _eval_terms(terms, T, S, R, ring)
        if not val.is_zero():
            label = tuple(v + 1 for v in inst)
            raise ModuleError(
                f"relation {family} fails at (x,y,z) = {label}: evaluates to {format_poly(val)}",
                family=family, instance=label)
    for x in range(n):
        val = _rank_value(b, x, T, S, R, ring)
        if not val.is_zero():
            raise ModuleError(
                f"relation rank fails at x = {x + 1}: evaluates to {format_poly(val)}",
                family="rank", instance=(x + 1,))
    return BirackModule(b, ring, T, S, R)


# -- search ---------------------------------------------------------------

@dataclass(frozen=True)
class SearchShape:
    """Finite candidate sets for a module search.

    T and R entries range over monomial units ``c * m`` with ``c`` a
    coefficient unit and every exponent of ``m`` in ``[-e_max, e_max]``;
    S entries over all polynomials with exponents in ``[0, d_max]``.
    """

    e_max: int = 1
    d_max: int = 1

    def unit_candidates(self, ring: RingSpec) -> list[LaurentPoly]:
        if self.e_max < 0:
            return []
        coeffs = [c for c in range(1, ring.modulus) if ring.coeff_is_unit(c)]
        exps = sorted(product(range(-self.e_max, self.e_max + 1), repeat=ring.nvars),
                      key=lambda e: (sum(abs(k) for k in e), e))
        return [ring.monomial(e, c) for e in exps for c in coeffs]

    def s_candidates(self, ring: RingSpec) -> list[LaurentPoly]:
        if self.d_max < 0:
            return []
        monos = sorted(product(range(self.d_max + 1), repeat=ring.nvars),
                       key=lambda e: (sum(e), e))
        out = []
        for coeffs in product(range(ring.modulus), repeat=len(monos)):
            out.append(LaurentPoly(ring, dict(zip(monos, coeffs))))
        return out


def search_modules(b: Birack, ring: RingSpec, shape: SearchShape = SearchShape(),
                   limit: int | None = None) -> list[BirackModule]:
    """All modules in ``shape``, in lexicographic order of candidate choices.

    The entry order for the lexicographic comparison is T, S, R, each
    row-major.  The search itself is a backtracking constraint search that
    assigns entries greedily (the one completing most relation instances
    first) and checks each instance as soon as all its entries are set.
    """
    if ring.modulus == 0:
        raise ValueError("module search needs a finite coefficient ring (modulus >= 2)")
    units = shape.unit_candidates(ring)
    svals = shape.s_candidates(ring)
    if not units or not svals:
        raise ValueError(f"search shape {shape} has an empty candidate set")
    if limit is not None and limit <= 0:
        return []
    n = b.n
    cells = [(k, i, j) for k in "tsr" for i in range(n) for j in range(n)]
    index = {c: p for p, c in enumerate(cells)}
    cands = [units if k != "s" else svals for k, _, _ in cells]

    # each constraint is compiled to cell indices:
    # ("rel", [(sign, (cell, ...)), ...]) or ("rank", [(t, s, r), ...])
    constraints = []
    for family, inst, terms in relation_instances(b):
        compiled = [(sign, tuple(index[f] for f in fs)) for sign, fs in terms]
        vs = {c for _, fs in compiled for c in fs}
        constraints.append((frozenset(vs), ("rel", compiled)))
    for x in range(n):
        trip = [(index[("t", u, v)], index[("s", u, v)], index[("r", u, v)])
                for u, v in _orbit_pairs(b, x)]
        vs = {c for tr in trip for c in tr}
        constraints.append((frozenset(vs), ("rank", trip)))

    # greedy variable order: next the cell completing most constraints
    order: list[int] = []
    assigned: set[int] = set()
    remaining = set(range(len(cells)))
    while remaining:
        def score(v):
            done = sum(1 for vs, _ in constraints if v in vs and vs <= assigned | {v})
            touch = sum(1 for vs, _ in constraints if v in vs)
            return (-done, -touch, v)
        v = min(remaining, key=score)
        order.append(v)
        assigned.add(v)
        remaining.discard(v)
    pos = {v: p for p, v in enumerate(order)}
    check_at: list[list] = [[] for _ in order]
    for vs, ev in constraints:
        check_at[max(pos[v] for v in vs)].append(ev)

    values: list = [None] * len(cells)
    choice: list[int] = [0] * len(cells)
    solutions: list[tuple[tuple[int, ...], list[LaurentPoly]]] = []
    zero, one = ring.zero(), ring.one()

    def ok(evs) -> bool:
        for kind, data in evs:
            if kind == "rel":
                acc = zero
                for sign, fs in data:
                    val = one
                    for c in fs:
                        val = val * values[c]
                    acc = acc + val if sign > 0 else acc - val
            else:
                prod_ = one
                for t, s_, r in data:
                    prod_ = prod_ * (values[t] * values[r] + values[s_])
                acc = one - prod_
            if not acc.is_zero():
                return False
        return True

    def rec(depth: int):
        if depth == len(order):
            solutions.append((tuple(choice), list(values)))
            return
        v = order[depth]
        for ci, val in enumerate(cands[v]):
            values[v] = val
            choice[v] = ci
            if ok(check_at[depth]):
                rec(depth + 1)
        values[v] = None

    rec(0)
    solutions.sort(key=lambda s: s[0])
    if limit is not None:
        solutions = solutions[:limit]
    out = []
    for _, vals in solutions:
        T = [[vals[index[("t", i, j)]] for j in range(n)] for i in range(n)]
        S = [[vals[index[("s", i, j)]] for j in range(n)] for i in range(n)]
        R = [[vals[index[("r", i, j)]] for j in range(n)] for i in range(n)]
        out.append(validate_module(b, ring, T, S, R))
    return out


# -- file format ----------------------------------------------------------

def parse_module(text: str, b: Birack) -> BirackModule:
    """Read the module file format and validate it against ``b``.

    Line 1 is the ring header, line 2 the birack size, then one row per
    element holding ``T[i][*], S[i][*], R[i][*]`` as comma-separated
    polynomials.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise ModuleError("module file needs a ring header and a size line")
    ring = parse_ring(lines[0])
    try:
        n = int(lines[1])
    except ValueError:
        raise ModuleError(f"line 2: expected the module size, got {lines[1]!r}") from None
    if n != b.n:
        raise ModuleError(f"module size {n} does not match birack size {b.n}")
    if len(lines) - 2 != n:
        raise ModuleError(f"expected {n} matrix rows, found {len(lines) - 2}")
    T, S, R = [], [], []
    for row_no, ln in enumerate(lines[2:], start=1):
        cells = [c.strip() for c in ln.split(",")]
        if len(cells) != 3 * n:
            raise ModuleError(f"matrix row {row_no}: expected {3 * n} entries, got {len(cells)}")
        try:
            polys = [parse_poly(c, ring) for c in cells]
        except ParseError as exc:
            raise ModuleError(f"matrix row {row_no}: {exc}") from None
        T.append(polys[:n])
        S.append(polys[n:2 * n])
        R.append(polys[2 * n:])
    return validate_module(b, ring, T, S, R)


def format_module(m: BirackModule) -> str:
    lines = [m.ring.header(), str(m.birack.n)]
    for i in range(m.birack.n):
        cells = [format_poly(p) for p in m.T[i] + m.S[i] + m.R[i]]
        lines.append(", ".join(cells))
    return "\n".join(lines) + "\n"


def load_module(path, b: Birack) -> BirackModule:
    with open(path) as fh:
        return parse_module(fh.read(), b)
