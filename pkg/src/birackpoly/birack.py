"""Finite biracks given by their operation tables.

Tables follow the usual birack-matrix convention (1-based entries)::

    U[j][k] = l  where  x_l = B_1(x_k, x_j)
    L[j][k] = m  where  x_m = B_2(x_j, x_k)

so ``B_1(x, y) = U[y][x]`` and ``B_2(x, y) = L[x][y]``.  Everything
inside a :class:`Birack` is 0-based; the module-level helpers
(:func:`apply_B`, :func:`apply_B_inverse`, :func:`kink_data`) use 1-based
element labels.
"""
from __future__ import annotations

from itertools import product
from typing import Sequence

__all__ = [
    "BirackError",
    "Birack",
    "validate_birack",
    "apply_B",
    "apply_B_inverse",
    "kink_data",
    "permutation_cycles",
    "format_cycles",
    "parse_birack",
    "format_birack",
    "load_birack",
    "MAX_BIRACK_SIZE",
]

MAX_BIRACK_SIZE = 64


class BirackError(ValueError):
    """A table pair failing one of the birack axioms."""


def _invert_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


class Birack:
    """A validated finite birack.  Build instances with :func:`validate_birack`.

    Attributes (0-based)
    --------------------
    b1, b2 : ``b1[x][y] = B_1(x, y)``, ``b2[x][y] = B_2(x, y)``
    inverse : ``inverse[(u, v)] = (x, y)`` with ``B(x, y) = (u, v)``
    sideways : the sideways map as a dict on pairs
    pi : kink map, the label change along a positive kink
    alpha : kink partner; a positive kink whose over-in label is ``x`` has
        under-in label ``alpha[x]``
    rank : order of ``pi``
    """

    def __init__(self, n, upper, lower, b1, b2, inverse, sideways, pi, alpha, rank):
        self.n = n
        self.upper = upper
        self.lower = lower
        self.b1 = b1
        self.b2 = b2
        self.inverse = inverse
        self.sideways = sideways
        self.sideways_inverse = {v: k for k, v in sideways.items()}
        self.pi = pi
        self.alpha = alpha
        self.rank = rank

    def B(self, x: int, y: int) -> tuple[int, int]:
        return self.b1[x][y], self.b2[x][y]

    def B_inv(self, u: int, v: int) -> tuple[int, int]:
        return self.inverse[(u, v)]

    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """The (U, L) tables with 1-based entries."""
        return ([[v + 1 for v in row] for row in self.upper],
                [[v + 1 for v in row] for row in self.lower])

    def relabel(self, perm: Sequence[int]) -> "Birack":
        """Isomorphic copy with element ``x`` renamed ``perm[x]`` (0-based)."""
        inv = _invert_perm(perm)
        n = self.n
        U = [[perm[self.b1[inv[k]][inv[j]]] + 1 for k in range(n)] for j in range(n)]
        L = [[perm[self.b2[inv[j]][inv[k]]] + 1 for k in range(n)] for j in range(n)]
        return validate_birack(U, L)

    def __eq__(self, other):
        return isinstance(other, Birack) and self.upper == other.upper and self.lower == other.lower

    def __hash__(self):
        return hash((self.upper, self.lower))

    def __repr__(self):
        return f"Birack(n={self.n}, pi={format_cycles(self.pi)}, N={self.rank})"


def validate_birack(U: Sequence[Sequence[int]], L: Sequence[Sequence[int]],
                    max_size: int = MAX_BIRACK_SIZE) -> Birack:
    """Check the birack axioms for 1-based tables ``U``, ``L`` and return the birack.

    Raises :class:`BirackError` naming the first failed condition (for the
    Yang-Baxter equation, the violating triple in 1-based labels).
    """
    n = len(U)
    if n == 0:
        raise BirackError("empty birack")
    if n > max_size:
        raise BirackError(f"birack size {n} exceeds the limit {max_size}")
    if len(L) != n or any(len(r) != n for r in U) or any(len(r) != n for r in L):
        raise BirackError(f"tables must both be {n}x{n}")
    for name, tab in (("U", U), ("L", L)):
        for j, row in enumerate(tab):
            for k, v in enumerate(row):
                if not (isinstance(v, int) and 1 <= v <= n):
                    raise BirackError(f"{name}[{j + 1}][{k + 1}] = {v!r} is not in 1..{n}")
    upper = tuple(tuple(v - 1 for v in row) for row in U)
    lower = tuple(tuple(v - 1 for v in row) for row in L)
    b1 = tuple(tuple(upper[y][x] for y in range(n)) for x in range(n))
    b2 = lower

    inverse: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in product(range(n), repeat=2):
        out = (b1[x][y], b2[x][y])
        if out in inverse:
            a, b = inverse[out]
            raise BirackError(
                f"B is not bijective: B({a + 1},{b + 1}) = B({x + 1},{y + 1}) = "
                f"({out[0] + 1},{out[1] + 1})")
        inverse[out] = (x, y)

    # S(B_1(x,y), x) = (B_2(x,y), y)
    sideways: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in product(range(n), repeat=2):
        key = (b1[x][y], x)
        val = (b2[x][y], y)
        if key in sideways and sideways[key] != val:
            raise BirackError(
                f"sideways map is not single-valued at ({key[0] + 1},{key[1] + 1})")
        sideways[key] = val
    if len(sideways) != n * n:
        missing = next(k for k in product(range(n), repeat=2) if k not in sideways)
        raise BirackError(f"sideways map is not total: undefined at ({missing[0] + 1},{missing[1] + 1})")
    if len(set(sideways.values())) != n * n:
        raise BirackError("sideways map is not invertible")
    sideways_inv = {v: k for k, v in sideways.items()}

    sd = [sideways[(x, x)] for x in range(n)]
    sid = [sideways_inv[(x, x)] for x in range(n)]
    for label, comp in (("(S D)_1", [p[0] for p in sd]), ("(S D)_2", [p[1] for p in sd]),
                        ("(S^-1 D)_1", [p[0] for p in sid]), ("(S^-1 D)_2", [p[1] for p in sid])):
        if not _is_perm(comp):
            raise BirackError(f"{label} is not a bijection")

    for x, y, z in product(range(n), repeat=3):
        # left side: (B x I)(I x B)(B x I), applied right to left
        a, b = b1[x][y], b2[x][y]
        b, c = b1[b][z], b2[b][z]
        a, b = b1[a][b], b2[a][b]
        left = (a, b, c)
        b, c = b1[y][z], b2[y][z]
        a, b = b1[x][b], b2[x][b]
        b, c = b1[b][c], b2[b][c]
        right = (a, b, c)
        if left != right:
            raise BirackError(f"Yang-Baxter equation fails at ({x + 1},{y + 1},{z + 1})")

    sd1 = [p[0] for p in sd]
    sd2 = [p[1] for p in sd]
    pi = tuple(sd1[v] for v in _invert_perm(sd2))
    # kink partner: B_2(x, y) = y, i.e. (S^-1 D)_2 inverted
    alpha = _invert_perm([p[1] for p in sid])
    rank = 1
    power = pi
    ident = tuple(range(n))
    while power != ident:
        power = tuple(pi[v] for v in power)
        rank += 1
    return Birack(n, upper, lower, b1, b2, inverse, sideways, pi, alpha, rank)


def apply_B(b: Birack, x: int, y: int) -> tuple[int, int]:
    """``B(x, y) = (y^x, x_y)`` for 1-based labels."""
    u, v = b.B(x - 1, y - 1)
    return u + 1, v + 1


def apply_B_inverse(b: Birack, u: int, v: int) -> tuple[int, int]:
    x, y = b.B_inv(u - 1, v - 1)
    return x + 1, y + 1


def kink_data(b: Birack) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    """``(pi, N, alpha)`` with 1-based permutations given as image tuples."""
    return (tuple(v + 1 for v in b.pi), b.rank, tuple(v + 1 for v in b.alpha))


def permutation_cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles of a 0-based permutation, each starting at its least element."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = perm[start]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = perm[v]
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
    return cycles


def format_cycles(perm: Sequence[int]) -> str:
    """Cycle notation in 1-based labels, ``()`` for the identity."""
    cycles = permutation_cycles(perm)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(v + 1) for v in c) + ")" for c in cycles)


# -- file format ----------------------------------------------------------

def parse_birack(text: str, max_size: int = MAX_BIRACK_SIZE) -> Birack:
    """Read the birack file format: ``n`` then ``n`` rows of ``U[j][*] L[j][*]``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise BirackError("empty birack file")
    try:
        n = int(lines[0])
    except ValueError:
        raise BirackError(f"line 1: expected the birack size, got {lines[0]!r}") from None
    if n < 1:
        raise BirackError("birack size must be positive")
    if n > max_size:
        raise BirackError(f"birack size {n} exceeds the limit {max_size}")
    if len(lines) - 1 != n:
        raise BirackError(f"expected {n} table rows, found {len(lines) - 1}")
    U, L = [], []
    for j, ln in enumerate(lines[1:], start=2):
        try:
            vals = [int(v) for v in ln.split()]
        except ValueError:
            raise BirackError(f"table row {j}: non-integer entry") from None
        if len(vals) != 2 * n:
            raise BirackError(f"table row {j}: expected {2 * n} entries, got {len(vals)}")
        U.append(vals[:n])
        L.append(vals[n:])
    return validate_birack(U, L, max_size=max_size)


def format_birack(b: Birack) -> str:
    U, L = b.tables()
    lines = [str(b.n)]
    for j in range(b.n):
        lines.append(" ".join(str(v) for v in U[j] + L[j]))
    return "\n".join(lines) + "\n"


def load_birack(path) -> Birack:
    with open(path) as fh:
        return parse_birack(fh.read())
