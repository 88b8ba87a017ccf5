"""Exact linear algebra over the coefficient rings of :mod:`birackpoly.poly`."""
from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence

from .poly import (
    LaurentPoly,
    RingMismatchError,
    RingSpec,
    UnsupportedRingError,
    divide_exact,
    gcd_univariate_in,
    is_unit,
    normalize_up_to_units,
)

__all__ = [
    "RingMatrix",
    "determinant",
    "minors_gcd",
    "count_nullspace",
    "smith_normal_form",
]


class RingMatrix:
    """Dense row-major matrix of :class:`LaurentPoly` over one ring.

    Zero-row and zero-column shapes are allowed.
    """

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingSpec, rows: int, cols: int, entries: Sequence[LaurentPoly] | None = None):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = ring.zero()
            entries = [z] * (rows * cols)
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.ring != ring:
                raise RingMismatchError(f"entry over {e.ring.header()} in {ring.header()} matrix")
        self.entries = entries

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence], cols: int | None = None) -> "RingMatrix":
        """Build from nested lists of polynomials or ints."""
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            for v in r:
                flat.append(ring.const(v) if isinstance(v, int) else v)
        return cls(ring, len(rows), cols, flat)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __setitem__(self, ij, value):
        # only used while building presentation matrices
        i, j = ij
        self.entries[i * self.cols + j] = value

    def row(self, i: int) -> list[LaurentPoly]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        return RingMatrix(self.ring, len(rows), len(cols),
                          [self[i, j] for i in rows for j in cols])

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "RingMatrix":
        """Matrix whose (i, j) entry is ``self[row_perm[i], col_perm[j]]``."""
        return self.submatrix(row_perm, col_perm)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        z = self.ring.zero()
        for i in range(self.rows):
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self[i, k]
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return RingMatrix(self.ring, self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.to_rows())
        return f"RingMatrix({self.ring.header()}, {self.rows}x{self.cols}, [{body}])"


def _bareiss(m: list[list[LaurentPoly]], ring: RingSpec) -> LaurentPoly:
    n = len(m)
    m = [r[:] for r in m]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = m[i][j] * pivot
                if mik and m[k][j]:
                    num = num - mik * m[k][j]
                m[i][j] = divide_exact(num, prev) if num else num
            m[i][k] = ring.zero()
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _cofactor(m: list[list[LaurentPoly]], ring: RingSpec) -> LaurentPoly:
    n = len(m)
    memo: dict[int, LaurentPoly] = {}
    full = (1 << n) - 1

    def det(mask: int) -> LaurentPoly:
        # rows consumed so far = n - popcount(mask); expand along the next row
        if mask == 0:
            return ring.one()
        if mask in memo:
            return memo[mask]
        r = n - bin(mask).count("1")
        acc = ring.zero()
        pos = 0
        for j in range(n):
            if mask >> j & 1:
                a = m[r][j]
                if a:
                    sub = det(mask & ~(1 << j))
                    if sub:
                        term = a * sub
                        acc = acc - term if pos & 1 else acc + term
                pos += 1
        memo[mask] = acc
        return acc

    return det(full)


def determinant(a: RingMatrix, method: str = "auto") -> LaurentPoly:
    """Exact determinant of a square matrix; the 0x0 determinant is 1.

    ``method`` is ``"bareiss"`` (fraction-free elimination, domains only),
    ``"cofactor"`` (memoized Laplace expansion, any ring) or ``"auto"``.
    """
    if a.rows != a.cols:
        raise ValueError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    ring = a.ring
    if a.rows == 0:
        return ring.one()
    rows = a.to_rows()
    if method == "auto":
        method = "bareiss" if ring.is_domain else "cofactor"
    if method == "bareiss":
        if not ring.is_domain:
            raise UnsupportedRingError(f"Bareiss elimination needs a domain, not {ring.header()}")
        return _bareiss(rows, ring)
    if method == "cofactor":
        return _cofactor(rows, ring)
    raise ValueError(f"unknown method {method!r}")


def minors_gcd(a: RingMatrix, size: int) -> LaurentPoly:
    """Normalized gcd of all ``size`` x ``size`` minors of ``a``.

    Returns 1 for ``size <= 0`` and 0 when no minor of that size exists.  A
    single square minor is accepted over any ring; several minors need a ring
    supported by :func:`~birackpoly.poly.gcd_univariate`.
    """
    ring = a.ring
    if size <= 0:
        return ring.one()
    if size > a.rows or size > a.cols:
        return ring.zero()
    if size == a.rows == a.cols:
        return normalize_up_to_units(determinant(a))
    if ring.nvars > 1 or (ring.modulus and not ring.is_field_coefficients):
        raise UnsupportedRingError(
            f"gcd of {size}-minors is not supported over {ring.header()}")
    acc = ring.zero()
    for rs in combinations(range(a.rows), size):
        for cs in combinations(range(a.cols), size):
            d = determinant(a.submatrix(rs, cs))
            if d.is_zero():
                continue
            acc = gcd_univariate_in([acc, d], ring)
            if is_unit(acc)[0]:
                return acc
    return acc


def _constant_rows(a: RingMatrix) -> list[list[int]]:
    if a.ring.nvars and any(not e.is_constant() for e in a.entries):
        raise UnsupportedRingError("nullspace counting needs constant entries")
    return [[e.constant_value() for e in a.row(i)] for i in range(a.rows)]


def _rank_mod_p(rows: list[list[int]], p: int, cols: int) -> int:
    m = [[v % p for v in r] for r in rows]
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def count_nullspace(a: RingMatrix) -> int:
    """Number of vectors ``v`` over ``Z_n`` with ``a @ v == 0``."""
    n = a.ring.modulus
    if n == 0:
        raise UnsupportedRingError("nullspace counting needs a finite modulus")
    rows = _constant_rows(a)
    if a.ring.is_field_coefficients:
        return n ** (a.cols - _rank_mod_p(rows, n, a.cols))
    diag, _, _ = smith_normal_form(rows, a.cols)
    count = n ** (a.cols - len(diag))
    for d in diag:
        count *= math.gcd(d, n)
    return count


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_normal_form(a: Sequence[Sequence[int]], cols: int | None = None):
    """Smith normal form of an integer matrix.

    Returns ``(diag, U, V)`` with ``U @ A @ V`` equal to the rectangular
    matrix carrying ``diag`` on its leading diagonal; ``U`` and ``V`` are
    unimodular and ``diag`` lists the nonzero invariant factors
    ``d_1 | d_2 | ...``, all positive.
    """
    m = [list(map(int, r)) for r in a]
    nr = len(m)
    nc = cols if cols is not None else (len(m[0]) if m else 0)
    U = _identity(nr)
    V = _identity(nc)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        # row dst += f * row src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for r in m:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    t = 0
    while t < min(nr, nc):
        nz = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if m[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, nr):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(i, t, -q)
                    if m[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(j, t, -q)
                    if m[t][j]:
                        done = False
            if not done:
                nz = [(abs(m[i][t]), i, t) for i in range(t, nr) if m[i][t]]
                nz += [(abs(m[t][j]), t, j) for j in range(t, nc) if m[t][j]]
                _, pi, pj = min(nz)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            # divisibility: fold any offending entry into row t and retry
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if m[i][j] % m[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = [m[i][i] for i in range(min(nr, nc)) if m[i][i]]
    return diag, U, V
