"""Independent reference computations used by the tests.

Nothing here imports the labeling or invariant code: the oracles work from
raw Gauss-code token lists and birack tables.
"""
from __future__ import annotations

import random
from itertools import product

import sympy as sp

from birackpoly.diagram import GaussCode, Token

t = sp.Symbol("t")


def tokens(code: str):
    """Single-component code string -> list of (over, crossing, sign)."""
    import re
    return [(o == "O", int(c), 1 if s == "+" else -1)
            for o, c, s in re.findall(r"([OU])(\d+)([+-])", code)]


# -- Wirtinger presentation and Fox calculus ---------------------------------

def wirtinger(code: str):
    """Generators (over-arcs) and one relator word per crossing.

    Arc ``m`` starts just after the ``m``-th under token and runs through
    the following over tokens.  Words are lists of ``(arc, +-1)``.
    """
    toks = tokens(code)
    unders = [i for i, tk in enumerate(toks) if not tk[0]]
    n = len(unders)

    def arc_at(pos):
        # arc containing token position pos (an over token) or starting after pos
        k = sum(1 for u in unders if u < pos) - 1
        return k % n

    relators = []
    for i, (over, c, s) in enumerate(toks):
        if over:
            continue
        j = toks.index((True, c, s))
        k = arc_at(j)
        a_in = (unders.index(i) - 1) % n
        a_out = unders.index(i)
        if s > 0:
            relators.append([(k, 1), (a_in, 1), (k, -1), (a_out, -1)])
        else:
            relators.append([(k, -1), (a_in, 1), (k, 1), (a_out, -1)])
    return n, relators


def fox_derivative(word, gen):
    """Abelianized (x_i -> t) Fox derivative of ``word`` by ``gen``."""
    acc = sp.Integer(0)
    prefix = sp.Integer(1)
    for g, e in word:
        if e > 0:
            if g == gen:
                acc += prefix
            prefix *= t
        else:
            prefix /= t
            if g == gen:
                acc -= prefix
    return sp.simplify(acc)


def alexander_oracle(code: str):
    """Alexander polynomial of a classical knot as a sympy Poly in t, up to +-t^k."""
    n, rels = wirtinger(code)
    if n == 0:
        return sp.Poly(1, t)
    A = sp.Matrix([[fox_derivative(r, g) for g in range(n)] for r in rels])
    minor = A[: n - 1, : n - 1].det() if n > 1 else sp.Integer(1)
    num, _ = sp.fraction(sp.together(sp.expand(minor)))
    p = sp.Poly(sp.expand(num), t)
    while p.eval(0) == 0 and not p.is_zero:
        p = sp.Poly(sp.quo(p.as_expr(), t), t)
    return -p if p.eval(0) < 0 else p


# -- birack labelings by brute force -------------------------------------------

def semiarc_crossings(components):
    """Raw crossing slots from token lists: ``{c: (sign, oi, oo, ui, uo)}``."""
    idx = 0
    slots = {}
    free = 0
    for comp in components:
        if not comp:
            idx += 1
            free += 1
            continue
        k = len(comp)
        for p, (over, c, s) in enumerate(comp):
            here, nxt = idx + p, idx + (p + 1) % k
            slots.setdefault(c, {"s": s})["o" if over else "u"] = (here, nxt)
        idx += k
    return idx, {c: (v["s"], *v["o"], *v["u"]) for c, v in slots.items()}


def brute_labelings(components, U, L):
    """All assignments (0-based) satisfying the crossing conditions."""
    n = len(U)
    B = lambda x, y: (U[y][x] - 1, L[x][y] - 1)
    m, xs = semiarc_crossings(components)
    out = []
    for lab in product(range(n), repeat=m):
        good = True
        for s, oi, oo, ui, uo in xs.values():
            if s > 0:
                good = B(lab[oi], lab[ui]) == (lab[uo], lab[oo])
            else:
                good = B(lab[oo], lab[uo]) == (lab[ui], lab[oi])
            if not good:
                break
        if good:
            out.append(lab)
    return out


def all_biracks_of_size(n: int):
    """All (U, L) pairs of size n passing the axioms, checked from scratch."""
    from itertools import product as P
    cells = list(P(range(1, n + 1), repeat=n * n))
    found = []
    for u in cells:
        U = [list(u[i * n:(i + 1) * n]) for i in range(n)]
        for l in cells:
            L = [list(l[i * n:(i + 1) * n]) for i in range(n)]
            if _is_birack(U, L):
                found.append((U, L))
    return found


def _is_birack(U, L):
    n = len(U)
    B = lambda x, y: (U[y][x] - 1, L[x][y] - 1)
    if len({B(x, y) for x in range(n) for y in range(n)}) != n * n:
        return False
    S = {}
    for x in range(n):
        for y in range(n):
            key = (B(x, y)[0], x)
            if key in S:
                return False
            S[key] = (B(x, y)[1], y)
    if len(set(S.values())) != n * n:
        return False
    Sinv = {v: k for k, v in S.items()}
    for f in (lambda x: S[(x, x)][0], lambda x: S[(x, x)][1],
              lambda x: Sinv[(x, x)][0], lambda x: Sinv[(x, x)][1]):
        if len({f(x) for x in range(n)}) != n:
            return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a, b = B(x, y); b, c = B(b, z); a, b = B(a, b)
                b2, c2 = B(y, z); a2, b2 = B(x, b2); b2, c2 = B(b2, c2)
                if (a, b, c) != (a2, b2, c2):
                    return False
    return True


# -- random diagrams and moves --------------------------------------------------

def random_code(rng: random.Random, crossings: int, components: int = 1) -> GaussCode:
    """Random signed Gauss code; every component gets at least one token."""
    toks = []
    for c in range(1, crossings + 1):
        s = rng.choice((1, -1))
        toks += [Token(True, c, s), Token(False, c, s)]
    rng.shuffle(toks)
    components = max(1, min(components, len(toks)))
    cuts = sorted(rng.sample(range(1, len(toks)), components - 1)) if components > 1 else []
    parts, start = [], 0
    for cut in cuts + [len(toks)]:
        parts.append(tuple(toks[start:cut]))
        start = cut
    return GaussCode(tuple(parts))


def r2_insert(code: GaussCode, rng: random.Random) -> GaussCode:
    """Apply a random Reidemeister II move (two new crossings of opposite sign)."""
    comps = [list(c) for c in code.components]
    ids = code.crossing_ids()
    a = (ids[-1] if ids else 0) + 1
    b = a + 1
    s = rng.choice((1, -1))
    c1, c2 = rng.randrange(len(comps)), rng.randrange(len(comps))
    p1, p2 = rng.randrange(len(comps[c1]) + 1), rng.randrange(len(comps[c2]) + 1)
    over = [Token(True, a, s), Token(True, b, -s)]
    under = [Token(False, a, s), Token(False, b, -s)]
    if rng.random() < 0.5:
        under.reverse()
    pieces: dict = {}
    pieces.setdefault((c2, p2), []).append(under)
    if rng.random() < 0.5:
        pieces.setdefault((c1, p1), []).insert(0, over)
    else:
        pieces.setdefault((c1, p1), []).append(over)
    for c, p in sorted(pieces, reverse=True):
        comps[c][p:p] = [tk for piece in pieces[(c, p)] for tk in piece]
    return GaussCode(tuple(tuple(c) for c in comps))


def rotate(code: GaussCode, shifts) -> GaussCode:
    """Start each component's token list at a different point."""
    out = []
    for comp, k in zip(code.components, shifts):
        k = k % len(comp) if comp else 0
        out.append(comp[k:] + comp[:k])
    return GaussCode(tuple(out))


def opposite_kinks(code: GaussCode, component: int = 0) -> GaussCode:
    """Add one positive and one negative curl (writhe unchanged)."""
    comps = [list(c) for c in code.components]
    ids = code.crossing_ids()
    a = (ids[-1] if ids else 0) + 1
    comps[component] = [Token(True, a, 1), Token(False, a, 1)] + comps[component] + \
        [Token(False, a + 1, -1), Token(True, a + 1, -1)]
    return GaussCode(tuple(tuple(c) for c in comps))
