"""Sparse multivariate Laurent polynomials over Z and Z_n.

A :class:`RingSpec` names the coefficient ring and the (Laurent) variables;
a :class:`LaurentPoly` is an immutable map from exponent vectors to nonzero
coefficients.  Monomials are ordered graded-lexicographically with the first
declared variable most significant, and every printed or normalized form is
taken with respect to that order.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "ParseError",
    "RingMismatchError",
    "UnsupportedRingError",
    "RingSpec",
    "LaurentPoly",
    "parse_ring",
    "parse_poly",
    "format_poly",
    "arith",
    "is_unit",
    "normalize_up_to_units",
    "divide_exact",
    "gcd_univariate",
    "term_key",
]


class ParseError(ValueError):
    """Raised on malformed polynomial or ring text; ``position`` is 0-based."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class RingMismatchError(ValueError):
    pass


class UnsupportedRingError(ValueError):
    """The requested operation is not defined over this coefficient ring."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring ``Z`` (modulus 0) or ``Z_n`` with Laurent variables.

    ``laurent`` flags which variables may carry negative exponents; it
    defaults to all of them, which is the only case the ring header grammar
    produces.
    """

    modulus: int = 0
    variables: tuple[str, ...] = ()
    laurent: tuple[bool, ...] | None = None

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"modulus must be 0 or >= 2, got {self.modulus}")
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        for v in variables:
            if not re.fullmatch(r"[a-z]", v):
                raise ValueError(f"variable names are single letters a-z, got {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if self.laurent is None:
            object.__setattr__(self, "laurent", (True,) * len(variables))
        elif len(self.laurent) != len(variables):
            raise ValueError("laurent flags must match the variables")
        else:
            object.__setattr__(self, "laurent", tuple(bool(f) for f in self.laurent))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_domain(self) -> bool:
        return self.modulus == 0 or _is_prime(self.modulus)

    @property
    def is_field_coefficients(self) -> bool:
        return self.modulus != 0 and _is_prime(self.modulus)

    def reduce(self, c: int) -> int:
        return c % self.modulus if self.modulus else c

    def coeff_is_unit(self, c: int) -> bool:
        c = self.reduce(c)
        if self.modulus == 0:
            return c in (1, -1)
        return math.gcd(c, self.modulus) == 1

    def coeff_inverse(self, c: int) -> int:
        c = self.reduce(c)
        if self.modulus == 0:
            if c not in (1, -1):
                raise ZeroDivisionError(f"{c} is not a unit of Z")
            return c
        return pow(c, -1, self.modulus)

    def zero_exponent(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, {self.zero_exponent(): c})

    def monomial(self, exponent: Iterable[int], c: int = 1) -> "LaurentPoly":
        return LaurentPoly(self, {tuple(exponent): c})

    def var(self, name: str) -> "LaurentPoly":
        i = self.variables.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return LaurentPoly(self, {tuple(e): 1})

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.var(v) for v in self.variables)

    def header(self) -> str:
        base = f"Z{self.modulus}" if self.modulus else "Z"
        if not self.variables:
            return base
        return f"{base}[{','.join(self.variables)}]"

    def __str__(self) -> str:
        return self.header()


def term_key(exponent: tuple[int, ...]) -> tuple:
    """Sort key realising graded-lex order (first variable most significant)."""
    return (sum(exponent), exponent)


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    Coefficients are stored reduced (``0..n-1`` over ``Z_n``) and zero
    coefficients are never stored.  Supports ``+ - *`` with other polynomials
    of the same ring and with Python ints, ``**`` with nonnegative exponents
    (negative exponents only for units), and equality/hashing by value.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple[int, ...], int]):
        clean: dict[tuple[int, ...], int] = {}
        n = ring.nvars
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {ring.header()}")
            c = ring.reduce(int(c))
            if c:
                clean[e] = clean.get(e, 0) + c
        if ring.modulus:
            clean = {e: c % ring.modulus for e, c in clean.items()}
        self.ring = ring
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict) -> "LaurentPoly":
        # terms must already be reduced and free of zeros
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        z = self.ring.zero_exponent()
        return all(e == z for e in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(self.ring.zero_exponent(), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items(), key=lambda ec: term_key(ec[0]))

    def min_term(self) -> tuple[tuple[int, ...], int]:
        e = min(self._terms, key=term_key)
        return e, self._terms[e]

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        e = max(self._terms, key=term_key)
        return e, self._terms[e]

    def sort_key(self) -> tuple:
        return (len(self._terms), tuple((term_key(e), c) for e, c in self.sorted_terms()))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring.header()} vs {other.ring.header()}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mod = self.ring.modulus
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if mod:
                v %= mod
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        mod = self.ring.modulus
        if mod:
            return LaurentPoly._raw(self.ring, {e: (-c) % mod for e, c in self._terms.items()})
        return LaurentPoly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mod = self.ring.modulus
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if mod:
            out = {e: c % mod for e, c in out.items()}
        return LaurentPoly._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            unit, inv = is_unit(self)
            if not unit:
                raise ZeroDivisionError(f"{self} is not a unit")
            return inv ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_monomial(self, exponent: tuple[int, ...], c: int = 1) -> "LaurentPoly":
        """Multiply by ``c * x^exponent``."""
        mod = self.ring.modulus
        out = {}
        for e, v in self._terms.items():
            w = v * c
            if mod:
                w %= mod
            if w:
                out[tuple(a + b for a, b in zip(e, exponent))] = w
        return LaurentPoly._raw(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, {self.ring.header()})"

    def __str__(self):
        return format_poly(self)


def arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    """Apply ``op`` in {"add", "sub", "mul"}; rings must match."""
    if p.ring != q.ring:
        raise RingMismatchError(f"{p.ring.header()} vs {q.ring.header()}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


# -- text ---------------------------------------------------------------

_RING_RE = re.compile(r"\s*Z_?(\d*)\s*(?:\[\s*([a-z](?:\s*,\s*[a-z])*)?\s*\])?\s*$")


def parse_ring(text: str) -> RingSpec:
    """Parse a ring header such as ``Z[q]``, ``Z5[q]``, ``Z[t,r]`` or ``Z5``."""
    m = _RING_RE.match(text)
    if not m:
        raise ParseError(f"bad ring header {text.strip()!r}")
    modulus = int(m.group(1)) if m.group(1) else 0
    if modulus == 1:
        raise ParseError("Z1 is the zero ring and is not supported")
    variables = tuple(v.strip() for v in m.group(2).split(",")) if m.group(2) else ()
    try:
        return RingSpec(modulus, variables)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


class _PolyParser:
    def __init__(self, text: str, ring: RingSpec):
        self.text = text
        self.ring = ring
        self.i = 0

    def error(self, msg: str):
        raise ParseError(msg, self.i, self.text)

    def skip(self):
        t = self.text
        while self.i < len(t) and t[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected integer")
        return int(self.text[start:self.i])

    def term(self, exponents: list[int]) -> int:
        coeff = 1
        have_coeff = False
        if self.peek().isdigit():
            coeff = self.integer()
            have_coeff = True
            if self.peek() == "*":
                self.i += 1
                if not self.peek().isalpha():
                    self.error("expected variable after '*'")
        nfactors = 0
        while self.peek().isalpha():
            name = self.text[self.i]
            if name not in self.ring.variables:
                self.error(f"unknown variable {name!r}")
            idx = self.ring.variables.index(name)
            self.i += 1
            power = 1
            if self.peek() == "^":
                self.i += 1
                neg = False
                if self.peek() == "-":
                    neg = True
                    self.i += 1
                pos = self.i
                power = self.integer()
                if neg:
                    power = -power
                    if not self.ring.laurent[idx]:
                        self.i = pos
                        self.error(f"negative exponent on non-Laurent variable {name!r}")
            exponents[idx] += power
            nfactors += 1
            if self.peek() == "*":
                self.i += 1
                if not self.peek().isalpha():
                    self.error("expected variable after '*'")
        if not have_coeff and not nfactors:
            self.error("expected term")
        return coeff

    def parse(self) -> LaurentPoly:
        terms: dict[tuple[int, ...], int] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        while True:
            e = [0] * self.ring.nvars
            c = self.term(e)
            key = tuple(e)
            terms[key] = terms.get(key, 0) + sign * c
            nxt = self.peek()
            if not nxt:
                break
            if nxt not in "+-":
                self.error(f"unexpected character {nxt!r}")
            sign = -1 if nxt == "-" else 1
            self.i += 1
        return LaurentPoly(self.ring, terms)


def parse_poly(text: str, ring: RingSpec) -> LaurentPoly:
    """Parse ``text`` such as ``"1+2q"`` or ``"3*q^-1 + 7"`` in ``ring``.

    Implicit and explicit multiplication are both accepted.  Coefficients are
    reduced modulo the ring's modulus.
    """
    return _PolyParser(text, ring).parse()


def _format_monomial(ring: RingSpec, e: tuple[int, ...]) -> str:
    parts = []
    for name, k in zip(ring.variables, e):
        if k == 0:
            continue
        parts.append(name if k == 1 else f"{name}^{k}")
    return "".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Deterministic ascending-order text, e.g. ``"1+2q+4q^2"``; ``"0"`` for zero."""
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = _format_monomial(p.ring, e)
        mag = abs(c)
        body = mono if (mono and mag == 1) else f"{mag}{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


# -- units, normalization, division -------------------------------------

def is_unit(p: LaurentPoly) -> tuple[bool, LaurentPoly | None]:
    """Recognise monomial units ``u*m``; returns ``(True, inverse)`` or ``(False, None)``.

    Over composite moduli only monomial units are recognised.
    """
    if len(p) != 1:
        return False, None
    (e, c), = p.items()
    ring = p.ring
    if not ring.coeff_is_unit(c):
        return False, None
    for k, lau in zip(e, ring.laurent):
        if k != 0 and not lau:
            return False, None
    inv = ring.monomial(tuple(-k for k in e), ring.coeff_inverse(c))
    return True, inv


def normalize_up_to_units(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` up to unit multiples.

    Shifts the term-order-minimal term to a constant, then scales it to 1 when
    its coefficient is invertible.  Otherwise over Z only the sign is fixed,
    and over a composite ``Z_n`` the coefficient unit giving the smallest
    coefficient vector is applied.  Zero maps to zero.
    """
    if p.is_zero():
        return p
    ring = p.ring
    e, c = p.min_term()
    shift = tuple(-k for k in e)
    if ring.coeff_is_unit(c):
        return p.scale_monomial(shift, ring.coeff_inverse(c))
    if ring.modulus == 0:
        return p.scale_monomial(shift, -1 if c < 0 else 1)
    # composite modulus, non-unit c: pick the unit giving the smallest
    # coefficient vector so that every unit multiple lands on the same form
    n = ring.modulus
    order = [e for e, _ in p.sorted_terms()]
    best = min((u for u in range(1, n) if ring.coeff_is_unit(u)),
               key=lambda u: [p._terms[e] * u % n for e in order])
    return p.scale_monomial(shift, best)


def divide_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``p / d``; raises ``ArithmeticError`` if ``d`` does not divide ``p``.

    Requires a domain coefficient ring.  Leading-term division in graded-lex
    order; the minimal term bounds the quotient so non-divisibility is
    detected instead of looping.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.ring != d.ring:
        raise RingMismatchError(f"{p.ring.header()} vs {d.ring.header()}")
    if p.is_zero():
        return p
    ring = p.ring
    if not ring.is_domain:
        raise UnsupportedRingError(f"exact division needs a domain, not {ring.header()}")
    if len(d) == 1:
        (de, dc), = d.items()
        neg = tuple(-k for k in de)
        if ring.modulus:
            return p.scale_monomial(neg, ring.coeff_inverse(dc))
        out = {}
        for e, c in p.items():
            qv, r = divmod(c, dc)
            if r:
                raise ArithmeticError(f"{d} does not divide {p}")
            out[tuple(a + b for a, b in zip(e, neg))] = qv
        return LaurentPoly._raw(ring, out)
    le, lc = d.leading_term()
    me, _ = d.min_term()
    pe_min, _ = p.min_term()
    floor = term_key(tuple(a - b for a, b in zip(pe_min, me)))
    inv = ring.coeff_inverse(lc) if ring.modulus else None
    rem = dict(p._terms)
    quot: dict[tuple[int, ...], int] = {}
    mod = ring.modulus
    dterms = list(d.items())
    while rem:
        re_, rc = max(rem.items(), key=lambda ec: term_key(ec[0]))
        qe = tuple(a - b for a, b in zip(re_, le))
        if term_key(qe) < floor:
            raise ArithmeticError(f"{d} does not divide {p}")
        if mod:
            qc = (rc * inv) % mod
        else:
            qc, r = divmod(rc, lc)
            if r:
                raise ArithmeticError(f"{d} does not divide {p}")
        quot[qe] = qc
        for e, c in dterms:
            key = tuple(a + b for a, b in zip(e, qe))
            v = rem.get(key, 0) - qc * c
            if mod:
                v %= mod
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(ring, quot)


# -- univariate gcd -------------------------------------------------------

def _to_dense(p: LaurentPoly) -> list[int]:
    """Coefficient list (ascending) after clearing the lowest power."""
    lo = min(e[0] for e in p._terms)
    hi = max(e[0] for e in p._terms)
    out = [0] * (hi - lo + 1)
    for e, c in p.items():
        out[e[0] - lo] = c
    return out


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        r = a[:]
        while len(r) >= len(b):
            f = (r[-1] * inv) % p
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] = (r[shift + i] - f * c) % p
            _trim(r)
            if not r:
                break
        a, b = b, r
    return a


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _gcd_over_z(a: list[int], b: list[int]) -> list[int]:
    ca, cb = _content(a), _content(b)
    pa = [c // ca for c in a]
    pb = [c // cb for c in b]
    # Euclid over Q on primitive parts, then clear denominators and content
    x = [Fraction(c) for c in pa]
    y = [Fraction(c) for c in pb]
    _trim(x)
    _trim(y)
    while y:
        r = x[:]
        while len(r) >= len(y) and r:
            f = r[-1] / y[-1]
            shift = len(r) - len(y)
            for i, c in enumerate(y):
                r[shift + i] -= f * c
            _trim(r)
        x, y = y, r
    den = 1
    for c in x:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in x]
    g = _content(ints)
    prim = [c // g for c in ints]
    cont = math.gcd(ca, cb)
    return [cont * c for c in prim]


def gcd_univariate(ps: Iterable[LaurentPoly]) -> LaurentPoly:
    """Normalized gcd of univariate Laurent polynomials over Z or Z_p.

    Zeros are ignored; the gcd of an empty or all-zero list is 0.  Over Z the
    integer content of the gcd is kept.  Rings with no variables are accepted
    (integer gcd over Z, 1 over a field).
    """
    ps = list(ps)
    ring = None
    for p in ps:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError(f"{ring.header()} vs {p.ring.header()}")
    if ring is None:
        raise ValueError("gcd of an empty list needs a ring; use gcd_univariate_in")
    return gcd_univariate_in(ps, ring)


def gcd_univariate_in(ps: Iterable[LaurentPoly], ring: RingSpec) -> LaurentPoly:
    if ring.nvars > 1:
        raise UnsupportedRingError(f"multivariate gcd is not supported ({ring.header()})")
    if ring.modulus and not ring.is_field_coefficients:
        raise UnsupportedRingError(f"gcd over composite modulus is undefined ({ring.header()})")
    nonzero = [p for p in ps if not p.is_zero()]
    if not nonzero:
        return ring.zero()
    if ring.nvars == 0:
        if ring.modulus:
            return ring.one()
        g = 0
        for p in nonzero:
            g = math.gcd(g, p.constant_value())
        return ring.const(g)
    acc = _to_dense(nonzero[0])
    for p in nonzero[1:]:
        if len(acc) == 1 and (ring.modulus or abs(acc[0]) == 1):
            break
        b = _to_dense(p)
        acc = _gcd_mod_p(acc, b, ring.modulus) if ring.modulus else _gcd_over_z(acc, b)
    result = LaurentPoly(ring, {(i,): c for i, c in enumerate(acc) if c})
    return normalize_up_to_units(result)
