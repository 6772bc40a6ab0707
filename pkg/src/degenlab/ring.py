"""Polynomial rings with exact coefficients and graded monomials.

Monomials are exponent tuples.  A polynomial is a map from monomials to
nonzero field elements; the zero polynomial has no terms.  Rings carry a
grading (one positive integer weight per variable, all 1 by default) that is
used for degree bookkeeping only and never influences term orders.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .field import QQ, PrimeField, Rationals, field_name
from .orders import DegRevLex, TermOrder, cached_key

Mono = Tuple[int, ...]

EXPONENT_CAP = 2**62


class ExponentOverflowError(OverflowError):
    """Raised when a monomial operation would exceed the exponent cap."""


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class ParseError(ValueError):
    """Polynomial or file syntax error with a position."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(message + where)


def mono_mul(a: Mono, b: Mono) -> Mono:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > EXPONENT_CAP for e in out):
        raise ExponentOverflowError(f"exponent above {EXPONENT_CAP}")
    return out


def mono_div(a: Mono, b: Mono) -> Optional[Mono]:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Mono, a: Mono) -> bool:
    return all(y <= x for x, y in zip(a, b))

def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_is_squarefree(a: Mono) -> bool:
    return all(e <= 1 for e in a)


def mono_support(a: Mono) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(a) if e)


def mono_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class PolyRing:
    """A polynomial ring K[x1..xn] with a positive integer grading."""

    def __init__(self, names: Sequence[str], field=QQ, grading: Optional[Sequence[int]] = None):
        names = tuple(names)
        if not names:
            raise ValueError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise ValueError(f"bad variable name {nm!r}")
        if not isinstance(field, (Rationals, PrimeField)):
            raise TypeError(f"unsupported coefficient field {field!r}")
        if grading is None:
            grading = (1,) * len(names)
        grading = tuple(int(w) for w in grading)
        if len(grading) != len(names) or any(w <= 0 for w in grading):
            raise ValueError("grading must assign a positive weight to every variable")
        self.names = names
        self.field = field
        self.grading = grading
        self.n = len(names)
        self._zero_mono = (0,) * self.n

    # -- construction -------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_mono: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {} if c == self.field.zero else {self._zero_mono: c})

    def var(self, i: int) -> "Polynomial":
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range")
        mono = tuple(1 if j == i else 0 for j in range(self.n))
        return Polynomial(self, {mono: self.field.one})

    def gens(self) -> List["Polynomial"]:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, mono: Mono, coeff=1) -> "Polynomial":
        mono = tuple(mono)
        if len(mono) != self.n or any(e < 0 for e in mono):
            raise ValueError(f"bad exponent tuple {mono}")
        c = self.field(coeff)
        return Polynomial(self, {mono: c} if c != self.field.zero else {})

    def from_terms(self, terms: Dict[Mono, object]) -> "Polynomial":
        clean = {}
        for mono, c in terms.items():
            c = self.field(c) if not self._is_elem(c) else c
            if c != self.field.zero:
                mono = tuple(mono)
                if len(mono) != self.n or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono}")
                clean[mono] = c
        return Polynomial(self, clean)

    def _is_elem(self, c) -> bool:
        if self.field == QQ:
            return isinstance(c, Fraction)
        return isinstance(c, int) and not isinstance(c, bool)

    def from_string(self, text: str, line: Optional[int] = None) -> "Polynomial":
        return _parse_polynomial(self, text, line)

    # -- degrees ------------------------------------------------------

    def mono_degree(self, mono: Mono) -> int:
        return sum(w * e for w, e in zip(self.grading, mono))

    def is_standard_graded(self) -> bool:
        return all(w == 1 for w in self.grading)

    # -- derived rings ------------------------------------------------

    def extend(self, extra_names: Sequence[str], extra_grading: Optional[Sequence[int]] = None,
               prepend: bool = False) -> "PolyRing":
        """New ring with extra variables appended (or prepended)."""
        extra_names = tuple(extra_names)
        if extra_grading is None:
            extra_grading = (1,) * len(extra_names)
        if prepend:
            return PolyRing(extra_names + self.names, self.field, tuple(extra_grading) + self.grading)
        return PolyRing(self.names + extra_names, self.field, self.grading + tuple(extra_grading))

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.names, field, self.grading)

    def fresh_name(self, stem: str) -> str:
        """A variable name based on `stem` not already used by the ring."""
        if stem not in self.names:
            return stem
        k = 0
        while f"{stem}{k}" in self.names:
            k += 1
        return f"{stem}{k}"

    # -- protocol -----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.names == self.names
                and other.field == self.field and other.grading == self.grading)

    def __hash__(self):
        return hash((self.names, self.field, self.grading))

    def __repr__(self):
        g = "" if self.is_standard_graded() else f", grading={self.grading}"
        return f"PolyRing({','.join(self.names)}; {field_name(self.field)}{g})"


class Polynomial:
    """A polynomial over a PolyRing.  Treat instances as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Mono, object]):
        self.ring = ring
        self.terms = terms

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_mono, self.ring.field.zero)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> Optional[int]:
        """Largest weighted degree of a term, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ring.mono_degree(m) for m in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        fld = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, fld.zero), c)
            if s == fld.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.ring.constant(other).__sub__(self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if c == self.ring.field.zero:
                return self.ring.zero()
            fld = self.ring.field
            return Polynomial(self.ring, {m: fld.mul(cc, c) for m, cc in self.terms.items()})
        self._check(other)
        fld = self.ring.field
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: Dict[Mono, object] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                s = fld.add(out.get(m, fld.zero), fld.mul(c1, c2))
                if s == fld.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ValueError("division is only allowed by a nonzero constant")
            other = other.constant_coeff()
        return self.__mul__(self.ring.field.inv(self.ring.field(other)))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def times_term(self, mono: Mono, coeff) -> "Polynomial":
        """Multiply by a single term coeff * x^mono."""
        fld = self.ring.field
        if coeff == fld.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(m, mono): fld.mul(c, coeff) for m, c in self.terms.items()})

    def subs(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at x_i -> images[i]; images live in a common ring."""
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        target = images[0].ring
        out = target.zero()
        pow_cache: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in sorted(self.terms.items()):
            part = target.constant(c if target.field == self.ring.field else c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** e
                    part = part * pow_cache[key]
            out = out + part
        return out

    def map_exponents(self, new_ring: PolyRing, mono_map) -> "Polynomial":
        """Move to another ring by rewriting each exponent tuple."""
        out: Dict[Mono, object] = {}
        fld = new_ring.field
        for m, c in self.terms.items():
            nm = mono_map(m)
            s = fld.add(out.get(nm, fld.zero), c)
            if s == fld.zero:
                out.pop(nm, None)
            else:
                out[nm] = s
        return Polynomial(new_ring, out)

    # -- leading data ---------------------------------------------------

    def leading_monomial(self, order: TermOrder) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=cached_key(order, self.ring.n))

    def leading_term(self, order: TermOrder) -> Tuple[Mono, object]:
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def monic(self, order: TermOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        fld = self.ring.field
        inv = fld.inv(c)
        return Polynomial(self.ring, {m: fld.mul(cc, inv) for m, cc in self.terms.items()})

    def sorted_terms(self, order: TermOrder, reverse: bool = True) -> List[Tuple[Mono, object]]:
        key = cached_key(order, self.ring.n)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    # -- protocol -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            return self.__sub__(other).is_zero()
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return self.to_string()

    def to_string(self) -> str:
        """Deterministic ASCII form, terms in descending graded-lex order."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        parts: List[str] = []
        for m, c in items:
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            body = "*".join(factors)
            neg, mag = _coeff_parts(self.ring, c)
            if not body:
                piece = mag
            elif mag == "1":
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not parts:
                parts.append(("-" if neg else "") + piece)
            else:
                parts.append(("- " if neg else "+ ") + piece)
        return " ".join(parts)


def _coeff_parts(ring: PolyRing, c) -> Tuple[bool, str]:
    """(is_negative, magnitude_string) for printing a coefficient."""
    if ring.field == QQ:
        neg = c < 0
        mag = -c if neg else c
        return neg, str(mag)
    return False, str(c)


# -- parsing ------------------------------------------------------------


class _Tok:
    __slots__ = ("kind", "value", "col")

    def __init__(self, kind, value, col):
        self.kind, self.value, self.col = kind, value, col


def _tokenize(text: str, line: Optional[int]) -> List[_Tok]:
    toks: List[_Tok] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(text[i:j]), i + 1))
            i = j
            continue
        m = _NAME_RE.match(text, i)
        if m:
            toks.append(_Tok("name", m.group(0), i + 1))
            i = m.end()
            continue
        if text.startswith("**", i):
            toks.append(_Tok("^", "^", i + 1))
            i += 2
            continue
        if ch in "+-*/^()":
            toks.append(_Tok(ch, ch, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, i + 1)
    toks.append(_Tok("end", None, len(text) + 1))
    return toks


def _split_names(ring: PolyRing, word: str) -> Optional[List[int]]:
    """Split a juxtaposed word like 'x1x2' into variable indices, longest match first."""
    by_len = sorted(range(ring.n), key=lambda i: -len(ring.names[i]))
    out: List[int] = []

    def walk(pos: int) -> bool:
        if pos == len(word):
            return True
        for i in by_len:
            nm = ring.names[i]
            if word.startswith(nm, pos):
                out.append(i)
                if walk(pos + len(nm)):
                    return True
                out.pop()
        return False

    return out if walk(0) else None


class _Parser:
    def __init__(self, ring: PolyRing, toks: List[_Tok], line: Optional[int]):
        self.ring = ring
        self.toks = toks
        self.pos = 0
        self.line = line

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, msg: str, tok: _Tok):
        raise ParseError(msg, self.line, tok.col)

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.value!r}", tok)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        p = self.term() * sign
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            sign = 1 if op == "+" else -1
            while self.peek().kind in ("+", "-"):
                if self.take().kind == "-":
                    sign = -sign
            p = p + self.term() * sign
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok.kind in ("*", "/"):
                op = self.take().kind
                rhs = self.factor()
                if op == "/":
                    if not rhs.is_constant() or rhs.is_zero():
                        self.fail("division is only allowed by a nonzero constant", tok)
                    p = p * self.ring.field.inv(rhs.constant_coeff())
                else:
                    p = p * rhs
            elif tok.kind in ("int", "name", "("):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            tok = self.take()
            sign = False
            if self.peek().kind == "-":
                sign = True
                self.take()
            etok = self.peek()
            if etok.kind != "int" or sign:
                self.fail("exponent must be a non-negative integer", etok)
            self.take()
            base = base ** etok.value
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "int":
            return self.ring.constant(tok.value)
        if tok.kind == "name":
            idxs = _split_names(self.ring, tok.value)
            if idxs is None:
                self.fail(f"unknown variable {tok.value!r}", tok)
            p = self.ring.one()
            for i in idxs:
                p = p * self.ring.var(i)
            return p
        if tok.kind == "(":
            p = self.expr()
            closing = self.take()
            if closing.kind != ")":
                self.fail("expected ')'", closing)
            return p
        self.fail(f"unexpected {tok.value!r}", tok)


def _parse_polynomial(ring: PolyRing, text: str, line: Optional[int]) -> Polynomial:
    if not text.strip():
        raise ParseError("empty polynomial", line, 1)
    return _Parser(ring, _tokenize(text, line), line).parse()
