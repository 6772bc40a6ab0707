"""Exact Hilbert series as rational functions.

A series is a Laurent polynomial numerator over a denominator of the form
prod_i (1 - t^{w_i}), one factor per ring variable (weight w_i).  Numerators
of graded quotients are computed from a monomial initial ideal by the usual
pivot recursion; everything stays in integer arithmetic.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .groebner import Ideal, MonomialIdeal
from .orders import DegRevLex, TermOrder
from .ring import Mono, mono_coprime, mono_support

Laurent = Dict[int, int]


def _clean(coeffs: Laurent) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((e, c) for e, c in coeffs.items() if c))


def _laurent_mul(a: Laurent, b: Laurent) -> Laurent:
    out: Laurent = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


class RationalSeries:
    """numerator(t) / prod_i (1 - t^{denominator[i]}), all exact."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Laurent, denominator: Sequence[int]):
        self.numerator: Tuple[Tuple[int, int], ...] = _clean(numerator)
        self.denominator: Tuple[int, ...] = tuple(sorted(denominator))
        if any(w <= 0 for w in self.denominator):
            raise ValueError("denominator weights must be positive")

    @classmethod
    def zero(cls, denominator: Sequence[int]) -> "RationalSeries":
        return cls({}, denominator)

    def numerator_dict(self) -> Laurent:
        return dict(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def shift(self, k: int) -> "RationalSeries":
        """Multiply by t^k (a degree twist)."""
        return RationalSeries({e + k: c for e, c in self.numerator}, self.denominator)

    def _match(self, other: "RationalSeries") -> Tuple[Laurent, Laurent, Tuple[int, ...]]:
        """Rewrite both numerators over the union denominator."""
        if self.denominator == other.denominator:
            return self.numerator_dict(), other.numerator_dict(), self.denominator
        common = list(self.denominator)
        for w in other.denominator:
            common.append(w)
        # multiply each numerator by the factors it is missing
        a = self.numerator_dict()
        for w in other.denominator:
            a = _laurent_mul(a, {0: 1, w: -1})
        b = other.numerator_dict()
        for w in self.denominator:
            b = _laurent_mul(b, {0: 1, w: -1})
        return a, b, tuple(common)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        a, b, den = self._match(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return RationalSeries(a, den)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        a, b, den = self._match(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) - c
        return RationalSeries(a, den)

    def __neg__(self) -> "RationalSeries":
        return RationalSeries({e: -c for e, c in self.numerator}, self.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        a, b, _ = self._match(other)
        return _clean(a) == _clean(b)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def pole_order(self) -> int:
        """Order of the pole at t = 1; the Krull dimension for a Hilbert series."""
        if self.is_zero():
            return 0
        num = self.numerator_dict()
        cancelled = 0
        while sum(num.values()) == 0 and num:
            num = _divide_by_one_minus_t(num)
            cancelled += 1
        return len(self.denominator) - cancelled

    def expand(self, lo: int, hi: int) -> Dict[int, int]:
        """Power-series coefficients of the series for degrees lo..hi."""
        if self.is_zero():
            return {d: 0 for d in range(lo, hi + 1)}
        base = min(e for e, _ in self.numerator)
        coeffs = {e: c for e, c in self.numerator}
        for w in self.denominator:
            for d in range(base + w, hi + 1):
                prev = coeffs.get(d - w)
                if prev:
                    coeffs[d] = coeffs.get(d, 0) + prev
        return {d: coeffs.get(d, 0) for d in range(lo, hi + 1)}

    def coefficient(self, d: int) -> int:
        return self.expand(d, d)[d]

    def support_min(self) -> Optional[int]:
        return min((e for e, _ in self.numerator), default=None)

    def support_max_numerator(self) -> Optional[int]:
        return max((e for e, _ in self.numerator), default=None)

    def is_nonnegative_through(self, hi: int) -> bool:
        lo = self.support_min()
        if lo is None:
            return True
        return all(c >= 0 for c in self.expand(lo, hi).values())

    def __repr__(self):
        if self.is_zero():
            return "0"
        num = " + ".join(f"{c}*t^{e}" if e else str(c) for e, c in self.numerator)
        den = "".join(f"(1-t^{w})" if w != 1 else "(1-t)" for w in self.denominator)
        return f"({num}) / {den}"


def _divide_by_one_minus_t(num: Laurent) -> Laurent:
    """Exact division of a Laurent polynomial with num(1)=0 by (1 - t)."""
    if not num:
        return {}
    lo, hi = min(num), max(num)
    out: Laurent = {}
    acc = 0
    for e in range(lo, hi):
        acc += num.get(e, 0)
        if acc:
            out[e] = acc
    assert acc + num.get(hi, 0) == 0, "numerator not divisible by (1 - t)"
    return out


def monomial_quotient_numerator(grading: Sequence[int], gens: Sequence[Mono]) -> Laurent:
    """Numerator of the Hilbert series of S/(gens) for a monomial ideal."""
    grading = tuple(grading)

    def wdeg(m: Mono) -> int:
        return sum(w * e for w, e in zip(grading, m))

    def minimalize(monos: List[Mono]) -> Tuple[Mono, ...]:
        monos = sorted(set(monos), key=lambda m: (sum(m), m))
        out: List[Mono] = []
        for m in monos:
            if not any(all(ge <= me for ge, me in zip(g, m)) for g in out):
                out.append(m)
        return tuple(out)

    memo: Dict[Tuple[Mono, ...], Laurent] = {}

    def recurse(monos: Tuple[Mono, ...]) -> Laurent:
        if any(sum(m) == 0 for m in monos):
            return {}
        if not monos:
            return {0: 1}
        got = memo.get(monos)
        if got is not None:
            return got
        if all(mono_coprime(a, b) for i, a in enumerate(monos) for b in monos[i + 1:]):
            out: Laurent = {0: 1}
            for m in monos:
                out = _laurent_mul(out, {0: 1, wdeg(m): -1})
            memo[monos] = out
            return out
        counts: Dict[int, int] = {}
        for m in monos:
            for v in mono_support(m):
                counts[v] = counts.get(v, 0) + 1
        pivot = max(sorted(counts), key=lambda v: counts[v])
        plus = minimalize([m for m in monos if m[pivot] == 0]
                          + [tuple(1 if i == pivot else 0 for i in range(len(grading)))])
        colon = minimalize([tuple(e - 1 if i == pivot and e else e for i, e in enumerate(m))
                            for m in monos])
        left = recurse(plus)
        right = recurse(colon)
        out = dict(left)
        w = grading[pivot]
        for e, c in right.items():
            out[e + w] = out.get(e + w, 0) + c
        out = {e: c for e, c in out.items() if c}
        memo[monos] = out
        return out

    return recurse(tuple(_minimal_input(gens)))


def _minimal_input(gens: Sequence[Mono]) -> List[Mono]:
    monos = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    out: List[Mono] = []
    for m in monos:
        if not any(all(ge <= me for ge, me in zip(g, m)) for g in out):
            out.append(m)
    return out


def hilbert_series_monomial(M: MonomialIdeal) -> RationalSeries:
    """Hilbert series of S/M for a monomial ideal M."""
    num = monomial_quotient_numerator(M.ring.grading, M.gens)
    return RationalSeries(num, M.ring.grading)


def hilbert_series_quotient(I: Ideal, order: Optional[TermOrder] = None) -> RationalSeries:
    """Hilbert series of S/I, computed through a monomial initial ideal."""
    key = ("hilbert", order)
    got = I.cache.get(key)
    if got is None:
        if I.is_zero():
            got = RationalSeries({0: 1}, I.ring.grading)
        else:
            got = hilbert_series_monomial(I.initial_ideal(order or DegRevLex()))
        I.cache[key] = got
    return got


def quotient_dimension(I: Ideal) -> int:
    """Krull dimension of S/I."""
    return hilbert_series_quotient(I).pole_order()


def free_module_series(twists: Iterable[int], grading: Sequence[int]) -> RationalSeries:
    """Hilbert series of a graded free module with the given generator degrees."""
    num: Laurent = {}
    for d in twists:
        num[d] = num.get(d, 0) + 1
    return RationalSeries(num, grading)


def monomials_of_degree(grading: Sequence[int], degree: int) -> List[Mono]:
    """All exponent tuples of the given weighted degree, in reverse lex order."""
    grading = tuple(grading)
    out: List[Mono] = []

    def walk(pos: int, left: int, prefix: Tuple[int, ...]) -> None:
        if pos == len(grading) - 1:
            q, r = divmod(left, grading[pos])
            if r == 0:
                out.append(prefix + (q,))
            return
        w = grading[pos]
        for e in range(left // w, -1, -1):
            walk(pos + 1, left - e * w, prefix + (e,))

    if degree < 0:
        return []
    walk(0, degree, ())
    return out
