"""Groebner degenerations: weight realization, homogenization, generic initial ideals.

`realize_weight` turns a term order into a non-negative integer weight vector
that picks out the same initial ideal, by solving the strict inequalities
read off the reduced Groebner basis with Fourier-Motzkin elimination over
exact rationals.  `homogenize_w` builds the flat family over K[x, t] whose
special fibre is the initial ideal.  `generic_initial_ideal` is probabilistic
with seeded trials that must agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .groebner import (GroebnerBasis, Ideal, MonomialIdeal, buchberger,
                       ideal_equal, ideal_quotient)
from .linalg import is_invertible, row_reduce
from .orders import DegRevLex, TermOrder, WeightOrder, cached_key
from .ring import Mono, PolyRing, Polynomial

WeightVector = Tuple[int, ...]


class WeightRealizationError(RuntimeError):
    """The Fourier-Motzkin system was infeasible or the certificate failed."""


class GinUnstableError(RuntimeError):
    """Random trials of a generic initial ideal disagreed."""


# -- Fourier-Motzkin ------------------------------------------------------


def _normalize_row(coeffs: Sequence[int], rhs: int) -> Tuple[Tuple[int, ...], int]:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, rhs)
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs //= g
    return tuple(coeffs), rhs


def _fourier_motzkin(rows: List[Tuple[Tuple[int, ...], int]], n: int,
                     max_rows: int = 500000) -> List[Fraction]:
    """Find w with sum_i coeffs[i] * w_i >= rhs for every row.

    Eliminates variables one at a time, then back-substitutes picking the
    smallest feasible value for each variable.  Raises on infeasibility.
    """
    system = {_normalize_row(c, r) for c, r in rows}
    stack: List[Tuple[int, List[Tuple[Tuple[int, ...], int]]]] = []
    remaining = list(range(n))
    while remaining:
        counts = []
        for v in remaining:
            pos = sum(1 for c, _ in system if c[v] > 0)
            neg = sum(1 for c, _ in system if c[v] < 0)
            counts.append((pos * neg, v))
        _, var = min(counts)
        remaining.remove(var)
        pos = [(c, r) for c, r in system if c[var] > 0]
        neg = [(c, r) for c, r in system if c[var] < 0]
        zero = {(c, r) for c, r in system if c[var] == 0}
        stack.append((var, pos + neg))
        new = set(zero)
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = cp[var], -cn[var]
                comb = tuple(b * x + a * y for x, y in zip(cp, cn))
                new.add(_normalize_row(comb, b * rp + a * rn))
                if len(new) > max_rows:
                    raise WeightRealizationError("inequality system blew up during elimination")
        system = new
    for c, r in system:
        if r > 0:
            raise WeightRealizationError("weight system is infeasible")
    values: Dict[int, Fraction] = {}
    for var, saved in reversed(stack):
        lo = Fraction(0)
        hi: Optional[Fraction] = None
        for c, r in saved:
            rest = sum(Fraction(c[j]) * values[j] for j in range(n) if j != var and c[j])
            bound = (Fraction(r) - rest) / c[var]
            if c[var] > 0:
                lo = max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if hi is not None and lo > hi:
            raise WeightRealizationError("back substitution hit an empty interval")
        values[var] = lo
    return [values[i] for i in range(n)]


def realize_weight(I: Ideal, order: TermOrder) -> WeightVector:
    """A non-negative integer w with in_w(I) equal to in_order(I), certified."""
    gb = I.groebner(order)
    n = I.ring.n
    diffs = set()
    for g in gb:
        lm = g.leading_monomial(order)
        for m in g.terms:
            if m != lm:
                diffs.add(tuple(a - b for a, b in zip(lm, m)))
    if not diffs:
        return (0,) * n
    rows = [(d, 1) for d in sorted(diffs)]
    rows += [(tuple(1 if i == j else 0 for j in range(n)), 0) for i in range(n)]
    solution = _fourier_motzkin(rows, n)
    scale = lcm(*(v.denominator for v in solution)) if solution else 1
    w = [int(v * scale) for v in solution]
    g = 0
    for v in w:
        g = gcd(g, v)
    if g > 1:
        w = [v // g for v in w]
    weight = tuple(w)
    for d in diffs:
        if sum(a * b for a, b in zip(weight, d)) <= 0:
            raise WeightRealizationError("computed weight fails a strict inequality")
    _certify_weight(I, weight, order, gb)
    return weight


def _certify_weight(I: Ideal, w: WeightVector, order: TermOrder, gb: GroebnerBasis) -> None:
    """Check the reduced basis is unchanged under WeightOrder(w, order)."""
    refined = WeightOrder(w, order)
    again = buchberger(I.gens, refined)
    if sorted(g.to_string() for g in again) != sorted(g.to_string() for g in gb):
        raise WeightRealizationError("refined order produced a different reduced basis")
    for g in gb:
        lm = g.leading_monomial(order)
        top = max(sum(a * b for a, b in zip(w, m)) for m in g.terms)
        w_leads = [m for m in g.terms if sum(a * b for a, b in zip(w, m)) == top]
        if w_leads != [lm]:
            raise WeightRealizationError("w-leading form is not the single expected term")


# -- homogenization -------------------------------------------------------


@dataclass
class HomogenizedIdeal:
    """hom_w(I) in K[x1..xn, t], built from the reduced Groebner basis."""

    base_ring: PolyRing
    ring: PolyRing
    weight: WeightVector
    order: TermOrder
    gens: Tuple[Polynomial, ...]

    @property
    def t_index(self) -> int:
        return self.ring.n - 1

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.gens)

    def w_degree(self, mono: Mono) -> int:
        return sum(a * b for a, b in zip(self.weight, mono)) + mono[-1]

    def specialize(self, t_value: int) -> Ideal:
        """Set t to 0 or 1 and contract to the base ring."""
        if t_value not in (0, 1):
            raise ValueError("specialization is only defined at t = 0 and t = 1")
        gens = []
        for g in self.gens:
            if t_value == 0:
                terms = {m[:-1]: c for m, c in g.terms.items() if m[-1] == 0}
                gens.append(self.base_ring.from_terms(terms))
            else:
                gens.append(g.map_exponents(self.base_ring, lambda m: m[:-1]))
        return Ideal(self.base_ring, [g for g in gens if not g.is_zero()])

    def t_is_nonzerodivisor(self) -> bool:
        """(hom_w(I) : t) == hom_w(I), the flatness certificate."""
        H = self.ideal()
        t_ideal = Ideal(self.ring, [self.ring.var(self.t_index)])
        return ideal_equal(ideal_quotient(H, t_ideal), H)


def homogenize_w(I: Ideal, w: WeightVector, order: TermOrder) -> HomogenizedIdeal:
    """w-homogenize the reduced Groebner basis of I with a new last variable t."""
    ring = I.ring
    if len(w) != ring.n or any(v < 0 for v in w):
        raise ValueError("weight vector must be non-negative with one entry per variable")
    gb = I.groebner(WeightOrder(w, order))
    for g in gb:
        top = max(sum(a * b for a, b in zip(w, m)) for m in g.terms)
        w_leads = [m for m in g.terms if sum(a * b for a, b in zip(w, m)) == top]
        if len(w_leads) != 1:
            raise WeightRealizationError(
                "a basis element has a non-monomial w-leading form; w does not realize the order")
    big = ring.extend([ring.fresh_name("t")])
    gens = []
    for g in gb:
        top = max(sum(a * b for a, b in zip(w, m)) for m in g.terms)
        terms = {}
        for m, c in g.terms.items():
            wd = sum(a * b for a, b in zip(w, m))
            terms[m + (top - wd,)] = c
        gens.append(big.from_terms(terms))
    return HomogenizedIdeal(ring, big, tuple(w), order, tuple(gens))


# -- generic initial ideals ------------------------------------------------


def _random_change(ring: PolyRing, rng: random.Random) -> List[List[object]]:
    fld = ring.field
    bound = 10**6
    while True:
        if fld.characteristic == 0:
            rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(ring.n)]
                    for _ in range(ring.n)]
        else:
            rows = [[rng.randrange(fld.characteristic) for _ in range(ring.n)]
                    for _ in range(ring.n)]
        if is_invertible(rows, fld):
            return rows


def _apply_change(I: Ideal, rows: List[List[object]]) -> Ideal:
    ring = I.ring
    images = []
    for i in range(ring.n):
        terms = {}
        for j in range(ring.n):
            if rows[i][j] != ring.field.zero:
                terms[tuple(1 if k == j else 0 for k in range(ring.n))] = rows[i][j]
        images.append(ring.from_terms(terms))
    return Ideal(ring, [g.subs(images) for g in I.gens])


def generic_initial_ideal(I: Ideal, order: TermOrder, seed: int = 0,
                          trials: int = 3) -> MonomialIdeal:
    """in(g(I)) for a random linear change g, repeated until trials agree."""
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    results = []
    for _ in range(trials):
        moved = _apply_change(I, _random_change(I.ring, rng))
        results.append(moved.initial_ideal(order))
    if any(r != results[0] for r in results[1:]):
        raise GinUnstableError(f"{trials} seeded trials disagree; rerun with more trials")
    return results[0]


def gin_degree_part(I: Ideal, degree: int, order: TermOrder, seed: int = 0,
                    trials: int = 3) -> FrozenSet[Mono]:
    """Degree-d monomials of gin(I) for homogeneous I, by exact row reduction.

    This reads off the pivot monomials of the transformed graded component,
    avoiding a full basis computation in generic coordinates.
    """
    ring = I.ring
    if not ring.is_standard_graded():
        raise ValueError("degree parts need the standard grading")
    if not all(g.is_homogeneous() for g in I.gens):
        raise ValueError("degree parts are only defined for homogeneous ideals")
    rng = random.Random(seed)
    key = cached_key(order, ring.n)
    basis = sorted(_monomials_of_degree(ring.n, degree), key=key, reverse=True)
    col = {m: i for i, m in enumerate(basis)}
    results = []
    for _ in range(trials):
        moved = _apply_change(I, _random_change(ring, rng))
        rows = []
        for g in moved.gens:
            e = g.degree()
            if e is None or e > degree:
                continue
            for m in _monomials_of_degree(ring.n, degree - e):
                prod = g.times_term(m, ring.field.one)
                row = [ring.field.zero] * len(basis)
                for mono, c in prod.terms.items():
                    row[col[mono]] = c
                rows.append(row)
        _, pivots = row_reduce(rows, ring.field)
        results.append(frozenset(basis[c] for c in pivots))
    if any(r != results[0] for r in results[1:]):
        raise GinUnstableError(f"{trials} seeded trials disagree; rerun with more trials")
    return results[0]


def _monomials_of_degree(n: int, d: int) -> List[Mono]:
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d + 1):
        for rest in _monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out
