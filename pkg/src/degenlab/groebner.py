"""Buchberger's algorithm, reduced Groebner bases, and ideal arithmetic.

The pair queue uses normal selection (smallest lcm first) and prunes with
Buchberger's coprimality and chain criteria in Gebauer-Moeller form.  All
results are deterministic: reduced bases are monic, fully interreduced, and
sorted by leading monomial, so equal ideals give byte-identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .orders import BlockOrder, DegRevLex, TermOrder, cached_key
from .ring import (Mono, ParseError, PolyRing, Polynomial, RingMismatchError,
                   mono_coprime, mono_div, mono_divides, mono_is_squarefree,
                   mono_lcm, mono_mul, mono_support)


def _reduce_dict(work: Dict[Mono, object], red: Sequence[Tuple[Mono, Dict[Mono, object]]],
                 key, fld, tail: bool) -> Dict[Mono, object]:
    """Divide the term dict `work` by the reducers, returning the remainder dict.

    Each reducer is (leading monomial, full term dict).  With tail=False the
    division stops at the first irreducible leading term.
    """
    out: Dict[Mono, object] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        q = None
        for lm, terms in red:
            q = mono_div(m, lm)
            if q is not None:
                lc = terms[lm]
                factor = fld.div(c, lc)
                for gm, gc in terms.items():
                    if gm == lm:
                        continue
                    tm = mono_mul(gm, q)
                    s = fld.sub(work.get(tm, fld.zero), fld.mul(factor, gc))
                    if s == fld.zero:
                        work.pop(tm, None)
                    else:
                        work[tm] = s
                break
        if q is None:
            out[m] = c
            if not tail:
                out.update(work)
                return out
    return out


def normal_form(f: Polynomial, basis: Iterable[Polynomial], order: TermOrder,
                tail: bool = True) -> Polynomial:
    """Remainder of f on division by the basis under the given order."""
    ring = f.ring
    key = cached_key(order, ring.n)
    red = []
    for g in basis:
        if isinstance(g, GroebnerBasis):
            raise TypeError("pass basis elements, not a GroebnerBasis")
        if g.ring != ring:
            raise RingMismatchError("ring mismatch in normal form")
        if not g.is_zero():
            red.append((g.leading_monomial(order), g.terms))
    red.sort(key=lambda t: key(t[0]))
    out = _reduce_dict(dict(f.terms), red, key, ring.field, tail)
    return Polynomial(ring, out)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """The S-polynomial of f and g."""
    fld = f.ring.field
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.times_term(mono_div(lcm, mf), fld.inv(cf)) - g.times_term(mono_div(lcm, mg), fld.inv(cg))


def _update_pairs(lms: List[Mono], pairs: List[Tuple[int, int]], t: int, key) -> None:
    """Gebauer-Moeller update after appending element t to the basis."""
    lmt = lms[t]
    # chain criterion on the old pairs
    kept = []
    for (i, j) in pairs:
        lcm_ij = mono_lcm(lms[i], lms[j])
        if (not mono_divides(lmt, lcm_ij)
                or mono_lcm(lms[i], lmt) == lcm_ij
                or mono_lcm(lms[j], lmt) == lcm_ij):
            kept.append((i, j))
    pairs[:] = kept
    # group the candidate new pairs by lcm and keep only minimal lcms
    groups: Dict[Mono, List[int]] = {}
    for i in range(t):
        groups.setdefault(mono_lcm(lms[i], lmt), []).append(i)
    min_lcms: List[Mono] = []
    for lcm in sorted(groups, key=lambda m: (sum(m), m)):
        if all(not mono_divides(m, lcm) for m in min_lcms):
            min_lcms.append(lcm)
            if not any(mono_coprime(lms[i], lmt) for i in groups[lcm]):
                pairs.append((groups[lcm][0], t))


def buchberger(gens: Sequence[Polynomial], order: TermOrder) -> List[Polynomial]:
    """Reduced Groebner basis of the ideal generated by `gens`."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    key = cached_key(order, ring.n)
    seed = sorted({frozenset(g.terms.items()): g for g in gens}.values(),
                  key=lambda g: (key(g.leading_monomial(order)), g.to_string()))
    basis: List[Polynomial] = []
    lms: List[Mono] = []
    pairs: List[Tuple[int, int]] = []
    red: List[Tuple[Mono, Dict[Mono, object]]] = []

    def add(h: Polynomial) -> None:
        basis.append(h)
        lms.append(h.leading_monomial(order))
        _update_pairs(lms, pairs, len(basis) - 1, key)
        red.append((lms[-1], h.terms))
        red.sort(key=lambda t: key(t[0]))

    for g in seed:
        h_terms = _reduce_dict(dict(g.terms), red, key, ring.field, tail=False)
        if h_terms:
            add(Polynomial(ring, h_terms))
    while pairs:
        i, j = min(pairs, key=lambda p: (key(mono_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.remove((i, j))
        s = s_polynomial(basis[i], basis[j], order)
        h_terms = _reduce_dict(dict(s.terms), red, key, ring.field, tail=False)
        if h_terms:
            add(Polynomial(ring, h_terms))
    return _interreduce(basis, order)


def _interreduce(basis: List[Polynomial], order: TermOrder) -> List[Polynomial]:
    """Minimalize and autoreduce a Groebner basis; output monic and sorted."""
    if not basis:
        return []
    ring = basis[0].ring
    key = cached_key(order, ring.n)
    by_lm = sorted(((g.leading_monomial(order), g) for g in basis), key=lambda t: key(t[0]))
    minimal: List[Tuple[Mono, Polynomial]] = []
    for lm, g in by_lm:
        if not any(mono_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    red = [(lm, g.terms) for lm, g in minimal]
    out = []
    for lm, g in minimal:
        terms = _reduce_dict({m: c for m, c in g.terms.items() if m != lm},
                             red, key, ring.field, tail=True)
        terms[lm] = g.terms[lm]
        out.append(Polynomial(ring, terms).monic(order))
    return out


def is_groebner(basis: Sequence[Polynomial], order: TermOrder) -> bool:
    """Certify a basis by reducing every S-polynomial to zero."""
    basis = [g for g in basis if not g.is_zero()]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if mono_coprime(basis[i].leading_monomial(order), basis[j].leading_monomial(order)):
                continue
            s = s_polynomial(basis[i], basis[j], order)
            if not normal_form(s, basis, order).is_zero():
                return False
    return True


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis together with its ring and order."""

    ring: PolyRing
    order: TermOrder
    polys: Tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def normal_form(self, f: Polynomial, tail: bool = True) -> Polynomial:
        return normal_form(f, self.polys, self.order, tail)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def leading_monomials(self) -> Tuple[Mono, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.polys)

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and not self.polys[0].is_zero()


class MonomialIdeal:
    """A monomial ideal stored by its unique minimal monomial generators."""

    def __init__(self, ring: PolyRing, monomials: Iterable[Mono]):
        self.ring = ring
        self.gens = _minimalize_monomials(monomials)

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, mono: Mono) -> bool:
        return any(mono_divides(g, mono) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(mono_is_squarefree(g) for g in self.gens)

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, (tuple(1 if e else 0 for e in g) for g in self.gens))

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.ring != self.ring:
            raise RingMismatchError("ring mismatch in monomial intersection")
        return MonomialIdeal(self.ring, (mono_lcm(a, b) for a in self.gens for b in other.gens))

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def to_ideal(self) -> "Ideal":
        return Ideal(self.ring, [self.ring.monomial(g) for g in self.gens])

    def to_strings(self) -> List[str]:
        return [self.ring.monomial(g).to_string() for g in self.gens]

    def minimal_primes(self) -> List[frozenset]:
        """Minimal primes as variable-index sets (via minimal covers of the radical)."""
        supports = [set(mono_support(g)) for g in self.radical().gens]
        covers: List[Set[int]] = []

        def walk(idx: int, chosen: Set[int]) -> None:
            while idx < len(supports) and chosen & supports[idx]:
                idx += 1
            if idx == len(supports):
                covers.append(set(chosen))
                return
            for v in sorted(supports[idx]):
                walk(idx + 1, chosen | {v})

        walk(0, set())
        minimal = []
        for c in sorted(covers, key=lambda s: (len(s), sorted(s))):
            if not any(m <= c for m in minimal):
                minimal.append(c)
        return [frozenset(m) for m in minimal]

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and other.ring == self.ring
                and other.gens == self.gens)

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return "MonomialIdeal(" + ", ".join(self.to_strings()) + ")"


def _minimalize_monomials(monomials: Iterable[Mono]) -> Tuple[Mono, ...]:
    uniq = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
    out: List[Mono] = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


class Ideal:
    """An ideal of a PolyRing with per-order Groebner basis caching."""

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial]):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if g.is_zero():
                raise ValueError("zero generators are rejected")
        self.ring = ring
        self.gens = gens
        self._gb: Dict[Tuple[TermOrder, int], GroebnerBasis] = {}
        self.cache: Dict[object, object] = {}

    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.from_string(t) for t in texts])

    def is_zero(self) -> bool:
        return not self.gens

    def groebner(self, order: TermOrder) -> GroebnerBasis:
        key = (order, self.ring.n)
        gb = self._gb.get(key)
        if gb is None:
            gb = GroebnerBasis(self.ring, order, tuple(buchberger(self.gens, order)))
            self._gb[key] = gb
        return gb

    def initial_ideal(self, order: TermOrder) -> MonomialIdeal:
        """The monomial ideal of leading terms under the order."""
        if self.is_zero():
            raise ValueError("initial ideal of the zero ideal is undefined")
        return MonomialIdeal(self.ring, self.groebner(order).leading_monomials())

    def contains(self, f: Polynomial, order: Optional[TermOrder] = None) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner(order or DegRevLex()).contains(f)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def map_field(self, field) -> "Ideal":
        """The same generators read over another coefficient field."""
        new_ring = self.ring.with_field(field)
        gens = []
        for g in self.gens:
            terms = {m: field(c) for m, c in g.terms.items()}
            h = new_ring.from_terms(terms)
            if h.is_zero():
                raise ValueError("generator vanishes over the requested field")
            gens.append(h)
        return Ideal(new_ring, gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return ideal_equal(self, other)

    def __hash__(self):
        raise TypeError("ideals are not hashable; compare with ideal_equal")

    def __repr__(self):
        inside = ", ".join(g.to_string() for g in self.gens) or "0"
        return f"Ideal({inside})"


# -- ideal arithmetic -----------------------------------------------------


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ring mismatch in ideal sum")
    merged = list(I.gens)
    for g in J.gens:
        if g not in merged:
            merged.append(g)
    return Ideal(I.ring, merged)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError("ring mismatch in ideal comparison")
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    order = DegRevLex()
    return I.groebner(order).polys == J.groebner(order).polys


def _drop_vars(ring: PolyRing, poly: Polynomial, drop: Set[int], target: PolyRing) -> Polynomial:
    keep = [i for i in range(ring.n) if i not in drop]
    return poly.map_exponents(target, lambda m: tuple(m[i] for i in keep))


def eliminate(I: Ideal, variables: Iterable[int]) -> Ideal:
    """Generators of I intersected with the subring omitting the variables."""
    drop = set(variables)
    if not all(0 <= v < I.ring.n for v in drop):
        raise ValueError("elimination variable out of range")
    if I.is_zero():
        return I
    order = BlockOrder(first_vars=tuple(sorted(drop)))
    kept = [g for g in I.groebner(order)
            if all(g0 == 0 for m in g.terms for i, g0 in enumerate(m) if i in drop)]
    return Ideal(I.ring, kept)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I meet J via a tag variable and elimination."""
    if I.ring != J.ring:
        raise RingMismatchError("ring mismatch in ideal intersection")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    tag = ring.fresh_name("z")
    big = ring.extend([tag])
    z = big.var(big.n - 1)
    lift = lambda p: p.map_exponents(big, lambda m: m + (0,))
    gens = [z * lift(f) for f in I.gens] + [(big.one() - z) * lift(g) for g in J.gens]
    inter = eliminate(Ideal(big, gens), [big.n - 1])
    return Ideal(ring, [_drop_vars(big, g, {big.n - 1}, ring) for g in inter.gens])


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    order = DegRevLex()
    ring = f.ring
    key = cached_key(order, ring.n)
    fld = ring.field
    lm, lc = g.leading_term(order)
    work = dict(f.terms)
    quo: Dict[Mono, object] = {}
    while work:
        m = max(work, key=key)
        q = mono_div(m, lm)
        if q is None:
            raise ValueError("polynomial division is not exact")
        c = fld.div(work.pop(m), lc)
        quo[q] = c
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            tm = mono_mul(gm, q)
            s = fld.sub(work.get(tm, fld.zero), fld.mul(c, gc))
            if s == fld.zero:
                work.pop(tm, None)
            else:
                work[tm] = s
    return Polynomial(ring, quo)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal I : J."""
    if I.ring != J.ring:
        raise RingMismatchError("ring mismatch in ideal quotient")
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    if I.is_zero():
        return I
    result: Optional[Ideal] = None
    for g in J.gens:
        principal = Ideal(I.ring, [g])
        meet = ideal_intersection(I, principal)
        part = Ideal(I.ring, [exact_divide(h, g) for h in meet.gens]) if meet.gens else Ideal(I.ring, [])
        result = part if result is None else ideal_intersection(result, part)
    return result


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """Tag-variable test for membership of f in the radical of I."""
    ring = f.ring
    if f.is_zero():
        return True
    if I.is_zero():
        return False
    tag = ring.fresh_name("y")
    big = ring.extend([tag])
    y = big.var(big.n - 1)
    lift = lambda p: p.map_exponents(big, lambda m: m + (0,))
    gens = [lift(g) for g in I.gens] + [big.one() - y * lift(f)]
    return Ideal(big, gens).groebner(DegRevLex()).is_unit_ideal()
