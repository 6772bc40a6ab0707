"""Free modules over a polynomial ring: Groebner bases and syzygies.

Module monomials are pairs (monomial, position).  Orders are key functions
returning flat integer tuples, mirroring orders.py: TOP (term over position,
ties to the smaller position) for plain submodule computations and Schreyer
orders, induced by the leading terms of the previous basis, for syzygies.
Syzygies of a Groebner basis come from S-vector reductions with recorded
quotients; per-row pruning keeps one pair per minimal quotient monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .hilbert import RationalSeries, free_module_series, hilbert_series_monomial
from .orders import DegRevLex, TermOrder, cached_key
from .ring import (Mono, PolyRing, Polynomial, RingMismatchError, mono_div,
                   mono_divides, mono_lcm, mono_mul)

MonoV = Tuple[Mono, int]
VecKey = Callable[[MonoV], Tuple[int, ...]]


@dataclass(frozen=True)
class FreeModule:
    """A free module with basis element i living in degree degrees[i]."""

    ring: PolyRing
    degrees: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def zero(self) -> "VecPoly":
        return VecPoly(self, {})

    def basis_vector(self, i: int, mono: Optional[Mono] = None, coeff=None) -> "VecPoly":
        if not 0 <= i < self.rank:
            raise IndexError(f"no basis vector {i} in a rank {self.rank} module")
        m = mono if mono is not None else (0,) * self.ring.n
        c = self.ring.field.one if coeff is None else self.ring.field(coeff)
        return VecPoly(self, {(m, i): c})

    def from_polys(self, polys: Sequence[Polynomial]) -> "VecPoly":
        if len(polys) != self.rank:
            raise ValueError(f"expected {self.rank} components, got {len(polys)}")
        terms: Dict[MonoV, object] = {}
        for i, p in enumerate(polys):
            if p.ring != self.ring:
                raise RingMismatchError("component from a different ring")
            for m, c in p.terms.items():
                terms[(m, i)] = c
        return VecPoly(self, terms)

    def term_degree(self, mv: MonoV) -> int:
        return self.ring.mono_degree(mv[0]) + self.degrees[mv[1]]


class VecPoly:
    """An element of a free module, stored as a term dict keyed by (mono, pos)."""

    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: Dict[MonoV, object]):
        self.module = module
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "VecPoly") -> "VecPoly":
        if self.module != other.module:
            raise RingMismatchError("module mismatch")
        fld = self.module.ring.field
        out = dict(self.terms)
        for mv, c in other.terms.items():
            s = fld.add(out.get(mv, fld.zero), c)
            if s == fld.zero:
                out.pop(mv, None)
            else:
                out[mv] = s
        return VecPoly(self.module, out)

    def __neg__(self) -> "VecPoly":
        fld = self.module.ring.field
        return VecPoly(self.module, {mv: fld.neg(c) for mv, c in self.terms.items()})

    def __sub__(self, other: "VecPoly") -> "VecPoly":
        return self + (-other)

    def times_term(self, mono: Mono, coeff) -> "VecPoly":
        fld = self.module.ring.field
        if coeff == fld.zero:
            return self.module.zero()
        return VecPoly(self.module, {(mono_mul(m, mono), i): fld.mul(c, coeff)
                                     for (m, i), c in self.terms.items()})

    def times_poly(self, p: Polynomial) -> "VecPoly":
        out = self.module.zero()
        for m, c in p.terms.items():
            out = out + self.times_term(m, c)
        return out

    def component(self, i: int) -> Polynomial:
        ring = self.module.ring
        return Polynomial(ring, {m: c for (m, j), c in self.terms.items() if j == i})

    def components(self) -> List[Polynomial]:
        return [self.component(i) for i in range(self.module.rank)]

    def leading_term(self, key: VecKey) -> Tuple[MonoV, object]:
        if not self.terms:
            raise ValueError("zero vector has no leading term")
        mv = max(self.terms, key=key)
        return mv, self.terms[mv]

    def monic(self, key: VecKey) -> "VecPoly":
        if not self.terms:
            return self
        fld = self.module.ring.field
        _, c = self.leading_term(key)
        inv = fld.inv(c)
        return VecPoly(self.module, {mv: fld.mul(v, inv) for mv, v in self.terms.items()})

    def is_homogeneous(self) -> bool:
        degs = {self.module.term_degree(mv) for mv in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous vector (0 for the zero vector)."""
        degs = {self.module.term_degree(mv) for mv in self.terms}
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous")
        return degs.pop() if degs else 0

    def to_string(self) -> str:
        return "(" + ", ".join(p.to_string() for p in self.components()) + ")"

    def __eq__(self, other):
        return (isinstance(other, VecPoly) and self.module == other.module
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.module, frozenset(self.terms.items())))

    def __repr__(self):
        return f"VecPoly({self.to_string()})"


def top_key(order: TermOrder, ring: PolyRing) -> VecKey:
    """Term-over-position key: compare monomials first, smaller position wins ties."""
    base = cached_key(order, ring.n)
    return lambda mv: base(mv[0]) + (-mv[1],)


def schreyer_key(prev_key: VecKey, assigned: Sequence[MonoV]) -> VecKey:
    """Key induced by assigned leading terms: m e_i maps to prev(m * lt_i), ties by position."""
    lts = tuple(assigned)

    def key(mv: MonoV) -> Tuple[int, ...]:
        m, i = mv
        am, ap = lts[i]
        return prev_key((mono_mul(m, am), ap)) + (-i,)

    return key


def _reduce_vec(work: Dict[MonoV, object], red: Sequence[Tuple[MonoV, Dict[MonoV, object]]],
                key: VecKey, fld, tail: bool,
                quotients: Optional[List[Dict[Mono, object]]] = None) -> Dict[MonoV, object]:
    """Divide the vector term dict by the reducers, optionally recording quotients.

    Each reducer is (leading (mono, pos), full term dict); a term is reducible
    when the positions agree and the leading monomial divides it.  With
    tail=False the division stops at the first irreducible leading term.
    """
    out: Dict[MonoV, object] = {}
    while work:
        mv = max(work, key=key)
        c = work.pop(mv)
        hit = None
        for idx, (lt, terms) in enumerate(red):
            if lt[1] != mv[1]:
                continue
            q = mono_div(mv[0], lt[0])
            if q is not None:
                hit = (idx, q, lt, terms)
                break
        if hit is None:
            out[mv] = c
            if not tail:
                out.update(work)
                return out
            continue
        idx, q, lt, terms = hit
        factor = fld.div(c, terms[lt])
        if quotients is not None:
            qd = quotients[idx]
            s = fld.add(qd.get(q, fld.zero), factor)
            if s == fld.zero:
                qd.pop(q, None)
            else:
                qd[q] = s
        for gmv, gc in terms.items():
            if gmv == lt:
                continue
            tm = (mono_mul(gmv[0], q), gmv[1])
            s = fld.sub(work.get(tm, fld.zero), fld.mul(factor, gc))
            if s == fld.zero:
                work.pop(tm, None)
            else:
                work[tm] = s
    return out


def vec_normal_form(f: VecPoly, basis: Iterable[VecPoly], key: VecKey,
                    tail: bool = True) -> VecPoly:
    """Remainder of f on division by the basis vectors."""
    red = [(g.leading_term(key)[0], g.terms) for g in basis if not g.is_zero()]
    red.sort(key=lambda t: key(t[0]))
    out = _reduce_vec(dict(f.terms), red, key, f.module.ring.field, tail)
    return VecPoly(f.module, out)


def vec_divide(f: VecPoly, basis: Sequence[VecPoly], key: VecKey,
               ) -> Tuple[List[Polynomial], VecPoly]:
    """Division with quotients: f = sum(q_k * basis_k) + remainder."""
    ring = f.module.ring
    red = [(g.leading_term(key)[0], g.terms) for g in basis]
    quotients: List[Dict[Mono, object]] = [{} for _ in basis]
    out = _reduce_vec(dict(f.terms), red, key, ring.field, tail=True, quotients=quotients)
    return [Polynomial(ring, qd) for qd in quotients], VecPoly(f.module, out)


def s_vector(f: VecPoly, g: VecPoly, key: VecKey) -> VecPoly:
    """The S-vector of two module elements with same-position leading terms."""
    fld = f.module.ring.field
    (mf, pf), cf = f.leading_term(key)
    (mg, pg), cg = g.leading_term(key)
    if pf != pg:
        raise ValueError("S-vector requires matching leading positions")
    lcm = mono_lcm(mf, mg)
    return (f.times_term(mono_div(lcm, mf), fld.inv(cf))
            - g.times_term(mono_div(lcm, mg), fld.inv(cg)))


def _update_vec_pairs(lts: List[MonoV], pairs: List[Tuple[int, int]], t: int) -> None:
    """Chain-criterion pair update after appending element t; same-position only.

    This mirrors the ring version but keeps one representative per minimal lcm
    without the coprimality discard, which is unsound for modules.
    """
    lmt, pt = lts[t]
    kept = []
    for (i, j) in pairs:
        if lts[i][1] != pt:
            kept.append((i, j))
            continue
        lcm_ij = mono_lcm(lts[i][0], lts[j][0])
        if (not mono_divides(lmt, lcm_ij)
                or mono_lcm(lts[i][0], lmt) == lcm_ij
                or mono_lcm(lts[j][0], lmt) == lcm_ij):
            kept.append((i, j))
    pairs[:] = kept
    groups: Dict[Mono, List[int]] = {}
    for i in range(t):
        if lts[i][1] == pt:
            groups.setdefault(mono_lcm(lts[i][0], lmt), []).append(i)
    min_lcms: List[Mono] = []
    for lcm in sorted(groups, key=lambda m: (sum(m), m)):
        if all(not mono_divides(m, lcm) for m in min_lcms):
            min_lcms.append(lcm)
            pairs.append((groups[lcm][0], t))


def module_buchberger(rows: Sequence[VecPoly], key: VecKey, track: bool = True,
                      ) -> Tuple[List[VecPoly], Optional[List[List[Polynomial]]]]:
    """Minimal monic Groebner basis of the submodule, with expressions in the rows.

    Returns (basis, reps) where basis[k] = sum over r of reps[k][r] * rows[r];
    with track=False the bookkeeping is skipped and reps is None.  The basis
    is minimal (no leading term divides another) and sorted by leading term,
    but tails are not autoreduced.
    """
    rows = list(rows)
    live = [(r, g) for r, g in enumerate(rows) if not g.is_zero()]
    if not live:
        return [], ([] if track else None)
    module = live[0][1].module
    for _, g in live:
        if g.module != module:
            raise RingMismatchError("rows from different modules")
    ring = module.ring
    fld = ring.field
    nrows = len(rows)

    basis: List[VecPoly] = []
    reps: List[List[Polynomial]] = []
    lts: List[MonoV] = []
    pairs: List[Tuple[int, int]] = []
    red: List[Tuple[MonoV, Dict[MonoV, object]]] = []
    red_idx: List[int] = []

    def reduce_tracked(h: VecPoly, rep: Optional[List[Polynomial]],
                       ) -> Tuple[VecPoly, Optional[List[Polynomial]]]:
        quotients: Optional[List[Dict[Mono, object]]] = [{} for _ in red] if track else None
        out = _reduce_vec(dict(h.terms), red, key, fld, tail=False, quotients=quotients)
        if track:
            for slot, qd in enumerate(quotients):
                if not qd:
                    continue
                q = Polynomial(ring, qd)
                grep = reps[red_idx[slot]]
                rep = [rep[r] - q * grep[r] for r in range(nrows)]
        return VecPoly(module, out), rep

    zero_mono = (0,) * ring.n

    def add(h: VecPoly, rep: Optional[List[Polynomial]]) -> None:
        lt, lc = h.leading_term(key)
        basis.append(h.monic(key))
        if track:
            inv = fld.inv(lc)
            reps.append([p.times_term(zero_mono, inv) for p in rep])
        lts.append(lt)
        _update_vec_pairs(lts, pairs, len(basis) - 1)
        red.append((lt, basis[-1].terms))
        red_idx.append(len(basis) - 1)
        order = sorted(range(len(red)), key=lambda s: key(red[s][0]))
        red[:] = [red[s] for s in order]
        red_idx[:] = [red_idx[s] for s in order]

    seed = sorted(live, key=lambda t: (key(t[1].leading_term(key)[0]), t[0]))
    for r, g in seed:
        rep = [ring.one() if s == r else ring.zero() for s in range(nrows)] if track else None
        h, rep = reduce_tracked(g, rep)
        if not h.is_zero():
            add(h, rep)
    while pairs:
        i, j = min(pairs, key=lambda p: (key((mono_lcm(lts[p[0]][0], lts[p[1]][0]),
                                              lts[p[0]][1])), p))
        pairs.remove((i, j))
        s = s_vector(basis[i], basis[j], key)
        (mi, _), _ = basis[i].leading_term(key)
        (mj, _), _ = basis[j].leading_term(key)
        lcm = mono_lcm(mi, mj)
        rep = None
        if track:
            rep = [reps[i][r].times_term(mono_div(lcm, mi), fld.one)
                   - reps[j][r].times_term(mono_div(lcm, mj), fld.one)
                   for r in range(nrows)]
        h, rep = reduce_tracked(s, rep)
        if not h.is_zero():
            add(h, rep)
    keep = _minimal_rows(lts)
    ordered = sorted(keep, key=lambda k: key(lts[k]))
    return ([basis[k] for k in ordered],
            [reps[k] for k in ordered] if track else None)


def _minimal_rows(lts: Sequence[MonoV]) -> List[int]:
    """Indices whose leading terms minimally generate the leading module."""
    keep: List[int] = []
    for k, (lm, lp) in enumerate(lts):
        dominated = False
        for s, (sm, sp) in enumerate(lts):
            if s == k or sp != lp or not mono_divides(sm, lm):
                continue
            if sm != lm or s < k:
                dominated = True
                break
        if not dominated:
            keep.append(k)
    return keep


def schreyer_syzygies(gb: Sequence[VecPoly], key: VecKey,
                      ) -> Tuple[List[VecPoly], VecKey, FreeModule]:
    """Syzygies of a Groebner basis, a Groebner basis for the induced order.

    For each row i the pairs (i, j), j > i, with the same leading position are
    pruned to one per minimal quotient monomial lcm/lt_i; each surviving
    S-vector reduces to zero and its recorded division is the syzygy.
    """
    gb = list(gb)
    if not gb:
        raise ValueError("empty basis has no syzygy module")
    module = gb[0].module
    ring = module.ring
    fld = ring.field
    lts = [g.leading_term(key)[0] for g in gb]
    lcs = [g.leading_term(key)[1] for g in gb]
    target = FreeModule(ring, tuple(g.degree() for g in gb))
    new_key = schreyer_key(key, lts)

    syzygies: List[VecPoly] = []
    for i in range(len(gb)):
        quots: List[Tuple[Mono, int]] = []
        for j in range(i + 1, len(gb)):
            if lts[j][1] == lts[i][1]:
                quots.append((mono_div(mono_lcm(lts[i][0], lts[j][0]), lts[i][0]), j))
        quots.sort(key=lambda t: (sum(t[0]), t[0], t[1]))
        kept: List[Tuple[Mono, int]] = []
        for q, j in quots:
            if all(not mono_divides(kq, q) for kq, _ in kept):
                kept.append((q, j))
        for q, j in kept:
            lcm = mono_mul(q, lts[i][0])
            s = (gb[i].times_term(q, fld.inv(lcs[i]))
                 - gb[j].times_term(mono_div(lcm, lts[j][0]), fld.inv(lcs[j])))
            quotients, rem = vec_divide(s, gb, key)
            if not rem.is_zero():
                raise ValueError("input rows are not a Groebner basis")
            terms: Dict[MonoV, object] = {(q, i): fld.inv(lcs[i])}
            mj = mono_div(lcm, lts[j][0])
            terms[(mj, j)] = fld.sub(terms.get((mj, j), fld.zero), fld.inv(lcs[j]))
            sigma = VecPoly(target, dict(terms))
            for k, qp in enumerate(quotients):
                if not qp.is_zero():
                    sigma = sigma - target.basis_vector(k).times_poly(qp)
            syzygies.append(sigma)
    syzygies.sort(key=lambda s: new_key(s.leading_term(new_key)[0]))
    return syzygies, new_key, target


def syzygy_module(rows: Sequence[VecPoly], order: Optional[TermOrder] = None,
                  ) -> List[VecPoly]:
    """Generators of the syzygy module of arbitrary rows of a free module."""
    rows = list(rows)
    if not rows:
        return []
    module = rows[0].module
    ring = module.ring
    degrees = tuple(g.degree() for g in rows)
    target = FreeModule(ring, degrees)
    nonzero = any(not g.is_zero() for g in rows)
    if not nonzero:
        return [target.basis_vector(r) for r in range(len(rows))]
    key = top_key(order or DegRevLex(), ring)
    gb, reps = module_buchberger(rows, key)
    syz, _, _ = schreyer_syzygies(gb, key)

    out: List[VecPoly] = []
    for sigma in syz:
        acc = target.zero()
        for k in range(len(gb)):
            coeff = sigma.component(k)
            if coeff.is_zero():
                continue
            for r in range(len(rows)):
                if not reps[k][r].is_zero():
                    acc = acc + target.basis_vector(r).times_poly(coeff * reps[k][r])
        if not acc.is_zero():
            out.append(acc)
    for r, g in enumerate(rows):
        if g.is_zero():
            out.append(target.basis_vector(r))
            continue
        quotients, rem = vec_divide(g, gb, key)
        if not rem.is_zero():
            raise ValueError("row failed to reduce against its own Groebner basis")
        acc = target.basis_vector(r)
        for k in range(len(gb)):
            if quotients[k].is_zero():
                continue
            for s in range(len(rows)):
                if not reps[k][s].is_zero():
                    acc = acc - target.basis_vector(s).times_poly(quotients[k] * reps[k][s])
        if not acc.is_zero():
            out.append(acc)
    seen: Dict[Tuple, VecPoly] = {}
    for v in out:
        seen.setdefault(tuple(sorted(v.terms.items())), v)
    return list(seen.values())


def module_initial_monomials(rows: Sequence[VecPoly], key: VecKey) -> Dict[int, List[Mono]]:
    """Leading monomials of a module Groebner basis, grouped by position."""
    out: Dict[int, List[Mono]] = {}
    for g in rows:
        (m, p), _ = g.leading_term(key)
        out.setdefault(p, []).append(m)
    return out


def submodule_hilbert_series(rows: Sequence[VecPoly], module: FreeModule,
                             order: Optional[TermOrder] = None) -> RationalSeries:
    """Hilbert series of the submodule generated by the rows."""
    from .groebner import MonomialIdeal

    ring = module.ring
    nonzero = [g for g in rows if not g.is_zero()]
    if not nonzero:
        return RationalSeries.zero(ring.grading)
    key = top_key(order or DegRevLex(), ring)
    gb, _ = module_buchberger(nonzero, key, track=False)
    by_pos = module_initial_monomials(gb, key)
    total = RationalSeries.zero(ring.grading)
    full = free_module_series((0,), ring.grading)
    for pos, monos in by_pos.items():
        ideal_part = full - hilbert_series_monomial(MonomialIdeal(ring, monos))
        total = total + ideal_part.shift(module.degrees[pos])
    return total
