"""Combinatorial invariants of monomial quotients.

Betti numbers come from reduced cohomology of upper Koszul complexes over
the lcm closure of the generators.  Graded local cohomology comes from the
multigraded strands of the Cech complex on the variables: a strand at
exponent vector a is the shifted reduced cochain complex of the complex of
variable sets that still miss a witness of every generator, and its
dimensions only depend on the sign pattern of a together with the
nonnegative exponents capped below the generator exponents, so finitely
many classes cover everything.  Both routes are exact and are checked
elsewhere against the resolution-based ones.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, List, Optional, Tuple

from .field import QQ
from .groebner import MonomialIdeal
from .hilbert import RationalSeries
from .ring import Mono, mono_lcm, mono_support
from .simplicial import SimplicialComplex, sr_complex


def lcm_lattice(M: MonomialIdeal) -> List[Mono]:
    """Least common multiples of the nonempty generator subsets, sorted."""
    gens = list(M.gens)
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for b in frontier:
            for g in gens:
                j = mono_lcm(b, g)
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
        frontier = fresh
    ring = M.ring
    return sorted(seen, key=lambda m: (ring.mono_degree(m), m))


def _upper_koszul(M: MonomialIdeal, b: Mono) -> SimplicialComplex:
    """Faces are the square-free tau <= b with x^(b-tau) still inside M."""
    supp = list(mono_support(b))
    faces: List[Tuple[int, ...]] = []
    expo = list(b)

    def grow(face: Tuple[int, ...], start: int) -> None:
        faces.append(face)
        for k in range(start, len(supp)):
            v = supp[k]
            expo[v] -= 1
            if M.contains(tuple(expo)):
                grow(face + (k,), k + 1)
            expo[v] += 1

    grow((), 0)
    return SimplicialComplex(len(supp), faces)


def monomial_betti_numbers(M: MonomialIdeal, field=QQ) -> Dict[Tuple[int, int], int]:
    """Graded Betti numbers of S/M from upper Koszul complexes."""
    ring = M.ring
    out: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for b in lcm_lattice(M):
        j = ring.mono_degree(b)
        for r, h in _upper_koszul(M, b).reduced_cohomology_dims(field).items():
            key = (r + 2, j)
            out[key] = out.get(key, 0) + h
    return out


def _poly_mul(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for da, ca in a.items():
        for db, cb in b.items():
            out[da + db] = out.get(da + db, 0) + ca * cb
    return {d: c for d, c in out.items() if c}


def _avoidance_cohomology(witnesses: List[int], comp: List[int], field) -> Dict[int, int]:
    """Reduced cohomology of the sets containing no full witness, as bitmasks."""
    pos = {v: k for k, v in enumerate(comp)}
    local = []
    for wm in witnesses:
        local.append(sum(1 << pos[v] for v in comp if wm >> v & 1))
    m = len(comp)
    faces: List[Tuple[int, ...]] = []

    def grow(mask: int, face: Tuple[int, ...], start: int) -> None:
        faces.append(face)
        for k in range(start, m):
            nmask = mask | (1 << k)
            if any(wm & nmask == wm for wm in local):
                continue
            grow(nmask, face + (k,), k + 1)

    grow(0, (), 0)
    return SimplicialComplex(m, faces).reduced_cohomology_dims(field)


def cech_cohomology_series(M: MonomialIdeal, field=QQ) -> Dict[int, RationalSeries]:
    """Series of each nonzero H^i_m(S/M); the u^j coefficient is the dimension in degree -j."""
    ring = M.ring
    n = ring.n
    w = ring.grading
    gens = list(M.gens)
    if not gens:
        return {n: RationalSeries({sum(w): 1}, w)}
    if any(all(e == 0 for e in g) for g in gens):
        return {}
    rho = [max(g[v] for g in gens) for v in range(n)]
    options = [[None] + list(range(rho[v])) for v in range(n)]
    acc: Dict[int, Dict[int, int]] = {}
    memo: Dict[Tuple[FrozenSet[int], int], Dict[int, int]] = {}
    for choice in itertools.product(*options):
        comp = [v for v in range(n) if choice[v] is not None]
        witnesses = []
        dead = False
        for g in gens:
            wm = 0
            for v in comp:
                if g[v] > choice[v]:
                    wm |= 1 << v
            if wm == 0:
                dead = True
                break
            witnesses.append(wm)
        if dead:
            continue
        compmask = sum(1 << v for v in comp)
        key = (frozenset(witnesses), compmask)
        if key not in memo:
            memo[key] = _avoidance_cohomology(witnesses, comp, field)
        dims = memo[key]
        if not dims:
            continue
        base = {0: 1}
        for v in comp:
            base = _poly_mul(base, {0: 1, w[v]: -1})
        shift = sum(w[v] for v in range(n) if choice[v] is None)
        shift -= sum(w[v] * choice[v] for v in comp)
        negs = n - len(comp)
        for r, h in dims.items():
            tgt = acc.setdefault(r + negs + 1, {})
            for d, c in base.items():
                tgt[d + shift] = tgt.get(d + shift, 0) + c * h
    out: Dict[int, RationalSeries] = {}
    for i, num in sorted(acc.items()):
        num = {d: c for d, c in num.items() if c}
        if num:
            out[i] = RationalSeries(num, w)
    return out


def cech_table(M: MonomialIdeal, jlo: Optional[int] = None, jhi: Optional[int] = None,
               field=QQ) -> Dict[Tuple[int, int], int]:
    """Graded local cohomology dimensions h^{i,j}(S/M) on a degree window."""
    series = cech_cohomology_series(M, field)
    if not series:
        return {}
    if jlo is None or jhi is None:
        lo = min(-(s.support_max_numerator() or 0) - max(M.ring.grading)
                 for s in series.values())
        hi = max(-(s.support_min() or 0) for s in series.values())
        jlo = lo if jlo is None else jlo
        jhi = hi if jhi is None else jhi
    out: Dict[Tuple[int, int], int] = {}
    for i, s in series.items():
        for j in range(jlo, jhi + 1):
            v = s.coefficient(-j)
            if v:
                out[(i, j)] = v
    return out


def monomial_depth_dim(M: MonomialIdeal, field=QQ) -> Tuple[int, int]:
    """Depth and Krull dimension of S/M from its Cech local cohomology."""
    series = cech_cohomology_series(M, field)
    if not series:
        raise ValueError("S/M is the zero module")
    return min(series), max(series)


def hochster_cohomology_series(M: MonomialIdeal, field=QQ) -> Dict[int, RationalSeries]:
    """Local cohomology series of a square-free quotient from links in its complex."""
    if not M.is_squarefree():
        raise ValueError("Hochster's decomposition needs a square-free ideal")
    ring = M.ring
    w = ring.grading
    delta = sr_complex(M)
    acc: Dict[int, Dict[int, int]] = {}
    for F in sorted(delta.faces(), key=sorted):
        dims = delta.link(F).reduced_cohomology_dims(field)
        if not dims:
            continue
        base = {0: 1}
        for v in range(ring.n):
            if v not in F:
                base = _poly_mul(base, {0: 1, w[v]: -1})
        shift = sum(w[v] for v in F)
        for r, h in dims.items():
            tgt = acc.setdefault(r + len(F) + 1, {})
            for d, c in base.items():
                tgt[d + shift] = tgt.get(d + shift, 0) + c * h
    out: Dict[int, RationalSeries] = {}
    for i, num in sorted(acc.items()):
        num = {d: c for d, c in num.items() if c}
        if num:
            out[i] = RationalSeries(num, w)
    return out


def hochster_table(M: MonomialIdeal, jlo: Optional[int] = None, jhi: Optional[int] = None,
                   field=QQ) -> Dict[Tuple[int, int], int]:
    """The h^{i,j} table of a square-free quotient via Hochster's decomposition."""
    series = hochster_cohomology_series(M, field)
    if not series:
        return {}
    if jlo is None or jhi is None:
        lo = min(-(s.support_max_numerator() or 0) - max(M.ring.grading)
                 for s in series.values())
        hi = max(-(s.support_min() or 0) for s in series.values())
        jlo = lo if jlo is None else jlo
        jhi = hi if jhi is None else jhi
    out: Dict[Tuple[int, int], int] = {}
    for i, s in series.items():
        for j in range(jlo, jhi + 1):
            v = s.coefficient(-j)
            if v:
                out[(i, j)] = v
    return out
