"""Ext modules against S, graded local cohomology tables, and Serre conditions.

Ext^k(S/I, S) is read off the dualized minimal free resolution.  Only Hilbert
series are needed, so no syzygy computation happens here: with im_k the row
space of the k-th map inside the dualized free module, exactness of
0 -> ker -> F_k* -> im_{k+1} -> 0 gives

    HS(Ext^k) = HS(F_k*) - HS(im_k) - HS(im_{k+1}).

Local cohomology dimensions follow by graded duality: with sigma the sum of
the variable weights, h^{i,j}(S/I) = dim_K Ext^{n-i}(S/I, S) in degree
-j - sigma.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .groebner import Ideal, MonomialIdeal
from .hilbert import RationalSeries, free_module_series, hilbert_series_quotient
from .modules import FreeModule, VecPoly, submodule_hilbert_series
from .orders import DegRevLex, TermOrder
from .resolution import FreeResolution, free_resolution


def _dual_image_series(res: FreeResolution, k: int) -> RationalSeries:
    """Hilbert series of the image of the k-th dualized map inside F_k*."""
    ring = res.ring
    if k <= 0 or k > len(res.maps):
        return RationalSeries.zero(ring.grading)
    dual = FreeModule(ring, tuple(-d for d in res.twists[k]))
    rows = [dual.from_polys(list(res.maps[k - 1][r]))
            for r in range(len(res.twists[k - 1]))]
    return submodule_hilbert_series(rows, dual, res.order)


def ext_series(I: Ideal, k: int, order: Optional[TermOrder] = None) -> RationalSeries:
    """Hilbert series of Ext^k(S/I, S), exact as a rational function."""
    order = order or DegRevLex()
    ckey = ("ext", order, k)
    if ckey not in I.cache:
        res = free_resolution(I, order)
        ring = I.ring
        if k < 0 or k > res.length:
            I.cache[ckey] = RationalSeries.zero(ring.grading)
        else:
            full = free_module_series(tuple(-d for d in res.twists[k]), ring.grading)
            series = full - _dual_image_series(res, k) - _dual_image_series(res, k + 1)
            I.cache[ckey] = series
    return I.cache[ckey]


def ext_table(I: Ideal, order: Optional[TermOrder] = None) -> Dict[int, RationalSeries]:
    """All nonzero Ext^k(S/I, S) Hilbert series, keyed by k."""
    order = order or DegRevLex()
    out: Dict[int, RationalSeries] = {}
    for k in range(0, free_resolution(I, order).length + 1):
        series = ext_series(I, k, order)
        if not series.is_zero():
            out[k] = series
    return out


def grading_socle_shift(I: Ideal) -> int:
    """The a-invariant shift: the sum of the variable weights."""
    return sum(I.ring.grading)


def local_cohomology_series(I: Ideal, i: int, order: Optional[TermOrder] = None,
                            ) -> RationalSeries:
    """Series in u = t^-1 whose u^j coefficient is h^{i,-j}(S/I) = dim H^i_m in degree -j.

    By graded duality this is the Ext^{n-i} series shifted by the weight sum,
    read in the inverse variable.
    """
    return ext_series(I, I.ring.n - i, order).shift(grading_socle_shift(I))


def local_cohomology_table(I: Ideal, order: Optional[TermOrder] = None,
                           jlo: Optional[int] = None, jhi: Optional[int] = None,
                           ) -> Dict[Tuple[int, int], int]:
    """Graded local cohomology dimensions h^{i,j}(S/I) on a degree window.

    The window defaults to all degrees where some h^{i,j} is nonzero above
    the eventual polynomial tail, padded by one step on each side.
    """
    order = order or DegRevLex()
    ring = I.ring
    n = ring.n
    sigma = grading_socle_shift(I)
    series: Dict[int, RationalSeries] = {}
    for i in range(0, n + 1):
        s = ext_series(I, n - i, order)
        if not s.is_zero():
            series[i] = s
    if not series:
        return {}
    if jlo is None or jhi is None:
        lo_candidates = []
        hi_candidates = []
        for s in series.values():
            lo_candidates.append(-(s.support_max_numerator() or 0) - sigma - max(ring.grading))
            hi_candidates.append(-(s.support_min() or 0) - sigma)
        jlo = min(lo_candidates) if jlo is None else jlo
        jhi = max(hi_candidates) if jhi is None else jhi
    out: Dict[Tuple[int, int], int] = {}
    for i, s in series.items():
        for j in range(jlo, jhi + 1):
            v = s.coefficient(-j - sigma)
            if v:
                out[(i, j)] = v
    return out


def local_cohomology_dimensions_agree(I: Ideal, J: Ideal,
                                      order_i: Optional[TermOrder] = None,
                                      order_j: Optional[TermOrder] = None) -> bool:
    """Whether h^{i,j}(S/I) = h^{i,j}(S/J) for all i and j, via exact Ext series."""
    if I.ring.n != J.ring.n or I.ring.grading != J.ring.grading:
        return False
    for k in range(0, I.ring.n + 1):
        if ext_series(I, k, order_i) != ext_series(J, k, order_j):
            return False
    return True


def depth_from_cohomology(I: Ideal, order: Optional[TermOrder] = None) -> int:
    """Depth of S/I as the least i with H^i_m(S/I) nonzero."""
    for i in range(0, I.ring.n + 1):
        if not ext_series(I, I.ring.n - i, order).is_zero():
            return i
    raise ValueError("the zero module has no depth")


def dim_from_cohomology(I: Ideal, order: Optional[TermOrder] = None) -> int:
    """Krull dimension of S/I as the largest i with H^i_m(S/I) nonzero."""
    for i in range(I.ring.n, -1, -1):
        if not ext_series(I, I.ring.n - i, order).is_zero():
            return i
    raise ValueError("the zero module has no dimension")


def check_serre(I: Ideal, r: int, order: Optional[TermOrder] = None) -> bool:
    """Serre's condition (S_r) for S/I.

    For r >= 2 this is the Ext criterion: dim Ext^{n-i}(S/I, S) <= i - r for
    every i below dim S/I.  (S_0) always holds; (S_1) means no embedded
    primes, which is settled here only when I is visibly radical (a square
    free monomial ideal), since primary decomposition is out of scope.
    """
    order = order or DegRevLex()
    if r <= 0:
        return True
    n = I.ring.n
    d = dim_from_cohomology(I, order)
    if r == 1:
        mono = _as_monomial(I, order)
        if mono is not None and mono.is_squarefree():
            return True
        raise NotImplementedError("(S_1) needs a primary decomposition "
                                  "unless the ideal is square-free monomial")
    for i in range(0, d):
        s = ext_series(I, n - i, order)
        if s.is_zero():
            continue
        if s.pole_order() > i - r:
            return False
    return True


def _as_monomial(I: Ideal, order: TermOrder) -> Optional[MonomialIdeal]:
    if all(len(g.terms) == 1 for g in I.gens):
        return MonomialIdeal(I.ring, [g.leading_monomial(order) for g in I.gens])
    return None


def check_generalized_cm(I: Ideal, order: Optional[TermOrder] = None) -> bool:
    """Whether all local cohomologies below the dimension have finite length."""
    order = order or DegRevLex()
    n = I.ring.n
    d = dim_from_cohomology(I, order)
    for i in range(0, d):
        s = ext_series(I, n - i, order)
        if not s.is_zero() and s.pole_order() > 0:
            return False
    return True


def check_cm_in_codim(I: Ideal, c: int, order: Optional[TermOrder] = None) -> bool:
    """Cohen-Macaulayness in codimension c: dim Ext^{n-i} < c for all i < dim."""
    order = order or DegRevLex()
    n = I.ring.n
    d = dim_from_cohomology(I, order)
    for i in range(0, d):
        s = ext_series(I, n - i, order)
        if not s.is_zero() and s.pole_order() >= c:
            return False
    return True


def check_pure(I: Ideal, order: Optional[TermOrder] = None) -> bool:
    """Purity of S/I: dim Ext^{n-i} < i for all i < dim."""
    order = order or DegRevLex()
    n = I.ring.n
    d = dim_from_cohomology(I, order)
    for i in range(0, d):
        s = ext_series(I, n - i, order)
        if not s.is_zero() and s.pole_order() >= i:
            return False
    return True


def check_buchsbaum_squarefree(I: Ideal, order: Optional[TermOrder] = None) -> bool:
    """Buchsbaumness for a square-free monomial ideal, where it matches gCM."""
    mono = _as_monomial(I, order or DegRevLex())
    if mono is None or not mono.is_squarefree():
        raise ValueError("the Buchsbaum test here covers square-free monomial "
                         "ideals only, where it coincides with generalized CM")
    return check_generalized_cm(I, order)


def cohomological_dimension_squarefree(I: Ideal, order: Optional[TermOrder] = None) -> int:
    """cd(S, I) for a square-free monomial ideal: n minus the depth of S/I."""
    mono = _as_monomial(I, order or DegRevLex())
    if mono is None or not mono.is_squarefree():
        raise ValueError("cohomological dimension is computed here only for "
                         "square-free monomial ideals")
    return I.ring.n - depth_from_cohomology(I, order)
