"""Simplicial complexes, reduced cohomology, and the Stanley-Reisner bridge.

Complexes are stored by their facets over integer vertices 0..n-1.  Reduced
cohomology is computed from coboundary ranks over an arbitrary coefficient
field, with the empty face present, so the complex {emptyset} has one
dimension of cohomology in degree -1.  The face-enumeration routines are
meant for the desk scale of this package (vertex counts in the low tens).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .field import QQ
from .groebner import MonomialIdeal
from .linalg import matrix_rank
from .ring import PolyRing, mono_support

Face = FrozenSet[int]


class SimplicialComplex:
    """A finite simplicial complex on vertices 0..n-1, stored by facets."""

    def __init__(self, n: int, facets: Iterable[Iterable[int]], is_void: bool = False):
        self.n = n
        fs = {frozenset(f) for f in facets}
        for f in fs:
            for v in f:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} outside 0..{n - 1}")
        if is_void and fs:
            raise ValueError("a void complex has no faces at all")
        self.is_void = is_void
        if is_void:
            self.facets: Tuple[Face, ...] = ()
        else:
            maximal = [f for f in fs if not any(f < g for g in fs)]
            if not maximal:
                maximal = [frozenset()]
            self.facets = tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, [], is_void=True)

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, [[]])

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, [range(n)])

    @property
    def dim(self) -> int:
        """Dimension; -1 for {emptyset} and -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> Set[Face]:
        out: Set[Face] = set()
        if self.is_void:
            return out
        for f in self.facets:
            vs = sorted(f)
            for k in range(len(vs) + 1):
                out.update(frozenset(c) for c in itertools.combinations(vs, k))
        return out

    def faces_of_size(self, k: int) -> List[Face]:
        return sorted((f for f in self.faces() if len(f) == k), key=sorted)

    def has_face(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets) and not self.is_void

    def is_pure(self) -> bool:
        if self.is_void:
            return True
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def vertices(self) -> List[int]:
        out: Set[int] = set()
        for f in self.facets:
            out |= f
        return sorted(out)

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        f = frozenset(face)
        if not self.has_face(f):
            return SimplicialComplex.void(self.n)
        facets = [g - f for g in self.facets if f <= g]
        return SimplicialComplex(self.n, facets)

    def deletion(self, v: int) -> "SimplicialComplex":
        facets = [f - {v} for f in self.facets]
        return SimplicialComplex(self.n, facets)

    def f_vector(self) -> Tuple[int, ...]:
        """Entry k counts the faces with k vertices, so it starts at 1."""
        if self.is_void:
            return (0,)
        counts: Dict[int, int] = {}
        for f in self.faces():
            counts[len(f)] = counts.get(len(f), 0) + 1
        return tuple(counts.get(k, 0) for k in range(self.dim + 2))

    def h_vector(self) -> Tuple[int, ...]:
        f = self.f_vector()
        d = self.dim + 1
        h = []
        for k in range(d + 1):
            h.append(sum((-1) ** (k - i) * comb(d - i, k - i) * f[i]
                         for i in range(k + 1)))
        return tuple(h)

    def euler_characteristic_reduced(self) -> int:
        f = self.f_vector()
        return sum((-1) ** (k - 1) * f[k] for k in range(len(f)))

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """The order complex of the poset of nonempty faces."""
        nonempty = sorted((f for f in self.faces() if f), key=lambda f: (len(f), sorted(f)))
        index = {f: i for i, f in enumerate(nonempty)}
        chains: List[List[int]] = []

        def grow(chain: List[Face]) -> None:
            top = chain[-1]
            extended = False
            for g in nonempty:
                if len(g) > len(top) and top < g:
                    grow(chain + [g])
                    extended = True
            if not extended:
                chains.append([index[f] for f in chain])

        for f in nonempty:
            if not any(g < f for g in nonempty):
                grow([f])
        if not nonempty:
            return SimplicialComplex(0, [[]]) if not self.is_void else SimplicialComplex.void(0)
        return SimplicialComplex(len(nonempty), chains)

    def reduced_cohomology_dims(self, field=QQ) -> Dict[int, int]:
        """Dimensions of the reduced cohomology, keyed by degree >= -1."""
        if self.is_void:
            return {}
        by_size: Dict[int, List[Face]] = {}
        for f in self.faces():
            by_size.setdefault(len(f), []).append(f)
        for k in by_size:
            by_size[k].sort(key=sorted)
        top = max(by_size)
        ranks: Dict[int, int] = {}
        for k in range(0, top):
            dom = by_size.get(k, [])
            cod = by_size.get(k + 1, [])
            if not dom or not cod:
                ranks[k] = 0
                continue
            row_of = {f: i for i, f in enumerate(dom)}
            rows = [[field.zero] * len(cod) for _ in dom]
            for c, g in enumerate(cod):
                vs = sorted(g)
                for s, v in enumerate(vs):
                    sub = g - {v}
                    sign = field.one if s % 2 == 0 else field.neg(field.one)
                    rows[row_of[sub]][c] = sign
            ranks[k] = matrix_rank(rows, field)
        out: Dict[int, int] = {}
        for k in range(0, top + 1):
            dim_k = len(by_size.get(k, []))
            h = dim_k - ranks.get(k, 0) - ranks.get(k - 1, 0)
            if h:
                out[k - 1] = h
        return out

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.n == other.n
                and self.is_void == other.is_void and set(self.facets) == set(other.facets))

    def __hash__(self):
        return hash((self.n, self.is_void, frozenset(self.facets)))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex.void({self.n})"
        shown = [sorted(f) for f in self.facets]
        return f"SimplicialComplex({self.n}, {shown})"


def sr_ideal(delta: SimplicialComplex, ring: PolyRing) -> MonomialIdeal:
    """The Stanley-Reisner ideal: minimal non-faces as square-free monomials."""
    if ring.n != delta.n:
        raise ValueError("ring must have one variable per vertex")
    faces = delta.faces()
    nonfaces: List[Face] = []
    for k in range(1, delta.n + 1):
        for c in itertools.combinations(range(delta.n), k):
            f = frozenset(c)
            if f in faces:
                continue
            if any(nf <= f for nf in nonfaces):
                continue
            nonfaces.append(f)
    monos = [tuple(1 if v in f else 0 for v in range(ring.n)) for f in nonfaces]
    return MonomialIdeal(ring, monos)


def sr_complex(M: MonomialIdeal) -> SimplicialComplex:
    """The simplicial complex whose minimal non-faces generate the ideal."""
    ring = M.ring
    if not M.is_squarefree():
        raise ValueError("Stanley-Reisner complexes come from square-free ideals")
    supports = [frozenset(mono_support(m)) for m in M.gens]

    faces: List[Face] = []

    def grow(face: Set[int], candidates: List[int]) -> None:
        faces.append(frozenset(face))
        for idx, v in enumerate(candidates):
            nxt = face | {v}
            if any(s <= nxt for s in supports):
                continue
            grow(nxt, candidates[idx + 1:])

    grow(set(), list(range(ring.n)))
    return SimplicialComplex(ring.n, faces)


def minimal_primes_squarefree(M: MonomialIdeal) -> List[FrozenSet[int]]:
    """Minimal primes of a square-free monomial ideal as variable index sets."""
    delta = sr_complex(M)
    allv = frozenset(range(M.ring.n))
    return sorted((allv - f for f in delta.facets), key=sorted)


@dataclass(frozen=True)
class DualGraph:
    """The dual graph on minimal primes, with edges by height-one sums."""

    primes: Tuple[FrozenSet[int], ...]
    edges: Tuple[Tuple[int, int], ...]
    height: int

    def adjacency(self) -> Dict[int, Set[int]]:
        adj: Dict[int, Set[int]] = {i: set() for i in range(len(self.primes))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self) -> bool:
        if not self.primes:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = [0]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.primes)

    def diameter(self) -> Optional[int]:
        """Largest vertex distance; None encodes the infinite, disconnected case."""
        if not self.is_connected():
            return None
        adj = self.adjacency()
        best = 0
        for src in range(len(self.primes)):
            dist = {src: 0}
            queue = [src]
            while queue:
                v = queue.pop(0)
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            best = max(best, max(dist.values()))
        return best

    def is_hirsch(self) -> bool:
        """Diameter bounded by the height; a disconnected graph fails outright."""
        d = self.diameter()
        return False if d is None else d <= self.height


def dual_graph(source, ambient_height: Optional[int] = None) -> DualGraph:
    """Dual graph of unmixed primes, given directly or via a square-free ideal."""
    if isinstance(source, MonomialIdeal):
        primes = minimal_primes_squarefree(source)
    else:
        primes = sorted((frozenset(p) for p in source), key=sorted)
    if not primes:
        raise ValueError("need at least one prime")
    heights = {len(p) for p in primes}
    if len(heights) > 1:
        raise ValueError(f"mixed prime heights {sorted(heights)}; unmixed input required")
    height = heights.pop()
    if ambient_height is not None and ambient_height != height:
        raise ValueError(f"ambient height {ambient_height} does not match prime height {height}")
    edges = []
    for a in range(len(primes)):
        for b in range(a + 1, len(primes)):
            if len(primes[a] | primes[b]) == height + 1:
                edges.append((a, b))
    return DualGraph(tuple(primes), tuple(edges), height)


def _colex_rank(subset: Sequence[int]) -> int:
    """Position of a sorted k-subset of N in the colexicographic order."""
    return sum(comb(v, i + 1) for i, v in enumerate(sorted(subset)))


def _colex_segment(k: int, count: int) -> List[Tuple[int, ...]]:
    """The first `count` k-subsets of the naturals in colexicographic order."""
    out: List[Tuple[int, ...]] = []
    if count <= 0:
        return out
    universe = k
    while comb(universe, k) < count:
        universe += 1
    for c in itertools.combinations(range(universe), k):
        out.append(c)
    out.sort(key=_colex_rank)
    return out[:count]


def is_f_vector(candidate: Sequence[int]) -> Tuple[bool, Optional[SimplicialComplex]]:
    """Kruskal-Katona test: is the sequence the f-vector of a complex?

    The candidate lists face counts by vertex count starting with the empty
    face, so it must begin with 1.  On success the witness is the compressed
    complex whose size-k faces are the first candidate[k] k-subsets in colex
    order; its f-vector is asserted equal to the input.
    """
    cand = [int(c) for c in candidate]
    while cand and cand[-1] == 0:
        cand.pop()
    if not cand:
        return False, None
    if cand[0] != 1 or any(c < 0 for c in cand):
        return False, None
    if len(cand) == 1:
        return True, SimplicialComplex.empty(0)
    segments: Dict[int, List[Tuple[int, ...]]] = {}
    for k in range(1, len(cand)):
        segments[k] = _colex_segment(k, cand[k])
        if len(segments[k]) < cand[k]:
            return False, None
    for k in range(2, len(cand)):
        allowed = {frozenset(c) for c in segments[k - 1]}
        for face in segments[k]:
            for sub in itertools.combinations(face, k - 1):
                if frozenset(sub) not in allowed:
                    return False, None
    n = max((max(c) + 1 for k in segments for c in segments[k] if c), default=0)
    all_faces: List[Iterable[int]] = [[]]
    for k in segments:
        all_faces.extend(segments[k])
    witness = SimplicialComplex(n, all_faces)
    if list(witness.f_vector()) != cand:
        raise AssertionError("witness complex does not realize the candidate")
    return True, witness


class Poset:
    """A finite poset given by elements and covering or comparability pairs."""

    def __init__(self, elements: Sequence[str], relations: Iterable[Tuple[str, str]]):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("poset elements repeat")
        index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        below = [[False] * n for _ in range(n)]
        for a, b in relations:
            below[index[a]][index[b]] = True
        for k in range(n):
            for i in range(n):
                if below[i][k]:
                    for j in range(n):
                        if below[k][j]:
                            below[i][j] = True
        for i in range(n):
            if below[i][i]:
                raise ValueError("relations contain a cycle")
        self._lt = below
        self.index = index

    def less(self, a: str, b: str) -> bool:
        return self._lt[self.index[a]][self.index[b]]

    def comparable(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def incomparable_pairs(self) -> List[Tuple[str, str]]:
        out = []
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                a, b = self.elements[i], self.elements[j]
                if not self.comparable(a, b):
                    out.append((a, b))
        return out

    def order_complex(self) -> SimplicialComplex:
        """Faces are the chains of the poset."""
        n = len(self.elements)
        chains: List[List[int]] = [[]]

        def grow(chain: List[int]) -> None:
            chains.append(list(chain))
            last = chain[-1]
            for j in range(n):
                if self._lt[last][j]:
                    grow(chain + [j])

        for i in range(n):
            grow([i])
        return SimplicialComplex(n, chains)


def asl_discrete_ideal(poset: Poset, ring: PolyRing) -> MonomialIdeal:
    """Products of incomparable poset elements, one variable per element."""
    if ring.n != len(poset.elements):
        raise ValueError("ring must have one variable per poset element")
    monos = []
    for a, b in poset.incomparable_pairs():
        i, j = poset.index[a], poset.index[b]
        monos.append(tuple((1 if v in (i, j) else 0) for v in range(ring.n)))
    return MonomialIdeal(ring, monos)
