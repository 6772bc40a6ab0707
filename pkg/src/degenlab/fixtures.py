"""Named example ideals used by the test suite and the verification runs.

Each fixture bundles an ideal with the term order its degeneration is read
under.  The constructions are spelled out here so a fixture can be rebuilt
from scratch; certified invariant values live in the tests that freeze them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

from .groebner import Ideal
from .orders import DegRevLex, Lex, TermOrder
from .ring import PolyRing, Polynomial


@dataclass(frozen=True)
class Fixture:
    """An ideal, the order to degenerate by, and a short description."""

    name: str
    ideal: Ideal
    order: TermOrder
    note: str = ""


def two_by_two_minors(rows: Sequence[Sequence[Polynomial]]) -> List[Polynomial]:
    """All 2x2 minors of a matrix of polynomials, row by row."""
    out = []
    for i in range(len(rows)):
        for h in range(i + 1, len(rows)):
            for j in range(len(rows[0])):
                for k in range(j + 1, len(rows[0])):
                    out.append(rows[i][j] * rows[h][k] - rows[i][k] * rows[h][j])
    return out


def generic_matrix(ring: PolyRing, nrows: int, ncols: int,
                   start: int = 0) -> List[List[Polynomial]]:
    """A matrix of distinct ring variables in row-major order."""
    g = ring.gens()
    return [[g[start + i * ncols + j] for j in range(ncols)] for i in range(nrows)]


def twisted_cubic() -> Fixture:
    """The rational normal curve of degree 3, as 2-minors of a 2x3 catalecticant."""
    R = PolyRing(["x", "y", "z", "w"])
    x, y, z, w = R.gens()
    rows = [[x, y, z], [y, z, w]]
    return Fixture("twisted-cubic", Ideal(R, two_by_two_minors(rows)), Lex(),
                   "2-minors of [[x,y,z],[y,z,w]], lex")


def mixed_minors_3x3_lex() -> Fixture:
    """2-minors of a 3x3 matrix of linear forms in 7 variables, under lex."""
    R = PolyRing([f"x{i}" for i in range(1, 8)])
    x = dict(zip(range(1, 8), R.gens()))
    rows = [[x[1] + x[2], x[5], x[4]],
            [-x[5] + x[6], x[3] + x[7], x[5]],
            [x[4] + x[7], x[1] - x[3], x[5] + x[7]]]
    return Fixture("mixed-minors-3x3-lex", Ideal(R, two_by_two_minors(rows)), Lex(),
                   "2-minors of a mixed 3x3 linear matrix in 7 variables, lex")


def mixed_minors_3x4_revlex() -> Fixture:
    """2-minors of a 3x4 matrix of linear forms in 9 variables, under degrevlex."""
    R = PolyRing([f"x{i}" for i in range(1, 10)])
    x = dict(zip(range(1, 10), R.gens()))
    rows = [[x[3] + x[7], x[6], x[1], x[5]],
            [x[9], x[4] + x[5], x[7], x[1] + x[2]],
            [x[3], x[3], x[7], x[7] - x[8]]]
    return Fixture("mixed-minors-3x4-revlex", Ideal(R, two_by_two_minors(rows)),
                   DegRevLex(),
                   "2-minors of a mixed 3x4 linear matrix in 9 variables, degrevlex")


def generic_minors_4x4() -> Fixture:
    """2-minors of the generic 4x4 matrix in 16 variables, row-major degrevlex."""
    R = PolyRing([f"x{i}{j}" for i in range(1, 5) for j in range(1, 5)])
    rows = generic_matrix(R, 4, 4)
    return Fixture("generic-minors-4x4", Ideal(R, two_by_two_minors(rows)),
                   DegRevLex(), "2-minors of the generic 4x4 matrix, degrevlex")


def generic_minors_2x3() -> Fixture:
    """2-minors of the generic 2x3 matrix in 6 variables, row-major degrevlex."""
    R = PolyRing([f"x{i}{j}" for i in range(1, 3) for j in range(1, 4)])
    rows = generic_matrix(R, 2, 3)
    return Fixture("generic-minors-2x3", Ideal(R, two_by_two_minors(rows)),
                   DegRevLex(), "2-minors of the generic 2x3 matrix, degrevlex")


def weighted_minors_2x3(a: int = 5, b: int = 2) -> Fixture:
    """2-minors of a 2x3 matrix that is homogeneous for weights (2a, 2ab, 2a, a, 2).

    The entries mix powers so that only the weighted grading makes the ideal
    homogeneous; the displayed weights follow from forcing every entry
    product appearing in a minor to share a degree.
    """
    w = (2 * a, 2 * a * b, 2 * a, a, 2)
    R = PolyRing(["x1", "x2", "x3", "x4", "x5"], grading=w)
    x1, x2, x3, x4, x5 = R.gens()
    rows = [[x4 * x4 + x5 ** a, x3, x2],
            [x1, x4 * x4, x3 ** b - x2]]
    return Fixture("weighted-minors-2x3", Ideal(R, two_by_two_minors(rows)), Lex(),
                   f"2-minors of a weighted 2x3 matrix, weights {w}, lex")


def height3_ci_6vars() -> Fixture:
    """A height 3 complete intersection of quadrics in 6 variables, under lex."""
    R = PolyRing([f"x{i}" for i in range(1, 7)])
    x = dict(zip(range(1, 7), R.gens()))
    gens = [x[1] * x[5] + x[2] * x[6] + x[4] * x[4],
            x[1] * x[4] + x[3] * x[3] - x[4] * x[5],
            x[1] * x[1] + x[1] * x[2] + x[2] * x[5]]
    return Fixture("height3-ci-6vars", Ideal(R, gens), Lex(),
                   "three quadrics cutting a normal 3-fold in 6 variables, lex")


def _knutson_ring() -> PolyRing:
    return PolyRing(["x1", "x2", "x3", "x4", "x5"])


def knutson_product_quintic() -> Fixture:
    """The principal ideal (g*h) whose lex initial term is the product of all variables."""
    R = _knutson_ring()
    x1, x2, x3, x4, x5 = R.gens()
    g = x1 * x4 * x5 - x2 * x4 * x4 - x3 * x5 * x5
    h = x2 * x3 - x4 * x5
    return Fixture("knutson-product-quintic", Ideal(R, [g * h]), Lex(),
                   "principal quintic g*h with square-free lex initial term")


def knutson_ci_factors() -> Fixture:
    """The height 2 complete intersection (g, h) from the quintic's factors."""
    R = _knutson_ring()
    x1, x2, x3, x4, x5 = R.gens()
    g = x1 * x4 * x5 - x2 * x4 * x4 - x3 * x5 * x5
    h = x2 * x3 - x4 * x5
    return Fixture("knutson-ci-factors", Ideal(R, [g, h]), Lex(),
                   "complete intersection (g, h) of the quintic factors, lex")


def knutson_prime_5vars() -> Fixture:
    """A height 2 prime containing (g, h) whose quotient is a non-CM 3-fold."""
    R = _knutson_ring()
    x1, x2, x3, x4, x5 = R.gens()
    g = x1 * x4 * x5 - x2 * x4 * x4 - x3 * x5 * x5
    h = x2 * x3 - x4 * x5
    p3 = x1 * x3 * x4 - x3 * x3 * x5 - x4 ** 3
    p4 = x1 * x2 * x5 - x2 * x2 * x4 - x5 ** 3
    return Fixture("knutson-prime-5vars", Ideal(R, [g, h, p3, p4]), Lex(),
                   "height 2 prime over the factor complete intersection, lex")


def binomial_edge_ideal(nverts: int, edges: Sequence[Tuple[int, int]],
                        name: str) -> Fixture:
    """The ideal (x_i y_j - x_j y_i : ij an edge), lex with all x before all y."""
    names = [f"x{i}" for i in range(1, nverts + 1)]
    names += [f"y{i}" for i in range(1, nverts + 1)]
    R = PolyRing(names)
    g = R.gens()
    gens = []
    for i, j in edges:
        if not 1 <= i < j <= nverts:
            raise ValueError(f"edge ({i},{j}) must satisfy 1 <= i < j <= {nverts}")
        gens.append(g[i - 1] * g[nverts + j - 1] - g[j - 1] * g[nverts + i - 1])
    return Fixture(f"binomial-edge-{name}", Ideal(R, gens), Lex(),
                   f"binomial edge ideal of {name} on {nverts} vertices, lex")


BINOMIAL_EDGE_GRAPHS: Dict[str, Tuple[int, Tuple[Tuple[int, int], ...]]] = {
    "k2": (2, ((1, 2),)),
    "p3": (3, ((1, 2), (2, 3))),
    "k3": (3, ((1, 2), (1, 3), (2, 3))),
    "p4": (4, ((1, 2), (2, 3), (3, 4))),
    "c4": (4, ((1, 2), (2, 3), (3, 4), (1, 4))),
    "star3": (4, ((1, 2), (1, 3), (1, 4))),
    "paw": (4, ((1, 2), (1, 3), (2, 3), (3, 4))),
    "diamond": (4, ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4))),
    "k4": (4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    "p5": (5, ((1, 2), (2, 3), (3, 4), (4, 5))),
    "c5": (5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))),
    "star4": (5, ((1, 2), (1, 3), (1, 4), (1, 5))),
    "k5": (5, tuple((i, j) for i in range(1, 6) for j in range(i + 1, 6))),
}


def binomial_edge_fixtures() -> List[Fixture]:
    """Binomial edge ideals for the stock graphs on at most 5 vertices."""
    return [binomial_edge_ideal(n, edges, name)
            for name, (n, edges) in BINOMIAL_EDGE_GRAPHS.items()]


_BUILDERS: Dict[str, Callable[[], Fixture]] = {
    "twisted-cubic": twisted_cubic,
    "mixed-minors-3x3-lex": mixed_minors_3x3_lex,
    "mixed-minors-3x4-revlex": mixed_minors_3x4_revlex,
    "generic-minors-4x4": generic_minors_4x4,
    "generic-minors-2x3": generic_minors_2x3,
    "weighted-minors-2x3": weighted_minors_2x3,
    "height3-ci-6vars": height3_ci_6vars,
    "knutson-product-quintic": knutson_product_quintic,
    "knutson-ci-factors": knutson_ci_factors,
    "knutson-prime-5vars": knutson_prime_5vars,
}


def fixture_names() -> List[str]:
    """Every registry name, stock graphs included, in a stable order."""
    return list(_BUILDERS) + [f"binomial-edge-{g}" for g in BINOMIAL_EDGE_GRAPHS]


def get_fixture(name: str) -> Fixture:
    """Build a fixture from its registry name."""
    if name in _BUILDERS:
        return _BUILDERS[name]()
    if name.startswith("binomial-edge-"):
        g = name[len("binomial-edge-"):]
        if g in BINOMIAL_EDGE_GRAPHS:
            n, edges = BINOMIAL_EDGE_GRAPHS[g]
            return binomial_edge_ideal(n, edges, g)
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")


def asl_poset(name: str) -> "Poset":
    """The poset presenting a fixture's quotient as an ordered algebra.

    The products of incomparable pairs must reproduce the fixture's initial
    ideal; that identity is what the verification suite checks.
    """
    from .simplicial import Poset
    if name == "twisted-cubic":
        return Poset(["x", "y", "z", "w"], [("x", "y"), ("z", "y"), ("z", "w")])
    if name == "generic-minors-2x3":
        elems = [f"x{i}{j}" for i in range(1, 3) for j in range(1, 4)]
        rels = []
        for i in range(1, 3):
            for j in range(1, 3):
                rels.append((f"x{i}{j}", f"x{i}{j + 1}"))
        for j in range(1, 4):
            rels.append((f"x1{j}", f"x2{j}"))
        return Poset(elems, rels)
    raise KeyError(f"no ordered-algebra presentation stored for {name!r}")
