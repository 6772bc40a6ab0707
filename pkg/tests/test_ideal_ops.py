"""Sums, intersections, quotients, elimination, and radical membership."""

import random

import pytest

from degenlab.groebner import (Ideal, eliminate, ideal_equal, ideal_intersection,
                               ideal_quotient, ideal_sum, radical_membership)
from degenlab.orders import DegRevLex, Lex
from degenlab.ring import PolyRing


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"))


def test_sum_and_intersection_of_coordinate_ideals(R):
    x, y, z = R.gens()
    A, B = Ideal(R, [x]), Ideal(R, [y])
    assert ideal_equal(ideal_sum(A, B), Ideal(R, [x, y]))
    assert ideal_equal(ideal_intersection(A, B), Ideal(R, [x * y]))


def test_quotient_of_monomial_ideals(R):
    x, y, z = R.gens()
    I = Ideal(R, [x * y, y * z])
    assert ideal_equal(ideal_quotient(I, Ideal(R, [y])), Ideal(R, [x, z]))
    # colon by something already inside gives the unit ideal
    assert ideal_quotient(I, Ideal(R, [x * y])).contains(R.one())


def test_intersection_membership_probes(R):
    rng = random.Random(11011)
    x, y, z = R.gens()
    I = Ideal(R, [x * y - z ** 2, y ** 2 - x * z])
    J = Ideal(R, [x + y + z])
    C = ideal_intersection(I, J)
    for _ in range(20):
        f = R.from_terms({tuple(rng.randrange(3) for _ in range(3)):
                          rng.randrange(-4, 5) for _ in range(4)})
        both = I.contains(f) and J.contains(f)
        assert C.contains(f) == both
    g = (x * y - z ** 2) * (x + y + z)
    assert C.contains(g)


def test_quotient_times_divisor_lands_inside(R):
    rng = random.Random(999)
    x, y, z = R.gens()
    I = Ideal(R, [x ** 2 - y * z, y ** 3])
    for g in (y, x + z, x * y - z ** 2):
        Q = ideal_quotient(I, Ideal(R, [g]))
        for q in Q.gens:
            assert I.contains(q * g)


def test_eliminate_projects_a_parametrization():
    R = PolyRing(("t", "x", "y"))
    t, x, y = R.gens()
    I = Ideal(R, [x - t ** 2, y - t ** 3])
    J = eliminate(I, [0])
    # the cuspidal cubic is the image ideal, and t is gone from the output
    assert all(m[0] == 0 for g in J.gens for m in g.terms)
    assert ideal_equal(J, Ideal(R, [y ** 2 - x ** 3]))
    assert not J.contains(x - t ** 2)


def test_ideal_equal_sees_through_presentations(R):
    x, y, z = R.gens()
    A = Ideal(R, [x + y, y + z])
    B = Ideal(R, [x - z, 2 * y + 2 * z, x + y])
    assert ideal_equal(A, B)
    assert not ideal_equal(A, Ideal(R, [x, y, z]))


def test_radical_membership_detects_nilpotents_mod_i(R):
    x, y, z = R.gens()
    I = Ideal(R, [x ** 2, y ** 3])
    assert radical_membership(x, I)
    assert radical_membership(x + y, I)
    assert not radical_membership(z, I)
    assert not radical_membership(x + z, I)
    assert I.contains((x + y) ** 4)


def test_sum_intersection_lattice_laws(R):
    rng = random.Random(321)
    x, y, z = R.gens()
    I = Ideal(R, [x * y])
    J = Ideal(R, [y * z, x - z])
    K = Ideal(R, [z ** 2])
    # modular-ish sanity: I cap (I + J) = I, I + (I cap J) = I
    assert ideal_equal(ideal_intersection(I, ideal_sum(I, J)), I)
    assert ideal_equal(ideal_sum(I, ideal_intersection(I, J)), I)
    # distributive inequality holds as containment via membership probes
    L = ideal_intersection(ideal_sum(I, K), ideal_sum(J, K))
    for g in ideal_sum(ideal_intersection(I, J), K).gens:
        assert L.contains(g)
