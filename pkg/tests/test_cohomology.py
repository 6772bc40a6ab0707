"""Graded local cohomology via Ext duality, and the Serre-type checks."""

import random

import pytest

from degenlab.cohomology import (check_buchsbaum_squarefree, check_cm_in_codim,
                                 check_generalized_cm, check_pure, check_serre,
                                 cohomological_dimension_squarefree,
                                 depth_from_cohomology, dim_from_cohomology,
                                 ext_table, grading_socle_shift,
                                 local_cohomology_dimensions_agree,
                                 local_cohomology_series,
                                 local_cohomology_table)
from degenlab.groebner import Ideal
from degenlab.orders import DegRevLex
from degenlab.resolution import projective_dimension, quotient_invariants
from degenlab.ring import PolyRing


def skew_lines():
    R = PolyRing(("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    return Ideal(R, [x * z, x * w, y * z, y * w])


def test_hyperplane_quotient_is_a_polynomial_ring():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    I = Ideal(R, [x])
    assert depth_from_cohomology(I) == 1
    assert dim_from_cohomology(I) == 1
    # H^1_m(k[y]) is one dimensional in every degree <= -1 and zero above.
    table = local_cohomology_table(I, jlo=-4, jhi=1)
    assert table == {(1, j): 1 for j in range(-4, 0)}
    s = local_cohomology_series(I, 1)
    assert [s.coefficient(j) for j in (-1, 0, 1, 2)] == [0, 0, 1, 1]


def test_socle_shift_is_the_weight_sum():
    R = PolyRing(("x", "y", "z"), grading=(1, 2, 3))
    x, y, z = R.gens()
    assert grading_socle_shift(Ideal(R, [x])) == 6


def test_ext_is_concentrated_in_the_codimension_for_cm():
    R = PolyRing(("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    I = Ideal(R, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])
    assert sorted(ext_table(I)) == [2]


def test_depth_agrees_with_auslander_buchsbaum():
    rng = random.Random(31337)
    R = PolyRing(("x", "y", "z"))
    for _ in range(10):
        gens = []
        for _ in range(rng.randrange(1, 4)):
            e = tuple(rng.randrange(3) for _ in range(3))
            if any(e):
                gens.append(R.monomial(e))
        if not gens:
            continue
        I = Ideal(R, gens)
        assert depth_from_cohomology(I) == 3 - projective_dimension(I)


def test_skew_lines_are_buchsbaum_but_not_cm():
    I = skew_lines()
    assert (depth_from_cohomology(I), dim_from_cohomology(I)) == (1, 2)
    # H^1_m is the one dimensional connecting socle in degree zero, and
    # H^2_m is the sum over the two planes, each contributing -j-1 in degree j.
    assert local_cohomology_table(I, jlo=-3, jhi=1) == {(1, 0): 1,
                                                        (2, -2): 2,
                                                        (2, -3): 4}
    assert check_generalized_cm(I)
    assert check_buchsbaum_squarefree(I)
    assert not check_serre(I, 2)
    assert check_serre(I, 1)
    assert check_cm_in_codim(I, 1)
    assert check_pure(I)


def test_serre_conditions_on_a_cm_quotient():
    R = PolyRing(("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    I = Ideal(R, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])
    for r in (2, 3, 5):
        assert check_serre(I, r)
    assert check_serre(I, 0)
    with pytest.raises(NotImplementedError):
        check_serre(I, 1)


def test_buchsbaum_test_rejects_non_squarefree_input():
    R = PolyRing(("x", "y"))
    x, y = R.gens()
    with pytest.raises(ValueError):
        check_buchsbaum_squarefree(Ideal(R, [x ** 2]))
    with pytest.raises(ValueError):
        cohomological_dimension_squarefree(Ideal(R, [x ** 2 - y ** 2]))


def test_cohomological_dimension_of_skew_lines():
    assert cohomological_dimension_squarefree(skew_lines()) == 3


def test_dimension_agreement_is_an_equivalence_check():
    R = PolyRing(("x", "y", "z"))
    x, y, z = R.gens()
    I = Ideal(R, [x * y - z ** 2])
    J = Ideal(R, [x * y])
    K = Ideal(R, [x * z])
    assert local_cohomology_dimensions_agree(I, J)
    assert local_cohomology_dimensions_agree(J, K)
    assert not local_cohomology_dimensions_agree(I, Ideal(R, [x]))
    S = PolyRing(("a", "b"))
    assert not local_cohomology_dimensions_agree(I, Ideal(S, [S.gens()[0]]))
