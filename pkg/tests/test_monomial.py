"""Combinatorial routes to Betti numbers and local cohomology of monomial ideals."""

import random

import pytest

from degenlab.cohomology import local_cohomology_table
from degenlab.groebner import Ideal
from degenlab.monomial import (MonomialIdeal, cech_cohomology_series,
                               cech_table, hochster_table, lcm_lattice,
                               monomial_betti_numbers, monomial_depth_dim)
from degenlab.orders import DegRevLex
from degenlab.resolution import (betti_numbers, depth_quotient,
                                 projective_dimension, quotient_invariants)
from degenlab.ring import PolyRing


def random_monomial_ideal(rng, n=3, top=3):
    R = PolyRing(tuple(f"x{i}" for i in range(n)))
    monos = []
    for _ in range(rng.randrange(1, 5)):
        e = tuple(rng.randrange(top) for _ in range(n))
        if any(e):
            monos.append(e)
    return MonomialIdeal(R, monos) if monos else None


def test_lcm_lattice_of_two_variables():
    R = PolyRing(("x", "y"))
    M = MonomialIdeal(R, [(1, 0), (0, 1)])
    assert lcm_lattice(M) == [(0, 1), (1, 0), (1, 1)]


def test_lattice_betti_matches_the_resolution_route():
    rng = random.Random(424242)
    hits = 0
    while hits < 12:
        M = random_monomial_ideal(rng)
        if M is None:
            continue
        hits += 1
        assert monomial_betti_numbers(M) == betti_numbers(M.to_ideal())


def test_cech_matches_hochster_on_squarefree_ideals():
    rng = random.Random(86)
    hits = 0
    while hits < 10:
        M = random_monomial_ideal(rng, n=4, top=2)
        if M is None:
            continue
        hits += 1
        assert M.is_squarefree()
        assert cech_table(M, jlo=-5, jhi=2) == hochster_table(M, jlo=-5, jhi=2)


def test_cech_matches_ext_duality_on_general_monomial_ideals():
    rng = random.Random(777)
    hits = 0
    while hits < 8:
        M = random_monomial_ideal(rng, n=3, top=3)
        if M is None:
            continue
        hits += 1
        I = M.to_ideal()
        assert cech_table(M, jlo=-6, jhi=3) == local_cohomology_table(
            I, DegRevLex(), jlo=-6, jhi=3)


def test_hochster_rejects_non_squarefree_input():
    R = PolyRing(("x", "y"))
    with pytest.raises(ValueError):
        hochster_table(MonomialIdeal(R, [(2, 0)]))


def test_depth_dim_against_the_resolution_side():
    rng = random.Random(2468)
    hits = 0
    while hits < 10:
        M = random_monomial_ideal(rng)
        if M is None:
            continue
        hits += 1
        depth, dim = monomial_depth_dim(M)
        inv = quotient_invariants(M.to_ideal())
        assert (depth, dim) == (inv.depth, inv.dim)
        assert depth == 3 - projective_dimension(M.to_ideal())


def test_cech_series_strand_indices_bound_depth_and_dim():
    R = PolyRing(("x", "y", "z", "w"))
    M = MonomialIdeal(R, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    series = cech_cohomology_series(M)
    assert sorted(series) == [1, 2]
    assert series[1].coefficient(0) == 1


def test_zero_module_edges():
    R = PolyRing(("x", "y"))
    unit = MonomialIdeal(R, [(0, 0)])
    assert cech_cohomology_series(unit) == {}
    with pytest.raises(ValueError):
        monomial_depth_dim(unit)
    assert cech_table(unit) == {}


def test_whole_ring_has_full_cohomology():
    R = PolyRing(("x", "y"))
    zero = MonomialIdeal(R, [])
    assert monomial_depth_dim(zero) == (2, 2)
    assert monomial_betti_numbers(zero) == {(0, 0): 1}
