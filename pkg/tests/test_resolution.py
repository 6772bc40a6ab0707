"""Minimal free resolutions, Betti tables, and the Koszul-rank oracle."""

import random

import pytest

from degenlab.groebner import Ideal, MonomialIdeal
from degenlab.hilbert import free_module_series, hilbert_series_quotient
from degenlab.orders import DegRevLex, Lex
from degenlab.resolution import (betti_numbers, betti_table_string,
                                 betti_via_koszul, depth_quotient,
                                 extremal_betti, free_resolution,
                                 projective_dimension, quotient_invariants,
                                 regularity)
from degenlab.ring import PolyRing


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z", "w"))


def test_twisted_cubic_resolution(R):
    x, y, z, w = R.gens()
    I = Ideal(R, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])
    res = free_resolution(I, DegRevLex())
    res.verify(I)
    assert res.length == 2
    assert betti_numbers(I) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert regularity(I) == 1
    assert depth_quotient(I) == 2
    assert extremal_betti(betti_numbers(I)) == {(2, 3): 2}


def test_koszul_complex_of_the_variables(R):
    I = Ideal(R, list(R.gens()))
    betti = betti_numbers(I)
    from math import comb
    for i in range(5):
        assert betti.get((i, i), 0) == comb(4, i)
    assert projective_dimension(I) == 4
    assert depth_quotient(I) == 0


def test_resolution_is_minimal(R):
    x, y, z, w = R.gens()
    I = Ideal(R, [x * y, y * z, z * w, x ** 2 * w])
    res = free_resolution(I, DegRevLex())
    res.verify(I)
    for mat in res.maps[1:]:
        for row in mat:
            for entry in row:
                assert entry.is_zero() or entry.degree() >= 1


def random_mixed_ideal(R, rng):
    gens = []
    for _ in range(rng.randrange(2, 4)):
        a = tuple(rng.randrange(3) for _ in range(R.n))
        b = tuple(rng.randrange(3) for _ in range(R.n))
        if sum(a) == sum(b) and a != b:
            gens.append(R.from_terms({a: 1, b: rng.choice([-1, 1, 2])}))
        elif any(a):
            gens.append(R.monomial(a))
    return Ideal(R, gens) if gens else None


def test_euler_characteristic_matches_hilbert_series():
    rng = random.Random(7001)
    R = PolyRing(("x", "y", "z"))
    for _ in range(12):
        I = random_mixed_ideal(R, rng)
        if I is None or not I.is_homogeneous():
            continue
        res = free_resolution(I, DegRevLex())
        res.verify(I)
        total = None
        for k, twists in enumerate(res.twists):
            s = free_module_series(twists, R.grading)
            total = s if total is None else (total + s if k % 2 == 0 else total - s)
        assert total == hilbert_series_quotient(I)


def test_length_respects_the_syzygy_theorem():
    rng = random.Random(42)
    R = PolyRing(("x", "y", "z"))
    for _ in range(10):
        I = random_mixed_ideal(R, rng)
        if I is None:
            continue
        assert free_resolution(I, DegRevLex()).length <= 3


def test_koszul_rank_oracle_agrees_with_the_resolution():
    rng = random.Random(90210)
    R = PolyRing(("x", "y", "z"))
    x, y, z = R.gens()
    fixed = [
        Ideal(R, [x * y - z ** 2, y ** 2 - x * z]),
        Ideal(R, [x ** 2, x * y, y ** 3]),
        Ideal(R, [x * y * z]),
    ]
    for I in fixed:
        assert betti_via_koszul(I, DegRevLex()) == betti_numbers(I, DegRevLex())
    for _ in range(6):
        I = random_mixed_ideal(R, rng)
        if I is None or not I.is_homogeneous():
            continue
        assert betti_via_koszul(I, DegRevLex()) == betti_numbers(I, DegRevLex())


def test_betti_table_renders_macaulay_style(R):
    x, y, z, w = R.gens()
    I = Ideal(R, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])
    text = betti_table_string(betti_numbers(I))
    lines = text.splitlines()
    assert lines[0].split() == ["0", "1", "2"]
    assert lines[1].split() == ["0:", "1", ".", "."]
    assert lines[2].split() == ["1:", ".", "3", "2"]


def test_quotient_invariants_bundle(R):
    x, y, z, w = R.gens()
    I = Ideal(R, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])
    inv = quotient_invariants(I)
    assert (inv.dim, inv.depth, inv.projective_dimension) == (2, 2, 2)
    assert inv.is_cohen_macaulay
    assert inv.regularity == 1
    assert dict(inv.extremal) == {(2, 3): 2}


def test_regularity_needs_standard_grading():
    R = PolyRing(("s", "t"), grading=(1, 2))
    s, t = R.gens()
    with pytest.raises(ValueError):
        regularity(Ideal(R, [s ** 2 - t]))
