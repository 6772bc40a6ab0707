"""Buchberger output, reduced-basis uniqueness, and monomial ideal structure."""

import itertools
import random

import pytest

from degenlab.field import PrimeField
from degenlab.groebner import (GroebnerBasis, Ideal, MonomialIdeal, buchberger,
                               is_groebner, normal_form, s_polynomial)
from degenlab.orders import DegRevLex, Lex
from degenlab.ring import PolyRing, mono_divides


@pytest.fixture
def R4():
    return PolyRing(("x", "y", "z", "w"))


def twisted_cubic(R4):
    x, y, z, w = R4.gens()
    return Ideal(R4, [x * z - y ** 2, x * w - y * z, y * w - z ** 2])


def test_twisted_cubic_lex_basis(R4):
    gb = twisted_cubic(R4).groebner(Lex())
    assert sorted(gb.leading_monomials()) == sorted(
        [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)])
    assert is_groebner(gb.polys, Lex())


def test_reduced_basis_is_unique_under_shuffling(R4):
    rng = random.Random(4096)
    base = twisted_cubic(R4)
    reference = base.groebner(DegRevLex()).polys
    x, y, z, w = R4.gens()
    for _ in range(8):
        gens = list(base.gens)
        rng.shuffle(gens)
        # mix generators into each other; the ideal does not change
        k = rng.randrange(len(gens))
        j = rng.randrange(len(gens))
        if j != k:
            gens[k] = gens[k] + (x + w) * gens[j]
        assert Ideal(R4, gens).groebner(DegRevLex()).polys == reference


def test_s_polynomial_reduces_to_zero_on_a_basis(R4):
    gb = twisted_cubic(R4).groebner(Lex())
    for f, g in itertools.combinations(gb.polys, 2):
        s = s_polynomial(f, g, Lex())
        assert gb.normal_form(s).is_zero()


def test_normal_form_is_linear_and_idempotent(R4):
    rng = random.Random(2222)
    gb = twisted_cubic(R4).groebner(DegRevLex())
    for _ in range(25):
        terms = {tuple(rng.randrange(3) for _ in range(4)):
                 rng.randrange(-5, 6) for _ in range(4)}
        f = R4.from_terms(terms)
        g = R4.from_terms({tuple(rng.randrange(3) for _ in range(4)):
                           rng.randrange(-5, 6) for _ in range(3)})
        nf = gb.normal_form
        assert nf(nf(f)) == nf(f)
        assert nf(f + g) == nf(nf(f) + nf(g))
        # no term of a normal form is divisible by a leading monomial
        for m in nf(f).terms:
            assert not any(mono_divides(lm, m) for lm in gb.leading_monomials())


def test_membership_and_unit_detection(R4):
    I = twisted_cubic(R4)
    x, y, z, w = R4.gens()
    f = (x * z - y ** 2) * w + (y * w - z ** 2) * (x + 3)
    assert I.contains(f)
    assert not I.contains(x)
    assert not I.contains(R4.one())
    J = Ideal(R4, [x, x + 1])
    assert J.groebner(Lex()).is_unit_ideal()
    assert J.contains(R4.one())


def test_cyclic3_roots_of_unity():
    R = PolyRing(("a", "b", "c"))
    a, b, c = R.gens()
    I = Ideal(R, [a + b + c, a * b + b * c + c * a, a * b * c - 1])
    gb = I.groebner(Lex())
    assert is_groebner(gb.polys, Lex())
    # the elimination ideal in c alone is generated by c^3 - 1
    assert any(g == c ** 3 - 1 for g in gb.polys)


def test_buchberger_over_small_prime_field():
    R = PolyRing(("x", "y"), field=PrimeField(2))
    x, y = R.gens()
    I = Ideal(R, [x ** 2 + y, y ** 2 + x])
    gb = I.groebner(Lex())
    assert is_groebner(gb.polys, Lex())
    assert I.contains(x ** 4 + x)


def random_ideal(R, rng, ngens=3, maxexp=2, nterms=3):
    gens = []
    for _ in range(ngens):
        terms = {tuple(rng.randrange(maxexp + 1) for _ in range(R.n)):
                 rng.randrange(-3, 4) for _ in range(nterms)}
        p = R.from_terms(terms)
        if not p.is_zero():
            gens.append(p)
    return Ideal(R, gens) if gens else None


def test_every_computed_basis_passes_the_groebner_check():
    rng = random.Random(1331)
    R = PolyRing(("x", "y", "z"))
    for trial in range(15):
        I = random_ideal(R, rng)
        if I is None:
            continue
        order = Lex() if trial % 2 else DegRevLex()
        gb = I.groebner(order)
        assert is_groebner(gb.polys, order)
        for g in I.gens:
            assert gb.normal_form(g).is_zero()


def test_monomial_ideal_minimal_generators():
    R = PolyRing(("x", "y", "z"))
    M = MonomialIdeal(R, [(2, 0, 0), (2, 1, 0), (0, 1, 1), (0, 2, 1), (2, 0, 0)])
    # canonical generator order: by total degree, then exponent tuple
    assert M.gens == ((0, 1, 1), (2, 0, 0))
    assert M.contains((3, 4, 0))
    assert not M.contains((1, 1, 0))
    assert not M.is_squarefree()
    assert M.radical().gens == ((1, 0, 0), (0, 1, 1))
    assert M.radical().is_squarefree()


def test_monomial_intersection_agrees_with_membership():
    rng = random.Random(808)
    R = PolyRing(("x", "y", "z"))
    for _ in range(20):
        A = MonomialIdeal(R, [tuple(rng.randrange(3) for _ in range(3))
                              for _ in range(3)])
        B = MonomialIdeal(R, [tuple(rng.randrange(3) for _ in range(3))
                              for _ in range(3)])
        C = A.intersection(B)
        for _ in range(30):
            m = tuple(rng.randrange(5) for _ in range(3))
            assert C.contains(m) == (A.contains(m) and B.contains(m))


def brute_minimal_covers(supports):
    n = max((v for s in supports for v in s), default=0) + 1
    covers = []
    for r in range(n + 1):
        for sub in itertools.combinations(range(n), r):
            chosen = set(sub)
            if all(chosen & s for s in supports):
                if not any(c <= chosen for c in covers):
                    covers.append(chosen)
    return sorted(map(sorted, covers))


def test_minimal_primes_match_brute_force_covers():
    rng = random.Random(616)
    R = PolyRing(tuple("abcde"))
    for _ in range(15):
        gens = [tuple(1 if rng.random() < 0.4 else 0 for _ in range(5))
                for _ in range(4)]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        M = MonomialIdeal(R, gens)
        got = sorted(sorted(p) for p in M.minimal_primes())
        want = brute_minimal_covers([{i for i, e in enumerate(g) if e}
                                     for g in M.gens])
        assert got == want


def test_ideal_rejects_zero_generators(R4):
    with pytest.raises(ValueError):
        Ideal(R4, [R4.zero()])
    Z = Ideal(R4, [])
    assert Z.is_zero()
    with pytest.raises(ValueError):
        Z.initial_ideal(Lex())
