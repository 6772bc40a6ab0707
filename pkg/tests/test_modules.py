"""Module Groebner bases and syzygies over the free modules."""

import random

import pytest

from degenlab.groebner import Ideal
from degenlab.modules import (FreeModule, VecPoly, module_buchberger,
                              syzygy_module, top_key, vec_normal_form)
from degenlab.orders import DegRevLex, Lex
from degenlab.ring import PolyRing


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"))


def rows_from_polys(R, polys):
    F = FreeModule(R, (0,))
    return [F.from_polys([p]) for p in polys], F


def test_syzygies_annihilate_their_generators(R):
    x, y, z = R.gens()
    polys = [x * y - z ** 2, y ** 2 - x * z, x ** 2 - y * z]
    rows, F = rows_from_polys(R, polys)
    syz = syzygy_module(rows, DegRevLex())
    assert syz, "three related generators must have syzygies"
    for s in syz:
        total = R.zero()
        for i, p in enumerate(polys):
            total = total + s.component(i) * p
        assert total.is_zero()


def test_koszul_relations_are_found(R):
    x, y, z = R.gens()
    polys = [x, y]
    rows, _ = rows_from_polys(R, polys)
    syz = syzygy_module(rows, DegRevLex())
    # the only syzygy between two coprime monomials is the Koszul one
    assert len(syz) == 1
    s = syz[0]
    assert s.component(0) * x + s.component(1) * y == R.zero()
    comps = {s.component(0).to_string(), s.component(1).to_string()}
    assert comps == {"y", "-x"} or comps == {"-y", "x"}


def test_module_buchberger_normal_form_detects_membership(R):
    x, y, z = R.gens()
    F = FreeModule(R, (0, 1))
    a = F.from_polys([x, y])
    b = F.from_polys([z, x])
    key = top_key(DegRevLex(), R)
    gb, _ = module_buchberger([a, b], key, track=False)
    probe = a.times_poly(y * z - 1) + b.times_poly(x ** 2)
    assert vec_normal_form(probe, gb, key).is_zero()
    outside = F.basis_vector(0)
    assert not vec_normal_form(outside, gb, key).is_zero()


def test_syzygies_of_random_monomial_rows(R):
    rng = random.Random(3131)
    key = top_key(DegRevLex(), R)
    for _ in range(10):
        monos = [tuple(rng.randrange(3) for _ in range(3)) for _ in range(3)]
        polys = [R.monomial(m) for m in monos]
        rows, _ = rows_from_polys(R, polys)
        syz = syzygy_module(rows, DegRevLex())
        for s in syz:
            total = R.zero()
            for i, p in enumerate(polys):
                total = total + s.component(i) * p
            assert total.is_zero()
        # every pairwise lcm relation reduces to zero against the syzygy basis
        sgb, _ = module_buchberger(syz, key, track=False)
        target = syz[0].module
        for i in range(3):
            for j in range(i + 1, 3):
                lcm = tuple(max(a, b) for a, b in zip(monos[i], monos[j]))
                rel = VecPoly(target, {
                    (tuple(a - b for a, b in zip(lcm, monos[i])), i): R.field.one,
                    (tuple(a - b for a, b in zip(lcm, monos[j])), j): R.field(-1)})
                assert vec_normal_form(rel, sgb, key).is_zero()
