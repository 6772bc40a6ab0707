"""Bounded closure of an ideal family under sum, intersection, and colon rules."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .groebner import (Ideal, MonomialIdeal, ideal_equal, ideal_intersection,
                       ideal_quotient, ideal_sum)
from .orders import TermOrder
from .ring import Polynomial, mono_is_squarefree


class SquareFreeViolation(RuntimeError):
    """A family member whose initial ideal is not square-free."""


class DistinctnessViolation(RuntimeError):
    """Two distinct family members sharing the same initial ideal."""


@dataclass(frozen=True)
class KnutsonFamily:
    """A family compatible with f, each member tagged with the rule that built it."""

    f: Polynomial
    order: TermOrder
    members: Tuple[Ideal, ...]
    initials: Tuple[MonomialIdeal, ...]
    provenance: Tuple[str, ...]
    budget_exhausted: bool

    def __len__(self) -> int:
        return len(self.members)

    def summary_lines(self) -> List[str]:
        out = []
        for k, (init, how) in enumerate(zip(self.initials, self.provenance)):
            inside = ", ".join(init.to_strings()) or "1"
            out.append(f"[{k}] {how}: in = ({inside})")
        if self.budget_exhausted:
            out.append("budget exhausted; family may be incomplete")
        return out


def _lifted_prime(ring, variables) -> Ideal:
    return Ideal(ring, [ring.var(v) for v in sorted(variables)])


def knutson_closure(f: Polynomial, order: TermOrder, seeds: Sequence[Ideal],
                    budget: int = 24, divisors: Sequence[Ideal] = ()) -> KnutsonFamily:
    """Close seed ideals under pairwise sum, intersection, and designated colons.

    Every member must keep a square-free initial ideal and a distinct one;
    either failure raises, since it would contradict membership in the family.
    The colon rule is applied against `divisors` and against each minimal
    prime of each member's initial ideal, lifted to the polynomial ring by
    its variables.  At most `budget` members beyond the seeds are admitted;
    hitting the cap sets `budget_exhausted`, meaning the family may be partial.
    """
    ring = f.ring
    if f.is_zero():
        raise ValueError("the defining polynomial must be nonzero")
    if not mono_is_squarefree(f.leading_monomial(order)):
        raise SquareFreeViolation(
            f"in(f) = {ring.monomial(f.leading_monomial(order)).to_string()} is not square-free")

    members: List[Ideal] = []
    initials: List[MonomialIdeal] = []
    provenance: List[str] = []
    state = {"new": 0, "exhausted": False}

    def admit(candidate: Ideal, how: str, charged: bool) -> None:
        if candidate.is_zero():
            return
        if charged and state["new"] >= budget:
            state["exhausted"] = True
            return
        init = candidate.initial_ideal(order)
        for k, seen in enumerate(initials):
            if seen == init:
                if not ideal_equal(candidate, members[k]):
                    raise DistinctnessViolation(
                        f"{how} and {provenance[k]} share in = ({', '.join(init.to_strings())}) "
                        "yet differ as ideals")
                return
        if not init.is_squarefree():
            raise SquareFreeViolation(
                f"{how}: initial ideal ({', '.join(init.to_strings())}) is not square-free")
        members.append(candidate)
        initials.append(init)
        provenance.append(how)
        if charged:
            state["new"] += 1

    for k, seed in enumerate(seeds):
        admit(seed, f"seed[{k}]", charged=False)

    while not state["exhausted"]:
        size = len(members)
        for i in range(size):
            for j in range(i + 1, size):
                admit(ideal_sum(members[i], members[j]), f"sum({i},{j})", charged=True)
                admit(ideal_intersection(members[i], members[j]),
                      f"intersection({i},{j})", charged=True)
        for i in range(size):
            for k, d in enumerate(divisors):
                admit(ideal_quotient(members[i], d), f"colon({i}, divisor[{k}])", charged=True)
            for prime in initials[i].minimal_primes():
                names = ", ".join(ring.names[v] for v in sorted(prime))
                admit(ideal_quotient(members[i], _lifted_prime(ring, prime)),
                      f"colon({i}, prime <{names}>)", charged=True)
        if len(members) == size:
            break

    return KnutsonFamily(f, order, tuple(members), tuple(initials),
                         tuple(provenance), state["exhausted"])
