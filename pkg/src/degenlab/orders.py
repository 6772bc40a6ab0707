"""Term orders on monomials.

A monomial is a tuple of non-negative integer exponents, one per ring
variable.  Every order here is a multiplicative total order with 1 as the
smallest monomial.  Orders are compared through *key functions*: for each
order and ring size we build a callable mapping a monomial to a tuple of
ints such that monomial comparison is tuple comparison.  Each key component
is linear in the exponents, which makes multiplicativity automatic.

By default each kind refines the variable priority x1 > x2 > ... > xn; an
explicit priority permutation can be supplied instead.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple, Union

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class Lex:
    """Lexicographic order."""

    perm: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class DegRevLex:
    """Degree reverse lexicographic order (ties broken by plain total degree)."""

    perm: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class WeightOrder:
    """Compare by a non-negative weight vector first, then by a tiebreak order."""

    weights: Tuple[int, ...]
    tiebreak: "TermOrder" = field(default_factory=DegRevLex)


@dataclass(frozen=True)
class BlockOrder:
    """Elimination order: compare the `first_vars` block, then the rest.

    `first_vars` lists global variable indices; the complement keeps its
    ascending index order.  Monomials involving only non-block variables are
    smaller than any monomial touching the block, so a Groebner basis under
    this order eliminates the block.
    """

    first_vars: Tuple[int, ...]
    first: "TermOrder" = field(default_factory=DegRevLex)
    rest: "TermOrder" = field(default_factory=DegRevLex)


TermOrder = Union[Lex, DegRevLex, WeightOrder, BlockOrder]


def _check_perm(perm: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    if perm is None:
        return tuple(range(n))
    if sorted(perm) != list(range(n)):
        raise ValueError(f"priority permutation {perm} is not a permutation of 0..{n - 1}")
    return tuple(perm)


def validate_order(order: TermOrder, n: int) -> None:
    """Raise ValueError when the order cannot act on an n-variable ring."""
    if isinstance(order, (Lex, DegRevLex)):
        _check_perm(order.perm, n)
    elif isinstance(order, WeightOrder):
        if len(order.weights) != n:
            raise ValueError(f"weight vector has length {len(order.weights)}, ring has {n} variables")
        if any(w < 0 for w in order.weights):
            raise ValueError("weight vector entries must be non-negative")
        validate_order(order.tiebreak, n)
    elif isinstance(order, BlockOrder):
        block = list(order.first_vars)
        if len(set(block)) != len(block) or any(v < 0 or v >= n for v in block):
            raise ValueError(f"bad elimination block {order.first_vars} for {n} variables")
        rest = [v for v in range(n) if v not in set(block)]
        validate_order(order.first, len(block))
        validate_order(order.rest, len(rest))
    else:
        raise TypeError(f"not a term order: {order!r}")


def key_function(order: TermOrder, n: int) -> Callable[[Monomial], Tuple[int, ...]]:
    """Build the monomial -> sort-key callable for `order` on n variables."""
    validate_order(order, n)
    if isinstance(order, Lex):
        perm = _check_perm(order.perm, n)
        return lambda a: tuple(a[p] for p in perm)
    if isinstance(order, DegRevLex):
        perm = _check_perm(order.perm, n)
        scan = perm[::-1]
        return lambda a: (sum(a),) + tuple(-a[p] for p in scan)
    if isinstance(order, WeightOrder):
        w = order.weights
        tie = key_function(order.tiebreak, n)
        nz = tuple(i for i in range(n) if w[i])
        return lambda a: (sum(w[i] * a[i] for i in nz),) + tie(a)
    if isinstance(order, BlockOrder):
        block = tuple(order.first_vars)
        rest = tuple(v for v in range(n) if v not in set(block))
        kf = key_function(order.first, len(block))
        kr = key_function(order.rest, len(rest))
        return lambda a: kf(tuple(a[v] for v in block)) + kr(tuple(a[v] for v in rest))
    raise TypeError(f"not a term order: {order!r}")


cached_key = functools.lru_cache(maxsize=None)(key_function)


def cmp_monomials(order: TermOrder, n: int, a: Monomial, b: Monomial) -> int:
    """Return -1, 0, or 1 as a <, =, > b under the order."""
    key = cached_key(order, n)
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


def elimination_order(n: int, elim_vars) -> BlockOrder:
    """Block order whose Groebner bases eliminate the given variable indices."""
    return BlockOrder(first_vars=tuple(sorted(elim_vars)))


def order_from_spec(spec: str, n: int) -> TermOrder:
    """Parse a CLI order label: lex | degrevlex | weight:w1,...,wn."""
    spec = spec.strip().lower()
    if spec == "lex":
        return Lex()
    if spec in ("degrevlex", "revlex"):
        return DegRevLex()
    if spec.startswith("weight:"):
        try:
            weights = tuple(int(s) for s in spec[len("weight:"):].split(","))
        except ValueError as exc:
            raise ValueError(f"bad weight list in order spec {spec!r}") from exc
        order = WeightOrder(weights)
        validate_order(order, n)
        return order
    raise ValueError(f"unknown order spec {spec!r}")


def order_spec(order: TermOrder) -> str:
    """Short printable label for an order."""
    if isinstance(order, Lex):
        return "lex"
    if isinstance(order, DegRevLex):
        return "degrevlex"
    if isinstance(order, WeightOrder):
        return "weight:" + ",".join(str(w) for w in order.weights)
    if isinstance(order, BlockOrder):
        return f"block({','.join(str(v) for v in order.first_vars)})"
    return repr(order)
