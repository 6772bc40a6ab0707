"""Plain-text input formats: ideal files with a ring header, and facet lists."""

import re
from typing import List, Optional, Tuple

from .field import QQ, field_from_name, field_name
from .groebner import Ideal
from .orders import DegRevLex, TermOrder, order_from_spec, order_spec, validate_order
from .ring import ParseError, PolyRing
from .simplicial import SimplicialComplex

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Header directives come first in any relative order, generators after:
#   ring x1 x2 x3 x4        required
#   field Q | F<p>          optional, default Q
#   weights w1 w2 ... wn    optional positive ints, default all 1
#   order lex | degrevlex | weight:a,b,...   optional, default degrevlex
#   <polynomial>            one generator per line
# '#' starts a comment; blank lines are ignored.


def _directive(stripped: str) -> Optional[Tuple[str, str, int]]:
    head, _, rest = stripped.partition(" ")
    if head in ("ring", "field", "weights", "order"):
        return head, rest.strip(), len(head) + 2
    return None


def parse_ideal_text(text: str) -> Tuple[Ideal, TermOrder]:
    """Parse ideal-file content; raises ParseError with line and column."""
    header = {}
    ring: Optional[PolyRing] = None
    gens = []

    def build_ring(lineno: int) -> PolyRing:
        if "ring" not in header:
            raise ParseError("expected a ring header before any generator", lineno, 1)
        _, restcol, rest = header["ring"]
        names = rest.split()
        if not names:
            raise ParseError("ring header lists no variables", header["ring"][0], restcol)
        for k, nm in enumerate(names):
            if not _NAME_RE.match(nm):
                raise ParseError(f"bad variable name {nm!r}", header["ring"][0], restcol)
            if nm in names[:k]:
                raise ParseError(f"repeated variable {nm!r}", header["ring"][0], restcol)
        field = QQ
        if "field" in header:
            fl, fcol, frest = header["field"]
            try:
                field = field_from_name(frest)
            except ValueError as exc:
                raise ParseError(str(exc), fl, fcol)
        weights = None
        if "weights" in header:
            wl, wcol, wrest = header["weights"]
            try:
                weights = tuple(int(w) for w in wrest.split())
            except ValueError:
                raise ParseError(f"weights must be integers, got {wrest!r}", wl, wcol)
            if not weights or any(w <= 0 for w in weights):
                raise ParseError("weights must be positive integers", wl, wcol)
            if len(weights) != len(names):
                raise ParseError(f"{len(weights)} weights for {len(names)} variables",
                                 wl, wcol)
        return PolyRing(tuple(names), field, weights)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        col = body.index(stripped[0]) + 1
        d = _directive(stripped)
        if d:
            kind, rest, restcol = d
            if ring is not None:
                raise ParseError(f"{kind} directive must precede the generators",
                                 lineno, col)
            if kind in header:
                raise ParseError(f"duplicate {kind} directive", lineno, col)
            header[kind] = (lineno, restcol, rest)
            continue
        if ring is None:
            ring = build_ring(lineno)
        poly = ring.from_string(stripped, line=lineno)
        if poly.is_zero():
            raise ParseError("zero generator", lineno, col)
        gens.append(poly)
    if ring is None:
        ring = build_ring(len(text.splitlines()) + 1)
    if not gens:
        raise ParseError("file lists no generators", 1, 1)
    if "order" in header:
        ol, ocol, orest = header["order"]
        try:
            order: TermOrder = order_from_spec(orest, ring.n)
        except ValueError as exc:
            raise ParseError(str(exc), ol, ocol)
    else:
        order = DegRevLex()
    validate_order(order, ring.n)
    return Ideal(ring, gens), order


def parse_ideal_file(path: str) -> Tuple[Ideal, TermOrder]:
    """Read and parse one ideal file from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())


def format_ideal_file(I: Ideal, order: Optional[TermOrder] = None) -> str:
    """Serialize an ideal (and order) so parse_ideal_text round-trips it."""
    ring = I.ring
    lines = ["ring " + " ".join(ring.names)]
    if ring.field != QQ:
        lines.append("field " + field_name(ring.field))
    if not ring.is_standard_graded():
        lines.append("weights " + " ".join(str(w) for w in ring.grading))
    if order is not None:
        lines.append("order " + order_spec(order))
    lines.extend(g.to_string() for g in I.gens)
    return "\n".join(lines) + "\n"


def parse_complex_text(text: str) -> SimplicialComplex:
    """Parse a facet list, one facet per line, vertices as integers."""
    facets: List[Tuple[int, ...]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        col = body.index(stripped[0]) + 1
        verts = []
        for tok in stripped.split():
            if not tok.lstrip("-").isdigit():
                raise ParseError(f"vertex {tok!r} is not an integer", lineno, col)
            v = int(tok)
            if v < 0:
                raise ParseError(f"negative vertex {v}", lineno, col)
            verts.append(v)
        if len(set(verts)) != len(verts):
            raise ParseError("repeated vertex in facet", lineno, col)
        facets.append(tuple(sorted(verts)))
        top = max(top, max(verts))
    if not facets:
        raise ParseError("file lists no facets", 1, 1)
    return SimplicialComplex(top + 1, facets)


def parse_complex_file(path: str) -> SimplicialComplex:
    """Read and parse one facet-list file from disk."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex_text(fh.read())
