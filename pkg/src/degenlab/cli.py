"""Command-line front end: Groebner bases, degenerations, and the example suite."""

import argparse
import json
import sys
from typing import List, Optional, Tuple

from .cohomology import local_cohomology_table
from .degeneration import generic_initial_ideal
from .field import field_from_name
from .groebner import Ideal, MonomialIdeal
from .ideal_files import parse_complex_text, parse_ideal_file, parse_ideal_text
from .knutson import knutson_closure
from .monomial import cech_table
from .orders import TermOrder, order_from_spec
from .resolution import betti_numbers, betti_table_string, betti_via_koszul
from .ring import ParseError, PolyRing
from .simplicial import SimplicialComplex, dual_graph, sr_complex, sr_ideal
from .verify import (emit_report, reports_exit_code, run_paper_suite,
                     suite_fixture_names, verify_degeneration)

USAGE_ERROR = 2


def _load_ideal(path: str, order_flag: Optional[str]) -> Tuple[Ideal, TermOrder]:
    I, order = parse_ideal_file(path)
    if order_flag:
        order = order_from_spec(order_flag, I.ring.n)
    return I, order


def _parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like a..b, got {text!r}")
    return int(lo), int(hi)


def _cmd_gb(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    gb = I.groebner(order)
    for g in gb.polys:
        print(g.to_string())
    return 0


def _cmd_initial(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    ini = I.initial_ideal(order)
    for s in ini.to_strings():
        print(s)
    return 0


def _cmd_gin(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    g = generic_initial_ideal(I, order, seed=args.seed, trials=args.trials)
    for s in g.to_strings():
        print(s)
    return 0


def _cmd_betti(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    betti = betti_numbers(I, order)
    if args.oracle == "koszul":
        if args.window:
            lo, hi = _parse_range(args.window)
            oracle = betti_via_koszul(I, order, max_j=hi)
            mine = {k: v for k, v in betti.items() if lo <= k[1] <= hi}
            oracle = {k: v for k, v in oracle.items() if lo <= k[1] <= hi}
        else:
            oracle = betti_via_koszul(I, order)
            mine = betti
        if mine != oracle:
            print("FAIL: Koszul strand ranks disagree with the resolution", file=sys.stderr)
            print(f"resolution: {sorted(mine.items())}", file=sys.stderr)
            print(f"koszul:     {sorted(oracle.items())}", file=sys.stderr)
            return 1
        print("oracle agreement: Koszul strand ranks match the resolution")
    if args.json:
        doc = {f"{i},{j}": v for (i, j), v in sorted(betti.items())}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(betti_table_string(betti))
    return 0


def _cmd_lc_table(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    jlo = jhi = None
    if args.range:
        jlo, jhi = _parse_range(args.range)
    table = local_cohomology_table(I, order, jlo, jhi)
    if args.json:
        doc = {f"{i},{j}": v for (i, j), v in sorted(table.items())}
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    if not table:
        print("(no nonzero h^{ij} on the window)")
        return 0
    rows = sorted({i for i, _ in table})
    cols = sorted({j for _, j in table})
    width = max(max(len(str(v)) for v in table.values()),
                *(len(str(j)) for j in cols))
    print("i\\j " + " ".join(f"{j:>{width}}" for j in cols))
    for i in rows:
        print(f"{i:>3} " + " ".join(f"{table.get((i, j), 0) or '.':>{width}}"
                                    for j in cols))
    return 0


def _cmd_verify_degen(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    rep = verify_degeneration(I, order, name=args.file)
    out = emit_report([rep], "json" if args.json else "text")
    sys.stdout.write(out)
    return reports_exit_code([rep])


def _cmd_paper_suite(args) -> int:
    names = args.fixtures or None
    if names:
        known = set(suite_fixture_names())
        bad = [n for n in names if n not in known]
        if bad:
            print(f"unknown fixtures: {', '.join(bad)}", file=sys.stderr)
            return USAGE_ERROR
    field = field_from_name(args.field) if args.field else None
    reps = run_paper_suite(names, timeout_min=args.timeout_min,
                           jobs=args.jobs, field=field)
    sys.stdout.write(emit_report(reps, "json" if args.json else "text"))
    return reports_exit_code(reps)


def _cmd_knutson(args) -> int:
    I, order = _load_ideal(args.file, args.order)
    if len(I.gens) != 1:
        print("knutson takes a principal ideal file; the single generator is f",
              file=sys.stderr)
        return USAGE_ERROR
    f = I.gens[0]
    divisors = []
    for text in args.divisor or ():
        divisors.append(I.ring.from_string(text))
    fam = knutson_closure(f, order, [I], budget=args.budget, divisors=divisors)
    for line in fam.summary_lines():
        print(line)
    return 0


def _sniff(path: str, order_flag: Optional[str]):
    """An ideal file when a ring header is present, a facet list otherwise."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.split()[0] in ("ring", "field", "weights", "order"):
            I, order = parse_ideal_text(text)
            if order_flag:
                order = order_from_spec(order_flag, I.ring.n)
            return I, order
        break
    return parse_complex_text(text)


def _to_squarefree(parsed) -> MonomialIdeal:
    I, order = parsed
    M = I.initial_ideal(order)
    if not M.is_squarefree():
        M = M.radical()
    return M


def _cmd_sr(args) -> int:
    parsed = _sniff(args.file, args.order)
    if isinstance(parsed, SimplicialComplex):
        names = tuple("x" + str(v) for v in range(parsed.n))
        M = sr_ideal(parsed, PolyRing(names))
        print(f"ring {' '.join(names)}")
        for s in M.to_strings():
            print(s)
        return 0
    K = sr_complex(_to_squarefree(parsed))
    print(f"# complex on {K.n} vertices, f-vector {K.f_vector()}")
    for f in K.facets:
        print(" ".join(str(v) for v in sorted(f)))
    return 0


def _cmd_hirsch(args) -> int:
    parsed = _sniff(args.file, args.order)
    if isinstance(parsed, SimplicialComplex):
        primes = [frozenset(range(parsed.n)) - f for f in parsed.facets]
        g = dual_graph(primes)
    else:
        g = dual_graph(_to_squarefree(parsed))
    d = g.diameter()
    print(f"nodes {len(g.primes)}, edges {list(g.edges)}")
    print(f"diameter {'infinite' if d is None else d}, height {g.height}")
    verdict = g.is_hirsch()
    print("hirsch " + ("PASS" if verdict else "FAIL"))
    return 0 if verdict else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="degenlab",
        description="Exact Groebner degenerations and local cohomology checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", help="ideal file")
        p.add_argument("--order", help="lex | degrevlex | weight:w1,...,wn "
                       "(overrides the file's order directive)")
        return p

    with_file(sub.add_parser("gb", help="reduced Groebner basis")
              ).set_defaults(func=_cmd_gb)
    with_file(sub.add_parser("initial", help="initial ideal generators")
              ).set_defaults(func=_cmd_initial)
    p = with_file(sub.add_parser("gin", help="generic initial ideal"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=_cmd_gin)
    p = with_file(sub.add_parser("betti", help="graded Betti table of S/I"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", choices=["koszul"],
                   help="cross-check the table against Koszul strand ranks")
    p.add_argument("--window", help="degree window a..b for the oracle")
    p.set_defaults(func=_cmd_betti)
    p = with_file(sub.add_parser("lc-table", help="graded local cohomology table"))
    p.add_argument("--range", help="degree window a..b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lc_table)
    p = with_file(sub.add_parser("verify-degen",
                                 help="initial-degeneration verification report"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_degen)
    p = sub.add_parser("paper-suite", help="run the bundled example fixtures")
    p.add_argument("--fixtures", nargs="*", metavar="NAME",
                   help=f"subset of: {', '.join(suite_fixture_names())}")
    p.add_argument("--field", help="Q or F<p>; fixtures are re-read over this field")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timeout-min", type=float, default=30.0)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_paper_suite)
    p = with_file(sub.add_parser("knutson",
                                 help="closure family of a principal ideal (f)"))
    p.add_argument("--budget", type=int, default=24)
    p.add_argument("--divisor", action="append", metavar="POLY",
                   help="extra colon divisor, repeatable")
    p.set_defaults(func=_cmd_knutson)
    p = sub.add_parser("sr", help="Stanley-Reisner translation, either direction")
    p.add_argument("file", help="ideal file or facet-list file")
    p.add_argument("--order", help="order override for ideal files")
    p.set_defaults(func=_cmd_sr)
    p = sub.add_parser("hirsch", help="dual graph diameter against the height bound")
    p.add_argument("file", help="ideal file or facet-list file")
    p.add_argument("--order", help="order override for ideal files")
    p.set_defaults(func=_cmd_hirsch)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
