"""Command-line frontend.

Subcommands:
  mult     q-multiplicity of one highest weight (polynomial and q=1 value)
  verify   duality identity suite over a box; --oracle adds the crystal check
  measure  exact probability table for a dual pair
  sample   random diagrams (dual RSK for GL, inverse CDF otherwise)
  shape    limit density and boundary samples as CSV/JSON
  compare  sampled mean boundary vs the limit shape
  tiling   lozenge tiling of a half hexagon as JSON

Exit codes: 0 success, 1 identity violation (verify), 2 usage error.
All rationals are emitted as decimal strings; output for a fixed argv
and seed is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import rational_to_json
from .partitions import Partition, TypeDWeight, enumerate_in_box
from . import multiplicity as mult_mod
from .multiplicity import DualitySpec, verify_duality
from . import crystals
from .patterns import enumerate_gt, gt_to_lozenge, count_gt
from .ensembles import (measure_table, sample as draw_samples,
                        most_probable_diagram)
from . import limitshape
from .limitshape import (diagram_boundary, limit_f, limit_domain,
                         mean_boundary, rho, sup_distance)

_PAIR_FLAGS = {"GL": "GL", "SO-PIN": "SO_PIN", "SP": "SP", "O-SO": "O_SO"}


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# -- mult ---------------------------------------------------------------

def _parse_weight(args):
    if args.series == "D":
        return TypeDWeight.parse(args.lam or "", args.n)
    return Partition.parse(args.lam or "")


def cmd_mult(args) -> int:
    lam = _parse_weight(args)
    if args.series == "A":
        poly = mult_mod.mult_det_A_q(lam, args.n, args.k)
    elif args.series == "BC":
        poly = mult_mod.mult_det_BC_q(lam, args.n, args.k, args.p)
    else:
        poly = mult_mod.mult_det_D_q(lam, args.n, args.k, args.p)
    payload = {
        "series": args.series, "n": args.n, "k": args.k, "p": args.p,
        "lambda": str(lam), "multiplicity": poly.at_one(),
        "q_poly": poly.to_json(),
    }
    if args.q_at is not None:
        payload["q_at"] = {"q": args.q_at,
                           **rational_to_json(poly(Fraction(args.q_at)))}
    if args.format == "json":
        _emit(args, _json_dumps(payload))
    else:
        lines = [f"multiplicity at q=1: {poly.at_one()}"]
        if args.q_poly or args.q_at is None:
            lines.append(f"q-polynomial: {poly}")
        if args.q_at is not None:
            lines.append(f"value at q={args.q_at}: {poly(Fraction(args.q_at))}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


# -- verify --------------------------------------------------------------

def _oracle_check(series: str, n: int, k: int, p: int) -> list[str]:
    """Compare formula values at q=1 with crystal highest-weight counts."""
    problems = []
    if series == "A":
        counts = crystals.multiplicity_oracle("A", n, k)
        for lam in enumerate_in_box(n, k):
            want = counts.get(lam, 0)
            got = mult_mod.mult_det_A_q(lam, n, k).at_one()
            if got != want:
                problems.append(f"A {lam}: formula {got} != oracle {want}")
        return problems
    factors = 2 * k + p
    oracle_series = "B" if series == "BC" else "D"
    counts = crystals.multiplicity_oracle(oracle_series, n, factors)
    for lam in enumerate_in_box(n, k):
        if series == "BC":
            got = mult_mod.mult_det_BC_q(lam, n, k, p).at_one()
            if p == 0:
                want = counts.get(lam, 0)
            else:
                key = tuple(Fraction(2 * v + 1, 2) for v in lam.padded(n))
                want = counts.get(key, 0)
        else:
            got = mult_mod.mult_det_D_q(lam, n, k, p).at_one()
            if p == 0:
                want = counts.get(TypeDWeight.of(lam, n), 0)
            else:
                key = tuple(Fraction(2 * v + 1, 2) for v in lam.padded(n))
                want = counts.get(key, 0)
        if got != want:
            problems.append(f"{series} p={p} {lam}: formula {got} != oracle {want}")
    return problems


def cmd_verify(args) -> int:
    spec = DualitySpec(args.series, args.n, args.k, args.p)
    report = verify_duality(spec, threads=args.threads)
    lines = [f"checked {report.checked} weights in the {args.n}x{args.k} box",
             f"dimension total {report.dimension_total} "
             f"(expected {report.dimension_expected})"]
    ok = report.ok
    for v in report.violations:
        lines.append(f"VIOLATION {v.lam} [{v.stage}]: {v.lhs} != {v.rhs}")
    if args.oracle:
        problems = _oracle_check(args.series, args.n, args.k, args.p)
        lines.append(f"crystal oracle: {'ok' if not problems else 'FAILED'}")
        lines.extend(problems)
        ok = ok and not problems
    lines.append("all identities hold" if ok else "identity violations found")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# -- measure / sample ------------------------------------------------------

def cmd_measure(args) -> int:
    table = measure_table(args.pair, args.n, args.k)
    payload = table.to_json()
    payload["most_probable"] = str(most_probable_diagram(args.pair, args.n, args.k))
    _emit(args, _json_dumps(payload))
    return 0


def cmd_sample(args) -> int:
    shapes = draw_samples(args.pair, args.n, args.k, args.count, args.seed)
    lines = []
    for stream, lam in enumerate(shapes):
        lines.append(json.dumps({"partition": str(lam), "seed": args.seed,
                                 "stream": stream}))
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


# -- shape / compare ---------------------------------------------------------

def cmd_shape(args) -> int:
    series = args.series_shape
    end = limit_domain(args.c, series)
    rows = []
    for i in range(args.grid + 1):
        x = end * i / args.grid
        xt = x - (args.c + 1) / 2 if series == limitshape.GL else x
        rows.append((x, limit_f(x, args.c, series), rho(xt, args.c)))
    if args.format == "csv":
        text = "x,f,rho\n" + "\n".join(f"{x!r},{f!r},{r!r}" for x, f, r in rows) + "\n"
    else:
        text = _json_dumps({"series": series, "c": args.c,
                            "rows": [[x, f, r] for x, f, r in rows]})
    _emit(args, text)
    return 0


def cmd_compare(args) -> int:
    shapes = draw_samples(args.pair, args.n, args.k, args.count, args.seed)
    if args.pair != "GL":
        raise ValueError("compare currently supports the GL pair")
    curves = [diagram_boundary(s, args.n, "A") for s in shapes]
    c = args.c if args.c is not None else args.k / args.n
    dist = sup_distance(mean_boundary(curves), c)
    _emit(args, _json_dumps({"sup_distance": dist, "n": args.n, "k": args.k,
                             "count": args.count, "seed": args.seed, "c": c}))
    return 0


# -- tiling --------------------------------------------------------------------

def cmd_tiling(args) -> int:
    boundary = Partition.parse(args.lam or "")
    total = count_gt(boundary, args.k)
    if args.count_only:
        _emit(args, _json_dumps({"n": args.n, "k": args.k,
                                 "boundary": str(boundary), "tilings": total}))
        return 0
    pattern = None
    for idx, g in enumerate(enumerate_gt(boundary, args.k)):
        if idx == args.index:
            pattern = g
            break
    if pattern is None:
        raise ValueError(f"index {args.index} out of range (count {total})")
    tiling = gt_to_lozenge(pattern, args.n, args.k)
    payload = tiling.to_json()
    payload["tilings"] = total
    payload["gt_pattern"] = pattern.to_json()
    _emit(args, _json_dumps(payload))
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="skewhowe",
        description="Exact tensor-power multiplicities, diagram measures, "
                    "and limit shapes for the classical dual pairs.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, pair=False, series=False, box=True):
        if series:
            p.add_argument("--series", choices=("A", "BC", "D"), required=True)
            p.add_argument("--p", type=int, choices=(0, 1), default=0)
        if pair:
            p.add_argument("--pair", type=lambda s: _PAIR_FLAGS[s],
                           metavar="{GL,SO-PIN,SP,O-SO}", default="GL")
        if box:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("mult", help="q-multiplicity of one weight")
    common(p, series=True)
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--q-at", dest="q_at", default=None,
                   help="also evaluate at this rational q")
    p.add_argument("--q-poly", action="store_true",
                   help="print the polynomial in human-readable form")
    p.set_defaults(func=cmd_mult, format="text")
    p.add_argument("--json", dest="format", action="store_const", const="json")

    p = sub.add_parser("verify", help="duality identity suite over a box")
    common(p, series=True)
    p.add_argument("--oracle", action="store_true",
                   help="also compare with brute-force crystal counts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("measure", help="exact probability table")
    common(p, pair=True)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sample", help="draw random diagrams")
    common(p, pair=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("shape", help="limit shape and density samples")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--series", dest="series_shape", choices=("GL", "HALF"),
                   default="GL")
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("compare", help="sampled mean boundary vs limit shape")
    common(p, pair=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tiling", help="half-hexagon lozenge tiling")
    common(p)
    p.add_argument("--lambda", dest="lam", default="",
                   help="boundary partition of the half hexagon")
    p.add_argument("--index", type=int, default=0,
                   help="which tiling in enumeration order")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_tiling)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
