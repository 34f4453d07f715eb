"""Command-line front end.

Subcommands: count, walks, map, intervals, triangle, check, fit, render.
Output is deterministic byte for byte for a fixed command line; sequences
stream as JSON Lines or CSV with a header row.  Exit codes: 2 for a
configuration error, 1 for an internal failure, 0 otherwise.  Check suites
exit 0 even when a conjecture verdict is "fails" (verdicts live in the
report, never in the exit status).

``--threads`` (default from HOOKCOMB_THREADS) is accepted for sweep
commands; every computation is deterministic and independent of the
worker count, so any value produces identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .experiments import (
    asymptotic_fit,
    check_conjectures,
    check_eq2,
    check_tamari_image,
    triangle,
    vhc_count_exhaustive,
)
from .maps import (
    ll_inverse_lookup,
    ll_map,
    phi,
    phi_inverse,
    swl,
    swr,
    w_map,
    w_map_left_inverse,
)
from .motzkin import Interval, MotzkinPath, enumerate_intervals
from .perm import PATTERN_312, Permutation
from .render import render_path, render_vhc
from .vhc import Vhc, validate
from .walks import count_walks, vhc312_count

_COMPACT = {"separators": (",", ":")}


def _jdump(obj) -> str:
    return json.dumps(obj, **_COMPACT)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    elif ":" in text:
        lo, hi = text.split(":", 1)
    else:
        lo = hi = text
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ValueError(f"empty range {text!r}")
    return lo_i, hi_i


def _parse_ne(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(part) for part in text.split(","))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookcomb",
        description="Hook configurations, Motzkin orders, and walk counts.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("HOOKCOMB_THREADS", "1")),
        help="worker hint; output is identical for every value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="hook-configuration counts by size")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", required=True, help="size or range, e.g. 4 or 1..9")
    p.add_argument("--method", choices=("auto", "enumerate", "formula"),
                   default="auto")
    p.add_argument("--output", choices=("json", "csv"), default="json")

    p = sub.add_parser("walks", help="closed quarter-plane walk counts")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--output", choices=("json", "csv"), default="csv")

    p = sub.add_parser("map", help="apply one of the structural maps")
    p.add_argument("--name", required=True,
                   choices=("ll", "llinv", "swl", "swr", "w", "winv",
                            "phi", "phiinv"))
    p.add_argument("--perm")
    p.add_argument("--ne")
    p.add_argument("--lower")
    p.add_argument("--upper")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--n", type=int)
    p.add_argument("--audit", action="store_true",
                   help="wrap the result with its input as a JSON audit line")

    p = sub.add_parser("intervals", help="enumerate order intervals")
    p.add_argument("--order", required=True, choices=("S", "C", "T"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", choices=("json", "csv"), default="json")

    p = sub.add_parser("triangle", help="reduced-configuration triangle rows")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--output", choices=("json", "csv"), default="json")

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("conjectures", "tamari", "eq2"))
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=None)

    p = sub.add_parser("fit", help="growth fit of the exact counts")
    p.add_argument("--window", default="200:400", help="n range, e.g. 200:400")

    p = sub.add_parser("render", help="write an SVG figure")
    p.add_argument("--vhc", help='configuration JSON, e.g. {"perm":"213","ne":[3]}')
    p.add_argument("--path", help="Motzkin path string, e.g. UDEUEUDD")
    p.add_argument("--out", required=True)
    return parser


def _cmd_count(args) -> int:
    lo, hi = _parse_range(args.n)
    pattern = Permutation.from_text(args.pattern)
    use_formula = args.method == "formula" or (
        args.method == "auto" and pattern == PATTERN_312
    )
    table = count_walks(max(hi - 1, 0)) if use_formula else None
    rows = []
    for n in range(lo, hi + 1):
        if use_formula:
            value = vhc312_count(n, table)
        else:
            value = vhc_count_exhaustive(n, pattern.entries)
        rows.append((n, value))
    if args.output == "csv":
        sys.stdout.write("n,count\n")
        for n, value in rows:
            sys.stdout.write(f"{n},{value}\n")
    elif lo == hi:
        sys.stdout.write(f"{rows[0][1]}\n")
    else:
        for n, value in rows:
            sys.stdout.write(
                _jdump({"pattern": str(pattern), "n": n, "count": str(value)}) + "\n"
            )
    return 0


def _cmd_walks(args) -> int:
    table = count_walks(args.kmax)
    if args.output == "csv":
        sys.stdout.write(table.to_csv())
    else:
        sys.stdout.write(table.to_json() + "\n")
    return 0


def _need(args, *names) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(
            f"map --name {args.name} needs --{', --'.join(missing)}"
        )


def _cmd_map(args) -> int:
    name = args.name
    audit_input: dict
    if name in ("ll", "w", "winv"):
        _need(args, "perm", "ne")
        pi = Permutation.from_text(args.perm)
        ne = _parse_ne(args.ne)
        v = validate(pi, ne)
        if v is None:
            raise ValueError(f"({args.perm}, {sorted(ne)}) is not a valid "
                             f"hook configuration")
        audit_input = {"perm": str(pi), "ne": sorted(ne)}
        if name == "ll":
            interval = ll_map(v)
            result = {"lower": str(interval.lower), "upper": str(interval.upper),
                      "order": "C"}
        elif name == "w":
            out = w_map(v)
            result = {"perm": str(out.pi), "ne": sorted(out.ne_set)}
        else:
            pulled = w_map_left_inverse(v)
            result = {"perm": str(pulled.perm),
                      "ne": sorted(pulled.ne_indices),
                      "valid": pulled.valid}
    elif name in ("swl", "swr"):
        _need(args, "perm")
        pi = Permutation.from_text(args.perm)
        audit_input = {"perm": str(pi)}
        image = swl(pi) if name == "swl" else swr(pi)
        result = {"perm": str(image)}
    elif name == "phi":
        _need(args, "lower", "upper")
        interval = Interval(MotzkinPath(args.lower), MotzkinPath(args.upper), "C")
        audit_input = {"lower": args.lower, "upper": args.upper}
        x, y = phi(interval)
        result = {"x": str(x), "y": str(y)}
    elif name == "phiinv":
        _need(args, "x", "y")
        audit_input = {"x": args.x, "y": args.y}
        interval = phi_inverse(MotzkinPath(args.x), MotzkinPath(args.y))
        result = {"lower": str(interval.lower), "upper": str(interval.upper),
                  "order": "C"}
    else:  # llinv
        _need(args, "lower", "upper", "n")
        interval = Interval(MotzkinPath(args.lower), MotzkinPath(args.upper), "C")
        audit_input = {"lower": args.lower, "upper": args.upper, "n": args.n}
        v = ll_inverse_lookup(interval, args.n)
        result = (
            {"perm": str(v.pi), "ne": sorted(v.ne_set)} if v is not None else None
        )
    if args.audit:
        sys.stdout.write(
            _jdump({"input": audit_input, "output": result, "map": name}) + "\n"
        )
    else:
        sys.stdout.write(_jdump(result) + "\n")
    return 0


def _cmd_intervals(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    stream = enumerate_intervals(args.order, args.n)
    if args.count_only:
        sys.stdout.write(f"{sum(1 for _ in stream)}\n")
        return 0
    if args.output == "csv":
        sys.stdout.write("lower,upper,order\n")
        for iv in stream:
            sys.stdout.write(f"{iv.lower},{iv.upper},{iv.order}\n")
    else:
        for iv in stream:
            sys.stdout.write(iv.to_json() + "\n")
    return 0


def _cmd_triangle(args) -> int:
    rows = triangle(args.kmax)
    if args.output == "csv":
        sys.stdout.write("k,i,n,value\n")
        for row in rows:
            for i, value in enumerate(row.entries, start=1):
                sys.stdout.write(f"{row.k},{i},{2 * row.k + i},{value}\n")
    else:
        for row in rows:
            sys.stdout.write(
                _jdump({"k": row.k, "entries": [str(e) for e in row.entries]})
                + "\n"
            )
    return 0


def _cmd_check(args) -> int:
    if args.suite == "conjectures":
        nmax = 9 if args.nmax is None else args.nmax
        report = check_conjectures(k_max=args.kmax, bruhat_n_max=nmax)
    elif args.suite == "tamari":
        nmax = 6 if args.nmax is None else args.nmax
        report = check_tamari_image(n_max=nmax)
    else:
        nmax = 9 if args.nmax is None else args.nmax
        report = check_eq2(n_max=nmax, rows=triangle(args.kmax))
    for entry in report:
        sys.stdout.write(_jdump(entry) + "\n")
    return 0


def _cmd_fit(args) -> int:
    lo, hi = _parse_range(args.window)
    fit = asymptotic_fit(lo, hi)
    sys.stdout.write(
        _jdump(
            {
                "growth": fit.growth_hat,
                "alpha": fit.alpha_hat,
                "window": list(fit.window),
                "residual": fit.residual,
            }
        )
        + "\n"
    )
    return 0


def _cmd_render(args) -> int:
    if (args.vhc is None) == (args.path is None):
        raise ValueError("render needs exactly one of --vhc or --path")
    if args.vhc is not None:
        document = render_vhc(Vhc.from_json(args.vhc))
    else:
        document = render_path(MotzkinPath(args.path))
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(document)
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "walks": _cmd_walks,
    "map": _cmd_map,
    "intervals": _cmd_intervals,
    "triangle": _cmd_triangle,
    "check": _cmd_check,
    "fit": _cmd_fit,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"hookcomb: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"hookcomb: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
