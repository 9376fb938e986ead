"""Command-line front end: ``boys {eval,table,fresnel,bench,selftest}``.

Exit codes: 0 success, 1 selftest failure, 2 usage error, 3 domain or range
error (bad table, empty range, unsupported n_max).
"""
from __future__ import annotations

import argparse
import cmath
import csv
import json
import math
import os
import random
import statistics
import sys
import time

from .constants import TABLE_PATH_ENV, load_expsum_table
from .errors import BoysError, DomainError, TableError
from .f0 import f0_eval, fresnel
from .fntop import DEFAULT_TABLE
from .real import boys_all_real
from .recursion import boys_all

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

CSV_HEADER = ("z_re", "z_im", "scaled", "n", "f_re", "f_im")

# reference figures quoted for the original Fortran code (2.3 GHz laptop)
REFERENCE_F0_RATIO = 12.0
REFERENCE_REAL_VECTOR_SECONDS = 0.34e-7
RATIO_WARN = 60.0


def _fmt(x: float) -> str:
    return f"{x:.16g}"


def _fmt_complex(v: complex) -> str:
    return f"{_fmt(v.real)} {'-' if v.imag < 0 else '+'} {_fmt(abs(v.imag))}i"


def parse_range(text: str) -> list[float]:
    """``A:B:STEP`` -> [A, A+STEP, ..., B] (inclusive); empty if B < A."""
    try:
        a, b, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like A:B:STEP, got {text!r}") from None
    if not step > 0 or b < a:
        return []
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [a + k * step for k in range(count)]


def _resolve_table(args, n_max: int):
    path = getattr(args, "table", None) or os.environ.get(TABLE_PATH_ENV)
    table = load_expsum_table(path) if path else DEFAULT_TABLE
    if n_max > table.n_max:
        raise TableError(f"no approximation table for n_max={n_max}; supply one with --table")
    if n_max < 0:
        raise DomainError("--nmax must be non-negative")
    return table


def _rows(z: complex, vec):
    flag = "true" if vec.scaled else "false"
    for n, v in enumerate(vec):
        yield (repr(z.real), repr(z.imag), flag, str(n), repr(v.real), repr(v.imag))


def cmd_eval(args, out) -> int:
    table = _resolve_table(args, args.nmax)
    z = complex(args.re, args.im)
    vec = boys_all(z, args.nmax, table)
    if args.format == "json":
        obj = {"z": {"re": z.real, "im": z.imag}, "scaled": vec.scaled,
               "values": [{"n": n, "re": v.real, "im": v.imag} for n, v in enumerate(vec)]}
        out.write(json.dumps(obj) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerows(_rows(z, vec))
    else:
        out.write(f"z = {_fmt_complex(z)}\n")
        if vec.scaled:
            out.write("scaled=true (values are exp(z) * F(n, z))\n")
        else:
            out.write("scaled=false\n")
        for n, v in enumerate(vec):
            out.write(f"n={n}: {_fmt_complex(v)}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    table = _resolve_table(args, args.nmax)
    res, ims = parse_range(args.re_range), parse_range(args.im_range)
    if not res or not ims:
        raise DomainError("empty range")
    fh = open(args.out, "w", newline="", encoding="ascii") if args.out != "-" else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for im in ims:
            for re in res:
                z = complex(re, im)
                w.writerows(_rows(z, boys_all(z, args.nmax, table)))
    finally:
        if fh is not out:
            fh.close()
    return EXIT_OK


def cmd_fresnel(args, out) -> int:
    if args.y is not None:
        ys = [args.y]
    else:
        ys = parse_range(args.y_range)
        if not ys:
            raise DomainError("empty range")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("y", "C", "S"))
    for y in ys:
        c, s = fresnel(y)
        w.writerow((repr(y), repr(c), repr(s)))
    return EXIT_OK


def _time_loop(fn, arguments, repeat: int) -> tuple[float, float]:
    """Median ns per call over ``repeat`` sequential passes, and a checksum."""
    for a in arguments[: min(len(arguments), 1000)]:
        fn(a)
    samples, checksum = [], None
    for _ in range(repeat):
        acc = 0.0
        t0 = time.perf_counter_ns()
        for a in arguments:
            acc += fn(a)
        samples.append(time.perf_counter_ns() - t0)
        checksum = acc if checksum is None else checksum
    return statistics.median(samples) / len(arguments), checksum


def run_bench(iters: int, seed: int, repeat: int) -> dict:
    rng = random.Random(seed)
    zs = [complex(rng.uniform(0.0, 50.0), rng.uniform(-50.0, 50.0)) for _ in range(iters)]
    xs = [rng.uniform(0.0, 50.0) for _ in range(iters)]
    targets = {
        "exp": (lambda z: cmath.exp(z).real, zs),
        "f0_complex": (lambda z: f0_eval(z).value.real, zs),
        "boys_all_complex": (lambda z: boys_all(z)[12].real, zs),
        "boys_all_real": (lambda x: boys_all_real(x)[12], xs),
    }
    report = {}
    checksum = 0.0
    for name, (fn, arguments) in targets.items():
        ns, cs = _time_loop(fn, arguments, repeat)
        report[name] = ns
        checksum += cs
    report["ratio_f0_to_exp"] = report["f0_complex"] / report["exp"]
    report["checksum"] = checksum
    return report


def cmd_bench(args, out) -> int:
    rep = run_bench(args.iters, args.seed, max(5, args.repeat))
    out.write(f"iterations per pass: {args.iters}, passes: {max(5, args.repeat)} (median reported)\n")
    for key in ("exp", "f0_complex", "boys_all_complex", "boys_all_real"):
        out.write(f"{key:18s} {rep[key]:10.1f} ns/eval\n")
    out.write(f"ratio f0/exp       {rep['ratio_f0_to_exp']:10.2f}   (reference ~{REFERENCE_F0_RATIO:g})\n")
    out.write(f"real vector        reference {REFERENCE_REAL_VECTOR_SECONDS * 1e9:.0f} ns/eval "
              f"(compiled code, different hardware)\n")
    out.write(f"checksum           {rep['checksum']!r}\n")
    if rep["ratio_f0_to_exp"] > RATIO_WARN:
        out.write(f"warning: f0/exp ratio exceeds {RATIO_WARN:g}\n")
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .selftest import run_selftest

    t0 = time.perf_counter()
    ok = run_selftest(quick=args.quick, out=lambda line: out.write(line + "\n"))
    out.write(f"{'all checks passed' if ok else 'SELFTEST FAILED'} in {time.perf_counter() - t0:.1f} s\n")
    return EXIT_OK if ok else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boys", description="Boys function F(n, z) for real and complex z.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate F(0..N, z) at one point")
    e.add_argument("--re", type=float, required=True)
    e.add_argument("--im", type=float, default=0.0)
    e.add_argument("--nmax", type=int, default=12)
    e.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    e.add_argument("--table", help=f"exponential-sum table file (or set {TABLE_PATH_ENV})")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", help="CSV table over a rectangular grid of z")
    t.add_argument("--re-range", required=True, metavar="A:B:STEP")
    t.add_argument("--im-range", default="0:0:1", metavar="A:B:STEP")
    t.add_argument("--nmax", type=int, default=12)
    t.add_argument("--out", default="-")
    t.add_argument("--table", help=f"exponential-sum table file (or set {TABLE_PATH_ENV})")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("fresnel", help="Fresnel integrals C(y), S(y)")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--y", type=float)
    g.add_argument("--y-range", metavar="A:B:STEP")
    f.set_defaults(func=cmd_fresnel)

    b = sub.add_parser("bench", help="time evaluations (ns/eval)")
    b.add_argument("--iters", type=int, default=10**6)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeat", type=int, default=5)
    b.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="run the oracle-backed accuracy suites")
    s.add_argument("--quick", action="store_true")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BoysError as exc:
        print(f"boys: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except argparse.ArgumentTypeError as exc:
        print(f"boys: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
