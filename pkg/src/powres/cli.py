"""Command-line front end: ``powres <command> ...``.

Every command prints one result per line in the chosen ``--format``.
Exit status is 0 on success, 1 when the inputs are out of domain (or a
verification fails), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Callable, Iterable, Optional

from . import norms, orders, quadratic, residues, search, verify
from .arith import factorize, primes_up_to


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _sign(v: int) -> str:
    return f"{v:+d}"


def _braces(values: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._csv = None

    def emit(self, op: str, inputs: dict, output, text: str, elapsed: float) -> None:
        if self.fmt == "json":
            line = {"op": op, "inputs": inputs, "output": output, "elapsed_ms": round(elapsed * 1e3, 3)}
            print(json.dumps(line, sort_keys=True), file=self.out)
        elif self.fmt == "csv":
            self.csv_row(["op", "inputs", "output"], [op, json.dumps(inputs), text])
        else:
            print(text, file=self.out)

    def csv_row(self, header: list[str], row: list) -> None:
        if self._csv is None:
            self._csv = csv.writer(self.out, lineterminator="\n")
            self._csv.writerow(header)
        self._csv.writerow(row)


def _timed(fn: Callable, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def cmd_order(args, em: Emitter) -> int:
    methods = {
        "fast": orders.order_fast,
        "brute": orders.order_bruteforce,
        "composite": lambda r, m: orders.order_composite(r, factorize(m)),
    }
    value, dt = _timed(methods[args.method], args.r, args.m)
    co = orders.euler_phi(args.m) // value
    out = {"order": value, "co_order": co}
    em.emit("order", {"r": args.r, "m": args.m, "method": args.method}, out, f"{value}", dt)
    return 0


def cmd_legendre(args, em: Emitter) -> int:
    methods = {
        "euler": quadratic.legendre,
        "brute": quadratic.legendre_bruteforce,
        "reciprocity": quadratic.legendre_reciprocity,
        "parity": quadratic.legendre_general,
    }
    value, dt = _timed(methods[args.method], args.r, args.p)
    em.emit("legendre", {"r": args.r, "p": args.p, "method": args.method}, value, _sign(value), dt)
    return 0


def cmd_lgroup(args, em: Emitter) -> int:
    kind = args.kind
    if kind == "4q":
        if args.q is None:
            raise ValueError("lgroup 4q needs --q")
        groups, dt = _timed(lambda: [quadratic.build_L4q(args.q)])
        inputs = {"q": args.q}
    elif kind == "4r":
        if args.r is None:
            raise ValueError("lgroup 4r needs --r")
        groups, dt = _timed(lambda: [quadratic.build_L4r_squarefree(args.r)])
        inputs = {"r": args.r}
    elif kind == "star":
        if args.p is None:
            raise ValueError("lgroup star needs --p")
        groups, dt = _timed(lambda: [quadratic.build_Lstar(args.p)])
        inputs = {"p": args.p}
    else:
        if args.m is None:
            raise ValueError("lgroup half needs --m")
        groups, dt = _timed(quadratic.half_order_subgroups_containing_minus1, args.m)
        inputs = {"m": args.m}
    for g in groups:
        shown = g.signed() if args.signed else list(g.elements)
        em.emit(f"lgroup-{kind}", {**inputs, "modulus": g.modulus}, list(g.elements), _braces(shown), dt)
    return 0


def cmd_norm(args, em: Emitter) -> int:
    if (args.r is None) == (args.poly is None):
        raise ValueError("give exactly one of --r and --poly")
    if args.poly is not None:
        value, dt = _timed(norms.det_norm_general, args.x, args.poly)
        inputs = {"x": args.x, "poly": args.poly}
    else:
        value, dt = _timed(norms.det_norm, args.x, args.r)
        inputs = {"x": args.x, "r": args.r}
    if args.mod is not None:
        inputs["mod"] = args.mod
        value %= args.mod
    em.emit("norm", inputs, value, str(value), dt)
    return 0


def cmd_irreducible(args, em: Emitter) -> int:
    if args.p is not None:
        value, dt = _timed(residues.is_irreducible_Fp, args.n, args.r, args.p)
        inputs = {"n": args.n, "r": args.r, "p": args.p}
    else:
        value, dt = _timed(residues.is_irreducible_Q, args.n, args.r)
        inputs = {"n": args.n, "r": args.r}
    em.emit("irreducible", inputs, value, "irreducible" if value else "reducible", dt)
    return 0


def cmd_solve(args, em: Emitter) -> int:
    if args.kind == "zero":
        sol, dt = _timed(residues.find_nontrivial_zero, args.r, args.n, args.p)
        inputs = {"r": args.r, "n": args.n, "p": args.p}
        if sol is None:
            em.emit("solve-zero", inputs, None, "none", dt)
        else:
            out = {"x": list(sol.xbar), "bound_ok": sol.bound_ok, "root": sol.root}
            em.emit("solve-zero", inputs, out, "(" + ", ".join(map(str, sol.xbar)) + ")", dt)
    elif args.kind == "norm":
        (x0, x1), dt = _timed(residues.construct_norm_p, args.r, args.p)
        em.emit("solve-norm", {"r": args.r, "p": args.p}, [x0, x1], f"({x0}, {x1})", dt)
    else:
        # data only; nothing is asserted about the pattern
        for p in primes_up_to(args.limit)[1:]:
            if args.r % p == 0:
                continue
            found, dt = _timed(residues.bounded_norm_search, p, 2, args.r, args.bound)
            out = {
                "found": list(found) if found else None,
                "legendre": quadratic.legendre(args.r, p),
                "p_mod_4": p % 4,
            }
            text = f"{p} {'(%d, %d)' % found if found else '-'} {_sign(out['legendre'])} {p % 4}"
            em.emit("solve-survey", {"r": args.r, "p": p, "bound": args.bound}, out, text, dt)
    return 0


def cmd_search(args, em: Emitter) -> int:
    a, b, c = args.exponents
    if args.limit is None and args.primes is None:
        args.primes = 1000
    start = time.perf_counter()
    row = search.scan_table(a, b, c, args.primes, args.bound, limit=args.limit, jobs=args.jobs)
    dt = time.perf_counter() - start
    if em.fmt == "csv":
        header = ["a", "b", "c", "prime", "outcome", "x", "y", "z"]
        for rep in row.reports:
            xyz = list(rep.solution) if rep.solution else ["", "", ""]
            em.csv_row(header, [a, b, c, rep.p, rep.describe() if not rep.solution else "solution", *xyz])
    elif em.fmt == "json":
        for rep in row.reports:
            em.emit("search", {"a": a, "b": b, "c": c, "p": rep.p, "bound": rep.bound},
                    rep.to_dict(), "", dt / max(len(row.reports), 1))
    else:
        solved = len(row.reports) - len(row.exhausted)
        print(f"({a},{b},{c}) bound {args.bound}: {solved}/{len(row.reports)} solved", file=em.out)
        print("exhausted: " + (", ".join(map(str, row.exhausted)) or "none"), file=em.out)
    return 0


def cmd_verify(args, em: Emitter) -> int:
    if args.suite == "list":
        for name in verify.SUITES:
            print(name, file=em.out)
        return 0
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = verify.run_suite(name)
        ok &= res.passed
        out = {"passed": res.passed, "checked": res.checked, "failed": len(res.failures)}
        em.emit("verify", {"suite": name}, out, res.summary(), res.elapsed)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="powres", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("order", parents=[common], help="multiplicative order of r mod m")
    p.add_argument("r", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--method", choices=("fast", "brute", "composite"), default="fast")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("legendre", parents=[common], help="Legendre symbol (r/p)")
    p.add_argument("r", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--method", choices=("euler", "brute", "reciprocity", "parity"), default="euler")
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser("lgroup", parents=[common], help="classifying half-order subgroups")
    p.add_argument("kind", choices=("4q", "4r", "half", "star"))
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--signed", action="store_true", help="show residues as +-a")
    p.set_defaults(func=cmd_lgroup)

    p = sub.add_parser("norm", parents=[common], help="determinant of the multiplication matrix")
    p.add_argument("--x", type=_int_list, required=True, help="coefficients, lowest degree first")
    p.add_argument("--r", type=int, help="modulus x^n - r")
    p.add_argument("--poly", type=_int_list, help="monic modulus coefficients, lowest first")
    p.add_argument("--mod", type=int, help="reduce the result mod this integer")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("irreducible", parents=[common], help="irreducibility of x^n - r")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--p", type=int, help="work over F_p instead of the rationals")
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("solve", parents=[common], help="small zeros mod p and norm-p representations")
    p.add_argument("kind", choices=("zero", "norm", "survey"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int)
    p.add_argument("--limit", type=int, default=200, help="survey: largest prime")
    p.add_argument("--bound", type=int, default=100, help="survey: coordinate bound")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("search", parents=[common], help="bounded search for x^a + 2y^b + 4z^c = p")
    p.add_argument("exponents", type=int, nargs=3, metavar="E", help="exponents a b c, each 1, 2 or 3")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--primes", type=int, help="scan the first N primes (default 1000)")
    group.add_argument("--limit", type=int, help="scan all primes up to this value")
    p.add_argument("--bound", type=int, default=search.DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    p.add_argument("suite", choices=("list", "all", *verify.SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve" and args.kind in ("zero", "norm") and args.p is None:
        parser.error(f"solve {args.kind} needs --p")
    em = Emitter(args.format)
    try:
        return args.func(args, em)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
