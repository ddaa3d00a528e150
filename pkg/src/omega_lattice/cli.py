"""Command line front end.

Exit codes: 0 success, 1 a theorem check or internal cross-check failed,
2 bad invocation or bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import classify_upper
from .moebius import mobius_closed, mobius_recursive
from .omega import Interval, covers_above, enumerate_orders, frattini
from .relation import OmegaError, as_order, is_subrelation
from .serialization import dumps, loads, to_json_obj
from .topology import (
    conical_certificate,
    interval_complex,
    is_sphere_profile,
    is_trivial_profile,
    reduced_homology,
)
from .verify import SUITES, run_suite


def _read_order(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise OmegaError(f"cannot read {path}: {exc}") from exc
    return as_order(loads(text))


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_enumerate(args) -> int:
    orders = enumerate_orders(args.n, args.strategy, allow_large=args.allow_n6)
    if args.count_only:
        print(len(orders))
    else:
        for r in orders:
            print(dumps(r))
    return 0


def cmd_mobius(args) -> int:
    lower, upper = _read_order(args.lower), _read_order(args.upper)
    if lower.n != upper.n or not is_subrelation(lower, upper):
        raise OmegaError("lower relation is not contained in upper relation")
    closed = mobius_closed(lower, upper)
    recursive = mobius_recursive(lower, upper)
    _emit({"value": closed, "closed_form": closed, "recursive": recursive})
    return 0 if closed == recursive else 1


def cmd_frattini(args) -> int:
    _emit(to_json_obj(frattini(_read_order(args.relation))))
    return 0


def cmd_covers(args) -> int:
    for s in covers_above(_read_order(args.relation)):
        print(dumps(s))
    return 0


def cmd_classify_upper(args) -> int:
    _emit(classify_upper(_read_order(args.relation)).to_json())
    return 0


def cmd_interval_homology(args) -> int:
    iv = Interval(_read_order(args.lower), _read_order(args.upper))
    if iv.lower == iv.upper:
        raise OmegaError("open interval needs lower strictly inside upper")
    complex_ = interval_complex(iv)
    if args.dump_complex:
        with open(args.dump_complex, "w", encoding="utf-8") as fh:
            for line in complex_.dump_lines():
                fh.write(line + "\n")
    h = reduced_homology(complex_)
    sphere_case = is_subrelation(frattini(iv.upper), iv.lower)
    if sphere_case:
        dim = iv.gap() - 2
        ok = is_sphere_profile(h, dim)
        prediction = {"branch": "sphere", "dimension": dim}
    else:
        ok = is_trivial_profile(h) and conical_certificate(iv).passed
        prediction = {"branch": "contractible"}
    _emit({"homology": h.to_json(), "prediction": prediction, "matches": ok})
    return 0 if ok else 1


def cmd_verify(args) -> int:
    rep = run_suite(args.n, args.suite, args.exhaustive, args.sample, args.seed)
    _emit(rep.to_json())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="omega", description="Compute with the poset of order relations on a finite set."
    )
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list all orders on n elements")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--strategy", choices=("covers", "brute"), default="covers")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--allow-n6", action="store_true", help="permit n = 6 (slow)")
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("mobius", help="Möbius function between two orders")
    m.add_argument("lower")
    m.add_argument("upper")
    m.set_defaults(func=cmd_mobius)

    for name, func, helptext in (
        ("frattini", cmd_frattini, "Frattini subrelation of an order"),
        ("covers", cmd_covers, "orders covering a given order"),
        ("classify-upper", cmd_classify_upper, "homotopy type of the orders above an order"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("relation", help="relation JSON file, or - for stdin")
        sp.set_defaults(func=func)

    ih = sub.add_parser("interval-homology", help="reduced homology of an open interval")
    ih.add_argument("lower")
    ih.add_argument("upper")
    ih.add_argument("--dump-complex", metavar="PATH", help="write the order complex as JSON lines")
    ih.set_defaults(func=cmd_interval_homology)

    v = sub.add_parser("verify", help="run the verification battery")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--exhaustive", action="store_true", help="full homology at n = 4")
    v.add_argument("--sample", type=int, default=None, help="check only this many inputs")
    v.add_argument("--seed", type=int, default=0, help="seed for --sample")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OmegaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
