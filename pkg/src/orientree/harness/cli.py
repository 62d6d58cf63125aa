"""Command-line front end: ``orientree <command> ...``.

Exit status is 0 when everything checked passes, 1 on a violation or a
missing copy, and 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import inspect
import json
import logging
import math
import sys
from fractions import Fraction

import numpy as np

from ..bounds import (
    BOUND_NAMES,
    BoundSpec,
    bound_table,
    evaluate_bound,
    verify_chain_bblock,
    verify_inequality_arbo,
    verify_inequality_main,
    verify_recurrence_sweep,
)
from ..digraph import InstanceTooLargeError, optimal_colouring
from ..embed.base import BoundViolation, embedding_to_json, is_embedding
from ..embed.bruteforce import brute_force_embed
from ..embed.partition import directed_partition, oriented_partition
from ..embed.pipelines import (
    arborescence_embedder,
    as_rooted_path,
    bblock_embedder,
    oriented_tree_embedder,
)
from ..formats import FormatError, dump_digraph, parse_digraph, parse_rooted_path, parse_tree
from ..trees import blocks, chunk_paths, descending_decomposition
from . import experiments as ex
from .generators import KINDS, InstanceFamily, generate

log = logging.getLogger("orientree.cli")


class UsageError(Exception):
    pass


def _read(path: str, parser):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parser(text)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, doc: dict | str) -> None:
    text = doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)


def _num(x) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x} ({float(x):.6g})"
    return f"{x:.6f}"


# ---------------------------------------------------------------------------
# commands


def cmd_chi(args) -> int:
    D = _read(args.host, parse_digraph)
    if D.n == 0:
        print("chi 0")
        _emit(args, {"chi": 0, "colouring": []})
        return 0
    col = optimal_colouring(D)
    print(f"chi {col.num_colours}")
    print("colouring " + " ".join(map(str, col.colour)))
    _emit(args, {"chi": col.num_colours, "colouring": list(col.colour)})
    return 0 if col.is_proper(D) else 1


def cmd_gen(args) -> int:
    offsets = tuple(args.offsets) if args.offsets else None
    fam = InstanceFamily(args.kind, args.n, args.p, args.seed, offsets, args.layers)
    text = dump_digraph(generate(fam))
    sys.stdout.write(text)
    _emit(args, text)
    return 0


def _plan(T, method: str, slack: int):
    if method == "bruteforce":
        return None
    if T.is_path() and T.k > 1 and len(blocks(as_rooted_path(T))) >= 2:
        return bblock_embedder(T, slack)
    if T.arborescence_root() is not None:
        return arborescence_embedder(T, slack)
    return oriented_tree_embedder(T)


def cmd_embed(args) -> int:
    D = _read(args.host, parse_digraph)
    T = _read(args.tree, parse_tree)
    E = _plan(T, args.method, args.slack)
    m = None
    used = args.method
    if E is not None:
        print(f"pipeline {E.name}, guaranteed once chi >= {_num(E.threshold)}")
        m = E(D)
        used = "constructive"
    if m is None and args.method in ("bruteforce", "hybrid"):
        m = brute_force_embed(D, T)
        used = "bruteforce"
    if m is None:
        print("no copy found")
        _emit(args, {"found": False, "method": args.method})
        return 1
    doc = embedding_to_json(D, T, m)
    print(f"found by {used}")
    print(doc)
    _emit(args, doc + "\n")
    return 0 if is_embedding(D, T, m) else 1


def cmd_partition(args) -> int:
    D = _read(args.host, parse_digraph)
    if args.path:
        Q = _read(args.path, parse_rooted_path)
        part = oriented_partition(D, Q)
    else:
        if args.ell is None:
            raise UsageError("partition needs --ell or --path")
        part = directed_partition(D, args.ell, args.variant)
    errs = part.violations(D)
    print(f"{part.tag} partition, length {part.length}: |X|={len(part.X)} |Y|={len(part.Y)} |Z|={len(part.Z)}")
    for e in errs:
        print("violation: " + e)
    doc = part.to_json()
    doc["violations"] = errs
    _emit(args, doc)
    return 1 if errs else 0


def cmd_decompose(args) -> int:
    T = _read(args.tree, parse_tree)
    dec = descending_decomposition(T, args.root)
    if args.chunk:
        dec = chunk_paths(dec, args.chunk)
    rows = []
    for P in dec.paths:
        arrows = "".join(f" {'->' if f else '<-'} {v}" for v, f in zip(P.vertices[1:], P.forward))
        print(f"{P.vertices[0]}{arrows}")
        rows.append({"vertices": list(P.vertices), "forward": list(P.forward)})
    errs = dec.violations(T)
    for e in errs:
        print("violation: " + e)
    _emit(args, {"root": dec.root, "paths": rows, "violations": errs})
    return 1 if errs else 0


def cmd_bounds(args) -> int:
    if args.check:
        k_max = args.k_max
        reps = {
            "arbo": lambda: [verify_inequality_arbo(k_max)],
            "main": lambda: [verify_inequality_main(k_max, extra=8), verify_inequality_main(k_max, extra=9)],
            "recurrence": lambda: [verify_recurrence_sweep(k_max)],
            "bblock-chain": lambda: [verify_chain_bblock(args.b or 10, k_max)],
        }[args.check]()
        for r in reps:
            print(r.summary())
        _emit(args, {"reports": [{"name": r.name, "passed": r.passed, "min_margin": r.min_margin,
                                  "argmin": r.argmin, "failures": r.failures[:20]} for r in reps]})
        return 0 if all(r.passed for r in reps) else 1
    if args.table:
        rows = bound_table(range(1, args.k_max + 1))
        names = list(rows[0])
        print("\t".join(names))
        for row in rows:
            print("\t".join(str(row["k"]) if n == "k" else f"{row[n]:.4f}" for n in names))
        _emit(args, {"rows": rows})
        return 0
    if not args.name:
        raise UsageError("bounds needs --name, --table or --check")
    spec = BoundSpec(args.name, args.k, args.b, args.c_prime, args.k_prime, args.ell, args.c)
    val = evaluate_bound(spec)
    print(_num(val))
    _emit(args, {"name": args.name, "value": float(val), "exact": str(val) if isinstance(val, Fraction) else None})
    return 0


def _suite_kwargs(fn, args) -> dict:
    params = inspect.signature(fn).parameters
    cand = {"samples": args.samples, "seed": args.seed, "n_max": args.n_max, "slack": args.slack,
            "k_max": args.k_max}
    return {k: v for k, v in cand.items() if v is not None and k in params}


def cmd_verify(args) -> int:
    if args.suite == "universality":
        if args.k is None:
            raise UsageError("the universality suite needs --k")
        spec = BoundSpec(args.bound, k=args.k)
        n = max(args.k, math.ceil(evaluate_bound(spec)))
        samples = args.samples or 5
        rng = np.random.default_rng(args.seed)
        fams = [InstanceFamily("random_tournament", n, seed=int(rng.integers(2**31))) for _ in range(samples)]
        rep = ex.verify_universality(args.k, spec, fams, args.method or "hybrid", brute_cap=64)
        reports = [rep]
    else:
        names = list(ex.SUITES) if args.suite == "all" else [args.suite]
        reports = [ex.SUITES[nm](**_suite_kwargs(ex.SUITES[nm], args)) for nm in names]
    for r in reports:
        print(r.summary())
        for note in r.notes:
            print("  " + note)
    rep = reports[0] if len(reports) == 1 else ex.merge("all", reports)
    _emit(args, rep.to_json(timing=args.timing))
    return 0 if all(r.passed for r in reports) else 1


def cmd_tightness(args) -> int:
    ks = range(args.k, args.k + 1) if args.k else range(3, 7)
    reports = [ex.tightness_check(k, samples=args.samples or 20, seed=args.seed) for k in ks]
    for k, r in zip(ks, reports):
        absent = r.records[0]["success"]
        print(f"k={k}: out-star {'absent from' if absent else 'FOUND in'} the regular tournament of order {2 * k - 3}; "
              + r.summary())
    rep = reports[0] if len(reports) == 1 else ex.merge("tightness", reports)
    _emit(args, rep.to_json(timing=args.timing))
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON document/report here")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int)
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--method", choices=ex.METHODS)
    common.add_argument("--slack", type=int, default=1, choices=(0, 1))
    common.add_argument("--timing", action="store_true", help="keep wall-clock fields in JSON reports")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="orientree", description="Oriented trees in digraphs of large chromatic number.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", parents=[common], help="exact chromatic number of a digraph file")
    s.add_argument("host")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("gen", parents=[common], help="generate a host digraph")
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--offsets", type=int, nargs="+")
    s.add_argument("--layers", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("embed", parents=[common], help="find a copy of a tree in a host")
    s.add_argument("host")
    s.add_argument("tree")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("partition", parents=[common], help="compute and check an (X, Y, Z) partition")
    s.add_argument("host")
    s.add_argument("--ell", type=int)
    s.add_argument("--variant", choices=("forward", "reversed"), default="forward")
    s.add_argument("--path", help="rooted path file; selects the oriented partition")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("decompose", parents=[common], help="descending path decomposition of a tree")
    s.add_argument("tree")
    s.add_argument("--root", type=int)
    s.add_argument("--chunk", type=int, help="cut paths into pieces of this many arcs")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("bounds", parents=[common], help="evaluate bounds or run the inequality sweeps")
    s.add_argument("--name", choices=BOUND_NAMES)
    for flag in ("k", "b", "ell", "c"):
        s.add_argument(f"--{flag}", type=int)
    s.add_argument("--c-prime", type=int, dest="c_prime")
    s.add_argument("--k-prime", type=int, dest="k_prime")
    s.add_argument("--table", action="store_true")
    s.add_argument("--check", choices=("arbo", "main", "recurrence", "bblock-chain"))
    s.add_argument("--k-max", type=int, default=20, dest="k_max")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="run an experiment suite")
    s.add_argument("--suite", choices=sorted(ex.SUITES) + ["universality", "all"], required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--k-max", type=int, dest="k_max")
    s.add_argument("--bound", choices=BOUND_NAMES, default="burr")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tightness", parents=[common], help="out-star versus the regular tournament of order 2k-3")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_tightness)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError, InstanceTooLargeError) as exc:
        print(f"orientree {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BoundViolation as exc:
        print(f"orientree {args.command}: bound violation: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
