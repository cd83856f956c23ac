"""Command-line front end: solve, eval, gen, crosscheck.

Exit codes: 0 = solution exists (or command succeeded), 3 = no solution /
discrepancy found, 1 = usage or parse error, 2 = capacity exceeded or
unsupported instance shape.  Diagnostics go to stderr, results to stdout.
"""

from __future__ import annotations

import argparse
import random
import sys

from .core import (
    CapacityError,
    Instance,
    UnsupportedInstanceError,
    classify_shape,
    evaluate_partition,
    validate_instance,
)
from .io import (
    FormatError,
    parse_instance,
    parse_partition,
    parse_source_graph,
    write_instance,
    write_partition,
)
from .oracle import solve_brute_force, random_instance
from .reductions import clique_to_path, clique_witness, partition_to_tree, partition_witness
from .star_diam import solve_diameter3, solve_star
from .two_color import solve_two_color_tree

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_NO = 3


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str) -> Instance:
    inst = parse_instance(_read(path))
    violations = validate_instance(inst)
    if violations:
        raise FormatError(f"invalid instance: {'; '.join(violations)}")
    return inst


def _pick_algorithm(inst: Instance) -> str:
    if inst.mode != "connected":
        raise UnsupportedInstanceError("solvers need a connected instance")
    shape = classify_shape(inst)
    if not shape.is_tree:
        raise UnsupportedInstanceError("no solver applies to non-tree graphs")
    if len(inst.colors) == 2:
        return "dp2"
    if shape.diameter is not None and shape.diameter <= 2:
        return "star"
    if shape.diameter == 3:
        return "diam3"
    return "brute"


_SOLVERS = {
    "brute": solve_brute_force,
    "dp2": solve_two_color_tree,
    "star": solve_star,
    "diam3": solve_diameter3,
}


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    algorithm = args.algorithm
    if algorithm == "auto":
        algorithm = _pick_algorithm(inst)
    elif inst.mode != "connected":
        raise UnsupportedInstanceError("solvers need a connected instance")
    result = _SOLVERS[algorithm](inst)
    print(f"algorithm {algorithm}")
    print(f"answer {'yes' if result.answer else 'no'}")
    if result.answer and args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            fh.write(write_partition(result.witness))
    return EXIT_OK if result.answer else EXIT_NO


def _cmd_eval(args) -> int:
    inst = parse_instance(_read(args.instance))
    part = parse_partition(_read(args.partition))
    report = evaluate_partition(inst, part)
    print(f"valid {'yes' if report.valid else 'no'}")
    print(f"violation {report.violation if report.violation else 'none'}")
    print(f"uniquely-p {report.uniquely_p_count}")
    nonzero = [c for c in inst.colors if report.colored_count.get(c)]
    print("colored " + " ".join(f"{c}={report.colored_count[c]}" for c in nonzero))
    print(f"solution {'yes' if report.is_solution else 'no'}")
    return EXIT_OK if report.is_solution else EXIT_NO


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen_clique_path(args) -> int:
    graph = parse_source_graph(_read(args.graph))
    try:
        result = clique_to_path(graph, args.l, connected=args.connected)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _write_out(write_instance(result.instance), args.out)
    if args.witness_clique is not None:
        if args.witness_out is None:
            raise FormatError("--witness-clique requires --witness-out")
        ids = [int(t) for t in args.witness_clique.split(",") if t]
        try:
            witness = clique_witness(graph, args.l, ids, connected=args.connected)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        _write_out(write_partition(witness), args.witness_out)
    return EXIT_OK


def _cmd_gen_partition_tree(args) -> int:
    elements = [int(t) for t in args.elements.split(",") if t]
    try:
        result = partition_to_tree(elements)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    _write_out(write_instance(result.instance), args.out)
    if args.witness_indices is not None:
        if args.witness_out is None:
            raise FormatError("--witness-indices requires --witness-out")
        indices = [int(t) for t in args.witness_indices.split(",") if t]
        try:
            witness = partition_witness(elements, indices)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        _write_out(write_partition(witness), args.witness_out)
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    rng = random.Random(args.seed)
    discrepancies = 0
    checked = 0
    for trial in range(args.trials):
        n = rng.randint(1, args.n)
        k = rng.randint(1, n)
        inst = random_instance(
            n=n,
            num_colors=args.colors,
            max_weight=args.max_weight,
            k=k,
            seed=rng.randrange(2**32),
        )
        solvers = []
        if len(inst.colors) == 2:
            solvers.append(("dp2", solve_two_color_tree))
        shape = classify_shape(inst)
        if shape.diameter is not None and shape.diameter <= 2:
            solvers.append(("star", solve_star))
        elif shape.diameter == 3:
            solvers.append(("diam3", solve_diameter3))
        if not solvers:
            continue
        expected = solve_brute_force(inst).answer
        for name, fn in solvers:
            checked += 1
            got = fn(inst).answer
            if got != expected:
                discrepancies += 1
                print(f"discrepancy trial={trial} solver={name} "
                      f"expected={'yes' if expected else 'no'} got={'yes' if got else 'no'}")
                sys.stdout.write(write_instance(inst))
    print(f"trials {args.trials} comparisons {checked} discrepancies {discrepancies}")
    return EXIT_OK if discrepancies == 0 else EXIT_NO


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gerrygraph",
        description="Exact districting solvers over graphs: decide whether a "
        "graph splits into k connected districts won by the target color.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide an instance file")
    p_solve.add_argument("instance")
    p_solve.add_argument(
        "--algorithm",
        choices=["auto", "brute", "dp2", "star", "diam3"],
        default="auto",
    )
    p_solve.add_argument("--witness", help="write a solution partition here")
    p_solve.set_defaults(func=_cmd_solve)

    p_eval = sub.add_parser("eval", help="evaluate a partition file against an instance")
    p_eval.add_argument("instance")
    p_eval.add_argument("partition")
    p_eval.set_defaults(func=_cmd_eval)

    p_gen = sub.add_parser("gen", help="generate hardness-construction instances")
    gen_sub = p_gen.add_subparsers(dest="generator", required=True)

    p_cp = gen_sub.add_parser("clique-path", help="clique search encoded as a path instance")
    p_cp.add_argument("--graph", required=True, help="source graph file (n header + edge lines)")
    p_cp.add_argument("--l", type=int, required=True, help="clique size")
    p_cp.add_argument("--connected", action="store_true")
    p_cp.add_argument("--witness-clique", help="comma-separated clique vertex ids")
    p_cp.add_argument("--out", help="instance output file (default stdout)")
    p_cp.add_argument("--witness-out", help="partition output file")
    p_cp.set_defaults(func=_cmd_gen_clique_path)

    p_pt = gen_sub.add_parser("partition-tree", help="half-sum partition encoded as a tree")
    p_pt.add_argument("--elements", required=True, help="comma-separated integers")
    p_pt.add_argument("--witness-indices", help="comma-separated 1-based indices")
    p_pt.add_argument("--out", help="instance output file (default stdout)")
    p_pt.add_argument("--witness-out", help="partition output file")
    p_pt.set_defaults(func=_cmd_gen_partition_tree)

    p_cc = sub.add_parser("crosscheck", help="random solver-vs-oracle equivalence sweep")
    p_cc.add_argument("--n", type=int, required=True, help="max vertex count")
    p_cc.add_argument("--colors", type=int, required=True)
    p_cc.add_argument("--trials", type=int, required=True)
    p_cc.add_argument("--seed", type=int, required=True)
    p_cc.add_argument("--max-weight", type=int, default=6)
    p_cc.set_defaults(func=_cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (FormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, UnsupportedInstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


def entry() -> None:
    sys.exit(main())
