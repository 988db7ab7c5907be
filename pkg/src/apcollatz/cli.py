"""Command-line interface: ``apcollatz {build,trace,odd-path,cycles,verify,density}``.

Exit codes: 0 ok, 1 a requested check failed, 2 usage error, 3 resource limit.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cycles, export, indexing, invariants, oracle, tree
from .errors import DepthLimitExceeded, WordSyntaxError, ZeroInput

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def _resolve_node(args) -> tree.TreeNode:
    if args.parity_word:
        return tree.descend_branches(args.word)
    return tree.descend(indexing.OperatorWord.parse(args.word))


def cmd_build(args) -> int:
    t = tree.build(args.depth, limit=args.depth_limit)
    render = {"json": export.tree_to_json, "dot": export.tree_to_dot, "text": export.tree_to_text}
    _emit(render[args.format](t), args.out)
    counts = ", ".join(f"{d}:{1 << d}" for d in range(t.depth + 1))
    summary = f"nodes {len(t)}; per level {counts}\n"
    # keep stdout parseable when the export itself goes there
    (sys.stdout if args.out else sys.stderr).write(summary)
    return EXIT_OK


def cmd_trace(args) -> int:
    if args.j < 0:
        print("j must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    node = _resolve_node(args)
    value, seed = node.value(args.j), node.seed(args.j)
    if seed == 0:
        print("seed is 0; oracle check skipped", file=sys.stderr)
        match = None
    else:
        match = oracle.run(seed, node.depth).values[-1] == value
    dens = indexing.density(node.word)
    if args.format == "json":
        _emit(_dump({
            "word": str(node.word),
            "depth": node.depth,
            "a": str(node.progression.a),
            "b": str(node.progression.b),
            "alpha": str(node.index_map.alpha),
            "beta": str(node.index_map.beta),
            "j": str(args.j),
            "value": str(value),
            "seed": str(seed),
            "density": str(dens),
            "oracle_match": match,
        }))
    else:
        verdict = {None: "skipped (seed 0)", True: "match", False: "MISMATCH"}[match]
        rows = [
            ["word", str(node.word) or "(empty)"],
            ["node", str(node.progression)],
            ["index map", f"i={node.index_map}"],
            ["j", str(args.j)],
            ["value", str(value)],
            ["seed", str(seed)],
            ["density", str(dens)],
            ["oracle", verdict],
        ]
        _emit("".join(f"{k:<10} {v}\n" for k, v in rows))
    return EXIT_CHECK if match is False else EXIT_OK


def cmd_odd_path(args) -> int:
    report = invariants.all_odd_path(args.depth)
    if args.format == "json":
        _emit(_dump(report.to_json()))
    else:
        rows = [["k", "a", "b", "index map", "min seed", "b=a-1"]]
        for lv in report.levels:
            imap = indexing.IndexMap(lv.alpha, lv.beta)
            rows.append([str(lv.k), str(lv.a), str(lv.b), f"i={imap}", str(lv.beta), "ok" if lv.holds else "VIOLATED"])
        _emit(_table(rows))
    return EXIT_OK if report.invariant_holds else EXIT_CHECK


def cmd_cycles(args) -> int:
    t = tree.build(args.depth, limit=args.depth_limit)
    sols = cycles.scan(
        t, args.depth,
        all_pairs=args.all_pairs,
        fallback_bound=args.fallback_bound,
        include_zero=args.include_zero,
    )
    if args.format == "json":
        recs = [s.to_json() for s in sols]
        if not args.verify:
            for r in recs:
                del r["verified"]
        _emit(_dump(recs))
    elif sols:
        head = ["descendant", "ancestor", "t", "x", "y", "value", "seed"]
        rows = [head + (["verified"] if args.verify else [])]
        for s in sols:
            row = [str(s.pair.descendant.word) or "-", str(s.pair.ancestor.word) or "-",
                   str(s.pair.t), str(s.x), str(s.y), str(s.value), str(s.seed)]
            rows.append(row + (["yes" if s.verified else "NO"] if args.verify else []))
        _emit(_table(rows))
    else:
        _emit("no solutions\n")
    print(f"{len(sols)} solution(s) up to depth {args.depth}", file=sys.stderr)
    if args.verify and not all(s.verified for s in sols):
        return EXIT_CHECK
    return EXIT_OK


def cmd_verify(args) -> int:
    variant = oracle.Variant.FULL if args.full else oracle.Variant.COMPACT
    traj = oracle.run(args.seed, args.steps, variant)
    if args.format == "json":
        _emit(_dump({"seed": str(traj.seed), "variant": variant.value, "values": [str(v) for v in traj.steps]}))
    else:
        _emit("".join(f"{v}\n" for v in traj.steps))
    return EXIT_OK


def cmd_density(args) -> int:
    node = _resolve_node(args)
    dens = indexing.density(node.word)
    prog = indexing.seed_progression(node.word)
    if args.format == "json":
        _emit(_dump({"word": str(node.word), "density": str(dens), "seeds": {"a": str(prog.a), "b": str(prog.b)}}))
    else:
        _emit(f"{dens}\nseeds {prog}\n")
    return EXIT_OK


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apcollatz", description=__doc__.splitlines()[0])
    parser.add_argument("--depth-limit", type=_nonneg, default=tree.DEFAULT_DEPTH_LIMIT,
                        help="maximum tree depth to build (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats=("json", "text"), default="text"):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", "-o", help="write output to this file instead of stdout")
        return p

    def add_word(p):
        p.add_argument("--word", required=True, help="operator word over '1'/'2', e.g. 21112")
        p.add_argument("--parity-word", action="store_true",
                       help="read --word as branch letters 'e'/'o' instead of operators")

    p = add("build", cmd_build, formats=("json", "dot", "text"))
    p.add_argument("--depth", type=_nonneg, required=True)

    p = add("trace", cmd_trace)
    add_word(p)
    p.add_argument("--j", type=int, default=0, help="node-local index")

    p = add("odd-path", cmd_odd_path)
    p.add_argument("--depth", type=_nonneg, required=True)

    p = add("cycles", cmd_cycles)
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--verify", action="store_true", help="report the oracle confirmation")
    p.add_argument("--all-pairs", action="store_true", help="scan every node pair, not only ancestors")
    p.add_argument("--fallback-bound", type=_nonneg, default=cycles.DEFAULT_FALLBACK_BOUND,
                   help="search bound for degenerate systems (default %(default)s)")
    p.add_argument("--include-zero", action="store_true", help="keep seed-0 solutions")

    p = add("verify", cmd_verify)
    p.add_argument("--seed", type=_nonneg, required=True)
    p.add_argument("--steps", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--compact", action="store_true", help="compact step (default)")
    g.add_argument("--full", action="store_true", help="full 3n+1 step")

    p = add("density", cmd_density)
    add_word(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordSyntaxError, ZeroInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DepthLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
