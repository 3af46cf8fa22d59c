"""Batch command line front end: analyze, color, verify-lemmas, generate.

Every command prints exactly one JSON document to stdout (schema
``clawsq/1``); diagnostics go to stderr. Exit codes are stable across
commands: 0 success, 1 input error, 2 claw-free precondition violated,
3 internal invariant or bound violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .analysis import find_claw, q_value, run_lemma_suite, z_set
from .coloring import (
    DEFAULT_NODE_LIMIT,
    color_square,
    palette_bound,
    verify_coloring,
)
from .corpus import (
    BlowupSpec,
    claw,
    cocktail_party,
    complete,
    cycle,
    default_corpus,
    gen_blowup_c5,
    gen_icosahedron,
    gen_line_graph,
    gen_random_claw_free,
    load_dimacs,
    octahedron,
    path,
    petersen,
    squared_cycle,
    write_corpus,
    write_dimacs,
)
from .errors import (
    BudgetExhaustedError,
    DimacsError,
    GenerationExhaustedError,
    InternalBoundViolation,
    InvalidSpecError,
    NodeLimitExceeded,
    NotClawFreeError,
    UnclassifiableGraphError,
)
from .graph import Graph, connected_components, induced_subgraph, max_clique, square
from .oracle import exact_chromatic
from .structure import classify, neighborhood_shape

SCHEMA = "clawsq/1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CLAW = 2
EXIT_INTERNAL = 3


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which collides with the
    # claw-violation exit code; surface usage problems as input errors.
    def error(self, message):
        raise CliUsageError(message)


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))


def _classification_dict(sub: Graph, old: tuple[int, ...], omega: int) -> dict:
    outcome = classify(sub, omega, check_claw_free=False)
    info: dict = {"kind": outcome.kind, "omega": omega, "vertices": list(old)}
    if outcome.reduction is not None:
        red = outcome.reduction
        info["vertex"] = old[red.vertex]
        info["case"] = red.case
        info["xstar"] = None if red.xstar is None else old[red.xstar]
        info["kprime"] = red.kprime
    if outcome.antipodal_pairs is not None:
        info["antipodal_pairs"] = [[old[a], old[b]] for a, b in outcome.antipodal_pairs]
    if outcome.root is not None:
        info["root_n"] = outcome.root.f.n
        info["root_edges"] = [list(e) for e in sorted(outcome.root.f.edges())]
        info["vertex_to_root_edge"] = {
            str(old[v]): list(outcome.root.edge_of_vertex[v]) for v in range(sub.n)
        }
    return info


def _classify_components(g: Graph) -> list[dict]:
    out = []
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        out.append(_classification_dict(sub, old, max_clique(sub)[0]))
    return out


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    g = load_dimacs(args.path)
    witness = find_claw(g)
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": str(args.path),
        "n": g.n,
        "m": g.edge_count,
        "omega": max_clique(g)[0],
        "claw_free": witness is None,
        "claw": None
        if witness is None
        else {"center": witness.center, "leaves": list(witness.leaves)},
        "square_degrees": [square(g).degree(v) for v in range(g.n)],
        "z_sets": {str(v): sorted(z_set(g, v)) for v in range(g.n)},
        "q_values": {
            str(v): {str(w): q_value(g, v, w) for w in g.neighbors(v)}
            for v in range(g.n)
        },
        "classification": None,
        "ambiguous_neighborhoods": [
            v for v in range(g.n) if neighborhood_shape(g, v).ambiguous
        ],
        "lemma_failures": [],
    }
    if witness is None:
        report["classification"] = _classify_components(g)
    report["timings"] = {"elapsed_s": time.perf_counter() - started}
    _emit(report)
    if witness is not None and args.require_claw_free:
        return EXIT_CLAW
    return EXIT_OK


def cmd_color(args) -> int:
    started = time.perf_counter()
    g = load_dimacs(args.path)
    witness = find_claw(g)
    if witness is not None:
        _emit(
            {
                "schema": SCHEMA,
                "command": "color",
                "input": str(args.path),
                "claw_free": False,
                "claw": {"center": witness.center, "leaves": list(witness.leaves)},
            }
        )
        return EXIT_CLAW
    omega = max_clique(g)[0]
    coloring = color_square(g, node_limit=args.node_limit)
    bound = palette_bound(omega)
    report = {
        "schema": SCHEMA,
        "command": "color",
        "input": str(args.path),
        "n": g.n,
        "m": g.edge_count,
        "omega": omega,
        "claw_free": True,
        "classification": _classify_components(g),
        "palette": coloring.palette_size,
        "bound": bound,
        "verified": verify_coloring(g, coloring),
        "colors": list(coloring.colors),
        "oracle": None,
        "lemma_failures": [],
    }
    if args.oracle:
        result = exact_chromatic(square(g), coloring.palette_size, args.node_limit)
        report["oracle"] = {
            "chi_square": result.value,
            "nodes_explored": result.nodes_explored,
            "palette_gap": None
            if result.value is None
            else coloring.palette_size - result.value,
        }
    report["timings"] = {"elapsed_s": time.perf_counter() - started}
    _emit(report)
    if not report["verified"] or coloring.palette_size > bound:
        return EXIT_INTERNAL
    return EXIT_OK


def _verify_one_file(task) -> dict:
    base, row = task
    entry_path = Path(base) / row["file"]
    out = {"id": row.get("id", row["file"]), "file": row["file"]}
    try:
        g = load_dimacs(entry_path)
    except (DimacsError, OSError, ValueError) as exc:
        out["error"] = f"input: {exc}"
        return out
    omega = max_clique(g)[0]
    known = row.get("known") or {}
    mismatches = []
    if "omega" in known and known["omega"] != omega:
        mismatches.append(f"omega recorded {known['omega']}, computed {omega}")
    witness = find_claw(g)
    if known.get("claw_free") and witness is not None:
        mismatches.append(f"claw at center {witness.center}")
    if witness is not None:
        out["claw"] = {"center": witness.center, "leaves": list(witness.leaves)}
        out["mismatches"] = mismatches
        return out
    failures = [
        rep.as_dict() for rep in run_lemma_suite(g, max(omega, 2)) if not rep.holds
    ]
    out["omega"] = omega
    out["reports_failed"] = failures
    out["mismatches"] = mismatches
    return out


def cmd_verify_lemmas(args) -> int:
    started = time.perf_counter()
    manifest_path = Path(args.manifest)
    rows = json.loads(manifest_path.read_text(encoding="ascii"))
    if not isinstance(rows, list):
        raise CliUsageError("manifest must be a JSON array")
    if not rows:
        print("warning: empty manifest, nothing to verify", file=sys.stderr)
    tasks = [(str(manifest_path.parent), row) for row in rows]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one_file, tasks))
    else:
        results = [_verify_one_file(t) for t in tasks]
    claw_hit = any("claw" in r for r in results)
    failures = [
        {"id": r["id"], **f}
        for r in results
        for f in r.get("reports_failed", [])
    ]
    problems = [r for r in results if r.get("error") or r.get("mismatches")]
    report = {
        "schema": SCHEMA,
        "command": "verify-lemmas",
        "manifest": str(manifest_path),
        "files": len(results),
        "failures": failures,
        "problems": problems,
        "claw_found": claw_hit,
        "timings": {"elapsed_s": time.perf_counter() - started},
    }
    _emit(report)
    if any(r.get("error") for r in results):
        return EXIT_INPUT
    if claw_hit:
        return EXIT_CLAW
    if failures or any(r.get("mismatches") for r in results):
        return EXIT_INTERNAL
    return EXIT_OK


_NAMED_ROOTS = {
    "petersen": petersen,
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "octahedron": octahedron,
    "icosahedron": gen_icosahedron,
    "claw": claw,
}


def _root_for(name: str) -> Graph:
    if name in _NAMED_ROOTS:
        return _NAMED_ROOTS[name]()
    if ":" in name:
        kind, _, arg = name.partition(":")
        makers = {
            "cycle": cycle,
            "path": path,
            "complete": complete,
            "cocktail": cocktail_party,
            "squared-cycle": squared_cycle,
        }
        if kind in makers:
            return makers[kind](int(arg))
        if kind == "blowup":
            sizes = tuple(int(s) for s in arg.split(","))
            return gen_blowup_c5(BlowupSpec(sizes))
        raise CliUsageError(f"unknown root family {kind!r}")
    return load_dimacs(name)


def cmd_generate(args) -> int:
    if args.kind == "corpus":
        if not args.out:
            raise CliUsageError("generate corpus requires --out DIRECTORY")
        entries = default_corpus()
        manifest = write_corpus(entries, args.out)
        _emit(
            {
                "schema": SCHEMA,
                "command": "generate",
                "kind": "corpus",
                "entries": len(entries),
                "manifest": str(manifest),
            }
        )
        return EXIT_OK

    if args.kind == "blowup-c5":
        if not args.sizes:
            raise CliUsageError("generate blowup-c5 requires --sizes a,b,c,d,e")
        sizes = tuple(int(s) for s in args.sizes.split(","))
        g = gen_blowup_c5(BlowupSpec(sizes))
        params = {"sizes": list(sizes)}
    elif args.kind == "icosahedron":
        g = gen_icosahedron()
        params = {}
    elif args.kind == "line-graph":
        if not args.of:
            raise CliUsageError("generate line-graph requires --of NAME")
        g, _ = gen_line_graph(_root_for(args.of))
        params = {"of": args.of}
    elif args.kind == "random":
        g = gen_random_claw_free(args.n, args.omega, args.seed, strategy=args.strategy)
        params = {
            "n": args.n,
            "omega_target": args.omega,
            "strategy": args.strategy,
            "seed": args.seed,
        }
    else:
        raise CliUsageError(f"unknown kind {args.kind!r}")

    text = write_dimacs(g)
    report = {
        "schema": SCHEMA,
        "command": "generate",
        "kind": args.kind,
        "params": params,
        "n": g.n,
        "m": g.edge_count,
    }
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        report["file"] = str(args.out)
    else:
        report["dimacs"] = text
    _emit(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="clawsq",
        description=(
            "Analyze and color squares of claw-free graphs within "
            "clique-number palette bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural report for one DIMACS graph")
    p.add_argument("path")
    p.add_argument("--format", choices=["dimacs"], default="dimacs")
    p.add_argument(
        "--require-claw-free",
        action="store_true",
        help="exit with status 2 when the input contains a claw",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="verified square coloring within the bound")
    p.add_argument("path")
    p.add_argument("--format", choices=["dimacs"], default="dimacs")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also compute the exact chromatic number of the square (exponential)",
    )
    p.add_argument(
        "--node-limit",
        type=int,
        default=DEFAULT_NODE_LIMIT,
        help="backtracking node budget for exact searches (default %(default)s)",
    )
    p.set_defaults(func=cmd_color)

    p = sub.add_parser(
        "verify-lemmas", help="evaluate every inequality over a corpus manifest"
    )
    p.add_argument("manifest")
    p.add_argument(
        "--jobs", type=int, default=1, help="parallel worker processes (default 1)"
    )
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("generate", help="write named or random instances")
    p.add_argument(
        "kind", choices=["blowup-c5", "icosahedron", "line-graph", "random", "corpus"]
    )
    p.add_argument("--sizes", help="five comma-separated class sizes for blowup-c5")
    p.add_argument("--of", help="root graph for line-graph (name, family:arg, or file)")
    p.add_argument("--n", type=int, default=12, help="target size for random")
    p.add_argument("--omega", type=int, default=3, help="clique cap for random")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument(
        "--strategy",
        choices=["line-graph", "blowup", "rejection"],
        default="line-graph",
        help="random generator strategy",
    )
    p.add_argument("--out", help="output file (or directory for corpus)")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DimacsError, InvalidSpecError, GenerationExhaustedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"error: manifest is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotClawFreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLAW
    except (
        InternalBoundViolation,
        UnclassifiableGraphError,
        BudgetExhaustedError,
        NodeLimitExceeded,
    ) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
