"""Command-line interface.

Exit codes: 0 success, 2 parse or validation error, 3 budget exhausted,
4 internal invariant breach.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from .budget import DEFAULT_BUDGET, Budget
from .certificate import certify_clique_colouring
from .cliques import is_clique_colouring
from .colourers import grid_colouring, hex_colouring_R3, strip_colouring
from .constants import controlled_region_area_mc, pentagon_constants
from .embedding import embed_graph
from .exact import clique_chromatic_number_exact
from .exceptions import BudgetExceeded, DimensionMismatch, MarginCollapse, ParseError
from .exhaustive import MAX_EXHAUSTIVE_N, exhaustive_chi_c_max
from .experiments import run_sweep
from .graph import Colouring, Graph, PointSet, build_geometric_graph
from .greedy import greedy_sqrt_colouring, sqrt_palette_bound
from .io import (
    colouring_to_json,
    format_points,
    parse_colouring,
    parse_edge_list,
    parse_points,
    parse_sweep_config,
    read_text,
)

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_BREACH = 0, 2, 3, 4

COLOURERS = {
    "strip": lambda ps, budget: strip_colouring(ps, budget=budget),
    "grid": lambda ps, budget: grid_colouring(ps),
    "hex": lambda ps, budget: hex_colouring_R3(ps, budget),
}


class InvariantBreach(RuntimeError):
    pass


def _budget(args) -> Budget:
    return Budget(
        max_cliques=args.budget,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _verify_graph(g: Graph, colouring: Colouring, budget: Budget) -> bool:
    ok, _ = is_clique_colouring(g, colouring, budget.meter())
    return ok


def _verify_points(ps: PointSet, g: Graph, colouring: Colouring, budget: Budget) -> bool:
    """Exact check by clique enumeration, else the geometric ball certificate."""
    try:
        return _verify_graph(g, colouring, budget)
    except BudgetExceeded:
        cert = certify_clique_colouring(ps.points, ps.radius, colouring.colours)
        if not cert.certified:
            raise BudgetExceeded("too many cliques to verify and the certificate is inconclusive")
        return True


def cmd_colour(args) -> int:
    ps = parse_points(read_text(args.points), args.radius)
    budget = _budget(args)
    colouring = COLOURERS[args.algo](ps, budget)
    if args.debug_force_invalid:
        colouring = Colouring((0,) * len(colouring))
    g = build_geometric_graph(ps)
    if not _verify_points(ps, g, colouring, budget):
        raise InvariantBreach(f"{args.algo} colouring failed verification")
    _emit(colouring_to_json(colouring), args.output)
    print(f"palette={colouring.palette_size} valid=true n={g.n} m={g.m}")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = parse_edge_list(read_text(args.edges))
    k, witness = clique_chromatic_number_exact(g, _budget(args))
    if not _verify_graph(g, witness, _budget(args)) or witness.palette_size != k:
        raise InvariantBreach("exact witness failed verification")
    print(f"chi_c={k}")
    _emit(colouring_to_json(witness), args.output)
    return EXIT_OK


def cmd_greedy(args) -> int:
    g = parse_edge_list(read_text(args.edges))
    colouring = greedy_sqrt_colouring(g)
    bound = sqrt_palette_bound(g.n)
    if not _verify_graph(g, colouring, _budget(args)) or colouring.palette_size > max(bound, 1):
        raise InvariantBreach("greedy colouring failed verification")
    _emit(colouring_to_json(colouring), args.output)
    print(f"palette={colouring.palette_size} valid=true n={g.n} m={g.m} bound={bound}")
    return EXIT_OK


def cmd_verify(args) -> int:
    colouring = parse_colouring(read_text(args.colouring))
    budget = _budget(args)
    if args.edges:
        g = parse_edge_list(read_text(args.edges))
        check = lambda: _verify_graph(g, colouring, budget)  # noqa: E731
    else:
        ps = parse_points(read_text(args.points), args.radius)
        g = build_geometric_graph(ps)
        check = lambda: _verify_points(ps, g, colouring, budget)  # noqa: E731
    if len(colouring) != g.n:
        raise ParseError(f"colouring has {len(colouring)} entries for {g.n} vertices")
    ok = check()
    print(f"valid={'true' if ok else 'false'} palette={colouring.palette_size} n={g.n} m={g.m}")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_embed(args) -> int:
    g = parse_edge_list(read_text(args.edges))
    emb = embed_graph(g, args.margin, reduce=args.reduce)
    if emb.rebuild() != g:
        raise InvariantBreach("embedding does not rebuild the input graph")
    _emit(format_points(emb.points).rstrip("\n"), args.output)
    # the margin is far below 1e-6, so it is printed in scientific notation
    print(f"n={g.n} dim={emb.points.shape[1]} threshold={emb.threshold:.6f} margin={emb.margin:.6e}")
    return EXIT_OK


def cmd_constants(args) -> int:
    for line in pentagon_constants().format_lines():
        print(line)
    if args.mc_samples:
        est, se = controlled_region_area_mc(args.mc_samples, seed=args.seed)
        print(f"area_A_mc={est:.6f}")
        print(f"area_A_mc_se={se:.6f}")
    return EXIT_OK


def cmd_exhaustive(args) -> int:
    if not 1 <= args.n <= MAX_EXHAUSTIVE_N:
        raise ParseError(f"n must be in 1..{MAX_EXHAUSTIVE_N}")
    res = exhaustive_chi_c_max(args.n, jobs=args.jobs)
    print(f"n={res.n} max_chi_c={res.max_chi_c} extremal_classes={len(res.extremal)} "
          f"triangle_free={sum(res.extremal_triangle_free)}")
    for g, tf in zip(res.extremal, res.extremal_triangle_free):
        edges = " ".join(f"{u}-{v}" for u, v in g.edges())
        print(f"graph m={g.m} triangle_free={str(tf).lower()} edges={edges}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    configs = parse_sweep_config(read_text(args.config))
    if args.seed is not None or args.trials is not None:
        configs = [replace(c, **{k: v for k, v in (("seed", args.seed), ("trials", args.trials))
                                 if v is not None}) for c in configs]
    table = run_sweep(configs, jobs=args.jobs)
    _emit(table.to_csv().rstrip("\n"), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquecol", description="Clique colouring of geometric graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def budget_flags(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_cliques,
                        help="maximal-clique cap for exact searches")
        sp.add_argument("--max-nodes", type=int, default=DEFAULT_BUDGET.max_nodes)
        sp.add_argument("--max-seconds", type=float, default=None)

    sp = sub.add_parser("colour", help="colour a points file")
    sp.add_argument("points")
    sp.add_argument("--algo", choices=sorted(COLOURERS), default="strip")
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("-o", "--output")
    sp.add_argument("--debug-force-invalid", action="store_true",
                    help="replace the colouring by a constant one before verification")
    budget_flags(sp)
    sp.set_defaults(func=cmd_colour)

    sp = sub.add_parser("exact", help="exact clique chromatic number of an edge list")
    sp.add_argument("edges")
    sp.add_argument("-o", "--output")
    budget_flags(sp)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("greedy", help="greedy 2*sqrt(n) clique colouring of an edge list")
    sp.add_argument("edges")
    sp.add_argument("-o", "--output")
    budget_flags(sp)
    sp.set_defaults(func=cmd_greedy)

    sp = sub.add_parser("verify", help="check a colouring JSON against a graph")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges")
    src.add_argument("--points")
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--colouring", required=True)
    budget_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("embed", help="realise an edge list at threshold sqrt(2)")
    sp.add_argument("edges")
    sp.add_argument("--margin", type=float, default=1e-9)
    sp.add_argument("--reduce", action="store_true", help="use n-1 coordinates")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("constants", help="pentagon constants")
    sp.add_argument("--mc-samples", type=int, default=0,
                    help="also estimate the area by Monte Carlo")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("exhaustive", help="largest chi_c over all n-vertex graphs")
    sp.add_argument("n", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_exhaustive)

    sp = sub.add_parser("sweep", help="Monte Carlo sweep over G(n, r)")
    sp.add_argument("config")
    sp.add_argument("--seed", type=int, default=None, help="override every config's seed")
    sp.add_argument("--trials", type=int, default=None, help="override every config's trials")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvariantBreach, MarginCollapse, AssertionError) as exc:
        print(f"error: invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (ParseError, DimensionMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
