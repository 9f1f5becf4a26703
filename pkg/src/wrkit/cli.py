"""Command-line surface for reproducible verification runs and CSV sweeps.

Exit codes: 0 success, 1 usage or parse error, 2 capacity exceeded,
3 verification mismatch, 4 conjecture counterexample found.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import dynamics, extremal, lp
from .configurations import enumerate_configs
from .errors import (
    CapacityError,
    DomainError,
    ParseError,
    RetryExhaustedError,
    UsageError,
    VerificationError,
)
from .graphs import (
    Graph,
    disjoint_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_petersen,
    make_prism,
    make_random_regular,
    parse_edge_list,
)
from .numerics import format_rational, parse_rational
from .occupancy import (
    ActivityPair,
    occupancy_by_colour,
    occupancy_fraction,
    weighted_occupancy,
)
from .partition import wr_partition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3
EXIT_COUNTEREXAMPLE = 4

DEFAULT_LAMBDA_GRID = ("1/4", "1/2", "1", "2", "10")
DEFAULT_PAIR_GRID = "1,1;2,1;10,1;1,1/2"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_builtin_atom(spec: str) -> Graph:
    name, _, params = spec.partition(":")
    args = [p for p in params.split(",") if p] if params else []
    try:
        if name == "complete":
            (n,) = map(int, args)
            return make_complete(n)
        if name in ("bipartite", "complete_bipartite"):
            a, b = map(int, args)
            return make_complete_bipartite(a, b)
        if name == "cycle":
            (n,) = map(int, args)
            return make_cycle(n)
        if name == "petersen":
            if args:
                raise UsageError("petersen takes no parameters")
            return make_petersen()
        if name == "prism":
            (k,) = map(int, args)
            return make_prism(k)
        if name == "random_regular":
            n, d, seed = map(int, args)
            return make_random_regular(n, d, seed)
    except ValueError as exc:
        raise UsageError(f"bad parameters in builtin spec {spec!r}") from exc
    raise UsageError(f"unknown builtin graph {name!r}")


def parse_builtin(spec: str) -> Graph:
    """Builtin graph spec: atoms joined by '+' form a disjoint union."""
    atoms = [atom.strip() for atom in spec.split("+")]
    graph = _parse_builtin_atom(atoms[0])
    for atom in atoms[1:]:
        graph = disjoint_union(graph, _parse_builtin_atom(atom))
    return graph.relabel(spec)


def _load_graph(args) -> Graph:
    if args.builtin and args.file:
        raise UsageError("give either --builtin or --file, not both")
    if args.builtin:
        return parse_builtin(args.builtin)
    if args.file:
        path = Path(args.file)
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        return parse_edge_list(text).relabel(str(path))
    raise UsageError("a graph source is required: --builtin or --file")


def _add_graph_flags(sub) -> None:
    sub.add_argument("--builtin", help="builtin graph, e.g. complete:4 or cycle:5+cycle:3")
    sub.add_argument("--file", help="edge-list file ('n m' header, then 'u v' lines)")


def _parse_pair_grid(text: str) -> list[ActivityPair]:
    grid = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad activity pair {chunk!r} (want p/q,p/q)")
        grid.append(ActivityPair(parse_rational(parts[0]), parse_rational(parts[1])))
    if not grid:
        raise UsageError("empty activity grid")
    return grid


def _write_or_print(text: str, csv_path: str | None) -> None:
    if csv_path:
        Path(csv_path).write_text(text)
        print(f"wrote {csv_path}")
    else:
        sys.stdout.write(text)


def cmd_partition(args) -> int:
    graph = _load_graph(args)
    poly = wr_partition(graph)
    print(f"graph {graph.label}: n={graph.n} m={graph.m}")
    print(f"P coefficients (low to high): {poly.to_text()}")
    print(f"P = {poly.pretty()}")
    print(f"hom count P(1) = {poly.eval(1)}")
    if args.lam is not None:
        lam = parse_rational(args.lam)
        print(f"P({format_rational(lam)}) = {format_rational(Fraction(poly.eval(lam)))}")
    return EXIT_OK


def cmd_occupancy(args) -> int:
    graph = _load_graph(args)
    if args.lambda1 or args.lambda2:
        if not (args.lambda1 and args.lambda2):
            raise UsageError("--lambda1 and --lambda2 must be given together")
        act = ActivityPair(parse_rational(args.lambda1), parse_rational(args.lambda2))
        a1, a2 = occupancy_by_colour(graph, act)
        weighted = weighted_occupancy(graph, act)
        print(f"graph {graph.label}: n={graph.n}")
        print(f"alpha_1 = {format_rational(a1)}")
        print(f"alpha_2 = {format_rational(a2)}")
        print(f"weighted = {format_rational(weighted)}")
        return EXIT_OK
    if args.lam is None:
        raise UsageError("--lambda (or --lambda1/--lambda2) is required")
    lam = parse_rational(args.lam)
    value = occupancy_fraction(graph, lam)
    print(f"graph {graph.label}: n={graph.n}")
    print(f"occupancy({format_rational(lam)}) = {format_rational(value)}")
    return EXIT_OK


def _catalog(name: str) -> list[tuple[Graph, int]]:
    if name == "d2":
        return [(g, 2) for g in extremal.catalog_d2()]
    if name == "d3":
        return [(g, 3) for g in extremal.catalog_d3()]
    if name == "all":
        return extremal.full_catalog()
    raise UsageError(f"unknown catalog {name!r} (want d2, d3 or all)")


def cmd_verify(args) -> int:
    if args.builtin or args.file:
        if args.d is None:
            raise UsageError("--d is required with an explicit graph")
        catalog = [(_load_graph(args), args.d)]
    else:
        catalog = _catalog(args.catalog)
    lams = [parse_rational(t) for t in (args.lam or list(DEFAULT_LAMBDA_GRID))]
    reports = []
    for graph, d in catalog:
        for lam in lams:
            reports.append(extremal.verify_occupancy_bound(graph, d, lam))
            reports.append(extremal.verify_partition_bound(graph, d, lam))
        reports.append(extremal.verify_hom_bound(graph, d))
    bad = [r for r in reports if not r.ok]
    for r in reports:
        status = "ok" if r.ok else "MISMATCH"
        print(
            f"{r.graph} d={r.d} {r.check} lambda={r.activity}: "
            f"{format_rational(r.lhs)} {r.relation} {format_rational(r.rhs)} "
            f"(equality expected: {'yes' if r.equality_expected else 'no'}) {status}"
        )
    if args.csv:
        _write_or_print(extremal.bound_reports_csv(reports), args.csv)
    print(f"{len(reports)} checks, {len(bad)} mismatches")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_lp(args) -> int:
    lam = parse_rational(args.lam)
    instance = lp.build_primal(args.d, lam)
    sol_simplex = lp.simplex_solve(instance)
    sol_enum = lp.vertex_enumeration_solve(instance)
    cert = lp.dual_certificate(args.d, lam)
    report = lp.verify_dual_feasibility(cert, args.d, lam)
    print(f"d={args.d} lambda={format_rational(lam)}: {len(instance.configs)} configurations")
    print(f"simplex optimum {format_rational(sol_simplex.value)}")
    for config, weight in sol_simplex.support:
        print(f"  support {config.key_text()} weight {format_rational(weight)}")
    print(f"enumeration optimum {format_rational(sol_enum.value)}")
    tight_texts = sorted(c.key_text() for c in report.tight_set)
    print(f"tight constraints ({len(tight_texts)}):")
    for text in tight_texts:
        print(f"  {text}")
    if args.csv:
        _write_or_print(lp.config_report_csv(report), args.csv)
    if sol_simplex.value != sol_enum.value:
        print("MISMATCH: solvers disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_dualcert(args) -> int:
    lam = parse_rational(args.lam)
    cert = lp.dual_certificate(args.d, lam)
    report = lp.verify_dual_feasibility(cert, args.d, lam)
    print(
        f"Lambda_p={format_rational(cert.lambda_p)} "
        f"Lambda_c={format_rational(cert.lambda_c)} "
        f"violations={len(report.violations)} tight={len(report.tight_set)}"
    )
    if args.csv:
        _write_or_print(lp.config_report_csv(report), args.csv)
    return EXIT_MISMATCH if report.violations else EXIT_OK


def cmd_configs(args) -> int:
    configs = enumerate_configs(args.d)
    print(f"d={args.d}: {len(configs)} configuration classes")
    if args.lam is not None:
        lam = parse_rational(args.lam)
        cert = lp.dual_certificate(args.d, lam)
        report = lp.verify_dual_feasibility(cert, args.d, lam)
        if args.csv:
            _write_or_print(lp.config_report_csv(report), args.csv)
        else:
            sys.stdout.write(lp.config_report_csv(report))
    else:
        for config in configs:
            print(config.key_text())
    return EXIT_OK


def cmd_sample(args) -> int:
    graph = _load_graph(args)
    try:
        lam = float(Fraction(args.lam))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad activity {args.lam!r}") from exc
    burnin = args.burnin if args.burnin is not None else 1000 * graph.n
    series: list[tuple[int, float]] | None = [] if args.csv else None
    estimate, stderr = dynamics.estimate_occupancy(
        graph,
        lam,
        burn_in=burnin,
        samples=args.samples,
        thinning=args.thin,
        seed=args.seed,
        series_out=series,
    )
    print(f"graph {graph.label}: n={graph.n}")
    print(f"rng {dynamics.RNG_ALGORITHM} seed={args.seed}")
    print(
        f"estimate {estimate:.6f} stderr {stderr:.6f} "
        f"(burnin={burnin} samples={args.samples} thin={args.thin})"
    )
    if args.csv:
        lines = ["step,coloured_fraction"]
        lines.extend(f"{step},{value:.6f}" for step, value in series)
        _write_or_print("\n".join(lines) + "\n", args.csv)
    return EXIT_OK


def cmd_scan(args) -> int:
    catalog = _catalog(args.catalog)
    grid = _parse_pair_grid(args.grid)
    findings = extremal.conjecture_scan(catalog, grid)
    violations = [f for f in findings if f.violation]
    if args.csv:
        _write_or_print(extremal.findings_csv(findings), args.csv)
    else:
        sys.stdout.write(extremal.findings_csv(findings))
    print(f"{len(findings)} comparisons, {len(violations)} violations")
    for f in violations:
        print(
            f"COUNTEREXAMPLE {f.graph} d={f.d} ({f.lambda1},{f.lambda2}) "
            f"{f.check}: {format_rational(f.lhs)} > {format_rational(f.rhs)}"
        )
    return EXIT_COUNTEREXAMPLE if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="exact partition polynomial")
    _add_graph_flags(p)
    p.add_argument("--lambda", dest="lam", help="activity as p/q")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("occupancy", help="exact occupancy fraction")
    _add_graph_flags(p)
    p.add_argument("--lambda", dest="lam", help="activity as p/q")
    p.add_argument("--lambda1", help="colour-1 activity as p/q")
    p.add_argument("--lambda2", help="colour-2 activity as p/q")
    p.set_defaults(func=cmd_occupancy)

    p = sub.add_parser("verify", help="extremality checks over a catalog")
    _add_graph_flags(p)
    p.add_argument("--catalog", default="all", help="d2, d3 or all")
    p.add_argument("--d", type=int, help="degree for an explicit graph")
    p.add_argument(
        "--lambda", dest="lam", action="append", help="activity p/q (repeatable)"
    )
    p.add_argument("--csv", help="write CSV report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lp", help="solve the local relaxation exactly")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="activity as p/q")
    p.add_argument("--csv", help="write per-configuration CSV here")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("dualcert", help="dual certificate and feasibility check")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="activity as p/q")
    p.add_argument("--csv", help="write per-configuration CSV here")
    p.set_defaults(func=cmd_dualcert)

    p = sub.add_parser("configs", help="enumerate configuration classes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", help="activity as p/q for the report")
    p.add_argument("--csv", help="write per-configuration CSV here")
    p.set_defaults(func=cmd_configs)

    p = sub.add_parser("sample", help="Glauber-dynamics occupancy estimate")
    _add_graph_flags(p)
    p.add_argument("--lambda", dest="lam", required=True, help="activity (float ok)")
    p.add_argument("--burnin", type=int, default=None, help="default 1000*n")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--thin", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write (step, fraction) time series here")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("scan", help="two-activity conjecture scan")
    p.add_argument("--catalog", default="all", help="d2, d3 or all")
    p.add_argument("--grid", default=DEFAULT_PAIR_GRID, help="pairs 'p/q,p/q;p/q,p/q'")
    p.add_argument("--csv", help="write findings CSV here")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (VerificationError, RetryExhaustedError) as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
