"""End-to-end extremality checks over graph catalogs.

Every check compares a d-regular graph against the complete graph on d+1
vertices, exactly: the occupancy fraction directly, and the partition
function / homomorphism count after clearing the fractional exponent by
raising both sides to integer powers.  Equality must occur precisely on
unions of complete graphs on d+1 vertices; any other outcome is a
red-alert finding, reported as data so it can never be silently dropped.

The two-activity scan covers the open questions: it records exact
comparisons of the bivariate partition function and of the weighted
occupancy fraction over a catalog and an activity-pair grid.  A genuine
violation there would be a research finding, not a bug, and gets a
distinguished exit status in the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .graphs import (
    Graph,
    disjoint_union,
    is_union_of_complete,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_petersen,
    make_prism,
    make_random_regular,
)
from .numerics import format_rational
from .occupancy import (
    ActivityPair,
    alpha_K,
    occupancy_fraction,
    weighted_occupancy,
    weighted_occupancy_K,
)
from .partition import wr_partition, wr_partition_bivariate

EQUAL = "="
LESS = "<"
GREATER = ">"


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one exact comparison against the complete-graph benchmark."""

    graph: str
    n: int
    d: int
    check: str
    activity: str
    lhs: Fraction
    rhs: Fraction
    relation: str
    equality_expected: bool

    @property
    def ok(self) -> bool:
        """The characterisation holds: equality exactly on unions of cliques."""
        return (self.relation == EQUAL) == self.equality_expected and (
            self.relation != GREATER
        )


def _relation(lhs: Fraction, rhs: Fraction) -> str:
    if lhs == rhs:
        return EQUAL
    return LESS if lhs < rhs else GREATER


def _require_regular(g: Graph, d: int) -> None:
    for v in range(g.n):
        if g.degree(v) != d:
            raise DomainError(
                f"graph {g.label or g!r} is not {d}-regular: "
                f"vertex {v} has degree {g.degree(v)}"
            )


def verify_occupancy_bound(g: Graph, d: int, lam: Fraction) -> BoundReport:
    """Exact comparison of the occupancy fraction against the clique value."""
    _require_regular(g, d)
    lam = Fraction(lam)
    lhs = occupancy_fraction(g, lam)
    rhs = alpha_K(d, lam)
    return BoundReport(
        graph=g.label or f"n{g.n}m{g.m}",
        n=g.n,
        d=d,
        check="occupancy",
        activity=format_rational(lam),
        lhs=lhs,
        rhs=rhs,
        relation=_relation(lhs, rhs),
        equality_expected=is_union_of_complete(g, d + 1),
    )


def verify_partition_bound(g: Graph, d: int, lam: Fraction) -> BoundReport:
    """Per-vertex partition-function bound, cleared of fractional exponents:
    P_G(lam)^(d+1) compared with P_clique(lam)^n."""
    _require_regular(g, d)
    lam = Fraction(lam)
    lhs = Fraction(wr_partition(g).eval(lam)) ** (d + 1)
    rhs = Fraction(wr_partition(make_complete(d + 1)).eval(lam)) ** g.n
    return BoundReport(
        graph=g.label or f"n{g.n}m{g.m}",
        n=g.n,
        d=d,
        check="partition",
        activity=format_rational(lam),
        lhs=lhs,
        rhs=rhs,
        relation=_relation(lhs, rhs),
        equality_expected=is_union_of_complete(g, d + 1),
    )


def verify_hom_bound(g: Graph, d: int) -> BoundReport:
    """Counting specialisation at activity 1, in exact integers."""
    report = verify_partition_bound(g, d, Fraction(1))
    return BoundReport(
        graph=report.graph,
        n=report.n,
        d=report.d,
        check="hom-count",
        activity="1",
        lhs=report.lhs,
        rhs=report.rhs,
        relation=report.relation,
        equality_expected=report.equality_expected,
    )


# ---------------------------------------------------------------------------
# catalogs


def catalog_d2() -> list[Graph]:
    """2-regular desk catalog: all cycles up to 12 plus unions of cycles."""
    graphs = [make_cycle(n) for n in range(3, 13)]
    graphs.append(disjoint_union(make_cycle(3), make_cycle(3)))
    graphs.append(
        disjoint_union(disjoint_union(make_cycle(3), make_cycle(3)), make_cycle(3))
    )
    graphs.append(disjoint_union(make_cycle(3), make_cycle(4)))
    graphs.append(disjoint_union(make_cycle(4), make_cycle(6)))
    graphs.append(disjoint_union(make_cycle(5), make_cycle(5)))
    graphs.append(disjoint_union(make_cycle(6), make_cycle(8)))
    return graphs


def catalog_d3(random_count: int = 20) -> list[Graph]:
    """3-regular desk catalog: named graphs plus seeded random regulars."""
    graphs = [
        make_complete(4),
        make_complete_bipartite(3, 3),
        make_petersen(),
        make_prism(3),
        make_prism(4),
        make_prism(5),
        make_prism(6),
        disjoint_union(make_complete(4), make_complete(4)),
    ]
    sizes = (8, 10, 14)
    for index in range(random_count):
        n = sizes[index % len(sizes)]
        graphs.append(make_random_regular(n, 3, seed=1000 + index))
    return graphs


def full_catalog() -> list[tuple[Graph, int]]:
    """The complete desk catalog as (graph, d) pairs."""
    out = [(g, 2) for g in catalog_d2()]
    out.extend((g, 3) for g in catalog_d3())
    return out


# ---------------------------------------------------------------------------
# two-activity scan


@dataclass(frozen=True)
class ScanFinding:
    """One exact two-activity comparison; violation=True is a counterexample."""

    graph: str
    n: int
    d: int
    lambda1: Fraction
    lambda2: Fraction
    check: str
    lhs: Fraction
    rhs: Fraction
    relation: str
    equality_expected: bool

    @property
    def violation(self) -> bool:
        return self.relation == GREATER


def conjecture_scan(
    catalog: Iterable[tuple[Graph, int]], grid: Sequence[ActivityPair]
) -> list[ScanFinding]:
    """Exact two-activity comparisons over a catalog and activity grid.

    For each graph and pair: (a) the bivariate partition bound with
    exponents cleared, and (b) the weighted occupancy fraction against
    the clique value.  Everything is recorded; rows with relation '>' are
    counterexamples to the open conjectures and must be surfaced.
    """
    findings = []
    for g, d in catalog:
        _require_regular(g, d)
        expected = is_union_of_complete(g, d + 1)
        p_g = wr_partition_bivariate(g)
        p_k = wr_partition_bivariate(make_complete(d + 1))
        for act in grid:
            x, y = Fraction(act.lambda1), Fraction(act.lambda2)
            lhs = Fraction(p_g.eval(x, y)) ** (d + 1)
            rhs = Fraction(p_k.eval(x, y)) ** g.n
            findings.append(
                ScanFinding(
                    graph=g.label or f"n{g.n}m{g.m}",
                    n=g.n,
                    d=d,
                    lambda1=x,
                    lambda2=y,
                    check="partition",
                    lhs=lhs,
                    rhs=rhs,
                    relation=_relation(lhs, rhs),
                    equality_expected=expected,
                )
            )
            w_g = weighted_occupancy(g, act)
            w_k = weighted_occupancy_K(d, act)
            findings.append(
                ScanFinding(
                    graph=g.label or f"n{g.n}m{g.m}",
                    n=g.n,
                    d=d,
                    lambda1=x,
                    lambda2=y,
                    check="weighted-occupancy",
                    lhs=w_g,
                    rhs=w_k,
                    relation=_relation(w_g, w_k),
                    equality_expected=expected,
                )
            )
    return findings


def findings_csv(findings: Iterable[ScanFinding]) -> str:
    lines = ["graph,n,d,lambda1,lambda2,check,lhs,rhs,relation,equality_expected"]
    for f in findings:
        lines.append(
            ",".join(
                (
                    f.graph,
                    str(f.n),
                    str(f.d),
                    format_rational(f.lambda1),
                    format_rational(f.lambda2),
                    f.check,
                    format_rational(f.lhs),
                    format_rational(f.rhs),
                    f.relation,
                    "1" if f.equality_expected else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"


def bound_reports_csv(reports: Iterable[BoundReport]) -> str:
    lines = ["graph,n,d,check,lambda,lhs,rhs,relation,equality_expected,ok"]
    for r in reports:
        lines.append(
            ",".join(
                (
                    r.graph,
                    str(r.n),
                    str(r.d),
                    r.check,
                    r.activity,
                    format_rational(r.lhs),
                    format_rational(r.rhs),
                    r.relation,
                    "1" if r.equality_expected else "0",
                    "1" if r.ok else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"
