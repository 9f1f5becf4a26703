"""Extremality bound checks and the two-activity conjecture scan."""

from fractions import Fraction

import pytest

from wrkit.errors import DomainError
from wrkit.extremal import (
    BoundReport,
    bound_reports_csv,
    catalog_d2,
    catalog_d3,
    conjecture_scan,
    findings_csv,
    full_catalog,
    verify_hom_bound,
    verify_occupancy_bound,
    verify_partition_bound,
)
from wrkit.graphs import (
    disjoint_union,
    is_d_regular,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_petersen,
)
from wrkit.occupancy import ActivityPair
from wrkit.partition import wr_partition_brute

F = Fraction


def test_occupancy_bound_examples():
    r = verify_occupancy_bound(make_cycle(5), 2, F(1))
    assert (r.lhs, r.relation, r.rhs) == (F(42, 83), "<", F(8, 15))
    assert not r.equality_expected and r.ok

    union = disjoint_union(make_complete(3), make_complete(3))
    r = verify_occupancy_bound(union, 2, F(1))
    assert r.relation == "=" and r.equality_expected and r.ok

    r = verify_occupancy_bound(make_petersen(), 3, F(1))
    assert r.relation == "<" and r.rhs == F(16, 31) and r.ok


def test_partition_bound_examples():
    r = verify_partition_bound(make_cycle(4), 2, F(1))
    assert (r.lhs, r.rhs) == (42875, 50625)
    assert r.relation == "<" and r.ok

    union = disjoint_union(make_complete(4), make_complete(4))
    r = verify_partition_bound(union, 3, F(1))
    assert r.relation == "=" and r.lhs == 31**8

    r = verify_partition_bound(make_complete_bipartite(3, 3), 3, F(1))
    assert r.relation == "<" and r.ok


def test_hom_bound_examples():
    r = verify_hom_bound(make_complete(2), 1)
    assert r.relation == "=" and r.lhs == r.rhs == 49

    r = verify_hom_bound(make_cycle(6), 2)
    hom_c6 = wr_partition_brute(make_cycle(6)).eval(1)
    assert r.lhs == hom_c6**3
    assert r.lhs < 15**6 and r.rhs == 15**6

    r = verify_hom_bound(make_petersen(), 3)
    assert r.relation == "<" and r.rhs == 31**10


def test_hom_bound_is_partition_bound_at_one():
    for g, d in ((make_cycle(5), 2), (make_petersen(), 3)):
        a = verify_hom_bound(g, d)
        b = verify_partition_bound(g, d, F(1))
        assert (a.lhs, a.rhs, a.relation) == (b.lhs, b.rhs, b.relation)


def test_non_regular_rejected():
    with pytest.raises(DomainError, match="vertex"):
        verify_occupancy_bound(make_complete_bipartite(2, 3), 2, F(1))
    with pytest.raises(DomainError):
        verify_partition_bound(make_cycle(4), 3, F(1))


def test_union_scaling_consistency():
    g = make_cycle(7)
    gg = disjoint_union(g, g)
    for lam in (F(1, 2), F(3)):
        assert (
            verify_occupancy_bound(g, 2, lam).relation
            == verify_occupancy_bound(gg, 2, lam).relation
        )


def test_bound_directions_agree():
    for g, d in ((make_cycle(5), 2), (make_complete(4), 3), (make_petersen(), 3)):
        for lam in (F(1, 4), F(1), F(10)):
            occ = verify_occupancy_bound(g, d, lam)
            part = verify_partition_bound(g, d, lam)
            assert occ.relation == part.relation


def test_catalogs_are_regular():
    for g in catalog_d2():
        assert is_d_regular(g, 2), g.label
    for g in catalog_d3():
        assert is_d_regular(g, 3), g.label
    assert len(catalog_d3()) == 28  # 8 named + 20 random


def test_scan_diagonal_matches_proven_bound():
    catalog = [(make_cycle(4), 2), (make_cycle(5), 2), (make_complete(3), 2)]
    findings = conjecture_scan(catalog, [ActivityPair(F(1), F(1))])
    assert all(not f.violation for f in findings)
    # the proven single-activity statement: strict unless a clique union
    for f in findings:
        assert (f.relation == "=") == f.equality_expected


def test_scan_union_equality():
    union = disjoint_union(make_complete(3), make_complete(3))
    findings = conjecture_scan([(union, 2)], [ActivityPair(F(2), F(1))])
    assert all(f.relation == "=" for f in findings)
    assert all(not f.violation for f in findings)


def test_scan_small_grid_no_violations():
    grid = [
        ActivityPair(F(1), F(1)),
        ActivityPair(F(2), F(1)),
        ActivityPair(F(1), F(1, 2)),
    ]
    catalog = [(make_cycle(n), 2) for n in (3, 4, 5, 6)]
    catalog.append((make_complete(4), 3))
    catalog.append((make_complete_bipartite(3, 3), 3))
    findings = conjecture_scan(catalog, grid)
    assert len(findings) == len(catalog) * len(grid) * 2
    assert all(not f.violation for f in findings)


def test_findings_csv_header():
    findings = conjecture_scan([(make_cycle(3), 2)], [ActivityPair(F(1), F(1))])
    csv = findings_csv(findings)
    assert csv.splitlines()[0] == (
        "graph,n,d,lambda1,lambda2,check,lhs,rhs,relation,equality_expected"
    )
    assert len(csv.splitlines()) == 3


def test_bound_reports_csv():
    reports = [verify_occupancy_bound(make_cycle(5), 2, F(1))]
    csv = bound_reports_csv(reports)
    assert "42/83" in csv and "8/15" in csv


def test_full_catalog_shape():
    catalog = full_catalog()
    assert all(is_d_regular(g, d) for g, d in catalog)
    assert {d for _, d in catalog} == {2, 3}


def test_report_ok_flags_greater_as_failure():
    bad = BoundReport(
        graph="x", n=3, d=2, check="occupancy", activity="1",
        lhs=F(2), rhs=F(1), relation=">", equality_expected=False,
    )
    assert not bad.ok
