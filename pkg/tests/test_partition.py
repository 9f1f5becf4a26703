"""Partition polynomials: closed forms, the brute-force oracle, bivariate checks."""

import random
from fractions import Fraction
from itertools import product

import pytest

from wrkit.errors import CapacityError
from wrkit.graphs import (
    Graph,
    disjoint_union,
    from_edges,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_petersen,
    make_prism,
)
from wrkit.numerics import BivariatePolynomial, IntPolynomial, binomial_power
from wrkit.partition import (
    hom_count_wr,
    is_valid_colouring,
    wr_partition,
    wr_partition_bivariate,
    wr_partition_brute,
)


def bivariate_brute(g):
    """Independent oracle: accumulate activity exponents over all 3^n maps."""
    coeffs = {}
    for colouring in product((0, 1, 2), repeat=g.n):
        if is_valid_colouring(g, colouring):
            key = (colouring.count(1), colouring.count(2))
            coeffs[key] = coeffs.get(key, 0) + 1
    return BivariatePolynomial(coeffs)


def test_brute_examples():
    assert wr_partition_brute(make_complete(3)) == IntPolynomial([1, 6, 6, 2])
    assert wr_partition_brute(Graph(2, (0, 0))) == IntPolynomial([1, 2]) ** 2
    assert wr_partition_brute(make_cycle(5)) == IntPolynomial([1, 10, 30, 30, 10, 2])


def test_partition_examples():
    assert wr_partition(make_complete(2)) == IntPolynomial([1, 4, 2])
    assert wr_partition(make_cycle(4)) == IntPolynomial([1, 8, 16, 8, 2])
    assert wr_partition(Graph(1, (0,))) == IntPolynomial([1, 2])


def test_complete_graph_closed_form():
    # 2*(1+lam)^(d+1) - 1, coefficient-exact for d = 1..8
    for d in range(1, 9):
        assert wr_partition(make_complete(d + 1)) == 2 * binomial_power(d + 1) - 1


def test_oracle_equivalence_small_catalog():
    graphs = [
        make_cycle(3),
        make_cycle(6),
        make_complete(4),
        make_complete_bipartite(3, 3),
        make_prism(3),
        make_petersen(),
        disjoint_union(make_cycle(3), make_cycle(4)),
    ]
    for g in graphs:
        assert wr_partition(g) == wr_partition_brute(g), g.label


def test_multiplicativity():
    rng = random.Random(2)
    for _ in range(10):
        n1, n2 = rng.randint(1, 5), rng.randint(1, 5)
        g1 = random_graph(rng, n1)
        g2 = random_graph(rng, n2)
        assert wr_partition(disjoint_union(g1, g2)) == wr_partition(g1) * wr_partition(g2)


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    return from_edges(n, edges)


def test_low_order_coefficients():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 7))
        p = wr_partition(g)
        assert p.coeffs[0] == 1  # the all-uncoloured map
        assert p.coeffs[1] == 2 * g.n  # one coloured vertex, two colour choices


def test_hom_counts():
    assert hom_count_wr(make_complete(2)) == 7
    assert hom_count_wr(make_complete(4)) == 31
    assert hom_count_wr(make_cycle(4)) == 35


def test_bivariate_k2():
    expected = BivariatePolynomial(
        {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (0, 2): 1}
    )
    assert wr_partition_bivariate(make_complete(2)) == expected
    assert expected == bivariate_brute(make_complete(2))
    assert expected.eval(1, 1) == 7


def test_bivariate_oracle_and_symmetry():
    rng = random.Random(6)
    graphs = [make_cycle(4), make_complete(3), make_prism(3)]
    graphs += [random_graph(rng, rng.randint(1, 6)) for _ in range(10)]
    for g in graphs:
        p = wr_partition_bivariate(g)
        assert p == bivariate_brute(g)
        assert p.swap_variables() == p
        assert p.diagonal() == wr_partition(g)


def test_bivariate_diagonal_on_catalog():
    for g in (make_complete(4), make_complete_bipartite(3, 3), make_petersen()):
        assert wr_partition_bivariate(g).diagonal() == wr_partition(g)


def test_capacity_caps():
    with pytest.raises(CapacityError):
        wr_partition(Graph(25, (0,) * 25))
    with pytest.raises(CapacityError):
        wr_partition_bivariate(Graph(25, (0,) * 25))
    with pytest.raises(CapacityError):
        wr_partition_brute(Graph(13, (0,) * 13))
    with pytest.raises(CapacityError):
        hom_count_wr(Graph(25, (0,) * 25))


def test_valid_colouring_predicate():
    k2 = make_complete(2)
    assert is_valid_colouring(k2, (1, 1))
    assert is_valid_colouring(k2, (0, 2))
    assert not is_valid_colouring(k2, (1, 2))


def test_partition_eval_matches_weighted_count():
    # P at a rational activity equals the brute-force weighted sum
    g = make_cycle(5)
    lam = Fraction(2, 3)
    total = Fraction(0)
    for colouring in product((0, 1, 2), repeat=5):
        if is_valid_colouring(g, colouring):
            total += lam ** (5 - colouring.count(0))
    assert wr_partition(g).eval(lam) == total
