"""Configuration enumeration, local polynomials, and the alpha estimates."""

import random
from fractions import Fraction
from itertools import product

import pytest

from wrkit.configurations import (
    Configuration,
    complete_neighbourhood_config,
    empty_lists_config,
    enumerate_configs,
    local_partition_functions,
    parse_configuration,
    per_colour_alpha,
    serialize_configuration,
    single_colour_config,
    alpha_u,
    alpha_v,
)
from wrkit.errors import CapacityError, DomainError, UsageError
from wrkit.graphs import (
    Graph,
    from_edges,
    graphs_up_to_iso,
    graph_from_code,
    make_complete,
    permute_labels,
)
from wrkit.numerics import IntPolynomial, binomial_power

F = Fraction


def star_oracle(config, lam):
    """Independent enumeration of centre + neighbourhood colourings.

    Returns (P[v coloured], mean over u of P[u coloured]) by brute force
    over all maps, with list and adjacency constraints applied directly.
    """
    d = config.d
    total = F(0)
    centre_coloured = F(0)
    neighbour_coloured = [F(0)] * d
    for colouring in product((0, 1, 2), repeat=d + 1):
        centre = colouring[d]
        ok = True
        for u in range(d):
            c = colouring[u]
            if c and not (config.lists[u] & c):
                ok = False
                break
            if c and centre and c + centre == 3:
                ok = False
                break
            if c:
                rest = config.graph.adj[u] & ((1 << u) - 1)
                while rest:
                    low = rest & -rest
                    if colouring[low.bit_length() - 1] + c == 3:
                        ok = False
                        break
                    rest ^= low
            if not ok:
                break
        if not ok:
            continue
        weight = lam ** (d + 1 - colouring.count(0))
        total += weight
        if centre:
            centre_coloured += weight
        for u in range(d):
            if colouring[u]:
                neighbour_coloured[u] += weight
    return centre_coloured / total, sum(neighbour_coloured) / (d * total)


def test_stats_empty_lists():
    stats = local_partition_functions(empty_lists_config(2))
    assert stats.p0 == IntPolynomial([1])
    assert stats.p12 == IntPolynomial([2])
    assert stats.pc == IntPolynomial([1, 2])
    assert stats.lists_all_equal and not stats.has_dichromatic


def test_stats_complete_neighbourhood():
    stats = local_partition_functions(complete_neighbourhood_config(2))
    assert stats.p0 == 2 * binomial_power(2) - 1
    assert stats.p12 == 2 * binomial_power(2)
    assert stats.pc == 2 * binomial_power(3) - 1
    assert not stats.has_dichromatic


def test_stats_single_colour():
    stats = local_partition_functions(single_colour_config(2, 1))
    assert stats.p0 == binomial_power(2)
    assert stats.p12 == binomial_power(2) + 1
    assert stats.pc == binomial_power(3) + IntPolynomial([0, 1])
    assert (stats.a1, stats.a2) == (2, 0)


def test_stats_single_vs_binomial():
    rng = random.Random(5)
    for _ in range(30):
        d = rng.randint(1, 5)
        code = rng.randrange(1 << (d * (d - 1) // 2))
        lists = tuple(rng.randint(0, 3) for _ in range(d))
        stats = local_partition_functions(Configuration(graph_from_code(d, code), lists))
        assert stats.p1 == binomial_power(stats.a1)
        assert stats.p2 == binomial_power(stats.a2)
        assert stats.p12 == stats.p1 + stats.p2
        assert stats.pc == stats.p0 + stats.p12.shift(1)


def test_positivity_assumptions():
    # 2*p0 - p12 > 0 and p0' > 0 at positive activities once a list is non-empty
    for config in enumerate_configs(3):
        stats = local_partition_functions(config)
        gap = 2 * stats.p0 - stats.p12
        if stats.a1 == 0 and stats.a2 == 0:
            assert gap == IntPolynomial()
            continue
        for lam in (F(1, 7), F(1), F(12)):
            assert gap.eval(lam) > 0
            assert stats.p0.derivative().eval(lam) > 0


def test_alpha_examples_d2():
    assert alpha_v(empty_lists_config(2), F(1)) == F(2, 3)
    assert alpha_u(empty_lists_config(2), F(1)) == F(0)
    assert alpha_v(single_colour_config(2, 1), F(1)) == F(5, 9)
    assert alpha_u(single_colour_config(2, 1), F(1)) == F(4, 9)
    ck = complete_neighbourhood_config(2)
    assert alpha_v(ck, F(1)) == alpha_u(ck, F(1)) == F(8, 15)


def test_alpha_complete_matches_closed_form():
    from wrkit.occupancy import alpha_K

    rng = random.Random(9)
    for d in (1, 2, 3, 4):
        ck = complete_neighbourhood_config(d)
        for _ in range(5):
            lam = F(rng.randint(1, 20), rng.randint(1, 20))
            assert alpha_v(ck, lam) == alpha_K(d, lam)
            assert alpha_u(ck, lam) == alpha_K(d, lam)


def test_alpha_domain_error():
    with pytest.raises(DomainError):
        alpha_v(empty_lists_config(2), F(0))
    with pytest.raises(DomainError):
        alpha_u(empty_lists_config(2), F(-1))


def test_formula_matches_star_enumeration():
    # spatial Markov property made concrete: closed formulas equal the
    # brute-force conditional probabilities on the star
    lam = F(2, 3)
    for d in (1, 2, 3):
        for config in enumerate_configs(d):
            ov, ou = star_oracle(config, lam)
            assert alpha_v(config, lam) == ov, config.key_text()
            assert alpha_u(config, lam) == ou, config.key_text()


def test_formula_matches_star_enumeration_d4_sample():
    rng = random.Random(31)
    configs = list(enumerate_configs(4))
    lam = F(3, 2)
    for config in rng.sample(configs, 60):
        ov, ou = star_oracle(config, lam)
        assert alpha_v(config, lam) == ov
        assert alpha_u(config, lam) == ou


def test_per_colour_alpha():
    lam = F(1)
    # colour-symmetric configuration: the two colours split evenly
    ck = complete_neighbourhood_config(3)
    a1v, a2v, a1u, a2u = per_colour_alpha(ck, lam)
    assert a1v == a2v and a1u == a2u

    # colour 2 unavailable everywhere
    c1 = single_colour_config(2, 1)
    a1v, a2v, a1u, a2u = per_colour_alpha(c1, lam)
    assert a2u == 0
    assert a1u == F(4, 9)
    assert a1v + a2v == alpha_v(c1, lam)


def test_enumerate_counts():
    assert len(enumerate_configs(1)) == 4
    assert len(enumerate_configs(2)) == 20
    # regression constants; cross-checked by a Burnside count over the
    # automorphism groups of the 4 (resp. 11) graph classes
    assert len(enumerate_configs(3)) == 120
    assert len(enumerate_configs(4)) == 996
    # regression constants only (no independent count)
    assert len(enumerate_configs(5)) == 12208
    assert len(enumerate_configs(6)) == 241520


def test_per_colour_sums_consistent_d4():
    # per_colour_alpha also asserts internally that its star enumeration
    # reproduces the closed-form alpha_v and alpha_u; sweep all of d=4
    lam = F(2, 3)
    for config in enumerate_configs(4):
        a1v, a2v, a1u, a2u = per_colour_alpha(config, lam)
        assert a1v + a2v == alpha_v(config, lam)
        assert a1u + a2u == alpha_u(config, lam)


def test_enumerate_d1_lists():
    lists = sorted(c.lists for c in enumerate_configs(1))
    assert lists == [(0,), (1,), (2,), (3,)]


def test_enumerate_membership():
    keys = {c.key() for c in enumerate_configs(2)}
    k2 = make_complete(2)
    assert Configuration(k2, (3, 3)).key() in keys
    assert Configuration(Graph(2, (0, 0)), (0, 0)).key() in keys


def test_enumerate_reps_are_canonical_and_distinct():
    for d in (1, 2, 3):
        configs = enumerate_configs(d)
        keys = [c.key() for c in configs]
        assert len(set(keys)) == len(keys)
        for config, key in zip(configs, keys):
            # the representative is its own canonical form
            from wrkit.graphs import edge_code

            assert key == (d, edge_code(config.graph), config.lists)


def test_dedup_soundness_under_relabeling():
    rng = random.Random(41)
    keys3 = {c.key() for c in enumerate_configs(3)}
    for config in rng.sample(list(enumerate_configs(3)), 20):
        perm = list(range(3))
        rng.shuffle(perm)
        permuted_graph = from_edges(
            3, [(perm[u], perm[v]) for u, v in config.graph.edges()]
        )
        permuted = Configuration(permuted_graph, permute_labels(config.lists, perm))
        assert permuted.key() in keys3
        assert permuted.key() == config.key()
        a = local_partition_functions(config)
        b = local_partition_functions(permuted)
        assert (a.a1, a.a2, a.p0, a.p12) == (b.a1, b.a2, b.p0, b.p12)
        assert alpha_v(config, F(2)) == alpha_v(permuted, F(2))
        assert alpha_u(config, F(2)) == alpha_u(permuted, F(2))


def test_full_lists_dichromatic_iff_not_complete():
    # with both colours allowed everywhere, only the complete graph
    # forbids using both colours at once
    for d in range(1, 7):
        complete_code = (1 << (d * (d - 1) // 2)) - 1
        for code, _ in graphs_up_to_iso(d):
            graph = graph_from_code(d, code)
            stats = local_partition_functions(Configuration(graph, (3,) * d))
            assert stats.has_dichromatic == (code != complete_code)


def test_capacity_and_usage_errors():
    with pytest.raises(CapacityError):
        enumerate_configs(7)
    with pytest.raises(UsageError):
        enumerate_configs(0)
    with pytest.raises(CapacityError):
        local_partition_functions(Configuration(Graph(9, (0,) * 9), (3,) * 9))
    with pytest.raises(UsageError):
        Configuration(Graph(2, (0, 0)), (4, 0))
    with pytest.raises(UsageError):
        single_colour_config(2, 3)


def test_text_form_round_trip():
    config = Configuration(make_complete(3), (3, 1, 0))
    text = serialize_configuration(config)
    parsed = parse_configuration(text)
    assert parsed.graph.adj == config.graph.adj
    assert parsed.lists == config.lists
    assert "lists: 12 1 -" in text


def test_text_form_errors():
    from wrkit.errors import ParseError

    with pytest.raises(ParseError):
        parse_configuration("2 0\n")  # no lists line
    with pytest.raises(ParseError):
        parse_configuration("2 0\nlists: 12\n")  # wrong list count
    with pytest.raises(ParseError):
        parse_configuration("2 0\nlists: 12 21\n")  # bad token
