"""Neighbourhood configurations with boundary colour lists.

A configuration pairs a graph H on d vertices (the neighbourhood of some
centre vertex in a d-regular graph) with one allowed-colour list per
vertex, each list a subset of {1, 2} encoding which colours the outside
environment still permits.  Lists are stored as 2-bit masks: bit 0 set
means colour 1 is allowed, bit 1 means colour 2.

From a configuration we derive its local partition polynomials:

  p0    weight of valid list-respecting colourings of H alone
  p1/p2 same, restricted to one colour (always (1+lam)**a_i where a_i
        counts lists containing colour i)
  p12   p1 + p2
  pc    p0 + lam * p12, the partition function of the centre vertex
        together with H

and the two local occupancy estimates at a given activity:

  alpha_v   probability the centre vertex is coloured
  alpha_u   expected fraction of coloured neighbours

Enumeration of all configurations for a given d is done up to
label-preserving isomorphism: graphs are enumerated up to isomorphism
first, then list assignments are deduplicated per graph by orbits of its
automorphism group.  The representative kept for each class is exactly
the one whose (edge code, lists) pair is the canonical key, so the result
matches deduplication by canonical_labelled_form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import CapacityError, DomainError, ParseError, UsageError
from .graphs import (
    Graph,
    canonical_labelled_form,
    edge_code,
    graph_from_code,
    graphs_up_to_iso,
    parse_edge_list,
    permute_labels,
    serialize_edge_list,
)
from .numerics import IntPolynomial, binomial_power

STATS_CAP = 8  # colouring enumeration is at most 3^d
ENUMERATION_CAP = 6  # labelled graphs times list assignments before dedup

NO_COLOURS = 0
COLOUR_1 = 1
COLOUR_2 = 2
BOTH_COLOURS = 3

_LIST_TEXT = {NO_COLOURS: "-", COLOUR_1: "1", COLOUR_2: "2", BOTH_COLOURS: "12"}
_TEXT_LIST = {v: k for k, v in _LIST_TEXT.items()}


@dataclass(frozen=True)
class Configuration:
    """A d-vertex neighbourhood graph with per-vertex allowed-colour masks."""

    graph: Graph
    lists: tuple[int, ...]

    def __post_init__(self):
        if len(self.lists) != self.graph.n:
            raise UsageError("one colour list per vertex required")
        if any(mask not in (0, 1, 2, 3) for mask in self.lists):
            raise UsageError("colour lists must be subsets of {1, 2}")

    @property
    def d(self) -> int:
        return self.graph.n

    def key(self) -> tuple:
        """Canonical key under label-preserving isomorphism."""
        return canonical_labelled_form(self.graph, self.lists)

    def key_text(self) -> str:
        """Compact one-line rendering of the canonical representative."""
        n, code, lists = self.key()
        rep = graph_from_code(n, code)
        edges = ",".join(f"{u}-{v}" for u, v in rep.edges())
        lists_text = ",".join(_LIST_TEXT[mask] for mask in lists)
        return f"d={n};edges={edges};lists={lists_text}"


def empty_lists_config(d: int, graph: Graph | None = None) -> Configuration:
    """All lists empty (edges of H are immaterial for this class)."""
    g = graph if graph is not None else Graph(d, (0,) * d)
    return Configuration(g, (NO_COLOURS,) * d)


def single_colour_config(d: int, colour: int, graph: Graph | None = None) -> Configuration:
    """All lists equal to one colour (edges again immaterial)."""
    if colour not in (1, 2):
        raise UsageError(f"colour must be 1 or 2, got {colour}")
    g = graph if graph is not None else Graph(d, (0,) * d)
    return Configuration(g, (colour,) * d)


def complete_neighbourhood_config(d: int) -> Configuration:
    """Complete neighbourhood with full lists: the configuration a clique induces."""
    full = (1 << d) - 1
    g = Graph(d, tuple(full ^ (1 << v) for v in range(d)))
    return Configuration(g, (BOTH_COLOURS,) * d)


@dataclass(frozen=True)
class ConfigStats:
    """All activity-independent local quantities of a configuration."""

    a1: int
    a2: int
    p0: IntPolynomial
    p1: IntPolynomial
    p2: IntPolynomial
    p12: IntPolynomial
    pc: IntPolynomial
    lists_all_equal: bool
    has_dichromatic: bool


def _iter_valid_colourings(adj: tuple[int, ...], options: list[tuple[int, ...]]):
    """Yield valid colourings (no adjacent 1-2 pair), vertex by vertex.

    Backtracking over per-vertex allowed colours; a partial assignment is
    extended only while consistent, so only valid colourings are visited.
    """
    n = len(options)
    colouring = [0] * n

    def extend(v: int):
        if v == n:
            yield tuple(colouring)
            return
        earlier = adj[v] & ((1 << v) - 1)
        for c in options[v]:
            if c:
                other = 3 - c
                ok = True
                rest = earlier
                while rest:
                    low = rest & -rest
                    if colouring[low.bit_length() - 1] == other:
                        ok = False
                        break
                    rest ^= low
                if not ok:
                    continue
            colouring[v] = c
            yield from extend(v + 1)
        colouring[v] = 0

    yield from extend(0)


def _list_options(mask: int) -> tuple[int, ...]:
    opts = [0]
    if mask & 1:
        opts.append(1)
    if mask & 2:
        opts.append(2)
    return tuple(opts)


@lru_cache(maxsize=None)
def local_partition_functions(config: Configuration) -> ConfigStats:
    """Enumerate the neighbourhood colourings and collect all local polynomials."""
    d = config.d
    if d > STATS_CAP:
        raise CapacityError(f"local enumeration capped at {STATS_CAP} vertices, got {d}")
    adj = config.graph.adj
    options = [_list_options(mask) for mask in config.lists]

    p0 = [0] * (d + 1)
    has_dichromatic = False
    for colouring in _iter_valid_colourings(adj, options):
        coloured = d - colouring.count(0)
        p0[coloured] += 1
        if not has_dichromatic and 1 in colouring and 2 in colouring:
            has_dichromatic = True

    # single-colour restrictions, enumerated the same way
    single = []
    for colour in (1, 2):
        restricted = [
            tuple(c for c in opts if c in (0, colour)) for opts in options
        ]
        coeffs = [0] * (d + 1)
        for colouring in _iter_valid_colourings(adj, restricted):
            coeffs[d - colouring.count(0)] += 1
        single.append(IntPolynomial(coeffs))
    p1, p2 = single

    a1 = sum(1 for mask in config.lists if mask & 1)
    a2 = sum(1 for mask in config.lists if mask & 2)
    assert p1 == binomial_power(a1) and p2 == binomial_power(a2)

    p0_poly = IntPolynomial(p0)
    p12 = p1 + p2
    pc = p0_poly + p12.shift(1)
    # dichromatic colourings are exactly the gap between p0 and the
    # monochromatic-or-empty total p1 + p2 - 1
    assert has_dichromatic == (p0_poly != p12 - 1)

    lists_all_equal = len(set(config.lists)) == 1
    return ConfigStats(
        a1=a1,
        a2=a2,
        p0=p0_poly,
        p1=p1,
        p2=p2,
        p12=p12,
        pc=pc,
        lists_all_equal=lists_all_equal,
        has_dichromatic=has_dichromatic,
    )


def _check_activity(lam: Fraction) -> None:
    if lam <= 0:
        raise DomainError(f"activity must be strictly positive, got {lam}")


def alpha_v(config: Configuration, lam: Fraction) -> Fraction:
    """Probability the centre vertex is coloured: lam * p12 / pc."""
    _check_activity(lam)
    stats = local_partition_functions(config)
    return Fraction(lam) * stats.p12.eval(lam) / stats.pc.eval(lam)


def alpha_u(config: Configuration, lam: Fraction) -> Fraction:
    """Expected coloured fraction of the neighbourhood:
    lam * (p0' + lam * p12') / (d * pc)."""
    _check_activity(lam)
    stats = local_partition_functions(config)
    lam = Fraction(lam)
    numer = stats.p0.derivative().eval(lam) + lam * stats.p12.derivative().eval(lam)
    return lam * numer / (config.d * stats.pc.eval(lam))


def _star_neighbour_weights(
    config: Configuration, lam: Fraction
) -> tuple[Fraction, list[list[Fraction]]]:
    """Enumerate joint colourings of centre + neighbourhood.

    Returns the total weight (equals pc at lam) and, per neighbourhood
    vertex, the weight carried by each of its three colours.
    """
    d = config.d
    # centre vertex is index d, adjacent to every neighbourhood vertex
    adj = tuple(mask | (1 << d) for mask in config.graph.adj) + (((1 << d) - 1),)
    options = [_list_options(mask) for mask in config.lists] + [(0, 1, 2)]
    total = Fraction(0)
    weights = [[Fraction(0)] * 3 for _ in range(d)]
    lam = Fraction(lam)
    for colouring in _iter_valid_colourings(adj, options):
        w = lam ** (d + 1 - colouring.count(0))
        total += w
        for u in range(d):
            weights[u][colouring[u]] += w
    return total, weights


def per_colour_alpha(
    config: Configuration, lam: Fraction
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Per-colour versions of alpha_v and alpha_u.

    The centre probabilities come from the closed formula lam * p_i / pc;
    the neighbour probabilities are computed by direct enumeration of the
    joint colourings of the centre-plus-neighbourhood star.  Their sums
    are checked against alpha_v and alpha_u.
    """
    _check_activity(lam)
    stats = local_partition_functions(config)
    lam = Fraction(lam)
    pc_value = stats.pc.eval(lam)
    a1v = lam * stats.p1.eval(lam) / pc_value
    a2v = lam * stats.p2.eval(lam) / pc_value

    total, weights = _star_neighbour_weights(config, lam)
    assert total == pc_value
    d = config.d
    a1u = sum(w[1] for w in weights) / (d * total)
    a2u = sum(w[2] for w in weights) / (d * total)

    assert a1v + a2v == alpha_v(config, lam)
    assert a1u + a2u == alpha_u(config, lam)
    return a1v, a2v, a1u, a2u


@lru_cache(maxsize=8)
def enumerate_configs(d: int) -> tuple[Configuration, ...]:
    """All configurations on d vertices, one canonical representative per
    label-preserving isomorphism class, sorted by canonical key.

    For each graph class, list assignments are deduplicated by orbits of
    the automorphism group; walking assignments in increasing order makes
    the first member of each orbit the lexicographic minimum, i.e. the
    canonical representative.
    """
    if d < 1:
        raise UsageError(f"degree must be >= 1, got {d}")
    if d > ENUMERATION_CAP:
        raise CapacityError(
            f"configuration enumeration capped at {ENUMERATION_CAP}, got {d}"
        )
    out = []
    for code, autos in graphs_up_to_iso(d):
        graph = graph_from_code(d, code)
        seen: set[tuple[int, ...]] = set()
        for assignment in product((0, 1, 2, 3), repeat=d):
            if assignment in seen:
                continue
            for perm in autos:
                seen.add(permute_labels(assignment, perm))
            out.append(Configuration(graph, assignment))
    out.sort(key=lambda c: (edge_code(c.graph), c.lists))
    return tuple(out)


# ---------------------------------------------------------------------------
# text form: edge-list of H, then one line "lists: l0 l1 ... l(d-1)"


def serialize_configuration(config: Configuration) -> str:
    lists_text = " ".join(_LIST_TEXT[mask] for mask in config.lists)
    return serialize_edge_list(config.graph) + f"lists: {lists_text}\n"


def parse_configuration(text: str) -> Configuration:
    lines = text.splitlines()
    lists_line = None
    graph_lines = []
    for lineno, raw in enumerate(lines, start=1):
        if raw.strip().startswith("lists:"):
            if lists_line is not None:
                raise ParseError("duplicate lists line", lineno)
            lists_line = (lineno, raw.strip())
        else:
            graph_lines.append(raw)
    if lists_line is None:
        raise ParseError("missing 'lists:' line")
    graph = parse_edge_list("\n".join(graph_lines))
    lineno, content = lists_line
    parts = content[len("lists:"):].split()
    if len(parts) != graph.n:
        raise ParseError(
            f"expected {graph.n} lists, got {len(parts)}", lineno
        )
    masks = []
    for part in parts:
        if part not in _TEXT_LIST:
            raise ParseError(f"bad colour list {part!r}", lineno)
        masks.append(_TEXT_LIST[part])
    return Configuration(graph, tuple(masks))
