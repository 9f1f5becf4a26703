"""Finite simple undirected graphs with bitset adjacency.

Vertices are 0..n-1 and each vertex carries a neighbour bitmask, so
induced-subgraph work (component counts over vertex subsets) is plain
integer arithmetic.  Vertex subsets are represented as ints throughout.

Graphs are immutable after construction and hashable, which lets the
partition-function layer memoise per-graph results.  The optional label
is display-only and excluded from equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import CapacityError, ParseError, RetryExhaustedError, UsageError

ISO_CAP = 8  # brute-force isomorphism enumerates all vertex permutations
_PAIRING_RETRY_CAP = 1000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbour bitsets."""

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise UsageError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise UsageError(f"vertex {v} has a neighbour out of range")
            if (mask >> v) & 1:
                raise UsageError(f"self-loop on vertex {v}")
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise UsageError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with u < v."""
        out = []
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            u = v + 1
            while rest:
                if rest & 1:
                    out.append((v, u))
                rest >>= 1
                u += 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def relabel(self, text: str) -> "Graph":
        """Copy with a different display label."""
        return Graph(self.n, self.adj, text)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def from_edges(n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
    """Build a graph from an edge list, rejecting loops and bad vertex ids."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise UsageError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise UsageError(f"self-loop on vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


# ---------------------------------------------------------------------------
# catalog generators


def make_complete(n: int) -> Graph:
    if n < 1:
        raise UsageError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), f"complete:{n}")


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise UsageError("complete bipartite graph needs both sides >= 1")
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    adj = tuple(right if v < a else left for v in range(a + b))
    return Graph(a + b, adj, f"bipartite:{a},{b}")


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise UsageError("cycle needs n >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)], f"cycle:{n}")


def make_petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges, "petersen")


def make_prism(k: int) -> Graph:
    """Two k-cycles joined by a perfect matching (3-regular on 2k vertices)."""
    if k < 3:
        raise UsageError("prism needs k >= 3")
    edges = [(v, (v + 1) % k) for v in range(k)]
    edges += [(k + v, k + (v + 1) % k) for v in range(k)]
    edges += [(v, k + v) for v in range(k)]
    return from_edges(2 * k, edges, f"prism:{k}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [mask << g.n for mask in h.adj]
    label = "+".join(part for part in (g.label, h.label) if part)
    return Graph(g.n + h.n, tuple(adj), label)


def make_random_regular(n: int, d: int, seed: int) -> Graph:
    """Sample a simple d-regular graph via the pairing model.

    Stubs are shuffled and paired; any loop or repeated edge rejects the
    whole sample and we redraw from scratch, which keeps the distribution
    near-uniform at this scale.  Deterministic for a fixed seed.
    """
    if d < 0 or d >= n:
        raise UsageError(f"need 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise UsageError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    for _ in range(_PAIRING_RETRY_CAP):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        adj = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (adj[u] >> v) & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if ok:
            return Graph(n, tuple(adj), f"random_regular:{n},{d},{seed}")
    raise RetryExhaustedError(
        f"pairing model failed {_PAIRING_RETRY_CAP} times for n={n}, d={d}"
    )


# ---------------------------------------------------------------------------
# structure queries


def component_count(g: Graph, subset: int) -> int:
    """Number of connected components of the subgraph induced by the subset."""
    if subset & ~((1 << g.n) - 1):
        raise UsageError("subset has bits outside the vertex range")
    adj = g.adj
    remaining = subset
    count = 0
    while remaining:
        count += 1
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grow = 0
            rest = frontier
            while rest:
                low = rest & -rest
                grow |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = grow & remaining & ~comp
            comp |= frontier
        remaining ^= comp
    return count


def component_masks(g: Graph, subset: int) -> list[int]:
    """Bitmasks of the connected components of the induced subgraph."""
    adj = g.adj
    remaining = subset
    out = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grow = 0
            rest = frontier
            while rest:
                low = rest & -rest
                grow |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = grow & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining ^= comp
    return out


def is_d_regular(g: Graph, d: int) -> bool:
    return all(mask.bit_count() == d for mask in g.adj)


def is_union_of_complete(g: Graph, k: int) -> bool:
    """True iff every connected component is a complete graph on exactly k vertices."""
    for comp in component_masks(g, (1 << g.n) - 1):
        if comp.bit_count() != k:
            return False
        rest = comp
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if (g.adj[v] & comp) != comp ^ low:
                return False
            rest ^= low
    return True


# ---------------------------------------------------------------------------
# labelled isomorphism (brute force over vertex permutations, small n only)

_PAIR_INDEX_CACHE: dict[int, dict[tuple[int, int], int]] = {}


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    table = _PAIR_INDEX_CACHE.get(n)
    if table is None:
        table = {pair: k for k, pair in enumerate(combinations(range(n), 2))}
        _PAIR_INDEX_CACHE[n] = table
    return table


def edge_code(g: Graph) -> int:
    """Pack the edge set into an int, one bit per vertex pair (i < j)."""
    table = _pair_index(g.n)
    code = 0
    for u, v in g.edges():
        code |= 1 << table[(u, v)]
    return code


def graph_from_code(n: int, code: int, label: str = "") -> Graph:
    pairs = list(combinations(range(n), 2))
    edges = [pairs[k] for k in range(len(pairs)) if (code >> k) & 1]
    return from_edges(n, edges, label)


def permute_code(n: int, code: int, perm: Sequence[int]) -> int:
    """Edge code of the graph with every vertex v renamed perm[v]."""
    table = _pair_index(n)
    pairs = list(table)
    out = 0
    rest = code
    while rest:
        low = rest & -rest
        i, j = pairs[low.bit_length() - 1]
        a, b = perm[i], perm[j]
        if a > b:
            a, b = b, a
        out |= 1 << table[(a, b)]
        rest ^= low
    return out


def permute_labels(labels: Sequence, perm: Sequence[int]) -> tuple:
    """Move the label of vertex v to position perm[v]."""
    out = [None] * len(labels)
    for v, lab in enumerate(labels):
        out[perm[v]] = lab
    return tuple(out)


def canonical_labelled_form(g: Graph, labels: Sequence) -> tuple:
    """Canonical key of a vertex-labelled graph under label-preserving isomorphism.

    Two pairs (G, labels) and (G', labels') get the same key exactly when
    some bijection of the vertices maps edges to edges and carries each
    vertex's label along.  The key is the lexicographic minimum of
    (edge code, label tuple) over all vertex permutations, so it is usable
    as a dict key and sorts deterministically.
    """
    if len(labels) != g.n:
        raise UsageError("one label per vertex required")
    if g.n > ISO_CAP:
        raise CapacityError(f"canonical form capped at {ISO_CAP} vertices, got {g.n}")
    code = edge_code(g)
    labels = tuple(labels)
    best = None
    for perm in permutations(range(g.n)):
        cand = (permute_code(g.n, code, perm), permute_labels(labels, perm))
        if best is None or cand < best:
            best = cand
    return (g.n,) + best


@lru_cache(maxsize=16)
def graphs_up_to_iso(n: int) -> tuple[tuple[int, tuple[tuple[int, ...], ...]], ...]:
    """All graphs on n vertices up to isomorphism, as (canonical edge code, automorphisms).

    The canonical code of a class is the smallest edge code it contains.
    Enumeration walks all codes in increasing order and marks whole orbits,
    so each class is touched once; automorphisms are the permutations that
    fix the canonical code.  Capped like canonical_labelled_form.
    """
    if n > 7:
        # the orbit-marking table is 2**(n choose 2) bytes
        raise CapacityError(f"graph enumeration capped at 7 vertices, got {n}")
    perms = list(permutations(range(n)))
    total = 1 << (n * (n - 1) // 2)
    seen = bytearray(total)
    out = []
    for code in range(total):
        if seen[code]:
            continue
        autos = []
        for perm in perms:
            image = permute_code(n, code, perm)
            seen[image] = 1
            if image == code:
                autos.append(perm)
        out.append((code, tuple(autos)))
    return tuple(out)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; raises ParseError naming the bad line."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(f"bad header counts {a} {b}", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range 0..{n - 1}: {raw!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop on vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"declared {m} edges but found {len(edges)}")
    return from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
