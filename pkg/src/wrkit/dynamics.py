"""Single-site heat-bath (Glauber) dynamics for the Widom-Rowlinson model.

One step picks a uniform vertex and resamples its colour from the
stationary conditional given its neighbours: colour i is available only
when no neighbour carries the other colour, and available options are
weighted 1 (uncoloured) and lam per colour.  The chain therefore
preserves validity at every step, and its stationary law is the model
distribution at activity lam.

Sampling is plain floating point for throughput; exactness lives in the
rest of the package.  Randomness comes from the CPython Mersenne Twister
(random.Random) with an explicit seed, so runs are reproducible; the
algorithm identifier is exported for run logs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

from .errors import UsageError
from .graphs import Graph

RNG_ALGORITHM = "mt19937"


@dataclass
class ChainState:
    """Mutable chain state: current colouring plus a step counter."""

    graph: Graph
    colouring: list[int]
    steps: int = 0
    coloured: int = field(default=0)

    def __post_init__(self):
        self.coloured = sum(1 for c in self.colouring if c)


def initial_state(graph: Graph) -> ChainState:
    """All-uncoloured start (always valid)."""
    return ChainState(graph, [0] * graph.n)


def _allowed_colours(adj_mask: int, colouring: list[int]) -> tuple[bool, bool]:
    """Which of colours 1 and 2 the neighbourhood permits."""
    ok1 = True
    ok2 = True
    rest = adj_mask
    while rest:
        low = rest & -rest
        c = colouring[low.bit_length() - 1]
        if c == 1:
            ok2 = False
        elif c == 2:
            ok1 = False
        rest ^= low
    return ok1, ok2


def glauber_step(
    state: ChainState, graph: Graph, lam: float, rng: random.Random
) -> ChainState:
    """One heat-bath update; mutates and returns the state."""
    n = graph.n
    v = int(rng.random() * n)
    ok1, ok2 = _allowed_colours(graph.adj[v], state.colouring)
    total = 1.0 + lam * (ok1 + ok2)
    r = rng.random() * total
    if r < 1.0:
        new = 0
    elif ok1 and (not ok2 or r < 1.0 + lam):
        new = 1
    else:
        new = 2
    old = state.colouring[v]
    state.colouring[v] = new
    state.coloured += (new != 0) - (old != 0)
    state.steps += 1
    return state


def transition_distribution(
    colouring: tuple[int, ...], graph: Graph, lam: Fraction
) -> dict[tuple[int, ...], Fraction]:
    """Exact one-step kernel from a valid colouring (for verification).

    Mirrors glauber_step: vertex chosen uniformly, then the heat-bath
    choice among {0} plus allowed colours with weights 1 and lam.
    """
    lam = Fraction(lam)
    n = graph.n
    out: dict[tuple[int, ...], Fraction] = {}
    pick = Fraction(1, n)
    work = list(colouring)
    for v in range(n):
        ok1, ok2 = _allowed_colours(graph.adj[v], work)
        options = [(0, Fraction(1))]
        if ok1:
            options.append((1, lam))
        if ok2:
            options.append((2, lam))
        total = sum(w for _, w in options)
        for colour, weight in options:
            nxt = list(colouring)
            nxt[v] = colour
            key = tuple(nxt)
            out[key] = out.get(key, Fraction(0)) + pick * weight / total
    return out


def estimate_occupancy(
    graph: Graph,
    lam: float,
    burn_in: int,
    samples: int,
    thinning: int = 1,
    seed: int = 0,
    series_out: list[tuple[int, float]] | None = None,
) -> tuple[float, float]:
    """Time-average coloured fraction with a batch-means standard error.

    Runs burn_in steps, then records the coloured fraction every
    `thinning` steps, `samples` times.  Deterministic for a fixed seed.
    When series_out is given, (step, fraction) pairs are appended to it.
    """
    if burn_in < 1 or samples < 1 or thinning < 1:
        raise UsageError("burn_in, samples and thinning must all be >= 1")
    rng = random.Random(seed)
    rand = rng.random
    n = graph.n
    adj = graph.adj
    colouring = [0] * n
    coloured = 0
    lam = float(lam)

    values = []
    record = values.append
    total_steps = burn_in + samples * thinning
    # hot loop: identical semantics to glauber_step, kept inline and
    # branch-light; the equivalence is pinned by a determinism test
    step = 0
    while step < total_steps:
        v = int(rand() * n)
        ok1 = True
        ok2 = True
        rest = adj[v]
        while rest:
            low = rest & -rest
            c = colouring[low.bit_length() - 1]
            if c == 1:
                ok2 = False
            elif c == 2:
                ok1 = False
            rest ^= low
        total = 1.0 + lam * (ok1 + ok2)
        r = rand() * total
        if r < 1.0:
            new = 0
        elif ok1 and (not ok2 or r < 1.0 + lam):
            new = 1
        else:
            new = 2
        old = colouring[v]
        colouring[v] = new
        coloured += (new != 0) - (old != 0)
        step += 1
        if step > burn_in and (step - burn_in) % thinning == 0:
            record(coloured / n)

    estimate = sum(values) / len(values)

    # batch means: nearly independent once batches outlast the
    # autocorrelation time, which is tiny for these chain lengths
    batches = min(100, len(values))
    size = len(values) // batches
    means = [
        sum(values[i * size : (i + 1) * size]) / size for i in range(batches)
    ]
    if batches > 1:
        centre = sum(means) / batches
        var = sum((m - centre) ** 2 for m in means) / (batches - 1)
        stderr = sqrt(var / batches)
    else:
        stderr = float("inf")

    if series_out is not None:
        start = burn_in + thinning
        series_out.extend(
            (start + i * thinning, value) for i, value in enumerate(values)
        )
    return estimate, stderr
