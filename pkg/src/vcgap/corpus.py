"""Named test graphs and seeded random instances."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    grotzsch,
    mycielskian,
    petersen,
)

COST_DENOMINATORS = (1, 2, 3, 4)


def standard_corpus() -> list[tuple[str, Graph]]:
    """Complete graphs, cycles, complete bipartite graphs, Petersen, Mycielskians."""
    graphs = [(f"K{n}", complete(n)) for n in range(2, 9)]
    graphs += [(f"C{n}", cycle(n)) for n in range(3, 12)]
    graphs += [
        (f"K{a},{b}", complete_bipartite(a, b))
        for a in range(1, 5)
        for b in range(a, 5)
    ]
    graphs.append(("Petersen", petersen()))
    graphs.append(("M(K2)", mycielskian(complete(2))))
    graphs.append(("Grotzsch", grotzsch()))
    return graphs


def random_costs(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Numerators uniform in 0..20, denominators drawn from {1, 2, 3, 4}."""
    return tuple(
        Fraction(rng.randint(0, 20), rng.choice(COST_DENOMINATORS)) for _ in range(n)
    )


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def random_bipartite_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random sides, then each cross pair kept with probability p."""
    side = [rng.random() < 0.5 for _ in range(n)]
    return Graph.from_edges(
        n,
        [(u, v) for u, v in itertools.combinations(range(n), 2)
         if side[u] != side[v] and rng.random() < p],
    )
