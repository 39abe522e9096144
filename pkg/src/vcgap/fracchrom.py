"""Fractional chromatic number, exactly.

``solve_chi_f`` runs column generation on the covering LP over independent
sets; pricing is an exact max-weight independent set search. The
brute-force oracle solves the same LP over every maximal independent set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import ratlp
from .errors import InvariantError, SizeLimitError
from .graphs import Graph, greedy_coloring, vertex_set

DEFAULT_ORACLE_LIMIT = int(os.environ.get("VCGAP_LIMIT_ORACLE", "20"))


@dataclass(frozen=True)
class FractionalColoring:
    classes: tuple[tuple[tuple[int, ...], Fraction], ...]
    value: Fraction

    def coverage(self, n: int) -> list[Fraction]:
        cov = [Fraction(0)] * n
        for members, weight in self.classes:
            for v in members:
                cov[v] += weight
        return cov


@dataclass(frozen=True)
class DualWeights:
    z: tuple[Fraction, ...]
    value: Fraction


def maximalize(g: Graph, members) -> tuple[int, ...]:
    """Greedily extend an independent set in index order until maximal."""
    chosen = set(members)
    blocked = set()
    for v in chosen:
        blocked |= g.adj[v]
    for v in range(g.n):
        if v not in chosen and v not in blocked:
            chosen.add(v)
            blocked |= g.adj[v]
    return vertex_set(chosen)


def price_column(g: Graph, z) -> tuple[tuple[int, ...], Fraction]:
    """Maximum-weight independent set under vertex weights ``z``.

    Among maximizers the lexicographically smallest sorted vertex list is
    returned. Zero-weight vertices are never added, so with z = 0 the
    answer is the empty set.
    """
    z = [Fraction(v) for v in z]
    positive = [v for v in range(g.n) if z[v] > 0]
    best_w = Fraction(0)
    best_set: list[int] = []

    # Include-first DFS in index order visits candidate sets in
    # lexicographic order, so accepting only strict improvements yields the
    # lex-smallest maximizer.
    def search(weight, chosen, cands, cand_total):
        nonlocal best_w, best_set
        if weight > best_w:
            best_w, best_set = weight, list(chosen)
        for i, v in enumerate(cands):
            if weight + cand_total <= best_w:
                return
            cand_total -= z[v]
            rest = [w for w in cands[i + 1:] if w not in g.adj[v]]
            rest_total = sum((z[w] for w in rest), Fraction(0))
            if weight + z[v] + rest_total > best_w:
                chosen.append(v)
                search(weight + z[v], chosen, rest, rest_total)
                chosen.pop()

    search(Fraction(0), [], positive, sum((z[v] for v in positive), Fraction(0)))
    return tuple(best_set), best_w


def _master(g: Graph, columns) -> ratlp.LpProblem:
    rows = [[1 if v in col else 0 for col in columns] for v in range(g.n)]
    return ratlp.LpProblem.build([1] * len(columns), rows, [1] * g.n)


def _extract(columns, sol) -> tuple[FractionalColoring, DualWeights]:
    classes = tuple((col, y) for col, y in zip(columns, sol.primal) if y > 0)
    value = sum((y for _, y in classes), Fraction(0))
    dual = DualWeights(tuple(sol.dual), sum(sol.dual, Fraction(0)))
    if value != sol.objective or dual.value != value:
        raise InvariantError(
            f"fractional coloring value {value} != dual value {dual.value}"
        )
    return FractionalColoring(classes, value), dual


def _empty() -> tuple[FractionalColoring, DualWeights]:
    return FractionalColoring((), Fraction(0)), DualWeights((), Fraction(0))


def solve_chi_f(g: Graph, max_iterations: int = 10_000):
    """Column generation; returns (optimal fractional coloring, optimal dual weights).

    Stops when the best independent set under the current duals weighs at
    most 1, which certifies the duals feasible for the full LP.
    """
    if g.n == 0:
        return _empty()
    columns: list[tuple[int, ...]] = []
    seen = set()
    for col in [(v,) for v in range(g.n)] + greedy_coloring(g):
        if col not in seen:
            seen.add(col)
            columns.append(col)

    for _ in range(max_iterations):
        sol = ratlp.solve(_master(g, columns))
        if not sol.optimal:
            raise InvariantError(f"restricted master reported {sol.status.value}")
        col, weight = price_column(g, sol.dual)
        if weight <= 1:
            return _extract(columns, sol)
        col = maximalize(g, col)
        if col in seen:
            raise InvariantError(f"pricing regenerated existing column {col}")
        seen.add(col)
        columns.append(col)
    raise InvariantError(f"column generation did not converge in {max_iterations} rounds")


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    non_adj = [frozenset(range(g.n)) - g.adj[v] - {v} for v in range(g.n)]
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(vertex_set(r))
            return
        pivot = max(p | x, key=lambda u: len(p & non_adj[u]))
        for v in sorted(p - non_adj[pivot]):
            expand(r | {v}, p & non_adj[v], x & non_adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(range(g.n)), frozenset())
    return sorted(found)


def chi_f_bruteforce(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT):
    """Solve the fractional coloring LP over every maximal independent set."""
    if g.n > limit:
        raise SizeLimitError(g.n, limit, "--limit-oracle")
    if g.n == 0:
        return _empty()
    columns = maximal_independent_sets(g)
    sol = ratlp.solve(_master(g, columns))
    if not sol.optimal:
        raise InvariantError(f"full fractional coloring LP reported {sol.status.value}")
    return _extract(columns, sol)
