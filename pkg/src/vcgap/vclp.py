"""Vertex cover LP and IP, solved exactly.

Two independent routes to an optimal half-integral LP point: the simplex
kernel on the edge formulation, and the classical doubling to a bipartite
graph whose weighted vertex cover is read off a minimum cut. The integral
optimum comes from a branch-and-bound that uses the LP as its bound.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import ratlp
from .errors import DimensionError, InputError, InvariantError, SizeLimitError
from .graphs import Graph, vertex_set

HALF = Fraction(1, 2)
HALF_VALUES = (Fraction(0), HALF, Fraction(1))
DEFAULT_EXACT_LIMIT = int(os.environ.get("VCGAP_LIMIT_EXACT", "40"))


@dataclass(frozen=True)
class HalfIntegralVC:
    x: tuple[Fraction, ...]
    objective: Fraction
    v0: tuple[int, ...]
    v_half: tuple[int, ...]
    v1: tuple[int, ...]

    @classmethod
    def from_vector(cls, x, cost) -> "HalfIntegralVC":
        x = tuple(Fraction(v) for v in x)
        v0, vh, v1 = nt_partition(x)
        obj = sum((c * v for c, v in zip(cost, x)), Fraction(0))
        return cls(x, obj, v0, vh, v1)

    def is_integral(self) -> bool:
        return not self.v_half

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, xv in enumerate(self.x) if xv > 0)


def check_costs(g: Graph, c) -> tuple[Fraction, ...]:
    c = tuple(Fraction(v) for v in c)
    if len(c) != g.n:
        raise DimensionError(f"cost vector has {len(c)} entries for {g.n} vertices")
    for v, cv in enumerate(c):
        if cv < 0:
            raise InputError(f"negative cost {cv} at vertex {v}")
    return c


def unit_costs(g: Graph) -> tuple[Fraction, ...]:
    return (Fraction(1),) * g.n


def nt_partition(x) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split vertices by LP value into (x=0, x=1/2, x=1)."""
    if isinstance(x, HalfIntegralVC):
        x = x.x
    parts = {value: [] for value in HALF_VALUES}
    for v, xv in enumerate(x):
        if xv not in parts:
            raise InvariantError(f"x_{v} = {xv} is not in {{0, 1/2, 1}}")
        parts[xv].append(v)
    return tuple(tuple(parts[value]) for value in HALF_VALUES)


def vc_lp_problem(g: Graph, c) -> ratlp.LpProblem:
    rows = []
    for u, v in g.edges:
        row = [0] * g.n
        row[u] = row[v] = 1
        rows.append(row)
    return ratlp.LpProblem.build(c, rows, [1] * g.m)


def _assert_feasible(g: Graph, x) -> None:
    for u, v in g.edges:
        if x[u] + x[v] < 1:
            raise InvariantError(f"edge ({u}, {v}) uncovered: x = {x[u]} + {x[v]}")


def solve_vc_lp_with_dual(g: Graph, c) -> tuple[HalfIntegralVC, tuple[Fraction, ...]]:
    """Simplex solve returning the extreme point and an optimal edge packing.

    The packing (one value per edge of ``g.edges``) is the LP dual: it loads
    each vertex by at most its cost and sums to the LP objective.
    """
    c = check_costs(g, c)
    sol = ratlp.solve(vc_lp_problem(g, c))
    if not sol.optimal:
        # the LP is always feasible (x = 1) and bounded below by 0
        raise InvariantError(f"vertex cover LP reported {sol.status.value}")
    result = HalfIntegralVC.from_vector(sol.primal, c)
    _assert_feasible(g, result.x)
    return result, sol.dual


def solve_vc_lp(g: Graph, c) -> HalfIntegralVC:
    """Optimal extreme point of the vertex cover LP via the simplex kernel."""
    return solve_vc_lp_with_dual(g, c)[0]


# -- doubling + min cut -------------------------------------------------------

def max_flow_min_cut(num_nodes: int, arcs, source: int, sink: int):
    """Edmonds-Karp on exact capacities.

    ``arcs`` is an iterable of (tail, head, capacity) with capacity None for
    an uncapacitated arc. Returns (flow value, source side of a minimum cut).
    """
    arcs = list(arcs)
    finite = sum((cap for _, _, cap in arcs if cap is not None), Fraction(0))
    big = finite + 1
    residual = [dict() for _ in range(num_nodes)]
    for u, w, cap in arcs:
        cap = big if cap is None else Fraction(cap)
        residual[u][w] = residual[u].get(w, Fraction(0)) + cap
        residual[w].setdefault(u, Fraction(0))

    flow = Fraction(0)
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for w in sorted(residual[u]):
                if w not in parent and residual[u][w] > 0:
                    parent[w] = u
                    queue.append(w)
        if sink not in parent:
            return flow, frozenset(parent)
        path = []
        w = sink
        while parent[w] is not None:
            path.append((parent[w], w))
            w = parent[w]
        bottleneck = min(residual[u][w] for u, w in path)
        for u, w in path:
            residual[u][w] -= bottleneck
            residual[w][u] += bottleneck
        flow += bottleneck


def _make_extreme(g: Graph, x: list) -> None:
    """Move an optimal half-integral x to an extreme point of the LP, in place.

    Two cost-neutral steps (both only touch vertices whose cost optimality
    forces to be free or balanced):

    * a vertex at 1 with no neighbour at 0 drops to 1/2, which would save
      c_v/2, so c_v = 0;
    * each bipartite component of G[x = 1/2] with sides A, B is rounded
      (A to 1, B to 0, A holding the lowest index); both orientations are
      feasible, so optimality forces c(A) = c(B). A lone vertex goes to 0.

    Afterwards every vertex at 1 has a neighbour at 0 and every half-valued
    component contains an odd cycle, which makes x a vertex of the polyhedron.
    """
    loose = [v for v in range(g.n)
             if x[v] == 1 and all(x[w] != 0 for w in g.adj[v])]
    for v in loose:
        x[v] = HALF
    half = {v for v in range(g.n) if x[v] == HALF}
    seen = set()
    for root in sorted(half):
        if root in seen:
            continue
        side = {root: 0}
        queue = deque([root])
        bipartite = True
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in half:
                    continue
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    bipartite = False
        seen.update(side)
        if not bipartite:
            continue
        if len(side) == 1:
            x[root] = Fraction(0)
        else:
            for v, s in side.items():
                x[v] = Fraction(1 - s)


def solve_vc_lp_bipartite_double(g: Graph, c) -> HalfIntegralVC:
    """Optimal half-integral LP point from a min cut on the doubled graph.

    Vertex v gets copies v' (left) and v'' (right), each of cost c_v; every
    edge {u, v} becomes {u', v''} and {v', u''}. A minimum weight cover of
    the doubled graph costs exactly twice the LP optimum, and averaging the
    two copies gives the LP point, which is then moved to an extreme point
    of equal cost (integral whenever g is bipartite).
    """
    c = check_costs(g, c)
    n = g.n
    source, sink = 0, 1
    left = lambda v: 2 + v  # noqa: E731
    right = lambda v: 2 + n + v  # noqa: E731
    arcs = [(source, left(v), c[v]) for v in range(n)]
    arcs += [(right(v), sink, c[v]) for v in range(n)]
    for u, v in g.edges:
        arcs.append((left(u), right(v), None))
        arcs.append((left(v), right(u), None))
    cut_value, side = max_flow_min_cut(2 * n + 2, arcs, source, sink)

    x = [
        Fraction((left(v) not in side) + (right(v) in side), 2)
        for v in range(n)
    ]
    _make_extreme(g, x)
    result = HalfIntegralVC.from_vector(x, c)
    _assert_feasible(g, result.x)
    if 2 * result.objective != cut_value:
        raise InvariantError(f"cut value {cut_value} != 2 * LP objective {result.objective}")
    return result


# -- exact integral optimum ---------------------------------------------------

def min_vc_exact(g: Graph, c, limit: int = DEFAULT_EXACT_LIMIT) -> tuple[tuple[int, ...], Fraction]:
    """Minimum-cost vertex cover by branch-and-bound with LP lower bounds.

    Branches on the lowest-index endpoint u of the lowest-index uncovered
    edge: first u in the cover, then u out (forcing all its neighbours in).
    """
    c = check_costs(g, c)
    if g.n > limit:
        raise SizeLimitError(g.n, limit, "--limit-exact")

    def residual_lp(inc):
        edges = [(u, v) for u, v in g.edges if u not in inc and v not in inc]
        if not edges:
            return Fraction(0), ()
        verts = vertex_set(w for e in edges for w in e)
        index = {v: i for i, v in enumerate(verts)}
        h = Graph.from_edges(len(verts), [(index[u], index[v]) for u, v in edges])
        lp = solve_vc_lp_bipartite_double(h, [c[v] for v in verts])
        return lp, verts

    root_lp, verts = residual_lp(frozenset())
    best_cover = vertex_set(verts[i] for i in root_lp.support()) if verts else ()
    best = [sum((c[v] for v in best_cover), Fraction(0)), best_cover]

    def search(inc: frozenset, cost: Fraction):
        if cost >= best[0]:
            return
        lp, verts = residual_lp(inc)
        if not verts:
            best[0], best[1] = cost, vertex_set(inc)
            return
        if cost + lp.objective >= best[0]:
            return
        if lp.is_integral():
            best[0] = cost + lp.objective
            best[1] = vertex_set(inc | {verts[i] for i in lp.v1})
            return
        u = next((u for u, v in g.edges if u not in inc and v not in inc))
        search(inc | {u}, cost + c[u])
        forced = g.adj[u] - inc
        search(inc | forced, cost + sum((c[w] for w in forced), Fraction(0)))

    search(frozenset(), Fraction(0))
    return best[1], best[0]
