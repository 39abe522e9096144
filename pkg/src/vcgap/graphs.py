"""Simple undirected graphs: representation, DIMACS I/O, generators, predicates."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import GraphParseError, ParameterError

Edge = tuple[int, int]


def vertex_set(members, n=None) -> tuple[int, ...]:
    """Normalize an iterable of vertices to a sorted, deduplicated tuple."""
    vs = tuple(sorted(set(members)))
    if vs and (vs[0] < 0 or (n is not None and vs[-1] >= n)):
        raise ParameterError(f"vertex set {list(vs)} not contained in 0..{n - 1}")
    return vs


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) outside 0..{n - 1}")
            es.add((min(u, v), max(u, v)))
        adj = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(sorted(es)), tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n,
            ((u, v) for u, v in itertools.combinations(range(self.n), 2)
             if v not in self.adj[u]),
        )


# -- predicates ---------------------------------------------------------------

def is_independent(g: Graph, s) -> bool:
    members = set(s)
    return not any(g.adj[v] & members for v in members)


def is_vertex_cover(g: Graph, s) -> bool:
    return first_uncovered_edge(g, s) is None


def first_uncovered_edge(g: Graph, s):
    members = set(s)
    for u, v in g.edges:
        if u not in members and v not in members:
            return (u, v)
    return None


def bipartition(g: Graph):
    """BFS 2-coloring; returns a color list, or None for non-bipartite graphs."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def induced_subgraph(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on `s`. The returned mapping sends new index i to old vertex mapping[i]."""
    mapping = vertex_set(s, g.n)
    index = {v: i for i, v in enumerate(mapping)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(mapping), edges), mapping


def greedy_coloring(g: Graph) -> list[tuple[int, ...]]:
    """First-fit coloring in index order; returns the color classes."""
    color = {}
    for v in range(g.n):
        used = {color[w] for w in g.adj[v] if w in color}
        color[v] = next(c for c in itertools.count() if c not in used)
    classes: dict[int, list[int]] = {}
    for v, c in color.items():
        classes.setdefault(c, []).append(v)
    return [tuple(classes[c]) for c in sorted(classes)]


# -- generators ---------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError(f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def kneser(n: int, k: int) -> Graph:
    """Kneser graph K(n, k); vertex i is the i-th k-subset in combinations order."""
    if k < 1 or n < 2 * k:
        raise ParameterError(f"kneser(n, k) needs k >= 1 and n >= 2k, got ({n}, {k})")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: copies u_i = n + i and a hub w = 2n."""
    n = g.n
    edges = list(g.edges)
    for u, v in g.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges.extend((n + i, 2 * n) for i in range(n))
    return Graph.from_edges(2 * n + 1, edges)


FAMILIES = ("complete", "cycle", "complete_bipartite", "mycielskian_of", "kneser")


def gen_family(family: str, params, base: Graph | None = None) -> Graph:
    """Build a member of a named family.

    ``mycielskian_of`` applies the Mycielski construction to ``base``; its
    optional single parameter is the number of times to apply it (default 1).
    """
    params = [int(p) for p in params]
    arity = {"complete": 1, "cycle": 1, "complete_bipartite": 2, "kneser": 2}
    if family == "mycielskian_of":
        if base is None:
            raise ParameterError("mycielskian_of needs a base graph")
        if len(params) > 1 or (params and params[0] < 0):
            raise ParameterError(f"mycielskian_of takes one repeat count >= 0, got {params}")
        g = base
        for _ in range(params[0] if params else 1):
            g = mycielskian(g)
        return g
    if family not in arity:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != arity[family]:
        raise ParameterError(f"{family} takes {arity[family]} parameter(s), got {params}")
    builder = {
        "complete": complete,
        "cycle": cycle,
        "complete_bipartite": complete_bipartite,
        "kneser": kneser,
    }[family]
    return builder(*params)


def petersen() -> Graph:
    return kneser(5, 2)


def grotzsch() -> Graph:
    return mycielskian(cycle(5))


# -- text formats -------------------------------------------------------------

def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed header {line!r}, expected 'p edge n m'", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(f"malformed header {line!r}", lineno) from None
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before 'p edge' header", lineno)
            if len(parts) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"malformed edge line {line!r}", lineno) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise GraphParseError(f"vertex {w} out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge n m' header")
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_adjacency_text(g: Graph) -> str:
    return "".join(
        f"{v}:" + "".join(f" {w}" for w in sorted(g.adj[v])) + "\n" for v in range(g.n)
    )
