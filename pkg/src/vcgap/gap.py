"""Integrality gap of the vertex cover LP and its two-sided certificate.

The gap equals ``2 - 2/chi_f(G)``. The lower side is witnessed by the
cost vector equal to the optimal fractional-coloring dual weights: the LP
is at most chi_f/2 under it (all-halves point) while every cover costs at
least chi_f - 1. The upper side writes ``rho * x`` for an optimal
half-integral x as a dominated convex combination of covers built from a
fractional coloring of the subgraph induced by the half-valued vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EdgelessGraphError, RatioUndefinedError
from .fracchrom import (
    DEFAULT_ORACLE_LIMIT,
    FractionalColoring,
    chi_f_bruteforce,
    maximal_independent_sets,
    solve_chi_f,
)
from .graphs import Graph, first_uncovered_edge, induced_subgraph, is_independent, vertex_set
from .report import Report
from .vclp import (
    DEFAULT_EXACT_LIMIT,
    HALF_VALUES,
    HalfIntegralVC,
    check_costs,
    min_vc_exact,
    nt_partition,
    solve_vc_lp_bipartite_double,
    solve_vc_lp_with_dual,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class GapCertificate:
    graph: Graph
    chi_f: Fraction
    rho: Fraction
    worst_cost: tuple[Fraction, ...]
    lp_value: Fraction
    ip_value: Fraction
    achieved_ratio: Fraction
    x_star: HalfIntegralVC
    h_coloring: FractionalColoring
    covers: tuple[tuple[tuple[int, ...], Fraction], ...]
    # optimality witnesses for the two values above
    ip_cover: tuple[int, ...] = ()
    lp_dual: tuple[Fraction, ...] = ()


def gap_from_chi_f(chi_f) -> Fraction:
    return 2 - 2 / Fraction(chi_f)


def integrality_gap(g: Graph) -> Fraction:
    if g.m == 0:
        raise EdgelessGraphError()
    coloring, _ = solve_chi_f(g)
    return gap_from_chi_f(coloring.value)


def decompose_upper(g: Graph, x: HalfIntegralVC):
    """Covers (V_half minus U) plus V_1 for each class U of an optimal coloring of G[V_half].

    Class weights are rescaled by chi_f of the induced subgraph so they sum
    to one. Classes are reported with vertex indices of ``g``. When no
    vertex is half-valued the decomposition is the single cover V_1.
    """
    v0, vh, v1 = nt_partition(x.x)
    if (v0, vh, v1) != (x.v0, x.v_half, x.v1):
        raise ValueError("stored partition disagrees with x")
    if not vh:
        return FractionalColoring((), ZERO), ((tuple(v1), Fraction(1)),)
    h, mapping = induced_subgraph(g, vh)
    h_col, _ = solve_chi_f(h)
    classes = tuple(
        (tuple(mapping[i] for i in members), weight) for members, weight in h_col.classes
    )
    covers = tuple(
        (vertex_set(set(vh) - set(members) | set(v1)), weight / h_col.value)
        for members, weight in classes
    )
    return FractionalColoring(classes, h_col.value), covers


def worst_case_certificate(g: Graph, limit_exact: int = DEFAULT_EXACT_LIMIT) -> GapCertificate:
    if g.m == 0:
        raise EdgelessGraphError()
    coloring, dual = solve_chi_f(g)
    cost = dual.z
    x_star, lp_dual = solve_vc_lp_with_dual(g, cost)
    ip_cover, ip_value = min_vc_exact(g, cost, limit=limit_exact)
    h_coloring, covers = decompose_upper(g, x_star)
    return GapCertificate(
        graph=g,
        chi_f=coloring.value,
        rho=gap_from_chi_f(coloring.value),
        worst_cost=cost,
        lp_value=x_star.objective,
        ip_value=ip_value,
        achieved_ratio=ip_value / x_star.objective,
        x_star=x_star,
        h_coloring=h_coloring,
        covers=covers,
        ip_cover=ip_cover,
        lp_dual=lp_dual,
    )


def empirical_ratio(g: Graph, c, limit_exact: int = DEFAULT_EXACT_LIMIT) -> Fraction:
    """IP optimum over LP optimum for one cost vector."""
    if g.m == 0:
        raise EdgelessGraphError("cost ratio")
    c = check_costs(g, c)
    lp = solve_vc_lp_bipartite_double(g, c).objective
    _, ip = min_vc_exact(g, c, limit=limit_exact)
    if lp == 0:
        raise RatioUndefinedError(ip)
    return ip / lp


# -- verification -------------------------------------------------------------

def _cost(c, members) -> Fraction:
    return sum((c[v] for v in members), ZERO)


def verify_certificate(
    g: Graph,
    cert: GapCertificate,
    oracle: bool = False,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> Report:
    """Check every claim of ``cert`` using only predicates and exact arithmetic.

    No LP is solved here. ``oracle=True`` adds enumeration-based checks of
    chi_f, dual feasibility of the cost, and IP optimality.
    """
    rep = Report()
    n = g.n
    c = cert.worst_cost
    x = cert.x_star.x

    rep.add("graph_has_edges", g.m > 0, "certificate requires at least one edge")
    rep.add("graph_matches", cert.graph.n == n and cert.graph.edges == g.edges,
            "certificate was issued for a different graph")

    # -- values and the closed form
    rep.add("chi_f_positive", cert.chi_f > 0, f"chi_f = {cert.chi_f}")
    rep.add("rho_formula", cert.chi_f > 0 and cert.rho == gap_from_chi_f(cert.chi_f),
            f"rho = {cert.rho}, 2 - 2/chi_f = "
            f"{gap_from_chi_f(cert.chi_f) if cert.chi_f else 'undefined'}")
    cost_ok = len(c) == n and all(v >= 0 for v in c)
    rep.add("worst_cost_nonnegative", cost_ok, f"{len(c)} entries for {n} vertices")
    rep.add("worst_cost_total_is_chi_f", sum(c, ZERO) == cert.chi_f,
            f"sum of costs {sum(c, ZERO)} != chi_f {cert.chi_f}")

    # -- the LP point
    half_ok = len(x) == n and all(v in HALF_VALUES for v in x)
    rep.add("x_star_half_integral", half_ok, "entries outside {0, 1/2, 1}")
    bad = next(((u, v) for u, v in g.edges if half_ok and x[u] + x[v] < 1), None)
    rep.add("x_star_feasible", half_ok and bad is None,
            f"edge {bad} has x sum {x[bad[0]] + x[bad[1]]}" if bad else "")
    xs = cert.x_star
    parts_ok = half_ok and nt_partition(x) == (xs.v0, xs.v_half, xs.v1)
    rep.add("partition_matches_x", parts_ok, "V0/V_half/V1 disagree with x")
    v1 = set(xs.v1)
    bad = next((e for e in g.edges if set(e) & set(xs.v0) and not set(e) & v1), None)
    rep.add("v0_neighbours_in_v1", bad is None, f"edge {bad} touches V0 but not V1")

    if cost_ok and half_ok:
        lp_attained = sum((cv * xv for cv, xv in zip(c, x)), ZERO)
        rep.add("lp_value_attained", cert.lp_value == lp_attained and xs.objective == lp_attained,
                f"claimed {cert.lp_value}, c.x = {lp_attained}")
        y = cert.lp_dual
        load = [ZERO] * n
        for (u, v), ye in zip(g.edges, y):
            load[u] += ye
            load[v] += ye
        packing_ok = (len(y) == g.m and all(ye >= 0 for ye in y)
                      and all(load[v] <= c[v] for v in range(n)))
        rep.add("lp_value_optimal", packing_ok and sum(y, ZERO) == cert.lp_value,
                "edge packing infeasible or its value differs from lp_value")
    else:
        rep.add("lp_value_attained", False, "cost or x malformed")
        rep.add("lp_value_optimal", False, "cost or x malformed")
    rep.add("lp_at_most_half_chi_f",
            cert.lp_value <= cert.chi_f / 2 and sum(c, ZERO) / 2 == cert.chi_f / 2,
            f"lp_value {cert.lp_value} > chi_f/2 = {cert.chi_f / 2}")

    # -- the integral value
    uncovered = first_uncovered_edge(g, cert.ip_cover)
    rep.add("ip_cover_valid",
            uncovered is None and cost_ok and _cost(c, cert.ip_cover) == cert.ip_value,
            f"edge {uncovered} uncovered" if uncovered else "cover cost differs from ip_value")
    rep.add("ip_at_least_chi_f_minus_1", cert.ip_value >= cert.chi_f - 1,
            f"ip_value {cert.ip_value} < chi_f - 1 = {cert.chi_f - 1}")
    rep.add("ratio_consistent",
            cert.lp_value != 0 and cert.achieved_ratio == cert.ip_value / cert.lp_value,
            f"ratio {cert.achieved_ratio} vs ip/lp")
    rep.add("ratio_equals_rho", cert.achieved_ratio == cert.rho,
            f"achieved {cert.achieved_ratio}, rho {cert.rho}")

    # -- fractional coloring of H = G[V_half]
    vh = set(xs.v_half)
    h_col = cert.h_coloring
    h_graph, h_map = induced_subgraph(g, xs.v_half) if parts_ok else (None, ())
    problems = []
    for members, weight in h_col.classes:
        if not set(members) <= vh:
            problems.append(f"class {list(members)} leaves V_half")
        elif not is_independent(g, members):
            problems.append(f"class {list(members)} is not independent")
        if weight <= 0:
            problems.append(f"class {list(members)} has weight {weight}")
    cov = h_col.coverage(n)
    short = [v for v in sorted(vh) if cov[v] < 1]
    if short:
        problems.append(f"vertex {short[0]} covered {cov[short[0]]} < 1")
    if sum((w for _, w in h_col.classes), ZERO) != h_col.value:
        problems.append("class weights do not sum to the stated value")
    rep.add("h_coloring_valid", not problems, "; ".join(problems))
    rep.add("chi_f_h_at_most_chi_f", h_col.value <= cert.chi_f,
            f"chi_f(H) = {h_col.value} > chi_f(G) = {cert.chi_f}")

    # -- covers and convex weights
    if vh:
        expected = [
            (vertex_set(vh - set(members) | v1), weight / h_col.value)
            for members, weight in h_col.classes
        ] if h_col.value else []
    else:
        expected = [(tuple(sorted(v1)), Fraction(1))]
    rep.add("covers_from_classes",
            [cov for cov, _ in cert.covers] == [cov for cov, _ in expected],
            "covers are not (V_half minus U) plus V1 for the listed classes")
    rep.add("lambda_from_coloring",
            [lam for _, lam in cert.covers] == [lam for _, lam in expected],
            "lambda differs from y_U / chi_f(H)")

    bad_cover = None
    for members, _ in cert.covers:
        e = first_uncovered_edge(g, members)
        if e is not None:
            bad_cover = (members, e)
            break
    rep.add("covers_are_vertex_covers", bad_cover is None,
            f"cover {list(bad_cover[0])} misses edge {bad_cover[1]}" if bad_cover else "")
    lam_total = sum((lam for _, lam in cert.covers), ZERO)
    rep.add("lambda_convex",
            lam_total == 1 and all(lam >= 0 for _, lam in cert.covers),
            f"lambda sum {lam_total}")

    combo = [ZERO] * n
    for members, lam in cert.covers:
        for v in members:
            if 0 <= v < n:
                combo[v] += lam
    short = next((v for v in range(n) if half_ok and cert.rho * x[v] < combo[v]), None)
    rep.add("scaled_x_dominates_covers", half_ok and short is None,
            f"vertex {short}: rho*x = {cert.rho * x[short]} < {combo[short]}"
            if short is not None else "")
    rep.add("scaled_x_in_integer_hull",
            all(rep[k].ok for k in ("covers_are_vertex_covers", "lambda_convex",
                                    "scaled_x_dominates_covers")),
            "rho*x not shown to dominate a convex combination of covers")

    if oracle:
        _oracle_checks(rep, g, cert, h_graph, oracle_limit)
    return rep


def _oracle_checks(rep: Report, g: Graph, cert: GapCertificate, h_graph, limit: int) -> None:
    if g.n > limit:
        rep.add("oracle_size", False, f"{g.n} vertices above oracle limit {limit}")
        return
    col, _ = chi_f_bruteforce(g, limit=limit)
    rep.add("oracle_chi_f", col.value == cert.chi_f,
            f"enumeration gives {col.value}, certificate says {cert.chi_f}")
    mis = maximal_independent_sets(g)
    c = cert.worst_cost
    heavy = next((u for u in mis if _cost(c, u) > 1), None)
    rep.add("oracle_cost_dual_feasible", heavy is None,
            f"independent set {list(heavy)} has cost {_cost(c, heavy)} > 1" if heavy else "")
    # the cheapest cover is the complement of a heaviest maximal independent set
    best = sum(c, ZERO) - max(_cost(c, u) for u in mis)
    rep.add("oracle_ip_optimal", best == cert.ip_value,
            f"enumeration gives {best}, certificate says {cert.ip_value}")
    if h_graph is not None:
        h_val = chi_f_bruteforce(h_graph, limit=limit)[0].value if h_graph.n else ZERO
        rep.add("oracle_chi_f_h", h_val == cert.h_coloring.value,
                f"enumeration gives {h_val}, certificate says {cert.h_coloring.value}")
