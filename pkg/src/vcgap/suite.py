"""Seeded property sweep: one record per graph, violations listed explicitly."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import random_costs
from .errors import InvariantError
from .fracchrom import DEFAULT_ORACLE_LIMIT
from .gap import gap_from_chi_f, verify_certificate, worst_case_certificate
from .graphs import Graph, is_bipartite
from .vclp import DEFAULT_EXACT_LIMIT, min_vc_exact, solve_vc_lp, solve_vc_lp_bipartite_double


@dataclass
class GraphResult:
    name: str
    n: int
    m: int
    chi_f: Fraction | None = None
    rho: Fraction | None = None
    trials: int = 0
    undefined_ratios: int = 0
    max_ratio: Fraction | None = None
    violations: list[str] = field(default_factory=list)


def rng_for(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def check_graph(
    name: str,
    g: Graph,
    trials: int = 100,
    seed: int = 0,
    limit_exact: int = DEFAULT_EXACT_LIMIT,
    limit_oracle: int = DEFAULT_ORACLE_LIMIT,
) -> GraphResult:
    res = GraphResult(name, g.n, g.m)
    rho = None
    if g.m:
        cert = worst_case_certificate(g, limit_exact=limit_exact)
        res.chi_f, res.rho = cert.chi_f, cert.rho
        rho = cert.rho
        report = verify_certificate(g, cert, oracle=g.n <= limit_oracle, oracle_limit=limit_oracle)
        res.violations += [f"certificate {c.name}: {c.detail}" for c in report.failed()]
    bipartite = is_bipartite(g)
    rng = rng_for(seed, name)
    # Draws whose LP optimum is 0 have no ratio; they are redrawn (up to a cap)
    # so that `trials` ratios are actually compared against the gap.
    draws = 0
    while g.m and res.trials < trials and draws < 10 * trials + 10:
        draws += 1
        c = random_costs(rng, g.n)
        try:
            lp = solve_vc_lp(g, c)
        except InvariantError as exc:
            res.violations.append(f"draw {draws}: {exc}")
            continue
        lp2 = solve_vc_lp_bipartite_double(g, c)
        _, ip = min_vc_exact(g, c, limit=limit_exact)
        if lp.objective != lp2.objective:
            res.violations.append(
                f"draw {draws}: simplex LP {lp.objective} != min-cut LP {lp2.objective}")
        if not lp.objective <= ip <= 2 * lp.objective:
            res.violations.append(f"draw {draws}: sandwich fails, LP {lp.objective}, IP {ip}")
        if bipartite and ip != lp.objective:
            res.violations.append(f"draw {draws}: bipartite but LP {lp.objective} != IP {ip}")
        if lp.objective == 0:
            res.undefined_ratios += 1
            continue
        res.trials += 1
        ratio = ip / lp.objective
        if res.max_ratio is None or ratio > res.max_ratio:
            res.max_ratio = ratio
        if rho is not None and ratio > rho:
            res.violations.append(f"draw {draws}: ratio {ratio} exceeds gap {rho}")
    if g.m and res.trials < trials:
        res.violations.append(f"only {res.trials} of {trials} draws had a defined ratio")
    if rho is not None and bipartite and rho != gap_from_chi_f(2):
        res.violations.append(f"bipartite graph with gap {rho}")
    return res


def _check_star(args):
    return check_graph(*args)


def run_suite(graphs, trials=100, seed=0, limit_exact=DEFAULT_EXACT_LIMIT,
              limit_oracle=DEFAULT_ORACLE_LIMIT, jobs=1) -> list[GraphResult]:
    work = [(name, g, trials, seed, limit_exact, limit_oracle) for name, g in graphs]
    if jobs <= 1:
        return [_check_star(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_star, work))
