import random
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from vcgap.corpus import random_costs, standard_corpus
from vcgap.errors import EdgelessGraphError, InvariantError, RatioUndefinedError, SizeLimitError
from vcgap.gap import (
    decompose_upper,
    empirical_ratio,
    gap_from_chi_f,
    integrality_gap,
    verify_certificate,
    worst_case_certificate,
)
from vcgap.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    grotzsch,
    is_vertex_cover,
    petersen,
)
from vcgap.vclp import HalfIntegralVC, solve_vc_lp

from oracles import chi_f_highs, min_vc_bruteforce, min_vc_lp_half_integral
from strategies import graphs

HALF = F(1, 2)


def test_gap_bipartite():
    assert integrality_gap(cycle(4)) == 1
    assert integrality_gap(complete_bipartite(2, 3)) == 1


def test_gap_c5():
    assert integrality_gap(cycle(5)) == F(6, 5)


@pytest.mark.parametrize("n", range(3, 9))
def test_gap_complete(n):
    assert integrality_gap(complete(n)) == 2 - F(2, n)


@pytest.mark.parametrize("k", range(1, 6))
def test_gap_odd_cycles_closed_form(k):
    chi, _ = chi_f_highs(2 * k + 1, cycle(2 * k + 1).edges)
    assert chi == 2 + F(1, k)
    assert integrality_gap(cycle(2 * k + 1)) == F(2 * k + 2, 2 * k + 1)


def test_gap_edgeless_refused():
    with pytest.raises(EdgelessGraphError, match="without edges"):
        integrality_gap(Graph.from_edges(3, []))
    with pytest.raises(EdgelessGraphError):
        worst_case_certificate(Graph.from_edges(1, []))


def test_worst_case_k3():
    cert = worst_case_certificate(complete(3))
    assert cert.worst_cost == (1, 1, 1)
    assert (cert.lp_value, cert.ip_value) == (F(3, 2), 2)
    assert cert.achieved_ratio == F(4, 3) == cert.rho
    assert cert.lp_value == min_vc_lp_half_integral(3, complete(3).edges, cert.worst_cost)
    assert cert.ip_value == min_vc_bruteforce(3, complete(3).edges, cert.worst_cost)


def test_worst_case_c5():
    cert = worst_case_certificate(cycle(5))
    assert cert.worst_cost == (HALF,) * 5
    assert (cert.lp_value, cert.ip_value) == (F(5, 4), F(3, 2))
    assert cert.achieved_ratio == F(6, 5)


def test_worst_case_single_edge():
    cert = worst_case_certificate(complete(2))
    assert cert.worst_cost == (1, 1)
    assert (cert.lp_value, cert.ip_value, cert.achieved_ratio) == (1, 1, 1)


def test_worst_case_size_limit():
    with pytest.raises(SizeLimitError):
        worst_case_certificate(cycle(9), limit_exact=5)


def test_decompose_k3_equality_case():
    g = complete(3)
    x = solve_vc_lp(g, [1, 1, 1])
    h_col, covers = decompose_upper(g, x)
    assert h_col.value == 3
    assert sorted(covers) == [((0, 1), F(1, 3)), ((0, 2), F(1, 3)), ((1, 2), F(1, 3))]
    combo = [sum(lam for cov, lam in covers if v in cov) for v in range(3)]
    assert combo == [gap_from_chi_f(3) * HALF] * 3 == [F(2, 3)] * 3


def test_decompose_single_edge_empty_h():
    g = complete(2)
    x = HalfIntegralVC.from_vector([1, 0], [1, 1])
    h_col, covers = decompose_upper(g, x)
    assert h_col.classes == () and h_col.value == 0
    assert covers == (((0,), 1),)


def test_decompose_c5():
    g = cycle(5)
    x = solve_vc_lp(g, [1] * 5)
    h_col, covers = decompose_upper(g, x)
    assert h_col.value == F(5, 2)
    assert len(covers) == 5
    assert all(len(cov) == 3 and lam == F(1, 5) for cov, lam in covers)
    for v in range(5):
        outside = sum(lam for (members, _), (_, lam) in zip(h_col.classes, covers)
                      if v not in members)
        assert outside <= F(6, 5) * HALF == F(3, 5)


def test_decompose_rejects_non_half_integral():
    bad = HalfIntegralVC((F(1, 3), F(2, 3)), F(1), (), (), ())
    with pytest.raises(InvariantError):
        decompose_upper(complete(2), bad)


def test_verify_k3_passes():
    g = complete(3)
    rep = verify_certificate(g, worst_case_certificate(g), oracle=True)
    assert rep.ok, rep.lines()


def test_verify_catches_lambda_perturbation():
    g = complete(3)
    cert = worst_case_certificate(g)
    (cov, lam), *rest = cert.covers
    rep = verify_certificate(g, replace(cert, covers=((cov, lam + F(1, 10)), *rest)))
    assert not rep["lambda_convex"].ok
    for name in ("covers_are_vertex_covers", "rho_formula", "ratio_equals_rho",
                 "ip_cover_valid", "lp_value_optimal", "h_coloring_valid"):
        assert rep[name].ok


def test_verify_catches_short_cover():
    g = complete(3)
    cert = worst_case_certificate(g)
    (cov, lam), *rest = cert.covers
    rep = verify_certificate(g, replace(cert, covers=((cov[:1], lam), *rest)))
    check = rep["covers_are_vertex_covers"]
    assert not check.ok
    assert "misses edge" in check.detail
    assert rep["lambda_convex"].ok


def test_verify_catches_wrong_rho_and_chi():
    g = cycle(5)
    cert = worst_case_certificate(g)
    assert not verify_certificate(g, replace(cert, rho=F(5, 4)))["rho_formula"].ok
    rep = verify_certificate(g, replace(cert, chi_f=F(3), rho=gap_from_chi_f(3)), oracle=True)
    assert not rep["oracle_chi_f"].ok
    assert not rep["worst_cost_total_is_chi_f"].ok


def test_verify_catches_bad_ip_claim():
    g = petersen()
    cert = worst_case_certificate(g)
    rep = verify_certificate(g, replace(cert, ip_value=cert.ip_value - HALF), oracle=True)
    assert not rep["ip_cover_valid"].ok
    assert not rep["oracle_ip_optimal"].ok


def test_verify_without_oracle_runs_no_oracle_checks():
    g = complete(3)
    rep = verify_certificate(g, worst_case_certificate(g))
    assert not any(c.name.startswith("oracle") for c in rep.checks)


def test_empirical_ratio_examples():
    assert empirical_ratio(complete(3), [1, 1, 1]) == F(4, 3)
    assert empirical_ratio(cycle(4), [1] * 4) == 1
    # brute force: IP = LP = 3 under this skew
    c = [1, 1, 1, 1, 100]
    assert min_vc_bruteforce(5, cycle(5).edges, c) == 3
    assert min_vc_lp_half_integral(5, cycle(5).edges, c) == 3
    assert empirical_ratio(cycle(5), c) == 1 <= F(6, 5)


def test_empirical_ratio_undefined():
    with pytest.raises(RatioUndefinedError) as info:
        empirical_ratio(cycle(5), [0] * 5)
    assert info.value.ip_value == 0
    with pytest.raises(EdgelessGraphError):
        empirical_ratio(Graph.from_edges(2, []), [1, 1])


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=8))
def test_certificate_properties(g):
    if not g.m:
        return
    cert = worst_case_certificate(g)
    assert cert.achieved_ratio == cert.rho == integrality_gap(g)
    assert cert.lp_value <= cert.chi_f / 2
    assert cert.ip_value >= cert.chi_f - 1
    assert sum(lam for _, lam in cert.covers) == 1
    assert all(lam >= 0 for _, lam in cert.covers)
    for cov, _ in cert.covers:
        assert is_vertex_cover(g, cov)
    for v in range(g.n):
        assert cert.rho * cert.x_star.x[v] >= sum(lam for cov, lam in cert.covers if v in cov)
    rep = verify_certificate(g, cert, oracle=True)
    assert rep.ok, rep.lines()


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=8))
def test_random_costs_never_beat_gap(g):
    if not g.m:
        return
    rho = integrality_gap(g)
    rng = random.Random(g.n * 1000 + g.m)
    for _ in range(10):
        c = random_costs(rng, g.n)
        try:
            assert empirical_ratio(g, c) <= rho
        except RatioUndefinedError:
            pass


def test_corpus_gaps_in_range():
    values = [integrality_gap(g) for _, g in standard_corpus()]
    assert all(1 <= v < 2 for v in values)
    assert integrality_gap(grotzsch()) == F(38, 29)
