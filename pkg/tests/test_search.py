import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcol import (
    BudgetExhaustedError,
    ParameterError,
    RingParams,
    SearchConfig,
    complete_bipartite,
    compute_W,
    compute_chromatic_index,
    compute_w,
    continuity_scan,
    find_interval_t,
    find_proper_t,
    ring_chromatic_index,
    ring_graph,
    spectrum,
    verify,
)

EDGE_DFS = SearchConfig(strategy="edge_dfs")
START = SearchConfig(strategy="start_assignment")


def cycle(k):
    return ring_graph(RingParams(1, k))


# ---------------------------------------------------------------------------
# feasibility queries
# ---------------------------------------------------------------------------


def test_triangle_has_no_interval_coloring_at_any_t():
    g = cycle(3)
    for t in range(1, len(g.edges) + 1):
        assert find_interval_t(g, t).status == "infeasible"


def test_c4_alternating_witness_at_two_colors():
    g = cycle(4)
    outcome = find_interval_t(g, 2)
    assert outcome.status == "witness"
    w = outcome.witness
    assert verify(g, w).is_interval_coloring
    for v in g.vertices:
        assert spectrum(g, w, v).colors == (1, 2)


def test_c4_infeasible_at_four_colors():
    g = cycle(4)
    for cfg in (EDGE_DFS, START):
        assert find_interval_t(g, 4, cfg).status == "infeasible"


def test_t_above_edge_count_is_infeasible_without_search():
    g = cycle(4)
    outcome = find_interval_t(g, 5)
    assert outcome.status == "infeasible"
    assert outcome.nodes_explored == 0


def test_every_witness_passes_the_verifier():
    for n, k, t in [(1, 4, 2), (1, 4, 3), (1, 6, 3), (2, 4, 4), (2, 4, 7)]:
        g = ring_graph(RingParams(n, k))
        for cfg in (EDGE_DFS, START):
            outcome = find_interval_t(g, t, cfg)
            assert outcome.status == "witness"
            report = verify(g, outcome.witness)
            assert report.is_interval_coloring
            assert outcome.witness.t == t


def test_bad_parameters_rejected():
    g = cycle(4)
    with pytest.raises(ParameterError):
        find_interval_t(g, 0)
    with pytest.raises(ParameterError):
        SearchConfig(strategy="guess")
    with pytest.raises(ParameterError):
        SearchConfig(node_limit=0)
    with pytest.raises(ParameterError):
        SearchConfig(t_max=0)


# ---------------------------------------------------------------------------
# budgets
# ---------------------------------------------------------------------------


def test_budget_cutoff_is_never_reported_as_infeasible():
    g = ring_graph(RingParams(2, 4))
    outcome = find_interval_t(g, 8, SearchConfig(node_limit=10))
    assert outcome.status == "exhausted_budget"
    assert outcome.nodes_explored == 11  # the first over-budget node aborts


def test_compute_w_budget_is_inconclusive():
    g = ring_graph(RingParams(2, 4))
    report = compute_w(g, SearchConfig(node_limit=5))
    assert report.value is None
    assert report.status == "inconclusive"


def test_compute_chromatic_index_budget_raises():
    g = complete_bipartite(3)
    with pytest.raises(BudgetExhaustedError):
        compute_chromatic_index(g, SearchConfig(node_limit=2))


def test_compute_W_budget_degrades_to_lower_bound():
    g = ring_graph(RingParams(2, 4))
    # enough to find the t=7 witness but not to exhaust any higher t
    report = compute_W(g, SearchConfig(node_limit=20_000))
    assert report.value == 7
    assert report.status == "lower_bound_only"


# ---------------------------------------------------------------------------
# span scans
# ---------------------------------------------------------------------------


def test_least_span_small_cases():
    assert compute_w(cycle(4)).value == 2
    assert compute_w(ring_graph(RingParams(2, 4))).value == 4
    c3 = compute_w(cycle(3))
    assert c3.value is None
    assert c3.status == "not_interval_colorable"


def test_greatest_span_c4():
    report = compute_W(cycle(4))
    assert report.value == 3
    assert report.status == "exact"
    assert report.trail == ((4, "infeasible"), (3, "witness"))


def test_greatest_span_c6():
    report = compute_W(cycle(6))
    assert report.value == 4
    assert report.status == "exact"
    assert dict(report.trail) == {6: "infeasible", 5: "infeasible", 4: "witness"}


def test_chromatic_index_small_cases():
    assert compute_chromatic_index(cycle(3)) == 3
    assert compute_chromatic_index(cycle(4)) == 2
    assert compute_chromatic_index(complete_bipartite(3)) == 3


def test_proper_coloring_search_statuses():
    g = cycle(5)
    assert find_proper_t(g, 2).status == "infeasible"
    outcome = find_proper_t(g, 3)
    assert outcome.status == "witness"
    assert verify(g, outcome.witness).is_proper


def test_continuity_scan_results():
    assert continuity_scan(cycle(4)) == [(2, "witness"), (3, "witness")]
    assert continuity_scan(cycle(6)) == [(2, "witness"), (3, "witness"), (4, "witness")]
    assert continuity_scan(cycle(3)) == []


def test_continuity_scan_with_explicit_top():
    scan = continuity_scan(ring_graph(RingParams(2, 4)), t_hi=7)
    assert scan == [(4, "witness"), (5, "witness"), (6, "witness"), (7, "witness")]


# ---------------------------------------------------------------------------
# determinism and strategy agreement
# ---------------------------------------------------------------------------


def test_queries_are_deterministic():
    g = ring_graph(RingParams(2, 4))
    a = find_interval_t(g, 7)
    b = find_interval_t(g, 7)
    assert a.nodes_explored == b.nodes_explored
    assert a.witness.colors == b.witness.colors


@given(k=st.integers(3, 7), t=st.integers(1, 8))
@settings(max_examples=60, deadline=None)
def test_strategies_agree_on_cycles(k, t):
    g = cycle(k)
    a = find_interval_t(g, t, EDGE_DFS)
    b = find_interval_t(g, t, START)
    assert a.status == b.status


@given(n=st.integers(1, 3), t=st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_strategies_agree_on_complete_bipartite(n, t):
    g = complete_bipartite(n)
    a = find_interval_t(g, t, EDGE_DFS)
    b = find_interval_t(g, t, START)
    assert a.status == b.status


def test_oracle_matches_formulas_on_even_product_grid():
    for n in (1, 2):
        for k in range(3, 7):
            if (n * k) % 2:
                continue
            params = RingParams(n, k)
            g = ring_graph(params)
            w = compute_w(g)
            assert w.value == 2 * n and w.status == "exact"
            assert compute_chromatic_index(g) == ring_chromatic_index(params)


def test_known_bipartite_span_extremes():
    # K_{n,n} spans exactly n .. 2n-1; check the edges of that window at n=3
    g = complete_bipartite(3)
    assert find_interval_t(g, 2).status == "infeasible"
    assert find_interval_t(g, 3).status == "witness"
    assert find_interval_t(g, 5).status == "witness"
    assert find_interval_t(g, 6).status == "infeasible"
