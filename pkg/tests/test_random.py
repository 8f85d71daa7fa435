import math
from dataclasses import replace

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import ks_2samp

from cliquecol import (
    Budget,
    Graph,
    RggConfig,
    SweepConfig,
    chi_c_by_components,
    clique_chromatic_number_exact,
    component_census,
    estimate_mu_c5,
    find_triangle_free_c5,
    is_clique_colouring,
    run_sweep,
    sample_rgg,
    wilson_interval,
)
from cliquecol.experiments import CSV_COLUMNS, run_trial
from cliquecol.rgg import sample_points, split_components, trial_rng
from conftest import graphs
from oracles import to_nx


def test_config_validation():
    for bad in (dict(n=0, r=1.0), dict(n=5, r=0.0), dict(n=5, r=1.0, model="torus")):
        with pytest.raises(ValueError):
            RggConfig(**bad)
    with pytest.raises(ValueError):
        SweepConfig(10, 0.5, trials=0)


def test_sample_basics():
    ps, g = sample_rgg(RggConfig(1, 3.0))
    assert len(ps) == 1 and g.n == 1 and g.m == 0
    cfg = RggConfig(500, 1.0, seed=9)
    a, ga = sample_rgg(cfg, trial=4)
    b, gb = sample_rgg(cfg, trial=4)
    assert np.array_equal(a.points, b.points) and ga == gb
    c, _ = sample_rgg(cfg, trial=5)
    assert not np.array_equal(a.points, c.points)
    assert np.abs(a.points).max() <= math.sqrt(500) / 2


def test_poisson_counts():
    cfg = RggConfig(400, 1.0, model="poisson", seed=1)
    counts = [len(sample_points(cfg, trial_rng(1, t))) for t in range(400)]
    assert len(set(counts)) > 10
    assert abs(np.mean(counts) - 400) < 4 * math.sqrt(400 / 400)


def test_mean_edge_count_at_nr2_one():
    # [DERIVED] expected edges = C(n,2) P(d <= r) in a square of side L:
    # P = pi r^2 / L^2 - 8 r^3 / (3 L^3) + r^4 / (2 L^4)
    n, r = 10**4, 10**-2
    L = math.sqrt(n)
    expected = n * (n - 1) / 2 * (math.pi * r**2 / L**2 - 8 * r**3 / (3 * L**3) + r**4 / (2 * L**4))
    assert expected == pytest.approx(math.pi / 2, rel=1e-3)
    cfg = SweepConfig(n, r, trials=200, seed=4)
    edges = np.array([run_trial(cfg, t, solve=False).n_edges for t in range(200)])
    assert abs(edges.mean() - expected) < 3 * edges.std(ddof=1) / math.sqrt(200)


def test_poisson_conditioned_matches_uniform():
    n, r = 200, 0.8
    uni = RggConfig(n, r, seed=21)
    poi = RggConfig(n, r, model="poisson", seed=22)
    a = [sample_rgg(uni, t)[1].m for t in range(1000)]
    b, t = [], 0
    while len(b) < 1000:
        pts = sample_points(poi, trial_rng(poi.seed, t))
        t += 1
        if len(pts) == n:  # condition on N = n
            from cliquecol.graph import geometric_pairs

            b.append(len(geometric_pairs(pts, r)))
    assert ks_2samp(a, b).pvalue > 0.01


# -- census and certificates ----------------------------------------------------

def test_census_examples():
    c5 = Graph.cycle(5)
    census = component_census(c5.disjoint_union(c5), c5)
    assert census.matches == 2 and census.sizes == {5: 2} and census.largest == 5
    assert component_census(Graph.cycle(6), c5).matches == 0
    with pytest.raises(ValueError):
        component_census(c5, Graph.cycle(11))
    with pytest.raises(ValueError):
        component_census(c5, Graph.empty(2))


@given(graphs(max_n=10), graphs(min_n=1, max_n=5))
def test_census_matches_networkx(g, h):
    if not nx.is_connected(to_nx(h)):
        return
    census = component_census(g, h)
    want = sum(nx.is_isomorphic(to_nx(g).subgraph(c), to_nx(h))
               for c in nx.connected_components(to_nx(g)))
    assert census.matches == want
    assert census.total == g.n


def test_sparse_regime_components_stay_small():
    # nr^4 -> 0: components of 3 or more vertices become rare
    n = 10**5
    cfg = RggConfig(n, n ** (-3 / 8), seed=8)
    big = 0
    for t in range(100):
        from cliquecol.graph import geometric_pairs
        from cliquecol.rgg import component_labels

        pts = sample_points(cfg, trial_rng(8, t))
        sizes = np.bincount(component_labels(n, geometric_pairs(pts, cfg.r)))
        assert sizes.sum() == n
        big += int((sizes >= 3).any())
    assert big / 100 <= 0.1


def test_triangle_free_c5_examples():
    assert find_triangle_free_c5(Graph.cycle(5)) is not None
    g = Graph.from_edges(6, Graph.cycle(5).edges() + [(5, 0), (5, 1)])
    assert find_triangle_free_c5(g) is None
    assert find_triangle_free_c5(Graph.complete(5)) is None


def _oracle_has_tf_c5(g):
    h = to_nx(g)
    tri = {frozenset((u, v)) for u, v in h.edges() if set(h[u]) & set(h[v])}
    for cyc in nx.simple_cycles(h, length_bound=5):
        if len(cyc) == 5 and all(frozenset((cyc[i], cyc[(i + 1) % 5])) not in tri for i in range(5)):
            return True
    return False


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_triangle_free_c5_matches_oracle(g):
    w = find_triangle_free_c5(g)
    assert (w is not None) == _oracle_has_tf_c5(g)
    if w is not None:
        assert g.induced(list(w)) == Graph.cycle(5)
        for i in range(5):
            assert not g.adj[w[i]] & g.adj[w[(i + 1) % 5]]


# -- chi_c by components ----------------------------------------------------------

def test_chi_by_components_examples():
    edges = Graph.from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
    res = chi_c_by_components(edges)
    assert res.exact and res.k == 2
    assert chi_c_by_components(Graph.empty(4)).k == 1


@given(st.lists(graphs(min_n=1, max_n=7), min_size=1, max_size=4))
def test_chi_by_components_matches_exact(parts):
    g = parts[0]
    for p in parts[1:]:
        g = g.disjoint_union(p)
    res = chi_c_by_components(g)
    assert res.exact
    assert res.k == clique_chromatic_number_exact(g)[0]
    assert is_clique_colouring(g, res.witness)[0]
    largest = max(map(len, g.components()), default=0)
    if largest <= 4:
        assert res.k <= 2
    if largest <= 10:
        assert res.k <= 3


def test_bounds_are_monotone_and_witnessed():
    for t in range(6):
        ps, g = sample_rgg(RggConfig(300, 1.3, seed=3), trial=t)
        exact = chi_c_by_components(g, ps=ps, budget=Budget(max_component_order=10**6))
        bounded = chi_c_by_components(g, ps=ps, budget=Budget(max_component_order=5))
        assert exact.exact and bounded.method == "bounds"
        assert bounded.lower <= exact.k <= bounded.upper
        for res in (exact, bounded):
            assert is_clique_colouring(g, res.witness)[0]
            assert res.witness.palette_size <= res.upper


def test_exact_trials_rewitness():
    cfg = RggConfig(2000, 2000 ** (-1 / 8), seed=2)
    for t in range(15):
        ps, g = sample_rgg(cfg, trial=t)
        res = chi_c_by_components(g, ps=ps)
        assert res.exact and is_clique_colouring(g, res.witness)[0]


def test_split_components_covers_all_vertices():
    ps, g = sample_rgg(RggConfig(3000, 0.6, seed=1))
    from cliquecol.graph import geometric_pairs

    pairs = geometric_pairs(ps.points, 0.6)
    seen = []
    for members, sub in split_components(g.n, pairs, min_size=1):
        assert g.induced(list(members)) == sub
        seen.extend(members.tolist())
    assert sorted(seen) == list(range(g.n))


# -- sweeps -----------------------------------------------------------------------

def test_wilson_interval():
    lo, hi = wilson_interval(0, 10)
    z = 1.959963984540054
    assert lo == pytest.approx(0, abs=1e-12) and hi == pytest.approx(z * z / (10 + z * z))
    lo, hi = wilson_interval(30, 100)
    assert lo < 0.3 < hi and hi - lo < 0.2
    with pytest.raises(ValueError):
        wilson_interval(0, 0)


def test_sweep_deterministic_and_schedule_free():
    cfgs = [SweepConfig(2000, 2000**-0.5, trials=30, seed=5),
            SweepConfig(500, 0.9, model="poisson", trials=20, seed=6)]
    a = run_sweep(cfgs)
    assert a.to_csv() == run_sweep(cfgs).to_csv()
    assert a.to_csv() == run_sweep(cfgs, jobs=2).to_csv()
    assert a.to_csv().splitlines()[0] == ",".join(CSV_COLUMNS)
    for res in a.results:
        assert all(o.component_total == o.n_points for o in res.outcomes)
        exact = sum(r.p_hat for r in res.rows() if r.method_tag == "exact")
        lower = sum(r.p_hat for r in res.rows() if r.method_tag == "lower_bound")
        assert exact + lower == pytest.approx(1.0)


def test_sweep_bounds_rows_flagged():
    # a component cap of 3 forces every larger component onto bounds
    cfg = SweepConfig(400, 1.2, trials=6, seed=1, budget=Budget(max_component_order=3))
    table = run_sweep([cfg])
    tags = {r.method_tag for r in table.rows}
    assert {"lower_bound", "upper_bound"} <= tags
    for o in table.results[0].outcomes:
        assert o.lower <= o.upper


def test_sweep_dense_path_reports_bounds():
    cfg = SweepConfig(3000, 6.0, trials=2, seed=1, budget=Budget(max_edges=10_000))
    res = run_sweep([cfg]).results[0]
    for o in res.outcomes:
        assert o.method == "bounds" and o.n_edges is None
        assert o.lower == 2 and 2 <= o.upper <= 9


def test_sweep_trials_override_validation():
    with pytest.raises(ValueError):
        run_sweep([SweepConfig(10, 0.5, trials=1)], trials=0)
    assert replace(SweepConfig(10, 0.5), trials=3).trials == 3


@pytest.mark.slow
def test_c5_estimate_consistency():
    est = estimate_mu_c5(10**4, 1500, seed=3)
    assert est.trials == 1500 and est.mean >= 0
    lo, hi = est.p_any_ci
    assert lo <= 1 - math.exp(-est.mean) <= hi
    doubled = estimate_mu_c5(2 * 10**4, 750, seed=4)
    # both means sit within a combined 3-sigma band
    spread = 3 * math.hypot(est.se or 0, doubled.se or 0) + 1e-3
    assert abs(est.mean - doubled.mean) <= spread
