import numpy as np
import pytest

from src.exceptions import ConfigError
from src.generators import Graph
from src.simulation import (
    OutbreakConfig,
    Regime,
    expected_secondary,
    harmonic,
    neighbor_ranks,
    rank_beta,
    run_ensemble,
    run_outbreak,
    simulate_secondary,
    sweep_p_mix,
)


def star_graph(n_leaves):
    return Graph(n_nodes=n_leaves + 1, edge_u=np.zeros(n_leaves, dtype=int), edge_v=np.arange(1, n_leaves + 1))


def matching_graph(n_pairs):
    return Graph(n_nodes=2 * n_pairs, edge_u=np.arange(0, 2 * n_pairs, 2), edge_v=np.arange(1, 2 * n_pairs, 2))


# =============================================================================
# ranks and probabilities
# =============================================================================

def test_harmonic():
    assert harmonic(1) == 1.0
    assert harmonic(3) == pytest.approx(11 / 6)


def test_rank_beta_examples():
    assert rank_beta(1, 1, 0.3) == pytest.approx(0.3)
    assert rank_beta(3, 2, 0.01) == pytest.approx(0.00818181818, rel=1e-9)
    assert sum(rank_beta(3, r, 0.01, clip=False) for r in (1, 2, 3)) == pytest.approx(0.03)


def test_rank_beta_clipping():
    assert rank_beta(5, 1, 0.5, clip=False) > 1.0
    assert rank_beta(5, 1, 0.5, clip=True) == 1.0


def test_rank_beta_rejects_out_of_range_rank():
    with pytest.raises(ConfigError):
        rank_beta(3, 4, 0.01)
    with pytest.raises(ConfigError):
        rank_beta(3, 0, 0.01)


def test_neighbors_ranked_by_degree():
    # node 1 has degree 3, node 2 has degree 7
    edges = [(0, 1), (0, 2), (1, 3), (1, 4)] + [(2, k) for k in range(5, 11)]
    u, v = zip(*edges)
    graph = Graph(n_nodes=11, edge_u=np.array(u), edge_v=np.array(v))
    ranks = neighbor_ranks(graph)
    start = graph.indptr[0]
    assert dict(zip(graph.neighbors(0), ranks[start:start + 2])) == {1: 1, 2: 2}


def test_equal_degree_neighbors_ranked_by_index(path):
    graph = path(3)
    ranks = neighbor_ranks(graph)
    start = graph.indptr[1]
    assert dict(zip(graph.neighbors(1), ranks[start:start + 2])) == {0: 1, 2: 2}


def test_isolated_node_has_no_ranks():
    graph = Graph(n_nodes=3, edge_u=np.array([0]), edge_v=np.array([1]))
    assert graph.indptr[2] == graph.indptr[3]
    assert len(neighbor_ranks(graph)) == 2


# =============================================================================
# run_outbreak
# =============================================================================

def test_zero_beta_never_spreads(triangle_with_tail):
    curve = run_outbreak(triangle_with_tail, OutbreakConfig(beta=0.0, steps=5, replicates=1))
    assert list(curve.total) == [1] * 6
    assert list(curve.new) == [1, 0, 0, 0, 0, 0]


def test_full_beta_follows_graph_distance(path):
    curve = run_outbreak(path(6), OutbreakConfig(beta=1.0, steps=7, seed_node=0, replicates=1))
    assert list(curve.total) == [1, 2, 3, 4, 5, 6, 6, 6]


def test_degree_one_graph_regimes_coincide():
    graph = matching_graph(50)
    uniform = run_outbreak(graph, OutbreakConfig(beta=0.4, p_mix=0.0, steps=3, master_seed=9), 2)
    ranked = run_outbreak(graph, OutbreakConfig(beta=0.4, p_mix=1.0, steps=3, master_seed=9), 2)
    np.testing.assert_array_equal(uniform.total, ranked.total)


def test_conservation_and_bookkeeping(triangle_with_tail):
    curve = run_outbreak(triangle_with_tail, OutbreakConfig(beta=0.5, p_mix=0.5, steps=10, master_seed=1))
    assert np.all(curve.total <= 4)
    assert np.all(np.diff(curve.total) >= 0)
    assert curve.new.sum() == curve.total[-1]


def test_clipped_attempts_are_counted():
    graph = star_graph(5)
    config = OutbreakConfig(beta=0.5, p_mix=1.0, steps=1, seed_node=0)
    curve = run_outbreak(graph, config)
    # only the rank-1 leaf has C_i / 1 = 5 * 0.5 / H(5) > 1
    assert list(curve.clipped) == [0, 1]
    unclipped = run_outbreak(graph, OutbreakConfig(beta=0.5, p_mix=1.0, steps=1, seed_node=0, clip=False))
    assert unclipped.clipped.sum() == 0


def test_invalid_config_and_seed_node(path):
    with pytest.raises(ConfigError):
        run_outbreak(path(3), OutbreakConfig(beta=1.5))
    with pytest.raises(ConfigError):
        run_outbreak(path(3), OutbreakConfig(seed_node=3))


# =============================================================================
# ensembles
# =============================================================================

def test_single_replicate_ci_is_degenerate(triangle_with_tail):
    result = run_ensemble(triangle_with_tail, OutbreakConfig(beta=0.5, steps=4, replicates=1))
    np.testing.assert_array_equal(result.total_ci_lo, result.mean_total)
    np.testing.assert_array_equal(result.total_ci_hi, result.mean_total)


def test_deterministic_dynamics_have_zero_width(path):
    result = run_ensemble(path(5), OutbreakConfig(beta=1.0, steps=4, replicates=8, seed_node=2))
    np.testing.assert_allclose(result.total_ci_hi - result.total_ci_lo, 0.0)
    assert list(result.mean_total) == [1, 3, 5, 5, 5]


def test_sweep_frame_layout(triangle_with_tail):
    frame = sweep_p_mix(triangle_with_tail, OutbreakConfig(beta=0.3, steps=3, replicates=4), [0.0, 1.0])
    assert list(frame.columns) == [
        "p_mix", "step", "mean_total", "total_ci_lo", "total_ci_hi",
        "mean_new", "new_ci_lo", "new_ci_hi", "clipped_attempts",
    ]
    assert len(frame) == 2 * 4
    assert list(frame["p_mix"].unique()) == [0.0, 1.0]


def test_ensemble_is_reproducible(triangle_with_tail):
    config = OutbreakConfig(beta=0.3, p_mix=0.75, steps=5, replicates=10, master_seed=4)
    first = run_ensemble(triangle_with_tail, config)
    again = run_ensemble(triangle_with_tail, config)
    np.testing.assert_array_equal(first.mean_total, again.mean_total)


# =============================================================================
# secondary infections
# =============================================================================

@pytest.mark.parametrize("regime", [Regime.UNIFORM, Regime.RANK])
def test_expected_secondary_full_neighborhood(regime):
    assert expected_secondary(star_graph(3), 0, regime, 0.01) == pytest.approx(0.03)


def test_expected_secondary_rank_one_only():
    value = expected_secondary(star_graph(3), 0, Regime.RANK, 0.01, susceptible=[1])
    assert value == pytest.approx(0.0163636363, rel=1e-8)


def test_clipping_lowers_expected_secondary_below_uniform():
    graph = star_graph(5)
    # C_i = 5 * 0.5 / H(5) > 1, so the rank-1 probability is clipped to 1
    clipped = expected_secondary(graph, 0, Regime.RANK, 0.5, clip=True)
    assert clipped < 5 * 0.5
    assert clipped == pytest.approx(1.0 + sum(rank_beta(5, r, 0.5, clip=False) for r in range(2, 6)))
    assert expected_secondary(graph, 0, Regime.RANK, 0.5, clip=False) == pytest.approx(5 * 0.5)


def test_simulated_secondary_matches_expectation():
    counts = simulate_secondary(star_graph(20), 0, Regime.RANK, beta=0.05, trials=20_000, seed=1)
    standard_error = counts.std(ddof=1) / np.sqrt(len(counts))
    assert abs(counts.mean() - 20 * 0.05) <= 4 * standard_error
