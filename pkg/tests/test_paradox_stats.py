import dataclasses

import numpy as np
import pytest

from src.aggregators import (
    ParadoxAggregator,
    TestMethod,
    assign_deciles,
    decile_contact_curves,
    decile_frame,
    degree_histogram,
    fit_zipf,
    paradox_by_rank,
    paradox_prevalence,
    rank1_comparison,
    rank_degree_summary,
    spearman,
    wilcoxon_signed_rank,
    zipf_fit,
)
from src.exceptions import (
    ConfigError,
    ConstantInputError,
    EmptyResultError,
    InsufficientDataError,
    ZeroDifferencesError,
)
from src.generators import SynthParams, synth_ego_dataset


# =============================================================================
# paradox_prevalence
# =============================================================================

@pytest.mark.parametrize("aggregator", ["mean", "median"])
def test_prevalence_on_star(star, aggregator):
    assert paradox_prevalence(star(4), aggregator) == pytest.approx(0.8)


def test_prevalence_equal_degrees_is_zero(ego, dataset):
    data = dataset(ego("e1", 7, [7, 7]), ego("e2", 7, [7]))
    assert paradox_prevalence(data) == 0.0


def test_prevalence_single_ego(ego, dataset):
    assert paradox_prevalence(dataset(ego("e1", 1, [5]))) == 1.0


def test_prevalence_mean_and_median_differ(ego, dataset):
    # mean 34 > 10 but median 2 < 10
    data = dataset(ego("e1", 10, [1, 2, 100]))
    assert paradox_prevalence(data, "mean") == 1.0
    assert paradox_prevalence(data, "median") == 0.0


def test_prevalence_skips_egos_without_available_alters(ego, dataset):
    data = dataset(ego("e1", 1, [5]), ego("e2", 9, [None, None]))
    assert paradox_prevalence(data) == 1.0


def test_prevalence_ignores_ego_order_and_ids(dataset):
    original = synth_ego_dataset(
        SynthParams(n_egos=120, alters_per_ego=8, min_alters_per_ego=2, fraction_unavailable=0.2), seed=4
    )
    order = np.random.default_rng(4).permutation(len(original))
    shuffled = dataset(*(
        dataclasses.replace(original.egos[i], ego_id=f"relabelled-{n}") for n, i in enumerate(order)
    ))
    assert paradox_prevalence(shuffled, "mean") == paradox_prevalence(original, "mean")


def test_prevalence_errors(ego, dataset):
    with pytest.raises(EmptyResultError):
        paradox_prevalence(dataset(ego("e1", 3, [None])))
    with pytest.raises(ConfigError):
        paradox_prevalence(dataset(ego("e1", 3, [4])), "mode")


# =============================================================================
# rank1_comparison / paradox_by_rank
# =============================================================================

def test_rank1_fraction_lower(ego, dataset):
    result = rank1_comparison(dataset(ego("e1", 10, [20]), ego("e2", 30, [5])))
    assert result.n == 2
    assert result.fraction_lower == 0.5
    assert result.ego_median == 20.0
    assert result.alter1_mean == 12.5


def test_rank1_excludes_unavailable_first_alter(ego, dataset):
    result = rank1_comparison(dataset(ego("e1", 10, [20]), ego("e2", 30, [5]), ego("e3", 1000, [None, 4])))
    assert result.n == 2
    assert result.ego_mean == 20.0


def test_rank1_all_equal_skips_wilcoxon(ego, dataset):
    result = rank1_comparison(dataset(ego("e1", 4, [4]), ego("e2", 9, [9])))
    assert result.fraction_lower == 0.0
    assert result.wilcoxon is None
    assert "zero" in result.wilcoxon_note


def test_rank1_needs_two_pairs(ego, dataset):
    with pytest.raises(InsufficientDataError):
        rank1_comparison(dataset(ego("e1", 4, [5])))


def test_paradox_by_rank(ego, dataset):
    data = dataset(ego("e1", 5, [10, 1]), ego("e2", 5, [1]))
    rows = paradox_by_rank(data, max_rank=3)
    assert rows[0] == (1, 2, 0.5)
    assert rows[1] == (2, 1, 0.0)
    assert rows[2][1] == 0 and np.isnan(rows[2][2])


# =============================================================================
# rank_degree_summary / degree_histogram
# =============================================================================

def test_rank_degree_summary_medians(ego, dataset):
    data = dataset(ego("e1", 1, [2, 10]), ego("e2", 1, [4, 20]))
    summaries = rank_degree_summary(data, max_rank=3)
    assert [s.median_k for s in summaries[:2]] == [3.0, 15.0]
    assert summaries[2].n_dyads == 0
    assert np.isnan(summaries[2].mean_k)


def test_rank_degree_summary_single_dyad(ego, dataset):
    summary = rank_degree_summary(dataset(ego("e1", 1, [42])), max_rank=1)[0]
    assert summary.n_dyads == 1
    assert summary.mean_k == summary.median_k == summary.q25 == summary.q75 == 42.0


def test_degree_histogram(ego, dataset):
    data = dataset(ego("e1", 2, [5]), ego("e2", 2, [5, None]), ego("e3", 7, [1]))
    egos = degree_histogram(data, "ego")
    assert list(egos["degree"]) == [2, 7]
    assert list(egos["probability"]) == pytest.approx([2 / 3, 1 / 3])
    alters = degree_histogram(data, "alter")
    assert list(alters["degree"]) == [1, 5]
    assert alters["probability"].sum() == pytest.approx(1.0)


# =============================================================================
# deciles
# =============================================================================

def test_distinct_outdegrees_one_per_decile():
    assert list(assign_deciles(range(1, 11))) == list(range(1, 11))


def test_boundary_values_fall_in_lower_decile():
    assert set(assign_deciles([5] * 20)) == {1}


def test_anticorrelated_volume_gives_negative_slopes():
    # coupling 1 puts the lowest-degree alter at rank 1, the highest volume
    data = synth_ego_dataset(SynthParams(n_egos=500, alters_per_ego=15, coupling=1.0), seed=4)
    curves = decile_contact_curves(data, n_bins=10)
    assert len(curves) == 10
    for curve in curves:
        first, last = curve.points[0], curve.points[-1]
        assert first.mean_contact_volume < last.mean_contact_volume
        assert last.mean_alter_k < first.mean_alter_k


def test_log10_degree(ego, dataset):
    data = dataset(*[ego(f"e{i}", 3, [100]) for i in range(10)])
    curves = decile_contact_curves(data, log10_degree=True, n_bins=2)
    points = [p for curve in curves for p in curve.points]
    assert sum(p.n for p in points) == 10
    assert all(p.mean_alter_k == pytest.approx(2.0) for p in points)


def test_decile_frame_columns():
    data = synth_ego_dataset(SynthParams(n_egos=40, alters_per_ego=4), seed=2)
    frame = decile_frame(decile_contact_curves(data, n_bins=2))
    assert list(frame.columns) == ["decile", "bin", "mean_volume", "mean_k", "n"]


def test_deciles_need_ten_egos(ego, dataset):
    with pytest.raises(InsufficientDataError):
        decile_contact_curves(dataset(ego("e1", 3, [100])))


# =============================================================================
# zipf
# =============================================================================

def test_zipf_exact_data():
    ranks = np.arange(1, 16)
    fit = fit_zipf(ranks, 100.0 * ranks ** -1.2)
    assert fit.exponent == pytest.approx(1.2, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.log_prefactor == pytest.approx(2.0)
    assert fit.ranks_used == 15


@pytest.mark.parametrize("exponent", np.linspace(0.5, 2.0, 7))
@pytest.mark.parametrize("prefactor", [0.5, 1.0, 100.0, 1e4])
def test_zipf_exponent_recovered_across_grid(exponent, prefactor):
    ranks = np.arange(1, 21)
    fit = fit_zipf(ranks, prefactor * ranks ** -exponent)
    assert fit.exponent == pytest.approx(exponent, abs=1e-9)
    assert fit.log_prefactor == pytest.approx(np.log10(prefactor), abs=1e-9)


def test_zipf_constant_volume(ego, dataset):
    data = dataset(ego("e1", 3, [1, 2, 3], volumes=[5, 5, 5]), ego("e2", 3, [1, 2], volumes=[5, 5]))
    assert zipf_fit(data).exponent == pytest.approx(0.0, abs=1e-12)


def test_zipf_min_dyads_drops_sparse_ranks():
    fit = fit_zipf([1, 1, 2, 2, 3], [100, 100, 50, 50, 1], min_dyads=2)
    assert fit.ranks_used == 2
    assert fit.exponent == pytest.approx(1.0)


def test_zipf_needs_two_ranks():
    with pytest.raises(InsufficientDataError):
        fit_zipf([1, 1], [10, 12])


# =============================================================================
# wilcoxon_signed_rank
# =============================================================================

def test_wilcoxon_median_statistic():
    result = wilcoxon_signed_rank([(1, 2), (3, 5), (4, 1)])
    assert result.statistic == 3.0
    assert result.p_value == 1.0
    assert result.method is TestMethod.EXACT


def test_wilcoxon_all_positive():
    result = wilcoxon_signed_rank([(2, 1), (4, 2), (7, 3), (9, 4), (15, 5)])
    assert result.statistic == 0.0
    assert result.p_value == pytest.approx(0.0625)


def test_wilcoxon_drops_zero_differences():
    result = wilcoxon_signed_rank([(2, 1), (4, 2), (7, 3), (9, 4), (15, 5), (3, 3)])
    assert result.n == 5
    assert result.p_value == pytest.approx(0.0625)


def test_wilcoxon_all_equal():
    with pytest.raises(ZeroDifferencesError):
        wilcoxon_signed_rank([(1, 1), (2, 2)])


def test_wilcoxon_large_sample_uses_normal_approximation():
    pairs = [(i + 1.5, i) for i in range(30)]
    result = wilcoxon_signed_rank(pairs)
    assert result.method is TestMethod.NORMAL_APPROX
    assert result.n == 30
    assert result.p_value < 1e-5


# =============================================================================
# spearman
# =============================================================================

def test_spearman_monotone():
    x = np.arange(10)
    assert spearman(x, x ** 2, n_perm=500, seed=0).statistic == pytest.approx(1.0)
    assert spearman(x, -x, n_perm=500, seed=0).statistic == pytest.approx(-1.0)


@pytest.mark.parametrize("seed", range(5))
def test_spearman_is_antisymmetric(seed):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=25), rng.normal(size=25)
    forward = spearman(x, y, n_perm=300, seed=seed)
    negated = spearman(x, -y, n_perm=300, seed=seed)
    assert negated.statistic == pytest.approx(-forward.statistic, abs=1e-12)
    assert negated.p_value == forward.p_value


def test_spearman_hand_example():
    assert spearman([1, 2, 3, 4], [1, 3, 2, 4], n_perm=100, seed=0).statistic == pytest.approx(0.8)


def test_spearman_p_value_is_reproducible_and_add_one():
    x = np.arange(12)
    first = spearman(x, x, n_perm=999, seed=5)
    again = spearman(x, x, n_perm=999, seed=5)
    assert first.p_value == again.p_value
    assert first.p_value >= 1 / 1000
    assert first.p_value < 0.01
    assert first.method is TestMethod.PERMUTATION


def test_spearman_errors():
    with pytest.raises(ConstantInputError):
        spearman([1, 2, 3], [4, 4, 4])
    with pytest.raises(InsufficientDataError):
        spearman([1, 2], [2, 1])
    with pytest.raises(ConfigError):
        spearman([1, 2, 3], [1, 2])


# =============================================================================
# ParadoxAggregator
# =============================================================================

def test_aggregator_collects_headline_numbers(star):
    aggregator = ParadoxAggregator(star(4), max_rank=2)
    insights = aggregator.generate_insights()
    assert insights["prevalence_mean"] == pytest.approx(0.8)
    assert insights["rank1_fraction_lower"] == pytest.approx(0.8)
    assert "fraction_lower_rank1" in insights
    frame = aggregator.insights_frame()
    assert list(frame.columns) == ["metric", "value"]
    assert len(frame) == len(insights)
