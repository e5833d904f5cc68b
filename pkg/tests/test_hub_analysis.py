import numpy as np
import pytest

from src.aggregators import (
    HubProportionCurve,
    band_coverage,
    eligible_egos,
    hub_proportion_by_rank,
    hub_rank,
    hub_table,
    hub_trend_test,
    permutation_null_band,
)
from src.exceptions import ConfigError, ConstantInputError, EmptyResultError
from src.generators import SynthParams, synth_ego_dataset


def curve_from(proportions, n=10):
    proportions = np.asarray(proportions, dtype=float)
    return HubProportionCurve(
        ranks=np.arange(1, len(proportions) + 1),
        n_dyads=np.full(len(proportions), n),
        n_hub=np.rint(proportions * n).astype(int),
        n_egos=n,
    )


# =============================================================================
# hub_rank
# =============================================================================

@pytest.mark.parametrize("degrees, expected", [
    ([5, 9, 3], 2),
    ([9, 4, 9], 1),
    ([2, None, 8], 3),
])
def test_hub_rank(ego, degrees, expected):
    assert hub_rank(ego("e1", 1, degrees)) == expected


def test_hub_rank_needs_an_available_alter(ego):
    with pytest.raises(EmptyResultError):
        hub_rank(ego("e1", 1, [None, None]))


# =============================================================================
# hub_proportion_by_rank
# =============================================================================

def test_hub_always_at_rank_five(ego, dataset):
    data = dataset(*[ego(f"e{i}", 1, [1, 2, 3, 4, 50 + i]) for i in range(6)])
    curve = hub_proportion_by_rank(data, min_available=5)
    assert list(curve.proportion) == [0.0, 0.0, 0.0, 0.0, 1.0]
    assert curve.n_egos == 6


def test_egos_below_min_available_are_skipped(ego, dataset):
    data = dataset(ego("e1", 1, [1, 2, 3, 4, 5]), ego("e2", 1, [9, 1, 1, 1]))
    curve = hub_proportion_by_rank(data, min_available=5)
    assert curve.n_egos == 1
    assert list(curve.n_hub) == [0, 0, 0, 0, 1]


def test_no_eligible_ego(ego, dataset):
    with pytest.raises(EmptyResultError):
        hub_proportion_by_rank(dataset(ego("e1", 1, [1, 2])), min_available=5)


def test_full_coupling_gives_non_decreasing_proportions():
    data = synth_ego_dataset(
        SynthParams(n_egos=300, alters_per_ego=15, coupling=1.0), seed=8
    )
    curve = hub_proportion_by_rank(data)
    assert np.all(np.diff(curve.proportion) >= 0)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_hub_counts_are_bounded_by_dyads(seed):
    params = SynthParams(n_egos=200, alters_per_ego=10, min_alters_per_ego=3, fraction_unavailable=0.3)
    data = synth_ego_dataset(params, seed=seed)
    curve = hub_proportion_by_rank(data)
    assert np.all(curve.n_hub <= curve.n_dyads)
    assert curve.n_hub.sum() == curve.n_egos == len(eligible_egos(data))


# =============================================================================
# permutation_null_band
# =============================================================================

def test_null_mean_is_uniform_over_available_ranks(ego, dataset):
    data = dataset(*[ego(f"e{i}", 1, list(range(1, 11))) for i in range(200)])
    band = permutation_null_band(data, n_perm=200, seed=1)
    standard_error = np.sqrt(0.1 * 0.9 / (200 * 200))
    assert np.all(np.abs(band.mean - 0.1) <= 4 * standard_error)
    assert np.all(band.lo <= band.mean) and np.all(band.mean <= band.hi)


def test_null_never_places_hub_on_unavailable_rank(ego, dataset):
    data = dataset(*[ego(f"e{i}", 1, [3, None, 5]) for i in range(50)])
    band = permutation_null_band(data, n_perm=100, seed=2, min_available=2)
    assert np.isnan(band.mean[1])
    assert band.mean[0] + band.mean[2] == pytest.approx(1.0)


def test_single_permutation_band_is_degenerate(ego, dataset):
    data = dataset(*[ego(f"e{i}", 1, [1, 2, 3, 4, 5]) for i in range(20)])
    band = permutation_null_band(data, n_perm=1, seed=3)
    np.testing.assert_array_equal(band.lo, band.mean)
    np.testing.assert_array_equal(band.hi, band.mean)


def test_null_band_is_seed_deterministic():
    data = synth_ego_dataset(SynthParams(n_egos=100, coupling=0.0), seed=5)
    first = permutation_null_band(data, n_perm=120, seed=9)
    again = permutation_null_band(data, n_perm=120, seed=9)
    np.testing.assert_array_equal(first.lo, again.lo)
    np.testing.assert_array_equal(first.hi, again.hi)


def test_null_band_rejects_bad_parameters(star):
    with pytest.raises(ConfigError):
        permutation_null_band(star(4), n_perm=0, min_available=1)
    with pytest.raises(ConfigError):
        permutation_null_band(star(4), coverage=1.0, min_available=1)


# =============================================================================
# trend test, coverage, table
# =============================================================================

def test_trend_strictly_increasing():
    assert hub_trend_test(curve_from([0.1, 0.2, 0.3, 0.4]), n_perm=100, seed=0).statistic == pytest.approx(1.0)


def test_trend_hand_example():
    assert hub_trend_test(curve_from([0.1, 0.3, 0.2, 0.4]), n_perm=100, seed=0).statistic == pytest.approx(0.8)


def test_trend_constant_proportions():
    with pytest.raises(ConstantInputError):
        hub_trend_test(curve_from([0.2, 0.2, 0.2]), n_perm=100, seed=0)


def test_coverage_and_table():
    data = synth_ego_dataset(SynthParams(n_egos=200, coupling=0.0), seed=6)
    curve = hub_proportion_by_rank(data)
    band = permutation_null_band(data, n_perm=200, seed=6)
    assert 0.0 <= band_coverage(curve, band) <= 1.0

    table = hub_table(curve, band)
    assert list(table.columns) == ["rank", "n_dyads", "n_hub", "proportion", "null_mean", "null_lo", "null_hi"]
    assert list(table["rank"]) == list(range(1, 16))
