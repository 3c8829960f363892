import numpy as np
import pytest

from pabidot import (
    ConstantColumnError,
    DataShapeError,
    column_stats,
    inverse_zscore,
    zscore,
)
from conftest import correlated_matrix


def test_stats_match_two_pass_oracle(rng):
    data = correlated_matrix(rng, 97, 5)
    stats = column_stats(data)
    m = data.shape[0]
    for j in range(data.shape[1]):
        mean = sum(data[:, j]) / m
        var = sum((x - mean) ** 2 for x in data[:, j]) / (m - 1)
        assert stats.means[j] == pytest.approx(mean, abs=1e-10)
        assert stats.stds[j] == pytest.approx(var ** 0.5, abs=1e-10)


def test_zscored_columns_have_unit_sample_variance(rng):
    data = correlated_matrix(rng, 250, 6)
    normalized = zscore(data, column_stats(data))
    assert np.abs(normalized.mean(axis=0)).max() < 1e-12
    assert np.abs(normalized.var(axis=0, ddof=1) - 1.0).max() < 1e-12


def test_round_trip_recovers_data(rng):
    data = correlated_matrix(rng, 120, 4, shift_scale=50.0)
    stats = column_stats(data)
    recovered = inverse_zscore(zscore(data, stats), stats)
    assert np.allclose(recovered, data, rtol=1e-12, atol=1e-9)


def test_constant_column_rejected():
    data = np.column_stack([np.arange(10.0), np.full(10, 3.25), np.arange(10.0) ** 2])
    with pytest.raises(ConstantColumnError) as excinfo:
        column_stats(data)
    assert excinfo.value.columns == [1]
    assert "1" in str(excinfo.value)


def test_single_row_rejected():
    with pytest.raises(DataShapeError):
        column_stats(np.array([[1.0, 2.0]]))


def test_width_mismatch_rejected(rng):
    data = correlated_matrix(rng, 40, 3)
    stats = column_stats(data)
    with pytest.raises(DataShapeError):
        zscore(rng.normal(size=(40, 4)), stats)
    with pytest.raises(DataShapeError):
        inverse_zscore(rng.normal(size=(40, 2)), stats)
