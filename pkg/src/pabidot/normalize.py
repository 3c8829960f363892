"""Column-wise z-score normalization with exact round-trip inversion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstantColumnError, DataShapeError


@dataclass(frozen=True)
class ColumnStats:
    """Per-column sample mean and sample standard deviation (ddof=1)."""

    means: np.ndarray
    stds: np.ndarray


def column_stats(data: np.ndarray) -> ColumnStats:
    """Sample mean/std of each column; rejects constant columns.

    Sample statistics (m-1 denominator) are used so that z-scored columns
    have sample variance exactly 1, which downstream privacy computations
    rely on.
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2:
        raise DataShapeError(f"data must be 2-D, got ndim={data.ndim}")
    if data.shape[0] < 2:
        raise DataShapeError(f"need at least 2 rows, got {data.shape[0]}")
    means = data.mean(axis=0)
    stds = data.std(axis=0, ddof=1)
    constant = np.flatnonzero(stds == 0.0)
    if constant.size:
        raise ConstantColumnError(constant.tolist())
    return ColumnStats(means=means, stds=stds)


def zscore(data: np.ndarray, stats: ColumnStats) -> np.ndarray:
    """(data - means) / stds, column-wise."""
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != stats.means.shape[0]:
        raise DataShapeError(
            f"data width {data.shape} does not match stats width {stats.means.shape[0]}"
        )
    return (data - stats.means) / stats.stds


def inverse_zscore(data: np.ndarray, stats: ColumnStats) -> np.ndarray:
    """data * stds + means, column-wise; inverse of :func:`zscore`."""
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != stats.means.shape[0]:
        raise DataShapeError(
            f"data width {data.shape} does not match stats width {stats.means.shape[0]}"
        )
    return data * stats.stds + stats.means
