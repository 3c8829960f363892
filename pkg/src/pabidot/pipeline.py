"""End-to-end perturbation pipeline.

A run takes a numeric matrix and produces a same-shape release:

1. z-score each column (sample statistics);
2. draw one random translation matrix;
3. grid-search the optimal rotation angle and reflection axis on the
   covariance of the normalized data;
4. reflect, translate and rotate the normalized rows with the composite
   homogeneous transform;
5. randomized expansion: push every value away from zero by the magnitude
   of Gaussian noise, preserving its sign;
6. reverse the z-scoring with the *original* statistics, so the release
   lives on the input's scale;
7. shuffle the rows (the optional class column rides along).

All randomness flows from a single seed through three independent
sub-streams (translation, expansion noise, shuffle), so runs are
bit-for-bit reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import DataShapeError, ParameterError
from .normalize import column_stats, inverse_zscore, zscore
from .report import PerturbationReport
from .search import search_optimal
from .transforms import (
    apply_composite,
    make_reflection_matrix,
    make_rotation_matrix,
    make_translation_matrix,
)


@dataclass(frozen=True)
class PerturbationConfig:
    """User-facing knobs for one run.

    sigma: standard deviation of the expansion noise, >= 0 (0 disables it).
    seed: root seed for all random draws.
    class_column: name or index of the class column, recorded in the report;
        the column itself is supplied separately as `class_values`.
    """

    sigma: float = 0.3
    seed: int = 0
    class_column: str | int | None = None


@dataclass
class PerturbationResult:
    """Released matrix plus bookkeeping.

    `permutation` is the row shuffle actually applied (None when shuffling
    was disabled); evaluation code uses it to restore the original pairing.
    """

    data: np.ndarray
    class_values: np.ndarray | None
    report: PerturbationReport
    permutation: np.ndarray | None


def derive_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator, np.random.Generator]:
    """Three independent generators (translation, expansion, shuffle) from one seed."""
    children = np.random.SeedSequence(seed).spawn(3)
    return tuple(np.random.Generator(np.random.PCG64(c)) for c in children)


def randomized_expansion(data: np.ndarray, sigma: float, rng: np.random.Generator) -> np.ndarray:
    """Inflate each value's magnitude by |N(0, sigma)| without changing its sign.

    x -> sign(x) * (|x| + |g|), g ~ N(0, sigma) drawn independently per
    entry.  Exact zeros stay zero (their sign is zero).  sigma = 0 returns
    the input values unchanged.
    """
    if sigma < 0:
        raise ParameterError(f"sigma must be >= 0, got {sigma}")
    data = np.asarray(data, dtype=float)
    noise = rng.normal(0.0, sigma, size=data.shape)
    return np.sign(data) * (np.abs(data) + np.abs(noise))


def shuffle_rows(data: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Rows in uniformly random order (Fisher–Yates via the generator)."""
    data = np.asarray(data)
    return data[rng.permutation(data.shape[0])]


def perturb(
    matrix: np.ndarray,
    config: PerturbationConfig | None = None,
    class_values: np.ndarray | None = None,
    *,
    column_names: list[str] | None = None,
    shuffle: bool = True,
    expand: bool = True,
) -> PerturbationResult:
    """Run the full pipeline on an m x n numeric matrix.

    Args:
        matrix: data to perturb; m >= 2 rows, n >= 2 non-constant columns.
        config: sigma/seed/class metadata; defaults to PerturbationConfig().
        class_values: optional length-m label vector carried through the
            shuffle, never transformed.
        column_names: recorded in the report, purely informational.
        shuffle, expand: testing hooks that expose the deterministic
            geometric core by skipping the shuffle and/or expansion stages;
            the command line always runs both.

    Returns:
        PerturbationResult with the released matrix (original scale, rows
        shuffled), the shuffled class values, the run report and the applied
        permutation.
    """
    t0 = time.perf_counter()
    if config is None:
        config = PerturbationConfig()
    if config.sigma < 0:
        raise ParameterError(f"sigma must be >= 0, got {config.sigma}")
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2:
        raise DataShapeError(f"matrix must be 2-D, got ndim={matrix.ndim}")
    m, n = matrix.shape
    if m < 2 or n < 2:
        raise DataShapeError(f"matrix must be at least 2x2, got {matrix.shape}")
    if class_values is not None:
        class_values = np.asarray(class_values)
        if class_values.shape[0] != m:
            raise DataShapeError(
                f"class vector length {class_values.shape[0]} != row count {m}"
            )

    rng_translation, rng_expansion, rng_shuffle = derive_streams(config.seed)

    stats = column_stats(matrix)
    normalized = zscore(matrix, stats)
    cov = np.cov(normalized, rowvar=False)  # ddof=1; unit diagonal by construction

    translation = make_translation_matrix(n, rng_translation)
    grid = search_optimal(cov)
    rotation = make_rotation_matrix(n, grid.theta_optimal)
    reflection = make_reflection_matrix(n, grid.rif_optimal)

    transformed = apply_composite(rotation, translation, reflection, normalized)
    if expand:
        transformed = randomized_expansion(transformed, config.sigma, rng_expansion)
    released = inverse_zscore(transformed, stats)

    permutation = None
    class_out = class_values
    if shuffle:
        permutation = rng_shuffle.permutation(m)
        released = released[permutation]
        if class_values is not None:
            class_out = class_values[permutation]

    report = PerturbationReport(
        row_count=m,
        column_count=n,
        column_names=list(column_names) if column_names is not None else None,
        class_column=config.class_column,
        sigma=config.sigma,
        seed=config.seed,
        grid=grid,
        wall_time_seconds=time.perf_counter() - t0,
    )
    return PerturbationResult(
        data=released,
        class_values=class_out,
        report=report,
        permutation=permutation,
    )
