"""Attack-resistance, information-gain and bias metrics for released data.

All attack metrics assume the two matrices are row-aligned (original row r
corresponds to perturbed row r).  Released files are shuffled, so callers
must restore the pairing first — e.g. via the permutation recorded on the
PerturbationResult, or by re-deriving it from the release seed.  This is the
worst case for the defender: a real adversary would additionally have to
guess the correspondence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AttackSetupError, DataShapeError, ParameterError
from .normalize import column_stats, zscore


@dataclass(frozen=True)
class ResistanceResult:
    """Per-column standard deviations of a (z-scored) estimation error.

    Higher is better for the defender: std ~ 0 means the attack reproduces
    the attribute, values around sqrt(2) mean the estimate is uncorrelated
    noise at the attribute's own scale.
    """

    per_column_std: np.ndarray
    minimum: float
    average: float

    @classmethod
    def from_stds(cls, stds: np.ndarray) -> "ResistanceResult":
        stds = np.asarray(stds, dtype=float)
        return cls(per_column_std=stds, minimum=float(stds.min()), average=float(stds.mean()))

    def to_dict(self) -> dict:
        return {
            "minimum": self.minimum,
            "average": self.average,
            "per_column_std": self.per_column_std.tolist(),
        }


@dataclass(frozen=True)
class BiasResult:
    """Outcome of the record-wise distribution-shift test.

    Attributes:
        similar_record_count: records whose original/perturbed value samples
            are statistically indistinguishable at the given level.
        percentage: similar_record_count / m — a fraction in [0, 1] despite
            the name.
    """

    similar_record_count: int
    percentage: float

    def to_dict(self) -> dict:
        return {
            "similar_record_count": self.similar_record_count,
            "percentage": self.percentage,
        }


def _check_aligned(original: np.ndarray, perturbed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    original = np.asarray(original, dtype=float)
    perturbed = np.asarray(perturbed, dtype=float)
    if original.shape != perturbed.shape:
        raise DataShapeError(
            f"original {original.shape} and perturbed {perturbed.shape} must have equal shapes"
        )
    if original.ndim != 2 or original.shape[0] < 2:
        raise DataShapeError(f"matrices must be 2-D with >= 2 rows, got {original.shape}")
    return original, perturbed


def _self_zscore(data: np.ndarray) -> np.ndarray:
    return zscore(data, column_stats(data))


def naive_inference_resistance(original: np.ndarray, perturbed: np.ndarray) -> ResistanceResult:
    """Resistance against reading the perturbed value as the estimate.

    Both matrices are z-scored with their own statistics (the adversary only
    knows marginals of the release) and the per-column sample std of their
    difference is returned.
    """
    original, perturbed = _check_aligned(original, perturbed)
    diff = _self_zscore(original) - _self_zscore(perturbed)
    return ResistanceResult.from_stds(diff.std(axis=0, ddof=1))


def known_io_attack(
    original: np.ndarray,
    perturbed: np.ndarray,
    known_fraction: float = 0.1,
    rng: np.random.Generator | None = None,
) -> ResistanceResult:
    """Resistance against an adversary holding known input/output pairs.

    The adversary sees `known_fraction` of the rows in both versions, fits
    an affine map (least squares with intercept) from perturbed to original,
    and applies it to every released row.  Returns the per-column std of the
    z-scored reconstruction error; values near 0 mean the release leaks the
    transform.

    Args:
        known_fraction: fraction of rows known to the adversary, in (0, 1);
            ceil(fraction * m) rows are sampled without replacement.
        rng: generator for the sample; defaults to a fixed-seed generator.

    Raises:
        AttackSetupError: fewer than n + 1 known rows, not enough to
            determine the affine fit.
    """
    original, perturbed = _check_aligned(original, perturbed)
    if not 0.0 < known_fraction < 1.0:
        raise ParameterError(f"known_fraction must be in (0, 1), got {known_fraction}")
    if rng is None:
        rng = np.random.default_rng(0)
    m, n = original.shape
    k = math.ceil(known_fraction * m)
    if k < n + 1:
        raise AttackSetupError(
            f"{k} known rows cannot determine an affine map on {n} columns "
            f"(need at least {n + 1})"
        )
    known = rng.choice(m, size=k, replace=False)
    design = np.column_stack([perturbed[known], np.ones(k)])
    coef, *_ = np.linalg.lstsq(design, original[known], rcond=None)
    reconstruction = np.column_stack([perturbed, np.ones(m)]) @ coef
    diff = _self_zscore(original) - _self_zscore(reconstruction)
    return ResistanceResult.from_stds(diff.std(axis=0, ddof=1))


def shannon_entropy(values: np.ndarray, bins: int = 100,
                    value_range: tuple[float, float] | None = None) -> float:
    """Histogram (Shannon) entropy in bits over equal-width bins.

    An empty or degenerate range (max == min) yields 0 bits.
    """
    if bins < 2:
        raise ParameterError(f"bins must be >= 2, got {bins}")
    values = np.asarray(values, dtype=float).ravel()
    lo, hi = value_range if value_range is not None else (values.min(), values.max())
    if hi <= lo:
        return 0.0
    counts, _ = np.histogram(values, bins=bins, range=(lo, hi))
    p = counts[counts > 0] / values.size
    return float(-(p * np.log2(p)).sum())


def entropy_increase(original: np.ndarray, perturbed: np.ndarray, bins: int = 100) -> float:
    """Average information gain: mean over attributes of H(perturbed) - H(original).

    Each attribute is binned over the union of both value ranges so the two
    histograms are comparable.  Positive values mean the release is more
    uncertain (better for privacy).
    """
    original, perturbed = _check_aligned(original, perturbed)
    gains = []
    for j in range(original.shape[1]):
        lo = min(original[:, j].min(), perturbed[:, j].min())
        hi = max(original[:, j].max(), perturbed[:, j].max())
        if hi <= lo:
            gains.append(0.0)
            continue
        h_orig = shannon_entropy(original[:, j], bins, (lo, hi))
        h_pert = shannon_entropy(perturbed[:, j], bins, (lo, hi))
        gains.append(h_pert - h_orig)
    return float(np.mean(gains))


def ks_statistic(sample_a: np.ndarray, sample_b: np.ndarray) -> float:
    """Two-sample Kolmogorov–Smirnov statistic: sup |ECDF_a - ECDF_b|."""
    a = np.sort(np.asarray(sample_a, dtype=float).ravel())
    b = np.sort(np.asarray(sample_b, dtype=float).ravel())
    if a.size == 0 or b.size == 0:
        raise DataShapeError("KS statistic needs non-empty samples")
    grid = np.concatenate([a, b])
    cdf_a = np.searchsorted(a, grid, side="right") / a.size
    cdf_b = np.searchsorted(b, grid, side="right") / b.size
    return float(np.abs(cdf_a - cdf_b).max())


def ks_critical_value(n1: int, n2: int, alpha: float = 0.05) -> float:
    """Asymptotic two-sample KS rejection threshold c(alpha)*sqrt((n1+n2)/(n1*n2)).

    c(0.05) ~= 1.358.
    """
    if not 0.0 < alpha < 1.0:
        raise ParameterError(f"alpha must be in (0, 1), got {alpha}")
    if n1 < 1 or n2 < 1:
        raise ParameterError("sample sizes must be >= 1")
    c = math.sqrt(-math.log(alpha / 2.0) / 2.0)
    return c * math.sqrt((n1 + n2) / (n1 * n2))


def ks_record_bias(original: np.ndarray, perturbed: np.ndarray, alpha: float = 0.05) -> BiasResult:
    """Count records whose perturbed values are indistinguishable from the originals.

    For each aligned row the two-sample KS statistic between its n original
    values and its n perturbed values is compared with the asymptotic
    critical value at level alpha; the record is "similar" when the
    statistic falls below it.  High similar fractions mean the release
    avoids wholesale distribution shift at record granularity.
    """
    original, perturbed = _check_aligned(original, perturbed)
    m, n = original.shape
    if n < 2:
        raise DataShapeError(f"need at least 2 columns per record, got {n}")
    critical = ks_critical_value(n, n, alpha)
    similar = sum(
        1 for r in range(m) if ks_statistic(original[r], perturbed[r]) < critical
    )
    return BiasResult(similar_record_count=similar, percentage=similar / m)


def ks_attribute_rejections(original: np.ndarray, perturbed: np.ndarray,
                            alpha: float = 0.05) -> int:
    """Number of attributes whose original/perturbed columns differ significantly.

    Same test as :func:`ks_record_bias`, applied column-wise with m-sample
    ECDFs.
    """
    original, perturbed = _check_aligned(original, perturbed)
    m, n = original.shape
    critical = ks_critical_value(m, m, alpha)
    return sum(
        1 for j in range(n) if ks_statistic(original[:, j], perturbed[:, j]) >= critical
    )


def knn_utility(
    data: np.ndarray,
    labels: np.ndarray,
    k: int = 1,
    folds: int = 10,
    rng: np.random.Generator | None = None,
) -> float:
    """Mean k-NN classification accuracy over a k-fold cross-validation.

    Features are z-scored (constant columns pass through unscaled), distances
    are Euclidean, and ties in the majority vote resolve to the smallest
    label.  The fold split is a seeded shuffle, so results are reproducible.

    Raises:
        ParameterError: k < 1, folds < 2, or k not smaller than the training
            part of every fold.
    """
    data = np.asarray(data, dtype=float)
    labels = np.asarray(labels)
    if data.ndim != 2:
        raise DataShapeError(f"data must be 2-D, got ndim={data.ndim}")
    m = data.shape[0]
    if labels.shape[0] != m:
        raise DataShapeError(f"labels length {labels.shape[0]} != row count {m}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if folds < 2 or folds > m:
        raise ParameterError(f"folds must be in 2..{m}, got {folds}")
    if rng is None:
        rng = np.random.default_rng(0)

    means = data.mean(axis=0)
    stds = data.std(axis=0, ddof=1)
    stds[stds == 0.0] = 1.0
    scaled = (data - means) / stds

    classes, encoded = np.unique(labels, return_inverse=True)
    order = rng.permutation(m)
    accuracies = []
    for part in np.array_split(order, folds):
        train = np.setdiff1d(order, part, assume_unique=True)
        if k >= train.size:
            raise ParameterError(
                f"k={k} must be smaller than the training fold size {train.size}"
            )
        a, b = scaled[part], scaled[train]
        d2 = (a * a).sum(1)[:, None] + (b * b).sum(1)[None, :] - 2.0 * (a @ b.T)
        if k == 1:
            predicted = encoded[train][d2.argmin(axis=1)]
        else:
            nearest = encoded[train][np.argpartition(d2, k - 1, axis=1)[:, :k]]
            votes = np.zeros((part.size, classes.size), dtype=int)
            for col in nearest.T:
                np.add.at(votes, (np.arange(part.size), col), 1)
            predicted = votes.argmax(axis=1)  # argmax tie -> smallest label index
        accuracies.append(float((predicted == encoded[part]).mean()))
    return float(np.mean(accuracies))
