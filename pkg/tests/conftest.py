import os
from pathlib import Path

import numpy as np
import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]


def wcds_location() -> Path:
    """Where the Wholesale customers file is expected (env override allowed)."""
    override = os.environ.get("PABIDOT_WCDS")
    if override:
        return Path(override)
    return REPO_ROOT / "data" / "wholesale_customers.csv"


def load_wcds(class_column=None):
    """Load the Wholesale customers dataset or skip the test if absent."""
    from pabidot import load_csv

    path = wcds_location()
    if not path.exists():
        pytest.skip(
            f"Wholesale customers dataset not found at {path}; "
            f"run scripts/fetch_datasets.py to download it"
        )
    return load_csv(path, has_header=True, class_column=class_column)


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)


def correlated_matrix(rng, m, n, shift_scale=3.0):
    """Random dense matrix with cross-column correlation and nonzero means."""
    mixing = rng.normal(size=(n, n)) + 0.5 * np.eye(n)
    return rng.normal(size=(m, n)) @ mixing + shift_scale * rng.normal(size=n)


def two_cluster_data(rng, m, n, separation=3.0):
    """Two Gaussian clusters at +-separation/2 on every axis, with labels."""
    labels = rng.integers(0, 2, size=m)
    centers = (labels * 2 - 1)[:, None] * (separation / 2.0)
    data = centers + rng.normal(size=(m, n))
    return data, labels
