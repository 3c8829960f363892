"""Delimited-file ingestion and writing.

Files are comma-separated, optionally with a header row.  Feature columns
must be fully numeric; one column may be designated as the class column and
is kept as raw strings (labels are never transformed).  Writing uses
Python's shortest round-trip float formatting, so a written matrix parses
back bit-identically.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace

import numpy as np
import pandas as pd

from .errors import DataFormatError, ParameterError

log = logging.getLogger(__name__)


@dataclass
class Dataset:
    """A numeric feature matrix plus optional class labels.

    class_index is the class column's position among the file's columns so
    a write puts it back where it came from.  has_header records whether the
    source file had a header row (and whether one should be written back).
    """

    matrix: np.ndarray
    column_names: list[str]
    class_values: np.ndarray | None = None
    class_name: str | None = None
    class_index: int | None = None
    has_header: bool = True
    source_path: str | None = None


def load_csv(
    path,
    has_header: bool = True,
    class_column: str | int | None = None,
    on_missing: str = "error",
) -> Dataset:
    """Read a delimited numeric file into a Dataset.

    Args:
        path: file to read; FileNotFoundError propagates untouched.
        has_header: first row holds column names.  Without a header, columns
            are named col1..colN and the class column must be selected by
            0-based index.
        class_column: name (header required) or 0-based index of the label
            column, or None.
        on_missing: "error" rejects the first missing/non-numeric feature
            cell, citing its 1-based row and column; "drop" removes affected
            rows with a logged warning.

    Raises:
        DataFormatError: empty file, unparseable cells (on_missing="error"),
            or every row dropped (on_missing="drop").
        ParameterError: class column selector not found / invalid on_missing.
    """
    if on_missing not in ("error", "drop"):
        raise ParameterError(f"on_missing must be 'error' or 'drop', got {on_missing!r}")
    header = 0 if has_header else None
    try:
        head = pd.read_csv(path, header=header, nrows=0)
    except pd.errors.EmptyDataError:
        raise DataFormatError(f"{path}: file is empty") from None
    n_cols = head.shape[1]
    if has_header:
        names = [str(c) for c in head.columns]
    else:
        names = [f"col{i + 1}" for i in range(n_cols)]

    class_pos: int | None = None
    if class_column is not None:
        if isinstance(class_column, str):
            if not has_header:
                raise ParameterError(
                    "class column must be a 0-based index when the file has no header"
                )
            if class_column not in names:
                raise ParameterError(
                    f"class column {class_column!r} not found; columns are {names}"
                )
            class_pos = names.index(class_column)
        else:
            class_pos = int(class_column)
            if not 0 <= class_pos < n_cols:
                raise ParameterError(
                    f"class column index {class_pos} out of range 0..{n_cols - 1}"
                )

    feature_pos = [i for i in range(n_cols) if i != class_pos]
    if not feature_pos:
        raise DataFormatError(f"{path}: no feature columns besides the class column")

    # round_trip: exact IEEE parsing so written files load back bit-identically.
    dtype = {head.columns[class_pos]: str} if class_pos is not None else None
    frame = pd.read_csv(path, header=header, dtype=dtype,
                        float_precision="round_trip")
    if frame.shape[0] == 0:
        raise DataFormatError(f"{path}: no data rows")
    frame.columns = range(n_cols)  # positional access below

    def parse_cell(x) -> float:
        try:
            return float(x)
        except (TypeError, ValueError):
            return float("nan")

    columns: dict[int, np.ndarray] = {}
    bad = np.zeros((frame.shape[0], len(feature_pos)), dtype=bool)
    for c, i in enumerate(feature_pos):
        col = frame[i]
        if pd.api.types.is_numeric_dtype(col) and not pd.api.types.is_bool_dtype(col):
            values = col.to_numpy(dtype=float)
        else:
            # mixed column: pandas fell back to strings; parse each cell
            values = np.array([parse_cell(x) for x in col.to_numpy()], dtype=float)
        columns[i] = values
        bad[:, c] = ~np.isfinite(values)

    if bad.any():
        if on_missing == "error":
            r, c = np.argwhere(bad)[0]
            raise DataFormatError(
                f"{path}: missing or non-numeric value at row {r + 1}, "
                f"column {c + 1} ({names[feature_pos[c]]!r})"
            )
        keep = ~bad.any(axis=1)
        if class_pos is not None:
            keep &= frame[class_pos].notna().to_numpy()
        dropped = int((~keep).sum())
        if dropped:
            log.warning("%s: dropped %d row(s) with missing/non-numeric values", path, dropped)
        if not keep.any():
            raise DataFormatError(f"{path}: every row had missing or non-numeric values")
        frame = frame.loc[keep]
        columns = {i: v[keep] for i, v in columns.items()}

    matrix = np.column_stack([columns[i] for i in feature_pos])
    class_values = None
    class_name = None
    if class_pos is not None:
        class_values = frame[class_pos].to_numpy(dtype=str)
        class_name = names[class_pos]
    return Dataset(
        matrix=matrix,
        column_names=[names[i] for i in feature_pos],
        class_values=class_values,
        class_name=class_name,
        class_index=class_pos,
        has_header=has_header,
        source_path=str(path),
    )


def write_csv(path, dataset: Dataset) -> None:
    """Write a Dataset back to a delimited file (parent directories created).

    Floats are emitted with shortest round-trip formatting; the class column
    is re-inserted at its original position.
    """
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)
    frame = pd.DataFrame(dataset.matrix, columns=dataset.column_names, copy=False)
    if dataset.class_values is not None:
        pos = dataset.class_index if dataset.class_index is not None else frame.shape[1]
        pos = min(pos, frame.shape[1])
        frame.insert(pos, dataset.class_name or "class", dataset.class_values)
    frame.to_csv(path, index=False, header=dataset.has_header)


def drop_constant_columns(dataset: Dataset) -> tuple[Dataset, list[str]]:
    """Remove zero-variance feature columns; returns (dataset, dropped names)."""
    stds = dataset.matrix.std(axis=0, ddof=1) if dataset.matrix.shape[0] > 1 else (
        np.zeros(dataset.matrix.shape[1])
    )
    keep = stds != 0.0
    if keep.all():
        return dataset, []
    dropped = [n for n, k in zip(dataset.column_names, keep) if not k]
    log.warning("dropping constant column(s): %s", ", ".join(dropped))
    trimmed = replace(
        dataset,
        matrix=dataset.matrix[:, keep],
        column_names=[n for n, k in zip(dataset.column_names, keep) if k],
    )
    return trimmed, dropped
