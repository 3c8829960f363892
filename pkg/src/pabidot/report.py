"""Perturbation run reports: a versioned, nested key-value document.

Reports are serialized as JSON with indentation — readable by humans,
parseable by machines, and lossless for floats (Python emits shortest
round-trip representations).  The grid section carries the full per-angle
guarantee curve so privacy-vs-angle plots can be reproduced from the report
alone.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from .search import PrivacyGrid

if TYPE_CHECKING:  # runtime import would be circular (pipeline imports us)
    from .pipeline import PerturbationConfig

REPORT_FORMAT_VERSION = 1
MANIFEST_FORMAT_VERSION = 1


@dataclass
class RunManifest:
    """Provenance for one run: the configuration used and where files live.

    Embedded in the report document so a release can be traced back to its
    input file and regenerated from the same configuration.
    """

    config: PerturbationConfig
    input_path: str
    output_path: str | None = None
    report_path: str | None = None
    format_version: int = MANIFEST_FORMAT_VERSION


def manifest_to_dict(manifest: RunManifest) -> dict[str, Any]:
    return {
        "format_version": manifest.format_version,
        "config": {
            "sigma": manifest.config.sigma,
            "seed": manifest.config.seed,
            "class_column": manifest.config.class_column,
        },
        "input_path": manifest.input_path,
        "output_path": manifest.output_path,
        "report_path": manifest.report_path,
    }


def manifest_from_dict(d: dict[str, Any]) -> RunManifest:
    from .pipeline import PerturbationConfig  # deferred; see module imports

    return RunManifest(
        config=PerturbationConfig(**d["config"]),
        input_path=d["input_path"],
        output_path=d["output_path"],
        report_path=d["report_path"],
        format_version=d["format_version"],
    )


@dataclass
class PerturbationReport:
    """Everything about a run except the released data itself."""

    row_count: int
    column_count: int
    column_names: list[str] | None = None
    class_column: str | int | None = None
    sigma: float | None = None
    seed: int | None = None
    grid: PrivacyGrid | None = None
    wall_time_seconds: float | None = None
    metrics: dict[str, Any] = field(default_factory=dict)
    manifest: RunManifest | None = None
    format_version: int = REPORT_FORMAT_VERSION


def _grid_to_dict(grid: PrivacyGrid) -> dict[str, Any]:
    return {
        "theta_optimal": int(grid.theta_optimal),
        "rif_optimal": int(grid.rif_optimal),
        "phi_optimal": float(grid.phi_optimal),
        "angles": grid.angles.tolist(),
        "per_angle_min": grid.per_angle_min.tolist(),
        "phi": grid.phi.tolist(),
    }


def _grid_from_dict(d: dict[str, Any]) -> PrivacyGrid:
    return PrivacyGrid(
        angles=np.array(d["angles"]),
        phi=np.array(d["phi"]),
        per_angle_min=np.array(d["per_angle_min"]),
        phi_optimal=float(d["phi_optimal"]),
        theta_optimal=int(d["theta_optimal"]),
        rif_optimal=int(d["rif_optimal"]),
    )


def report_to_dict(report: PerturbationReport) -> dict[str, Any]:
    return {
        "format_version": report.format_version,
        "dataset": {
            "row_count": report.row_count,
            "column_count": report.column_count,
            "column_names": report.column_names,
            "class_column": report.class_column,
        },
        "config": {
            "sigma": report.sigma,
            "seed": report.seed,
        },
        "grid": _grid_to_dict(report.grid) if report.grid is not None else None,
        "wall_time_seconds": report.wall_time_seconds,
        "metrics": report.metrics,
        "manifest": (manifest_to_dict(report.manifest)
                     if report.manifest is not None else None),
    }


def report_from_dict(d: dict[str, Any]) -> PerturbationReport:
    return PerturbationReport(
        format_version=d["format_version"],
        row_count=d["dataset"]["row_count"],
        column_count=d["dataset"]["column_count"],
        column_names=d["dataset"]["column_names"],
        class_column=d["dataset"]["class_column"],
        sigma=d["config"]["sigma"],
        seed=d["config"]["seed"],
        grid=_grid_from_dict(d["grid"]) if d.get("grid") is not None else None,
        wall_time_seconds=d["wall_time_seconds"],
        metrics=d.get("metrics", {}),
        manifest=(manifest_from_dict(d["manifest"])
                  if d.get("manifest") is not None else None),
    )


def emit_report(report: PerturbationReport, path) -> None:
    """Write the report as indented JSON (trailing newline included)."""
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")


def load_report(path) -> PerturbationReport:
    """Read back a report written by :func:`emit_report`."""
    with open(path, "r", encoding="utf-8") as fh:
        return report_from_dict(json.load(fh))
