"""Figure rendering for reports: guarantee curves, resistance bars, scaling."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .search import PrivacyGrid


def _save(fig, path) -> str:
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def save_phi_curve(grid: PrivacyGrid, path) -> str:
    """Per-angle minimum guarantee vs angle, with the selected optimum marked."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(grid.angles, grid.per_angle_min, lw=1.2, color="tab:blue")
    ax.axvline(grid.theta_optimal, color="tab:red", ls="--", lw=1.0)
    ax.plot([grid.theta_optimal], [grid.phi_optimal], "o", color="tab:red", ms=5)
    ax.annotate(
        f"$\\theta$={grid.theta_optimal}°, axis {grid.rif_optimal}, "
        f"$\\Phi$={grid.phi_optimal:.4f}",
        xy=(grid.theta_optimal, grid.phi_optimal),
        xytext=(5, 8), textcoords="offset points", fontsize=9,
    )
    ax.set_xlabel("rotation angle (degrees)")
    ax.set_ylabel("minimum privacy guarantee")
    ax.set_title("Guarantee vs rotation angle (worst axis per angle)")
    ax.grid(alpha=0.3)
    return _save(fig, path)


def save_phi_axes(grid: PrivacyGrid, path) -> str:
    """One guarantee curve per reflection axis across the angle grid."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    n = grid.phi.shape[1]
    for j in range(n):
        ax.plot(grid.angles, grid.phi[:, j], lw=1.0, label=f"axis {j + 1}")
    ax.set_xlabel("rotation angle (degrees)")
    ax.set_ylabel("privacy guarantee")
    ax.set_title("Per-axis guarantee curves")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8, ncol=2 if n > 6 else 1)
    return _save(fig, path)


def save_grid_figures(grid: PrivacyGrid, report_path) -> list[str]:
    """Render both guarantee figures next to a report file.

    For a report at r.json the figures land at r.phi_curve.png and
    r.phi_axes.png.
    """
    base, _ = os.path.splitext(os.fspath(report_path))
    return [
        save_phi_curve(grid, base + ".phi_curve.png"),
        save_phi_axes(grid, base + ".phi_axes.png"),
    ]


def save_resistance_bars(series: dict[str, np.ndarray], path,
                         column_names: list[str] | None = None) -> str:
    """Grouped per-column bars for one or more resistance results."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    names = list(series)
    n = len(next(iter(series.values())))
    x = np.arange(n)
    width = 0.8 / max(len(names), 1)
    for i, name in enumerate(names):
        ax.bar(x + i * width, np.asarray(series[name]), width, label=name)
    ax.set_xticks(x + width * (len(names) - 1) / 2)
    ax.set_xticklabels(column_names if column_names else [str(i + 1) for i in range(n)],
                       rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("std of z-scored estimation error")
    ax.set_title("Attack resistance per attribute")
    ax.legend(fontsize=9)
    ax.grid(alpha=0.3, axis="y")
    return _save(fig, path)


def save_scaling_curve(rows: np.ndarray, seconds: np.ndarray, path) -> str:
    """Wall time vs row count with a least-squares line and its R²."""
    rows = np.asarray(rows, dtype=float)
    seconds = np.asarray(seconds, dtype=float)
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(rows, seconds, "o", color="tab:blue", label="measured")
    if rows.size >= 2:
        slope, intercept = np.polyfit(rows, seconds, 1)
        fitted = slope * rows + intercept
        ss_res = float(((seconds - fitted) ** 2).sum())
        ss_tot = float(((seconds - seconds.mean()) ** 2).sum())
        r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else float("nan")
        ax.plot(rows, fitted, "-", color="tab:red", lw=1.0,
                label=f"linear fit ($R^2$={r2:.3f})")
    ax.set_xlabel("rows")
    ax.set_ylabel("wall time (s)")
    ax.set_title("Perturbation scaling")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=9)
    return _save(fig, path)
