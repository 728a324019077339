"""Figure construction for the stability-map and convergence CSV schemas."""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")  # headless; must precede pyplot

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["SchemaError", "render_heatmap", "render_convergence"]

HEATMAP_COLUMNS = ["alpha", "beta", "m", "n", "trials", "mean_kappa",
                   "mean_log10_kappa", "clamped_fraction"]
CONVERGENCE_COLUMNS = ["alpha", "beta", "tau", "theta", "m", "n",
                       "median_sup_error"]

COLOR_SCALE = (0.0, 6.5)  # shared log10 scale keeps panels comparable


class SchemaError(ValueError):
    """The CSV header does not carry the required columns."""

    def __init__(self, missing: list[str]):
        self.missing = missing
        super().__init__("missing columns: " + ",".join(missing))


def _read_rows(csv_path: str, required: list[str]) -> list[dict]:
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required if c not in header]
        if missing:
            raise SchemaError(missing)
        return list(reader)


def _save(fig, out_path: str) -> None:
    # no Date chunk in PNG output, so identical inputs give identical bytes
    fig.savefig(out_path, dpi=150, metadata={"Software": "lsq-plots"})
    plt.close(fig)


def build_heatmap_figure(rows: list[dict], dashed_exponent: float):
    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    ax.set_xlabel("degree m")
    ax.set_ylabel("samples n")
    if rows:
        m_vals = np.array([int(r["m"]) for r in rows])
        n_vals = np.array([int(r["n"]) for r in rows])
        kappa = np.array([float(r["mean_kappa"]) for r in rows])
        m_axis = np.arange(m_vals.min(), m_vals.max() + 1)
        n_axis = np.arange(n_vals.min(), n_vals.max() + 1)
        grid = np.full((n_axis.size, m_axis.size), np.nan)
        grid[n_vals - n_axis[0], m_vals - m_axis[0]] = np.log10(kappa)
        mesh = ax.pcolormesh(
            m_axis, n_axis, np.ma.masked_invalid(grid),
            vmin=COLOR_SCALE[0], vmax=COLOR_SCALE[1], shading="nearest",
        )
        fig.colorbar(mesh, ax=ax, label="log10 mean condition number")
        curve_m = np.linspace(max(m_axis[0], 1), m_axis[-1], 400)
        curve_n = curve_m**dashed_exponent
        keep = (curve_n >= n_axis[0]) & (curve_n <= n_axis[-1])
        ax.plot(curve_m[keep], curve_n[keep], "k--", linewidth=1.4,
                label=f"n = m^{dashed_exponent:g}")
        ax.legend(loc="upper left")
        ax.set_xlim(m_axis[0] - 0.5, m_axis[-1] + 0.5)
        ax.set_ylim(n_axis[0] - 0.5, n_axis[-1] + 0.5)
    fig.tight_layout()
    return fig


def render_heatmap(csv_path: str, out_path: str, dashed_exponent: float) -> str:
    """Heatmap of the mean condition number on a fixed log10 color scale.

    Overlays the dashed sampling-rate curve n = m^dashed_exponent.  An
    empty (header-only) table yields blank axes.
    """
    rows = _read_rows(csv_path, HEATMAP_COLUMNS)
    _save(build_heatmap_figure(rows, dashed_exponent), out_path)
    return out_path


def build_convergence_figure(rows: list[dict]):
    fig, ax = plt.subplots(figsize=(5.2, 4.0))
    ax.set_xlabel("degree m")
    ax.set_ylabel("median sup error")
    note = None
    if rows:
        m_vals = np.array([int(r["m"]) for r in rows], dtype=float)
        errs = np.array([float(r["median_sup_error"]) for r in rows])
        ax.semilogy(m_vals, errs, "o-", markersize=4)
        if len(rows) >= 2:
            slope, intercept = np.polyfit(m_vals, np.log10(errs), 1)
            ax.semilogy(m_vals, 10.0 ** (slope * m_vals + intercept), "--",
                        color="gray")
            ax.set_title(f"fitted slope {slope:.4f} decades per degree")
        else:
            note = "single data point: no slope fit"
            ax.set_title(note)
    fig.tight_layout()
    return fig, note


def render_convergence(csv_path: str, out_path: str) -> str:
    """Semilog error-decay plot with an annotated least-squares slope."""
    rows = _read_rows(csv_path, CONVERGENCE_COLUMNS)
    fig, note = build_convergence_figure(rows)
    if note:
        import sys

        print(f"warning: {note}", file=sys.stderr)
    _save(fig, out_path)
    return out_path
