"""Figures for report items that carry a plottable series."""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import CheckResult, Report


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")


def plot_series(result: CheckResult, path: Path) -> Path:
    s = result.series
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(s["x"], s["y"], "o-", color="tab:blue", label="observed")
    if s.get("bound") is not None:
        ax.step(s["x"], s["bound"], where="mid", color="tab:red", linestyle="--", label="bound")
    ax.set_xlabel(s.get("xlabel", ""))
    ax.set_ylabel(s.get("ylabel", ""))
    ax.set_title(f"{result.name} ({'pass' if result.passed else 'FAIL'})", fontsize=10)
    ax.legend(frameon=False, fontsize=8)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_report(report: Report, out_dir) -> list[Path]:
    """Write one PNG per result with a series; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = _slug("-".join(report.command))
    return [
        plot_series(r, out / f"{stem}--{_slug(r.name)}.png")
        for r in report.results
        if r.series is not None
    ]
