"""Figure rendering for report runs.

Two figures accompany the delimited report output: the crossing diagram
(threshold curve against the constant base eigenvalues, crossings marked)
and the staircase of the fiber-constant negative count, with the full
Morse index overlaid for product models.  Rendering is file-only (Agg);
callers supply the rational t grid.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bifurcation import (
    DegeneracyRecord,
    morse_index_product_at_usq,
    threshold_at_usq,
    trivial_count_at_usq,
)
from .submersion import SubmersionModel


def save_crossing_diagram(
    model: SubmersionModel,
    records: tuple[DegeneracyRecord, ...],
    grid: list[Fraction],
    path: Path,
) -> Path:
    ts = [float(t) for t in grid]
    thr = [float(threshold_at_usq(model, t * t)) for t in grid]

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(ts, thr, color="tab:blue", lw=1.6, label="scal(g_t)/(m-1)")
    top = max(thr) if thr else 1.0
    shown = set()
    for record in records:
        eta = float(record.eigenvalue)
        if eta <= top and eta not in shown:
            shown.add(eta)
            ax.axhline(eta, color="0.65", lw=0.7, ls=":")
        ax.axvline(record.t_approx, color="tab:red", lw=0.8, ls="--")
        ax.plot([record.t_approx], [eta], "o", ms=4, color="tab:red")
    ax.set_xscale("log")
    ax.set_xlabel("fiber scale t (log)")
    ax.set_ylabel("eigenvalue level")
    ax.set_title(f"{model.name}: threshold crossings through base eigenvalues")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def save_index_staircase(
    model: SubmersionModel,
    grid: list[Fraction],
    path: Path,
) -> Path:
    ts = [float(t) for t in grid]
    counts = [trivial_count_at_usq(model, t * t) for t in grid]

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.step(ts, counts, where="post", color="tab:blue", lw=1.4,
            label="fiber-constant negative count")
    if model.is_product:
        morse = [morse_index_product_at_usq(model, t * t) for t in grid]
        ax.step(ts, morse, where="post", color="tab:orange", lw=1.2, ls="--",
                label="Morse index (full enumeration)")
    ax.set_xscale("log")
    ax.set_xlabel("fiber scale t (log)")
    ax.set_ylabel("count")
    ax.set_title(f"{model.name}: negative-direction counts along the collapse")
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)
