"""Matplotlib rendering of run outputs to image files.

Figures are a convenience layer next to the CSV outputs; the CSVs remain the
authoritative data. All rendering targets files (Agg backend), never a
display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_convergence(traces: dict, out_path, title: str = "", ylabel: str = "best"):
    """Linear and log-scale convergence panels, one line per labelled trace."""
    fig, (ax_lin, ax_log) = plt.subplots(1, 2, figsize=(9.0, 3.4))
    for label, trace in traces.items():
        iterations = np.arange(1, len(trace) + 1)
        ax_lin.plot(iterations, trace, lw=0.9, label=str(label))
        positive = np.asarray(trace) > 0
        if positive.any():
            ax_log.semilogy(iterations[positive], np.asarray(trace)[positive], lw=0.9)
    ax_lin.set_xlabel("iteration")
    ax_lin.set_ylabel(ylabel)
    ax_log.set_xlabel("iteration")
    ax_log.set_ylabel(f"{ylabel} (log scale)")
    if len(traces) <= 12:
        ax_lin.legend(fontsize=6, frameon=False)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)


def render_front(front: np.ndarray, out_path, truth: np.ndarray = None, title: str = ""):
    """Objective-space scatter of an archive, optionally over the true front."""
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    if truth is not None:
        order = np.argsort(truth[:, 0])
        ax.plot(truth[order, 0], truth[order, 1], ".", ms=1.0, color="0.75",
                label="true front")
    ax.plot(front[:, 0], front[:, 1], "o", ms=3.5, mfc="none", label="archive")
    ax.set_xlabel("f1")
    ax.set_ylabel("f2")
    ax.legend(fontsize=7, frameon=False)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)


def render_sweep(values: np.ndarray, means: np.ndarray, param: str, out_path):
    """Parameter-sweep summary: mean final best against the swept value."""
    fig, ax = plt.subplots(figsize=(4.6, 3.2))
    ax.plot(values, means, "o-", ms=3.5)
    ax.set_xlabel(param)
    ax.set_ylabel("mean final best")
    ax.set_yscale("log")
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
