"""Matplotlib rendering for the report paths (histograms, convergence)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_KIND_LABEL = {
    "linear": "$E_L$",
    "vn": "$E_{VN}$",
    "renyi": "$E_R$",
    "neg": "$E_N$",
}


def plot_histogram(hist, markers=None, path="histogram.png"):
    """Render a sampled distribution with optional named-state markers."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    centers = (hist.bin_edges[:-1] + hist.bin_edges[1:]) / 2
    ax.plot(centers, hist.density, drawstyle="steps-mid", lw=1.2)
    ax.fill_between(centers, hist.density, step="mid", alpha=0.25)
    for name, value in markers or []:
        ax.axvline(value, color="crimson", ls="--", lw=1)
        ax.annotate(name, (value, ax.get_ylim()[1] * 0.9), rotation=90,
                    ha="right", va="top", fontsize=8, color="crimson")
    label = _KIND_LABEL.get(hist.kind.value, hist.kind.value)
    ax.set_xlabel(label)
    ax.set_ylabel("P")
    ax.set_title(f"{label} over Haar states, n={hist.n} ({hist.samples} samples)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_convergence(trace, path="convergence.png"):
    """Render accepted-step objective values and step-size halvings."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    steps = [s for s, _, _ in trace.accepted_steps]
    values = [v for _, _, v in trace.accepted_steps]
    ax.plot(steps, values, lw=1.2)
    for h in trace.halvings:
        ax.axvline(h, color="gray", lw=0.4, alpha=0.5)
    label = _KIND_LABEL.get(trace.config.kind.value, trace.config.kind.value)
    ax.set_xlabel("proposal")
    ax.set_ylabel(label)
    ax.set_title(
        f"hill climb, n={trace.config.n}, seed={trace.config.seed}: "
        f"final {trace.final_objective:.9g}"
    )
    ax.set_xscale("log")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
