"""Monte Carlo distributions of the global measures over Haar states.

Sampling is chunked with a fixed plan: chunk c draws from a generator
seeded by ``SeedSequence([seed, c])``, so results are identical whether
chunks run sequentially or on a worker pool.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ArityMismatch, InvalidArity, InvalidConfig
from .measures import GlobalMeasureEvaluator, MeasureKind, global_measure, upper_bound
from .states import catalog_state, load_state

__all__ = ["Histogram", "sample_values", "sample_distribution", "marker_values"]

CHUNK = 4096


@dataclass(frozen=True)
class Histogram:
    """Binned probability-density estimate of one measure's distribution."""

    kind: MeasureKind
    n: int
    bin_edges: np.ndarray = field(repr=False)
    counts: np.ndarray = field(repr=False)
    samples: int
    seed: int

    @property
    def density(self) -> np.ndarray:
        widths = np.diff(self.bin_edges)
        return self.counts / (self.samples * widths)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["bin_left", "bin_right", "count", "density"])
        dens = self.density
        for i, count in enumerate(self.counts):
            writer.writerow(
                [f"{self.bin_edges[i]:.12g}", f"{self.bin_edges[i + 1]:.12g}",
                 int(count), f"{dens[i]:.12g}"]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind.value,
                "n": self.n,
                "samples": self.samples,
                "seed": self.seed,
                "bin_edges": [float(e) for e in self.bin_edges],
                "counts": [int(c) for c in self.counts],
                "density": [float(d) for d in self.density],
            },
            indent=1,
        )


def _chunk_values(args) -> np.ndarray:
    n, kind, seed, chunk_index, count = args
    rng = np.random.default_rng(np.random.SeedSequence([seed, chunk_index]))
    evaluator = GlobalMeasureEvaluator(n, kind)
    dim = 1 << n
    out = np.empty(count)
    for i in range(count):
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        out[i] = evaluator.value(z / np.linalg.norm(z))
    return out


def sample_values(
    n: int, kind: MeasureKind, samples: int, seed: int, workers: int = 1
) -> np.ndarray:
    """Global-measure totals of ``samples`` Haar-random n-qubit states."""
    if samples < 1:
        raise InvalidConfig("samples must be >= 1")
    if not 2 <= n <= 7:
        raise InvalidArity("sampling supports n in 2..7")
    plan = []
    start = 0
    index = 0
    while start < samples:
        count = min(CHUNK, samples - start)
        plan.append((n, kind, seed, index, count))
        start += count
        index += 1
    if workers > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_values, plan))
    else:
        parts = [_chunk_values(p) for p in plan]
    return np.concatenate(parts)


def sample_distribution(
    n: int,
    kind: MeasureKind,
    samples: int,
    bins: int = 200,
    seed: int = 0,
    workers: int = 1,
) -> Histogram:
    """Histogram of the measure over Haar states, binned uniformly on
    [0, upper_bound(kind, n)]."""
    if bins < 2:
        raise InvalidConfig("bins must be >= 2")
    values = sample_values(n, kind, samples, seed, workers=workers)
    edges = np.linspace(0.0, upper_bound(kind, n), bins + 1)
    counts, _ = np.histogram(values, bins=edges)
    return Histogram(
        kind=kind, n=n, bin_edges=edges, counts=counts, samples=samples, seed=seed
    )


def marker_values(n: int, kind: MeasureKind, states) -> list[tuple[str, float]]:
    """Evaluate the measure on named catalog states or state files.

    Each entry is a catalog name (arity suffix allowed) or a path to a
    state file; every state must have exactly ``n`` qubits.
    """
    out = []
    for entry in states:
        text = str(entry)
        if text.endswith(".state") or text.endswith(".json") or Path(text).exists():
            state = load_state(text)
            name = Path(text).stem
        else:
            state = catalog_state(text, n=None if any(ch.isdigit() for ch in text) else n)
            name = text
        if state.n != n:
            raise ArityMismatch(f"{name} has {state.n} qubits, requested n={n}")
        out.append((name, global_measure(state, kind).total))
    return out
