"""Stochastic hill climbing toward states of high entanglement.

One step proposes a perturbed state, accepts it iff the global measure
strictly increases, and otherwise counts the rejection.  After a run of
``rejection_window`` consecutive rejections the perturbation amplitude
is halved; the search halts once it drops to ``delta_floor``.  Two move
rules are available: the additive rule (an independent uniform draw
added to every real component) and the multiplicative variant that
rescales a single randomly chosen coefficient by positive factors.  The
multiplicative rule preserves the zero support of the state, so it can
never leave a computational basis state; starting it from |00...0> is
rejected at validation unless explicitly overridden.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .errors import InvalidConfig, ZeroVector
from .measures import GlobalMeasureEvaluator, MeasureKind, MeasureReport, global_measure
from .states import PureState, from_amplitudes, load_state

__all__ = [
    "MoveRule",
    "InitialState",
    "SearchConfig",
    "SearchTrace",
    "perturb_additive",
    "perturb_brown",
    "hill_climb",
    "multi_restart",
]


class MoveRule(Enum):
    ADDITIVE = "additive"
    BROWN_MULTIPLICATIVE = "brown"


class InitialState(Enum):
    BASIS_ZERO = "zero"
    RANDOM_HAAR = "haar"
    FILE = "file"


@dataclass(frozen=True)
class SearchConfig:
    n: int
    kind: MeasureKind
    move_rule: MoveRule = MoveRule.ADDITIVE
    delta_init: float = 0.1
    rejection_window: int = 500
    delta_floor: float = 1e-8
    seed: int = 0
    initial_state: InitialState = InitialState.BASIS_ZERO
    initial_file: str | None = None
    brown_factor_max: float = 2.0
    allow_degenerate_start: bool = False

    def validate(self) -> None:
        if self.n < 2:
            raise InvalidConfig("search needs n >= 2")
        if not self.delta_init > self.delta_floor > 0:
            raise InvalidConfig("need delta_init > delta_floor > 0")
        if self.rejection_window < 1:
            raise InvalidConfig("rejection_window must be >= 1")
        if self.initial_state is InitialState.FILE and not self.initial_file:
            raise InvalidConfig("initial_state=FILE needs initial_file")
        if (
            self.move_rule is MoveRule.BROWN_MULTIPLICATIVE
            and self.initial_state is InitialState.BASIS_ZERO
            and not self.allow_degenerate_start
        ):
            raise InvalidConfig(
                "the multiplicative rule cannot leave |00...0>; "
                "start from a Haar state or set allow_degenerate_start"
            )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind.value,
            "move_rule": self.move_rule.value,
            "delta_init": self.delta_init,
            "rejection_window": self.rejection_window,
            "delta_floor": self.delta_floor,
            "seed": self.seed,
            "initial_state": self.initial_state.value,
            "initial_file": self.initial_file,
            "brown_factor_max": self.brown_factor_max,
        }


@dataclass(frozen=True)
class SearchTrace:
    """Auditable record of one hill-climb run."""

    config: SearchConfig
    accepted_steps: tuple[tuple[int, float, float], ...]  # (proposal index, delta_max, objective)
    halvings: tuple[int, ...]
    total_proposals: int
    final_state: PureState = field(repr=False)
    final_report: MeasureReport = field(repr=False)

    @property
    def final_objective(self) -> float:
        return self.final_report.total

    def to_json(self) -> str:
        doc = {
            "config": self.config.as_dict(),
            "total_proposals": self.total_proposals,
            "accepted_count": len(self.accepted_steps),
            "halvings": list(self.halvings),
            "final_objective": self.final_objective,
            "accepted_steps": [
                {"step": s, "delta_max": d, "objective": v}
                for s, d, v in self.accepted_steps
            ],
        }
        return json.dumps(doc, indent=1)

    def convergence_csv(self) -> str:
        lines = ["step,delta_max,objective"]
        for s, d, v in self.accepted_steps:
            lines.append(f"{s},{d:.12g},{v:.12g}")
        return "\n".join(lines) + "\n"


def _perturb_additive_raw(amps: np.ndarray, delta_max: float, rng) -> np.ndarray:
    dim = amps.shape[0]
    shift = rng.uniform(-delta_max, delta_max, 2 * dim)
    moved = amps + shift[:dim] + 1j * shift[dim:]
    norm = np.linalg.norm(moved)
    if norm == 0.0:
        shift = rng.uniform(-delta_max, delta_max, 2 * dim)
        moved = amps + shift[:dim] + 1j * shift[dim:]
        norm = np.linalg.norm(moved)
        if norm == 0.0:
            raise ZeroVector("perturbation produced the zero vector twice")
    return moved / norm


def _perturb_brown_raw(amps: np.ndarray, rng, factor_max: float) -> np.ndarray:
    k = int(rng.integers(amps.shape[0]))
    fr, fi = rng.uniform(0.0, factor_max, 2)
    moved = amps.copy()
    moved[k] = fr * amps[k].real + 1j * fi * amps[k].imag
    return moved / np.linalg.norm(moved)


def perturb_additive(s: PureState, delta_max: float, rng: np.random.Generator) -> PureState:
    """Add an independent uniform(-delta_max, delta_max) draw to every
    real component, then renormalize."""
    if delta_max <= 0:
        raise InvalidConfig("delta_max must be positive")
    return from_amplitudes(s.n, _perturb_additive_raw(s.amplitudes, delta_max, rng))


def perturb_brown(s: PureState, rng: np.random.Generator, factor_max: float = 2.0) -> PureState:
    """Rescale one random coefficient's real and imaginary parts by
    independent positive factors, then renormalize."""
    return from_amplitudes(s.n, _perturb_brown_raw(s.amplitudes, rng, factor_max))


def _initial_amplitudes(config: SearchConfig, rng) -> np.ndarray:
    if config.initial_state is InitialState.BASIS_ZERO:
        amps = np.zeros(1 << config.n, dtype=np.complex128)
        amps[0] = 1.0
        return amps
    if config.initial_state is InitialState.RANDOM_HAAR:
        z = rng.standard_normal(1 << config.n) + 1j * rng.standard_normal(1 << config.n)
        return z / np.linalg.norm(z)
    state = load_state(config.initial_file)
    if state.n != config.n:
        raise InvalidConfig(f"initial file has n={state.n}, config has n={config.n}")
    return state.amplitudes.copy()


def hill_climb(config: SearchConfig) -> SearchTrace:
    """Run the adaptive-step stochastic ascent to completion.

    Deterministic for a fixed config: a single seeded generator drives
    both the initial state (when Haar) and every proposal.
    """
    config.validate()
    rng = np.random.default_rng(config.seed)
    amps = _initial_amplitudes(config, rng)
    evaluator = GlobalMeasureEvaluator(config.n, config.kind)
    current = evaluator.value(amps)
    delta = config.delta_init
    rejects = 0
    proposals = 0
    accepted: list[tuple[int, float, float]] = []
    halvings: list[int] = []
    additive = config.move_rule is MoveRule.ADDITIVE
    while delta > config.delta_floor:
        proposals += 1
        if additive:
            candidate = _perturb_additive_raw(amps, delta, rng)
        else:
            candidate = _perturb_brown_raw(amps, rng, config.brown_factor_max)
        value = evaluator.value(candidate)
        if value > current:
            amps = candidate
            current = value
            rejects = 0
            accepted.append((proposals, delta, value))
        else:
            rejects += 1
            if rejects >= config.rejection_window:
                delta *= 0.5
                halvings.append(proposals)
                rejects = 0
    final_state = from_amplitudes(config.n, amps)
    return SearchTrace(
        config=config,
        accepted_steps=tuple(accepted),
        halvings=tuple(halvings),
        total_proposals=proposals,
        final_state=final_state,
        final_report=global_measure(final_state, config.kind),
    )


def multi_restart(
    config: SearchConfig, restarts: int, workers: int = 1
) -> tuple[SearchTrace, list[dict]]:
    """Run ``restarts`` independent climbs seeded seed, seed+1, ...

    Returns the best trace (highest final objective, earliest seed on
    ties) and a per-restart summary table, ordered by seed regardless of
    worker count.
    """
    if restarts < 1:
        raise InvalidConfig("restarts must be >= 1")
    configs = [replace(config, seed=config.seed + i) for i in range(restarts)]
    if workers > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            traces = list(pool.map(hill_climb, configs))
    else:
        traces = [hill_climb(c) for c in configs]
    best = max(traces, key=lambda t: t.final_objective)
    summary = [
        {
            "seed": t.config.seed,
            "final_objective": t.final_objective,
            "total_proposals": t.total_proposals,
            "accepted": len(t.accepted_steps),
            "halvings": len(t.halvings),
        }
        for t in traces
    ]
    return best, summary
