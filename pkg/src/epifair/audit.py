"""Simulation runs and index trajectories under both evaluation stances.

The *resource* stance measures incoming attention (column sums of the
influence matrix); the *capability* stance measures realized opinions.
A run records one :class:`~epifair.indices.IndexPanel` per stance at every
``t = 0 .. horizon``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from epifair.config import ScenarioConfig
from epifair.dynamics import fj_step, sample_initial_opinions, sample_stubbornness
from epifair.errors import HeterogeneousInput, InvariantViolation
from epifair.indices import Distribution, IndexPanel, compute_panel
from epifair.interventions import ScenarioKind, apply_boost, build_schedule, make_scenario
from epifair.network import generate_sbm, incoming_attention, init_influence, two_groups
from epifair.rng import component_rngs


class Stance(str, Enum):
    RESOURCE = "resource"
    CAPABILITY = "capability"


@dataclass
class Trajectory:
    scenario: str
    stance: Stance
    seed: int
    panels: list[tuple[int, IndexPanel]]

    @property
    def times(self) -> np.ndarray:
        return np.array([t for t, _ in self.panels])

    def keys(self) -> list[str]:
        return list(self.panels[0][1].as_dict())

    def series(self, key: str) -> np.ndarray:
        """Values of one index over time; ``key`` as in ``IndexPanel.as_dict``."""
        return np.array([p.as_dict()[key] for _, p in self.panels])

    def at(self, t: int) -> IndexPanel:
        return self.panels[t][1]


@dataclass
class SimulationWorld:
    """Everything drawn once per seed, shared by all scenarios."""

    groups: np.ndarray
    adjacency: np.ndarray
    w0: np.ndarray
    x0: np.ndarray
    stubbornness: np.ndarray
    random_targets_rng: np.random.Generator


def build_world(cfg: ScenarioConfig, seed: int) -> SimulationWorld:
    rngs = component_rngs(seed)
    groups = two_groups(cfg.n_agents)
    adj = generate_sbm(groups, cfg.p_intra, cfg.p_inter, rngs["network"])
    w0 = init_influence(adj, rngs["weights"], cfg.weight_low, cfg.weight_high, cfg.weight_support)
    x0 = sample_initial_opinions(groups, rngs["opinions"], cfg.beta_a, cfg.beta_b)
    lam = sample_stubbornness(cfg.n_agents, rngs["stubbornness"], cfg.lambda_low, cfg.lambda_high)
    return SimulationWorld(groups, adj, w0, x0, lam, rngs["targets"])


Observer = Callable[[int, np.ndarray, np.ndarray], None]


def _check_state(t: int, w: np.ndarray, x: np.ndarray, tol: float = 1e-9) -> None:
    n = x.size
    if np.any(x < 0) or np.any(x > 1):
        raise InvariantViolation(f"t={t}: opinion outside [0, 1]")
    if np.any(w < 0) or np.max(np.abs(w.sum(axis=1) - 1.0)) > tol:
        raise InvariantViolation(f"t={t}: influence matrix is not row-stochastic")
    if abs(w.sum() - n) > tol:
        raise InvariantViolation(f"t={t}: incoming attention does not total N")


def run_scenario(
    cfg: ScenarioConfig,
    seed: int,
    scenario: str | ScenarioKind | None = None,
    observer: Observer | None = None,
    check_invariants: bool = True,
) -> tuple[Trajectory, Trajectory]:
    """Run one scenario for one seed; return the resource and capability trajectories.

    ``scenario`` defaults to the first entry of ``cfg.scenarios``. ``observer``,
    if given, is called as ``observer(t, w, x)`` with the state measured at
    every step and once more after each intervention.
    """
    kind = ScenarioKind(scenario if scenario is not None else cfg.scenarios[0])
    world = build_world(cfg, seed)
    scen = make_scenario(kind, world.groups, cfg.gamma, world.random_targets_rng)
    schedule = build_schedule(cfg.horizon, cfg.n_intervals, cfg.intervene_at_zero)

    panel_kw = dict(
        ge_alphas=cfg.ge_alpha,
        atkinson_epsilons=cfg.atkinson_epsilon,
        n_bins=cfg.n_bins,
    )
    res_panels: list[tuple[int, IndexPanel]] = []
    cap_panels: list[tuple[int, IndexPanel]] = []
    w = world.w0
    x = world.x0

    def measure(t):
        if check_invariants:
            _check_state(t, w, x)
        if observer is not None:
            observer(t, w, x)
        res_panels.append((t, compute_panel(incoming_attention(w, world.groups), **panel_kw)))
        cap_panels.append((t, compute_panel(Distribution(x, world.groups), **panel_kw)))

    def intervene(t):
        nonlocal w
        if kind is ScenarioKind.BASELINE or t not in schedule:
            return
        w = apply_boost(w, scen.targets, scen.gamma)
        if check_invariants:
            _check_state(t, w, x)
        if observer is not None:
            observer(t, w, x)

    for t in range(cfg.horizon + 1):
        if cfg.measure_before_intervention:
            measure(t)
            intervene(t)
        else:
            intervene(t)
            measure(t)
        if t < cfg.horizon:
            x = fj_step(x, world.x0, world.stubbornness, w)

    return (
        Trajectory(kind.value, Stance.RESOURCE, seed, res_panels),
        Trajectory(kind.value, Stance.CAPABILITY, seed, cap_panels),
    )


def simulate(cfg: ScenarioConfig) -> list[Trajectory]:
    """Run every configured scenario for every configured seed."""
    out: list[Trajectory] = []
    for kind in cfg.scenarios:
        for seed in cfg.seeds:
            out.extend(run_scenario(cfg, seed, kind))
    return out


@dataclass
class SeedAggregate:
    """Per-index, per-time robust summary across seeds.

    Arrays are indexed ``[key][t]``. NaN entries (failed panel fields) are
    ignored; a time step where every seed failed stays NaN.
    """

    scenario: str
    stance: Stance
    seeds: tuple[int, ...]
    times: np.ndarray
    median: dict[str, np.ndarray]
    q25: dict[str, np.ndarray]
    q75: dict[str, np.ndarray]
    minimum: dict[str, np.ndarray]
    maximum: dict[str, np.ndarray]

    def iqr(self, key: str) -> np.ndarray:
        return self.q75[key] - self.q25[key]


def aggregate_seeds(trajectories: Sequence[Trajectory]) -> SeedAggregate:
    if not trajectories:
        raise HeterogeneousInput("need at least one trajectory")
    first = trajectories[0]
    for tr in trajectories[1:]:
        if tr.scenario != first.scenario or tr.stance != first.stance:
            raise HeterogeneousInput("trajectories mix scenarios or stances")
        if not np.array_equal(tr.times, first.times) or tr.keys() != first.keys():
            raise HeterogeneousInput("trajectories have different time grids or indices")
    keys = first.keys()
    stacked = {k: np.vstack([tr.series(k) for tr in trajectories]) for k in keys}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        med = {k: np.nanmedian(v, axis=0) for k, v in stacked.items()}
        q25 = {k: np.nanpercentile(v, 25, axis=0) for k, v in stacked.items()}
        q75 = {k: np.nanpercentile(v, 75, axis=0) for k, v in stacked.items()}
        lo = {k: np.nanmin(v, axis=0) for k, v in stacked.items()}
        hi = {k: np.nanmax(v, axis=0) for k, v in stacked.items()}
    return SeedAggregate(
        first.scenario, first.stance, tuple(tr.seed for tr in trajectories), first.times, med, q25, q75, lo, hi
    )


def group_trajectories(trajectories: Iterable[Trajectory]) -> dict[tuple[str, Stance], list[Trajectory]]:
    out: dict[tuple[str, Stance], list[Trajectory]] = {}
    for tr in trajectories:
        out.setdefault((tr.scenario, tr.stance), []).append(tr)
    return out
