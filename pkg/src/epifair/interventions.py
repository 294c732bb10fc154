"""Platform interventions: periodic column boosts of the influence matrix."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from epifair.errors import HorizonTooShort, InvalidParameter, InvalidTarget
from epifair.network import GROUP_A, row_normalize


class ScenarioKind(str, Enum):
    BASELINE = "baseline"
    TARGETED = "targeted_boost"
    RANDOM = "random_boost"


@dataclass(frozen=True)
class Scenario:
    kind: ScenarioKind
    targets: tuple[int, ...]
    gamma: float

    def __post_init__(self):
        if self.kind is ScenarioKind.BASELINE and self.targets:
            raise InvalidTarget("the baseline scenario has no targets")


@dataclass(frozen=True)
class Schedule:
    horizon: int
    times: frozenset[int]

    def __contains__(self, t):
        return t in self.times


def build_schedule(horizon: int, n_intervals: int = 10, include_zero: bool = False) -> Schedule:
    """Intervention times at the multiples of ``horizon // n_intervals`` up to ``horizon``."""
    if n_intervals < 1:
        raise InvalidParameter("n_intervals must be positive")
    if horizon < n_intervals:
        raise HorizonTooShort(f"horizon {horizon} is shorter than {n_intervals} intervals")
    period = horizon // n_intervals
    start = 0 if include_zero else period
    return Schedule(horizon, frozenset(range(start, horizon + 1, period)))


def apply_boost(w: ArrayLike, targets, gamma: float) -> np.ndarray:
    """Scale the target columns by ``1 + gamma`` and renormalize the rows."""
    w = np.asarray(w, dtype=np.float64)
    targets = np.asarray(sorted(targets), dtype=np.int64)
    n = w.shape[0]
    if targets.size and (targets.min() < 0 or targets.max() >= n):
        raise InvalidTarget(f"targets must lie in [0, {n})")
    if gamma < -1:
        raise InvalidParameter("1 + gamma must be nonnegative")
    boosted = w.copy()
    boosted[:, targets] *= 1.0 + gamma
    return row_normalize(boosted)


def select_random_targets(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform random subset of ``n // 2`` agents, sorted."""
    chosen = rng.choice(int(n), size=int(n) // 2, replace=False)
    return tuple(int(i) for i in np.sort(chosen))


def make_scenario(kind, groups: ArrayLike, gamma: float, rng: np.random.Generator | None = None) -> Scenario:
    kind = ScenarioKind(kind)
    groups = np.asarray(groups)
    if kind is ScenarioKind.BASELINE:
        targets: tuple[int, ...] = ()
    elif kind is ScenarioKind.TARGETED:
        targets = tuple(int(i) for i in np.flatnonzero(groups == GROUP_A))
    else:
        if rng is None:
            raise ValueError("random_boost needs a generator")
        targets = select_random_targets(groups.size, rng)
    return Scenario(kind, targets, float(gamma))
