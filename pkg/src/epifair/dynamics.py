"""Initial opinions, stubbornness, and the Friedkin-Johnsen update."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from epifair.errors import DimensionMismatch
from epifair.network import GROUP_B


def sample_initial_opinions(
    groups: ArrayLike, rng: np.random.Generator, a: float = 1.4, b: float = 5.0
) -> np.ndarray:
    """Group A draws ``Beta(a, b)``; group B draws ``1 - Beta(a, b)``."""
    groups = np.asarray(groups)
    z = rng.beta(a, b, size=groups.size)
    return np.where(groups == GROUP_B, 1.0 - z, z)


def sample_stubbornness(n: int, rng: np.random.Generator, low: float = 0.2, high: float = 0.5) -> np.ndarray:
    return rng.uniform(low, high, size=int(n))


def fj_step(x: ArrayLike, x0: ArrayLike, lam: ArrayLike, w: ArrayLike) -> np.ndarray:
    """One synchronous update ``x' = lam * x0 + (1 - lam) * (w @ x)``.

    The result is a convex combination of values in [0, 1]; it is clipped to
    that interval only to absorb round-off in the row sums of ``w``.
    """
    x = np.asarray(x, dtype=np.float64)
    x0 = np.asarray(x0, dtype=np.float64)
    lam = np.asarray(lam, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    n = x.size
    if x0.shape != (n,) or lam.shape != (n,) or w.shape != (n, n):
        raise DimensionMismatch(f"x {x.shape}, x0 {x0.shape}, lambda {lam.shape}, w {w.shape}")
    return np.clip(lam * x0 + (1.0 - lam) * (w @ x), 0.0, 1.0)


def fj_equilibrium(x0: ArrayLike, lam: ArrayLike, w: ArrayLike) -> np.ndarray:
    """Fixed point of the update for a constant ``w`` (needs every ``lam > 0``)."""
    x0 = np.asarray(x0, dtype=np.float64)
    lam = np.asarray(lam, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    lhs = np.eye(x0.size) - (1.0 - lam)[:, None] * w
    return np.linalg.solve(lhs, lam * x0)
