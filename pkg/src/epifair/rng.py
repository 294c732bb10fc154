"""Seeded random streams.

Each simulation component draws from its own child of
``numpy.random.SeedSequence(seed)``, so the network, opinions and
stubbornness for a given seed are identical across scenarios no matter
how many numbers another component consumed. The bit generator is PCG64.
"""

from __future__ import annotations

import numpy as np

STREAMS = ("network", "weights", "opinions", "stubbornness", "targets")


def make_rng(seed: int | None) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def component_rngs(seed: int) -> dict[str, np.random.Generator]:
    children = np.random.SeedSequence(int(seed)).spawn(len(STREAMS))
    return {name: np.random.Generator(np.random.PCG64(child)) for name, child in zip(STREAMS, children)}
