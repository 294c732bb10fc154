"""Inequality indices and a recommender opinion-dynamics audit of epistemic fairness."""

__version__ = "0.1.0"

from epifair.audit import SeedAggregate, Stance, Trajectory, aggregate_seeds, run_scenario, simulate
from epifair.config import ScenarioConfig, load_config, parse_config, serialize_config
from epifair.deficits import DeficitRecord, InjusticeKind, catalog, deficit, deficit_profile, lookup
from epifair.indices import (
    BinnedGroupCounts,
    Distribution,
    IndexPanel,
    atkinson,
    compute_panel,
    dissimilarity,
    generalized_entropy,
    gini,
    hoover,
    jain,
    palma,
    quantile_bin,
    quintile_share_ratio,
)

__all__ = [
    "BinnedGroupCounts",
    "DeficitRecord",
    "Distribution",
    "IndexPanel",
    "InjusticeKind",
    "ScenarioConfig",
    "SeedAggregate",
    "Stance",
    "Trajectory",
    "aggregate_seeds",
    "atkinson",
    "catalog",
    "compute_panel",
    "deficit",
    "deficit_profile",
    "dissimilarity",
    "generalized_entropy",
    "gini",
    "hoover",
    "jain",
    "load_config",
    "lookup",
    "palma",
    "parse_config",
    "quantile_bin",
    "quintile_share_ratio",
    "run_scenario",
    "serialize_config",
    "simulate",
]
