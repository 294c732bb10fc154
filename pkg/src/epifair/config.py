"""Simulation configuration.

The on-disk format is flat ``key = value`` lines (``#`` starts a comment),
optionally under a single ``[simulation]`` header. Missing keys take the
defaults below, which reproduce the reference study; unknown keys are an
error. Recognised keys:

==========================  ===========  =====================================
key                         default      meaning
==========================  ===========  =====================================
n_agents                    100          population size, split into groups A/B
p_intra                     0.18         edge probability inside a group
p_inter                     0.04         edge probability across groups
weight_low, weight_high     0.5, 1.5     bounds of the initial uniform weights
weight_support              edges        ``edges`` or ``all`` off-diagonal entries
beta_a, beta_b              1.4, 5.0     Beta shape of initial opinions
lambda_low, lambda_high     0.2, 0.5     bounds of uniform stubbornness
horizon                     50           number of update steps T
gamma                       0.5          boost factor, columns scale by 1+gamma
n_intervals                 10           interventions every horizon//n_intervals
intervene_at_zero           false        also intervene at t = 0
measure_before_intervention true         record a step before its intervention
scenarios                   all three    comma list of baseline, targeted_boost,
                                         random_boost
ge_alpha                    2            GE parameter(s), comma list allowed
atkinson_epsilon            2            Atkinson parameter(s), comma list
n_bins                      10           quantile bins for dissimilarity
seed                        0            first seed
n_seeds                     1            seeds run are seed .. seed+n_seeds-1
==========================  ===========  =====================================
"""

from __future__ import annotations

import configparser
import dataclasses
import json
import re
from dataclasses import dataclass
from pathlib import Path

from epifair.errors import InvalidValue, ParseError
from epifair.interventions import ScenarioKind

SECTION = "simulation"

ALL_SCENARIOS = tuple(k.value for k in ScenarioKind)


@dataclass(frozen=True)
class ScenarioConfig:
    n_agents: int = 100
    p_intra: float = 0.18
    p_inter: float = 0.04
    weight_low: float = 0.5
    weight_high: float = 1.5
    weight_support: str = "edges"
    beta_a: float = 1.4
    beta_b: float = 5.0
    lambda_low: float = 0.2
    lambda_high: float = 0.5
    horizon: int = 50
    gamma: float = 0.5
    n_intervals: int = 10
    intervene_at_zero: bool = False
    measure_before_intervention: bool = True
    scenarios: tuple[str, ...] = ALL_SCENARIOS
    ge_alpha: tuple[float, ...] = (2.0,)
    atkinson_epsilon: tuple[float, ...] = (2.0,)
    n_bins: int = 10
    seed: int = 0
    n_seeds: int = 1

    def __post_init__(self):
        validate(self)

    def replace(self, **changes) -> "ScenarioConfig":
        return dataclasses.replace(self, **changes)

    @property
    def seeds(self) -> list[int]:
        return list(range(self.seed, self.seed + self.n_seeds))

    def to_dict(self) -> dict:
        out = dataclasses.asdict(self)
        for key in ("scenarios", "ge_alpha", "atkinson_epsilon"):
            out[key] = list(out[key])
        return out


FIELDS = {f.name: f for f in dataclasses.fields(ScenarioConfig)}


def validate(cfg: ScenarioConfig) -> None:
    def check(key, ok, message):
        if not ok:
            raise InvalidValue(key, message)

    check("n_agents", cfg.n_agents >= 2, "need at least two agents")
    for key in ("p_intra", "p_inter"):
        check(key, 0.0 <= getattr(cfg, key) <= 1.0, "probability must lie in [0, 1]")
    check("p_inter", cfg.p_inter <= cfg.p_intra, "must not exceed p_intra")
    check("weight_low", 0.0 <= cfg.weight_low < cfg.weight_high, "need 0 <= weight_low < weight_high")
    check("weight_support", cfg.weight_support in ("edges", "all"), "must be 'edges' or 'all'")
    check("beta_a", cfg.beta_a > 0, "must be positive")
    check("beta_b", cfg.beta_b > 0, "must be positive")
    check("lambda_low", 0.0 < cfg.lambda_low <= cfg.lambda_high < 1.0, "need 0 < lambda_low <= lambda_high < 1")
    check("n_intervals", cfg.n_intervals >= 1, "must be positive")
    check("horizon", cfg.horizon >= cfg.n_intervals, "must be at least n_intervals")
    check("gamma", cfg.gamma >= -1.0, "1 + gamma must be nonnegative")
    check("scenarios", len(cfg.scenarios) >= 1, "need at least one scenario")
    for s in cfg.scenarios:
        check("scenarios", s in ALL_SCENARIOS, f"unknown scenario {s!r}")
    check("atkinson_epsilon", all(e >= 0 for e in cfg.atkinson_epsilon), "must be >= 0")
    check("ge_alpha", len(cfg.ge_alpha) >= 1, "need at least one value")
    check("n_bins", 1 <= cfg.n_bins <= cfg.n_agents, "must lie in [1, n_agents]")
    check("n_seeds", cfg.n_seeds >= 1, "must be positive")
    check("seed", cfg.seed >= 0, "must be nonnegative")


def convert_value(key: str, raw: str):
    f = FIELDS[key]
    kind = f.type
    raw = raw.strip()
    try:
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "bool":
            low = raw.lower()
            if low in ("true", "yes", "1", "on"):
                return True
            if low in ("false", "no", "0", "off"):
                return False
            raise ValueError(f"not a boolean: {raw!r}")
        if kind == "str":
            return raw
        if kind == "tuple[str, ...]":
            return tuple(s.strip() for s in raw.split(",") if s.strip())
        if kind == "tuple[float, ...]":
            return tuple(float(s) for s in raw.split(",") if s.strip())
    except ValueError as exc:
        raise InvalidValue(key, str(exc)) from None
    raise AssertionError(f"unhandled field type {kind}")


def parse_config(text: str) -> ScenarioConfig:
    """Parse a configuration document; see the module docstring for keys."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    if not re.search(r"^\s*\[", text, re.MULTILINE):
        text = f"[{SECTION}]\n{text}"
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ParseError(str(exc)) from None
    extra = [s for s in parser.sections() if s != SECTION]
    if extra:
        raise ParseError(f"unexpected section(s): {', '.join(extra)}")
    values = {}
    if parser.has_section(SECTION):
        for key, raw in parser.items(SECTION):
            if key not in FIELDS:
                raise InvalidValue(key, "unknown key")
            values[key] = convert_value(key, raw)
    return ScenarioConfig(**values)


def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return ", ".join(_format(v) for v in value)
    return str(value)


def serialize_config(cfg: ScenarioConfig) -> str:
    lines = [f"[{SECTION}]"]
    for name in FIELDS:
        lines.append(f"{name} = {_format(getattr(cfg, name))}")
    return "\n".join(lines) + "\n"


def load_config(path: str | Path) -> ScenarioConfig:
    """Read a config file, or the ``config`` block of a run manifest (``.json``)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)["config"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"not a run manifest: {exc}") from None
        return config_from_dict(data)
    return parse_config(text)


def config_from_dict(data: dict) -> ScenarioConfig:
    values = {}
    for key, value in data.items():
        if key not in FIELDS:
            raise InvalidValue(key, "unknown key")
        if isinstance(value, list):
            value = tuple(value)
        values[key] = value
    for key in ("ge_alpha", "atkinson_epsilon"):
        if key in values:
            values[key] = tuple(float(v) for v in values[key])
    return ScenarioConfig(**values)
