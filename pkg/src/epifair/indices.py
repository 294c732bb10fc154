"""Inequality and segregation indices for nonnegative distributions.

Every function accepts either a :class:`Distribution` or a plain array-like
of nonnegative values. Degenerate inputs raise a subclass of
:class:`~epifair.errors.EpifairError` instead of returning sentinels:

* an all-zero distribution raises :class:`AllZero` for every index;
* zeros in Theil L (``alpha == 0``) or in GE with ``alpha < 0`` raise
  :class:`ZeroWithLogBranch`; Theil T uses ``0 * ln 0 = 0``;
* Atkinson with zeros and ``epsilon >= 1`` returns exactly 1;
* Palma and S80/S20 raise :class:`ZeroDenominator` when the bottom share is 0.

Percentile shares split the boundary agent's value in proportion to the
population mass that falls inside the cutoff, which keeps the ratios
invariant under replication of the population.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np
from numpy.typing import ArrayLike

from epifair.errors import (
    AllZero,
    EmptyGroup,
    EpifairError,
    InvalidDistribution,
    InvalidParameter,
    NotTwoGroups,
    TooFewAgents,
    ZeroDenominator,
    ZeroWithLogBranch,
)

__all__ = [
    "Distribution",
    "BinnedGroupCounts",
    "IndexPanel",
    "jain",
    "gini",
    "gini_pairwise",
    "hoover",
    "generalized_entropy",
    "theil_l",
    "theil_t",
    "atkinson",
    "dissimilarity",
    "quantile_bin",
    "top_bottom_ratio",
    "palma",
    "quintile_share_ratio",
    "compute_panel",
    "format_param",
]


@dataclass(frozen=True)
class Distribution:
    """Nonnegative per-agent values with optional group labels.

    ``tag`` is a free-form label carried along for reporting (the deficit
    module stores the injustice kind there).
    """

    values: np.ndarray
    groups: np.ndarray | None = None
    tag: str | None = None

    def __post_init__(self):
        values = _as_values(self.values)
        object.__setattr__(self, "values", values)
        if self.groups is not None:
            groups = np.asarray(self.groups)
            if groups.shape != values.shape:
                raise InvalidDistribution(
                    f"groups has shape {groups.shape}, values has {values.shape}"
                )
            object.__setattr__(self, "groups", groups)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class BinnedGroupCounts:
    """Per-unit head counts of two groups, ``a[k]`` and ``b[k]``."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a)
        b = np.asarray(self.b)
        if a.ndim != 1 or a.shape != b.shape:
            raise InvalidDistribution("a and b must be 1-D and of equal length")
        for name, arr in (("a", a), ("b", b)):
            if not np.all(np.isfinite(arr)) or np.any(arr < 0) or np.any(arr != np.round(arr)):
                raise InvalidDistribution(f"{name} must hold nonnegative integer counts")
        object.__setattr__(self, "a", a.astype(np.int64))
        object.__setattr__(self, "b", b.astype(np.int64))

    @property
    def total_a(self) -> int:
        return int(self.a.sum())

    @property
    def total_b(self) -> int:
        return int(self.b.sum())


def _as_values(d) -> np.ndarray:
    if isinstance(d, Distribution):
        return d.values
    values = np.asarray(d, dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise InvalidDistribution("values must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(values)):
        raise InvalidDistribution("values must be finite")
    if np.any(values < 0):
        raise InvalidDistribution("values must be nonnegative")
    return values


def _positive_total(d) -> np.ndarray:
    values = _as_values(d)
    if not np.any(values > 0):
        raise AllZero("distribution sums to zero")
    return values


def _is_constant(values: np.ndarray) -> bool:
    return bool(np.all(values == values[0]))


def jain(d: Distribution | ArrayLike) -> float:
    """Jain's fairness index, between ``1/N`` and 1 (perfect evenness)."""
    v = _positive_total(d)
    if _is_constant(v):
        return 1.0
    return float(v.sum() ** 2 / (v.size * np.dot(v, v)))


def gini(d: Distribution | ArrayLike) -> float:
    """Gini index via the sorted-rank form, O(N log N).

    Equal to the mean absolute pairwise difference divided by twice the mean.
    """
    v = _positive_total(d)
    if _is_constant(v):
        return 0.0
    n = v.size
    v = np.sort(v)
    ranks = 2.0 * np.arange(1, n + 1) - n - 1
    return float(max(np.dot(ranks, v) / (n * v.sum()), 0.0))


def gini_pairwise(d: Distribution | ArrayLike) -> float:
    """Literal O(N^2) double-sum Gini; kept as a reference implementation."""
    v = _positive_total(d)
    n = v.size
    return float(np.abs(v[:, None] - v[None, :]).sum() / (2.0 * n * n * v.mean()))


def hoover(d: Distribution | ArrayLike) -> float:
    """Hoover (Robin Hood) index: share of the total that must move to reach equality."""
    v = _positive_total(d)
    if _is_constant(v):
        return 0.0
    mean = v.mean()
    return float(np.abs(v - mean).sum() / (2.0 * v.size * mean))


def generalized_entropy(d: Distribution | ArrayLike, alpha: float) -> float:
    """Generalized entropy GE(alpha).

    ``alpha == 0`` is Theil L, ``alpha == 1`` is Theil T. Zeros are rejected
    whenever they make a term infinite (``alpha <= 0``).
    """
    v = _positive_total(d)
    alpha = float(alpha)
    if not np.isfinite(alpha):
        raise InvalidParameter("alpha must be finite")
    if alpha <= 0 and np.any(v == 0):
        raise ZeroWithLogBranch(f"GE({alpha:g}) is infinite when any value is zero")
    if _is_constant(v):
        return 0.0
    r = v / v.mean()
    if alpha == 0:
        out = -np.mean(np.log(r))
    elif alpha == 1:
        pos = r > 0
        out = np.sum(r[pos] * np.log(r[pos])) / r.size
    else:
        out = np.mean(r**alpha - 1.0) / (alpha * (alpha - 1.0))
    return float(max(out, 0.0))


def theil_l(d: Distribution | ArrayLike) -> float:
    return generalized_entropy(d, 0.0)


def theil_t(d: Distribution | ArrayLike) -> float:
    return generalized_entropy(d, 1.0)


def atkinson(d: Distribution | ArrayLike, epsilon: float) -> float:
    """Atkinson index A(epsilon) with inequality aversion ``epsilon >= 0``.

    With any zero value and ``epsilon >= 1`` the equally-distributed
    equivalent collapses to 0 and the index is exactly 1.
    """
    v = _positive_total(d)
    epsilon = float(epsilon)
    if not np.isfinite(epsilon) or epsilon < 0:
        raise InvalidParameter("epsilon must be finite and >= 0")
    if _is_constant(v):
        return 0.0
    if epsilon >= 1 and np.any(v == 0):
        return 1.0
    mean = v.mean()
    if epsilon == 1:
        ede = np.exp(np.mean(np.log(v)))
    else:
        p = 1.0 - epsilon
        ede = np.mean(v**p) ** (1.0 / p)
    return float(min(max(1.0 - ede / mean, 0.0), 1.0))


def dissimilarity(c: BinnedGroupCounts | tuple[ArrayLike, ArrayLike]) -> float:
    """Dissimilarity index between two groups binned into units."""
    if not isinstance(c, BinnedGroupCounts):
        c = BinnedGroupCounts(*c)
    total_a, total_b = c.total_a, c.total_b
    if total_a < 1 or total_b < 1:
        raise EmptyGroup(f"group totals are A={total_a}, B={total_b}")
    return float(0.5 * np.abs(c.a / total_a - c.b / total_b).sum())


def quantile_bin(d: Distribution, n_bins: int, groups: ArrayLike | None = None) -> BinnedGroupCounts:
    """Split the pooled population into ``n_bins`` equal-count quantile bins.

    Agents are ranked by ``(value, original index)``; rank ``r`` goes to bin
    ``floor(r * n_bins / N)``. The lexicographically smaller label is group A.
    """
    values = _as_values(d)
    if groups is None:
        groups = d.groups if isinstance(d, Distribution) else None
    if groups is None:
        raise NotTwoGroups("no group labels supplied")
    groups = np.asarray(groups)
    if groups.shape != values.shape:
        raise InvalidDistribution("groups must align with values")
    labels = np.unique(groups)
    if labels.size != 2:
        raise NotTwoGroups(f"expected 2 distinct group labels, got {labels.size}")
    n_bins = int(n_bins)
    if n_bins < 1:
        raise InvalidParameter("n_bins must be positive")
    n = values.size
    if n < n_bins:
        raise TooFewAgents(f"{n} agents cannot fill {n_bins} bins")
    order = np.lexsort((np.arange(n), values))
    bin_of = np.empty(n, dtype=np.int64)
    bin_of[order] = np.arange(n) * n_bins // n
    in_a = groups == labels[0]
    a = np.bincount(bin_of[in_a], minlength=n_bins)
    b = np.bincount(bin_of[~in_a], minlength=n_bins)
    return BinnedGroupCounts(a, b)


def _mass_between(sorted_values: np.ndarray, lo: float, hi: float) -> float:
    # agent k covers the population interval [k, k+1) in units of persons
    n = sorted_values.size
    left = np.arange(n, dtype=np.float64)
    overlap = np.clip(np.minimum(left + 1.0, hi * n) - np.maximum(left, lo * n), 0.0, None)
    return float(np.dot(sorted_values, overlap))


def top_bottom_ratio(d: Distribution | ArrayLike, top: float, bottom: float) -> float:
    """Total held by the richest ``top`` fraction over the poorest ``bottom`` fraction."""
    if not (0 < top <= 1 and 0 < bottom <= 1):
        raise InvalidParameter("fractions must lie in (0, 1]")
    v = np.sort(_positive_total(d))
    denom = _mass_between(v, 0.0, bottom)
    if denom <= 0:
        raise ZeroDenominator(f"bottom {bottom:.0%} holds zero total")
    return _mass_between(v, 1.0 - top, 1.0) / denom


def palma(d: Distribution | ArrayLike) -> float:
    """Top 10% share over bottom 40% share."""
    return top_bottom_ratio(d, 0.1, 0.4)


def quintile_share_ratio(d: Distribution | ArrayLike) -> float:
    """S80/S20: top-quintile total over bottom-quintile total."""
    return top_bottom_ratio(d, 0.2, 0.2)


def format_param(p: float) -> str:
    return f"{float(p):g}"


@dataclass
class IndexPanel:
    """One snapshot of every index on a single distribution.

    Fields whose computation failed hold ``nan`` and the error's class name
    is recorded in ``errors`` under the field key (``"ge[0]"``, ``"palma"``...).
    ``dissimilarity`` is ``None`` when it was not requested.
    """

    jain: float
    gini: float
    hoover: float
    ge: dict[float, float]
    atkinson: dict[float, float]
    dissimilarity: float | None
    palma: float
    s80_s20: float
    errors: dict[str, str] = field(default_factory=dict)

    def rows(self) -> Iterator[tuple[str, str, float, str]]:
        """Yield ``(index_name, param, value, error_flag)`` in a fixed order."""
        yield "jain", "", self.jain, self.errors.get("jain", "")
        yield "gini", "", self.gini, self.errors.get("gini", "")
        yield "hoover", "", self.hoover, self.errors.get("hoover", "")
        for alpha, value in self.ge.items():
            key = f"ge[{format_param(alpha)}]"
            yield "ge", format_param(alpha), value, self.errors.get(key, "")
        for eps, value in self.atkinson.items():
            key = f"atkinson[{format_param(eps)}]"
            yield "atkinson", format_param(eps), value, self.errors.get(key, "")
        if self.dissimilarity is not None:
            yield "dissimilarity", "", self.dissimilarity, self.errors.get("dissimilarity", "")
        yield "palma", "", self.palma, self.errors.get("palma", "")
        yield "s80_s20", "", self.s80_s20, self.errors.get("s80_s20", "")

    def as_dict(self) -> dict[str, float]:
        out = {}
        for name, param, value, _ in self.rows():
            out[f"{name}[{param}]" if param else name] = value
        return out


def compute_panel(
    d: Distribution | ArrayLike,
    ge_alphas: Iterable[float] = (2.0,),
    atkinson_epsilons: Iterable[float] = (2.0,),
    n_bins: int | None = None,
    groups: Sequence | None = None,
) -> IndexPanel:
    """Compute every index on ``d``, recording per-field errors instead of raising.

    Dissimilarity is computed only when group labels are available (on ``d``
    or via ``groups``) and ``n_bins`` is given.
    """
    if not isinstance(d, Distribution):
        d = Distribution(d, groups)
    elif groups is not None:
        d = Distribution(d.values, groups, d.tag)
    errors: dict[str, str] = {}

    def attempt(key, fn, *args):
        try:
            return fn(*args)
        except EpifairError as exc:
            errors[key] = type(exc).__name__
            return float("nan")

    ge = {float(a): attempt(f"ge[{format_param(a)}]", generalized_entropy, d, a) for a in ge_alphas}
    atk = {float(e): attempt(f"atkinson[{format_param(e)}]", atkinson, d, e) for e in atkinson_epsilons}
    diss = None
    if n_bins is not None and d.groups is not None:
        diss = attempt("dissimilarity", lambda: dissimilarity(quantile_bin(d, n_bins)))
    return IndexPanel(
        jain=attempt("jain", jain, d),
        gini=attempt("gini", gini, d),
        hoover=attempt("hoover", hoover, d),
        ge=ge,
        atkinson=atk,
        dissimilarity=diss,
        palma=attempt("palma", palma, d),
        s80_s20=attempt("s80_s20", quintile_share_ratio, d),
        errors=errors,
    )
