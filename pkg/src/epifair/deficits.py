"""Ideal-versus-actual deficits and the catalog of injustice kinds.

A deficit is the absolute gap ``|ideal - actual|`` between the epistemic
condition an agent is owed and the one it actually enjoys. Kinds whose
harm is an over-supply (epistemic exploitation: too much labour extracted)
use the same scalar; the sign convention lives in :attr:`InjusticeKind.direction`.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from epifair.errors import LengthMismatch, NegativeInput, NonFinite
from epifair.indices import Distribution


class Direction(str, Enum):
    SHORTFALL = "shortfall"
    EXCESS = "excess"


@dataclass(frozen=True)
class InjusticeKind:
    key: str
    name: str
    ideal_symbol: str
    actual_symbol: str
    direction: Direction
    flow_based: bool
    mechanism_doc: str

    @property
    def deficit_expr(self) -> str:
        return f"|{self.ideal_symbol} - {self.actual_symbol}|"


@dataclass(frozen=True)
class DeficitRecord:
    kind: InjusticeKind
    ideal: float
    actual: float
    deficit: float

    @classmethod
    def from_conditions(cls, kind: InjusticeKind, ideal: float, actual: float) -> "DeficitRecord":
        return cls(kind, float(ideal), float(actual), deficit(ideal, actual))


_S, _E = Direction.SHORTFALL, Direction.EXCESS

_CATALOG = (
    # direct ideal/actual shortfalls
    InjusticeKind(
        "contributory", "Contributory injustice", "i_c", "i_{m→c}", _S, False,
        "Interpretive resources developed by marginalized knowers are ignored "
        "or bent to fit dominant frameworks, so their situated knowledge gets no uptake.",
    ),
    InjusticeKind(
        "formative", "Formative epistemic injustice", "e_c", "e_{a←c}", _S, False,
        "Institutions or social structures restrict the development of a "
        "person's capacities as a knower.",
    ),
    InjusticeKind(
        "hermeneutical", "Hermeneutical injustice", "i_c", "i_{a←c}", _S, False,
        "Identity prejudice erodes someone's ability to make sense of their own experience.",
    ),
    InjusticeKind(
        "prediscursive", "Prediscursive epistemic injury", "a_c", "a_{a←c}", _S, False,
        "Structural conditions weaken epistemic agency, for example self-trust, "
        "before any testimonial exchange takes place.",
    ),
    InjusticeKind(
        "testimonial", "Testimonial injustice", "r_s", "c_{h←s}", _S, False,
        "A hearer's identity prejudice lowers the credibility given to a speaker.",
    ),
    InjusticeKind(
        "testimonial_quieting", "Testimonial quieting", "u_s", "u_{h←s}", _S, False,
        "An audience fails to treat the speaker as a knower and so gives no uptake.",
    ),
    InjusticeKind(
        "testimonial_smothering", "Testimonial smothering", "e_s", "e_{s→h}", _S, False,
        "Expecting a hostile reception, the speaker cuts short or withholds testimony.",
    ),
    InjusticeKind(
        "willful_hermeneutical_ignorance", "Willful hermeneutical ignorance", "i_c", "i_{h←c}", _S, False,
        "Dominant knowers decline to learn marginalized perspectives although "
        "the evidence and interpretive tools are at hand.",
    ),
    # relational or flow-based harms recast as deficits
    InjusticeKind(
        "epistemic_exploitation", "Epistemic exploitation", "ℓ_c", "ℓ_{a←c}", _E, True,
        "Marginalized knowers carry an outsized, unpaid and often risky load of "
        "epistemic labour such as educating privileged agents. The realized load "
        "exceeds the fair share.",
    ),
    InjusticeKind(
        "epistemic_appropriation", "Epistemic appropriation", "κ_{a→c}", "κ_{a→d}", _S, True,
        "Dominant agents take up knowledge from marginalized communities while "
        "credit and benefit are routed away from the originators.",
    ),
    InjusticeKind(
        "epistemic_objectification", "Epistemic objectification", "a_s", "a_{h←s}", _S, True,
        "A knower is used as a mere source of information instead of being "
        "recognized as a subject with reasons and standing.",
    ),
    InjusticeKind(
        "hermeneutical_marginalization", "Hermeneutical marginalization", "p_c", "p_{a←c}", _S, True,
        "A group is structurally shut out of the shared practices that shape "
        "collective interpretive resources.",
    ),
)

_BY_KEY = {k.key: k for k in _CATALOG}


def catalog() -> tuple[InjusticeKind, ...]:
    """All twelve injustice kinds in a stable order (shortfalls first)."""
    return _CATALOG


def lookup(key: str | InjusticeKind) -> InjusticeKind:
    if isinstance(key, InjusticeKind):
        return key
    try:
        return _BY_KEY[key]
    except KeyError:
        raise KeyError(f"unknown injustice kind {key!r}; known: {', '.join(_BY_KEY)}") from None


def deficit(ideal: float, actual: float) -> float:
    """Absolute gap between an ideal and an actual condition."""
    ideal, actual = float(ideal), float(actual)
    if not (math.isfinite(ideal) and math.isfinite(actual)):
        raise NonFinite("ideal and actual must be finite")
    if ideal < 0 or actual < 0:
        raise NegativeInput("ideal and actual must be nonnegative")
    return abs(ideal - actual)


def deficit_profile(kind: str | InjusticeKind, ideals: ArrayLike, actuals: ArrayLike) -> Distribution:
    """Per-agent deficits as a :class:`Distribution` tagged with the kind key."""
    kind = lookup(kind)
    ideals = np.asarray(ideals, dtype=np.float64)
    actuals = np.asarray(actuals, dtype=np.float64)
    if ideals.shape != actuals.shape or ideals.ndim != 1:
        raise LengthMismatch(f"ideals {ideals.shape} vs actuals {actuals.shape}")
    if not (np.all(np.isfinite(ideals)) and np.all(np.isfinite(actuals))):
        raise NonFinite("ideals and actuals must be finite")
    if np.any(ideals < 0) or np.any(actuals < 0):
        raise NegativeInput("ideals and actuals must be nonnegative")
    return Distribution(np.abs(ideals - actuals), tag=kind.key)


def catalog_records() -> list[dict]:
    out = []
    for kind in _CATALOG:
        rec = asdict(kind)
        rec["direction"] = kind.direction.value
        rec["deficit"] = kind.deficit_expr
        out.append(rec)
    return out


def catalog_text(fmt: str = "text") -> str:
    """Export the catalog, one record per kind, as ``text`` or ``json``."""
    records = catalog_records()
    if fmt == "json":
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    blocks = []
    for rec in records:
        blocks.append("\n".join(f"{k}: {v}" for k, v in rec.items()))
    return "\n\n".join(blocks) + "\n"
