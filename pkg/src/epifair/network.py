"""Two-group stochastic block model and row-stochastic influence matrices.

``w[i, j]`` is the attention agent ``i`` pays to agent ``j``; row ``i`` sums
to one. The incoming attention of agent ``j`` is column sum ``j``.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from epifair.errors import DimensionMismatch, InvalidProbability, NegativeEntry, ParseError
from epifair.indices import Distribution

GROUP_A = "A"
GROUP_B = "B"


def two_groups(n: int) -> np.ndarray:
    """Labels for two same-size groups: the first ``ceil(n/2)`` agents are A."""
    if n < 2:
        raise DimensionMismatch("need at least two agents")
    labels = np.full(n, GROUP_B, dtype="<U1")
    labels[: (n + 1) // 2] = GROUP_A
    return labels


def generate_sbm(groups: ArrayLike, p_intra: float, p_inter: float, rng: np.random.Generator) -> np.ndarray:
    """Directed SBM adjacency with zero diagonal.

    Every ordered pair ``(i, j)``, ``i != j``, is an edge independently with
    probability ``p_intra`` inside a group and ``p_inter`` across groups.
    """
    groups = np.asarray(groups)
    if not 0.0 <= p_inter <= p_intra <= 1.0:
        raise InvalidProbability(f"need 0 <= p_inter <= p_intra <= 1, got {p_inter}, {p_intra}")
    same = groups[:, None] == groups[None, :]
    prob = np.where(same, p_intra, p_inter)
    adj = (rng.random(prob.shape) < prob).astype(np.int8)
    np.fill_diagonal(adj, 0)
    return adj


def row_normalize(w: ArrayLike) -> np.ndarray:
    """Divide each row by its sum; all-zero rows become the uniform row ``1/N``.

    The uniform replacement includes the diagonal entry.
    """
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {w.shape}")
    if np.any(w < 0):
        raise NegativeEntry("influence weights must be nonnegative")
    sums = w.sum(axis=1, keepdims=True)
    empty = sums[:, 0] == 0
    out = np.divide(w, sums, out=np.zeros_like(w), where=sums > 0)
    out[empty] = 1.0 / w.shape[0]
    return out


def init_influence(
    adj: ArrayLike,
    rng: np.random.Generator,
    low: float = 0.5,
    high: float = 1.5,
    support: str = "edges",
) -> np.ndarray:
    """Initial influence matrix from Uniform(low, high) weights.

    ``support="edges"`` keeps weights only where ``adj`` has an edge.
    ``support="all"`` keeps every off-diagonal weight and ignores ``adj``.
    A full matrix of uniforms is drawn in both cases so the stream advances
    identically.
    """
    adj = np.asarray(adj)
    n = adj.shape[0]
    raw = rng.uniform(low, high, size=(n, n))
    if support == "edges":
        mask = adj != 0
    elif support == "all":
        mask = ~np.eye(n, dtype=bool)
    else:
        raise ValueError(f"unknown weight support {support!r}")
    return row_normalize(np.where(mask, raw, 0.0))


def incoming_attention(w: ArrayLike, groups: ArrayLike | None = None) -> Distribution:
    """Column sums of ``w``; they total ``N`` for a row-stochastic matrix."""
    w = np.asarray(w, dtype=np.float64)
    return Distribution(w.sum(axis=0), groups)


def is_row_stochastic(w: np.ndarray, tol: float = 1e-9) -> bool:
    return bool(np.all(w >= 0) and np.all(np.abs(w.sum(axis=1) - 1.0) <= tol))


def edge_count(adj: ArrayLike) -> int:
    return int(np.count_nonzero(adj))


def expected_edge_count(groups: ArrayLike, p_intra: float, p_inter: float) -> float:
    _, sizes = np.unique(np.asarray(groups), return_counts=True)
    n = int(sizes.sum())
    intra_pairs = int(np.sum(sizes * (sizes - 1)))
    inter_pairs = n * (n - 1) - intra_pairs
    return intra_pairs * p_intra + inter_pairs * p_inter


def matrix_to_csv(w: ArrayLike) -> str:
    """Dense row-major CSV with a leading ``n=<N>`` header line."""
    w = np.asarray(w, dtype=np.float64)
    buf = io.StringIO()
    buf.write(f"n={w.shape[0]}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in w:
        writer.writerow(repr(float(x)) for x in row)
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ParseError("matrix CSV must start with an 'n=<N>' header")
    try:
        n = int(lines[0][2:])
        rows = [[float(x) for x in row] for row in csv.reader(lines[1:]) if row]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    w = np.array(rows, dtype=np.float64)
    if w.shape != (n, n):
        raise ParseError(f"header says n={n} but body has shape {w.shape}")
    return w


def save_matrix(path: str | Path, w: ArrayLike) -> None:
    Path(path).write_text(matrix_to_csv(w))


def load_matrix(path: str | Path) -> np.ndarray:
    return matrix_from_csv(Path(path).read_text())
