"""Static SVG line charts of index trajectories.

One chart per (stance, index): time on the x-axis, one line per scenario
showing the median across seeds, plus a shaded interquartile band when
more than one seed is present.
"""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from epifair.errors import HeterogeneousInput
from epifair.serialize import read_trajectory_rows, series_key

WIDTH, HEIGHT = 640, 400
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 150, 40, 50
COLORS = {
    "baseline": "#0066cc",
    "targeted_boost": "#f28020",
    "random_boost": "#bf40a6",
}
FALLBACK = ("#2ca02c", "#d62728", "#8c564b", "#7f7f7f")


def collect_series(rows: list[dict]) -> dict[tuple[str, str], dict[str, dict[int, dict[int, float]]]]:
    """Nest rows as ``[(stance, key)][scenario][seed][t] -> value``."""
    out: dict = defaultdict(lambda: defaultdict(lambda: defaultdict(dict)))
    for row in rows:
        key = series_key(row["index_name"], row["param"])
        out[(row["stance"], key)][row["scenario"]][row["seed"]][row["t"]] = row["value"]
    return out


def _summaries(per_seed: dict[int, dict[int, float]]):
    times = sorted(next(iter(per_seed.values())))
    for seed, series in per_seed.items():
        if sorted(series) != times:
            raise HeterogeneousInput(f"seed {seed} has a different time grid")
    mat = np.array([[series[t] for t in times] for series in per_seed.values()])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        med = np.nanmedian(mat, axis=0)
        lo = np.nanpercentile(mat, 25, axis=0)
        hi = np.nanpercentile(mat, 75, axis=0)
    return np.array(times, dtype=float), med, lo, hi, len(per_seed)


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=raw)
    start = math.floor(lo / step) * step
    ticks = []
    v = start
    while v <= hi + step * 1e-9:
        ticks.append(round(v, 12))
        v += step
    return ticks


def render_chart(title: str, scenarios: dict[str, dict[int, dict[int, float]]]) -> str:
    summaries = {name: _summaries(per_seed) for name, per_seed in sorted(scenarios.items())}
    all_t = np.concatenate([s[0] for s in summaries.values()])
    finite = np.concatenate([np.r_[s[1], s[2], s[3]] for s in summaries.values()])
    finite = finite[np.isfinite(finite)]
    y_lo, y_hi = (float(finite.min()), float(finite.max())) if finite.size else (0.0, 1.0)
    pad = 0.05 * (y_hi - y_lo) if y_hi > y_lo else max(abs(y_hi) * 0.1, 0.1)
    y_ticks = _nice_ticks(y_lo - pad, y_hi + pad)
    y_lo, y_hi = y_ticks[0], y_ticks[-1]
    t_lo, t_hi = float(all_t.min()), float(all_t.max())
    if t_hi == t_lo:
        t_hi = t_lo + 1
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def sx(t):
        return MARGIN_L + (t - t_lo) / (t_hi - t_lo) * pw

    def sy(v):
        return MARGIN_T + (y_hi - v) / (y_hi - y_lo) * ph

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{MARGIN_L + pw / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="#333"/>',
    ]
    for v in y_ticks:
        y = sy(v)
        parts.append(f'<line x1="{MARGIN_L}" y1="{y:.1f}" x2="{MARGIN_L + pw}" y2="{y:.1f}" stroke="#e0e0e0"/>')
        parts.append(f'<text x="{MARGIN_L - 6}" y="{y + 4:.1f}" text-anchor="end">{v:g}</text>')
    for v in _nice_ticks(t_lo, t_hi):
        if t_lo <= v <= t_hi:
            x = sx(v)
            parts.append(f'<text x="{x:.1f}" y="{MARGIN_T + ph + 18}" text-anchor="middle">{v:g}</text>')
    parts.append(f'<text x="{MARGIN_L + pw / 2:.1f}" y="{HEIGHT - 10}" text-anchor="middle">t</text>')

    fallback = iter(FALLBACK * 10)
    for i, (name, (t, med, lo, hi, n_seeds)) in enumerate(summaries.items()):
        color = COLORS.get(name) or next(fallback)
        ok = np.isfinite(med)
        if n_seeds > 1 and np.any(ok):
            upper = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(t[ok], hi[ok]))
            lower = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(t[ok][::-1], lo[ok][::-1]))
            parts.append(f'<polygon points="{upper} {lower}" fill="{color}" fill-opacity="0.2" stroke="none"/>')
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(t[ok], med[ok]))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>')
        ly = MARGIN_T + 14 + 18 * i
        lx = MARGIN_L + pw + 12
        parts.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 26}" y="{ly + 4}">{escape(name)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def chart_filename(stance: str, key: str) -> str:
    safe = key.replace("[", "_").replace("]", "").replace(".", "p").replace("-", "m")
    return f"{stance}_{safe}.svg"


def write_report(paths, out_dir: str | Path, indices: list[str] | None = None) -> list[Path]:
    """Write one SVG per (stance, index) found in the trajectory CSVs."""
    paths = list(paths)
    if not paths:
        raise ValueError("no trajectory files given")
    series = collect_series(read_trajectory_rows(paths))
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for (stance, key), scenarios in sorted(series.items()):
        if indices and key not in indices and key.split("[")[0] not in indices:
            continue
        path = out_dir / chart_filename(stance, key)
        path.write_text(render_chart(f"{key} ({stance})", scenarios))
        written.append(path)
    return written
