"""
Writing trajectories and drawing charts
=======================================

Runs are saved as long-format CSV, one file per scenario, view and seed.
Charts are plain SVG with a seed-median line and an interquartile band.
"""

import tempfile
from pathlib import Path

from epifair.cli import run_simulation
from epifair.config import parse_config, serialize_config
from epifair.report import write_report

cfg = parse_config("""
# shorter run, a handful of seeds
horizon = 30
n_seeds = 5
gamma = 0.8
""")
print(serialize_config(cfg))

out = Path(tempfile.mkdtemp())
files = run_simulation(cfg, out / "runs")
print(len(files), "trajectory files")
print(files[0].read_text().splitlines()[:3])

# %%
charts = write_report(files, out / "charts", indices=["gini", "atkinson[2]"])
for path in charts:
    print(path.name, path.stat().st_size, "bytes")
