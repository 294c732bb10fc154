"""Command-line entry point: ``epifair {indices,simulate,report,catalog}``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from epifair import __version__
from epifair.audit import run_scenario
from epifair.config import FIELDS, ScenarioConfig, convert_value, load_config, serialize_config
from epifair.deficits import catalog_text
from epifair.errors import EpifairError
from epifair.indices import Distribution, compute_panel
from epifair.report import write_report
from epifair.serialize import panel_to_csv, trajectory_filename, trajectory_to_csv

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_values_csv(path: str) -> Distribution:
    fh = sys.stdin if path == "-" else open(path, newline="")
    try:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or "value" not in reader.fieldnames:
            raise EpifairError("input CSV needs a 'value' column")
        has_group = "group" in reader.fieldnames
        values, groups = [], []
        for lineno, row in enumerate(reader, start=2):
            try:
                values.append(float(row["value"]))
            except (TypeError, ValueError):
                raise EpifairError(f"line {lineno}: bad value {row['value']!r}") from None
            if has_group:
                groups.append(row["group"])
    finally:
        if fh is not sys.stdin:
            fh.close()
    return Distribution(values, groups if has_group else None)


def cmd_indices(args) -> int:
    d = read_values_csv(args.input)
    panel = compute_panel(
        d,
        ge_alphas=args.ge_alpha or [2.0],
        atkinson_epsilons=args.epsilon or [2.0],
        n_bins=args.n_bins,
    )
    if args.n_bins is not None and d.groups is None:
        print("warning: --n-bins given but input has no 'group' column", file=sys.stderr)
    sys.stdout.write(panel_to_csv(panel))
    return EXIT_DATA if panel.errors else EXIT_OK


def _run_one(job):
    cfg, seed, kind = job
    return [(trajectory_filename(tr), trajectory_to_csv(tr)) for tr in run_scenario(cfg, seed, kind)]


def run_simulation(cfg: ScenarioConfig, out_dir: str | Path, workers: int = 1) -> list[Path]:
    """Write both stance trajectories for every (scenario, seed), plus ``manifest.json``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [(cfg, seed, kind) for kind in cfg.scenarios for seed in cfg.seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    written = []
    for files in results:
        for name, text in files:
            path = out_dir / name
            path.write_text(text)
            written.append(path)
    manifest = {
        "version": __version__,
        "config": cfg.to_dict(),
        "seeds": cfg.seeds,
        "scenarios": list(cfg.scenarios),
        "files": [p.name for p in written],
    }
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return written


def cmd_simulate(args) -> int:
    cfg = load_config(args.config) if args.config else ScenarioConfig()
    overrides = {}
    for name in FIELDS:
        raw = getattr(args, name, None)
        if raw is not None:
            overrides[name] = convert_value(name, raw)
    if overrides:
        cfg = cfg.replace(**overrides)
    if args.print_config:
        sys.stdout.write(serialize_config(cfg))
        return EXIT_OK
    written = run_simulation(cfg, args.out, args.workers)
    print(f"wrote {len(written)} trajectory files and manifest.json to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_report(args) -> int:
    paths = []
    for item in args.inputs:
        p = Path(item)
        if p.is_dir():
            paths.extend(sorted(p.glob("*.csv")))
        else:
            paths.append(p)
    if not paths:
        raise UsageError("no trajectory CSV files found")
    written = write_report(paths, args.out, args.index)
    if not written:
        raise UsageError("no matching index in the inputs")
    print(f"wrote {len(written)} charts to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args) -> int:
    sys.stdout.write(catalog_text(args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="epifair", description="Epistemic fairness indices and platform simulation.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("indices", help="compute every index on a CSV of values")
    p.add_argument("input", help="CSV with a 'value' column and optional 'group' column ('-' for stdin)")
    p.add_argument("--ge-alpha", type=float, action="append", help="GE parameter (repeatable, default 2)")
    p.add_argument("--epsilon", type=float, action="append", help="Atkinson parameter (repeatable, default 2)")
    p.add_argument("--n-bins", type=int, help="quantile bins for dissimilarity (needs a group column)")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("simulate", help="run the platform simulation and write trajectory CSVs")
    p.add_argument("--config", help="config file, or manifest.json of an earlier run")
    p.add_argument("--out", default="runs", help="output directory (default: runs)")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--print-config", action="store_true", help="print the resolved config and exit")
    for name in FIELDS:
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, metavar="VALUE")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", help="render SVG charts from trajectory CSVs")
    p.add_argument("inputs", nargs="*", help="trajectory CSV files or directories")
    p.add_argument("--out", default="charts", help="output directory (default: charts)")
    p.add_argument("--index", action="append", help="only this index, e.g. gini or atkinson[2]")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("catalog", help="print the injustice catalog")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"epifair: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EpifairError, OSError) as exc:
        print(f"epifair: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
