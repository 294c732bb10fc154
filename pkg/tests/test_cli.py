import csv
import io
import json
import subprocess
import sys

import pytest

from epifair.cli import main
from epifair.config import ScenarioConfig, serialize_config
from epifair.indices import Distribution, dissimilarity, quantile_bin
from epifair.serialize import TRAJECTORY_COLUMNS, read_trajectory_rows


def write_values(path, values, groups=None):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["value", "group"] if groups else ["value"])
        for i, v in enumerate(values):
            w.writerow([v, groups[i]] if groups else [v])
    return str(path)


def parse_panel(text):
    return {(r["index_name"], r["param"]): r for r in csv.DictReader(io.StringIO(text))}


class TestIndices:
    def test_identical_values(self, tmp_path, capsys):
        assert main(["indices", write_values(tmp_path / "v.csv", [2.5] * 8)]) == 0
        rows = parse_panel(capsys.readouterr().out)
        for key in [("gini", ""), ("hoover", ""), ("ge", "2"), ("atkinson", "2")]:
            assert float(rows[key]["value"]) == 0.0
        assert float(rows[("jain", "")]["value"]) == 1.0

    def test_single_holder(self, tmp_path, capsys):
        code = main(["indices", write_values(tmp_path / "v.csv", [1, 0, 0, 0])])
        rows = parse_panel(capsys.readouterr().out)
        assert float(rows[("gini", "")]["value"]) == 0.75
        # palma and s80/s20 have zero denominators
        assert code == 2
        assert rows[("palma", "")]["error_flag"] == "ZeroDenominator"
        assert rows[("palma", "")]["value"] == "nan"

    def test_grouped_dissimilarity(self, tmp_path, capsys):
        values = [0.3, 1.2, 0.7, 2.2, 0.1, 1.9, 0.5, 1.1]
        groups = list("ABABABAB")
        path = write_values(tmp_path / "v.csv", values, groups)
        assert main(["indices", path, "--n-bins", "2", "--ge-alpha", "0", "--ge-alpha", "1", "--epsilon", "0.5"]) == 0
        rows = parse_panel(capsys.readouterr().out)
        expected = dissimilarity(quantile_bin(Distribution(values, groups), 2))
        assert float(rows[("dissimilarity", "")]["value"]) == expected == 1.0
        assert ("ge", "0") in rows and ("ge", "1") in rows and ("atkinson", "0.5") in rows

    def test_malformed(self, tmp_path, capsys):
        p = tmp_path / "bad.csv"
        p.write_text("x\n1\n")
        assert main(["indices", str(p)]) == 2
        p.write_text("value\nabc\n")
        assert main(["indices", str(p)]) == 2
        assert main(["indices", str(tmp_path / "missing.csv")]) == 2

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["indices"])
        assert err.value.code == 1


class TestSimulate:
    def test_one_scenario_one_seed(self, tmp_path):
        out = tmp_path / "run"
        assert main(["simulate", "--out", str(out), "--scenarios", "targeted_boost"]) == 0
        csvs = sorted(p.name for p in out.glob("*.csv"))
        assert csvs == ["targeted_boost_capability_seed0.csv", "targeted_boost_resource_seed0.csv"]
        rows = read_trajectory_rows(out.glob("*.csv"))
        per_index = {}
        for r in rows:
            per_index.setdefault((r["stance"], r["index_name"], r["param"]), set()).add(r["t"])
        assert all(ts == set(range(51)) for ts in per_index.values())
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["seeds"] == [0] and manifest["config"]["gamma"] == 0.5

    def test_header(self, tmp_path):
        main(["simulate", "--out", str(tmp_path), "--scenarios", "baseline", "--horizon", "10"])
        header = (tmp_path / "baseline_resource_seed0.csv").read_text().splitlines()[0]
        assert tuple(header.split(",")) == TRAJECTORY_COLUMNS

    def test_many_seeds_and_manifest_rerun(self, tmp_path):
        cfg = ScenarioConfig(scenarios=("random_boost",), n_seeds=30, horizon=20)
        (tmp_path / "cfg.ini").write_text(serialize_config(cfg))
        a = tmp_path / "a"
        assert main(["simulate", "--config", str(tmp_path / "cfg.ini"), "--out", str(a)]) == 0
        assert len(list(a.glob("*.csv"))) == 60
        b = tmp_path / "b"
        assert main(["simulate", "--config", str(a / "manifest.json"), "--out", str(b)]) == 0
        for p in a.glob("*.csv"):
            assert (b / p.name).read_bytes() == p.read_bytes()

    def test_workers_match_serial(self, tmp_path):
        args = ["simulate", "--scenarios", "targeted_boost,random_boost", "--n-seeds", "2", "--horizon", "10"]
        assert main(args + ["--out", str(tmp_path / "s")]) == 0
        assert main(args + ["--out", str(tmp_path / "p"), "--workers", "2"]) == 0
        for p in (tmp_path / "s").glob("*.csv"):
            assert (tmp_path / "p" / p.name).read_bytes() == p.read_bytes()

    def test_bad_config_value(self, tmp_path, capsys):
        assert main(["simulate", "--out", str(tmp_path), "--gamma", "-2"]) == 2
        assert "gamma" in capsys.readouterr().err

    def test_print_config(self, capsys):
        assert main(["simulate", "--print-config", "--p-intra", "0.3"]) == 0
        assert "p_intra = 0.3" in capsys.readouterr().out


class TestReport:
    def test_three_scenarios(self, tmp_path):
        run = tmp_path / "run"
        main(["simulate", "--out", str(run), "--horizon", "10"])
        charts = tmp_path / "charts"
        assert main(["report", str(run), "--out", str(charts)]) == 0
        svgs = sorted(p.name for p in charts.glob("*.svg"))
        assert len(svgs) == 16
        text = (charts / "resource_gini.svg").read_text()
        assert text.count("<polyline") == 3 and "<polygon" not in text

    def test_iqr_band_with_seeds(self, tmp_path):
        run = tmp_path / "run"
        main(["simulate", "--out", str(run), "--horizon", "10", "--n-seeds", "3", "--scenarios", "baseline"])
        assert main(["report", str(run), "--out", str(tmp_path / "c"), "--index", "atkinson[2]"]) == 0
        svgs = sorted(p.name for p in (tmp_path / "c").glob("*.svg"))
        assert svgs == ["capability_atkinson_2.svg", "resource_atkinson_2.svg"]
        assert "<polygon" in (tmp_path / "c" / "capability_atkinson_2.svg").read_text()

    def test_empty_input(self, tmp_path):
        assert main(["report", "--out", str(tmp_path)]) == 1
        (tmp_path / "empty").mkdir()
        assert main(["report", str(tmp_path / "empty"), "--out", str(tmp_path)]) == 1

    def test_wrong_csv(self, tmp_path):
        p = tmp_path / "x.csv"
        p.write_text("a,b\n1,2\n")
        assert main(["report", str(p), "--out", str(tmp_path)]) == 2


def test_catalog(capsys):
    assert main(["catalog"]) == 0
    assert capsys.readouterr().out.count("key: ") == 12
    assert main(["catalog", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 12


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "epifair", "catalog"], capture_output=True, text=True, check=True)
    assert "testimonial" in out.stdout
