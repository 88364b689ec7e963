import csv
import json

import pytest

from geodiff.cli import (ConfigError, RunConfig, main, parse_config, run,
                         write_report)


class TestParseConfig:
    def test_defaults(self):
        cfg = parse_config([])
        assert cfg.suite == "all"
        assert cfg.cases == 1000
        assert cfg.seed == 0
        assert cfg.tol is None
        assert cfg.h_values == (1e-1, 1e-2, 1e-3)
        assert cfg.format == "csv"

    def test_flags(self):
        cfg = parse_config(["--suite", "roots", "--cases", "50", "--seed", "9"])
        assert (cfg.suite, cfg.cases, cfg.seed) == ("roots", 50, 9)

    def test_h_list(self):
        cfg = parse_config(["--h", "1e-1,1e-2,1e-3,1e-4"])
        assert cfg.h_values == (0.1, 0.01, 0.001, 0.0001)

    def test_h_must_decrease(self):
        with pytest.raises(ConfigError):
            parse_config(["--h", "1e-2,1e-1"])

    def test_negative_tol_rejected(self):
        with pytest.raises(ConfigError):
            parse_config(["--tol", "-1"])

    def test_zero_cases_rejected(self):
        with pytest.raises(ConfigError):
            parse_config(["--cases", "0"])

    def test_config_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"suite": "scale", "cases": 7, "seed": 3}))
        cfg = parse_config(["--config", str(path)])
        assert (cfg.suite, cfg.cases, cfg.seed) == ("scale", 7, 3)

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"suite": "scale", "cases": 7}))
        cfg = parse_config(["--config", str(path), "--cases", "21"])
        assert (cfg.suite, cfg.cases) == ("scale", 21)

    def test_unknown_key_named(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"speed": 11}))
        with pytest.raises(ConfigError, match="speed"):
            parse_config(["--config", str(path)])

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            parse_config(["--config", str(path)])


class TestSuites:
    def test_theorems_small_run_is_clean(self):
        report = run(RunConfig(suite="theorems", cases=25, seed=5))
        assert report.summary["failures"] == 0
        assert report.summary["max_rel_err"] < 1e-9
        ops = {r.op for r in report.records}
        assert {"median", "cevian", "triangle_area", "angle_from_sides",
                "bisector_full", "bisector_to_incenter", "incenter_ratio",
                "circumradius", "inradius", "euler_distance", "hypotenuse",
                "third_side", "inscribed_angle", "trirect_face_area",
                "ptolemy_diagonal", "cyclic_quad_area",
                "bisector_problem"} <= ops

    def test_derive_reports_orders(self):
        report = run(RunConfig(suite="derive", cases=100, seed=0))
        assert report.summary["failures"] == 0
        orders = report.summary["fitted_orders"]
        assert "pythagoras" in orders and "bispart" in orders
        residual_ops = {r.op for r in report.records if r.op.endswith(":residual")}
        assert residual_ops == {"ptolemy:residual", "inradius:residual",
                                "bisprob:residual", "heron_alt:residual"}

    def test_scale_small_run(self):
        report = run(RunConfig(suite="scale", cases=5, seed=1))
        assert report.summary["failures"] == 0

    def test_roots_small_run(self):
        report = run(RunConfig(suite="roots", cases=5, seed=1))
        assert report.summary["failures"] == 0

    def test_random_cases_never_hit_domain_errors(self):
        # generation respects the type invariants by construction
        report = run(RunConfig(suite="theorems", cases=50, seed=77))
        assert all(r.rel_err != float("inf") for r in report.records)


class TestDeterminism:
    def test_identical_records(self):
        cfg = RunConfig(suite="theorems", cases=20, seed=42)
        assert run(cfg).records == run(cfg).records

    def test_csv_bytes_identical(self, tmp_path):
        cfg = RunConfig(suite="roots", cases=3, seed=11)
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        write_report(run(cfg), str(p1), "csv")
        write_report(run(cfg), str(p2), "csv")
        assert p1.read_bytes() == p2.read_bytes()

    def test_different_seed_differs(self):
        a = run(RunConfig(suite="theorems", cases=5, seed=1)).records
        b = run(RunConfig(suite="theorems", cases=5, seed=2)).records
        assert a != b


class TestReportFiles:
    def test_csv_layout(self, tmp_path):
        path = tmp_path / "out.csv"
        write_report(run(RunConfig(suite="scale", cases=2, seed=0)),
                     str(path), "csv")
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["suite", "case_id", "op", "inputs", "expected",
                           "actual", "rel_err", "passed"]
        assert len(rows) > 1

    def test_json_layout(self, tmp_path):
        path = tmp_path / "out.json"
        report = run(RunConfig(suite="derive", cases=10, seed=0, format="json"))
        write_report(report, str(path), "json")
        payload = json.loads(path.read_text())
        assert set(payload) == {"timestamp", "version", "config", "summary",
                                "records"}
        assert payload["config"]["suite"] == "derive"
        assert payload["summary"]["failures"] == 0
        assert payload["records"][0].keys() == {
            "suite", "case_id", "op", "inputs", "expected", "actual",
            "rel_err", "passed"}


class TestMain:
    def test_success_exit_zero(self, tmp_path, capsys):
        out = tmp_path / "r.csv"
        code = main(["--suite", "scale", "--cases", "2", "--seed", "0",
                     "--output", str(out)])
        assert code == 0
        assert out.exists()
        assert "failures=0" in capsys.readouterr().out

    def test_failures_exit_one(self):
        # an absurdly tight tolerance forces failures; exit mirrors them
        code = main(["--suite", "scale", "--cases", "1", "--tol", "1e-300"])
        assert code == 1

    def test_unwritable_output(self):
        code = main(["--suite", "scale", "--cases", "1",
                     "--output", "/nonexistent/dir/report.csv"])
        assert code == 2

    def test_bad_flag_value(self):
        assert main(["--suite", "warp"]) == 2

    def test_bad_config_key(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"bogus": 1}))
        assert main(["--config", str(path)]) == 2
