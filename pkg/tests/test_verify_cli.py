import json
import shutil
import subprocess
from pathlib import Path

import pytest

from powspec import verify_cli
from powspec.exact_linalg import CAP_ENV_VAR
from powspec.group_core import SemidihedralType
from powspec.powergraph import build_power_graph, to_dot
from powspec.verify_cli import (
    main,
    run_verification,
    sweep,
    sweep_summary_table,
)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "report.schema.json"


class TestRunVerification:
    def test_full_run_at_2_3(self, full_reports):
        report = full_reports[(2, 3)]
        assert report.status == "pass"
        assert report.counts() == {"pass": 20, "mismatch-reported": 5, "fail": 0}
        assert (report.n, report.theta, report.m_model, report.m_true) == (24, 5, 87, 77)

    def test_documented_mismatches_at_2_3(self, full_reports):
        report = full_reports[(2, 3)]
        mismatched = [
            (c.name, c.construction, c.matrix)
            for c in report.checks
            if c.status == "mismatch-reported"
        ]
        assert mismatched == [
            ("charpoly", "true", "adjacency"),
            ("charpoly", "true", "laplacian"),
            ("charpoly", "true", "signless"),
            ("laplacian-energy", None, "laplacian"),
            ("model-vs-true-diff", None, None),
        ]

    @pytest.mark.parametrize("k,p", [(2, 3), (2, 5), (3, 3)])
    def test_no_failures_on_grid(self, k, p, full_reports):
        assert full_reports[(k, p)].counts()["fail"] == 0

    def test_energy_check_carries_all_three_values(self, full_reports):
        check = next(
            c for c in full_reports[(2, 3)].checks if c.name == "laplacian-energy"
        )
        assert check.claimed == "47/4"
        assert check.computed == "281/2"
        assert check.detail["without_multiplicity"] == "217/4"
        assert check.detail["mean_degree"] == "29/4"

    def test_radius_check_logs_both_variants(self, full_reports):
        checks = [c for c in full_reports[(2, 3)].checks if c.name == "radius-bounds"]
        assert {c.construction for c in checks} == {"model", "true"}
        for c in checks:
            assert c.status == "pass"
            assert c.detail["upper_shifted_radical"] > c.detail["upper_plain_radical"]

    def test_every_check_names_an_anchor(self, full_reports):
        for check in full_reports[(2, 3)].checks:
            d = check.to_dict()
            assert isinstance(d["anchor"], str) and d["anchor"]

    def test_json_is_deterministic(self):
        a = run_verification(2, 3, kinds=("laplacian",), constructions=("model",))
        b = run_verification(2, 3, kinds=("laplacian",), constructions=("model",))
        assert a.to_json() == b.to_json()
        assert a.to_json().endswith("\n")

    def test_report_validates_against_schema(self, full_reports):
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.loads(SCHEMA_PATH.read_text())
        for report in full_reports.values():
            jsonschema.validate(json.loads(report.to_json()), schema)

    def test_kind_and_construction_filters(self):
        report = run_verification(2, 3, kinds=("adjacency",), constructions=("model",))
        names = {(c.name, c.matrix) for c in report.checks}
        assert ("charpoly", "adjacency") in names
        assert all(m in (None, "adjacency") for _, m in names)
        assert report.m_true is None
        with pytest.raises(ValueError):
            run_verification(2, 3, kinds=("incidence",))
        with pytest.raises(ValueError):
            run_verification(2, 3, constructions=("imagined",))

    def test_cap_turns_heavy_checks_into_notices(self, monkeypatch):
        monkeypatch.setenv(CAP_ENV_VAR, "10")
        report = run_verification(2, 3)
        assert report.counts()["fail"] == 0
        names = {c.name for c in report.checks}
        for skipped in ("charpoly", "spectrum-numeric", "radius-bounds", "split-spectra"):
            assert skipped not in names
        assert len(report.notices) == 10
        assert all("exceeds the configured cap" in n for n in report.notices)

    def test_out_writes_report_file(self, tmp_path):
        out = tmp_path / "report.json"
        report = run_verification(2, 3, kinds=(), out=str(out))
        assert json.loads(out.read_text()) == report.to_dict()


class TestSweep:
    def test_grid(self):
        reports = sweep([2, 3], [3, 5], kinds=())
        assert [r.n for r in reports] == [24, 40, 48, 80]
        assert all(r.status == "pass" for r in reports)

    def test_empty_p_list(self):
        assert sweep([2, 3], []) == []

    def test_rejects_bad_parameters_upfront(self):
        with pytest.raises(ValueError):
            sweep([2], [9])
        with pytest.raises(ValueError):
            sweep([1], [3])

    def test_parallel_matches_serial(self):
        serial = sweep([2], [3, 5], kinds=())
        parallel = sweep([2], [3, 5], kinds=(), jobs=2)
        assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]

    def test_error_isolation(self, monkeypatch):
        real = run_verification

        def fake(k, p, kinds=(), constructions=()):
            if (k, p) == (2, 5):
                raise RuntimeError("boom")
            return real(k, p, kinds=kinds, constructions=constructions)

        monkeypatch.setattr(verify_cli, "run_verification", fake)
        reports = verify_cli.sweep([2], [3, 5], kinds=())
        assert reports[0].status == "pass"
        assert reports[1].status == "fail"
        assert reports[1].checks[0].name == "execution"
        assert "boom" in reports[1].checks[0].detail["traceback"]

    def test_summary_table(self):
        table = sweep_summary_table(sweep([2], [3], kinds=()))
        assert table == "k p n pass mismatch fail status\n2 3 24 6 1 0 pass\n"


class TestCliExitCodes:
    def test_verify_ok(self, capsys):
        assert main(["verify", "--k", "2", "--p", "3", "--matrix", "laplacian"]) == 0
        out = capsys.readouterr().out
        assert "status: pass" in out
        assert "[mismatch-reported] laplacian-energy" in out

    def test_invalid_p_is_usage_error(self, capsys):
        assert main(["verify", "--k", "2", "--p", "9"]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_arguments(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--k", "2"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit):
            main([])

    def test_unsupported_export_combination(self, capsys):
        rc = main(["export", "--what", "formula", "--format", "csv", "--k", "2", "--p", "3"])
        assert rc == 2
        assert "json only" in capsys.readouterr().err

    def test_sweep_cli(self, capsys, tmp_path):
        out = tmp_path / "sweep.json"
        rc = main(["sweep", "--k", "2..3", "--p", "3", "--matrix", "laplacian",
                   "--construction", "model", "--out", str(out)])
        assert rc == 0
        table = capsys.readouterr().out
        assert table.splitlines()[0] == "k p n pass mismatch fail status"
        assert len(table.splitlines()) == 3
        payload = json.loads(out.read_text())
        assert [r["params"]["n"] for r in payload] == [24, 48]

    def test_range_and_list_parsing(self):
        assert verify_cli._parse_k_range("2..4") == [2, 3, 4]
        assert verify_cli._parse_k_range("2,5") == [2, 5]
        assert verify_cli._parse_int_list("3,5,7") == [3, 5, 7]


class TestCliExports:
    def test_graph_dot_matches_library(self, tmp_path):
        out = tmp_path / "g.dot"
        args = ["export", "--what", "graph", "--format", "dot", "--k", "2", "--p", "3",
                "--construction", "true", "--out", str(out)]
        assert main(args) == 0
        first = out.read_text()
        assert first == to_dot(build_power_graph(SemidihedralType(2, 3)))
        assert main(args) == 0
        assert out.read_text() == first

    def test_graph_json(self, tmp_path):
        out = tmp_path / "g.json"
        assert main(["export", "--what", "graph", "--format", "json", "--k", "2",
                     "--p", "3", "--construction", "model", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["n"] == 24 and not data["directed"]
        assert len(data["edges"]) == 87
        assert data["labels"][0] == "s^0 r^0"
        assert data["labels"][1] == "s^0 r^6"

    def test_spectrum_csv(self, capsys):
        assert main(["export", "--what", "spectrum", "--format", "csv",
                     "--k", "2", "--p", "3"]) == 0
        out = capsys.readouterr().out
        assert out == "value,multiplicity\n0,1\n1,6\n2,3\n4,3\n12,9\n18,1\n24,1\n"

    def test_spectrum_json(self, capsys):
        assert main(["export", "--what", "spectrum", "--format", "json",
                     "--k", "2", "--p", "5"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["pairs"] == [[0, 1], [1, 10], [2, 5], [4, 5], [20, 17], [30, 1], [40, 1]]

    def test_formula_json(self, tmp_path):
        out = tmp_path / "f.json"
        assert main(["export", "--what", "formula", "--format", "json", "--k", "2",
                     "--p", "3", "--matrix", "adjacency", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert len(data["expanded"]) == 25
        assert [e for _, e in data["factored"]["factors"]] == [5, 12, 2, 1]
        assert data["expanded"][-1] == 1

    def test_formulas_dump(self, tmp_path):
        out = tmp_path / "all.json"
        assert main(["formulas", "--k", "2", "--p", "3", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["laplacian_energy"] == "47/4"
        assert data["m_model"] == 87
        assert set(data["charpoly"]) == {"adjacency", "laplacian", "signless"}
        assert all(len(v["expanded"]) == 25 for v in data["charpoly"].values())


class TestConsoleScript:
    def test_installed_entry_point(self):
        exe = shutil.which("powspec")
        if exe is None:
            pytest.skip("console script not on PATH")
        proc = subprocess.run(
            [exe, "verify", "--k", "2", "--p", "3", "--matrix", "laplacian",
             "--construction", "model"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "status: pass" in proc.stdout
