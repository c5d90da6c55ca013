"""Tests for the patternmap command line."""

import json
import tempfile
from pathlib import Path

import pytest
import yaml

from patternmap.cli.fixtures import DEFAULT_FIXTURES
from patternmap.cli.main import build_parser, main, protect_negative_args


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _corrupted_fixtures(tmpdir, edit):
    data = yaml.safe_load(DEFAULT_FIXTURES.read_text())
    edit(data)
    path = Path(tmpdir) / "fixtures.yml"
    path.write_text(yaml.safe_dump(data, sort_keys=False))
    return str(path)


class TestArguments:
    def test_negative_windows_survive_argparse(self):
        argv = protect_negative_args(["mult", "C4", "3,-1,4,2", "-2,-1,3,4", "--theory", "K"])
        args = build_parser().parse_args(argv)
        assert args.u == "3,-1,4,2"
        assert args.v.strip() == "-2,-1,3,4"
        assert args.theory == "K"

    def test_flags_untouched(self):
        assert protect_negative_args(["--format", "json", "-1"]) == ["--format", "json", "-1"]


class TestCommands:
    def test_localize_k_with_check(self, capsys):
        code, out, _ = _run(capsys, "localize", "C2", "-1,2", "--theory", "K", "--check")
        assert code == 0
        assert "GKM relations hold" in out

    def test_localize_json(self, capsys):
        code, out, _ = _run(capsys, "localize", "A1", "21", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["theory"] == "coh"
        assert data["values"] == {"12": "0", "21": "-t1 + t2"}

    def test_mult(self, capsys):
        code, out, _ = _run(capsys, "mult", "A3", "2143", "1324", "--format", "json")
        assert code == 0
        assert json.loads(out)["terms"] == {"2341": "1", "2413": "1", "3142": "1", "4123": "1"}

    def test_pattern_checked_runs_every_route(self, capsys):
        code, out, _ = _run(
            capsys, "pattern", "A3", "--eta", "1,1,-1,-1", "--u", "2143", "--sigma", "1342", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["routes"] == ["localization", "constants", "borel"]
        assert data["terms"] == {"2134": "-t1 + t4"}

    def test_pattern_fast(self, capsys):
        code, out, _ = _run(
            capsys, "pattern", "A3", "--eta", "0,0,0,0", "--u", "2143", "--sigma", "1234", "--mode", "fast",
        )
        assert code == 0
        assert "S[2143]" in out
        assert "routes: localization)" in out

    def test_pattern_rejects_non_minimal_sigma(self, capsys):
        code, _, err = _run(capsys, "pattern", "A3", "--eta", "1,1,-1,-1", "--u", "2143", "--sigma", "2143")
        assert code == 2
        assert "valid representatives" in err
        assert "3412" in err

    def test_flatten(self, capsys):
        code, out, _ = _run(capsys, "flatten", "C4", "--eta", "1,1,1,1", "--x", "3,-1,4,2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["element"] == "3,-1,4,2"
        assert data["factors"] == ["A3"]

    def test_cosets(self, capsys):
        code, out, _ = _run(capsys, "cosets", "A3", "--eta", "1,1,-1,-1")
        assert code == 0
        assert "A1xA1 in A3: 6 cosets" in out
        assert "3412" in out

    def test_skeleton_dot(self, capsys):
        code, out, _ = _run(capsys, "skeleton", "A3", "--eta", "1,1,-1,-1", "--format", "dot")
        assert code == 0
        assert "cluster_0" in out

    def test_output_file(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            target = Path(tmpdir) / "out" / "cosets.json"
            code, out, _ = _run(capsys, "cosets", "A2", "--eta", "1,1,0", "--format", "json", "--output", str(target))
            assert code == 0
            assert out == ""
            assert json.loads(target.read_text())["levi"] == "A1"

    def test_config_file(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            config = Path(tmpdir) / "patternmap.yml"
            config.write_text("patternmap:\n  mode: fast\n  format: json\n")
            code, out, _ = _run(
                capsys, "pattern", "A3", "--eta", "1,1,-1,-1", "--u", "2143", "--sigma", "1324",
                "--config", str(config),
            )
            assert code == 0
            assert json.loads(out)["routes"] == ["localization"]


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["localize", "E6", "1"],
        ["localize", "A3", "2243"],
        ["mult", "A2", "123", "1234"],
        ["cosets", "A3", "--eta", "1,1"],
        ["mult", "A2", "123", "213", "--format", "dot"],
    ])
    def test_input_errors(self, capsys, argv):
        code, _, err = _run(capsys, *argv)
        assert code == 2
        assert "error:" in err

    def test_missing_config(self, capsys):
        code, _, _ = _run(capsys, "cosets", "A2", "--eta", "1,1,0", "--config", "/nonexistent.yml")
        assert code == 2

    def test_missing_fixtures(self, capsys):
        code, _, _ = _run(capsys, "reproduce-paper", "--fixtures", "/nonexistent.yml")
        assert code == 2


class TestReproducePaper:
    def test_quick_sections(self, capsys):
        code, out, _ = _run(capsys, "reproduce-paper", "--only", "lengths", "cosets", "localization")
        assert code == 0
        assert "all checks passed" in out

    def test_corrupted_value(self, capsys):
        def edit(data):
            data["lengths"][0]["values"]["3,-1,4,2"] = 5

        with tempfile.TemporaryDirectory() as tmpdir:
            path = _corrupted_fixtures(tmpdir, edit)
            code, out, _ = _run(capsys, "reproduce-paper", "--fixtures", path, "--only", "lengths")
            assert code == 3
            assert "FAIL lengths" in out

    def test_corrupted_polynomial(self, capsys):
        def edit(data):
            data["localization"][0]["values"]["3412"] = "(t3 - t1)*(t4 - t1)"

        with tempfile.TemporaryDirectory() as tmpdir:
            path = _corrupted_fixtures(tmpdir, edit)
            code, _, _ = _run(capsys, "reproduce-paper", "--fixtures", path, "--only", "localization")
            assert code == 3

    def test_corrupted_pullback(self, capsys):
        def edit(data):
            data["pullbacks"][1]["terms"]["2134"] = "t4 - t2"

        with tempfile.TemporaryDirectory() as tmpdir:
            path = _corrupted_fixtures(tmpdir, edit)
            data = yaml.safe_load(Path(path).read_text())
            data["pullbacks"] = data["pullbacks"][:3]
            Path(path).write_text(yaml.safe_dump(data, sort_keys=False))
            code, out, _ = _run(capsys, "reproduce-paper", "--fixtures", path, "--only", "pullbacks")
            assert code == 3
            assert "A3-sigma-1342 [borel]" in out

    def test_invalid_fixture_file(self, capsys):
        def edit(data):
            del data["cosets"]

        with tempfile.TemporaryDirectory() as tmpdir:
            path = _corrupted_fixtures(tmpdir, edit)
            code, out, _ = _run(capsys, "reproduce-paper", "--fixtures", path)
            assert code == 3
            assert "Missing required section: cosets" in out

    @pytest.mark.slow
    def test_full_reproduction(self, capsys):
        code, out, _ = _run(capsys, "reproduce-paper")
        assert code == 0, out
