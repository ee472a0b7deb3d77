from __future__ import annotations

import json

import pytest

from negbound import build_configuration, parse_configuration, serialize_configuration
from negbound.cli import main
from negbound.surfaces import surface_from_json_fields

SINGLETON = "surface p2\n1 origin\n"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_human_output(self, capsys, sample12_path):
        code, out, err = run(capsys, ["analyze", str(sample12_path)])
        assert code == 0
        assert "gamma: 4" in out
        assert "origins: 1 6 10" in out

    def test_json_roundtrip(self, capsys, sample12_path, sample12):
        code, out, _ = run(capsys, ["analyze", str(sample12_path), "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["gamma"] == 4
        rebuilt = build_configuration(
            [(p["id"], p["proximities"]) for p in data["points"]],
            surface_from_json_fields(data))
        assert parse_configuration(serialize_configuration(rebuilt)) == sample12

    def test_json_roundtrip_with_surface_override(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["analyze", str(sample12_path), "--json",
                                    "--surface", "f 2"])
        assert code == 0
        data = json.loads(out)
        assert data["surface"] == "f" and data["delta"] == 2
        rebuilt = build_configuration(
            [(p["id"], p["proximities"]) for p in data["points"]],
            surface_from_json_fields(data))
        assert parse_configuration(serialize_configuration(rebuilt)) == rebuilt

    def test_singleton(self, capsys, tmp_path):
        cfg = tmp_path / "one.cfg"
        cfg.write_text(SINGLETON)
        code, out, _ = run(capsys, ["analyze", str(cfg)])
        assert code == 0
        assert "points: 1" in out
        assert "gamma: 1" in out

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("surface p2\n1 origin\n2 -> 7\n")
        code, out, err = run(capsys, ["analyze", str(bad)])
        assert code == 1
        assert "error:" in err
        assert "bad.cfg:3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, ["analyze", str(tmp_path / "nope.cfg")])
        assert code == 1
        assert "error:" in err


class TestDvalue:
    def test_json_report(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["dvalue", str(sample12_path), "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["total_d"] == 23
        assert [(e["id"], e["d"], e["hat_size"]) for e in data["origins"]] == \
            [(1, 10, 6), (6, 7, 5), (10, 6, 5)]

    def test_singleton(self, capsys, tmp_path):
        cfg = tmp_path / "one.cfg"
        cfg.write_text(SINGLETON)
        code, out, _ = run(capsys, ["dvalue", str(cfg)])
        assert code == 0
        assert "origin 1: d = 2" in out
        assert "total d: 2" in out

    def test_two_singletons(self, capsys, tmp_path):
        cfg = tmp_path / "two.cfg"
        cfg.write_text("surface p2\n1 origin\n2 origin\n")
        code, out, _ = run(capsys, ["dvalue", str(cfg)])
        assert code == 0
        assert "total d: 4" in out


class TestBounds:
    def test_pullback_example_convention(self, capsys, sample12_path):
        code, out, err = run(capsys, ["bounds", str(sample12_path),
                                      "--pullback", "--n-convention", "example"])
        assert code == 0
        assert "= -43" in out   # 3 - 2d
        assert "= -345" in out  # d(1 - n)
        assert "bound: -345" in out
        assert "warning" in err and "disagree" in err

    def test_pullback_ruled_override(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["bounds", str(sample12_path), "--pullback",
                                    "--n-convention", "example",
                                    "--surface", "f 3"])
        assert code == 0
        assert "= -47" in out   # 2 - 2d - delta
        assert "= -19" in out   # -n - delta
        assert "bound: -1840" in out

    def test_epsilon_stated(self, capsys, sample12_path):
        code, out, err = run(capsys, ["bounds", str(sample12_path),
                                      "--epsilon", "1"])
        assert code == 0
        assert "bound: -253" in out
        assert "warning" in err

    def test_epsilon_fractional_rendering(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["bounds", str(sample12_path),
                                    "--epsilon", "3"])
        assert code == 0
        assert "-43/3 (-14.3333)" in out

    def test_json_schema(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["bounds", str(sample12_path),
                                    "--epsilon", "1/2", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["epsilon"] == "1/2"
        assert data["bound"] == -506
        assert data["n_stated"] == 12 and data["n_example"] == 16
        assert {t["name"] for t in data["terms"]} == \
            {"(3-2d)/eps", "d(1-n)/eps", "-gamma"}

    def test_epsilon_required_without_pullback(self, capsys, sample12_path):
        with pytest.raises(SystemExit) as exc:
            main(["bounds", str(sample12_path)])
        assert exc.value.code == 2

    def test_nonpositive_epsilon_is_validation_error(self, capsys, sample12_path):
        code, _, err = run(capsys, ["bounds", str(sample12_path),
                                    "--epsilon", "0"])
        assert code == 1
        assert "error:" in err

    def test_malformed_epsilon_is_usage_error(self, capsys, sample12_path):
        with pytest.raises(SystemExit) as exc:
            main(["bounds", str(sample12_path), "--epsilon", "abc"])
        assert exc.value.code == 2


class TestNu:
    def test_undefined_on_singleton(self, capsys, tmp_path):
        cfg = tmp_path / "one.cfg"
        cfg.write_text(SINGLETON)
        curves = tmp_path / "curves.txt"
        curves.write_text("1E1\n")
        code, out, _ = run(capsys, ["nu", str(cfg), "--divisor", "1L",
                                    "--curves", str(curves)])
        assert code == 0
        assert "undefined" in out

    def test_conic_ratio(self, capsys, tmp_path):
        cfg = tmp_path / "chain.cfg"
        cfg.write_text("surface p2\n1 origin\n2 -> 1\n3 -> 2\n4 -> 3\n5 -> 4\n")
        curves = tmp_path / "curves.txt"
        curves.write_text("2L -1E1 -1E2 -1E3 -1E4 -1E5\n")
        code, out, _ = run(capsys, ["nu", str(cfg), "--divisor", "1L",
                                    "--curves", str(curves)])
        assert code == 0
        assert "-1/2 (-0.5)" in out

    def test_strict_exceptional(self, capsys, sample12_path, tmp_path):
        curves = tmp_path / "curves.txt"
        curves.write_text("1E2 -1E3 -1E4 -1E5\n")
        code, out, _ = run(capsys, ["nu", str(sample12_path),
                                    "--divisor", "3L -1E2",
                                    "--curves", str(curves)])
        assert code == 0
        assert "nu over 1 supplied curve(s): -4" in out

    def test_surface_mismatch_between_flag_and_literal(self, capsys,
                                                       sample12_path, tmp_path):
        curves = tmp_path / "curves.txt"
        curves.write_text("1F\n")
        code, _, err = run(capsys, ["nu", str(sample12_path),
                                    "--divisor", "1L",
                                    "--curves", str(curves)])
        assert code == 1
        assert "error:" in err


class TestDot:
    def test_stdout(self, capsys, sample12_path):
        code, out, _ = run(capsys, ["dot", str(sample12_path)])
        assert code == 0
        assert out.startswith("digraph")
        edges = [line for line in out.splitlines() if "->" in line]
        assert len(edges) == 11
        assert sum("dashed" in line for line in edges) == 2


class TestHarness:
    def test_output_file(self, capsys, sample12_path, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, ["dvalue", str(sample12_path), "--json",
                                    "--output", str(target)])
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["total_d"] == 23

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
