"""Tests for the command-line surface."""

import json
import math

import pytest

from semichord.cli import main

SQRT2 = math.sqrt(2.0)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestVerify:
    def test_sides_thales(self, capsys):
        code, doc = run_json(capsys, "verify", "3,4")
        assert code == 0
        assert doc["status"] == "ok"
        identity = doc["payload"]["identity"]
        assert identity["lhs"] == pytest.approx(25.0, rel=1e-12)
        assert identity["rhs"] == pytest.approx(25.0, rel=1e-12)
        assert identity["residual_rel"] <= 1e-12

    def test_counterexample_sides_inscribable_variant(self, capsys):
        code, doc = run_json(
            capsys, "verify", "1.4142135624,5.2360679775,0.7639320225"
        )
        assert code == 0
        assert doc["payload"]["diameter"] == pytest.approx(5.6568542495, abs=1e-8)
        assert doc["payload"]["identity"]["residual_rel"] <= 1e-11

    def test_arcs_in_degrees(self, capsys):
        code, doc = run_json(capsys, "verify", "90,90", "--radius", "1")
        assert code == 0
        assert doc["payload"]["identity"]["lhs"] == pytest.approx(4.0, rel=1e-12)
        assert doc["payload"]["identity"]["residual_rel"] <= 1e-12

    def test_parse_error(self, capsys):
        code, doc = run_json(capsys, "verify", "3,four")
        assert code == 1
        assert doc["status"] == "error"
        assert doc["payload"]["code"] == "parse"

    def test_geometry_error_passes_through(self, capsys):
        code, doc = run_json(capsys, "verify", "10,20", "--radius", "1")
        assert code == 1
        assert doc["payload"]["code"] == "invalid_angles"


class TestSolve:
    def test_thales(self, capsys):
        code, doc = run_json(capsys, "solve", "3,4")
        assert code == 0
        assert doc["payload"]["d"] == pytest.approx(5.0, abs=1e-12)

    def test_half_hexagon(self, capsys):
        code, doc = run_json(capsys, "solve", "1,1,1")
        assert code == 0
        assert doc["payload"]["d"] == pytest.approx(2.0, abs=1e-12)

    def test_3_4_5(self, capsys):
        code, doc = run_json(capsys, "solve", "3,4,5")
        assert code == 0
        assert doc["payload"]["d"] == pytest.approx(8.055810359525175, rel=1e-12)

    def test_domain_error_exit_code(self, capsys):
        code, doc = run_json(capsys, "solve", "3")
        assert code == 1
        assert doc["payload"]["code"] == "domain"


class TestConstruct:
    def test_all_equal(self, capsys):
        code, doc = run_json(capsys, "construct", "1,1,1")
        assert code == 0
        assert doc["payload"]["count"] == 1
        assert doc["payload"]["d"] == pytest.approx(2.0, abs=1e-12)

    def test_two_equal(self, capsys):
        code, doc = run_json(capsys, "construct", "1,1,2")
        assert code == 0
        assert doc["payload"]["count"] == 2

    def test_distinct(self, capsys):
        code, doc = run_json(capsys, "construct", "3,4,5")
        assert code == 0
        assert doc["payload"]["count"] == 3
        assert doc["payload"]["d"] == pytest.approx(8.055810359525175, rel=1e-12)
        middles = sorted(a["middle_side"] for a in doc["payload"]["arrangements"])
        assert middles == [3.0, 4.0, 5.0]

    def test_wrong_arity(self, capsys):
        code, doc = run_json(capsys, "construct", "1,2")
        assert code == 1
        assert doc["payload"]["code"] == "parse"


class TestCounterexample:
    def test_payload(self, capsys):
        code, doc = run_json(capsys, "counterexample")
        assert code == 0
        payload = doc["payload"]
        assert payload["relation_holds"] is True
        assert 0.33 <= payload["off_circle_distance"] <= 0.34
        assert payload["inscribable_variant_d"] == pytest.approx(
            4.0 * SQRT2, rel=1e-11
        )


class TestFuzzCommand:
    def test_identical_flags_identical_bytes(self, capsys):
        args = ("fuzz", "--trials", "150", "--seed", "42")
        code1, out1 = run_cli(capsys, *args)
        code2, out2 = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_single_triangle_trial(self, capsys):
        code, doc = run_json(
            capsys, "fuzz", "--trials", "1", "--n-min", "3", "--n-max", "3"
        )
        assert code == 0
        assert doc["payload"]["failures"] == []
        assert doc["payload"]["trials_run"] == 1

    def test_stable_key_names(self, capsys):
        _, doc = run_json(capsys, "fuzz", "--trials", "5")
        payload = doc["payload"]
        for key in ("trials_run", "worst_residual_rel", "failures", "histogram"):
            assert key in payload

    def test_text_format_carries_same_keys(self, capsys):
        code, out = run_cli(capsys, "fuzz", "--trials", "5", "--format", "text")
        assert code == 0
        assert "payload.trials_run = 5" in out
        assert "payload.worst_residual_rel" in out


class TestRender:
    def test_deterministic_bytes(self, capsys, tmp_path):
        first = tmp_path / "a.svg"
        second = tmp_path / "b.svg"
        code1, _ = run_cli(capsys, "render", "55,55,70", "--radius", "4", "--out", str(first))
        code2, _ = run_cli(capsys, "render", "55,55,70", "--radius", "4", "--out", str(second))
        assert code1 == code2 == 0
        assert first.read_bytes() == second.read_bytes()

    def test_quadrilateral_has_one_diagonal_pair(self, capsys, tmp_path):
        out = tmp_path / "quad.svg"
        run_cli(capsys, "render", "55,55,70", "--radius", "4", "--out", str(out))
        text = out.read_text()
        assert text.startswith("<?xml")
        assert text.rstrip().endswith("</svg>")
        assert text.count("stroke-dasharray") == 2  # the crossing pair

    def test_sides_input_half_hexagon(self, capsys, tmp_path):
        out = tmp_path / "hex.svg"
        code, doc = run_json(capsys, "render", "1,1,1", "--out", str(out))
        assert code == 0
        assert doc["payload"]["n"] == 4
        assert out.exists()

    def test_triangle_has_no_diagonals(self, capsys, tmp_path):
        out = tmp_path / "tri.svg"
        run_cli(capsys, "render", "3,4", "--out", str(out))
        assert "stroke-dasharray" not in out.read_text()

    def test_write_failure(self, capsys, tmp_path):
        target = tmp_path / "missing" / "out.svg"
        code, doc = run_json(capsys, "render", "3,4", "--out", str(target))
        assert code == 1
        assert doc["payload"]["code"] == "write"


class TestFormatting:
    def test_fifteen_significant_digits(self, capsys):
        from semichord import solve_diameter

        _, doc = run_json(capsys, "solve", "3,4,5")
        exact = solve_diameter([3.0, 4.0, 5.0]).d
        assert doc["payload"]["d"] == float(format(exact, ".15g"))

    def test_text_format_round_trips_status(self, capsys):
        code, out = run_cli(capsys, "solve", "3,4", "--format", "text")
        assert code == 0
        assert "status = ok" in out
        assert "payload.d = 5" in out
