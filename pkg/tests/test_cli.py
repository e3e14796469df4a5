"""Command-line interface: dispatch, formats, exit codes, round trips."""

from __future__ import annotations

import csv
import io
import json

import pytest

from cube_faultlab import ClaimResult, adversarial_q1_family, family_to_text
from cube_faultlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def without_seconds(obj):
    if isinstance(obj, dict):
        return {k: without_seconds(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [without_seconds(v) for v in obj]
    return obj


class TestVerify:
    def test_passing_claims_exit_zero(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--claims", "lem2.3(n=3),thm3.3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["failed"] == 0
        assert payload["total"] == 2
        assert {c["claim"] for c in payload["claims"]} == {"lem2.3(n=3)", "thm3.3"}

    def test_failing_claim_exits_one(self, capsys, monkeypatch):
        fake = ClaimResult(
            "lem0.0", {"n": 3}, "a fake statement", "1", "2", "fail", (), 0.0
        )
        monkeypatch.setattr(
            "cube_faultlab.cli.verify_claims", lambda *a, **k: [fake]
        )
        code, out, _ = run(capsys, "verify", "--claims", "all")
        assert code == 1
        assert "fail" in out

    def test_unknown_claim_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--claims", "nope")
        assert code == 2
        assert "unknown claim" in err

    def test_table_has_one_line_per_claim(self, capsys):
        code, out, _ = run(capsys, "verify", "--claims", "lem2.2(n=3),lem2.2(n=4)")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.startswith("lem")]
        assert len(lines) == 2

    def test_csv_round_trips_through_the_csv_module(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--claims", "lem2.3(n=3)", "--format", "csv"
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["claim", "expected", "computed", "status", "seconds"]
        assert rows[1][0] == "lem2.3(n=3)"
        assert rows[1][3] == "pass"


class TestOracleCommands:
    def test_connectivity_json(self, capsys):
        code, out, _ = run(
            capsys,
            "connectivity", "--n", "4", "--mode", "subcube", "--m", "2",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["kappa"] == 2
        assert payload["witness"] == ["00**", "11**"]

    def test_fault_diameter_defaults_to_the_full_budget(self, capsys):
        code, out, _ = run(
            capsys,
            "fault-diameter", "--n", "4", "--mode", "structure", "--m", "1",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["budget"] == 2
        assert payload["value"] == 5

    def test_sampled_search(self, capsys):
        code, out, _ = run(
            capsys,
            "fault-diameter", "--n", "4", "--mode", "structure", "--m", "1",
            "--sampled", "--seed", "7", "--draws", "100", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["search"] == "sampled(seed=7,draws=100)"

    def test_seed_without_sampled_is_a_usage_error(self, capsys):
        code, _, err = run(
            capsys,
            "fault-diameter", "--n", "4", "--mode", "structure", "--m", "1",
            "--seed", "7",
        )
        assert code == 2
        assert "--sampled" in err

    def test_resource_guard_maps_to_exit_three(self, capsys):
        code, _, err = run(capsys, "connectivity", "--n", "9", "--mode", "structure:1")
        assert code == 3
        assert "n <= 7" in err


class TestDiameterCommand:
    def test_adversary_spec(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "4", "--faults", "adversary:q1",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["diameter"] == 5
        assert payload["survivors"] == 12

    def test_inline_patterns_infer_the_mode(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "3", "--faults", "0*1,110", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["mode"] == "substructure"

    def test_uniform_inline_patterns_are_a_structure_family(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "3", "--faults", "0*1,1*0", "--format", "json"
        )
        assert json.loads(out)["mode"] == "structure:1"

    def test_explicit_mode_overrides_inference(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "3", "--faults", "0*1,1*0",
            "--mode", "subcube:1", "--format", "json",
        )
        assert json.loads(out)["mode"] == "subcube:1"

    def test_disconnected_reported_not_fatal(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "3", "--faults", "00*,11*", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["connected"] is False
        assert payload["diameter"] is None

    def test_overlapping_patterns_are_a_usage_error(self, capsys):
        code, _, err = run(capsys, "diameter", "--n", "3", "--faults", "0**,001")
        assert code == 2
        assert "invalid fault family" in err

    def test_family_file_round_trip(self, capsys, tmp_path):
        fam = adversarial_q1_family(5)
        path = tmp_path / "fam.txt"
        path.write_text(family_to_text(fam))
        code, out, _ = run(
            capsys, "diameter", "--n", "5", "--faults", f"@{path}", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["faults"] == fam.patterns()

    def test_file_dimension_mismatch(self, capsys, tmp_path):
        path = tmp_path / "fam.txt"
        path.write_text(family_to_text(adversarial_q1_family(5)))
        code, _, err = run(capsys, "diameter", "--n", "4", "--faults", f"@{path}")
        assert code == 2


class TestRouteCommand:
    def test_guided_route_spec_example(self, capsys):
        code, out, _ = run(
            capsys,
            "route", "--n", "5", "--faults", "adversary:q1",
            "--from", "00000", "--to", "11110", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["length"] == 6
        assert payload["path"][0] == "00000"
        assert payload["path"][-1] == "11110"
        assert payload["length"] <= payload["bound"]

    def test_table_output_is_the_path(self, capsys):
        code, out, _ = run(
            capsys, "route", "--n", "4", "--faults", "none",
            "--from", "0000", "--to", "1111",
        )
        assert code == 0
        assert "->" in out
        assert "length 4" in out

    def test_removed_endpoint_is_a_usage_error(self, capsys):
        code, _, err = run(
            capsys, "route", "--n", "4", "--faults", "adversary:q1",
            "--from", "0100", "--to", "1111",
        )
        assert code == 2


class TestAdversaryCommand:
    def test_q1_prints_the_family_file_format(self, capsys):
        code, out, _ = run(capsys, "adversary", "q1", "--n", "4")
        assert code == 0
        assert out == "n=4 mode=structure:1\n*010\n*100\n"

    def test_subcube_needs_m(self, capsys):
        code, _, err = run(capsys, "adversary", "subcube", "--n", "5")
        assert code == 2

    def test_subcube_family(self, capsys):
        code, out, _ = run(
            capsys, "adversary", "subcube", "--n", "5", "--m", "2",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["patterns"] == ["**010", "**100"]
        assert payload["size"] == 2


class TestEnumerateCommand:
    def test_counts(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--n", "3", "--mode", "structure:1",
            "--size", "1", "--format", "json",
        )
        payload = json.loads(out)
        assert payload["families"] == 12
        assert payload["element_space"] == 12

    def test_show_lists_families(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--n", "3", "--mode", "structure:1",
            "--size", "2", "--show", "2", "--format", "json",
        )
        payload = json.loads(out)
        assert len(payload["shown"]) == 2

    def test_show_appends_families_to_the_table(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--n", "3", "--mode", "structure:1",
            "--size", "2", "--show", "2",
        )
        tail = out.strip().splitlines()[-2:]
        assert tail == ["00*,01*", "00*,10*"]


class TestPlumbing:
    def test_json_reports_are_deterministic(self, capsys):
        args = (
            "route", "--n", "5", "--faults", "adversary:subcube:2",
            "--from", "00000", "--to", "11110", "--format", "json",
        )
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_verify_json_deterministic_modulo_timing(self, capsys):
        args = ("verify", "--claims", "lem2.3(n=3),lem2.5(n=3)", "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert without_seconds(json.loads(first)) == without_seconds(json.loads(second))

    def test_output_flag_writes_the_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "adversary", "q1", "--n", "4",
            "--format", "json", "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["patterns"] == ["*010", "*100"]

    def test_env_var_overrides_jobs(self, capsys, monkeypatch):
        monkeypatch.setenv("CUBE_FAULTLAB_JOBS", "not-a-number")
        code, _, err = run(capsys, "enumerate", "--n", "3", "--mode", "structure:1", "--size", "0")
        assert code == 2
        assert "CUBE_FAULTLAB_JOBS" in err

    def test_env_var_zero_rejected(self, capsys, monkeypatch):
        monkeypatch.setenv("CUBE_FAULTLAB_JOBS", "0")
        code, _, err = run(capsys, "enumerate", "--n", "3", "--mode", "structure:1", "--size", "0")
        assert code == 2

    def test_bad_subcommand_is_an_argparse_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_mode_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "connectivity", "--n", "4", "--mode", "edgy")
        assert code == 2
