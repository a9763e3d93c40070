"""Command line front end, exercised in process through main()."""

import json

import pytest

from matroid_zeta import PolyQT, RationalQT
from matroid_zeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChar:
    def test_uniform_flag(self, capsys):
        code, out, _ = run(capsys, "char", "--uniform", "1", "1")
        assert code == 0
        assert out == "q - 1\nreduced: 1\n"

    def test_inline_document(self, capsys):
        code, out, _ = run(capsys, "char",
                           '{"type": "uniform", "r": 2, "n": 3}')
        assert code == 0
        assert out == "q^2 - 3*q + 2\nreduced: q - 2\n"

    def test_bases_document_from_file(self, capsys, tmp_path):
        doc = tmp_path / "m.json"
        doc.write_text(json.dumps(
            {"type": "bases", "n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}))
        code, out, _ = run(capsys, "char", str(doc))
        assert code == 0
        assert out.startswith("q^2 - 3*q + 2")

    def test_graph_document(self, capsys):
        doc = json.dumps({"type": "graph",
                          "edges": [[0, 1], [1, 2], [0, 2]]})
        code, out, _ = run(capsys, "char", doc)
        assert code == 0
        assert out == "q^2 - 3*q + 2\nreduced: q - 2\n"

    def test_named(self, capsys):
        code, out, _ = run(capsys, "char", "--named", "fano")
        assert code == 0
        assert out.splitlines()[0] == "q^3 - 7*q^2 + 14*q - 8"


class TestZeta:
    def test_text_with_expansion(self, capsys):
        code, out, _ = run(capsys, "zeta", "--uniform", "1", "1",
                           "--expand", "2")
        assert code == 0
        assert out.splitlines()[:3] == [
            "T^0: 1 - q^-1", "T^1: q^-1 - q^-2", "T^2: q^-2 - q^-3"]

    def test_expansion_matches_oracle_lines(self, capsys):
        code, zeta_out, _ = run(capsys, "zeta", "--uniform", "2", "3",
                                "--expand", "4")
        assert code == 0
        code, oracle_out, _ = run(capsys, "oracle", "--uniform", "2", "3",
                                  "--tmax", "4")
        assert code == 0
        assert zeta_out.splitlines()[:5] == oracle_out.splitlines()

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "zeta", "--named", "k4",
                           "--format", "json", "--kind", "reduced")
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "reduced"
        assert payload["building_set"] == "max"
        restored = RationalQT.from_json(payload["rational"])
        scale = RationalQT(PolyQT.term(1, 2, 0))
        assert restored.substitute_inverse() == scale * restored

    def test_kinds_agree_across_building_sets(self, capsys):
        base = None
        for bs in ("max", "min"):
            code, out, _ = run(capsys, "zeta", "--named", "N1",
                               "--building-set", bs, "--format", "json")
            assert code == 0
            rational = RationalQT.from_json(json.loads(out)["rational"])
            base = rational if base is None else base
            assert rational == base

    def test_custom_building_set_document(self, capsys):
        flats = json.dumps([[0], [1], [2], [0, 1, 2]])
        code, out, _ = run(capsys, "zeta", "--uniform", "2", "3",
                           "--building-set", flats)
        assert code == 0

    def test_invalid_building_set(self, capsys):
        flats = json.dumps([[0], [1]])
        code, _, err = run(capsys, "zeta", "--uniform", "2", "3",
                           "--building-set", flats)
        assert code == 2
        assert "error:" in err


class TestTopZeta:
    def test_u23(self, capsys):
        code, out, _ = run(capsys, "topzeta", "--uniform", "2", "3")
        assert code == 0
        assert out == ("(-s + 2) / (3*s^2 + 5*s + 2)\n"
                       "value at 0: 1\nderivative at 0: -3\n")


class TestPoincare:
    def test_k4_min(self, capsys):
        code, out, _ = run(capsys, "poincare", "--named", "k4",
                           "--building-set", "min")
        assert code == 0
        assert out == ("reduced-poincare: q^2 + 5*q + 1\n"
                       "h-polynomial: q^2 + 5*q + 1\n"
                       "fy-hilbert-series: q^4 + 5*q^2 + 1\n")

    def test_rejects_loops(self, capsys):
        doc = json.dumps({"type": "bases", "n": 2, "bases": [[0]]})
        code, _, err = run(capsys, "poincare", doc)
        assert code == 2
        assert "error:" in err


class TestVerify:
    def test_report_files(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "--uniform", "2", "3",
                           "--suite", "functional", "--suite", "taylor",
                           "--report-dir", str(tmp_path))
        assert code == 0
        lines = out.splitlines()
        assert all(l.startswith("PASS") for l in lines[:-1])
        assert lines[-1].endswith("failed")
        for name in ("report.json", "report.csv", "summary.png",
                     "timings.png"):
            assert (tmp_path / name).exists()
        payload = json.loads((tmp_path / "report.json").read_text())
        assert payload["status"] == "pass"
        assert payload["failed"] == 0
        assert payload["passed"] == len(payload["checks"])
        header = (tmp_path / "report.csv").read_text().splitlines()[0]
        assert header == "suite,check,status,detail"

    def test_full_run_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--uniform", "1", "2",
                           "--tmax", "3")
        assert code == 0
        assert " 0 failed" in out.splitlines()[-1]


class TestErrors:
    def test_axiom_violation_is_parse_error(self, capsys):
        doc = json.dumps({"type": "bases", "n": 4, "bases": [[0, 1], [2, 3]]})
        code, _, err = run(capsys, "char", doc)
        assert code == 2 and "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "char", "/nonexistent/matroid.json")
        assert code == 2 and "error:" in err

    def test_two_sources(self, capsys):
        code, _, err = run(capsys, "char", "--named", "k4",
                           "--uniform", "1", "2")
        assert code == 2 and "exactly one matroid source" in err

    def test_too_large_and_force(self, capsys):
        code, _, err = run(capsys, "char", "--uniform", "4", "10")
        assert code == 3 and "error:" in err
        code, out, _ = run(capsys, "char", "--uniform", "4", "10", "--force")
        assert code == 0 and out.splitlines()[0].startswith("q^4")

    def test_oracle_order_guard(self, capsys):
        code, _, err = run(capsys, "oracle", "--uniform", "1", "2",
                           "--tmax", "11")
        assert code == 3
        code, _, _ = run(capsys, "oracle", "--uniform", "1", "2",
                         "--tmax", "11", "--force")
        assert code == 0

    def test_unknown_named(self, capsys):
        code, _, err = run(capsys, "char", "--named", "mystery")
        assert code == 2

    def test_deterministic_output(self, capsys):
        a = run(capsys, "zeta", "--named", "M1", "--expand", "3")
        b = run(capsys, "zeta", "--named", "M1", "--expand", "3")
        assert a == b
