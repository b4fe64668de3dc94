from __future__ import annotations

import json

import pytest

from hyperlep import cli, export
from hyperlep.hypercore import Carrier, HyperTable


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def neutral_file(tmp_path):
    p = tmp_path / "neutral.txt"
    p.write_text("#axes: Q\na, 0, a\nb, 0, b\n", encoding="utf-8")
    return p


@pytest.fixture
def single_file(tmp_path):
    p = tmp_path / "one.txt"
    p.write_text("n, 0, 0, 0, 0, n\n", encoding="utf-8")
    return p


class TestDerive:
    def test_text_layout(self, capsys, ps):
        code, out, _ = run(capsys, "derive")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 14
        header = [h.strip() for h in lines[0].split("|")]
        assert header[1:] == list(ps.carrier)
        e_row = [cell.strip() for cell in lines[2].split("|")]
        assert e_row[0] == "e"
        assert e_row[3].split(",") == list(ps.carrier)

    def test_json_round_trip(self, capsys, table):
        code, out, _ = run(capsys, "derive", "--format", "json")
        data = json.loads(out)
        assert set(data) == {"carrier", "cells"}
        assert export.table_from_dict(data) == table

    def test_csv_round_trip(self, capsys, table):
        _, out, _ = run(capsys, "derive", "--format", "csv")
        assert out.splitlines()[0] == "row,col,cell"
        assert len(out.splitlines()) == 145
        assert export.table_from_csv(out) == table

    def test_unicode(self, capsys):
        _, out, _ = run(capsys, "derive", "--unicode")
        assert "ν̄μ" in out and "τ⁺" in out and "nu_" not in out

    def test_single_particle(self, capsys, single_file):
        code, out, _ = run(capsys, "derive", "--input", str(single_file), "--format", "json")
        assert code == 0
        assert json.loads(out) == {"carrier": ["n"], "cells": [[["n"]]]}

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "t.txt"
        code, out, _ = run(capsys, "derive", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text(encoding="utf-8").startswith("(x)")

    def test_transcribed_table(self, capsys, fx):
        _, out, _ = run(capsys, "derive", "--table", "transcribed", "--format", "json")
        assert export.table_from_dict(json.loads(out)) == fx.table2


class TestErrors:
    def test_parse_error_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("e, -1, 1, 0, 0, e+\ne+, 1, -1, zero, 0, e\n", encoding="utf-8")
        code, out, err = run(capsys, "derive", "--input", str(p))
        assert code == 2 and out == ""
        assert "line 2" in err and "Lmu" in err

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", "--input", str(tmp_path / "absent.txt"))
        assert code == 2 and "error" in err

    @pytest.mark.parametrize("argv", [["explode"], ["derive", "--format", "xml"]])
    def test_unknown_command_or_format(self, capsys, argv):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2

    def test_config_validation(self):
        with pytest.raises(Exception, match="unknown command"):
            cli.RunConfig(command="explode")
        with pytest.raises(Exception, match="unknown format"):
            cli.RunConfig(command="derive", output_format="xml")

    def test_transcribed_with_input(self, capsys, single_file):
        code, _, err = run(capsys, "derive", "--table", "transcribed", "--input", str(single_file))
        assert code == 2 and "--input" in err

    def test_corrupt_cell_needs_reproduce(self, capsys):
        code, _, _ = run(capsys, "derive", "--corrupt-cell", "e,e")
        assert code == 2

    def test_corrupt_cell_unknown_name(self, capsys):
        code, _, err = run(capsys, "reproduce-paper", "--corrupt-cell", "e,photon")
        assert code == 2 and "photon" in err


class TestCheck:
    def test_lepton_summary(self, capsys):
        code, out, _ = run(capsys, "check")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "abelian hypergroup; strong associativity: holds (0 unequal triples)"
        assert "weak associativity: holds (1728/1728 triples)" in lines

    def test_transcribed_summary(self, capsys):
        code, out, _ = run(capsys, "check", "--table", "transcribed")
        assert code == 0
        assert out.splitlines()[0] == "Hv-group; strong associativity: FAILS (27 unequal triples)"

    def test_total_hypergroup_file(self, capsys, neutral_file):
        code, out, _ = run(capsys, "check", "--input", str(neutral_file), "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["classification"] == "hypergroup"
        assert data["summary"].startswith("abelian hypergroup")

    def test_failing_axiom_exit_1(self, capsys, monkeypatch):
        c = Carrier("ab")
        bad = HyperTable(c, [[1, 1], [1, 2]])
        monkeypatch.setattr(cli, "_load_table", lambda cfg: bad)
        code, out, _ = run(capsys, "check")
        assert code == 1
        assert "reproduction: FAILS" in out

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "check", "--format", "csv")
        assert "classification,hypergroup" in out.splitlines()


class TestViolations:
    def test_derived_empty(self, capsys):
        code, out, _ = run(capsys, "violations", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert {k: len(v) for k, v in data["violations"].items()} == {
            "right_not_in_left": 0, "left_not_in_right": 0, "unequal": 0,
        }

    def test_transcribed_text(self, capsys):
        _, out, _ = run(capsys, "violations", "--table", "transcribed")
        assert "(ab)c != a(bc): 27 triples" in out

    def test_transcribed_csv(self, capsys):
        _, out, _ = run(capsys, "violations", "--table", "transcribed", "--format", "csv")
        rows = out.splitlines()
        assert rows[0] == "kind,a,b,c,left,right"
        assert len(rows) == 1 + 16 + 15 + 27


class TestSubgroups:
    def test_json_round_trip(self, capsys, census):
        _, out, _ = run(capsys, "subgroups", "--format", "json")
        data = json.loads(out)
        assert set(data) == {"carrier", "census"}
        assert export.census_from_dict(data) == census

    def test_text_counts_and_reference(self, capsys):
        _, out, _ = run(capsys, "subgroups", "--table", "transcribed")
        assert "dim 4: 9" in out and "total: 75" in out
        assert "[L^12]" in out

    def test_csv_rows(self, capsys):
        _, out, _ = run(capsys, "subgroups", "--format", "csv")
        assert len(out.splitlines()) == 1 + 81


class TestLattice:
    def test_dot(self, capsys, census):
        _, out, _ = run(capsys, "lattice")
        assert out.startswith("digraph subgroups {")
        assert out.count("[label=") == census.total
        assert "(L^12)" in out

    def test_transcribed_node_count(self, capsys):
        _, out, _ = run(capsys, "lattice", "--table", "transcribed")
        assert out.count("[label=") == 75

    def test_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.dot", tmp_path / "b.dot"
        run(capsys, "lattice", "--output", str(a))
        run(capsys, "lattice", "--output", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_single_node(self, capsys, single_file):
        _, out, _ = run(capsys, "lattice", "--input", str(single_file))
        assert out.count("[label=") == 1 and "->" not in out

    def test_json_and_csv(self, capsys):
        _, out, _ = run(capsys, "lattice", "--format", "json")
        data = json.loads(out)
        assert len(data["nodes"]) == 81
        _, out, _ = run(capsys, "lattice", "--format", "csv")
        assert out.splitlines()[0] == "lower,upper"
        assert len(out.splitlines()) == 1 + len(data["hasse_edges"])


class TestReproduce:
    def test_reports_each_claim(self, capsys):
        code, out, _ = run(capsys, "reproduce-paper")
        lines = out.splitlines()
        assert lines[-1].endswith("claims PASS")
        assert any(line.startswith(("PASS  dim 1:", "FAIL  dim 1:")) for line in lines)
        assert code == (0 if "FAIL" not in out else 1)

    def test_census_row_format(self, capsys):
        _, out, _ = run(capsys, "reproduce-paper", "--table", "transcribed")
        assert "PASS  dim 4: 9 subgroups (reference: 9)" in out.splitlines()

    def test_ignores_input(self, capsys, single_file):
        _, plain, _ = run(capsys, "reproduce-paper")
        _, with_input, _ = run(capsys, "reproduce-paper", "--input", str(single_file))
        assert plain == with_input

    def test_corruption_named(self, capsys):
        code, out, _ = run(capsys, "reproduce-paper", "--corrupt-cell", "mu,tau")
        assert code == 1
        assert "cell (mu, tau): derived {mu, tau} transcribed {e, mu, tau}" in out

    def test_full_cell_corruption_drops_element(self, capsys):
        _, out, _ = run(capsys, "reproduce-paper", "--corrupt-cell", "e,e+")
        assert "cell (e, e+)" in out and "transcribed {nu_e, e+," in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "reproduce-paper", "--format", "json")
        claims = json.loads(out)["claims"]
        assert all(set(cl) == {"claim", "passed", "detail"} for cl in claims)
