"""Tests for the command-line interface."""

import json
from pathlib import Path

import pytest

from sp2forms.cli import main
from sp2forms.hesselink import EpsilonTaggedType
from sp2forms.jordan import JordanType

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestValueCommands:
    @pytest.mark.parametrize(
        "argv,want",
        [
            (("tensor", "3", "5"), "4^2,7"),
            (("tensor", "1", "9"), "9"),
            (("tensor", "2", "2,5"), "2^2,4,6"),
            (("wedge", "2^2,8"), "1^2,2^2,4,8^7"),
            (("tensor-bilinear", "2_1", "4_1"), "4_0^2"),
            (("consec-ones", "6"), "2^3 - 2^1"),
            (("thmA", "5"), "1_0,4_1^2,8_1^2 | 4_1^2,8_1^2"),
            (("thmC", "4_1"), "2_1,4_1 | 4_1"),
            (("thmC", "2_0^2"), "1_0^2,2_1^2 | 1_0^2,2_1"),
        ],
    )
    def test_outputs(self, capsys, argv, want):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.strip() == want

    def test_parse_error_exits_2_with_caret(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tensor", "3^^2", "5"])
        assert exc.value.code == 2
        err = capsys.readouterr().err
        assert "^" in err and "position" in err

    def test_thm_a_dimension_error(self, capsys):
        code, _, err = run(capsys, "thmA", "1")
        assert code == 2
        assert "dimension" in err

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "thmA", "5", "--json")
        assert code == 0
        data = json.loads(out)
        assert JordanType.from_json(data["input"]) == JordanType.parse("5")
        assert EpsilonTaggedType.from_json(data["tensor_space"]) == EpsilonTaggedType.parse("1_0,4_1^2,8_1^2")
        assert EpsilonTaggedType.from_json(data["irreducible"]) == EpsilonTaggedType.parse("4_1^2,8_1^2")
        assert data["alpha"] == 0

    def test_json_tensor_roundtrip(self, capsys):
        code, out, _ = run(capsys, "tensor", "3", "5", "--json")
        data = json.loads(out)
        assert JordanType.from_json(data["tensor"]) == JordanType.parse("4^2,7")


class TestTable:
    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "table", "A", "2..2")
        assert code == 0
        assert out.strip() == "(2) | (2_1^2) | (2_1)"

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "table", "A", "x..y")
        assert code == 2
        assert "range" in err

    def test_golden_pass(self, capsys):
        code, _, err = run(capsys, "table", "A", "2..7", "--golden", str(GOLDEN / "table_A.txt"))
        assert code == 0
        assert "golden check passed" in err

    def test_golden_mismatch(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("(2) | (2_1^2) | (9_1)\n", encoding="utf-8")
        code, _, err = run(capsys, "table", "A", "2..2", "--golden", str(bad))
        assert code == 1
        assert "mismatch" in err

    def test_table_c_all_is_superset(self, capsys):
        _, restricted, _ = run(capsys, "table", "C", "4..4")
        _, everything, _ = run(capsys, "table", "C", "4..4", "--all")
        restricted_rows = set(restricted.splitlines())
        all_rows = set(everything.splitlines())
        assert restricted_rows < all_rows
        # the restricted table is exactly the positive-content slice
        assert all(row.rsplit("| ", 1)[1] != "0" for row in restricted_rows)

    def test_table_json(self, capsys):
        code, out, _ = run(capsys, "table", "A", "2..3", "--json")
        data = json.loads(out)
        assert data["table"] == "A"
        assert len(data["rows"]) == 3


class TestSweepCommands:
    def test_oracle_check(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--max-dim", "6", "--max-n", "4")
        assert code == 0
        assert "PASS" in out

    def test_oracle_check_json(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--max-dim", "4", "--max-n", "2", "--json")
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_oracle_check_dump(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--max-dim", "4", "--max-n", "2", "--dump-matrices")
        assert code == 0
        assert "u =" in out and "gram =" in out

    def test_distinguished(self, capsys):
        code, out, _ = run(capsys, "distinguished", "--max-n", "6", "--max-dim", "16")
        assert code == 0
        assert out.count("PASS") == 4

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["table"])
        assert exc.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
