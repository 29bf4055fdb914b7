import json

import pytest

from ewords import FreeWord
from ewords.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_plain(self, capsys):
        code, out, err = run(capsys, "compute", "5/3")
        assert code == 0
        assert out == "b a b^2 a b a b\n"
        assert err == ""

    def test_capital_alphabet(self, capsys):
        # capitals name the inverse pair: A stands for a^-1, B for b
        code, out, _ = run(capsys, "compute", "1/2", "--alphabet", "AB")
        assert (code, out) == (0, "A^-1 B A^-1\n")
        code, out, _ = run(capsys, "compute", "-1/2", "--alphabet", "AB")
        assert (code, out) == (0, "A B A\n")

    def test_negative_note_on_stderr(self, capsys):
        code, out, err = run(capsys, "compute", "-2/3")
        assert code == 0
        assert out == "a^-1 b a^-1 b a^-1\n"
        assert err == "note: word has negative exponents\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "compute", "68/13", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["index"] == "68/13"
        assert data["mode"] == "orphan"
        assert data["length"] == 81
        assert data["palindrome"] is True
        assert data["runs"][0] == ["b", 3]
        assert FreeWord.parse(data["word"]) == FreeWord.from_runs(
            (g, e) for g, e in data["runs"]
        )

    def test_shortcut_mode(self, capsys):
        code, out, _ = run(capsys, "compute", "7", "--mode", "shortcut")
        assert (code, out) == (0, "b^4 a b^3\n")

    @pytest.mark.parametrize("index", ["0", "inf", "5/3", "-7/4", "21/4"])
    @pytest.mark.parametrize("alphabet", ["ab", "AB"])
    def test_output_reparses(self, capsys, index, alphabet):
        _, out, _ = run(capsys, "compute", index, "--alphabet", alphabet)
        word = FreeWord.parse(out.strip(), alphabet=alphabet)
        assert word.format(alphabet) == out.strip()


class TestTrace:
    def test_plain_layout(self, capsys):
        code, out, _ = run(capsys, "trace", "[0;3,4]")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "(a, b)"
        assert sum(1 for line in lines if line.startswith("→")) == 7
        assert "value: 4/13" in lines
        assert "final indices: 4/13, 1/3" in lines
        assert (
            "last changed: left = a^2 b a^3 b a^3 b a^3 b a^2  [index 4/13]" in lines
        )
        assert "exponent sums: a=13 b=4" in lines

    def test_json_fields(self, capsys):
        code, out, _ = run(capsys, "trace", "[5;4]", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["esequence"] == [5, 4]
        assert data["value"] == "21/4"
        assert len(data["steps"]) == 9
        assert data["last_changed"]["side"] == "right"
        assert data["last_changed"]["word"] == "b^3 a b^5 a b^5 a b^5 a b^3"
        assert data["last_changed"]["exponent_sums"] == {"a": 4, "b": 21}

    def test_rejects_garbage(self, capsys):
        code, _, err = run(capsys, "trace", "[0;0,3]")
        assert code == 2
        assert err.startswith("error:")


class TestIndexCommands:
    def test_parents(self, capsys):
        assert run(capsys, "parents", "68/13")[:2] == (0, "47/9 21/4\n")

    def test_parents_of_orphan_fails(self, capsys):
        code, _, err = run(capsys, "parents", "1/0")
        assert code == 2
        assert err.startswith("error:")

    def test_cf(self, capsys):
        assert run(capsys, "cf", "68/13")[:2] == (0, "[5;4,3]\n")

    def test_cf_json(self, capsys):
        _, out, _ = run(capsys, "cf", "14/3", "--format", "json")
        assert json.loads(out) == {
            "index": "14/3",
            "entries": [4, 1, 2],
            "text": "[4;1,2]",
        }

    def test_level(self, capsys):
        assert run(capsys, "level", "68/13")[:2] == (0, "12\n")
        assert run(capsys, "level", "-68/13")[:2] == (0, "12\n")

    def test_unparsable_rational(self, capsys):
        code, _, err = run(capsys, "level", "3/6/9")
        assert code == 2
        assert "error:" in err


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--bound", "4")
        assert code == 0
        assert out.splitlines()[0] == "sweep over |p| + q <= 4"
        assert out.splitlines()[-1].startswith("PASS:")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--bound", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_bad_bound(self, capsys):
        code, _, err = run(capsys, "verify", "--bound", "1")
        assert code == 2
        assert err.startswith("error:")


class TestCount:
    def test_match(self, capsys):
        assert run(capsys, "count", "5")[:2] == (0, "arithmetic=8 measured=8\n")

    def test_json(self, capsys):
        _, out, _ = run(capsys, "count", "13", "--format", "json")
        data = json.loads(out)
        assert data == {
            "length": 13,
            "arithmetic": data["arithmetic"],
            "measured": data["arithmetic"],
            "equal": True,
        }

    def test_too_short(self, capsys):
        assert run(capsys, "count", "1")[0] == 2


class TestParser:
    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["frobnicate"])

    def test_prog_name(self):
        assert build_parser().prog == "eword"
