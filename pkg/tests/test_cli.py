"""Command-line interface, exercised in process through main()."""

from __future__ import annotations

import io
import json

import pytest

from ringnim import Classifier, Rules, Variant, explore_generic, EnumerationScope
from ringnim.cli import main

GOLDEN_SOLVE_JSON = """\
{
  "best_move": {
    "removals": [
      1,
      1
    ],
    "result": [],
    "window_start": 0
  },
  "canonical": [
    1,
    1
  ],
  "piles": [
    1,
    1
  ],
  "status": "N"
}
"""


class TestSolve:
    def test_p_position_prints_bare_status(self, capsys):
        rc = main(["solve", "--variant", "scn", "-k", "3",
                   "--piles", "1,6,2,3,3,6"])
        assert rc == 0
        assert capsys.readouterr().out == "P\n"

    def test_n_position_prints_best_move(self, capsys):
        rc = main(["solve", "--variant", "scn", "-k", "2", "--piles", "1,1"])
        assert rc == 0
        assert capsys.readouterr().out == "N\nwindow 0 removals 1,1 -> ()\n"

    def test_json_is_byte_stable(self, capsys):
        argv = ["solve", "--variant", "scn", "-k", "2", "--piles", "1,1",
                "--format", "json"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert first == GOLDEN_SOLVE_JSON
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_out_writes_file(self, tmp_path, capsys):
        target = tmp_path / "result.txt"
        rc = main(["solve", "--variant", "scn", "-k", "2",
                   "--piles", "1,2,1,2", "--out", str(target)])
        assert rc == 0
        assert capsys.readouterr().out == ""
        assert target.read_text() == "P\n"

    def test_static_variant(self, capsys):
        rc = main(["solve", "--variant", "cn", "-k", "1", "--piles", "1,1"])
        assert rc == 0
        assert capsys.readouterr().out == "P\n"


class TestMoves:
    def test_p_position_lists_nothing(self, capsys):
        rc = main(["moves", "--variant", "scn", "-k", "2", "--piles", "1,2,1,2"])
        assert rc == 0
        assert capsys.readouterr().out == "P\n"

    def test_n_position_lists_every_winning_move(self, capsys):
        rc = main(["moves", "--variant", "scn", "-k", "2",
                   "--piles", "1,1,1,1,1"])
        assert rc == 0
        assert capsys.readouterr().out == "N\nwindow 0 removals 1,1 -> (1,1,1)\n"

    def test_json_shape(self, capsys):
        rc = main(["moves", "--variant", "scn", "-k", "2", "--piles", "1,1",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "N"
        assert {"window_start": 0, "removals": [1, 1], "result": []} \
            in payload["winning_moves"]


class TestErrors:
    def test_unparsable_piles(self, capsys):
        rc = main(["solve", "--variant", "scn", "-k", "2", "--piles", "1,x"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_zero_pile_rejected_for_shrinking(self):
        assert main(["solve", "--variant", "scn", "-k", "2",
                     "--piles", "1,0,2"]) == 2

    def test_static_window_wider_than_ring(self):
        assert main(["solve", "--variant", "cn", "-k", "4",
                     "--piles", "1,2,3"]) == 2

    def test_unknown_subcommand_is_a_parse_error(self):
        assert main(["frobnicate"]) == 2

    def test_missing_required_flag(self):
        assert main(["solve", "--variant", "scn", "-k", "2"]) == 2

    def test_unknown_classifier(self, capsys):
        rc = main(["verify", "--classifier", "scn:9,9", "--sum-max", "6"])
        assert rc == 2
        assert "scn:9,9" in capsys.readouterr().err

    def test_bad_jobs(self):
        assert main(["verify", "--classifier", "scn:4,2", "--sum-max", "6",
                     "--jobs", "0"]) == 2


class TestBudget:
    def test_flag_caps_the_solve(self, capsys):
        rc = main(["solve", "--variant", "scn", "-k", "2", "--piles", "6,6",
                   "--max-total-stones", "10"])
        assert rc == 3
        assert "budget" in capsys.readouterr().err

    def test_env_overrides_the_default(self, monkeypatch):
        monkeypatch.setenv("RINGNIM_MAX_SUM", "10")
        assert main(["solve", "--variant", "scn", "-k", "2",
                     "--piles", "6,6"]) == 3

    def test_flag_beats_env(self, monkeypatch):
        monkeypatch.setenv("RINGNIM_MAX_SUM", "10")
        assert main(["solve", "--variant", "scn", "-k", "2", "--piles", "6,6",
                     "--max-total-stones", "20"]) == 0

    def test_invalid_env_value(self, monkeypatch, capsys):
        monkeypatch.setenv("RINGNIM_MAX_SUM", "plenty")
        rc = main(["solve", "--variant", "scn", "-k", "2", "--piles", "1,1"])
        assert rc == 2
        assert "RINGNIM_MAX_SUM" in capsys.readouterr().err


class TestVerify:
    def test_clean_sweep_exits_zero(self, capsys):
        rc = main(["verify", "--classifier", "scn:4,2", "--sum-max", "12",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["classifier"] == "scn:4,2"
        assert payload["mismatches"] == []
        assert payload["scope"] == {"pile_min": 0, "pile_max": 4, "sum_max": 12}

    def test_mismatches_exit_one(self, capsys, monkeypatch):
        broken = Classifier(
            "broken", Rules(Variant.SHRINKING, 2), 0, 4, lambda pos: False
        )
        monkeypatch.setattr("ringnim.cli.resolve_classifier", lambda _id: broken)
        rc = main(["verify", "--classifier", "broken", "--sum-max", "6"])
        assert rc == 1
        out = capsys.readouterr().out
        assert "mismatches: " in out
        assert "oracle P, classifier N" in out

    def test_explicit_pile_bounds(self, capsys):
        rc = main(["verify", "--classifier", "scn:4,2", "--sum-max", "8",
                   "--pile-min", "2", "--pile-max", "3", "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["scope"] == {"pile_min": 2, "pile_max": 3, "sum_max": 8}


class TestExplore:
    def test_conjecture_game_uses_family_report(self, capsys):
        rc = main(["explore", "--game", "scn:6,4", "--sum-max", "8",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["game"] == "scn:6,4"
        assert set(payload["categories"]) == {"i", "ii", "iii", "unclassified"}

    def test_generic_game_lists_p_positions(self, capsys):
        rc = main(["explore", "--game", "scn:3,2", "--sum-max", "6",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        expected = explore_generic(
            Rules(Variant.SHRINKING, 2), EnumerationScope(0, 3, 6)
        )
        assert payload["p_positions"] == [list(p) for p in expected]

    def test_static_game_defaults_to_fixed_length(self, capsys):
        rc = main(["explore", "--game", "cn:3,1", "--sum-max", "4",
                   "--format", "json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["scope"] == {"pile_min": 3, "pile_max": 3, "sum_max": 4}
        assert [0, 1, 1] in payload["p_positions"]

    def test_bad_game_id(self):
        assert main(["explore", "--game", "scn:64", "--sum-max", "4"]) == 2


class TestPlay:
    def _run(self, monkeypatch, capsys, piles, script, k="2"):
        monkeypatch.setattr("sys.stdin", io.StringIO(script))
        rc = main(["play", "--variant", "scn", "-k", k, "--piles", piles])
        return rc, capsys.readouterr().out

    def test_human_takes_last_stone(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "1,1", "0\n1,1\n")
        assert rc == 0
        assert "you move first from a N position" in out
        assert "you took the last stone: you win" in out

    def test_engine_takes_last_stone(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "1,1,1", "0\n1,1\n")
        assert rc == 0
        assert "you move first from a P position" in out
        assert "engine plays window 0 removals 1 -> ()" in out
        assert "the engine wins" in out

    def test_illegal_moves_reprompt_with_reasons(self, monkeypatch, capsys):
        script = "5\n1,1\n0\n0,0\n0\n9,0\n0\n2,1\nq\n"
        rc, out = self._run(monkeypatch, capsys, "2,1", script)
        assert rc == 0
        assert "illegal move (window)" in out
        assert "illegal move (zero-total)" in out
        assert "illegal move (removal-bounds)" in out
        assert "you took the last stone: you win" in out

    def test_quit(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "1,2,1,2", "q\n")
        assert rc == 0
        assert "goodbye" in out

    def test_eof_quits(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "1,2,1,2", "")
        assert rc == 0
        assert "goodbye" in out

    def test_board_shows_indices(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "5,3,1,6,4", "q\n", k="3")
        assert "piles: [0] 5  [1] 3  [2] 1  [3] 6  [4] 4" in out

    def test_non_numeric_input_reprompts(self, monkeypatch, capsys):
        rc, out = self._run(monkeypatch, capsys, "1,1", "zero\n0\none,one\n0\n1,1\n")
        assert rc == 0
        assert "enter a pile index" in out
        assert "enter amounts" in out
        assert "you win" in out
