"""Command-line behavior: output, exit codes, determinism."""

import subprocess
import sys

import pytest

from softsets.cli import main
from softsets.houses import (
    RENDERED_COMPLEMENT,
    RENDERED_INTERSECTION,
    bundled_workspace_text,
    houses_workspace,
)
from softsets.workspace import render_workspace


@pytest.fixture
def houses_file(tmp_path):
    path = tmp_path / "houses.sset"
    path.write_text(bundled_workspace_text(), encoding="utf-8")
    return str(path)


class TestEval:
    def test_intersection_renders_the_worked_example(self, houses_file, capsys):
        assert main(["eval", houses_file, "F & G"]) == 0
        captured = capsys.readouterr()
        assert captured.out == RENDERED_INTERSECTION
        assert captured.err == ""

    def test_complement_covers_seven_parameters(self, houses_file, capsys):
        assert main(["eval", houses_file, "F^c"]) == 0
        assert capsys.readouterr().out == RENDERED_COMPLEMENT

    def test_empty_result_prints_nothing(self, houses_file, capsys):
        assert main(["eval", houses_file, "F - F"]) == 0
        assert capsys.readouterr().out == ""

    def test_unbound_name_exits_2(self, houses_file, capsys):
        assert main(["eval", houses_file, "F & X"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "unbound name X" in captured.err

    def test_lex_error_exits_2_with_position(self, houses_file, capsys):
        assert main(["eval", houses_file, "F ? G"]) == 2
        assert "1:3" in capsys.readouterr().err

    def test_parse_error_exits_2(self, houses_file, capsys):
        assert main(["eval", houses_file, "(F | G"]) == 2
        assert "parenthesis" in capsys.readouterr().err

    def test_missing_file_exits_3(self, tmp_path, capsys):
        assert main(["eval", str(tmp_path / "nope.sset"), "F"]) == 3
        assert capsys.readouterr().err != ""

    def test_malformed_workspace_exits_3_with_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.sset"
        bad.write_text("universe: x1\nparameters: e1\nsoftset F:\n  e9: x1\n")
        assert main(["eval", str(bad), "F"]) == 3
        assert "line 4" in capsys.readouterr().err

    def test_output_is_deterministic(self, houses_file, capsys):
        main(["eval", houses_file, "(F | G)^c - F"])
        first = capsys.readouterr().out
        main(["eval", houses_file, "(F | G)^c - F"])
        assert capsys.readouterr().out == first


class TestShow:
    def test_canonical_re_rendering(self, houses_file, capsys):
        assert main(["show", houses_file]) == 0
        assert capsys.readouterr().out == render_workspace(houses_workspace())

    def test_show_is_a_fixpoint(self, tmp_path, capsys):
        # shown output reloads to the same canonical text
        path = tmp_path / "w.sset"
        path.write_text("universe: b a\nparameters: q p\nsoftset S:\n  p: a   b\n")
        assert main(["show", str(path)]) == 0
        once = capsys.readouterr().out
        path.write_text(once)
        assert main(["show", str(path)]) == 0
        assert capsys.readouterr().out == once


class TestCheckLaws:
    def test_defaults_pass_with_one_line_per_law(self, capsys):
        assert main(["check-laws"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 23
        assert all(line.endswith("PASS") for line in lines)
        assert all("random, 1000 cases" in line for line in lines)

    def test_exhaustive_two_by_two(self, capsys):
        assert main(["check-laws", "--exhaustive", "--universe", "2", "--params", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 23
        assert lines[0] == "identity-1: exhaustive, 16 cases, PASS"
        assert "monotonicity-cap: exhaustive, 65536 cases, PASS" in lines

    def test_exhaustive_five_by_five_exceeds_the_cap(self, capsys):
        code = main(["check-laws", "--exhaustive", "--universe", "5", "--params", "5"])
        captured = capsys.readouterr()
        assert code == 3
        assert captured.out == ""  # refused before any report line
        assert "cap" in captured.err

    def test_random_output_is_byte_identical_across_runs(self, capsys):
        args = [
            "check-laws", "--random", "--trials", "10000", "--seed", "42",
            "--universe", "6", "--params", "6",
        ]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first
        assert first.count("\n") == 23

    def test_law_filter(self, capsys):
        assert main(
            ["check-laws", "--law", "demorgan-1", "--exhaustive",
             "--universe", "3", "--params", "2"]
        ) == 0
        assert capsys.readouterr().out == "demorgan-1: exhaustive, 4096 cases, PASS\n"

    def test_law_filter_is_repeatable(self, capsys):
        assert main(["check-laws", "--law", "bounds", "--law", "involution",
                     "--trials", "10"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert [line.split(":")[0] for line in lines] == ["bounds", "involution"]

    def test_unknown_law_id_exits_2(self, capsys):
        assert main(["check-laws", "--law", "no-such-law"]) == 2
        assert "unknown law id" in capsys.readouterr().err

    def test_seed_changes_the_sampled_cases(self, capsys):
        main(["check-laws", "--law", "demorgan-1", "--trials", "5", "--seed", "0"])
        base = capsys.readouterr().out
        main(["check-laws", "--law", "demorgan-1", "--trials", "5", "--seed", "1"])
        assert capsys.readouterr().out == base  # both pass: same report text


class TestPaperExample:
    def test_exits_zero_and_reports_every_section(self, capsys):
        assert main(["paper-example"]) == 0
        out = capsys.readouterr().out
        for heading in (
            "== workspace",
            "== F & G (intersection)",
            "== F | G (union)",
            "== F^c (complement)",
            "== F - G (difference)",
        ):
            assert heading in out
        assert out.count("OK:") == 5
        assert "ERRATUM" in out
        assert "e2: h2 h3 h5" in out
        assert "all fixtures match" in out

    def test_report_is_deterministic(self, capsys):
        main(["paper-example"])
        first = capsys.readouterr().out
        main(["paper-example"])
        assert capsys.readouterr().out == first


class TestUsageErrors:
    def test_no_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main([])
        assert exc_info.value.code == 2

    def test_conflicting_modes(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["check-laws", "--exhaustive", "--random"])
        assert exc_info.value.code == 2

    def test_nonpositive_trials(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["check-laws", "--trials", "0"])
        assert exc_info.value.code == 2

    def test_negative_universe(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["check-laws", "--universe", "-1"])
        assert exc_info.value.code == 2


def test_module_entry_point(houses_file):
    proc = subprocess.run(
        [sys.executable, "-m", "softsets", "eval", houses_file, "F & G"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == RENDERED_INTERSECTION


def test_console_script(houses_file):
    proc = subprocess.run(
        ["softsets", "show", houses_file], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == render_workspace(houses_workspace())
