"""CLI: thin shells over the modules, stable machine output, exit codes."""

import subprocess
import sys

import pytest

from triblock.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_triangulations_lines_golden(capsys):
    code, out, _ = run(capsys, "triangulations", "--n", "4", "--format", "lines")
    assert code == 0
    assert out == "0-2\n1-3\n"


def test_triangulations_count_only(capsys):
    code, out, _ = run(capsys, "triangulations", "--n", "6", "--count-only")
    assert (code, out) == (0, "14\n")
    code, out, _ = run(capsys, "triangulations", "--n", "40", "--count-only")
    assert code == 0 and int(out) > 10**12


def test_triangulations_feasibility(capsys):
    code, _, err = run(capsys, "triangulations", "--n", "20")
    assert code == 2 and "count-only" in err


def test_blockers_lines_golden(capsys):
    code, out, _ = run(capsys, "blockers", "--n", "6", "--format", "lines")
    assert code == 0
    assert out == "0-2,0-3,0-4,1-5\n0-2,0-3,1-4,1-5\n0-2,0-4,1-3,1-5\n3\n"


def test_blockers_up_to_rotation_counts(capsys):
    code, out, _ = run(capsys, "blockers", "--n", "7", "--format", "lines")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "8" and len(lines) == 9


def test_blockers_total_with_note(capsys):
    code, out, _ = run(capsys, "blockers", "--n", "9", "--total", "--format", "lines")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "495"
    code, out, _ = run(capsys, "blockers", "--n", "5", "--total")
    assert "derived identity" in out


def test_blockers_dual_oracle_agreement(capsys):
    code, out, _ = run(
        capsys,
        "blockers", "--n", "6", "--oracle", "structural", "--oracle", "brute",
        "--format", "lines",
    )
    assert code == 0
    assert "oracle agreement" in out


def test_blockers_brute_only(capsys):
    code, out, _ = run(capsys, "blockers", "--n", "6", "--oracle", "brute", "--format", "lines")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "3"


def test_blockers_oracle_mismatch_exits_one(capsys, monkeypatch):
    # sabotage the brute oracle to confirm the CI gate actually trips
    import triblock.cli as cli

    monkeypatch.setattr(cli, "brute_force_blockers", lambda n: [])
    code, out, err = run(
        capsys,
        "blockers", "--n", "5", "--oracle", "structural", "--oracle", "brute",
        "--format", "lines",
    )
    assert code == 1
    assert "MISMATCH" in err


def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6", "--edges", "0-2,1-3,2-4,5-2")
    assert code == 0
    assert "blocker: yes" in out
    assert "offset a=0, net m=2" in out and "beams=[2]" in out
    code, out, _ = run(capsys, "verify", "--n", "6", "--edges", "0-2,1-3,2-4")
    assert code == 0
    assert "blocking: no" in out and "not minimum" in out
    code, out, _ = run(capsys, "verify", "--n", "4", "--edges", "0-2,1-3")
    assert "blocker: yes" in out


def test_verify_kv_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--n", "6", "--edges", "0-2,1-3,2-4,5-2", "--format", "kv"
    )
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["blocker"] == "true"
    assert kv["structure"] == "a=0 m=2 beams=[2]"
    assert kv["check_no_isolated_vertex"] == "true"


def test_verify_parse_error_position(capsys):
    code, _, err = run(capsys, "verify", "--n", "6", "--edges", "0-2,banana")
    assert code == 2
    assert "position 1" in err and "banana" in err


def test_count_table(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "8", "--format", "lines")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[-1][:3] == ["8", "21", "21"]
    code, out, _ = run(capsys, "count", "--n-max", "12", "--format", "lines")
    assert any(line.startswith("12,987,987") for line in out.splitlines())


def test_count_csv_golden(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,f,fibonacci,per_k,match"
    assert out.splitlines()[3] == "6,3,3,2=1;3=1;4=1,true"


def test_count_identities(capsys):
    code, out, _ = run(capsys, "count", "--n-max", "8", "--identities")
    assert code == 0
    assert "holds" in out
    assert "fails as expected" in out and "21 vs 13" in out


def test_solve_examples(capsys):
    code, out, _ = run(capsys, "solve", "--n", "6", "--bias", "1:1", "--first", "maker")
    assert code == 0 and out.splitlines()[0] == "maker in 3"
    code, out, _ = run(capsys, "solve", "--n", "6", "--bias", "1:2", "--first", "maker")
    assert code == 0 and out.splitlines()[0] == "breaker"
    code, out, _ = run(capsys, "solve", "--n", "5", "--bias", "1:1", "--first", "breaker")
    assert code == 0 and out.splitlines()[0] == "maker in 2"


def test_solve_feasibility(capsys):
    code, _, err = run(capsys, "solve", "--n", "9", "--bias", "1:1")
    assert code == 2 and "solver limited" in err


def test_solve_standard_flag(capsys):
    code, out, _ = run(capsys, "solve", "--n", "5", "--bias", "1:2", "--standard")
    assert code == 0 and out.splitlines()[0] == "breaker"
    code, _, err = run(capsys, "solve", "--n", "5", "--bias", "1:1", "--standard")
    assert code == 2 and "--standard" in err


def test_selfridge_golden(capsys):
    code, out, _ = run(capsys, "selfridge", "--n", "5", "--bias", "1:2")
    assert code == 0
    assert out == "winning sets: 5 of size 2\n5/9 >= 1/3: criterion inconclusive\n"


def test_playout_deterministic(capsys):
    code, out, _ = run(
        capsys, "playout", "--n", "8", "--seed", "5", "--maker", "paper_maker",
        "--breaker", "random",
    )
    assert code == 0
    assert "seed: 5" in out
    assert "winner: maker (maker moves 5" in out
    code, out2, _ = run(
        capsys, "playout", "--n", "8", "--seed", "5", "--maker", "paper_maker",
        "--breaker", "random",
    )
    assert out == out2


def test_play_quick_win(capsys):
    import argparse

    from triblock.cli import cmd_play

    feed = iter(["0-1", "0-2"])  # first input is illegal and re-prompts
    args = argparse.Namespace(n=4, human="maker", bias="1:1", first="maker")
    rc = cmd_play(args, input_fn=lambda prompt: next(feed))
    out = capsys.readouterr().out
    assert rc == 0
    assert "illegal move" in out
    assert "result: maker_won" in out
    assert "winning triangulation: 0-2" in out


def test_play_breaker_double_opening(capsys):
    import argparse

    from triblock.cli import cmd_play

    prompts = []
    feed = iter(["1-3", "1-3,2-4", "0-4", "2-5", "3-5"])

    def scripted(prompt):
        prompts.append(prompt)
        return next(feed)

    args = argparse.Namespace(n=6, human="breaker", bias="1:2", first="maker")
    rc = cmd_play(args, input_fn=scripted)
    out = capsys.readouterr().out
    assert rc == 0
    # the opening turn asks for two diagonals; a single one re-prompts
    assert prompts[0] == "your move (2 diagonal(s)): "
    assert "illegal move" in out
    assert prompts[1] == "your move (2 diagonal(s)): "
    assert prompts[2] == "your move (1 diagonal(s)): "
    assert "result:" in out


def test_play_as_breaker(capsys):
    import argparse

    from triblock.cli import cmd_play

    taken = []

    def scripted(prompt):
        # claim the first free diagonal each turn, parsed from the shown board
        for i in range(6):
            for j in range(i + 2, min(i + 5, 6)):
                token = f"{i}-{j}"
                if token not in taken:
                    taken.append(token)
                    return token
        raise AssertionError("board exhausted")

    args = argparse.Namespace(n=6, human="breaker", bias="1:1", first="maker")
    rc = cmd_play(args, input_fn=scripted)
    out = capsys.readouterr().out
    assert rc == 0 and "result:" in out


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "triblock", "triangulations"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "triblock", "selfridge", "--n", "8", "--bias", "1:2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "winning sets: 132" in proc.stdout
    assert "44/81 >= 1/3" in proc.stdout  # 132/243 in lowest terms
