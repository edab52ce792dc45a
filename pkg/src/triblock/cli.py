"""Command-line entry point: one subcommand per engine capability.

Exit codes: 0 success, 1 verification mismatch (so CI can gate on
agreement between independent routes), 2 usage or feasibility error.
Machine formats (lines, csv) are stable across releases.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import counting
from .blockers import (
    blocker_report,
    brute_force_blockers,
    dedupe_rotations,
    enumerate_blockers,
)
from .game import (
    GameConfig,
    GameError,
    Player,
    Status,
    apply_move,
    erdos_selfridge_potential,
    new_game,
    play_out,
    solve,
)
from .polygon import DiagonalSet, InvalidDiagonalError, parse_diagonal
from .service import BIASES
from .triangulation import (
    FeasibilityError,
    enumerate_triangulations,
    triangulation_count,
)

DEFAULT_SEED = 20240 + 613
ENUMERATION_LIMIT = 14
STRUCTURAL_LIMIT = 12

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _bias(text: str) -> dict:
    if text not in BIASES:
        raise UsageError(f"bias must be one of {sorted(BIASES)}, got {text!r}")
    return BIASES[text]


def _parse_edges(n: int, text: str) -> DiagonalSet:
    edges = DiagonalSet.empty(n)
    position = 0
    for token in text.split(","):
        try:
            edges = edges.add(parse_diagonal(n, token))
        except InvalidDiagonalError as exc:
            raise UsageError(f"bad edge at position {position} ({token.strip()!r}): {exc}") from None
        position += 1
    return edges


# ---------------------------------------------------------------------------
# subcommands


def cmd_triangulations(args) -> int:
    n = args.n
    if args.count_only:
        print(triangulation_count(n))
        return EXIT_OK
    if not 4 <= n <= ENUMERATION_LIMIT:
        raise UsageError(
            f"enumeration is practical for 4 <= n <= {ENUMERATION_LIMIT}; use --count-only"
        )
    count = 0
    for t in enumerate_triangulations(n):
        count += 1
        if args.format == "csv":
            print(f"{count},{t.text()}")
        else:
            print(t.text())
    if args.format == "human":
        print(f"{count} triangulations of the {n}-gon")
    return EXIT_OK


def cmd_blockers(args) -> int:
    n = args.n
    oracles = args.oracle or ["structural"]
    up_to_rotation = not args.total
    families = {}
    for oracle in oracles:
        if oracle == "structural":
            if n > STRUCTURAL_LIMIT:
                raise UsageError(f"structural enumeration guarded to n <= {STRUCTURAL_LIMIT}")
            sets = list(enumerate_blockers(n, up_to_rotation=up_to_rotation))
        else:
            found = brute_force_blockers(n)
            sets = dedupe_rotations(found) if up_to_rotation else found
        families[oracle] = sets

    primary = families[oracles[0]]
    writer = csv.writer(sys.stdout) if args.format == "csv" else None
    for k, s in enumerate(primary):
        if writer:
            writer.writerow([k, s.text()])
        else:
            print(s.text())
    label = "up to rotation" if up_to_rotation else "total"
    if args.format == "human":
        print(f"{len(primary)} blockers ({label}) for n={n}")
        if not up_to_rotation and n >= 5:
            print(
                f"note: total = n x rotation classes = {n} x {len(primary)//n} "
                "(derived identity, oracle-verified for 5 <= n <= 9; the n=4 "
                "blocker is rotation-invariant)"
            )
    else:
        print(len(primary))

    if len(families) == 2:
        a, b = (frozenset(s.bits for s in fam) for fam in families.values())
        if a == b:
            print("oracle agreement: structural == brute-force")
        else:
            print("oracle MISMATCH: structural != brute-force", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    edges = _parse_edges(args.n, args.edges)
    report = blocker_report(edges)
    if args.format == "kv":
        rows = {
            "n": report.n,
            "edges": report.edges.text(),
            "blocking": report.is_blocking,
            "size": report.size,
            "minimum_size": report.is_minimum_size,
            "blocker": report.is_blocker,
        }
        if report.structure:
            st = report.structure
            rows["structure"] = f"a={st.offset} m={st.net} beams={list(st.beams)}"
        else:
            rows["structure"] = f"none ({report.structure_failure})"
        for check in report.observations:
            rows[f"check_{check.name}"] = check.passed
        for key, value in rows.items():
            print(f"{key}={str(value).lower() if isinstance(value, bool) else value}")
    else:
        print(f"edges: {report.edges.text()} (n={report.n})")
        print(f"blocking: {'yes' if report.is_blocking else 'no'}")
        print(f"size: {report.size} ({'minimum' if report.is_minimum_size else 'not minimum'};"
              f" minimum is {report.n - 2})")
        print(f"blocker: {'yes' if report.is_blocker else 'no'}")
        if report.structure:
            st = report.structure
            print(f"structure: offset a={st.offset}, net m={st.net} "
                  f"({st.ear_count()} ear-covers), beams={list(st.beams)}")
        else:
            print(f"structure: none ({report.structure_failure})")
        for check in report.observations:
            verdict = "pass" if check.passed else f"FAIL ({check.witness})"
            print(f"observation {check.name}: {verdict}")
    return EXIT_OK


def cmd_count(args) -> int:
    n_max = args.n_max
    if n_max > 200:
        raise UsageError("counting guarded to n <= 200")
    status = EXIT_OK
    writer = csv.writer(sys.stdout) if args.format == "csv" else None
    if writer:
        writer.writerow(["n", "f", "fibonacci", "per_k", "match"])
    for n in range(4, n_max + 1):
        total = counting.f_total(n)
        formula = counting.blocker_count_formula(n)
        per_k = ";".join(f"{k}={counting.f_k(n, k)}" for k in range(2, n - 1))
        match = total == formula
        if not match:
            status = EXIT_MISMATCH
        if writer:
            writer.writerow([n, total, formula, per_k, str(match).lower()])
        elif args.format == "lines":
            print(f"{n},{total},{formula},{per_k}")
        else:
            print(f"n={n}: f(n)={total} fibonacci={formula} "
                  f"{'ok' if match else 'MISMATCH'} per-k: {per_k}")
    if args.identities:
        report = counting.verify_identities(max(n_max, 8))
        ok = report.weighted_ok
        print(f"weighted recurrence f(n) = sum k*f(n-k): "
              f"{'holds' if not report.game_identity_failures else 'FAILS'} "
              f"for 5 <= n <= {report.n_max}")
        print(f"weighted fibonacci identity F_2n = sum k*F_2n-2k: "
              f"{'holds' if not report.weighted_fib_failures else 'FAILS'} "
              f"for 1 <= n <= {report.n_max}")
        mismatches = report.printed_form_mismatches
        first = next((c for c in mismatches if c.n == 4), mismatches[0] if mismatches else None)
        if first is not None:
            print(f"unweighted form F_2n = sum F_2n-2k: fails as expected "
                  f"(n={first.n}: {first.lhs} vs {first.rhs})")
        else:
            print("unweighted form F_2n = sum F_2n-2k: unexpectedly holds", file=sys.stderr)
            status = EXIT_MISMATCH
        if not ok:
            status = EXIT_MISMATCH
    return status


def cmd_solve(args) -> int:
    bias = _bias(args.bias)
    if args.standard and args.bias != "1:2":
        raise UsageError("--standard only applies to --bias 1:2")
    result = solve(
        args.n,
        maker_per_turn=bias["maker_per_turn"],
        breaker_per_turn=2 if args.standard else bias["breaker_per_turn"],
        first_mover=Player(args.first),
        double_first=bias["breaker_double_first"] and not args.standard,
        allow_large=args.allow_large,
    )
    if result.winner is Player.MAKER:
        print(f"maker in {result.maker_moves}")
    else:
        print("breaker")
    print(f"states visited: {result.states}")
    return EXIT_OK


def cmd_selfridge(args) -> int:
    bias = _bias(args.bias)
    b = 2 if bias["breaker_double_first"] else bias["breaker_per_turn"]
    report = erdos_selfridge_potential(args.n, bias["maker_per_turn"], b)
    print(f"winning sets: {report.winning_sets} of size {args.n - 3}")
    print(report.verdict())
    return EXIT_OK


def cmd_playout(args) -> int:
    bias = _bias(args.bias)
    config = GameConfig(
        args.n,
        maker_per_turn=bias["maker_per_turn"],
        breaker_per_turn=bias["breaker_per_turn"],
        first_mover=Player(args.first),
        breaker_double_first=bias["breaker_double_first"],
    )
    print(f"seed: {args.seed}")
    transcript = play_out(config, args.maker, args.breaker, seed=args.seed)
    for record in transcript.records:
        chords = ",".join(d.text() for d in record.diagonals)
        print(f"{record.index}: {record.player.value} {chords} -> {record.status_after.value}")
    print(f"winner: {transcript.winner.value} "
          f"(maker moves {transcript.maker_moves}, breaker turns {transcript.breaker_turns})")
    if transcript.witness:
        print(f"witness: {transcript.witness.text()}")
    return EXIT_OK


def cmd_play(args, input_fn=input) -> int:
    from .service import _engine_strategy

    bias = _bias(args.bias)
    config = GameConfig(
        args.n,
        maker_per_turn=bias["maker_per_turn"],
        breaker_per_turn=bias["breaker_per_turn"],
        first_mover=Player(args.first),
        breaker_double_first=bias["breaker_double_first"],
    )
    human = Player(args.human)
    engine = _engine_strategy(config, human.opponent)
    state = new_game(config)

    def show() -> None:
        print(f"maker:   {state.maker.text() or '-'}")
        print(f"breaker: {state.breaker.text() or '-'}")

    print(f"you are {human.value} on the {args.n}-gon (bias {args.bias}); "
          f"enter moves like 0-2 or 0-2,1-3")
    while state.status is Status.ONGOING:
        if state.to_move is human:
            show()
            quota = min(state.quota(), len(state.unclaimed()))
            try:
                line = input_fn(f"your move ({quota} diagonal(s)): ")
            except EOFError:
                print("bye")
                return EXIT_OK
            try:
                move = [parse_diagonal(config.n, tok) for tok in line.split(",")]
                state = apply_move(state, human, move)
            except (InvalidDiagonalError, GameError) as exc:
                print(f"illegal move: {exc}")
                continue
        else:
            move = engine.moves(state)
            state = apply_move(state, state.to_move, move)
            print(f"engine plays {','.join(d.text() for d in move)}")
    show()
    print(f"result: {state.status.value}")
    if state.witness:
        print(f"winning triangulation: {state.witness.text()}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    static = Path(args.static) if args.static else None
    if static is not None and not static.is_dir():
        raise UsageError(f"static directory {static} does not exist")
    snapshot = Path(args.snapshot) if args.snapshot else None
    print(f"serving on http://127.0.0.1:{args.port}/api/v1 "
          f"(static: {static or 'none'})")
    serve(args.port, static, snapshot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triblock",
        description="Triangulation blockers of a convex n-gon and the "
        "triangulation Maker-Breaker game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("human", "lines", "csv")):
        p.add_argument("--format", choices=choices, default="human",
                       help="output format; lines/csv are stable for scripting")

    p = sub.add_parser("triangulations", help="enumerate or count triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true",
                   help="print the Catalan count only (works for any n)")
    add_format(p)
    p.set_defaults(func=cmd_triangulations)

    p = sub.add_parser("blockers", help="enumerate blockers")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--total", action="store_true",
                       help="all blockers, not just rotation classes")
    group.add_argument("--up-to-rotation", action="store_true",
                       help="one canonical representative per class (default)")
    p.add_argument("--oracle", action="append", choices=["structural", "brute"],
                   help="repeatable; with both, an equality verdict is emitted "
                        "(exit 1 on mismatch). csv columns: index,edges")
    add_format(p)
    p.set_defaults(func=cmd_blockers)

    p = sub.add_parser("verify", help="full report on one edge set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", required=True, help='comma-separated, e.g. "0-2,1-3"')
    add_format(p, choices=("human", "kv"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="f(n) table with per-net-length breakdown")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--identities", action="store_true",
                   help="check the weighted summation identities "
                        "(csv columns: n,f,fibonacci,per_k,match)")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solve", help="exact game value on small boards")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bias", choices=sorted(BIASES), default="1:1")
    p.add_argument("--first", choices=["maker", "breaker"], default="maker")
    p.add_argument("--standard", action="store_true",
                   help="with --bias 1:2: Breaker takes two diagonals every "
                        "turn instead of only on his first")
    p.add_argument("--allow-large", action="store_true",
                   help="raise the feasibility guard by one")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("selfridge", help="biased potential-function criterion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bias", choices=sorted(BIASES), default="1:2")
    p.set_defaults(func=cmd_selfridge)

    p = sub.add_parser("playout", help="scripted game between two strategies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bias", choices=sorted(BIASES), default="1:1")
    p.add_argument("--first", choices=["maker", "breaker"], default="maker")
    p.add_argument("--maker", default="paper_maker",
                   choices=["paper_maker", "random", "first_available"])
    p.add_argument("--breaker", default="random",
                   choices=["paper_breaker", "random", "first_available"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="seed for randomized strategies (default fixed, printed)")
    p.set_defaults(func=cmd_playout)

    p = sub.add_parser("play", help="interactive terminal game against the engine")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--human", choices=["maker", "breaker"], default="maker")
    p.add_argument("--bias", choices=sorted(BIASES), default="1:1")
    p.add_argument("--first", choices=["maker", "breaker"], default="maker")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of built web-ui assets to serve at /")
    p.add_argument("--snapshot", help="file for session persistence across restarts")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
