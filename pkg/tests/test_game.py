"""Rules engine, optimal strategies, solver, and the potential criterion."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from triblock.blockers import is_blocker, parse_structure
from triblock.game import (
    ArityError,
    GameConfig,
    GameFinishedError,
    MalformedMoveError,
    OccupiedError,
    Player,
    Status,
    StrategyError,
    WrongTurnError,
    apply_move,
    breaker_strategy_moves,
    breaker_turn_count,
    disjoint_blocker_completion,
    erdos_selfridge_potential,
    fresh_breaker_memory,
    fresh_maker_memory,
    maker_move_count,
    maker_strategy_move,
    new_game,
    play_out,
    reconstruct_breaker_memory,
    reconstruct_maker_memory,
    solve,
    solve_state,
    verify_breaker_strategy,
    verify_maker_strategy,
)
from triblock.polygon import DiagonalSet, make_diagonal
from triblock.triangulation import FeasibilityError, is_triangulation


def d(n, a, b):
    return make_diagonal(n, a, b)


# ---------------------------------------------------------------------------
# rules engine


def test_maker_wins_immediately_on_the_square():
    state = apply_move(new_game(GameConfig(4)), Player.MAKER, [d(4, 0, 2)])
    assert state.status is Status.MAKER_WON
    assert state.witness == DiagonalSet.from_text(4, "0-2")
    with pytest.raises(GameFinishedError):
        apply_move(state, Player.BREAKER, [d(4, 1, 3)])


def test_breaker_wins_once_his_set_blocks():
    # Breaker assembles a 5-gon blocker while Maker wastes moves
    config = GameConfig(5, first_mover=Player.BREAKER)
    state = new_game(config)
    state = apply_move(state, Player.BREAKER, [d(5, 0, 2)])
    state = apply_move(state, Player.MAKER, [d(5, 0, 3)])
    state = apply_move(state, Player.BREAKER, [d(5, 1, 3)])
    state = apply_move(state, Player.MAKER, [d(5, 1, 4)])
    state = apply_move(state, Player.BREAKER, [d(5, 2, 4)])
    assert state.status is Status.BREAKER_WON
    assert is_blocker(state.breaker)


def test_move_validation_errors():
    state = new_game(GameConfig(6))
    with pytest.raises(WrongTurnError):
        apply_move(state, Player.BREAKER, [d(6, 0, 2)])
    with pytest.raises(ArityError):
        apply_move(state, Player.MAKER, [d(6, 0, 2), d(6, 1, 3)])
    with pytest.raises(MalformedMoveError):
        apply_move(state, Player.MAKER, [(0, 1)])
    with pytest.raises(MalformedMoveError):
        apply_move(state, Player.MAKER, [(0, 99)])
    state = apply_move(state, Player.MAKER, [d(6, 0, 2)])
    with pytest.raises(OccupiedError):
        apply_move(state, Player.BREAKER, [d(6, 0, 2)])
    with pytest.raises(OccupiedError):
        apply_move(
            new_game(GameConfig(6, breaker_double_first=True, first_mover=Player.BREAKER)),
            Player.BREAKER,
            [d(6, 1, 3), d(6, 1, 3)],
        )


def test_double_first_quota():
    config = GameConfig(6, breaker_double_first=True)
    state = apply_move(new_game(config), Player.MAKER, [d(6, 0, 2)])
    assert state.quota() == 2
    with pytest.raises(ArityError):
        apply_move(state, Player.BREAKER, [d(6, 1, 3)])
    state = apply_move(state, Player.BREAKER, [d(6, 1, 3), d(6, 2, 4)])
    state = apply_move(state, Player.MAKER, [d(6, 0, 3)])
    assert state.quota() == 1  # single claims from the second turn on


def test_config_validation():
    with pytest.raises(ValueError):
        GameConfig(3)
    with pytest.raises(ValueError):
        GameConfig(6, maker_per_turn=0)
    with pytest.raises(ValueError):
        GameConfig(6, breaker_per_turn=2, breaker_double_first=True)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rules_engine_invariants_hold_on_any_legal_game(data):
    n = data.draw(st.integers(min_value=4, max_value=9))
    config = GameConfig(
        n,
        maker_per_turn=data.draw(st.integers(min_value=1, max_value=2)),
        breaker_per_turn=data.draw(st.integers(min_value=1, max_value=3)),
        first_mover=data.draw(st.sampled_from([Player.MAKER, Player.BREAKER])),
    )
    state = new_game(config)
    while state.status is Status.ONGOING:
        pool = list(state.unclaimed())
        take = min(state.quota(), len(pool))
        move = data.draw(
            st.permutations(pool).map(lambda chosen: tuple(chosen[:take]))
        )
        prev = state
        state = apply_move(state, state.to_move, move)
        assert state.maker.isdisjoint(state.breaker)
        assert state.move_index == prev.move_index + 1
        assert prev.maker.issubset(state.maker) and prev.breaker.issubset(state.breaker)
    # terminal conditions exactly as defined
    if state.status is Status.MAKER_WON:
        assert state.witness is not None
        assert is_triangulation(state.witness) and state.witness.issubset(state.maker)
    else:
        from triblock.triangulation import contains_triangulation

        assert contains_triangulation(state.breaker.complement()) is None
    with pytest.raises(GameFinishedError):
        apply_move(state, state.to_move, [])


def test_claims_stay_disjoint_and_status_monotone():
    rng = random.Random(5)
    for _ in range(30):
        config = GameConfig(
            8,
            breaker_per_turn=rng.choice([1, 2]),
            first_mover=rng.choice([Player.MAKER, Player.BREAKER]),
        )
        state = new_game(config)
        while state.status is Status.ONGOING:
            pool = list(state.unclaimed())
            take = min(state.quota(), len(pool))
            state = apply_move(state, state.to_move, rng.sample(pool, take))
            assert state.maker.isdisjoint(state.breaker)
        if state.status is Status.MAKER_WON:
            assert state.witness is not None and state.witness.issubset(state.maker)
        else:
            assert state.witness is None


# ---------------------------------------------------------------------------
# Maker's strategy


def test_maker_answers_breaker_opening_at_its_endpoint():
    config = GameConfig(5, first_mover=Player.BREAKER)
    state = apply_move(new_game(config), Player.BREAKER, [d(5, 0, 2)])
    chord, memory = maker_strategy_move(state, fresh_maker_memory(5))
    assert chord == d(5, 4, 1)
    assert memory.alive == (1, 2, 3, 4)


def test_maker_opens_with_the_smallest_ear():
    state = new_game(GameConfig(6))
    chord, _ = maker_strategy_move(state, fresh_maker_memory(6))
    assert chord == d(6, 5, 1)


def test_maker_ignores_dead_chords():
    state = new_game(GameConfig(6))
    memory = fresh_maker_memory(6)
    chord, memory = maker_strategy_move(state, memory)
    state = apply_move(state, Player.MAKER, [chord])  # cuts vertex 0
    state = apply_move(state, Player.BREAKER, [d(6, 0, 4)])  # endpoint off R: dead
    chord, memory = maker_strategy_move(state, memory)
    assert chord == d(6, 5, 2)  # ear of the smallest alive vertex 1


def test_maker_strategy_guards():
    with pytest.raises(StrategyError):
        maker_strategy_move(
            new_game(GameConfig(6, breaker_double_first=True)), fresh_maker_memory(6)
        )
    state = apply_move(new_game(GameConfig(6)), Player.MAKER, [d(6, 0, 2)])
    with pytest.raises(StrategyError):
        maker_strategy_move(state, fresh_maker_memory(6))  # breaker's turn
    state = apply_move(state, Player.BREAKER, [d(6, 1, 3)])
    with pytest.raises(StrategyError):
        # memory claims no cut happened, history says one move was made
        maker_strategy_move(state, fresh_maker_memory(6))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("breaker_first", [False, True])
def test_maker_exhaustive(n, breaker_first):
    report = verify_maker_strategy(n, breaker_first=breaker_first)
    assert report.maker_moves_min == report.maker_moves_max == n - 3
    assert report.leaves > 0


def test_maker_claims_become_reduced_boundary():
    # each cut turns the claimed ear into a boundary chord of the reduced
    # polygon (it stays one until an endpoint is cut in a later move)
    state = new_game(GameConfig(9))
    memory = fresh_maker_memory(9)
    rng = random.Random(1)
    while state.status is Status.ONGOING:
        if state.to_move is Player.MAKER:
            chord, memory = maker_strategy_move(state, memory)
            state = apply_move(state, Player.MAKER, [chord])
            assert chord in set(memory.boundary_chords(9).values())
        else:
            state = apply_move(
                state, Player.BREAKER, [rng.choice(list(state.unclaimed()))]
            )
    assert state.status is Status.MAKER_WON


def test_reconstruct_maker_memory():
    transcript_state = new_game(GameConfig(6))
    memory = fresh_maker_memory(6)
    state = transcript_state
    while state.status is Status.ONGOING and state.to_move is Player.MAKER:
        chord, memory = maker_strategy_move(state, memory)
        state = apply_move(state, Player.MAKER, [chord])
        if state.status is Status.ONGOING:
            state = apply_move(state, Player.BREAKER, [next(iter(state.unclaimed()))])
        rebuilt = reconstruct_maker_memory(state)
        assert rebuilt is not None and set(rebuilt.alive) == set(memory.alive)
    # a non-ear claim defeats reconstruction
    bad = apply_move(new_game(GameConfig(8)), Player.MAKER, [d(8, 0, 4)])
    assert reconstruct_maker_memory(bad) is None


# ---------------------------------------------------------------------------
# Breaker's strategy


def test_breaker_opening_picks_smallest_clear_anchor():
    config = GameConfig(5, breaker_double_first=True)
    state = apply_move(new_game(config), Player.MAKER, [d(5, 0, 2)])
    moves, memory = breaker_strategy_moves(state, fresh_breaker_memory(5))
    assert memory.anchor == 2
    assert set(moves) == {d(5, 2, 4), d(5, 3, 0)}


def test_breaker_pairing_response():
    config = GameConfig(7, breaker_double_first=True)
    state = apply_move(new_game(config), Player.MAKER, [d(7, 4, 6)])
    memory = fresh_breaker_memory(7)
    moves, memory = breaker_strategy_moves(state, memory)
    a = memory.anchor
    assert a == 0  # neither 1 nor 2 is an endpoint of 4-6
    state = apply_move(state, Player.BREAKER, moves)
    # Maker grabs a pair chord: Breaker answers with its partner
    state = apply_move(state, Player.MAKER, [d(7, 4, 1)])
    moves, memory = breaker_strategy_moves(state, memory)
    assert moves == (d(7, 4, 2),)
    assert 4 in memory.secured
    state = apply_move(state, Player.BREAKER, moves)
    # Maker plays far from the pairs: Breaker secures the smallest open pair
    state = apply_move(state, Player.MAKER, [d(7, 5, 3)])
    moves, memory = breaker_strategy_moves(state, memory)
    assert moves == (d(7, 5, 1),)


def test_breaker_strategy_guards():
    with pytest.raises(StrategyError):
        breaker_strategy_moves(
            new_game(GameConfig(4, breaker_double_first=True)), fresh_breaker_memory(4)
        )
    with pytest.raises(StrategyError):
        breaker_strategy_moves(new_game(GameConfig(6)), fresh_breaker_memory(6))
    config = GameConfig(6, breaker_double_first=True, first_mover=Player.BREAKER)
    with pytest.raises(StrategyError):
        breaker_strategy_moves(new_game(config), fresh_breaker_memory(6))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_breaker_exhaustive(n):
    report = verify_breaker_strategy(n)
    assert report.breaker_turns_max <= n - 3
    assert report.leaves > 0
    assert report.invariant_checks >= report.leaves
    # the nominal net is two ears; merged pair chords may enlarge the
    # recomputed run (at n=5 every pair chord is itself an ear-cover)
    if n == 5:
        assert report.net_ear_counts == (3,)
    else:
        assert 2 in report.net_ear_counts


def test_disjoint_completion_is_checked_mid_game():
    config = GameConfig(8, breaker_double_first=True)
    state = apply_move(new_game(config), Player.MAKER, [d(8, 2, 6)])
    memory = fresh_breaker_memory(8)
    moves, memory = breaker_strategy_moves(state, memory)
    state = apply_move(state, Player.BREAKER, moves)
    completion = disjoint_blocker_completion(state, memory)
    assert completion.isdisjoint(state.maker)
    assert is_blocker(completion)


def test_reconstruct_breaker_memory():
    transcript = play_out(
        GameConfig(8, breaker_double_first=True), "random", "paper_breaker", seed=3
    )
    state = new_game(transcript.config)
    for record in transcript.records:
        state = apply_move(state, record.player, record.diagonals)
        rebuilt = reconstruct_breaker_memory(state)
        assert rebuilt is not None
    # a non-pairing breaker history yields None
    state = new_game(GameConfig(8, breaker_double_first=True))
    state = apply_move(state, Player.MAKER, [d(8, 0, 2)])
    state = apply_move(state, Player.BREAKER, [d(8, 1, 4), d(8, 2, 7)])
    assert reconstruct_breaker_memory(state) is None


# ---------------------------------------------------------------------------
# play_out


def test_play_out_examples():
    t = play_out(GameConfig(10), "paper_maker", "random", seed=1)
    assert t.status is Status.MAKER_WON and t.maker_moves == 7
    assert is_triangulation(t.witness)
    t = play_out(
        GameConfig(10, breaker_double_first=True), "random", "paper_breaker", seed=1
    )
    assert t.status is Status.BREAKER_WON and t.breaker_turns <= 7
    t = play_out(GameConfig(4), "random", "random", seed=1)
    assert t.status is Status.MAKER_WON and t.maker_moves == 1


def test_play_out_deterministic_per_seed():
    a = play_out(GameConfig(9), "random", "random", seed=42).to_jsonable()
    b = play_out(GameConfig(9), "random", "random", seed=42).to_jsonable()
    c = play_out(GameConfig(9), "random", "random", seed=43).to_jsonable()
    assert a == b
    assert a != c


def test_play_out_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        play_out(GameConfig(6), "clever", "random")


@pytest.mark.parametrize("offset", [0, 1, 2])
def test_maker_beats_an_adversary_targeting_its_default(offset):
    # the spoiler always grabs the ear of the (offset+1)-th smallest alive
    # vertex, i.e. exactly the chord the strategy is about to want; this
    # drives the live-chord response branch on every single turn
    for n in range(5, 31, 5):
        state = new_game(GameConfig(n))
        memory = fresh_maker_memory(n)
        while state.status is Status.ONGOING:
            if state.to_move is Player.MAKER:
                chord, memory = maker_strategy_move(state, memory)
                state = apply_move(state, Player.MAKER, [chord])
            else:
                target = memory.alive[min(offset, len(memory.alive) - 1)]
                wanted = memory.ear(n, target)
                pool = state.unclaimed()
                pick = wanted if wanted in pool else next(iter(pool))
                state = apply_move(state, Player.BREAKER, [pick])
        assert state.status is Status.MAKER_WON
        assert maker_move_count(state) == n - 3


def test_randomized_soak_full():
    # both optimal strategies against 1000 seeded random adversaries per side
    for n in (6, 10, 25):
        for seed in range(1000):
            t = play_out(GameConfig(n), "paper_maker", "random", seed=seed)
            assert t.status is Status.MAKER_WON and t.maker_moves == n - 3
        if n >= 5:
            for seed in range(1000):
                t = play_out(
                    GameConfig(n, breaker_double_first=True),
                    "random",
                    "paper_breaker",
                    seed=seed,
                )
                assert t.status is Status.BREAKER_WON and t.breaker_turns <= n - 3


# ---------------------------------------------------------------------------
# solver


def test_solver_unbiased_small():
    for n in (4, 5, 6):
        result = solve(n)
        assert result.winner is Player.MAKER and result.maker_moves == n - 3


def test_solver_breaker_first_still_maker():
    result = solve(5, first_mover=Player.BREAKER)
    assert result.winner is Player.MAKER and result.maker_moves == 2


def test_solver_double_first_variant():
    for n in (5, 6):
        result = solve(n, breaker_per_turn=1, double_first=True)
        assert result.winner is Player.BREAKER and result.maker_moves is None


def test_solver_standard_one_two():
    # no stated reference value; the solver reports breaker on small boards
    result = solve(5, breaker_per_turn=2)
    assert result.winner is Player.BREAKER


def test_solver_guards():
    with pytest.raises(FeasibilityError):
        solve(8)
    with pytest.raises(FeasibilityError):
        solve(7, breaker_per_turn=1, double_first=True)
    with pytest.raises(FeasibilityError):
        solve(7, breaker_per_turn=2)
    # the override raises the guard by exactly one
    with pytest.raises(FeasibilityError):
        solve(9, allow_large=True)


def test_solver_canonicalization_flag_changes_nothing():
    for kwargs in (dict(), dict(breaker_per_turn=1, double_first=True)):
        a = solve(5, **kwargs)
        b = solve(5, canonicalize=True, **kwargs)
        assert (a.winner, a.maker_moves) == (b.winner, b.maker_moves)


def test_solver_best_move_is_playable():
    state = new_game(GameConfig(5))
    result = solve_state(state)
    assert result.winner is Player.MAKER
    nxt = apply_move(state, Player.MAKER, result.best_move)
    follow = solve_state(nxt)
    assert follow.winner is Player.MAKER
    assert follow.maker_moves == result.maker_moves - 1


# ---------------------------------------------------------------------------
# potential criterion


def test_selfridge_examples():
    report = erdos_selfridge_potential(5, 1, 2)
    assert report.potential == Fraction(5, 9)
    assert report.threshold == Fraction(1, 3)
    assert not report.implies_breaker_win
    report = erdos_selfridge_potential(8, 1, 2)
    assert report.potential == Fraction(132, 243)
    assert not report.implies_breaker_win
    report = erdos_selfridge_potential(10, 1, 1)
    assert report.potential == Fraction(1430, 128)
    assert not report.implies_breaker_win


def test_selfridge_never_fires_for_one_two():
    for n in range(5, 17):
        report = erdos_selfridge_potential(n, 1, 2)
        assert report.potential >= Fraction(1, 3)
        assert not report.implies_breaker_win


def test_selfridge_fractional_exponent():
    report = erdos_selfridge_potential(8, 2, 2)  # (n-3)/m = 5/2
    assert not report.exact
    assert isinstance(report.potential, float)
    # verdict rests on the exact integer comparison 132^2 < 3^(5-2)
    assert report.implies_breaker_win is (132**2 < 27)
    assert not report.implies_breaker_win


def test_selfridge_guard():
    with pytest.raises(FeasibilityError):
        erdos_selfridge_potential(17, 1, 2)
