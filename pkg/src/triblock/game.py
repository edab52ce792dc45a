"""The triangulation Maker-Breaker game.

Board: the diagonals of a convex n-gon. Maker wins by owning a full
triangulation; Breaker wins once no triangulation can avoid his claims,
i.e. his set blocks. The module holds the rules engine, the two optimal
strategies (Maker at 1:1 via ear cutting, Breaker at 1:2 via a pairing on
two anchored ear-covers), exhaustive adversarial verification of both, an
exact solver for small boards, and the biased potential-function criterion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional, Sequence

from .blockers import is_blocker, parse_structure
from .polygon import (
    Diagonal,
    DiagonalSet,
    InvalidDiagonalError,
    all_diagonals,
    check_polygon_size,
    crosses,
    diagonal_count,
    make_diagonal,
    rotate_diagonal,
)
from .triangulation import (
    FeasibilityError,
    catalan,
    contains_triangulation,
    enumerate_triangulations,
)


class Player(str, Enum):
    MAKER = "maker"
    BREAKER = "breaker"

    @property
    def opponent(self) -> "Player":
        return Player.BREAKER if self is Player.MAKER else Player.MAKER


class Status(str, Enum):
    ONGOING = "ongoing"
    MAKER_WON = "maker_won"
    BREAKER_WON = "breaker_won"


class GameError(Exception):
    code = "bad_request"


class WrongTurnError(GameError):
    code = "not_your_turn"


class OccupiedError(GameError):
    code = "occupied"


class MalformedMoveError(GameError):
    code = "bad_request"


class ArityError(GameError):
    code = "bad_request"


class GameFinishedError(GameError):
    code = "finished"


class StrategyError(GameError):
    """A strategy was used outside its supported bias/turn, or its memory
    does not match the game history."""


@dataclass(frozen=True)
class GameConfig:
    n: int
    maker_per_turn: int = 1
    breaker_per_turn: int = 1
    first_mover: Player = Player.MAKER
    breaker_double_first: bool = False

    def __post_init__(self) -> None:
        check_polygon_size(self.n)
        if self.maker_per_turn < 1 or self.breaker_per_turn < 1:
            raise ValueError("per-turn quotas must be >= 1")
        if self.breaker_double_first and self.breaker_per_turn != 1:
            raise ValueError(
                "the double-first variant takes two diagonals only on Breaker's "
                "first turn; set breaker_per_turn=1"
            )

    def bias_label(self) -> str:
        if self.breaker_double_first:
            return "1:2"
        return f"{self.maker_per_turn}:{self.breaker_per_turn}"


class Move(NamedTuple):
    player: Player
    diagonals: tuple[Diagonal, ...]


@dataclass(frozen=True)
class GameState:
    config: GameConfig
    maker: DiagonalSet
    breaker: DiagonalSet
    to_move: Player
    move_index: int
    history: tuple[Move, ...]
    status: Status
    witness: Optional[DiagonalSet]

    @property
    def n(self) -> int:
        return self.config.n

    def unclaimed(self) -> DiagonalSet:
        return (self.maker | self.breaker).complement()

    def quota(self) -> int:
        """Diagonals the side to move must claim (before board truncation)."""
        if self.to_move is Player.MAKER:
            return self.config.maker_per_turn
        if self.config.breaker_double_first and len(self.breaker) == 0:
            return 2
        return self.config.breaker_per_turn


def _evaluate(
    maker: DiagonalSet, breaker: DiagonalSet, mover: Player
) -> tuple[Status, Optional[DiagonalSet]]:
    n = maker.n
    if mover is Player.MAKER and len(maker) >= n - 3:
        witness = contains_triangulation(maker)
        if witness is not None:
            return Status.MAKER_WON, witness
    # a Maker claim moves a diagonal from unclaimed to maker, so the union
    # below only changes after Breaker moves
    if mover is Player.BREAKER and contains_triangulation(breaker.complement()) is None:
        return Status.BREAKER_WON, None
    return Status.ONGOING, None


def new_game(config: GameConfig) -> GameState:
    empty = DiagonalSet.empty(config.n)
    return GameState(
        config=config,
        maker=empty,
        breaker=empty,
        to_move=config.first_mover,
        move_index=0,
        history=(),
        status=Status.ONGOING,
        witness=None,
    )


def apply_move(state: GameState, player: Player, diagonals: Sequence[Diagonal]) -> GameState:
    """Apply one turn, enforcing the rules, and recompute the status."""
    if state.status is not Status.ONGOING:
        raise GameFinishedError(f"game already finished: {state.status.value}")
    if player is not state.to_move:
        raise WrongTurnError(f"it is {state.to_move.value}'s turn")
    given = tuple(diagonals)
    available = len(state.unclaimed())
    expected = min(state.quota(), available)
    if len(given) != expected:
        raise ArityError(f"expected {expected} diagonal(s) this turn, got {len(given)}")
    moves: list[Diagonal] = []
    for d in given:
        try:
            canonical = make_diagonal(state.n, d[0], d[1])
        except (InvalidDiagonalError, TypeError, ValueError, IndexError) as exc:
            raise MalformedMoveError(f"not a diagonal of the {state.n}-gon: {d!r} ({exc})") from None
        if canonical in state.maker or canonical in state.breaker:
            raise OccupiedError(f"diagonal {canonical.text()} is already claimed")
        if canonical in moves:
            raise OccupiedError(f"diagonal {canonical.text()} repeated within the move")
        moves.append(canonical)
    moves = tuple(moves)

    claimed = DiagonalSet.of(state.n, moves)
    maker = state.maker | claimed if player is Player.MAKER else state.maker
    breaker = state.breaker | claimed if player is Player.BREAKER else state.breaker
    status, witness = _evaluate(maker, breaker, player)
    if status is Status.ONGOING and len(maker) + len(breaker) == diagonal_count(state.n):
        # board exhausted without a Maker triangulation: Maker can never win
        status = Status.BREAKER_WON
    return GameState(
        config=state.config,
        maker=maker,
        breaker=breaker,
        to_move=player.opponent,
        move_index=state.move_index + 1,
        history=state.history + (Move(player, moves),),
        status=status,
        witness=witness,
    )


def maker_move_count(state: GameState) -> int:
    return sum(1 for m in state.history if m.player is Player.MAKER)


def breaker_turn_count(state: GameState) -> int:
    return sum(1 for m in state.history if m.player is Player.BREAKER)


# ---------------------------------------------------------------------------
# Maker's (1:1) strategy: ear cutting on a shrinking polygon


@dataclass(frozen=True)
class MakerMemory:
    """The reduced polygon: alive vertex labels in ascending (cyclic) order.

    Each Maker move claims the ear of one alive vertex (the chord joining
    its alive neighbours) and removes it, so a chord between R-adjacent
    alive vertices is exactly an original boundary edge or a chord Maker
    already owns.
    """

    alive: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.alive)

    def neighbours(self, v: int) -> tuple[int, int]:
        pos = self.alive.index(v)
        return (
            self.alive[pos - 1],
            self.alive[(pos + 1) % len(self.alive)],
        )

    def ear(self, n: int, v: int) -> Diagonal:
        pred, succ = self.neighbours(v)
        return make_diagonal(n, pred, succ)

    def is_live(self, d: Diagonal) -> bool:
        """Both endpoints alive and not adjacent on the reduced polygon."""
        if d.i not in self.alive or d.j not in self.alive:
            return False
        pred, succ = self.neighbours(d.i)
        return d.j not in (pred, succ)

    def cut(self, v: int) -> "MakerMemory":
        return MakerMemory(tuple(u for u in self.alive if u != v))

    def boundary_chords(self, n: int) -> dict[tuple[int, int], Diagonal]:
        """Map from reduced-polygon adjacency to the original chord."""
        out = {}
        for pos, v in enumerate(self.alive):
            w = self.alive[(pos + 1) % len(self.alive)]
            lo, hi = min(v, w), max(v, w)
            if 2 <= hi - lo <= n - 2:
                out[(v, w)] = Diagonal(lo, hi)
        return out


def fresh_maker_memory(n: int) -> MakerMemory:
    check_polygon_size(n)
    return MakerMemory(tuple(range(n)))


def maker_strategy_move(state: GameState, memory: MakerMemory) -> tuple[Diagonal, MakerMemory]:
    """One move of the ear-cutting strategy; returns the updated memory.

    Call Breaker's chord live if both endpoints are alive and non-adjacent
    on the reduced polygon. At Maker's turn at most one Breaker chord is
    live (asserted); if one is, cut its smaller-label endpoint, otherwise
    cut the smallest alive vertex. Either way the claimed chord is the cut
    vertex's ear on the reduced polygon, which is provably unclaimed.
    After n-3 moves Maker owns a triangulation.
    """
    cfg = state.config
    if cfg.maker_per_turn != 1 or cfg.breaker_per_turn != 1 or cfg.breaker_double_first:
        raise StrategyError("the ear-cutting strategy supports only the (1:1) game")
    if state.to_move is not Player.MAKER:
        raise StrategyError("not Maker's turn")
    if len(memory) != state.n - len(state.maker):
        raise StrategyError("memory inconsistent with the number of Maker moves")

    live = [d for d in state.breaker if memory.is_live(d)]
    if len(live) > 1:
        raise StrategyError(f"live-chord invariant violated: {[d.text() for d in live]}")

    cut = min(live[0]) if live else memory.alive[0]
    chord = memory.ear(state.n, cut)
    if chord in state.maker or chord in state.breaker:
        raise StrategyError(f"strategy chord {chord.text()} unexpectedly claimed")
    return chord, memory.cut(cut)


def reconstruct_maker_memory(state: GameState) -> Optional[MakerMemory]:
    """Rebuild the reduced polygon from Maker's claims, if they are a
    sequence of ear cuts; None otherwise."""
    memory = fresh_maker_memory(state.n)
    for move in state.history:
        if move.player is not Player.MAKER:
            continue
        if len(move.diagonals) != 1:
            return None
        chord = move.diagonals[0]
        candidates = [
            v for v in memory.alive if memory.ear(state.n, v) == chord
        ]
        if not candidates:
            return None
        memory = memory.cut(candidates[0])
    return memory


# ---------------------------------------------------------------------------
# Breaker's (1:2, double-first) strategy: pairing on two anchored ear-covers


@dataclass(frozen=True)
class BreakerMemory:
    """Anchor a and the pairing x -> {(x, a+1), (x, a+2)}.

    After the opening double move Breaker owns the ear-covers (a, a+2) and
    (a+1, a+3); every other vertex x owns a two-chord pair, and Breaker
    keeps the invariant that whenever Maker owns one element of a pair,
    Breaker owns the other. Securing one element of every pair yields a
    blocker with a two-ear net.
    """

    n: int
    anchor: Optional[int]
    secured: frozenset[int]

    def pair_vertices(self) -> tuple[int, ...]:
        assert self.anchor is not None
        banned = {(self.anchor + t) % self.n for t in range(4)}
        return tuple(v for v in range(self.n) if v not in banned)

    def pair(self, x: int) -> tuple[Diagonal, Diagonal]:
        assert self.anchor is not None
        return (
            make_diagonal(self.n, x, (self.anchor + 1) % self.n),
            make_diagonal(self.n, x, (self.anchor + 2) % self.n),
        )

    def pair_member(self, d: Diagonal) -> Optional[int]:
        """The pair vertex whose pair contains d, if any."""
        if self.anchor is None:
            return None
        for x in self.pair_vertices():
            if d in self.pair(x):
                return x
        return None


def fresh_breaker_memory(n: int) -> BreakerMemory:
    check_polygon_size(n)
    return BreakerMemory(n, None, frozenset())


def breaker_strategy_moves(
    state: GameState, memory: BreakerMemory
) -> tuple[tuple[Diagonal, ...], BreakerMemory]:
    """One Breaker turn of the pairing strategy; returns the updated memory.

    First turn (after Maker's opening): pick the smallest anchor a such
    that neither a+1 nor a+2 is an endpoint of the opening chord, and claim
    the two net ears. Later turns: if Maker's last chord hit a pair whose
    partner is free, take the partner; otherwise take (x, a+1) for the
    smallest unsecured x with both pair chords free. After n-3 turns the
    claimed set is exactly a blocker with a two-ear net.
    """
    n = state.n
    cfg = state.config
    if n < 5:
        raise StrategyError("the pairing strategy needs n >= 5; at n=4 Maker wins at once")
    if not (cfg.maker_per_turn == 1 and cfg.breaker_double_first):
        raise StrategyError("the pairing strategy supports only the (1:2) double-first game")
    if cfg.first_mover is not Player.MAKER:
        raise StrategyError("the pairing strategy expects Maker to open")
    if state.to_move is not Player.BREAKER:
        raise StrategyError("not Breaker's turn")

    if memory.anchor is None:
        if len(state.breaker) != 0 or len(state.maker) != 1:
            raise StrategyError("memory inconsistent: expected the position after Maker's opening")
        (opening,) = state.maker.members()
        endpoints = {opening.i, opening.j}
        anchor = next(
            a
            for a in range(n)
            if (a + 1) % n not in endpoints and (a + 2) % n not in endpoints
        )
        ears = (
            make_diagonal(n, anchor, (anchor + 2) % n),
            make_diagonal(n, (anchor + 1) % n, (anchor + 3) % n),
        )
        return ears, BreakerMemory(n, anchor, frozenset())

    claimed = state.maker | state.breaker
    last = state.history[-1]
    if last.player is not Player.MAKER:
        raise StrategyError("memory inconsistent: expected a Maker move before Breaker's turn")
    (maker_chord,) = last.diagonals

    hit = memory.pair_member(maker_chord)
    if hit is not None and hit not in memory.secured:
        first, second = memory.pair(hit)
        partner = second if maker_chord == first else first
        if partner not in claimed:
            return (partner,), replace(memory, secured=memory.secured | {hit})

    for x in sorted(set(memory.pair_vertices()) - memory.secured):
        first, second = memory.pair(x)
        if first not in claimed and second not in claimed:
            return (first,), replace(memory, secured=memory.secured | {x})
    raise StrategyError("no unsecured pair with both chords free; memory inconsistent")


def reconstruct_breaker_memory(state: GameState) -> Optional[BreakerMemory]:
    """Rebuild the pairing memory from Breaker's claims, if they follow the
    anchored-pairing shape; None otherwise."""
    n = state.n
    breaker_moves = [m for m in state.history if m.player is Player.BREAKER]
    if not breaker_moves:
        return fresh_breaker_memory(n)
    first = breaker_moves[0].diagonals
    if len(first) != 2:
        return None
    anchors = [
        a
        for a in range(n)
        if set(first)
        == {
            make_diagonal(n, a, (a + 2) % n),
            make_diagonal(n, (a + 1) % n, (a + 3) % n),
        }
    ]
    if not anchors:
        return None
    memory = BreakerMemory(n, anchors[0], frozenset())
    secured = set()
    for move in breaker_moves[1:]:
        for d in move.diagonals:
            x = memory.pair_member(d)
            if x is None:
                return None
            secured.add(x)
    return replace(memory, secured=frozenset(secured))


def disjoint_blocker_completion(state: GameState, memory: BreakerMemory) -> DiagonalSet:
    """A blocker untouched by Maker, obtained by completing the pair map
    with Maker-free elements. Its existence after every Breaker turn is why
    Maker can never finish a triangulation against the pairing strategy."""
    n = state.n
    assert memory.anchor is not None
    a = memory.anchor
    edges = [
        make_diagonal(n, a, (a + 2) % n),
        make_diagonal(n, (a + 1) % n, (a + 3) % n),
    ]
    for x in memory.pair_vertices():
        first, second = memory.pair(x)
        owned = [d for d in (first, second) if d in state.breaker]
        if owned:
            edges.append(owned[0])
        elif first not in state.maker:
            edges.append(first)
        elif second not in state.maker:
            edges.append(second)
        else:
            raise AssertionError(f"Maker owns both pair chords of vertex {x}")
    return DiagonalSet.of(n, edges)


# ---------------------------------------------------------------------------
# playable strategies


class PaperMaker:
    name = "paper_maker"

    def __init__(self, config: GameConfig, rng: random.Random | None = None) -> None:
        self.memory = fresh_maker_memory(config.n)

    def moves(self, state: GameState) -> tuple[Diagonal, ...]:
        chord, self.memory = maker_strategy_move(state, self.memory)
        return (chord,)


class PaperBreaker:
    name = "paper_breaker"

    def __init__(self, config: GameConfig, rng: random.Random | None = None) -> None:
        self.memory = fresh_breaker_memory(config.n)

    def moves(self, state: GameState) -> tuple[Diagonal, ...]:
        chords, self.memory = breaker_strategy_moves(state, self.memory)
        return chords


class RandomStrategy:
    name = "random"

    def __init__(self, config: GameConfig, rng: random.Random | None = None) -> None:
        self.rng = rng or random.Random(0)

    def moves(self, state: GameState) -> tuple[Diagonal, ...]:
        pool = list(state.unclaimed())
        take = min(state.quota(), len(pool))
        return tuple(self.rng.sample(pool, take))


class FirstAvailable:
    name = "first_available"

    def __init__(self, config: GameConfig, rng: random.Random | None = None) -> None:
        pass

    def moves(self, state: GameState) -> tuple[Diagonal, ...]:
        pool = state.unclaimed().members()
        return pool[: min(state.quota(), len(pool))]


STRATEGIES = {
    cls.name: cls for cls in (PaperMaker, PaperBreaker, RandomStrategy, FirstAvailable)
}


def make_strategy(spec, config: GameConfig, rng: random.Random | None = None):
    if isinstance(spec, str):
        if spec not in STRATEGIES:
            raise ValueError(f"unknown strategy {spec!r}; choose from {sorted(STRATEGIES)}")
        return STRATEGIES[spec](config, rng)
    return spec


@dataclass(frozen=True)
class MoveRecord:
    index: int
    player: Player
    diagonals: tuple[Diagonal, ...]
    status_after: Status

    def to_jsonable(self) -> dict:
        return {
            "index": self.index,
            "player": self.player.value,
            "diagonals": [[d.i, d.j] for d in self.diagonals],
            "status_after": self.status_after.value,
        }


@dataclass(frozen=True)
class Transcript:
    config: GameConfig
    seed: int
    records: tuple[MoveRecord, ...]
    status: Status
    witness: Optional[DiagonalSet]
    maker_moves: int
    breaker_turns: int

    @property
    def winner(self) -> Player:
        return Player.MAKER if self.status is Status.MAKER_WON else Player.BREAKER

    def to_jsonable(self) -> dict:
        return {
            "n": self.config.n,
            "bias": self.config.bias_label(),
            "first": self.config.first_mover.value,
            "seed": self.seed,
            "moves": [r.to_jsonable() for r in self.records],
            "status": self.status.value,
            "winner": self.winner.value,
            "maker_moves": self.maker_moves,
            "breaker_turns": self.breaker_turns,
            "witness": [[d.i, d.j] for d in self.witness] if self.witness else None,
        }


def play_out(config: GameConfig, maker="paper_maker", breaker="random", seed: int = 0) -> Transcript:
    """Run one full game between two strategies; deterministic given seed."""
    rng = random.Random(seed)
    players = {
        Player.MAKER: make_strategy(maker, config, rng),
        Player.BREAKER: make_strategy(breaker, config, rng),
    }
    state = new_game(config)
    records = []
    while state.status is Status.ONGOING:
        mover = state.to_move
        moves = players[mover].moves(state)
        try:
            state = apply_move(state, mover, moves)
        except GameError as exc:
            raise StrategyError(
                f"{players[mover].name} returned an illegal move {moves}: {exc}; "
                f"maker={state.maker.text()!r} breaker={state.breaker.text()!r}"
            ) from exc
        records.append(MoveRecord(state.move_index, mover, tuple(moves), state.status))
    return Transcript(
        config=config,
        seed=seed,
        records=tuple(records),
        status=state.status,
        witness=state.witness,
        maker_moves=maker_move_count(state),
        breaker_turns=breaker_turn_count(state),
    )


# ---------------------------------------------------------------------------
# exhaustive adversarial verification of the two strategies


@dataclass(frozen=True)
class MakerExhaustiveReport:
    n: int
    breaker_first: bool
    leaves: int
    maker_moves_min: int
    maker_moves_max: int


def verify_maker_strategy(n: int, breaker_first: bool = False) -> MakerExhaustiveReport:
    """Walk the FULL tree of Breaker replies in the (1:1) game.

    Raises on any failure: a Maker win taking other than n-3 moves, a
    crossing pair among Maker's claims, a live-chord invariant violation
    (raised inside the strategy), or any Breaker win. Returns leaf counts.
    """
    config = GameConfig(
        n, first_mover=Player.BREAKER if breaker_first else Player.MAKER
    )
    counts = {"leaves": 0, "min": n, "max": 0}

    def walk(state: GameState, memory: MakerMemory) -> None:
        if state.to_move is Player.MAKER:
            chord, memory2 = maker_strategy_move(state, memory)
            for owned in state.maker:
                if crosses(n, owned, chord):
                    raise AssertionError(
                        f"Maker claim {chord.text()} crosses own {owned.text()}"
                    )
            nxt = apply_move(state, Player.MAKER, (chord,))
            if nxt.status is Status.MAKER_WON:
                moves = maker_move_count(nxt)
                if moves != n - 3:
                    raise AssertionError(f"Maker won in {moves} moves, expected {n - 3}")
                counts["leaves"] += 1
                counts["min"] = min(counts["min"], moves)
                counts["max"] = max(counts["max"], moves)
                return
            if nxt.status is not Status.ONGOING:
                raise AssertionError(f"unexpected status {nxt.status} after Maker move")
            walk(nxt, memory2)
        else:
            for d in state.unclaimed():
                nxt = apply_move(state, Player.BREAKER, (d,))
                if nxt.status is not Status.ONGOING:
                    raise AssertionError(f"Breaker reached {nxt.status} against the strategy")
                walk(nxt, memory)

    walk(new_game(config), fresh_maker_memory(n))
    return MakerExhaustiveReport(
        n, breaker_first, counts["leaves"], counts["min"], counts["max"]
    )


@dataclass(frozen=True)
class BreakerExhaustiveReport:
    n: int
    leaves: int
    breaker_turns_max: int
    invariant_checks: int
    net_ear_counts: tuple[int, ...]


def _is_anchored_pairing_blocker(breaker: DiagonalSet, memory: BreakerMemory) -> bool:
    """The set is exactly the strategy's target: the two anchor ears plus
    one pair chord per remaining vertex. This is the normal form with a
    two-ear nominal net; when a pair chord happens to have order 2 it
    merges into the recomputed net (always the case at n=5, where no
    blocker with exactly two ear-covers exists)."""
    n = breaker.n
    a = memory.anchor
    assert a is not None
    ears = {
        make_diagonal(n, a, (a + 2) % n),
        make_diagonal(n, (a + 1) % n, (a + 3) % n),
    }
    rest = set(breaker.members()) - ears
    if not ears <= set(breaker.members()):
        return False
    if len(rest) != len(memory.pair_vertices()):
        return False
    for x in memory.pair_vertices():
        owned = [d for d in memory.pair(x) if d in rest]
        if len(owned) != 1:
            return False
    return True


def verify_breaker_strategy(n: int) -> BreakerExhaustiveReport:
    """Walk the FULL tree of Maker moves in the (1:2) double-first game.

    Verifies at every leaf that Breaker wins within n-3 turns and that the
    final Breaker set is the anchored pairing blocker (two-ear nominal net)
    in valid normal form, and after every Breaker turn that a blocker
    disjoint from Maker's claims exists (so Maker cannot have won already).
    """
    config = GameConfig(n, breaker_double_first=True)
    counts = {"leaves": 0, "max_turns": 0, "checks": 0}
    ear_counts: set[int] = set()

    def check_breaker_turn(state: GameState, memory: BreakerMemory) -> None:
        completion = disjoint_blocker_completion(state, memory)
        if not completion.isdisjoint(state.maker):
            raise AssertionError("pair-map completion touches Maker's claims")
        if not is_blocker(completion):
            raise AssertionError("pair-map completion is not a blocker")
        counts["checks"] += 1

    def walk(state: GameState, memory: BreakerMemory) -> None:
        if state.to_move is Player.BREAKER:
            chords, memory2 = breaker_strategy_moves(state, memory)
            nxt = apply_move(state, Player.BREAKER, chords)
            check_breaker_turn(nxt, memory2)
            turns = breaker_turn_count(nxt)
            if nxt.status is Status.BREAKER_WON:
                if turns > n - 3:
                    raise AssertionError(f"Breaker won in {turns} turns, expected <= {n - 3}")
                if not _is_anchored_pairing_blocker(nxt.breaker, memory2):
                    raise AssertionError("final Breaker set is not the anchored pairing blocker")
                st = parse_structure(nxt.breaker)
                if st is None:
                    raise AssertionError("final Breaker set fails the normal-form parse")
                ear_counts.add(st.ear_count())
                counts["leaves"] += 1
                counts["max_turns"] = max(counts["max_turns"], turns)
                return
            if turns >= n - 3:
                raise AssertionError(f"Breaker did not win within {n - 3} turns")
            if nxt.status is not Status.ONGOING:
                raise AssertionError(f"unexpected status {nxt.status} after Breaker turn")
            walk(nxt, memory2)
        else:
            for d in state.unclaimed():
                nxt = apply_move(state, Player.MAKER, (d,))
                if nxt.status is Status.MAKER_WON:
                    raise AssertionError("Maker completed a triangulation against the strategy")
                if nxt.status is Status.BREAKER_WON:
                    # cannot happen before Breaker's own final turn
                    raise AssertionError("premature Breaker win on a Maker move")
                walk(nxt, memory)

    walk(new_game(config), fresh_breaker_memory(n))
    return BreakerExhaustiveReport(
        n,
        counts["leaves"],
        counts["max_turns"],
        counts["checks"],
        tuple(sorted(ear_counts)),
    )


# ---------------------------------------------------------------------------
# exact solver


@dataclass(frozen=True)
class SolveResult:
    winner: Player
    maker_moves: Optional[int]
    states: int
    best_move: tuple[Diagonal, ...] = ()


def _solver_limit(config: GameConfig) -> int:
    unbiased = (
        config.maker_per_turn == 1
        and config.breaker_per_turn == 1
        and not config.breaker_double_first
    )
    return 7 if unbiased else 6


class _Solver:
    """Memoized minimax over (maker bits, breaker bits, side to move).

    Maker minimizes the number of his remaining turns to a win; Breaker
    maximizes it, preferring to deny forever. Status tests run on
    precomputed triangulation bit masks, which is equivalent to the
    interval DP used by the rules engine.
    """

    def __init__(self, config: GameConfig, canonicalize: bool = False) -> None:
        self.config = config
        self.n = config.n
        self.count = diagonal_count(self.n)
        self.masks = [t.bits for t in enumerate_triangulations(self.n)]
        self.full = (1 << self.count) - 1
        self.need = self.n - 3
        self.memo: dict[int, Optional[int]] = {}
        self.states = 0
        self.canonicalize = canonicalize
        if canonicalize:
            table = all_diagonals(self.n)
            index = {d: i for i, d in enumerate(table)}
            self.perms = []
            for k in range(self.n):
                self.perms.append(
                    [index[rotate_diagonal(self.n, d, k)] for d in table]
                )

    def status(self, mb: int, bb: int) -> Status:
        if mb.bit_count() >= self.need:
            blocked = True
            for tm in self.masks:
                if tm & bb == 0:
                    if tm & ~mb == 0:
                        return Status.MAKER_WON
                    blocked = False
            return Status.BREAKER_WON if blocked else Status.ONGOING
        for tm in self.masks:
            if tm & bb == 0:
                return Status.ONGOING
        return Status.BREAKER_WON

    def _apply_perm(self, bits: int, perm: list[int]) -> int:
        out = 0
        while bits:
            low = bits & -bits
            out |= 1 << perm[low.bit_length() - 1]
            bits ^= low
        return out

    def _key(self, mb: int, bb: int, maker_to_move: bool) -> int:
        if self.canonicalize:
            best = None
            for perm in self.perms:
                pair = (self._apply_perm(mb, perm), self._apply_perm(bb, perm))
                if best is None or pair < best:
                    best = pair
            mb, bb = best
        return mb | bb << self.count | int(maker_to_move) << 2 * self.count

    def quota(self, bb: int, maker_to_move: bool) -> int:
        if maker_to_move:
            return self.config.maker_per_turn
        if self.config.breaker_double_first and bb == 0:
            return 2
        return self.config.breaker_per_turn

    def value(self, mb: int, bb: int, maker_to_move: bool) -> Optional[int]:
        """Maker turns still needed for a Maker win; None if Breaker wins."""
        st = self.status(mb, bb)
        if st is Status.MAKER_WON:
            return 0
        if st is Status.BREAKER_WON:
            return None
        key = self._key(mb, bb, maker_to_move)
        if key in self.memo:
            return self.memo[key]
        self.states += 1
        free = self.full & ~(mb | bb)
        pool = []
        bits = free
        while bits:
            low = bits & -bits
            pool.append(low)
            bits ^= low
        if not pool:
            result = None  # full board without a Maker win
        else:
            take = min(self.quota(bb, maker_to_move), len(pool))
            result = None
            if maker_to_move:
                for combo in combinations(pool, take):
                    add = 0
                    for c in combo:
                        add |= c
                    v = self.value(mb | add, bb, False)
                    if v is not None:
                        cand = 1 + v
                        if result is None or cand < result:
                            result = cand
                        if result == 1:
                            break
            else:
                best = -1
                escaped = False
                for combo in combinations(pool, take):
                    add = 0
                    for c in combo:
                        add |= c
                    v = self.value(mb, bb | add, True)
                    if v is None:
                        escaped = True
                        break
                    best = max(best, v)
                result = None if escaped else best
        self.memo[key] = result
        return result


def solve_state(
    state: GameState, allow_large: bool = False, canonicalize: bool = False
) -> SolveResult:
    """Game-theoretic value of a position, plus one optimal move for the
    side to move."""
    config = state.config
    limit = _solver_limit(config) + (1 if allow_large else 0)
    if config.n > limit:
        raise FeasibilityError(
            f"solver limited to n <= {limit} for bias {config.bias_label()}"
            + ("" if allow_large else " (pass allow_large to go one higher)")
        )
    if state.status is not Status.ONGOING:
        winner = Player.MAKER if state.status is Status.MAKER_WON else Player.BREAKER
        return SolveResult(winner, 0 if winner is Player.MAKER else None, 0, ())

    solver = _Solver(config, canonicalize)
    mb, bb = state.maker.bits, state.breaker.bits
    maker_to_move = state.to_move is Player.MAKER
    table = all_diagonals(config.n)

    free = solver.full & ~(mb | bb)
    pool = []
    bits = free
    while bits:
        low = bits & -bits
        pool.append(low)
        bits ^= low
    take = min(solver.quota(bb, maker_to_move), len(pool))

    def maker_prefers(new: Optional[int], old: Optional[int]) -> bool:
        return new is not None and (old is None or new < old)

    def breaker_prefers(new: Optional[int], old: Optional[int]) -> bool:
        if new is None:
            return True
        return old is not None and new > old

    best_value: Optional[int] = None
    best_combo: Optional[tuple[int, ...]] = None
    for combo in combinations(pool, take):
        add = 0
        for c in combo:
            add |= c
        if maker_to_move:
            v = solver.value(mb | add, bb, False)
            v = None if v is None else 1 + v
            if best_combo is None or maker_prefers(v, best_value):
                best_value, best_combo = v, combo
            if best_value == 1:
                break
        else:
            v = solver.value(mb, bb | add, True)
            if best_combo is None or breaker_prefers(v, best_value):
                best_value, best_combo = v, combo
            if best_value is None:
                break

    assert best_combo is not None
    move = tuple(table[c.bit_length() - 1] for c in best_combo)
    if maker_to_move:
        winner = Player.MAKER if best_value is not None else Player.BREAKER
        return SolveResult(winner, best_value, solver.states, move)
    winner = Player.BREAKER if best_value is None else Player.MAKER
    return SolveResult(winner, best_value, solver.states, move)


def solve(
    n: int,
    maker_per_turn: int = 1,
    breaker_per_turn: int = 1,
    first_mover: Player = Player.MAKER,
    double_first: bool = False,
    allow_large: bool = False,
    canonicalize: bool = False,
) -> SolveResult:
    """Solve the game from the empty board.

    Returns the winner under optimal play and, when Maker wins, the minimal
    number of Maker turns. Feasibility guards: n <= 7 for the (1:1) game,
    n <= 6 otherwise; allow_large admits one more.
    """
    config = GameConfig(
        n,
        maker_per_turn=maker_per_turn,
        breaker_per_turn=breaker_per_turn,
        first_mover=first_mover,
        breaker_double_first=double_first,
    )
    return solve_state(new_game(config), allow_large, canonicalize)


# ---------------------------------------------------------------------------
# potential-function criterion


@dataclass(frozen=True)
class SelfridgeReport:
    n: int
    maker_per_turn: int
    breaker_per_turn: int
    winning_sets: int
    potential: Fraction | float
    threshold: Fraction
    exact: bool
    implies_breaker_win: bool

    def verdict(self) -> str:
        relation = "<" if self.implies_breaker_win else ">="
        outcome = "breaker win implied" if self.implies_breaker_win else "criterion inconclusive"
        return f"{self.potential} {relation} {self.threshold}: {outcome}"


def erdos_selfridge_potential(
    n: int, maker_per_turn: int = 1, breaker_per_turn: int = 2
) -> SelfridgeReport:
    """Evaluate the biased potential sum_{A} (b+1)^(-|A|/m) against 1/(b+1).

    Each winning set is a triangulation of size n-3 and there are C(n-2)
    Catalan-many of them, so the sum collapses to a single term. The
    comparison is done exactly in integers even when (n-3)/m is fractional;
    a Fraction is returned when it is integral, a float display value
    otherwise. For the (1:2) triangulation game the criterion never fires.
    """
    check_polygon_size(n)
    if n > 16:
        raise FeasibilityError("potential evaluation guarded to n <= 16")
    m, b = maker_per_turn, breaker_per_turn
    if m < 1 or b < 1:
        raise ValueError("bias parameters must be >= 1")
    sets = catalan(n - 2)
    base = b + 1
    # potential < 1/base  <=>  sets^m < base^(n-3-m), both sides integral
    implies = sets**m < base ** (n - 3 - m)
    exact = (n - 3) % m == 0
    potential: Fraction | float
    if exact:
        potential = Fraction(sets, base ** ((n - 3) // m))
    else:
        potential = sets * base ** (-(n - 3) / m)
    return SelfridgeReport(
        n=n,
        maker_per_turn=m,
        breaker_per_turn=b,
        winning_sets=sets,
        potential=potential,
        threshold=Fraction(1, base),
        exact=exact,
        implies_breaker_win=implies,
    )
