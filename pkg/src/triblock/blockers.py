"""Blockers: minimum edge sets meeting every triangulation of the n-gon.

A blocking set shares an edge with every triangulation; a blocker is one of
the minimum possible size, which is n-2. Every blocker has a normal form:
a contiguous run of ear-covers (the boundary net) plus one beam per
remaining vertex into the net's interior, with an arithmetic non-crossing
constraint on beam targets. This module parses, builds and enumerates that
normal form, and carries an independent brute-force oracle to certify it on
small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .polygon import (
    Diagonal,
    DiagonalSet,
    canonical_rotation,
    check_polygon_size,
    covered_vertex,
    diagonal_at,
    diagonal_count,
    diagonal_order,
    make_diagonal,
    rotate,
)
from .triangulation import (
    FeasibilityError,
    contains_triangulation,
    enumerate_triangulations,
)

EXHAUSTIVE_LIMIT = 12
BRUTE_FORCE_LIMIT = 10


def blocker_size(n: int) -> int:
    """Minimum size of a blocking set: n-2."""
    check_polygon_size(n)
    return n - 2


def ears_of(b: DiagonalSet) -> DiagonalSet:
    """The order-2 members of b."""
    return DiagonalSet.of(b.n, (d for d in b if diagonal_order(b.n, d) == 2))


def is_blocking_set(b: DiagonalSet, method: str = "dp") -> bool:
    """True iff every triangulation shares an edge with b.

    dp: no triangulation can be drawn from the complement of b (O(n^3)).
    exhaustive: scan every enumerated triangulation; guarded to n <= 12.
    """
    if method == "dp":
        return contains_triangulation(b.complement()) is None
    if method == "exhaustive":
        if b.n > EXHAUSTIVE_LIMIT:
            raise FeasibilityError(f"exhaustive blocking test limited to n <= {EXHAUSTIVE_LIMIT}")
        return all(not t.isdisjoint(b) for t in enumerate_triangulations(b.n))
    raise ValueError(f"unknown method {method!r}")


def is_blocker(b: DiagonalSet, method: str = "dp") -> bool:
    """Blocking and of the minimum size n-2 (hence a minimal blocking set)."""
    return len(b) == blocker_size(b.n) and is_blocking_set(b, method)


# ---------------------------------------------------------------------------
# structural normal form


@dataclass(frozen=True)
class BlockerStructure:
    """Normal form of a blocker: boundary net plus beams.

    offset: vertex where the net starts.
    net: m, the number of net ear-covers minus one; the net is the m+1
        ear-covers (offset, offset+2), ..., (offset+m, offset+m+2).
    beams: targets (i_1, ..., i_{n-3-m}), each in [1, m+1]; beam t joins
        vertex offset+m+2+t to vertex offset+i_t. Later beams may aim at
        most one step above the running minimum target, which is exactly
        the non-crossing condition for beams from non-adjacent targets.
    """

    n: int
    offset: int
    net: int
    beams: tuple[int, ...]

    def __post_init__(self) -> None:
        check_polygon_size(self.n)
        n, m = self.n, self.net
        if not 0 <= self.offset < n:
            raise ValueError(f"offset {self.offset} out of range for n={n}")
        if not 1 <= m <= n - 3:
            raise ValueError(f"net parameter must be in [1, {n - 3}], got {m}")
        if len(self.beams) != n - 3 - m:
            raise ValueError(f"expected {n - 3 - m} beams, got {len(self.beams)}")
        floor = m + 1
        for t, target in enumerate(self.beams):
            if not 1 <= target <= m + 1:
                raise ValueError(f"beam target {target} out of range [1, {m + 1}]")
            if target > floor + 1:
                raise ValueError(
                    f"beam {t + 1} target {target} crosses an earlier beam "
                    f"(running minimum {floor})"
                )
            floor = min(floor, target)

    def ear_count(self) -> int:
        return self.net + 1


def build_edges(st: BlockerStructure) -> DiagonalSet:
    """Materialize the n-2 edges of a structure (net then beams)."""
    n, a, m = st.n, st.offset, st.net
    edges = [make_diagonal(n, (a + t) % n, (a + t + 2) % n) for t in range(m + 1)]
    for t, target in enumerate(st.beams, start=1):
        edges.append(make_diagonal(n, (a + m + 2 + t) % n, (a + target) % n))
    out = DiagonalSet.of(n, edges)
    assert len(out) == blocker_size(n)
    return out


def _contiguous_run(n: int, covered: set[int]) -> Optional[int]:
    """First vertex of the single contiguous cyclic run, or None."""
    length = len(covered)
    if length == 0 or length >= n:
        return None
    starts = [v for v in covered if (v - 1) % n not in covered]
    if len(starts) != 1:
        return None
    start = starts[0]
    if all((start + t) % n in covered for t in range(length)):
        return start
    return None


def parse_structure_explain(b: DiagonalSet) -> tuple[Optional[BlockerStructure], str]:
    """Parse b into normal form, or explain which requirement failed.

    The net is recomputed from the actual ear-covers of b (a nominal beam of
    order 2 belongs to the net), so the returned m is maximal.
    """
    n = b.n
    ears = ears_of(b)
    covered = {covered_vertex(n, e) for e in ears}
    if len(covered) < 2:
        return None, f"needs at least 2 ear-covers, found {len(covered)}"
    if len(covered) > n - 2:
        return None, f"ear run of {len(covered)} exceeds the maximum n-2 = {n - 2}"
    start = _contiguous_run(n, covered)
    if start is None:
        return None, "ear-covers do not cover one contiguous vertex run"
    a = (start - 1) % n
    m = len(covered) - 1
    beam_by_vertex: dict[int, int] = {}
    for d in b - ears:
        rel_i = (d.i - a) % n
        rel_j = (d.j - a) % n
        if rel_i in range(1, m + 2) and rel_j >= m + 3:
            outside, target = rel_j, rel_i
        elif rel_j in range(1, m + 2) and rel_i >= m + 3:
            outside, target = rel_i, rel_j
        else:
            return None, f"edge {d.text()} is neither a net ear nor a beam into the net interior"
        if outside in beam_by_vertex:
            return None, f"vertex {(a + outside) % n} carries more than one beam"
        beam_by_vertex[outside] = target
    expected = list(range(m + 3, n))
    missing = [v for v in expected if v not in beam_by_vertex]
    if missing:
        return None, f"vertex {(a + missing[0]) % n} outside the net carries no edge"
    beams = tuple(beam_by_vertex[v] for v in expected)
    floor = m + 1
    for t, target in enumerate(beams):
        if target > floor + 1:
            return (
                None,
                f"beam {t + 1} (target {target}) crosses an earlier beam with a "
                f"non-adjacent target",
            )
        floor = min(floor, target)
    st = BlockerStructure(n, a, m, beams)
    rebuilt = build_edges(st)
    assert rebuilt == b, "structure parse must reproduce the input edge set"
    return st, "ok"


def parse_structure(b: DiagonalSet) -> Optional[BlockerStructure]:
    return parse_structure_explain(b)[0]


# ---------------------------------------------------------------------------
# observation-level diagnostics


@dataclass(frozen=True)
class ObservationCheck:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class ObservationReport:
    checks: tuple[ObservationCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __iter__(self):
        return iter(self.checks)


def observation_checks(b: DiagonalSet) -> ObservationReport:
    """Structural facts every blocker satisfies, evaluated on any edge set.

    1. no isolated vertex: every polygon vertex meets an edge of b;
    2. a vertex of degree >= 2 in b has its covering ear-cover in b;
    3. every edge of b has an endpoint covered by an ear-cover in b;
    4. b contains at least two ear-covers.
    Failures carry a counterexample vertex or edge.
    """
    n = b.n
    degree = [0] * n
    for d in b:
        degree[d.i] += 1
        degree[d.j] += 1
    ear_pairs = {tuple(e) for e in ears_of(b)}

    def ear_for(v: int) -> tuple[int, int]:
        d = make_diagonal(n, (v - 1) % n, (v + 1) % n)
        return (d.i, d.j)

    checks = []

    uncovered = [v for v in range(n) if degree[v] == 0]
    checks.append(
        ObservationCheck(
            "no_isolated_vertex",
            not uncovered,
            f"vertex {uncovered[0]}" if uncovered else None,
        )
    )

    missing_ear = [v for v in range(n) if degree[v] >= 2 and ear_for(v) not in ear_pairs]
    checks.append(
        ObservationCheck(
            "degree_two_has_ear",
            not missing_ear,
            f"vertex {missing_ear[0]} lacks ear-cover "
            f"{Diagonal(*ear_for(missing_ear[0])).text()}"
            if missing_ear
            else None,
        )
    )

    bad_edges = [
        d for d in b if ear_for(d.i) not in ear_pairs and ear_for(d.j) not in ear_pairs
    ]
    checks.append(
        ObservationCheck(
            "endpoint_ear_covered",
            not bad_edges,
            f"edge {bad_edges[0].text()}" if bad_edges else None,
        )
    )

    checks.append(
        ObservationCheck(
            "at_least_two_ears",
            len(ear_pairs) >= 2,
            f"only {len(ear_pairs)} ear-cover(s)" if len(ear_pairs) < 2 else None,
        )
    )

    return ObservationReport(tuple(checks))


@dataclass(frozen=True)
class BlockerReport:
    """Everything the verify surface reports about one edge set."""

    n: int
    edges: DiagonalSet
    is_blocking: bool
    size: int
    is_minimum_size: bool
    structure: Optional[BlockerStructure]
    structure_failure: Optional[str]
    observations: ObservationReport

    @property
    def is_blocker(self) -> bool:
        return self.is_blocking and self.is_minimum_size


def blocker_report(b: DiagonalSet, method: str = "dp") -> BlockerReport:
    st, reason = parse_structure_explain(b)
    return BlockerReport(
        n=b.n,
        edges=b,
        is_blocking=is_blocking_set(b, method),
        size=len(b),
        is_minimum_size=len(b) == blocker_size(b.n),
        structure=st,
        structure_failure=None if st is not None else reason,
        observations=observation_checks(b),
    )


# ---------------------------------------------------------------------------
# enumeration


def beam_sequences(max_target: int, length: int) -> Iterator[tuple[int, ...]]:
    """All target sequences over [1, max_target] with each later entry at
    most one above the running minimum (the non-crossing constraint)."""
    if length == 0:
        yield ()
        return

    def rec(prefix: tuple[int, ...], floor: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        cap = max_target if not prefix else min(floor + 1, max_target)
        for v in range(1, cap + 1):
            yield from rec(prefix + (v,), min(floor, v))

    yield from rec((), max_target)


def enumerate_blockers(n: int, up_to_rotation: bool = True) -> Iterator[DiagonalSet]:
    """Stream every blocker, duplicate-free.

    Candidates come from the normal form at offset 0 over all net lengths
    and beam sequences. Deduplication via canonical rotation is mandatory
    even at a fixed offset: a nominal beam of order 2 merges into the net,
    so distinct parameters can build rotation-equivalent sets. With
    up_to_rotation the canonical representative of each class is emitted
    once; otherwise all n rotations of each class.
    """
    check_polygon_size(n)
    seen: set[int] = set()
    for m in range(1, n - 2):
        for seq in beam_sequences(m + 1, n - 3 - m):
            edges = build_edges(BlockerStructure(n, 0, m, seq))
            canon, _ = canonical_rotation(edges)
            if canon.bits in seen:
                continue
            seen.add(canon.bits)
            if up_to_rotation:
                yield canon
            else:
                emitted: set[int] = set()
                for k in range(n):
                    image = rotate(canon, k)
                    if image.bits not in emitted:
                        emitted.add(image.bits)
                        yield image


def brute_force_blockers(n: int, allow_large: bool = False) -> list[DiagonalSet]:
    """Every blocking (n-2)-subset of the diagonals, by direct search.

    Independent of the structural characterization: candidates are pruned
    only by the hitting requirement itself. Each triangulation is a
    precomputed bit mask; a candidate must intersect them all. A necessary
    condition checked incrementally is that the chosen edges touch every
    vertex (missing a vertex leaves the fan at that vertex unhit).
    """
    check_polygon_size(n)
    if n > BRUTE_FORCE_LIMIT and not allow_large:
        raise FeasibilityError(
            f"brute force limited to n <= {BRUTE_FORCE_LIMIT}; pass allow_large to override"
        )
    masks = [t.bits for t in enumerate_triangulations(n)]
    diagonals = diagonal_count(n)
    size = blocker_size(n)
    cover = []
    for idx in range(diagonals):
        d = diagonal_at(n, idx)
        cover.append(1 << d.i | 1 << d.j)

    found: list[DiagonalSet] = []

    def rec(start: int, bits: int, covered: int, slots: int) -> None:
        if slots == 0:
            for tm in masks:
                if not tm & bits:
                    return
            found.append(DiagonalSet(n, bits))
            return
        # each further edge covers at most 2 new vertices
        for idx in range(start, diagonals - slots + 1):
            new_cover = covered | cover[idx]
            missing = n - new_cover.bit_count()
            if missing > 2 * (slots - 1):
                continue
            rec(idx + 1, bits | 1 << idx, new_cover, slots - 1)

    rec(0, 0, 0, size)
    return found


def dedupe_rotations(sets: Iterator[DiagonalSet] | list[DiagonalSet]) -> list[DiagonalSet]:
    """Canonical representative of each rotation class, first-seen order."""
    seen: set[int] = set()
    out = []
    for s in sets:
        canon, _ = canonical_rotation(s)
        if canon.bits not in seen:
            seen.add(canon.bits)
            out.append(canon)
    return out
