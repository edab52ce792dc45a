"""Triangulation enumeration, validity, and the interval search."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from triblock.polygon import DiagonalSet, all_diagonals, crosses, make_diagonal, rotate
from triblock.triangulation import (
    catalan,
    contains_triangulation,
    enumerate_triangulations,
    is_triangulation,
    pairwise_noncrossing,
    triangulation_count,
)

CATALAN = {4: 2, 5: 5, 6: 14, 7: 42, 8: 132, 9: 429, 10: 1430, 11: 4862, 12: 16796}


def fan(n, v):
    return DiagonalSet.of(
        n,
        (
            make_diagonal(n, v, u)
            for u in range(n)
            if u not in (v, (v - 1) % n, (v + 1) % n)
        ),
    )


def test_is_triangulation_examples():
    assert is_triangulation(DiagonalSet.from_text(5, "0-2,0-3"))
    assert not is_triangulation(DiagonalSet.from_text(5, "0-2,1-3"))
    assert not is_triangulation(DiagonalSet.from_text(6, "0-2,0-3"))


@pytest.mark.parametrize("n", range(4, 13))
def test_enumeration_count_matches_catalan(n):
    count = sum(1 for _ in enumerate_triangulations(n))
    assert count == CATALAN[n] == triangulation_count(n) == catalan(n - 2)


@pytest.mark.parametrize("n", range(4, 10))
def test_enumeration_valid_and_duplicate_free(n):
    seen = set()
    for t in enumerate_triangulations(n):
        assert is_triangulation(t)
        assert t.bits not in seen
        seen.add(t.bits)


def test_maximality_lemma_size_implies_maximal():
    # n-3 pairwise non-crossing diagonals are always maximal: no set of
    # n-2 pairwise non-crossing diagonals exists (brute force, n <= 9)
    for n in range(4, 10):
        table = all_diagonals(n)
        target = n - 2
        for combo in combinations(table, target):
            assert any(
                crosses(n, d1, d2) for d1, d2 in combinations(combo, 2)
            ), (n, combo)
        # and every enumerated triangulation already has the full size n-3
        for t in enumerate_triangulations(n):
            assert len(t) == n - 3


def test_contains_triangulation_trivial_and_fan():
    w = contains_triangulation(DiagonalSet.full(7))
    assert w is not None and is_triangulation(w)
    for n in (5, 6, 8):
        for v in range(n):
            w = contains_triangulation(fan(n, v))
            assert w == fan(n, v)  # the star at v is the only choice


@pytest.mark.parametrize("n", range(4, 11))
def test_high_order_diagonals_cannot_triangulate(n):
    # every triangulation needs at least two ear-covers, so removing all
    # order-2 diagonals leaves nothing to build from
    allowed = DiagonalSet.of(
        n, (d for d in all_diagonals(n) if min(d.j - d.i, n - (d.j - d.i)) >= 3)
    )
    assert contains_triangulation(allowed) is None
    for t in enumerate_triangulations(n):
        assert not t.issubset(allowed)


@pytest.mark.parametrize("n", range(4, 11))
def test_search_agrees_with_exhaustive_oracle(n):
    # None <=> no enumerated triangulation fits inside `allowed`
    triangulations = list(enumerate_triangulations(n))
    full = (1 << (n * (n - 3) // 2)) - 1
    rng_sets = [DiagonalSet(n, bits & full) for bits in [0, 5, 0b101010101, full]]
    for t in triangulations[:: max(1, len(triangulations) // 40)]:
        rng_sets.append(t)
        rng_sets.append(t.discard(next(iter(t))))
    for allowed in rng_sets:
        witness = contains_triangulation(allowed)
        exists = any(t.issubset(allowed) for t in triangulations)
        assert (witness is not None) == exists
        if witness is not None:
            assert is_triangulation(witness) and witness.issubset(allowed)


@settings(max_examples=60)
@given(st.data())
def test_search_randomized_against_oracle(data):
    n = data.draw(st.integers(min_value=4, max_value=9))
    table = all_diagonals(n)
    chosen = data.draw(st.lists(st.sampled_from(table), unique=True))
    allowed = DiagonalSet.of(n, chosen)
    witness = contains_triangulation(allowed)
    exists = any(t.issubset(allowed) for t in enumerate_triangulations(n))
    assert (witness is not None) == exists
    if witness is not None:
        assert is_triangulation(witness)
        assert witness.issubset(allowed)


@settings(max_examples=40)
@given(st.data())
def test_search_rotation_equivariant(data):
    n = data.draw(st.integers(min_value=4, max_value=9))
    table = all_diagonals(n)
    chosen = data.draw(st.lists(st.sampled_from(table), unique=True))
    k = data.draw(st.integers(min_value=0, max_value=n - 1))
    allowed = DiagonalSet.of(n, chosen)
    a = contains_triangulation(allowed)
    b = contains_triangulation(rotate(allowed, k))
    assert (a is None) == (b is None)


def test_witness_is_deterministic_least_apex():
    w1 = contains_triangulation(DiagonalSet.full(8))
    w2 = contains_triangulation(DiagonalSet.full(8))
    assert w1 == w2
    # with everything allowed, the least-apex rule picks apex 1 at (0,7),
    # then apex 2 at (1,7), and so on: the fan at vertex 7
    assert w1 == fan(8, 7)


def test_enumeration_order_is_stable():
    first = [t.text() for t in enumerate_triangulations(5)]
    assert first == ["0-2,0-3", "0-3,1-3", "0-2,2-4", "1-3,1-4", "1-4,2-4"]
    assert [t.text() for t in enumerate_triangulations(4)] == ["0-2", "1-3"]


def test_pairwise_noncrossing():
    assert pairwise_noncrossing(DiagonalSet.from_text(6, "0-2,0-3,0-4"))
    assert not pairwise_noncrossing(DiagonalSet.from_text(6, "0-3,1-4"))
