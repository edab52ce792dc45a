"""Triangulations of the convex n-gon: validity, enumeration, search.

A triangulation is a maximal pairwise non-crossing set of diagonals and
always has exactly n-3 of them; on a convex polygon the size condition
already implies maximality (tested, not assumed elsewhere).
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .polygon import (
    Diagonal,
    DiagonalSet,
    check_polygon_size,
    crosses,
    make_diagonal,
)


class FeasibilityError(ValueError):
    """An operation was asked to run beyond its practical size guard."""


def catalan(m: int) -> int:
    """C(m) = (2m)! / (m! (m+1)!)."""
    return comb(2 * m, m) // (m + 1)


def triangulation_count(n: int) -> int:
    """Number of triangulations of the n-gon, Catalan C(n-2)."""
    check_polygon_size(n)
    return catalan(n - 2)


def pairwise_noncrossing(s: DiagonalSet) -> bool:
    return all(not crosses(s.n, d1, d2) for d1, d2 in combinations(s, 2))


def is_triangulation(s: DiagonalSet) -> bool:
    """|s| = n-3 and no two members cross."""
    return len(s) == s.n - 3 and pairwise_noncrossing(s)


def enumerate_triangulations(n: int) -> Iterator[DiagonalSet]:
    """Yield every triangulation exactly once, in a deterministic order.

    Recursive split on the triangle sitting on the chord (0, n-1): for each
    apex the two sub-polygons are triangulated independently. Apexes are
    scanned descending so the fan at 0 comes out first. Practical for
    n <= 14; the caller is responsible for feasibility.
    """
    check_polygon_size(n)

    def fill(i: int, j: int) -> Iterator[tuple[Diagonal, ...]]:
        # triangulations of the sub-polygon i..j using (i, j) as base chord
        if j - i < 2:
            yield ()
            return
        for k in range(j - 1, i, -1):
            extra = ()
            if k - i >= 2:
                extra += (Diagonal(i, k),)
            if j - k >= 2:
                extra += (Diagonal(k, j),)
            for left in fill(i, k):
                for right in fill(k, j):
                    yield extra + left + right

    for chords in fill(0, n - 1):
        yield DiagonalSet.of(n, chords)


def contains_triangulation(allowed: DiagonalSet) -> Optional[DiagonalSet]:
    """A triangulation drawn entirely from `allowed`, or None.

    Interval dynamic program over chords: the chord (i, j) is usable iff it
    is a polygon side (j-i = 1 or the closing edge (0, n-1)) or a member of
    `allowed`; the interval (i, j) is triangulable iff some apex k between
    them has usable chords on both sides and both sub-intervals triangulable.
    None is returned exactly when the complement of `allowed` blocks every
    triangulation. O(n^3); the memo is per-call, the function is pure.

    The witness picks the least apex at every cell, so it is deterministic.
    """
    n = allowed.n
    allowed_pairs = {tuple(d) for d in allowed}

    def usable(i: int, j: int) -> bool:
        return j - i == 1 or (i == 0 and j == n - 1) or (i, j) in allowed_pairs

    # memo[(i, j)]: chosen apex, or -1 for the trivial side, or None if the
    # interval cannot be triangulated from `allowed`
    memo: dict[tuple[int, int], int | None] = {}

    def solve(i: int, j: int) -> int | None:
        if j - i == 1:
            return -1
        if (i, j) in memo:
            return memo[(i, j)]
        choice: int | None = None
        for k in range(i + 1, j):
            if (
                usable(i, k)
                and usable(k, j)
                and solve(i, k) is not None
                and solve(k, j) is not None
            ):
                choice = k
                break
        memo[(i, j)] = choice
        return choice

    if solve(0, n - 1) is None:
        return None

    chords: list[Diagonal] = []

    def collect(i: int, j: int) -> None:
        if j - i < 2:
            return
        k = memo[(i, j)]
        assert k is not None and k > 0
        if k - i >= 2:
            chords.append(make_diagonal(n, i, k))
        if j - k >= 2:
            chords.append(make_diagonal(n, k, j))
        collect(i, k)
        collect(k, j)

    collect(0, n - 1)
    witness = DiagonalSet.of(n, chords)
    assert witness.issubset(allowed)
    return witness
