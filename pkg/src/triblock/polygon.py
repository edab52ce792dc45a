"""Vertex/diagonal model of a convex n-gon.

Vertices are labelled 0..n-1 cyclically. A diagonal joins two vertices at
cyclic distance >= 2; boundary edges are not diagonals. Diagonal sets are
bit vectors over a fixed per-n lexicographic index, which makes rotation,
hashing and serialization cheap and stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

MIN_POLYGON = 4


class InvalidDiagonalError(ValueError):
    """A vertex pair that is not a diagonal of the n-gon."""


def check_polygon_size(n: int) -> None:
    if not isinstance(n, int) or n < MIN_POLYGON:
        raise ValueError(f"polygon size must be an integer >= {MIN_POLYGON}, got {n!r}")


class Diagonal(NamedTuple):
    """A chord of the polygon, stored canonically with i < j."""

    i: int
    j: int

    def text(self) -> str:
        return f"{self.i}-{self.j}"


def make_diagonal(n: int, a: int, b: int) -> Diagonal:
    """Canonicalize an unordered vertex pair into a valid diagonal for n."""
    check_polygon_size(n)
    if not (0 <= a < n and 0 <= b < n):
        raise InvalidDiagonalError(f"vertex labels {a},{b} out of range for n={n}")
    i, j = (a, b) if a < b else (b, a)
    if not 2 <= j - i <= n - 2:
        raise InvalidDiagonalError(f"({a},{b}) is not a diagonal of the {n}-gon")
    return Diagonal(i, j)


def parse_diagonal(n: int, text: str) -> Diagonal:
    """Parse the "i-j" text form."""
    parts = text.strip().split("-")
    if len(parts) != 2:
        raise InvalidDiagonalError(f"expected 'i-j', got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidDiagonalError(f"expected 'i-j' with integer labels, got {text!r}") from None
    return make_diagonal(n, a, b)


def is_valid_diagonal(n: int, d: Diagonal) -> bool:
    return 0 <= d.i < d.j < n and 2 <= d.j - d.i <= n - 2


def _require_valid(n: int, d: Diagonal) -> None:
    if not is_valid_diagonal(n, d):
        raise InvalidDiagonalError(f"{tuple(d)} is not a diagonal of the {n}-gon")


def diagonal_order(n: int, d: Diagonal) -> int:
    """Cyclic distance between the endpoints: min(j-i, n-(j-i)), in [2, n//2]."""
    check_polygon_size(n)
    _require_valid(n, d)
    return min(d.j - d.i, n - (d.j - d.i))


def is_ear_cover(n: int, d: Diagonal) -> bool:
    """True iff the diagonal has order 2 (cuts off a single vertex)."""
    return diagonal_order(n, d) == 2


def covered_vertex(n: int, d: Diagonal) -> int:
    """The vertex a distance-2 diagonal covers: the one between its endpoints."""
    if not is_ear_cover(n, d):
        raise InvalidDiagonalError(f"{tuple(d)} is not an ear-cover of the {n}-gon")
    return d.i + 1 if d.j - d.i == 2 else (d.j + 1) % n


def crosses(n: int, d1: Diagonal, d2: Diagonal) -> bool:
    """True iff the diagonals share an interior point.

    On a convex polygon this is the endpoint-interleaving test; sharing an
    endpoint does not count as crossing.
    """
    check_polygon_size(n)
    _require_valid(n, d1)
    _require_valid(n, d2)
    a, b = d1
    c, d = d2
    return (a < c < b < d) or (c < a < d < b)


def diagonal_count(n: int) -> int:
    check_polygon_size(n)
    return n * (n - 3) // 2


@lru_cache(maxsize=None)
def all_diagonals(n: int) -> tuple[Diagonal, ...]:
    """All diagonals of the n-gon in lexicographic (i, j) order.

    This ordering defines the bit layout of DiagonalSet and must stay
    stable: serialized sets depend on it.
    """
    check_polygon_size(n)
    out = []
    for i in range(n):
        for j in range(i + 2, n):
            if j - i <= n - 2:
                out.append(Diagonal(i, j))
    assert len(out) == diagonal_count(n)
    return tuple(out)


@lru_cache(maxsize=None)
def _index_of(n: int) -> dict[Diagonal, int]:
    return {d: k for k, d in enumerate(all_diagonals(n))}


def diagonal_index(n: int, d: Diagonal) -> int:
    _require_valid(n, d)
    return _index_of(n)[d]


def diagonal_at(n: int, index: int) -> Diagonal:
    return all_diagonals(n)[index]


@dataclass(frozen=True)
class DiagonalSet:
    """An immutable set of diagonals of a fixed n-gon, bit-indexed."""

    n: int
    bits: int = 0

    @classmethod
    def empty(cls, n: int) -> "DiagonalSet":
        check_polygon_size(n)
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "DiagonalSet":
        check_polygon_size(n)
        return cls(n, (1 << diagonal_count(n)) - 1)

    @classmethod
    def of(cls, n: int, diagonals: Iterable[Diagonal]) -> "DiagonalSet":
        check_polygon_size(n)
        bits = 0
        index = _index_of(n)
        for d in diagonals:
            _require_valid(n, d)
            bits |= 1 << index[d]
        return cls(n, bits)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "DiagonalSet":
        return cls.of(n, (make_diagonal(n, a, b) for a, b in pairs))

    @classmethod
    def from_text(cls, n: int, text: str) -> "DiagonalSet":
        """Parse the comma-separated text form, e.g. "0-2,1-3,2-4"."""
        text = text.strip()
        if not text:
            return cls.empty(n)
        return cls.of(n, (parse_diagonal(n, part) for part in text.split(",")))

    def __post_init__(self) -> None:
        check_polygon_size(self.n)
        if self.bits < 0 or self.bits >> diagonal_count(self.n):
            raise ValueError("bit vector does not fit the diagonal index range")

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, d: Diagonal) -> bool:
        if not is_valid_diagonal(self.n, d):
            return False
        return bool(self.bits >> _index_of(self.n)[d] & 1)

    def __iter__(self) -> Iterator[Diagonal]:
        table = all_diagonals(self.n)
        bits = self.bits
        while bits:
            low = bits & -bits
            yield table[low.bit_length() - 1]
            bits ^= low

    def __or__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._check_same(other)
        return DiagonalSet(self.n, self.bits | other.bits)

    def __and__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._check_same(other)
        return DiagonalSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._check_same(other)
        return DiagonalSet(self.n, self.bits & ~other.bits)

    def _check_same(self, other: "DiagonalSet") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched polygon sizes {self.n} != {other.n}")

    def add(self, d: Diagonal) -> "DiagonalSet":
        _require_valid(self.n, d)
        return DiagonalSet(self.n, self.bits | 1 << _index_of(self.n)[d])

    def discard(self, d: Diagonal) -> "DiagonalSet":
        if not is_valid_diagonal(self.n, d):
            return self
        return DiagonalSet(self.n, self.bits & ~(1 << _index_of(self.n)[d]))

    def complement(self) -> "DiagonalSet":
        return DiagonalSet(self.n, self.bits ^ DiagonalSet.full(self.n).bits)

    def isdisjoint(self, other: "DiagonalSet") -> bool:
        self._check_same(other)
        return self.bits & other.bits == 0

    def issubset(self, other: "DiagonalSet") -> bool:
        self._check_same(other)
        return self.bits & ~other.bits == 0

    def members(self) -> tuple[Diagonal, ...]:
        return tuple(self)

    def indices(self) -> tuple[int, ...]:
        return tuple(_index_of(self.n)[d] for d in self)

    def text(self) -> str:
        return ",".join(d.text() for d in self)


def rotate_diagonal(n: int, d: Diagonal, k: int) -> Diagonal:
    _require_valid(n, d)
    return make_diagonal(n, (d.i + k) % n, (d.j + k) % n)


def rotate(s: DiagonalSet, k: int) -> DiagonalSet:
    """Rotate every diagonal by k vertices; a bijection on diagonal sets."""
    n = s.n
    if not 0 <= k < n:
        raise ValueError(f"rotation offset must be in [0, {n}), got {k}")
    if k == 0:
        return s
    return DiagonalSet.of(n, (rotate_diagonal(n, d, k) for d in s))


def canonical_rotation(s: DiagonalSet) -> tuple[DiagonalSet, int]:
    """The rotation of s with the lexicographically least index sequence.

    Returns (rotated set, offset k). Rotations only, no reflections; ties
    (rotation-invariant sets) resolve to the smallest k.
    """
    best = s
    best_key = s.indices()
    best_k = 0
    for k in range(1, s.n):
        candidate = rotate(s, k)
        key = candidate.indices()
        if key < best_key:
            best, best_key, best_k = candidate, key, k
    return best, best_k


def remove_vertex(s: DiagonalSet, v: int) -> DiagonalSet:
    """Delete vertex v, closing the gap: labels above v shift down by one.

    Diagonals incident to v are dropped, as is any chord that becomes a
    boundary edge of the smaller polygon (the chord spanning the deleted
    vertex's two neighbours).
    """
    n = s.n
    if n == MIN_POLYGON:
        raise ValueError("cannot reduce a 4-gon further")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")
    m = n - 1
    kept = []
    for d in s:
        if v in (d.i, d.j):
            continue
        i = d.i - 1 if d.i > v else d.i
        j = d.j - 1 if d.j > v else d.j
        if 2 <= j - i <= m - 2:
            kept.append(Diagonal(i, j))
    return DiagonalSet.of(m, kept)
