"""Exact blocker counting: closed form, recursion, and identity checks.

Counts are up to rotation. f(n) is the number of rotation classes of
blockers of the n-gon and equals F_{2n-8} under the convention F_0 = 1,
F_1 = F_2 = 1 (note F_0 = 1 deliberately differs from the standard
Fibonacci extension). f^k(n) refines by the number of ear-covers k in the
boundary net and satisfies a double-sum recursion with the two base rows
f^{n-2}(n) = 1 and f^{n-3}(n) = n-5.

All values are exact Python integers; nothing here overflows.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .polygon import check_polygon_size


def fib(k: int) -> int:
    """Fibonacci with F_0 = 1, F_1 = F_2 = 1, F_k = F_{k-1} + F_{k-2}."""
    if k < 0:
        raise ValueError(f"fib index must be >= 0, got {k}")
    if k == 0:
        return 1
    a, b = 1, 1  # F_1, F_2
    for _ in range(k - 2):
        a, b = b, a + b
    return b if k >= 2 else a


def blocker_count_formula(n: int) -> int:
    """Rotation classes of blockers of the n-gon: F_{2n-8}."""
    check_polygon_size(n)
    return fib(2 * n - 8)


class _RecursionTable:
    """Grow-on-demand table of f^k(n) with prefix sums for the double sum.

    prefix[j][N] = sum of f^j(i) for i in [j+2, N], so the recursion
    f^k(n) = sum_{j=2..k} sum_{i=j+2..n-1+j-k} f^j(i) costs O(k) per cell.
    A lock confines growth to one worker at a time; reads of filled rows
    are safe afterwards.
    """

    def __init__(self) -> None:
        self._fk: dict[tuple[int, int], int] = {}
        self._prefix: dict[int, list[int]] = {}
        self._filled_to = 3
        self._lock = threading.Lock()

    def _prefix_value(self, j: int, upper: int) -> int:
        if upper < j + 2:
            return 0
        return self._prefix[j][upper]

    def _fill_to(self, n_max: int) -> None:
        with self._lock:
            for n in range(self._filled_to + 1, n_max + 1):
                if n < 4:
                    continue
                for k in range(2, n - 1):
                    if k == n - 2:
                        value = 1
                    elif k == n - 3:
                        value = n - 5
                    else:
                        value = sum(
                            self._prefix_value(j, n - 1 + j - k) for j in range(2, k + 1)
                        )
                    self._fk[(n, k)] = value
                # extend prefix rows with this n
                for j in range(2, n - 1):
                    row = self._prefix.setdefault(j, [0] * (j + 2))
                    while len(row) <= n:
                        upper = len(row)
                        prev = row[upper - 1] if upper - 1 >= j + 2 else 0
                        row.append(prev + self._fk.get((upper, j), 0))
            self._filled_to = max(self._filled_to, n_max)

    def f_k(self, n: int, k: int) -> int:
        check_polygon_size(n)
        if not 2 <= k <= n - 2:
            raise ValueError(f"net length k must be in [2, {n - 2}], got {k}")
        if n > self._filled_to:
            self._fill_to(n)
        return self._fk[(n, k)]


_TABLE = _RecursionTable()


def f_k(n: int, k: int) -> int:
    """Rotation classes of blockers of the n-gon whose net has k ear-covers."""
    return _TABLE.f_k(n, k)


def f_total(n: int) -> int:
    """f(n) = sum over k of f^k(n); equals blocker_count_formula(n)."""
    check_polygon_size(n)
    return sum(f_k(n, k) for k in range(2, n - 1))


@dataclass(frozen=True)
class CountCell:
    value: int
    source: str  # recursion | formula | enumeration | brute-force


class CountMismatch(AssertionError):
    """A recorded cross-check value disagreed with the table."""


@dataclass
class CountTable:
    """f(n) and its per-k refinement for a range of n, with provenance."""

    n_max: int
    cells: dict[tuple[int, int], CountCell] = field(default_factory=dict)
    totals: dict[int, CountCell] = field(default_factory=dict)

    @classmethod
    def build(cls, n_max: int) -> "CountTable":
        check_polygon_size(n_max)
        table = cls(n_max)
        for n in range(4, n_max + 1):
            for k in range(2, n - 1):
                table.cells[(n, k)] = CountCell(f_k(n, k), "recursion")
            table.totals[n] = CountCell(f_total(n), "recursion")
        return table

    def f(self, n: int) -> int:
        return self.totals[n].value

    def row(self, n: int) -> dict[int, CountCell]:
        return {k: self.cells[(n, k)] for k in range(2, n - 1)}

    def record(self, n: int, k: int | None, value: int, source: str) -> None:
        """Attach an independently obtained value; it must agree."""
        cell = self.totals[n] if k is None else self.cells[(n, k)]
        if cell.value != value:
            where = f"f({n})" if k is None else f"f^{k}({n})"
            raise CountMismatch(f"{where}: table has {cell.value}, {source} found {value}")
        if k is None:
            self.totals[n] = CountCell(value, source)
        else:
            self.cells[(n, k)] = CountCell(value, source)


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class PrintedFormCase:
    """One evaluation of the unweighted sum F_{2n} =? sum_k F_{2n-2k}."""

    n: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    n_max: int
    game_identity_failures: tuple[int, ...]
    weighted_fib_failures: tuple[int, ...]
    printed_form: tuple[PrintedFormCase, ...]

    @property
    def weighted_ok(self) -> bool:
        return not self.game_identity_failures and not self.weighted_fib_failures

    @property
    def printed_form_mismatches(self) -> tuple[PrintedFormCase, ...]:
        return tuple(c for c in self.printed_form if not c.holds)


def verify_identities(n_max: int) -> IdentityReport:
    """Check the weighted summation identities and expose the unweighted one.

    (a) f(n) = sum_{k=1}^{n-4} k * f(n-k) for 5 <= n <= n_max;
    (b) F_{2n} = sum_{k=1}^{n} k * F_{2n-2k} for 1 <= n <= n_max (F_0 = 1).
    The unweighted variant of (b), without the factor k, is also evaluated
    for every n and reported as-is: it fails from n = 4 on (e.g. 21 vs 13),
    which is the expected outcome, not an error in this module.
    """
    if n_max < 8:
        raise ValueError(f"n_max must be >= 8, got {n_max}")

    game_failures = []
    for n in range(5, n_max + 1):
        lhs = f_total(n)
        rhs = sum(k * f_total(n - k) for k in range(1, n - 3))
        if lhs != rhs:
            game_failures.append(n)

    weighted_failures = []
    printed = []
    for n in range(1, n_max + 1):
        lhs = fib(2 * n)
        weighted = sum(k * fib(2 * n - 2 * k) for k in range(1, n + 1))
        if lhs != weighted:
            weighted_failures.append(n)
        unweighted = sum(fib(2 * n - 2 * k) for k in range(1, n + 1))
        printed.append(PrintedFormCase(n, lhs, unweighted))

    return IdentityReport(
        n_max=n_max,
        game_identity_failures=tuple(game_failures),
        weighted_fib_failures=tuple(weighted_failures),
        printed_form=tuple(printed),
    )
