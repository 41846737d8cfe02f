"""Partitions in a (k, l)-hook, standard Young tableaux and hook sums.

A partition is kept as a tuple of weakly decreasing positive parts. The
hook constraint (k, l) admits a partition when its (k+1)-th part is at
most l, i.e. at most k long rows and all further rows of length <= l.

Partition streams are in reverse-lexicographic order: ``(3), (2, 1),
(1, 1, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from humplab.combinat import CapExceeded, binomial, catalan, exact_div, factorial

__all__ = [
    "Partition",
    "HookConstraint",
    "Tableau",
    "SYT_ENUM_CAP",
    "generate_partitions",
    "generate_hook_partitions",
    "syt_count",
    "syt_enumerate",
    "hook_sum",
    "strip_sum_closed",
    "s11_closed",
    "s21_closed",
    "s21_closed_exact",
    "s21_bracket",
]

SYT_ENUM_CAP = 10


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def row(self, i: int) -> int:
        """Length of row ``i`` (0-based), 0 past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class HookConstraint:
    k: int
    ell: int

    def __post_init__(self):
        if self.k < 0 or self.ell < 0:
            raise ValueError(f"hook parameters must be >= 0, got k={self.k}, ell={self.ell}")

    @classmethod
    def of(cls, c: "HookConstraint | Sequence[int]") -> "HookConstraint":
        if isinstance(c, HookConstraint):
            return c
        k, ell = c
        return cls(int(k), int(ell))

    def admits(self, lam: Partition | Sequence[int]) -> bool:
        parts = tuple(lam)
        return len(parts) <= self.k or parts[self.k] <= self.ell


@dataclass(frozen=True)
class Tableau:
    """A filling of ``shape`` given as rows of entries."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def is_standard(self) -> bool:
        n = self.shape.weight
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            return False
        if sorted(x for r in self.rows for x in r) != list(range(1, n + 1)):
            return False
        for i, r in enumerate(self.rows):
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
            if i and any(self.rows[i - 1][j] >= r[j] for j in range(len(r))):
                return False
        return True

    def __str__(self):
        return "\n".join(" ".join(f"{x:>2}" for x in r) for r in self.rows)


def _parts_bounded(n: int, first_max: int, row: int, c: HookConstraint | None) -> Iterator[tuple[int, ...]]:
    # yields partitions of n with parts <= first_max, rows numbered from `row`
    if n == 0:
        yield ()
        return
    bound = min(n, first_max)
    if c is not None and row >= c.k:
        bound = min(bound, c.ell)
        if bound == 0:
            return
    for p in range(bound, 0, -1):
        if c is not None and c.ell == 0 and n > p * (c.k - row):
            # the remaining rows (at most k - row of them, each <= p) can't hold n
            break
        for rest in _parts_bounded(n - p, p, row + 1, c):
            yield (p,) + rest


def generate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for parts in _parts_bounded(n, n, 0, None):
        yield Partition(parts)


def generate_hook_partitions(c: HookConstraint | Sequence[int], n: int) -> Iterator[Partition]:
    """Partitions of ``n`` admitted by the hook constraint, reverse-lex order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    c = HookConstraint.of(c)
    for parts in _parts_bounded(n, n, 0, c):
        yield Partition(parts)


def _as_partition(lam: Partition | Iterable[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def hook_lengths(lam: Partition | Iterable[int]) -> list[list[int]]:
    lam = _as_partition(lam)
    conj = lam.conjugate()
    return [[p - j + conj[j] - i - 1 for j in range(p)] for i, p in enumerate(lam.parts)]


def syt_count(lam: Partition | Iterable[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = _as_partition(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return exact_div(factorial(lam.weight), prod, f"hook formula for {lam}")


def syt_enumerate(lam: Partition | Iterable[int], cap: int = SYT_ENUM_CAP) -> Iterator[Tableau]:
    """Brute-force every SYT of shape ``lam`` by placing 1, 2, ..., n in turn.

    Entry ``m`` may go at the end of any row that is still short of its
    target length and strictly shorter than the row above. Tableaux come out
    ordered by the row index chosen for 1, then 2, and so on.
    """
    lam = _as_partition(lam)
    n = lam.weight
    if n > cap:
        raise CapExceeded(f"syt_enumerate refuses shapes of size {n} > cap {cap}; use syt_count")
    shape = lam.parts
    rows: list[list[int]] = [[] for _ in shape]

    def place(m: int) -> Iterator[Tableau]:
        if m > n:
            yield Tableau(lam, tuple(tuple(r) for r in rows))
            return
        for i, target in enumerate(shape):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(m)
                yield from place(m + 1)
                rows[i].pop()

    yield from place(1)


def hook_sum(c: HookConstraint | Sequence[int], n: int) -> int:
    """S(k, l; n): the number of SYT whose shape has size n and lies in the hook."""
    return sum(syt_count(lam) for lam in generate_hook_partitions(c, n))


def strip_sum_closed(k: int, n: int) -> int:
    """Closed form for S(k, 0; n), k in 2..5."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k == 2:
        return binomial(n, n // 2)
    if k == 3:
        # binom(2j, j) / (j + 1) is the Catalan number C_j
        return sum(binomial(n, 2 * j) * catalan(j) for j in range(n // 2 + 1))
    if k == 4:
        return catalan((n + 1) // 2) * catalan((n + 2) // 2)
    if k == 5:
        total = 0
        for j in range(n // 2 + 1):
            num = 6 * binomial(n, 2 * j) * catalan(j) * factorial(2 * j + 2)
            total += exact_div(num, factorial(j + 2) * factorial(j + 3), f"S(5,0;{n}) term j={j}")
        return total
    raise ValueError(f"strip closed form known only for k in 2..5, got k={k}")


def s11_closed(n: int) -> int:
    if n < 1:
        raise ValueError(f"S(1,1;n) = 2^(n-1) needs n >= 1, got {n}")
    return 1 << (n - 1)


def s21_bracket(n: int) -> tuple[int, int]:
    """The two sums inside the S(2,1; n) closed form, before the 1/4 and +1."""
    first = sum(binomial(n - r, (n - r) // 2) * binomial(n, r) for r in range(n))
    second = 0
    for k in range(1, n // 2):
        q = exact_div(factorial(n), factorial(k) * factorial(k + 1) * factorial(n - 2 * k - 2),
                      f"S(2,1;{n}) term k={k}")
        second += exact_div(q, (n - k - 1) * (n - k), f"S(2,1;{n}) term k={k}")
    return first, second


def s21_closed_exact(n: int) -> Fraction:
    """The S(2,1; n) closed form evaluated as a rational, with no range check.

    It equals the hook sum for n = 0 and n >= 2; at n = 1 it gives 5/4.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    first, second = s21_bracket(n)
    return Fraction(first + second, 4) + 1


def s21_closed(n: int) -> int:
    """Closed form for S(2,1; n), valid for n >= 2."""
    if n < 2:
        raise ValueError(f"S(2,1;n) closed form is valid only for n >= 2, got {n}")
    first, second = s21_bracket(n)
    return exact_div(first + second, 4, f"S(2,1;{n})") + 1
