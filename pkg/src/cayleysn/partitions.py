"""Integer partitions, Young diagrams, cycle types and class sizes.

Partitions are listed in decreasing lexicographic order throughout the
package, so ``(n)`` comes first and ``(1, ..., 1)`` last.  Text notation:
partitions are written ``"11,5"`` and cycle types ``"5^3 1^1"``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import ParseError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Doubles as the label of an irreducible representation of S_n.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def first_row(self) -> int:
        return self[0] if self else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(p: Iterable[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return Partition(())
    try:
        parts = sorted((int(x) for x in text.replace(" ", "").split(",") if x), reverse=True)
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}") from exc
    if any(p < 1 for p in parts):
        raise ParseError(f"bad partition {text!r}: parts must be positive")
    return Partition(parts)


def _partitions(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def transpose(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition(())
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def hook_lengths(p: Iterable[int]) -> list[int]:
    p = tuple(p)
    conj = transpose(p)
    return [p[i] - j + conj[j] - i - 1 for i in range(len(p)) for j in range(p[i])]


@lru_cache(maxsize=65536)
def _dimension(parts: tuple[int, ...]) -> int:
    prod = 1
    for h in hook_lengths(parts):
        prod *= h
    return factorial(sum(parts)) // prod


def dimension(p: Iterable[int]) -> int:
    """Dimension of the irrep labelled by ``p``, by the hook length formula."""
    return _dimension(tuple(p))


def blocks_outside_first_row(p: Iterable[int]) -> int:
    p = tuple(p)
    return sum(p) - (p[0] if p else 0)


def blocks_outside_first_column(p: Iterable[int]) -> int:
    p = tuple(p)
    return sum(p) - len(p)


def removable_corners(p: Iterable[int]) -> list[int]:
    """Row indices whose last box can be removed."""
    p = tuple(p)
    return [i for i in range(len(p)) if i + 1 == len(p) or p[i] > p[i + 1]]


class CycleType:
    """Conjugacy class of S_n, stored as counts ``c_l`` of ``l``-cycles.

    Immutable and hashable.  ``c(l)`` returns the count for any ``l``
    (zero when absent).
    """

    __slots__ = ("_counts", "_n", "_hash")

    def __init__(self, counts: Mapping[int, int]):
        items = []
        for length, count in counts.items():
            length, count = int(length), int(count)
            if length < 1 or count < 0:
                raise ValueError(f"invalid cycle count {length}^{count}")
            if count:
                items.append((length, count))
        items.sort(reverse=True)
        self._counts = tuple(items)
        self._n = sum(length * count for length, count in items)
        self._hash = hash(self._counts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "CycleType":
        return cls(Counter(parts))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls({1: n} if n else {})

    @property
    def n(self) -> int:
        return self._n

    @property
    def counts(self) -> tuple[tuple[int, int], ...]:
        """``(length, count)`` pairs, longest cycles first."""
        return self._counts

    def c(self, length: int) -> int:
        for ell, count in self._counts:
            if ell == length:
                return count
        return 0

    def prefix(self, k: int) -> tuple[int, ...]:
        """``(c_1, ..., c_k)``."""
        return tuple(self.c(i) for i in range(1, k + 1))

    @property
    def num_cycles(self) -> int:
        return sum(count for _, count in self._counts)

    @property
    def sign(self) -> int:
        return -1 if (self._n - self.num_cycles) % 2 else 1

    @property
    def support_size(self) -> int:
        return self._n - self.c(1)

    @property
    def parts(self) -> Partition:
        return Partition(length for length, count in self._counts for _ in range(count))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleType) and self._counts == other._counts

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "CycleType") -> bool:
        # decreasing lexicographic on parts, matching partition order
        return self.parts > other.parts

    def __repr__(self) -> str:
        return f"CycleType({format_cycle_type(self)!r})"

    def __str__(self) -> str:
        return format_cycle_type(self)


def format_cycle_type(t: CycleType) -> str:
    return " ".join(f"{length}^{count}" for length, count in t.counts)


def parse_cycle_type(text: str) -> CycleType:
    """Parse ``"5^3 1^1"``; a bare length ``"5"`` means one cycle."""
    counts: Counter = Counter()
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty cycle type")
    for tok in tokens:
        base, _, exp = tok.partition("^")
        try:
            length = int(base)
            count = int(exp) if exp else 1
        except ValueError as exc:
            raise ParseError(f"bad cycle-type factor {tok!r}") from exc
        if length < 1 or count < 0:
            raise ParseError(f"bad cycle-type factor {tok!r}")
        counts[length] += count
    return CycleType(counts)


def enumerate_cycle_types(n: int) -> list[CycleType]:
    """Conjugacy classes of S_n, in the canonical partition order."""
    return [CycleType.from_parts(p) for p in _partitions(n, n)]


def class_size(t: CycleType) -> int:
    denom = 1
    for length, count in t.counts:
        denom *= length**count * factorial(count)
    return factorial(t.n) // denom
