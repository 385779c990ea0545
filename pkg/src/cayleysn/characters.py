"""Exact irreducible characters of S_n.

Two independent Murnaghan-Nakayama routes live here:

* :func:`mn_character` removes border strips from a single diagram,
  longest cycle first, memoized on ``(shape, remaining cycles)``.
* :func:`iter_character_columns` grows all diagrams at once by *adding*
  rim hooks, walking cycle types as a prefix tree so that classes sharing
  their longest cycles share work.  Diagrams are beta-sets encoded as
  bitmasks.  This is what the scans use.

Both are pure; memo tables are per process, so results are identical
whether called from one worker or many.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import repeat
from typing import Callable, Iterable, Iterator, Sequence

from .errors import SizeMismatchError
from .partitions import (
    CycleType,
    Partition,
    dimension,
    enumerate_partitions,
    removable_corners,
)

# --------------------------------------------------------------------------
# single values: strip removal


def _shape_from_betas(betas: Sequence[int]) -> tuple[int, ...]:
    length = len(betas)
    shape = [b - (length - 1 - i) for i, b in enumerate(betas)]
    while shape and shape[-1] == 0:
        shape.pop()
    return tuple(shape)


@lru_cache(maxsize=1 << 20)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    if cycles[0] == 1:
        return dimension(shape)
    r, rest = cycles[0], cycles[1:]
    length = len(shape)
    betas = [shape[i] + length - 1 - i for i in range(length)]
    present = set(betas)
    total = 0
    for b in betas:
        t = b - r
        if t < 0 or t in present:
            continue
        height = sum(1 for x in betas if t < x < b)
        new = sorted((t if x == b else x for x in betas), reverse=True)
        value = _mn(_shape_from_betas(new), rest)
        total += -value if height & 1 else value
    return total


def mn_character(shape: Iterable[int], mu: CycleType) -> int:
    """Exact character value chi_shape(mu)."""
    shape = tuple(shape)
    if sum(shape) != mu.n:
        raise SizeMismatchError(f"partition of {sum(shape)} vs cycle type of {mu.n}")
    return _mn(shape, tuple(mu.parts))


def normalized_character(shape: Iterable[int], mu: CycleType) -> Fraction:
    shape = tuple(shape)
    return Fraction(mn_character(shape, mu), dimension(shape))


def clear_memo() -> None:
    _mn.cache_clear()
    character_column.cache_clear()


# --------------------------------------------------------------------------
# whole columns: hook addition on beta-set bitmasks
#
# With n beads, the empty diagram is the mask with bits 0..n-1 set.  Adding
# an r-rim hook moves a bead from b to b+r (target empty); the sign is
# (-1)^(beads strictly between).


def _add_hooks(state: dict[int, int], r: int) -> dict[int, int]:
    new: dict[int, int] = {}
    between_mask = (1 << (r - 1)) - 1
    for mask, value in state.items():
        m = mask
        while m:
            low = m & -m
            m ^= low
            b = low.bit_length() - 1
            if (mask >> (b + r)) & 1:
                continue
            target = mask ^ low ^ (low << r)
            v = -value if ((mask >> (b + 1)) & between_mask).bit_count() & 1 else value
            new[target] = new.get(target, 0) + v
    return {k: v for k, v in new.items() if v}


def partition_mask(shape: Sequence[int], n: int) -> int:
    mask = 0
    for i in range(n):
        part = shape[i] if i < len(shape) else 0
        mask |= 1 << (part + n - 1 - i)
    return mask


@lru_cache(maxsize=64)
def _mask_index(n: int) -> dict[int, int]:
    return {partition_mask(p, n): i for i, p in enumerate(enumerate_partitions(n))}


@lru_cache(maxsize=64)
def _partitions_and_dims(n: int) -> tuple[tuple[Partition, ...], tuple[int, ...]]:
    parts = tuple(enumerate_partitions(n))
    return parts, tuple(dimension(p) for p in parts)


def partitions_and_dims(n: int) -> tuple[tuple[Partition, ...], tuple[int, ...]]:
    """Canonically ordered partitions of n with their dimensions (cached)."""
    return _partitions_and_dims(n)


def _empty_state(n: int) -> dict[int, int]:
    return {(1 << n) - 1: 1}


def _state_to_column(state: dict[int, int], index: dict[int, int]) -> dict[int, int]:
    return {index[mask]: value for mask, value in state.items()}


@lru_cache(maxsize=4096)
def character_column(mu: CycleType) -> dict[int, int]:
    """Nonzero values ``{partition index: chi}`` for one class.

    Indices refer to :func:`enumerate_partitions` order; absent indices are
    zeros.
    """
    state = _empty_state(mu.n)
    for part in mu.parts:
        state = _add_hooks(state, part)
    return _state_to_column(state, _mask_index(mu.n))


def column_tasks(n: int) -> list[tuple[int, ...]]:
    """Cycle-type prefixes that split S_n's classes into disjoint subtrees.

    Concatenating the subtrees in this order gives canonical order.
    """
    if n == 0:
        return [()]
    tasks: list[tuple[int, ...]] = []
    for first in range(n, 0, -1):
        rest = n - first
        if rest == 0:
            tasks.append((first,))
            continue
        for second in range(min(first, rest), 0, -1):
            tasks.append((first, second))
    return tasks


def iter_character_columns(
    n: int, prefix: tuple[int, ...] = ()
) -> Iterator[tuple[CycleType, dict[int, int]]]:
    """Yield ``(class, column)`` for every class of S_n starting with ``prefix``.

    Classes come out in canonical order.
    """
    index = _mask_index(n)
    state = _empty_state(n)
    for part in prefix:
        state = _add_hooks(state, part)
    remaining = n - sum(prefix)
    maxpart = prefix[-1] if prefix else n
    parts = list(prefix)

    def walk(state, remaining, maxpart):
        if remaining == 0:
            yield CycleType.from_parts(parts), _state_to_column(state, index)
            return
        for p in range(min(maxpart, remaining), 0, -1):
            parts.append(p)
            yield from walk(_add_hooks(state, p), remaining - p, p)
            parts.pop()

    yield from walk(state, remaining, maxpart)


def _run_task(n: int, prefix: tuple[int, ...], func: Callable) -> list:
    return [func(mu, column) for mu, column in iter_character_columns(n, prefix)]


def map_columns(
    n: int,
    func: Callable[[CycleType, dict[int, int]], object],
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> list:
    """Apply ``func(class, column)`` to every class of S_n.

    ``func`` must be picklable when ``workers > 1``.  The result list is in
    canonical class order regardless of the worker count.
    """
    tasks = column_tasks(n)
    results: list = []
    if workers <= 1:
        chunks: Iterable[list] = (_run_task(n, t, func) for t in tasks)
        for done, chunk in enumerate(chunks, 1):
            results.extend(chunk)
            if progress:
                progress(done, len(tasks))
        return results
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() preserves submission order
        for done, chunk in enumerate(pool.map(_run_task, repeat(n), tasks, repeat(func)), 1):
            results.extend(chunk)
            if progress:
                progress(done, len(tasks))
    return results


class CharacterTable:
    """Full character table of S_n, columns keyed by class."""

    def __init__(self, n: int, columns: dict[CycleType, dict[int, int]]):
        self.n = n
        self.partitions, self.dims = partitions_and_dims(n)
        self.columns = columns

    def value(self, shape: Iterable[int], mu: CycleType) -> int:
        idx = _mask_index(self.n)[partition_mask(tuple(shape), self.n)]
        return self.columns[mu].get(idx, 0)

    def classes(self) -> list[CycleType]:
        return sorted(self.columns)


def _identity_pair(mu, column):
    return mu, column


def character_table(n: int, workers: int = 1) -> CharacterTable:
    pairs = map_columns(n, _identity_pair, workers=workers)
    return CharacterTable(n, dict(pairs))


# --------------------------------------------------------------------------
# branching and the Larsen-Shalev bound


def branching_restrict(shape: Iterable[int]) -> list[Partition]:
    """Diagrams of n-1 obtained by removing one corner, canonical order."""
    shape = tuple(shape)
    if sum(shape) < 2:
        raise ValueError("branching needs n >= 2")
    out = []
    for i in removable_corners(shape):
        new = list(shape)
        new[i] -= 1
        if new[i] == 0:
            new.pop(i)
        out.append(Partition(new))
    return sorted(out, reverse=True)


def ls_bound(n: int, c1: int, dim: int, eps: float) -> float:
    """Right-hand side ``dim ** (-log(n/f) / (2 log n) + eps)``, ``f = max(c1, 1)``.

    Float diagnostic only; ``eps`` is caller supplied.
    """
    if n < 2 or dim < 1:
        raise ValueError("need n >= 2 and dim >= 1")
    f = max(c1, 1)
    exponent = -math.log(n / f) / (2 * math.log(n)) + float(eps)
    return math.exp(exponent * math.log(dim))
