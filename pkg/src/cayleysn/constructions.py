"""Normal elements that kill every irrep with few boxes off the first row.

If the weights ``alpha_C |C|`` of a non-negative normal element reproduce
the law of ``(c_1, ..., c_k)`` under the uniform measure on ``S_m``
(``m = 2k``, or experimentally ``m = k``), then every irrep with at most
``k`` boxes outside the first row or column has eigenvalue zero, while
odd classes with many ``(k+1)``-cycles push some irrep with ``k+1`` such
boxes strictly above zero.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .partitions import (
    CycleType,
    Partition,
    class_size,
    enumerate_cycle_types,
    enumerate_partitions,
    transpose,
)
from .records import q
from .spectra import NormalElement, eigenvalue


@dataclass
class CycleCountDistribution:
    k: int
    m: int
    rows: list[tuple[tuple[int, ...], Fraction]]

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.rows)


def joint_cycle_distribution(k: int, m: int) -> CycleCountDistribution:
    """Law of ``(c_1, ..., c_k)`` for a uniform permutation of S_m.

    Rows are sorted by the count vector, largest first.
    """
    if not m >= k >= 1:
        raise ValueError("need m >= k >= 1")
    mass: dict[tuple[int, ...], int] = defaultdict(int)
    for mu in enumerate_cycle_types(m):
        mass[mu.prefix(k)] += class_size(mu)
    total = factorial(m)
    rows = [(vec, Fraction(mass[vec], total)) for vec in sorted(mass, reverse=True)]
    return CycleCountDistribution(k, m, rows)


def realize_row(n: int, k: int, vector: tuple[int, ...]) -> CycleType:
    """An odd class of S_n with prescribed ``(c_1..c_k)`` and many ``(k+1)``-cycles.

    The prescribed short cycles are placed first, the rest is filled with
    ``(k+1)``-cycles, a leftover remainder is folded into one longer tail
    cycle, and if the sign comes out even two free cycles are merged.
    Merging two cycles always flips the sign.
    """
    counts = {i + 1: c for i, c in enumerate(vector) if c}
    used = sum((i + 1) * c for i, c in enumerate(vector))
    rest = n - used
    filler = k + 1
    if rest < 0:
        raise DomainError(f"row {vector}: needs {used} points, n={n}")
    fillers, remainder = divmod(rest, filler)
    tail = 0
    if remainder:
        if fillers == 0:
            raise DomainError(f"row {vector}: {rest} leftover points cannot form cycles longer than {k}")
        fillers -= 1
        tail = filler + remainder
    parity = sum((length - 1) * c for length, c in counts.items())
    parity += fillers * (filler - 1) + (tail - 1 if tail else 0)
    if parity % 2 == 0:
        if tail and fillers >= 1:
            fillers -= 1
            tail += filler
        elif fillers >= 2:
            fillers -= 2
            tail = 2 * filler
        else:
            raise DomainError(f"row {vector}: no room to make the class odd at n={n}")
    counts[filler] = counts.get(filler, 0) + fillers
    if tail:
        counts[tail] = counts.get(tail, 0) + 1
    mu = CycleType(counts)
    assert mu.n == n and mu.sign == -1 and mu.prefix(k) == tuple(vector)
    return mu


@dataclass
class AnnihilatorSpec:
    n: int
    k: int
    m: int
    rows: list[tuple[tuple[int, ...], Fraction, CycleType, Fraction]]

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "realization": "canonical: short cycles, (k+1)-cycle filler, tail, parity merge",
            "rows": [
                {"counts": list(vec), "probability": q(p), "class": str(mu), "alpha": q(alpha)}
                for vec, p, mu, alpha in self.rows
            ],
        }


def build_annihilator(n: int, k: int, m: int | None = None) -> tuple[NormalElement, AnnihilatorSpec]:
    """Non-negative normal element on odd classes matching the S_m law of ``c_1..c_k``."""
    m = 2 * k if m is None else m
    dist = joint_cycle_distribution(k, m)
    rows, coeffs = [], {}
    for vec, prob in dist.rows:
        mu = realize_row(n, k, vec)
        alpha = prob / class_size(mu)
        rows.append((vec, prob, mu, alpha))
        coeffs[mu] = alpha
    return NormalElement(n, coeffs), AnnihilatorSpec(n, k, m, rows)


def induced_distribution(sigma: NormalElement, k: int) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for mu, weight in sigma.class_weights().items():
        out[mu.prefix(k)] += weight
    return dict(out)


def shallow_irreps(n: int, depth: int, exact: bool = False) -> list[Partition]:
    """Irreps with at most (or exactly) ``depth`` boxes off the first row or column.

    Depth 0 (triv, sgn) is never included.
    """
    found: set[Partition] = set()
    depths = [depth] if exact else range(1, depth + 1)
    for j in depths:
        for nu in enumerate_partitions(j):
            if n - j < nu[0]:
                continue
            p = Partition((n - j,) + tuple(nu))
            found.add(p)
            found.add(transpose(p))
    return sorted(found, reverse=True)


@dataclass
class AnnihilationReport:
    k: int
    values: dict[Partition, Fraction]

    @property
    def ok(self) -> bool:
        return all(v == 0 for v in self.values.values())


def verify_annihilation(sigma: NormalElement, k: int) -> AnnihilationReport:
    values = {p: eigenvalue(sigma, p) for p in shallow_irreps(sigma.n, k)}
    return AnnihilationReport(k, values)


def find_beating_irrep(sigma: NormalElement, k: int) -> list[tuple[Partition, Fraction]]:
    """Irreps with exactly ``k+1`` boxes off the first row/column and positive eigenvalue."""
    out = []
    for p in shallow_irreps(sigma.n, k + 1, exact=True):
        value = eigenvalue(sigma, p)
        if value > 0:
            out.append((p, value))
    return out
