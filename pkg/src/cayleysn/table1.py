"""Closed-form characters of the irreps with at most four boxes outside the
first row, as polynomials in the cycle counts ``c_1..c_4``.

Each polynomial is stored as ``{(a1, a2, a3, a4): coefficient}`` meaning
``sum coefficient * c1**a1 * c2**a2 * c3**a3 * c4**a4``.  The transposed
family's character is the sign times the same polynomial.  Valid for
``n >= 2k`` where ``k`` is the number of boxes outside the first row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from math import lcm
from typing import Sequence

from .errors import DomainError
from .partitions import CycleType, Partition, transpose

Monomial = tuple[int, int, int, int]

TABLE1: dict[tuple[int, ...], dict[Monomial, F]] = {
    (): {(0, 0, 0, 0): F(1)},
    (1,): {(1, 0, 0, 0): F(1), (0, 0, 0, 0): F(-1)},
    (2,): {(2, 0, 0, 0): F(1, 2), (1, 0, 0, 0): F(-3, 2), (0, 1, 0, 0): F(1)},
    (1, 1): {(2, 0, 0, 0): F(1, 2), (1, 0, 0, 0): F(-3, 2), (0, 1, 0, 0): F(-1), (0, 0, 0, 0): F(1)},
    (3,): {
        (3, 0, 0, 0): F(1, 6), (2, 0, 0, 0): F(-1), (1, 1, 0, 0): F(1), (1, 0, 0, 0): F(5, 6),
        (0, 1, 0, 0): F(-1), (0, 0, 1, 0): F(1),
    },
    (2, 1): {(3, 0, 0, 0): F(1, 3), (2, 0, 0, 0): F(-2), (1, 0, 0, 0): F(8, 3), (0, 0, 1, 0): F(-1)},
    (1, 1, 1): {
        (3, 0, 0, 0): F(1, 6), (2, 0, 0, 0): F(-1), (1, 1, 0, 0): F(-1), (1, 0, 0, 0): F(11, 6),
        (0, 1, 0, 0): F(1), (0, 0, 1, 0): F(1), (0, 0, 0, 0): F(-1),
    },
    (4,): {
        (4, 0, 0, 0): F(1, 24), (3, 0, 0, 0): F(-5, 12), (2, 1, 0, 0): F(1, 2), (2, 0, 0, 0): F(23, 24),
        (1, 1, 0, 0): F(-3, 2), (1, 0, 1, 0): F(1), (1, 0, 0, 0): F(-7, 12), (0, 2, 0, 0): F(1, 2),
        (0, 1, 0, 0): F(-1, 2), (0, 0, 1, 0): F(-1), (0, 0, 0, 1): F(1),
    },
    (3, 1): {
        (4, 0, 0, 0): F(1, 8), (3, 0, 0, 0): F(-5, 4), (2, 1, 0, 0): F(1, 2), (2, 0, 0, 0): F(27, 8),
        (1, 1, 0, 0): F(-3, 2), (1, 0, 0, 0): F(-9, 4), (0, 2, 0, 0): F(-1, 2), (0, 1, 0, 0): F(3, 2),
        (0, 0, 0, 1): F(-1),
    },
    (2, 2): {
        (4, 0, 0, 0): F(1, 12), (3, 0, 0, 0): F(-5, 6), (2, 0, 0, 0): F(29, 12), (1, 0, 1, 0): F(-1),
        (1, 0, 0, 0): F(-5, 3), (0, 2, 0, 0): F(1), (0, 1, 0, 0): F(-2), (0, 0, 1, 0): F(1),
    },
    (2, 1, 1): {
        (4, 0, 0, 0): F(1, 8), (3, 0, 0, 0): F(-5, 4), (2, 1, 0, 0): F(-1, 2), (2, 0, 0, 0): F(31, 8),
        (1, 1, 0, 0): F(3, 2), (1, 0, 0, 0): F(-15, 4), (0, 2, 0, 0): F(-1, 2), (0, 1, 0, 0): F(1, 2),
        (0, 0, 0, 1): F(1),
    },
    (1, 1, 1, 1): {
        (4, 0, 0, 0): F(1, 24), (3, 0, 0, 0): F(-5, 12), (2, 1, 0, 0): F(-1, 2), (2, 0, 0, 0): F(35, 24),
        (1, 1, 0, 0): F(3, 2), (1, 0, 1, 0): F(1), (1, 0, 0, 0): F(-25, 12), (0, 2, 0, 0): F(1, 2),
        (0, 1, 0, 0): F(-3, 2), (0, 0, 1, 0): F(-1), (0, 0, 0, 1): F(-1), (0, 0, 0, 0): F(1),
    },
}


def _integer_form(poly: dict[Monomial, F]) -> tuple[int, tuple[tuple[Monomial, int], ...]]:
    denom = lcm(*(c.denominator for c in poly.values()))
    return denom, tuple((m, int(c * denom)) for m, c in poly.items())


_INTEGER_FORMS = {shape: _integer_form(poly) for shape, poly in TABLE1.items()}


@dataclass(frozen=True, order=True)
class FamilyId:
    """A closed-form family: fixed structure outside the first row, maybe transposed."""

    outside: tuple[int, ...]
    transposed: bool = False

    def __post_init__(self):
        if tuple(self.outside) not in TABLE1:
            raise ValueError(f"no closed form for outside structure {self.outside}")

    @property
    def k(self) -> int:
        return sum(self.outside)

    def partition(self, n: int) -> Partition:
        if n - self.k < (self.outside[0] if self.outside else 0):
            raise DomainError(f"family {self} not defined at n={n}")
        p = Partition((n - self.k,) + tuple(self.outside))
        return transpose(p) if self.transposed else p

    def __str__(self) -> str:
        inner = ",".join(["n-%d" % self.k if self.k else "n"] + [str(x) for x in self.outside])
        return f"({inner})" + ("^t" if self.transposed else "")


ALL_FAMILIES: tuple[FamilyId, ...] = tuple(
    FamilyId(shape, t) for shape in TABLE1 for t in (False, True)
)


def evaluate_polynomial(shape: tuple[int, ...], c: Sequence[int]) -> int:
    c = tuple(c) + (0,) * (4 - len(c))
    denom, terms = _INTEGER_FORMS[shape]
    total = 0
    for (a1, a2, a3, a4), coeff in terms:
        total += coeff * c[0] ** a1 * c[1] ** a2 * c[2] ** a3 * c[3] ** a4
    value, rem = divmod(total, denom)
    if rem:
        raise ArithmeticError(f"closed-form polynomial {shape} non-integral at {c}")
    return value


def table1_character(family: FamilyId, n: int, c: Sequence[int], sign: int) -> int:
    """Character of ``family`` at n on a permutation with cycle counts ``c``."""
    if n < 2 * family.k:
        raise DomainError(f"closed form {family} needs n >= {2 * family.k}, got n={n}")
    if len(c) > 4:
        raise ValueError("at most c_1..c_4 are used")
    if any(x < 0 for x in c):
        raise ValueError(f"negative cycle counts {tuple(c)}")
    if sum((i + 1) * x for i, x in enumerate(c)) > n:
        raise ValueError(f"cycle counts {tuple(c)} exceed n={n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    value = evaluate_polynomial(family.outside, c)
    return sign * value if family.transposed else value


def table1_character_of(family: FamilyId, mu: CycleType) -> int:
    return table1_character(family, mu.n, mu.prefix(4), mu.sign)


def family_dimension(family: FamilyId, n: int) -> int:
    """Dimension polynomial ``p(n, 0, 0, 0)``; identical for the transpose."""
    return evaluate_polynomial(family.outside, (n, 0, 0, 0))


def weighted_degree(monomial: Monomial) -> int:
    return sum((i + 1) * a for i, a in enumerate(monomial))


def dimension_degree(shape: tuple[int, ...]) -> int:
    """Degree in ``c_1`` of ``p(c_1, 0, 0, 0)``."""
    return max((m[0] for m, c in TABLE1[shape].items() if c and not any(m[1:])), default=0)


def crosscheck(n: int) -> tuple[int, list[tuple[FamilyId, CycleType, int, int]]]:
    """Compare every applicable family against Murnaghan-Nakayama at n.

    Returns ``(cases checked, [(family, class, table value, MN value), ...])``.
    """
    from .characters import _mask_index, iter_character_columns, partition_mask

    index = _mask_index(n)
    families = [f for f in ALL_FAMILIES if n >= 2 * f.k and n >= 1]
    checked, bad = 0, []
    for mu, column in iter_character_columns(n):
        for fam in families:
            expected = column.get(index[partition_mask(fam.partition(n), n)], 0)
            got = table1_character_of(fam, mu)
            checked += 1
            if got != expected:
                bad.append((fam, mu, got, expected))
    return checked, bad
