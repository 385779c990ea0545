"""Eigenvalues of normal (conjugation-invariant) elements of R[S_n].

A normal element acts on each irrep as the scalar
``sum_C alpha_C |C| chi(C) / dim``, so every spectral question reduces to
exact rational arithmetic on character values.  Ties are genuine ties.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Mapping

from .characters import (
    CharacterTable,
    character_column,
    map_columns,
    mn_character,
    partitions_and_dims,
)
from .errors import DomainError, SizeMismatchError
from .partitions import (
    CycleType,
    Partition,
    blocks_outside_first_column,
    blocks_outside_first_row,
    class_size,
    dimension,
    enumerate_cycle_types,
    enumerate_partitions,
)
from .table1 import FamilyId, family_dimension, table1_character_of


@dataclass(frozen=True, eq=True)
class NormalElement:
    """``sum_C alpha_C * (sum of the elements of C)`` with ``alpha_C >= 0``."""

    n: int
    coeffs: Mapping[CycleType, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, alpha in self.coeffs.items():
            if mu.n != self.n:
                raise SizeMismatchError(f"class {mu} is not a class of S_{self.n}")
            alpha = Fraction(alpha)
            if alpha < 0:
                raise ValueError(f"negative coefficient {alpha} on {mu}")
            if alpha:
                clean[mu] = alpha
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def indicator(cls, mu: CycleType, weight: Fraction | int = 1) -> "NormalElement":
        return cls(mu.n, {mu: Fraction(weight)})

    @property
    def support(self) -> list[CycleType]:
        return list(self.coeffs)

    def class_weights(self) -> dict[CycleType, Fraction]:
        """``alpha_C * |C|`` per class."""
        return {mu: alpha * class_size(mu) for mu, alpha in self.coeffs.items()}

    @property
    def total_weight(self) -> Fraction:
        return sum(self.class_weights().values(), Fraction(0))

    def scaled(self, c: Fraction | int) -> "NormalElement":
        c = Fraction(c)
        if c < 0:
            raise ValueError("scale must be non-negative")
        return NormalElement(self.n, {mu: a * c for mu, a in self.coeffs.items()})


def eigenvalue(sigma: NormalElement, shape: Iterable[int]) -> Fraction:
    """The scalar by which ``sigma`` acts on the irrep ``shape``."""
    shape = Partition(shape)
    if shape.n != sigma.n:
        raise SizeMismatchError(f"partition of {shape.n} vs element of S_{sigma.n}")
    dim = dimension(shape)
    total = Fraction(0)
    for mu, weight in sigma.class_weights().items():
        total += weight * mn_character(shape, mu)
    return total / dim


def all_eigenvalues(sigma: NormalElement) -> dict[Partition, Fraction]:
    """Eigenvalue at every irrep, canonical order."""
    parts, dims = partitions_and_dims(sigma.n)
    sums = [Fraction(0)] * len(parts)
    for mu, weight in sigma.class_weights().items():
        for idx, value in character_column(mu).items():
            sums[idx] += weight * value
    return {p: s / d for p, s, d in zip(parts, sums, dims)}


@dataclass
class EigenvalueReport:
    n: int
    total: Fraction
    eigenvalues: dict[Partition, Fraction]
    value: Fraction
    argmax: list[Partition]

    @property
    def gap(self) -> Fraction:
        return self.total - self.value

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "lambda": self.value,
            "gap": self.gap,
            "argmax": self.argmax,
        }


def _nontrivial(n: int) -> list[Partition]:
    if n < 3:
        raise DomainError(f"S_{n} has no irreps besides triv and sgn")
    return enumerate_partitions(n)[1:-1]


def lambda_nontrivial(sigma: NormalElement) -> EigenvalueReport:
    """Largest eigenvalue over all irreps other than triv and sgn, with ties."""
    if sigma.n < 2:
        raise DomainError("need n >= 2")
    _nontrivial(sigma.n)
    values = all_eigenvalues(sigma)
    nontrivial = list(values.items())[1:-1]
    best = max(v for _, v in nontrivial)
    return EigenvalueReport(
        n=sigma.n,
        total=sigma.total_weight,
        eigenvalues=values,
        value=best,
        argmax=[p for p, v in nontrivial if v == best],
    )


def _column_max(column: Mapping[int, int], dims: tuple[int, ...]) -> tuple[Fraction, list[int]]:
    """Exact max of ``chi/dim`` over nontrivial indices (missing entries are 0)."""
    last = len(dims) - 1
    best_num, best_den = None, 1
    arg: list[int] = []
    for idx in range(1, last):
        num, den = column.get(idx, 0), dims[idx]
        if best_num is None:
            best_num, best_den, arg = num, den, [idx]
            continue
        lhs, rhs = num * best_den, best_num * den
        if lhs > rhs:
            best_num, best_den, arg = num, den, [idx]
        elif lhs == rhs:
            arg.append(idx)
    return Fraction(best_num, best_den), arg


def ruling_set(n: int, mu: CycleType) -> list[Partition]:
    """Irreps (other than triv, sgn) maximizing the normalized character at ``mu``."""
    return ruling_report(n, mu)[1]


def ruling_report(n: int, mu: CycleType) -> tuple[Fraction, list[Partition]]:
    if mu.n != n:
        raise SizeMismatchError(f"class {mu} is not a class of S_{n}")
    parts, dims = partitions_and_dims(n)
    _nontrivial(n)
    best, arg = _column_max(character_column(mu), dims)
    return best, [parts[i] for i in arg]


# --------------------------------------------------------------------------
# EIGHT_n

EIGHT_FAMILIES: tuple[FamilyId, ...] = (
    FamilyId((1,)),
    FamilyId((2,)),
    FamilyId((3,)),
    FamilyId((2, 1)),
    FamilyId((4,)),
    FamilyId((1,), True),
    FamilyId((2,), True),
    FamilyId((1, 1), True),
)


def _eight_members(n: int) -> list[tuple[FamilyId, Partition]]:
    if n < 8:
        raise DomainError(f"EIGHT_n needs n >= 8, got {n}")
    seen: set[Partition] = set()
    out = []
    for fam in EIGHT_FAMILIES:
        p = fam.partition(n)
        if p not in seen:
            seen.add(p)
            out.append((fam, p))
    return out


def eight_set(n: int) -> list[Partition]:
    """The eight low-depth irreps, duplicates (if any) removed."""
    return [p for _, p in _eight_members(n)]


def eight_set_duplicates(n: int) -> list[Partition]:
    members = [fam.partition(n) for fam in EIGHT_FAMILIES] if n >= 8 else []
    return [p for i, p in enumerate(members) if p in members[:i]]


def eight_values(n: int, mu: CycleType) -> dict[Partition, Fraction]:
    """Normalized characters of EIGHT_n at ``mu`` from the closed-form polynomials."""
    if mu.n != n:
        raise SizeMismatchError(f"class {mu} is not a class of S_{n}")
    return {
        p: Fraction(table1_character_of(fam, mu), family_dimension(fam, n))
        for fam, p in _eight_members(n)
    }


def eight_max(n: int, mu: CycleType) -> tuple[Fraction, list[Partition]]:
    values = eight_values(n, mu)
    best = max(values.values())
    return best, [p for p, v in values.items() if v == best]


@dataclass
class Violation:
    mu: CycleType
    global_max: Fraction
    global_argmax: list[Partition]
    eight_max: Fraction
    eight_argmax: list[Partition]

    def to_record(self) -> dict:
        return {
            "class": self.mu,
            "max": self.global_max,
            "argmax": self.global_argmax,
            "eight_max": self.eight_max,
            "eight_argmax": self.eight_argmax,
        }


@dataclass
class ScanReport:
    n: int
    classes_checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def _eight_check_column(n: int, mu: CycleType, column: dict[int, int]):
    parts, dims = partitions_and_dims(n)
    best, arg = _column_max(column, dims)
    emax, earg = eight_max(n, mu)
    if best > emax:
        return Violation(mu, best, [parts[i] for i in arg], emax, earg)
    if best < emax:
        # EIGHT_n is a subset of the scanned irreps, so this is a defect
        raise RuntimeError(f"closed forms and Murnaghan-Nakayama disagree at n={n}, {mu}")
    return None


def _scan_columns(n, func, workers, progress, table: CharacterTable | None):
    if table is not None:
        return [func(mu, table.columns[mu]) for mu in table.classes()]
    return map_columns(n, func, workers=workers, progress=progress)


def check_eight_theorem(
    n: int,
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
    table: CharacterTable | None = None,
) -> ScanReport:
    """Exhaustive check that some member of EIGHT_n rules for every class of S_n."""
    if n < 8:
        raise DomainError(f"EIGHT_n needs n >= 8, got {n}")
    results = _scan_columns(n, partial(_eight_check_column, n), workers, progress, table)
    return ScanReport(n, len(results), [r for r in results if r is not None])


# --------------------------------------------------------------------------
# predicted ruling irreps for c_1 <= 1 (and c_1 >= 2)


@dataclass(frozen=True)
class TableRow:
    table: int  # 2 = even classes, 3 = odd classes
    condition: str
    family: FamilyId
    predicate: Callable[[int, int, int, int, int], bool] = field(compare=False, repr=False)


def _row(table, condition, family, predicate):
    return TableRow(table, condition, family, predicate)


_STD, _STD_T = FamilyId((1,)), FamilyId((1,), True)
_TWO, _TWO_T = FamilyId((2,)), FamilyId((2,), True)
_ONE_ONE_T = FamilyId((1, 1), True)
_THREE, _TWO_ONE, _FOUR = FamilyId((3,)), FamilyId((2, 1)), FamilyId((4,))

# For even classes a diagram and its transpose tie; the EIGHT_n member is listed.
TABLE2_ROWS: tuple[TableRow, ...] = (
    _row(2, "c1>=2", _STD, lambda n, c1, c2, c3, c4: c1 >= 2),
    _row(2, "c1=1,c2>=2", _TWO, lambda n, c1, c2, c3, c4: c1 == 1 and c2 >= 2),
    _row(2, "c1=0,c2>=1", _TWO, lambda n, c1, c2, c3, c4: c1 == 0 and c2 >= 1),
    _row(2, "c1=0,c2=0,c3<=(n-4)/3", _ONE_ONE_T,
         lambda n, c1, c2, c3, c4: c1 == 0 and c2 == 0 and 3 * c3 <= n - 4),
    _row(2, "c1=1,c2=1,c3>=1", _THREE, lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 1 and c3 >= 1),
    _row(2, "c1=1,c2=0,c3>=2", _THREE, lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0 and c3 >= 2),
    _row(2, "c1=1,c2=0,c3=1,c4<=(n-5)/4", _THREE,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0 and c3 == 1 and 4 * c4 <= n - 5),
    _row(2, "c1=0,c2=0,c3=n/3", _THREE,
         lambda n, c1, c2, c3, c4: c1 == 0 and c2 == 0 and 3 * c3 == n),
    _row(2, "c1=1,c2=1,c3=0,c4<=(n+3)/8", _TWO_ONE,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 1 and c3 == 0 and 8 * c4 <= n + 3),
    _row(2, "c1=1,c2=0,c3=0,c4<=(n-5)/8", _TWO_ONE,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0 and c3 == 0 and 8 * c4 <= n - 5),
    _row(2, "c1=1,c2=1,c3=0,c4>=(n+4)/8", _FOUR,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 1 and c3 == 0 and 8 * c4 >= n + 4),
    _row(2, "c1=1,c2=0,c3=1,c4=(n-4)/4", _FOUR,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0 and c3 == 1 and 4 * c4 == n - 4),
    _row(2, "c1=1,c2=0,c3=0,c4>=(n-4)/8", _FOUR,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0 and c3 == 0 and 8 * c4 >= n - 4),
)

TABLE3_ROWS: tuple[TableRow, ...] = (
    _row(3, "c1>=2", _STD, lambda n, c1, c2, c3, c4: c1 >= 2),
    _row(3, "c1=0,c2<=(n-3)/2", _STD_T, lambda n, c1, c2, c3, c4: c1 == 0 and 2 * c2 <= n - 3),
    _row(3, "c1=0,c2=n/2", _TWO, lambda n, c1, c2, c3, c4: c1 == 0 and 2 * c2 == n),
    _row(3, "c1=1,c2=0", _TWO_T, lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 0),
    _row(3, "c1=2,c2=(n-2)/2", _ONE_ONE_T, lambda n, c1, c2, c3, c4: c1 == 2 and 2 * c2 == n - 2),
    _row(3, "c1=1,c2>=2", _ONE_ONE_T, lambda n, c1, c2, c3, c4: c1 == 1 and c2 >= 2),
    _row(3, "c1=1,c2=1,c3<=(n-4)/3", _ONE_ONE_T,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 1 and 3 * c3 <= n - 4),
    _row(3, "c1=1,c2=1,c3=(n-3)/3", _THREE,
         lambda n, c1, c2, c3, c4: c1 == 1 and c2 == 1 and 3 * c3 == n - 3),
)


def table23_predict(n: int, mu: CycleType) -> list[tuple[TableRow, Partition]]:
    """Every prediction row matching ``mu``; empty means no rule is listed."""
    if mu.n != n:
        raise SizeMismatchError(f"class {mu} is not a class of S_{n}")
    if n < 8:
        raise DomainError("ruling-irrep predictions refer to EIGHT_n, which needs n >= 8")
    rows = TABLE2_ROWS if mu.sign == 1 else TABLE3_ROWS
    c = mu.prefix(4)
    return [(row, row.family.partition(n)) for row in rows if row.predicate(n, *c)]


@dataclass
class Tables23Report:
    n: int
    classes_checked: int
    mismatches: list[dict]
    unlisted: list[CycleType]
    ambiguous: list[CycleType]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unlisted


def check_tables23(n: int, max_c1: int | None = 1) -> Tables23Report:
    """Compare the predicted ruling irreps against the exact EIGHT_n maximum.

    Only classes with ``c_1 <= max_c1`` are examined (``None`` = all).
    """
    mismatches, unlisted, ambiguous = [], [], []
    checked = 0
    for mu in enumerate_cycle_types(n):
        if max_c1 is not None and mu.c(1) > max_c1:
            continue
        checked += 1
        matches = table23_predict(n, mu)
        if not matches:
            unlisted.append(mu)
            continue
        if len(matches) > 1:
            ambiguous.append(mu)
        values = eight_values(n, mu)
        best = max(values.values())
        for row, p in matches:
            if values[p] != best:
                mismatches.append({
                    "class": mu,
                    "row": f"{'even' if row.table == 2 else 'odd'}: {row.condition}",
                    "predicted": p,
                    "predicted_value": values[p],
                    "eight_max": best,
                    "eight_argmax": [q for q, v in values.items() if v == best],
                })
    return Tables23Report(n, checked, mismatches, unlisted, ambiguous)


# --------------------------------------------------------------------------
# spectral gap versus std


def gap_delta(n: int) -> Fraction:
    """``2(n-2) / (n(n-3))``."""
    if n < 4:
        raise DomainError("delta_n needs n >= 4")
    return Fraction(2 * (n - 2), n * (n - 3))


@dataclass
class GapReport:
    n: int
    total: Fraction
    value: Fraction
    std_value: Fraction
    delta: Fraction

    @property
    def gap(self) -> Fraction:
        return self.total - self.value

    @property
    def bound(self) -> Fraction:
        return (self.total - self.std_value) * (1 - self.delta)

    @property
    def holds(self) -> bool:
        return self.gap >= self.bound

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "lambda": self.value,
            "std": self.std_value,
            "delta": self.delta,
            "gap": self.gap,
            "bound": self.bound,
            "holds": self.holds,
        }


def check_gap_theorem(sigma: NormalElement, min_n: int = 17) -> GapReport:
    """``|S| - lambda >= (|S| - eig(std)) * (1 - delta_n)``, exactly."""
    n = sigma.n
    if n < min_n:
        raise DomainError(f"gap check is stated for n >= {min_n}, got {n}")
    report = lambda_nontrivial(sigma)
    std = report.eigenvalues[Partition((n - 1, 1))]
    return GapReport(n, report.total, report.value, std, gap_delta(n))


def _gap_check_column(n: int, delta: Fraction, mu: CycleType, column: dict[int, int]):
    parts, dims = partitions_and_dims(n)
    std = Fraction(mu.c(1) - 1, n - 1)
    rhs = (1 - std) * (1 - delta)
    bad = []
    for idx in range(1, len(dims) - 1):
        if 1 - Fraction(column.get(idx, 0), dims[idx]) < rhs:
            bad.append(parts[idx])
    return (mu, bad) if bad else None


def check_single_class_gap(
    n: int,
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
    table: CharacterTable | None = None,
) -> ScanReport:
    """Per class and irrep: ``1 - chi~ >= (1 - chi~_std)(1 - delta_n)``."""
    delta = gap_delta(n)
    results = _scan_columns(n, partial(_gap_check_column, n, delta), workers, progress, table)
    return ScanReport(n, len(results), [r for r in results if r is not None])


# --------------------------------------------------------------------------
# lower bound on the EIGHT_n maximum


def eight_floor(n: int) -> Fraction:
    return Fraction(3, n * (n - 2) * (n - 4))


def eight_case_bound(n: int, mu: CycleType) -> tuple[str, Fraction]:
    """The case-by-case lower bound on the EIGHT_n maximum."""
    c1, c2, c3 = mu.c(1), mu.c(2), mu.c(3)
    if c1 >= 2:
        return "c1>=2", Fraction(c1 - 1, n - 1)
    if c1 == 1 and c3 >= 1:
        return "c1=1,c3>=1", Fraction(6 * c3, n * (n - 1) * (n - 5))
    if c1 == 1:
        return "c1=1,c3=0", Fraction(3, n * (n - 2) * (n - 4))
    if c2 >= 1:
        return "c1=0,c2>=1", Fraction(2 * c2, n * (n - 3))
    if mu.sign == 1:
        return "c1=0,c2=0,even", Fraction(2, (n - 1) * (n - 2))
    return "c1=0,c2=0,odd", Fraction(1, n - 1)


def check_eight_floor(n: int) -> ScanReport:
    """``max over EIGHT_n >= 3/(n(n-2)(n-4))`` and the per-case bound, every class."""
    floor = eight_floor(n)
    violations = []
    classes = enumerate_cycle_types(n)
    for mu in classes:
        best, arg = eight_max(n, mu)
        case, case_bound = eight_case_bound(n, mu)
        if best < floor or best < case_bound:
            violations.append({
                "class": mu, "eight_max": best, "argmax": arg,
                "floor": floor, "case": case, "case_bound": case_bound,
            })
    return ScanReport(n, len(classes), violations)


# --------------------------------------------------------------------------
# dimension audits


@dataclass
class DimsAudit:
    n: int
    min_outside: int
    exponent: Fraction
    checked: int
    failures: list[Partition]
    min_dim: int | None
    min_partition: Partition | None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "min_outside": self.min_outside,
            "exponent": self.exponent,
            "checked": self.checked,
            "failures": self.failures,
            "min_dim": str(self.min_dim) if self.min_dim is not None else None,
            "min_partition": self.min_partition,
        }


def dims_audit(n: int, min_outside: int, exponent: Fraction) -> DimsAudit:
    """Check ``dim >= n**exponent`` on irreps with many boxes off the hook.

    Compared as ``dim**q >= n**p`` for ``exponent = p/q``, in integers.
    """
    exponent = Fraction(exponent)
    p, q_ = exponent.numerator, exponent.denominator
    target = n**p
    checked, failures = 0, []
    min_dim, min_part = None, None
    for shape in enumerate_partitions(n):
        if blocks_outside_first_row(shape) < min_outside:
            continue
        if blocks_outside_first_column(shape) < min_outside:
            continue
        checked += 1
        dim = dimension(shape)
        if dim**q_ < target:
            failures.append(shape)
        if min_dim is None or dim < min_dim:
            min_dim, min_part = dim, shape
    return DimsAudit(n, min_outside, exponent, checked, failures, min_dim, min_part)


def random_normal_element(n: int, rng: random.Random, max_support: int = 6) -> NormalElement:
    """Random non-negative normal element on a few random classes."""
    classes = enumerate_cycle_types(n)
    support = rng.sample(classes, rng.randint(1, min(max_support, len(classes))))
    return NormalElement(
        n, {mu: Fraction(rng.randint(1, 1000), rng.randint(1, 1000)) for mu in support}
    )
