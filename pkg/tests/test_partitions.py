from math import factorial

import pytest
from hypothesis import given, strategies as st

from cayleysn.errors import ParseError
from cayleysn.partitions import (
    CycleType,
    Partition,
    blocks_outside_first_column,
    blocks_outside_first_row,
    class_size,
    dimension,
    enumerate_cycle_types,
    enumerate_partitions,
    format_cycle_type,
    parse_cycle_type,
    parse_partition,
    transpose,
)

from conftest import partitions


def test_small_counts():
    assert enumerate_partitions(0) == [Partition(())]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(13)) == 101


def test_canonical_order_ends():
    ps = enumerate_partitions(7)
    assert ps[0] == (7,) and ps[-1] == (1,) * 7
    assert ps == sorted(ps, reverse=True)


def test_93_deep_irreps_of_13():
    deep = [
        p for p in enumerate_partitions(13)
        if blocks_outside_first_row(p) >= 3 and blocks_outside_first_column(p) >= 3
    ]
    assert len(deep) == 93


@pytest.mark.parametrize("n", range(0, 31))
def test_dimension_squares_and_class_sizes_sum_to_factorial(n):
    assert sum(dimension(p) ** 2 for p in enumerate_partitions(n)) == factorial(n)
    assert sum(class_size(mu) for mu in enumerate_cycle_types(n)) == factorial(n)


@pytest.mark.parametrize("n", [1, 5, 12, 30])
def test_transpose_is_involution_on_partitions(n):
    ps = enumerate_partitions(n)
    assert sorted(map(transpose, ps), reverse=True) == ps
    assert all(transpose(transpose(p)) == p for p in ps)


def test_transpose_examples():
    assert transpose((15, 1)) == (2,) + (1,) * 14
    assert transpose((2, 2)) == (2, 2)
    assert transpose((4,)) == (1, 1, 1, 1)


def test_dimension_examples():
    assert dimension((9, 1)) == 9
    assert dimension((14, 2)) == 104
    assert dimension((2, 2)) == 2


def test_class_size_examples():
    assert class_size(CycleType({2: 1, 1: 2})) == 6
    assert class_size(CycleType.identity(9)) == 1
    assert class_size(CycleType({5: 1})) == 24


def test_outside_counts():
    assert blocks_outside_first_row((13, 3)) == 3
    assert blocks_outside_first_column((2,) + (1,) * 14) == 1
    p = (11, 5)
    assert (blocks_outside_first_row(p), blocks_outside_first_column(p)) == (5, 14)


@given(partitions(max_n=25))
def test_row_column_outside_swap_under_transpose(p):
    assert blocks_outside_first_row(p) == blocks_outside_first_column(transpose(p))


@given(st.lists(st.integers(1, 9), min_size=1, max_size=12))
def test_cycle_type_sign_and_roundtrip(parts):
    mu = CycleType.from_parts(parts)
    assert mu.n == sum(parts)
    assert mu.sign == (-1) ** (mu.n - len(parts))
    assert parse_cycle_type(format_cycle_type(mu)) == mu


def test_parsing():
    assert parse_cycle_type("5^3 1^1") == CycleType({5: 3, 1: 1})
    assert parse_cycle_type("5") == CycleType({5: 1})
    assert parse_partition("11,5") == (11, 5)
    for bad in ["", "x^2", "0^1"]:
        with pytest.raises(ParseError):
            parse_cycle_type(bad)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
