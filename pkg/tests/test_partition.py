from collections import Counter

import pytest
from hypothesis import given

from conftest import partitions_up_to, primes, small_partitions
from spechtblock.errors import (
    InvalidNodeError,
    NotPrimeError,
    PartitionDomainError,
    PartitionSyntaxError,
)
from spechtblock.partition import (
    EMPTY,
    Partition,
    conjugate,
    format_partition,
    hook_length,
    hook_table,
    is_p_hook_free,
    is_p_regular,
    is_p_restricted,
    parse_partition,
    partitions_of,
    valuation,
)

NU = Partition((17, 13, 9, 5, 5, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1))


@pytest.mark.parametrize("text, expected", [
    ("7,3,2^2,1", (7, 3, 2, 2, 1)),
    ("-", ()),
    ("", ()),
    (" 4 , 1^3 ", (4, 1, 1, 1)),
    ("17,13,9,5^2,3^3,2^4,1^4", tuple(NU)),
])
def test_parse(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text, error", [
    ("3,5", PartitionDomainError),
    ("0", PartitionDomainError),
    ("2^0", PartitionDomainError),
    ("-1", PartitionSyntaxError),
    ("a,b", PartitionSyntaxError),
    ("3,,1", PartitionSyntaxError),
    ("2^", PartitionSyntaxError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_partition(text)


def test_format_uses_exponents():
    assert format_partition(Partition((7, 3, 2, 2, 1))) == "7,3,2^2,1"
    assert str(EMPTY) == "-"


@given(small_partitions)
def test_format_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


def test_zero_extension():
    lam = Partition((3, 1))
    assert lam.part(1) == 3 and lam.part(2) == 1 and lam.part(7) == 0
    assert lam.size == 4 and len(lam) == 2


def test_construction_rejects_bad_parts():
    with pytest.raises(PartitionDomainError):
        Partition((1, 2))
    with pytest.raises(PartitionDomainError):
        Partition((2, 0))
    assert Partition.from_padded([2, 1, 0, 0]) == (2, 1)


@pytest.mark.parametrize("lam, expected", [
    ((7, 3, 2, 2, 1), (5, 4, 2, 1, 1, 1, 1)),
    ((), ()),
    ((4, 1, 1, 1), (4, 1, 1, 1)),
])
def test_conjugate(lam, expected):
    assert conjugate(Partition(lam)) == expected


@given(small_partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_hook_figure():
    table = hook_table(Partition((7, 3, 2, 2, 1)))
    assert table.rows == ((11, 9, 6, 4, 3, 2, 1), (6, 4, 1), (4, 2), (3, 1), (1,))
    assert table[1, 1] == 11
    assert table[2, 3] == 1
    assert len(table) == 15


def test_hook_table_small():
    assert hook_table(EMPTY).rows == ()
    assert hook_table(Partition((2, 1))).rows == ((3, 1), (1,))


@pytest.mark.parametrize("k", range(1, 8))
def test_single_row_hooks(k):
    lam = Partition((k,))
    assert [hook_length(lam, (1, j)) for j in range(1, k + 1)] == [k + 1 - j for j in range(1, k + 1)]


def test_invalid_node():
    with pytest.raises(InvalidNodeError):
        hook_length(Partition((2, 1)), (2, 2))
    with pytest.raises(InvalidNodeError):
        hook_table(Partition((2,)))[0, 1]


@given(small_partitions)
def test_hook_is_arm_plus_leg_plus_one(lam):
    conj = conjugate(lam)
    table = hook_table(lam)
    for (i, j), h in table.entries.items():
        assert h == 1 + (lam.part(i) - j) + (conj.part(j) - i)
        assert h == hook_length(lam, (i, j))
    # the last node in each row has an empty arm
    for i, row in enumerate(lam, 1):
        assert table[i, row] == conj.part(row) - i + 1


def test_hook_multiset_conjugation_invariant():
    for lam in partitions_up_to(12):
        a = Counter(h for row in hook_table(lam).rows for h in row)
        b = Counter(h for row in hook_table(conjugate(lam)).rows for h in row)
        assert a == b


@pytest.mark.parametrize("m, p, e", [(50, 5, 2), (7, 2, 0), (9, 3, 2), (1, 7, 0), (48, 2, 4)])
def test_valuation(m, p, e):
    assert valuation(m, p) == e


def test_valuation_errors():
    with pytest.raises(ValueError):
        valuation(0, 5)
    with pytest.raises(NotPrimeError):
        valuation(12, 4)


@pytest.mark.parametrize("lam, p, expected", [
    ((1, 1, 1, 1, 1), 5, False),
    ((2, 2, 1), 5, True),
    ((), 3, True),
    ((3, 3), 2, False),
])
def test_p_regular(lam, p, expected):
    assert is_p_regular(Partition(lam), p) is expected


def test_p_restricted_is_regular_conjugate():
    assert is_p_restricted(Partition((5,)), 5) is False
    assert is_p_restricted(Partition((1, 1, 1, 1, 1)), 5) is True
    with pytest.raises(NotPrimeError):
        is_p_regular(Partition((1,)), 6)


@pytest.mark.parametrize("lam, p, expected", [
    (tuple(NU), 5, True),
    ((5,), 5, False),
    ((3, 1), 3, True),
])
def test_p_hook_free(lam, p, expected):
    assert is_p_hook_free(Partition(lam), p) is expected


@given(small_partitions, primes)
def test_hook_free_conjugation_invariant(lam, p):
    assert is_p_hook_free(lam, p) == is_p_hook_free(conjugate(lam), p)


def test_partitions_of_order_and_filters():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(0)) == [()]
    assert list(partitions_of(5, max_len=2)) == [(5,), (4, 1), (3, 2)]
    assert list(partitions_of(5, max_part=2)) == [(2, 2, 1), (2, 1, 1, 1), (1,) * 5]
