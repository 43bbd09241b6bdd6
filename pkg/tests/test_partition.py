import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcove_cells.errors import PreconditionError
from alcove_cells.partition import (
    Partition,
    dominance_leq,
    orbit_label,
    parse_partition,
    partition,
    partition_of_basis,
    partitions_of,
    sup,
    transpose,
)
from alcove_cells.rootsys import RootA


def _pairs(total):
    parts = partitions_of(total)
    return [(a, b) for a in parts for b in parts]


def test_partition_validation():
    with pytest.raises(PreconditionError):
        partition([2, 3])
    with pytest.raises(PreconditionError):
        partition([2, 0])
    with pytest.raises(PreconditionError):
        partition([])


def test_str_renders_plus_separated():
    assert str(partition([4, 2])) == "4+2"
    assert str(partition([1, 1, 1])) == "1+1+1"


def test_parse_partition_accepts_three_forms():
    for text in ("4+2", "4,2", "[4,2]"):
        assert parse_partition(text) == partition([4, 2])
    with pytest.raises(PreconditionError):
        parse_partition("2+4")


def test_dominance_known_values():
    assert not dominance_leq(partition([3, 3]), partition([4, 1, 1]))
    assert not dominance_leq(partition([4, 1, 1]), partition([3, 3]))
    assert dominance_leq(partition([1] * 6), partition([6]))
    assert dominance_leq(partition([4, 1, 1]), partition([4, 2]))


def test_dominance_needs_equal_totals():
    with pytest.raises(PreconditionError):
        dominance_leq(partition([2]), partition([2, 1]))


@pytest.mark.parametrize("total", range(1, 9))
def test_dominance_is_partial_order(total):
    parts = partitions_of(total)
    for a in parts:
        assert dominance_leq(a, a)
    for a, b in _pairs(total):
        if dominance_leq(a, b) and dominance_leq(b, a):
            assert a == b
    for a, b in _pairs(total):
        if not dominance_leq(a, b):
            continue
        for c in parts:
            if dominance_leq(b, c):
                assert dominance_leq(a, c)


def test_transpose_known():
    assert transpose(partition([4, 2])) == partition([2, 2, 1, 1])
    assert transpose(partition([5])) == partition([1] * 5)
    assert transpose(partition([3])) == partition([1, 1, 1])


@pytest.mark.parametrize("total", range(1, 9))
def test_transpose_involution_and_order_reversal(total):
    for a, b in _pairs(total):
        assert transpose(transpose(a)) == a
        assert dominance_leq(a, b) == dominance_leq(transpose(b), transpose(a))


def test_sup_known_values():
    assert sup([partition([3, 3]), partition([4, 1, 1])]) == partition([4, 2])
    assert sup([partition([2, 1])]) == partition([2, 1])
    assert sup([partition([2, 1, 1]), partition([1, 1, 1, 1])]) == partition([2, 1, 1])


def test_sup_needs_prefix_max_repair():
    # prefix-max of (3,1,1,1) and (2,2,2) is (3,4,6,6): not weakly
    # decreasing differences, so the join must be repaired to (3,2,1)
    assert sup([partition([3, 1, 1, 1]), partition([2, 2, 2])]) == partition([3, 2, 1])


@pytest.mark.parametrize("total", range(1, 9))
def test_sup_is_least_upper_bound(total):
    parts = partitions_of(total)
    for a, b in _pairs(total):
        s = sup([a, b])
        assert dominance_leq(a, s) and dominance_leq(b, s)
        for c in parts:
            if dominance_leq(a, c) and dominance_leq(b, c):
                assert dominance_leq(s, c)


@given(st.data())
@settings(max_examples=100)
def test_sup_associative_commutative(data):
    total = data.draw(st.integers(min_value=2, max_value=8))
    parts = partitions_of(total)
    a = data.draw(st.sampled_from(parts))
    b = data.draw(st.sampled_from(parts))
    c = data.draw(st.sampled_from(parts))
    assert sup([a, b]) == sup([b, a])
    assert sup([sup([a, b]), c]) == sup([a, sup([b, c])])


def test_orbit_label_dims():
    assert orbit_label(partition([1, 1, 1])).dim == 0
    assert orbit_label(partition([3])).dim == 6
    assert orbit_label(partition([2, 1])).dim == 4
    assert orbit_label(partition([6])).dim == 30


def test_partition_of_basis_examples():
    basis = [RootA(1, 3), RootA(3, 4), RootA(4, 6), RootA(2, 5)]
    assert partition_of_basis(basis, 5) == partition([4, 2])
    assert partition_of_basis([], 5) == partition([1] * 6)
    split = [RootA(1, 3), RootA(3, 5), RootA(2, 4), RootA(4, 6)]
    assert partition_of_basis(split, 5) == partition([3, 3])


def test_partition_of_basis_rejects_invalid():
    with pytest.raises(PreconditionError):
        partition_of_basis([RootA(1, 2), RootA(1, 3)], 3)


def test_partitions_of_counts():
    # 1, 2, 3, 5, 7, 11, 15, 22 partitions of 1..8
    counts = [len(partitions_of(k)) for k in range(1, 9)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22]
    for total in range(1, 9):
        for a in partitions_of(total):
            assert a.total == total
