import pytest
from hypothesis import given, strategies as st

from hookcomb import (
    DISTINCT,
    EmptyPartition,
    NonPositivePart,
    NotWeaklyDecreasing,
    ODD,
    Partition,
    UNRESTRICTED,
    conjugate,
    d_distinct,
    enumerate_by_size,
    g_class,
    hook_lengths,
    is_member,
    make_partition,
    mod_one,
    rank,
)
from hookcomb.partitions import ConstraintClass


def all_partitions_upto(max_size, distinct_only=False):
    return list(enumerate_by_size(max_size, distinct_only))


# ---------------------------------------------------------------------------
# construction


def test_make_partition_basic():
    p = make_partition([2, 2, 1])
    assert p.parts == (2, 2, 1)
    assert p.size == 5
    assert p.length == 3
    assert p.perimeter == 4


def test_make_partition_singleton():
    p = make_partition([1])
    assert p.perimeter == 1
    assert p.size == 1


def test_make_partition_not_decreasing():
    with pytest.raises(NotWeaklyDecreasing) as exc:
        make_partition([5, 6])
    assert exc.value.index == 1


def test_make_partition_empty():
    with pytest.raises(EmptyPartition):
        make_partition([])


@pytest.mark.parametrize("parts,index", [([0], 0), ([3, 0], 1), ([2, -1, 1], 1)])
def test_make_partition_nonpositive(parts, index):
    with pytest.raises(NonPositivePart) as exc:
        make_partition(parts)
    assert exc.value.index == index


@given(st.lists(st.integers(min_value=1, max_value=40), min_size=1, max_size=10))
def test_sorted_input_always_valid(values):
    parts = tuple(sorted(values, reverse=True))
    p = make_partition(parts)
    assert p.perimeter == parts[0] + len(parts) - 1


@given(st.lists(st.integers(min_value=-3, max_value=8), min_size=0, max_size=6))
def test_validation_matches_manual_check(values):
    ok = bool(values) and all(v >= 1 for v in values) and all(
        values[i] >= values[i + 1] for i in range(len(values) - 1)
    )
    if ok:
        make_partition(values)
    else:
        with pytest.raises((EmptyPartition, NonPositivePart, NotWeaklyDecreasing)):
            make_partition(values)


# ---------------------------------------------------------------------------
# statistics


def test_hook_lengths_examples():
    assert hook_lengths(make_partition([2, 2, 1])) == [[4, 2], [3, 1], [1]]
    assert hook_lengths(make_partition([1])) == [[1]]
    assert hook_lengths(make_partition([3, 1])) == [[4, 2, 1], [1]]


def hooks_by_cell_walk(parts):
    # independent oracle: count arm and leg cells one by one
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    table = []
    for i, row in enumerate(parts):
        table.append(
            [
                1
                + sum((i, jj) in cells for jj in range(j + 1, row))
                + sum((ii, j) in cells for ii in range(i + 1, len(parts)))
                for j in range(row)
            ]
        )
    return table


def test_hook_lengths_against_cell_walk():
    for p in all_partitions_upto(12):
        assert hook_lengths(p) == hooks_by_cell_walk(p.parts)


def test_hook_max_is_perimeter_at_corner():
    for p in all_partitions_upto(20):
        table = hook_lengths(p)
        assert table[0][0] == p.perimeter
        assert max(max(row) for row in table) == p.perimeter


def test_rank_examples():
    assert rank(make_partition([5, 3, 1])) == 2
    assert rank(make_partition([1, 1, 1])) == -2
    assert rank(make_partition([5, 4, 2])) == 2


def test_conjugate_examples():
    assert conjugate(make_partition([2, 2, 1])).parts == (3, 2)
    assert conjugate(make_partition([1])).parts == (1,)
    q = conjugate(make_partition([4, 3]))
    assert q.parts == (2, 2, 2, 1)
    assert q.perimeter == make_partition([4, 3]).perimeter == 5


def test_conjugate_involution_preserves_stats():
    for p in all_partitions_upto(20):
        q = conjugate(p)
        assert conjugate(q) == p
        assert q.size == p.size
        assert q.perimeter == p.perimeter


# ---------------------------------------------------------------------------
# class membership


def test_is_member_examples():
    assert is_member(make_partition([6, 4]), g_class(2))
    assert is_member(make_partition([5, 3, 1]), d_distinct(2))
    assert not is_member(make_partition([4, 4, 1]), DISTINCT)
    assert not is_member(make_partition([7]), g_class(2))  # 7 == 2 mod 5


def test_unrestricted_accepts_everything():
    for p in all_partitions_upto(10):
        assert is_member(p, UNRESTRICTED)


def test_distinct_equals_ddistinct_one():
    for p in all_partitions_upto(20):
        assert is_member(p, DISTINCT) == is_member(p, d_distinct(1))
        assert is_member(p, ODD) == is_member(p, mod_one(1))


def gclass_definition_oracle(parts, d):
    # straight-from-definition recheck, written independently of the library
    mod = 2 * d + 1
    allowed = {1 % mod, (d + 2) % mod}
    if any(x % mod not in allowed for x in parts):
        return False
    extended = list(parts) + [0]
    for i in range(len(parts)):
        gap = extended[i] - extended[i + 1]
        strict = extended[i] % mod == 1
        if strict and not gap < mod:
            return False
        if not strict and not gap <= mod:
            return False
    return True


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_gclass_against_definition_oracle(d):
    for p in all_partitions_upto(14):
        assert is_member(p, g_class(d)) == gclass_definition_oracle(p.parts, d)


def test_constraint_class_validation():
    with pytest.raises(ValueError):
        ConstraintClass("ddistinct")  # missing d
    with pytest.raises(ValueError):
        ConstraintClass("gclass", 0)
    with pytest.raises(ValueError):
        ConstraintClass("distinct", 2)
    with pytest.raises(ValueError):
        ConstraintClass("weird")
    assert str(d_distinct(3)) == "ddistinct:3"
    assert str(DISTINCT) == "distinct"
