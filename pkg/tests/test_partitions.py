import pytest

from flagseries.partitions import (
    FlagSpec,
    Partition,
    contains,
    count_coloured_flags,
    count_nested_flags,
    count_partitions_with_k_parts,
    enum_partitions,
    insertion_count,
    partition_count,
)
from flagseries.shapes import SkewShape, enum_skew_classes


def test_partition_validation():
    p = Partition((4, 3, 3, 1, 1))
    assert p.size == 12
    assert p.num_parts == 5
    assert p.multiplicities() == {4: 1, 3: 2, 1: 2}
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_flagspec_validation():
    assert FlagSpec((0, 2, 2)) == (0, 2, 2)
    with pytest.raises(ValueError):
        FlagSpec((3, 2))
    with pytest.raises(ValueError):
        FlagSpec((-1, 2))


def test_enum_partitions_small():
    assert enum_partitions(0) == (Partition(()),)
    assert len(enum_partitions(4)) == 5
    assert len(enum_partitions(10)) == 42
    # reverse-lexicographic order
    assert [tuple(p) for p in enum_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    ]


def test_enum_matches_euler_product():
    for n in range(61):
        assert len(enum_partitions(min(n, 30))) == partition_count(min(n, 30))
    assert partition_count(60) == 966467


def test_count_with_k_parts():
    assert count_partitions_with_k_parts(6, 2) == 3
    assert count_partitions_with_k_parts(7, 3) == 4
    assert count_partitions_with_k_parts(0, 0) == 1
    assert count_partitions_with_k_parts(5, 0) == 0
    for n in range(15):
        assert sum(
            count_partitions_with_k_parts(n, k) for k in range(n + 1)
        ) == partition_count(n)


def test_contains():
    assert contains((1,), (2, 1))
    assert not contains((2,), (1, 1))
    assert contains((3, 1), (4, 3, 3, 1, 1))


def test_count_nested_flags_examples():
    assert count_nested_flags((2, 4)) == 8
    assert count_nested_flags((1, 3)) == 3
    assert count_nested_flags((2, 3, 4)) == 10
    assert count_nested_flags(()) == 1


def test_count_nested_flags_degenerate():
    for n in range(9):
        assert count_nested_flags((n,)) == partition_count(n)
        assert count_nested_flags((n, n)) == partition_count(n)


def test_count_coloured_flags_examples():
    for spec in ((2, 4), (1, 3), (0, 2, 5)):
        assert count_coloured_flags(1, spec) == count_nested_flags(spec)
    assert count_coloured_flags(2, (2,)) == 5
    assert count_coloured_flags(2, (0, 1)) == 2


def test_count_coloured_flags_relabelling_symmetry():
    # the convolution is independent of how the splitting is ordered:
    # check against a direct sum over ordered splittings for small cases
    import itertools

    def direct(r, spec):
        total = 0
        pairs = [
            (a, b)
            for a in range(spec[0] + 1)
            for b in range(a, spec[1] + 1)
        ]
        for combo in itertools.product(pairs, repeat=r):
            if (
                sum(p[0] for p in combo) == spec[0]
                and sum(p[1] for p in combo) == spec[1]
            ):
                term = 1
                for p in combo:
                    term *= count_nested_flags(p)
                total += term
        return total

    for r in (2, 3):
        for spec in ((1, 2), (2, 3), (0, 2)):
            assert count_coloured_flags(r, spec) == direct(r, spec)


def box(*starts_lens):
    return SkewShape.of(*starts_lens)


def test_insertion_count_examples():
    single = box([(0, 1)])
    assert insertion_count(single, 0) == 1
    horizontal = box([(0, 2)])
    assert insertion_count(horizontal, 2) == 3
    two_boxes = box([(0, 1)], [(0, 1)])
    assert insertion_count(two_boxes, 0) == 0


def test_insertion_counts_sum_to_flag_counts():
    for D in range(1, 5):
        shapes = enum_skew_classes(D)
        for m in range(11):
            total = sum(insertion_count(s, m) for s in shapes)
            assert total == count_nested_flags((m, m + D))
