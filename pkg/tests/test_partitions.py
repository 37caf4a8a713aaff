"""Partition and poset combinatorics against independent recurrences."""

import math
from functools import lru_cache
from itertools import combinations

import pytest

from functorcalc.partitions import (
    PiPoset,
    bell_number,
    block_structure,
    centralizer_order,
    compositions_of,
    concat,
    multinomial,
    partition,
    partition_count,
    partitions_of,
    set_partition_count_check,
    stabilizer_order,
    sub_multisets,
    weight,
)


@lru_cache(maxsize=None)
def partition_count_pentagonal(n: int) -> int:
    """Oracle: Euler's pentagonal number recurrence for p(n)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (partition_count_pentagonal(n - g1) + partition_count_pentagonal(n - g2))
        k += 1
    return total


@lru_cache(maxsize=None)
def bell_binomial(n: int) -> int:
    """Oracle: B(n+1) = sum_k C(n, k) B(k)."""
    if n == 0:
        return 1
    return sum(math.comb(n - 1, k) * bell_binomial(k) for k in range(n))


def test_partition_counts_match_pentagonal_recurrence():
    for n in range(0, 26):
        assert partition_count(n) == partition_count_pentagonal(n)


def test_partitions_of_small_values_explicit():
    assert partitions_of(0) == ((),)
    assert partitions_of(1) == ((1,),)
    assert partitions_of(2) == ((1, 1), (2,))
    assert partitions_of(3) == ((1, 1, 1), (1, 2), (3,))
    assert partitions_of(4) == ((1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,))


def test_partitions_are_canonical_and_ordered():
    for n in range(8):
        ps = partitions_of(n)
        for p in ps:
            assert weight(p) == n
            assert all(a <= b for a, b in zip(p, p[1:]))
        assert list(ps) == sorted(ps)


def test_partition_normalizes_and_rejects():
    assert partition([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(ValueError):
        partition([0, 1])


def test_block_structure_and_orders():
    assert block_structure((1, 1, 2)) == ((1, 2), (2, 1))
    # n = 4 = 2*1 + 1*2: order (1!)^2 * 2! * (2!)^1 * 1! = 4
    assert stabilizer_order((1, 1, 2)) == 4
    assert stabilizer_order((1, 1, 1)) == 6
    assert stabilizer_order((3,)) == 6
    assert stabilizer_order((2, 2)) == 8
    assert centralizer_order((1, 1, 2)) == 4
    assert centralizer_order((2, 2)) == 8
    assert centralizer_order((1, 2, 3)) == 6


def test_class_sizes_sum_to_group_order():
    for n in range(1, 9):
        assert sum(math.factorial(n) // centralizer_order(p) for p in partitions_of(n)) == math.factorial(n)


def test_bell_numbers_match_binomial_recurrence():
    for n in range(0, 16):
        assert bell_number(n) == bell_binomial(n)


def test_bell_small_values_explicit():
    assert [bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_set_partition_count_identity():
    for n in range(1, 13):
        assert set_partition_count_check(n)


def test_concat():
    assert concat((1, 2), (1, 1, 3)) == (1, 1, 1, 2, 3)


def test_sub_multisets_against_brute_force():
    for p in partitions_of(6):
        for total in range(0, 7):
            got = sorted(sub_multisets(p, total))
            seen = set()
            for r in range(len(p) + 1):
                for idx in combinations(range(len(p)), r):
                    alpha = tuple(p[i] for i in idx)
                    if sum(alpha) == total:
                        beta = tuple(p[i] for i in range(len(p)) if i not in idx)
                        seen.add((alpha, beta))
            assert got == sorted(seen)


def test_compositions_and_multinomials():
    for n in range(1, 9):
        assert len(compositions_of(n)) == 2 ** (n - 1)
    assert multinomial((1, 2)) == 3
    assert multinomial((2, 2)) == 6
    assert multinomial((1, 1, 1)) == 6
    # ordered set partitions into blocks of any sizes, counted two ways
    for n in range(1, 7):
        assert sum(multinomial(c) for c in compositions_of(n)) == sum(
            math.factorial(len(set_p)) * count_set_partitions_with_blocks(n, set_p)
            for set_p in partitions_of(n)
        )


def count_set_partitions_with_blocks(n: int, p) -> int:
    return math.factorial(n) // stabilizer_order(p)


def test_pi_poset_small():
    poset = PiPoset(2, 3)
    assert set(poset.objects) == {(1, 1), (1, 2), (2, 1)}
    assert set(poset.covers()) == {((1, 2), (1, 1)), ((2, 1), (1, 1))}
    assert set(poset.arrows()) == {((1, 2), (1, 1)), ((2, 1), (1, 1))}
    assert PiPoset(3, 2).objects == ()
    assert PiPoset(1, 3).objects == ((1,), (2,), (3,))
    # arrows in the chain 3 -> 2 -> 1 plus the composite
    assert len(PiPoset(1, 3).arrows()) == 3


def test_pi_poset_counts():
    # k-tuples of positive integers with sum <= n: C(n, k) of them in total
    for k in range(1, 4):
        for n in range(k, 8):
            assert len(PiPoset(k, n).objects) == math.comb(n, k)
