from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from superjack.partitions import (
    FatHook,
    add_box,
    conjugate,
    contains,
    dominance_leq,
    enumerate_partitions,
    gen_pochhammer,
    hook_product,
    hook_product_prime,
    horizontal_strips,
    parse_partition,
    parse_scalar,
    partitions_of,
    pochhammer_vanishes,
    remove_box,
    vertical_strips,
    weight,
)

partitions = st.integers(0, 9).flatmap(lambda k: st.sampled_from(partitions_of(k)))
alphas = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2),
                          Fraction(5)])


def _count_partitions(k):
    table = [1] + [0] * k
    for part_size in range(1, k + 1):
        for total in range(part_size, k + 1):
            table[total] += table[total - part_size]
    return table[k]


@pytest.mark.parametrize("k", range(13))
def test_partition_counts(k):
    assert len(partitions_of(k)) == _count_partitions(k)
    assert len(set(partitions_of(k))) == len(partitions_of(k))


def test_partition_counts_frozen():
    assert [len(partitions_of(k)) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_enumerate_ordered_by_weight_then_reverse_lex():
    got = enumerate_partitions(3)
    assert got == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


@given(partitions)
def test_conjugate_involution(kappa):
    assert conjugate(conjugate(kappa)) == kappa
    assert weight(conjugate(kappa)) == weight(kappa)


@pytest.mark.parametrize("kappa,syt", [((3, 2), 5), ((2, 2), 2), ((3, 1, 1), 6), ((4, 2, 1), 35), ((1, 1, 1), 1)])
def test_hook_product_at_alpha_one_gives_tableaux_count(kappa, syt):
    assert factorial(weight(kappa)) / hook_product(kappa, Fraction(1)) == syt
    assert hook_product(kappa, Fraction(1)) == hook_product_prime(kappa, Fraction(1))


@given(partitions, alphas)
def test_hook_products_swap_under_conjugation(kappa, alpha):
    lhs = hook_product(conjugate(kappa), 1 / alpha)
    assert lhs == alpha ** weight(kappa) * hook_product_prime(kappa, alpha)


@given(partitions, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_pochhammer_at_alpha_one_is_content_product(kappa, x):
    expected = Fraction(1)
    for i, row in enumerate(kappa):
        for j in range(row):
            expected *= x + j - i
    assert gen_pochhammer(x, kappa, Fraction(1)) == expected


@given(partitions, st.integers(1, 4), st.sampled_from([Fraction(2, 3), Fraction(3, 5), Fraction(5, 7)]))
def test_negative_integer_pochhammer_vanishing(kappa, M, alpha):
    vanishes = gen_pochhammer(Fraction(-M), kappa, alpha) == 0
    assert vanishes == pochhammer_vanishes(kappa, alpha, "neg_int", M)


@given(partitions, st.integers(1, 4), alphas)
def test_over_alpha_pochhammer_vanishing(kappa, M, alpha):
    vanishes = gen_pochhammer(Fraction(M) / alpha, kappa, alpha) == 0
    assert vanishes == pochhammer_vanishes(kappa, alpha, "over_alpha", M)


def _brute_horizontal_strips(kappa):
    out = set()
    for mu in product(*(range(r + 1) for r in kappa)):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            ok = all((kappa[i + 1] if i + 1 < len(kappa) else 0) <= mu[i] for i in range(len(kappa)))
            if ok:
                out.add(tuple(p for p in mu if p))
    return out


@given(partitions)
@settings(max_examples=60)
def test_horizontal_strips_match_brute_force(kappa):
    got = list(horizontal_strips(kappa))
    assert len(got) == len(set(got))
    assert set(got) == _brute_horizontal_strips(kappa)


@given(partitions)
def test_vertical_strips_are_conjugate_horizontal(kappa):
    got = {conjugate(mu) for mu in vertical_strips(kappa)}
    assert got == set(horizontal_strips(conjugate(kappa)))


@given(partitions, st.integers(1, 6))
def test_add_remove_box_inverse(kappa, i):
    bigger = add_box(kappa, i)
    if bigger is not None:
        assert remove_box(bigger, i) == kappa
        assert contains(bigger, kappa) and weight(bigger) == weight(kappa) + 1


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 8))
def test_fat_hook_enumeration(n, m, k):
    hook = FatHook(n, m)
    inside = [kappa for kappa in enumerate_partitions(k) if (len(kappa) <= n or kappa[n] <= m)]
    assert enumerate_partitions(k, hook) == inside


def test_fat_hook_without_legs_is_length_bound():
    assert enumerate_partitions(4, FatHook(2, 0)) == [kappa for kappa in enumerate_partitions(4) if len(kappa) <= 2]


def test_dominance():
    assert dominance_leq((2, 1, 1), (2, 2))
    assert not dominance_leq((2, 2), (2, 1, 1))
    assert dominance_leq((3, 3), (4, 1, 1)) is False
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_parse_scalar():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-2", allow_float=False) == Fraction(-2)
    assert parse_scalar("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_scalar("0.25", allow_float=False)
    with pytest.raises(ValueError):
        parse_scalar("1e-3", allow_float=False)


def test_parse_partition():
    assert parse_partition("3,1,1") == (3, 1, 1)
