from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from superjack.jack import (
    SuperPoint,
    binomial_coefficients,
    cauchy_kernel_check,
    check_cancellation,
    eval_jack,
    gamma_super_jack_eval,
    jack_at_ones,
    jack_branching,
    jack_in_monomial,
    jack_in_powersum,
    powersum_to_monomial_poly,
    super_jack_at_ones,
    super_jack_branching,
    super_jack_eval,
    super_jack_gradient,
)
from superjack.partitions import FatHook, partitions_of, rising

alphas = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2),
                          Fraction(7, 2)])
small = st.integers(0, 6).flatmap(lambda k: st.sampled_from(partitions_of(k)))
rationals = st.fractions(min_value=-2, max_value=2, max_denominator=9)


def _det(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        total += sign * prod(rows[i][perm[i]] for i in range(n))
    return total


def _schur(lam, x):
    n = len(x)
    lam = list(lam) + [0] * (n - len(lam))
    num = _det([[xi ** (lam[j] + n - 1 - j) for j in range(n)] for xi in x])
    den = _det([[xi ** (n - 1 - j) for j in range(n)] for xi in x])
    return num / den


def test_schur_headline_value():
    assert eval_jack((2, 1), 1, [1, 1, 1]) == 8


@given(st.integers(1, 5).flatmap(lambda k: st.sampled_from(partitions_of(k))),
       st.lists(rationals, min_size=3, max_size=3, unique=True))
@settings(max_examples=40, deadline=None)
def test_alpha_one_is_schur(kappa, x):
    if len(kappa) > 3:
        assert eval_jack(kappa, 1, x) == 0
    else:
        assert eval_jack(kappa, 1, x) == _schur(kappa, x)


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 3)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_one_row_matches_generating_function(alpha, n):
    u = 1 / alpha
    got = jack_in_monomial((n,), alpha)
    for mu in partitions_of(n):
        expected = prod(rising(u, r) / factorial(r) for r in mu) * factorial(n) / rising(u, n)
        assert got[mu] == expected


def test_frozen_small_expansions():
    assert jack_in_monomial((2,), Fraction(1, 2)).format() == "m[2] + 4/3·m[1,1]"
    assert jack_in_monomial((2,), 2)[(1, 1)] == Fraction(2, 3)
    assert jack_in_monomial((1, 1, 1), 3).terms == {(1, 1, 1): 1}


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3)])
def test_two_one_expansion(alpha):
    # integral form J_(2,1) = (2+α) m21 + 6 m111
    assert jack_in_monomial((2, 1), alpha).terms == {(2, 1): 1, (1, 1, 1): 6 / (2 + alpha)}


@given(small, alphas)
@settings(deadline=None)
def test_powersum_and_monomial_expansions_agree(kappa, alpha):
    as_monomials = powersum_to_monomial_poly(jack_in_powersum(kappa, alpha).terms)
    assert {k: v for k, v in as_monomials.items() if v} == dict(jack_in_monomial(kappa, alpha).terms)


@given(small, alphas, st.lists(rationals, min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_branching_matches_powersum_route(kappa, alpha, x):
    assert jack_branching(kappa, alpha, x) == eval_jack(kappa, alpha, x)


@given(small, alphas, st.integers(0, 4))
@settings(deadline=None)
def test_evaluation_at_ones(kappa, alpha, n):
    value = eval_jack(kappa, alpha, [1] * n)
    assert value == jack_at_ones(kappa, alpha, n)
    assert value == super_jack_at_ones(kappa, alpha, n, 0)


@given(small, alphas, st.lists(rationals, min_size=0, max_size=2), st.lists(rationals, min_size=1, max_size=2))
@settings(max_examples=60, deadline=None)
def test_super_branching_matches_powersum_route(kappa, alpha, t, s):
    pt = SuperPoint(tuple(t), tuple(s))
    assert super_jack_branching(kappa, alpha, pt) == super_jack_eval(kappa, alpha, pt)


@given(small, alphas, st.integers(0, 2), st.integers(0, 2), rationals)
@settings(max_examples=60, deadline=None)
def test_super_jack_vanishes_outside_fat_hook(kappa, alpha, n, m, z):
    pt = SuperPoint(tuple(z + i for i in range(n)), tuple(z - j - 1 for j in range(m)))
    if kappa not in FatHook(n, m):
        assert super_jack_eval(kappa, alpha, pt) == 0


def test_fat_hook_members_are_nonzero_somewhere():
    pt = SuperPoint((Fraction(1, 3), Fraction(-2, 5)), (Fraction(3, 7),))
    for kappa in (k for w in range(6) for k in partitions_of(w) if k in FatHook(2, 1)):
        assert super_jack_eval(kappa, Fraction(3, 2), pt) != 0


@given(small, alphas, st.integers(0, 3), st.integers(0, 2))
@settings(deadline=None)
def test_super_evaluation_at_ones(kappa, alpha, n, m):
    pt = SuperPoint((1,) * n, (1,) * m)
    assert super_jack_eval(kappa, alpha, pt) == super_jack_at_ones(kappa, alpha, n, m)


@given(small, alphas, st.lists(rationals, min_size=1, max_size=2))
@settings(deadline=None)
def test_no_s_variables_reduces_to_jack(kappa, alpha, t):
    assert super_jack_eval(kappa, alpha, SuperPoint(tuple(t), ())) == eval_jack(kappa, alpha, t)


@given(small, alphas, rationals, rationals, rationals)
@settings(max_examples=60, deadline=None)
def test_cancellation_property_exact(kappa, alpha, z, t2, s2):
    pt = SuperPoint((z, t2), (z, s2))
    assert check_cancellation(kappa, alpha, pt, 1, 1, analytic=True) == 0


def test_cancellation_property_finite_difference():
    pt = SuperPoint((0.3, -0.2), (0.3,))
    assert abs(check_cancellation((3, 1), 2.0, pt, 1, 1, h=1e-4)) < 1e-7


def test_gradient_matches_finite_difference():
    kappa, alpha = (2, 2, 1), Fraction(3, 2)
    pt = SuperPoint((Fraction(1, 4), Fraction(-1, 3)), (Fraction(1, 5),))
    gt, gs = super_jack_gradient(kappa, alpha, pt)
    h = Fraction(1, 10 ** 6)
    fd = (super_jack_eval(kappa, alpha, SuperPoint((pt.t[0] + h, pt.t[1]), pt.s))
          - super_jack_eval(kappa, alpha, SuperPoint((pt.t[0] - h, pt.t[1]), pt.s))) / (2 * h)
    assert abs(float(fd - gt[0])) < 1e-9
    fd = (super_jack_eval(kappa, alpha, SuperPoint(pt.t, (pt.s[0] + h,)))
          - super_jack_eval(kappa, alpha, SuperPoint(pt.t, (pt.s[0] - h,)))) / (2 * h)
    assert abs(float(fd - gs[0])) < 1e-9


@given(st.integers(0, 4).flatmap(lambda k: st.sampled_from(partitions_of(k))), alphas, rationals,
       st.lists(rationals, min_size=1, max_size=2), st.lists(rationals, min_size=1, max_size=2))
@settings(max_examples=40, deadline=None)
def test_gamma_replication_matches_powersum(kappa, alpha, gamma, t, s):
    pt = SuperPoint(tuple(t), tuple(s))
    direct = gamma_super_jack_eval(kappa, alpha, gamma, pt)
    assert gamma_super_jack_eval(kappa, alpha, gamma, pt, method="replicate") == direct


@given(small, alphas, st.lists(rationals, min_size=1, max_size=2), st.lists(rationals, min_size=1, max_size=2))
@settings(deadline=None)
def test_gamma_equal_alpha_is_super_jack(kappa, alpha, t, s):
    pt = SuperPoint(tuple(t), tuple(s))
    assert gamma_super_jack_eval(kappa, alpha, alpha, pt) == super_jack_eval(kappa, alpha, pt)


@given(st.integers(0, 4).flatmap(lambda k: st.sampled_from(partitions_of(k))), alphas,
       st.lists(rationals, min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_binomial_expansion(kappa, alpha, x):
    n = max(len(x), len(kappa))
    x = list(x) + [Fraction(0)] * (n - len(x))
    lhs = eval_jack(kappa, alpha, [xi + 1 for xi in x]) / jack_at_ones(kappa, alpha, n)
    rhs = sum(c * eval_jack(sigma, alpha, x) / jack_at_ones(sigma, alpha, n)
              for sigma, c in binomial_coefficients(kappa, alpha).items())
    assert lhs == rhs


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_cauchy_kernel(alpha):
    pt = SuperPoint((0.2, -0.15), (0.1,))
    assert cauchy_kernel_check(alpha, [0.3, -0.1], pt, 14) < 1e-9


def test_cauchy_kernel_rejects_outside_disc():
    with pytest.raises(ValueError):
        cauchy_kernel_check(1, [2.0], SuperPoint((0.6,), ()), 4)


def test_float_alpha_does_not_leak_into_exact_results():
    jack_in_monomial((3, 1), 2.0)
    eval_jack((3, 1), 2.0, [0.5, 0.25])
    coeff = jack_in_monomial((3, 1), Fraction(2))[(1, 1, 1, 1)]
    assert isinstance(coeff, Fraction)
    assert isinstance(eval_jack((3, 1), Fraction(2), [Fraction(1, 2), Fraction(1, 4)]), Fraction)
