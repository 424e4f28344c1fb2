from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slnepoly.chartypes import PureType, enumerate_pure_types
from slnepoly.coefficients import c_t
from slnepoly.exactmath import CycloInt, divisors
from slnepoly.gamma import (
    GammaContext,
    char_degree,
    character_sum,
    ctaut_from_gamma,
    eval_at_zeta,
    fixed_subgroup_order,
    fixed_subgroup_order_formula,
    lemma_checks,
    shat_brute,
    sign_factor,
    stable_closure,
    z_brute_mixed_degrees,
    z_contexts,
    zhat_brute,
    zhat_closed_form,
)
from slnepoly.partitions import Partition

P = lambda *parts: Partition(parts)  # noqa: E731


def zero(n):
    return CycloInt.integer(n, 0)


def test_context_validation():
    with pytest.raises(ValueError):
        GammaContext(7, 1, 1, 4)
    with pytest.raises(ValueError):
        GammaContext(5, 1, 3, 4)
    with pytest.raises(ValueError):
        GammaContext(5, 1, 1, 4, zeta_power=2)


def test_label_degrees():
    ctx = GammaContext(5, 2, 1, 2)
    assert ctx.M == 24
    deg1 = [e for e in range(24) if ctx.label_degrees[e] == 1]
    assert deg1 == [0, 6, 12, 18]
    assert int((ctx.label_degrees == 2).sum()) == 20
    assert char_degree(ctx, 0) == 1


def test_newdegree_count():
    ctx = GammaContext(5, 2, 2, 2)
    assert int((ctx.class_newdegrees == 1).sum()) == 4 == fixed_subgroup_order_formula(ctx, 1)


def test_eval_at_zeta():
    ctx = GammaContext(13, 2, 1, 4)
    assert eval_at_zeta(ctx, 0) == 1
    # labels of degree one are multiples of M/(q-1); their value is a root of unity
    e = ctx.delta_label
    assert eval_at_zeta(ctx, e, power=4) == 1
    assert eval_at_zeta(ctx, e) ** 4 == 1


def test_zhat_examples():
    assert zhat_brute(GammaContext(5, 2, 1, 2), 2, (1,)) == -4
    assert zhat_brute(GammaContext(5, 1, 2, 2), 1, (1,)) == 2
    ctx = GammaContext(13, 2, 2, 4)
    assert zhat_brute(ctx, 1, (2,)) == 0 == zhat_closed_form(ctx, 1, (2,))
    assert zhat_brute(ctx, 2, (1,)) == 0
    with pytest.raises(ValueError):
        zhat_brute(ctx, 1, (1,))


def test_mixed_degree_example():
    ctx = GammaContext(5, 2, 2, 4)
    assert z_brute_mixed_degrees(ctx, [1, 2], 1, (1, 1)) == 0
    assert z_brute_mixed_degrees(ctx, [2, 1], 1, (1, 1)) == 0
    # the unmixed parts add up to the full sum
    same = z_brute_mixed_degrees(ctx, [1, 1], 1, (1, 1)) + z_brute_mixed_degrees(ctx, [2, 2], 1, (1, 1))
    assert same == zhat_brute(ctx, 1, (1, 1))
    with pytest.raises(ValueError):
        z_brute_mixed_degrees(GammaContext(5, 2, 1, 2), [1, 2], 1, (1, 1))


def test_non_pure_example():
    from slnepoly.chartypes import CharType
    from slnepoly.gamma import context_for

    ct = CharType((PureType.make(1, {P(1): 1}), PureType.make(2, {P(1): 1})))
    assert shat_brute(context_for(7, 3, 1, ct), ct) == 0
    assert shat_brute(context_for(7, 3, 3, ct), ct) == 0


def test_trivial_type_sum():
    tau = PureType.make(1, {P(1, 1): 1})
    from slnepoly.gamma import context_for

    assert shat_brute(context_for(5, 2, 1, tau), tau) == 4


def test_sign_factor():
    odd = GammaContext(13, 1, 2, 4)
    assert sign_factor(odd, 1, 1, 3) == 1
    assert sign_factor(odd, 1, 2, 1) == -1
    good = GammaContext(17, 1, 2, 4)
    for d in (1, 2):
        for that in (1, 2, 4):
            for sl in (1, 2, 3):
                assert sign_factor(good, d, that, sl) == 1


@pytest.mark.parametrize("q,n", [(5, 2), (7, 3), (13, 2), (13, 4), (7, 6)])
def test_lemma_suite(q, n):
    recs = list(lemma_checks(q, n, max_m=3))
    assert recs
    bad = [r for r in recs if not r["pass"]]
    assert not bad, bad[:3]
    kinds = Counter(r["lemma"] for r in recs)
    assert kinds["s_from_z"] and kinds["fixed_subgroup_order"]
    if GammaContext(q, 1, 1, n).oddity:
        assert kinds["zhat_closed_form"]


def test_n6_mixed_newdegree_groups_present():
    recs = [r for r in lemma_checks(7, 6, max_m=2) if r["lemma"] == "mixed_newdegree_vanishes"]
    assert recs and all(r["pass"] for r in recs)


def test_zhat_closed_form_fails_off_the_polynomial_branch():
    """At q = 7, n = 2 the odd branch shows up as a nonzero sum where the closed form is 0."""
    diffs = [(c.D, c.t, dh, lam) for c, dh, lam in z_contexts(7, 2) if zhat_brute(c, dh, lam) != zhat_closed_form(c, dh, lam)]
    assert diffs == [(2, 2, 1, (1,))]
    assert ctaut_from_gamma(7, PureType.make(2, {P(1): 1}), 2) == 1 != c_t(PureType.make(2, {P(1): 1}), 2)


@pytest.mark.parametrize("q,n", [(5, 2), (13, 2), (7, 3), (13, 3)])
def test_coefficients_from_character_sums(q, n):
    for tau in enumerate_pure_types(n):
        for t in divisors(n):
            assert ctaut_from_gamma(q, tau, t) == c_t(tau, t), (tau, t)


@pytest.mark.parametrize("q,n,power", [(7, 3, 2), (13, 3, 2), (5, 4, 3), (17, 4, 3)])
def test_zeta_power_independence(q, n, power):
    for tau in enumerate_pure_types(n)[:6]:
        for t in divisors(n):
            assert ctaut_from_gamma(q, tau, t, zeta_power=power) == ctaut_from_gamma(q, tau, t)


@pytest.mark.parametrize("q,n", [(5, 2), (5, 4), (7, 3), (13, 4)])
def test_fixed_subgroup_orders(q, n):
    for t in divisors(n):
        for D in divisors(n):
            ctx = GammaContext(q, D, t, n)
            for d1 in divisors(D):
                assert fixed_subgroup_order(ctx, d1) == fixed_subgroup_order_formula(ctx, d1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 7]), st.sampled_from([1, 2, 3]))
def test_degree_classes_are_unions_of_orbits(q, D):
    """Labels of exact degree d number a multiple of d."""
    ctx = GammaContext(q, D, 1, 1)
    counts = Counter(ctx.label_degrees.tolist())
    assert sum(counts.values()) == ctx.M
    for d, c in counts.items():
        assert D % d == 0 and c % d == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 40), st.data())
def test_character_sum_vanishes_on_stable_sets(M, data):
    step = data.draw(st.sampled_from([s for s in range(1, M) if M % s == 0] or [1]))
    seeds = data.draw(st.lists(st.integers(0, M - 1), min_size=1, max_size=4))
    x = data.draw(st.integers(0, M - 1))
    labels = stable_closure(M, step, seeds)
    total = character_sum(M, labels, x)
    if (x * step) % M:
        assert total == 0
    else:
        reps = sorted({e % step for e in labels})
        assert total == character_sum(M, reps, x) * (M // step)


def test_character_sum_full_group():
    assert character_sum(12, range(12), 0) == 12
    assert character_sum(12, range(12), 5) == 0
    assert character_sum(6, [0, 2, 4], 3) == 3
    assert stable_closure(6, 2, [1]) == [1, 3, 5]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_measured_coefficients_give_quasi_branch(g):
    from slnepoly.epoly import assemble, n2_closed_form
    from slnepoly.exactmath import Q

    for q in (3, 7, 11):
        tab = {(tau, t): ctaut_from_gamma(q, tau, t) for tau in enumerate_pure_types(2) for t in (1, 2)}
        poly = assemble(2, g, lambda tau, t: tab[(tau, t)])
        assert poly(q) == n2_closed_form(q, g)
        if g == 2:
            assert poly == Q**6 - 2 * Q**4 + 30 * Q**3 - 2 * Q**2 + 1
