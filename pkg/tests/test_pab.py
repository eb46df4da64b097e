from fractions import Fraction

from hypothesis import given, settings, strategies as st

from springer_kit.orders import IndexOrder, all_words
from springer_kit.pab import (p_abs_extremal, p_abs_is_extremal_member,
                              p_abs_set, p_set)
from springer_kit.partitions import lambda_ABs, partitions_of, seq_eq, seq_leq


def test_p_set_fixtures():
    assert p_set((), (), IndexOrder("")) == {((), ())}
    assert p_set((1,), (2,), IndexOrder("aba")) == {((3,), ()), ((1,), (2,))}
    assert p_set((4,), (), IndexOrder("a")) == {((4,), ())}


def test_p_abs_fixtures():
    assert p_abs_set((), (), IndexOrder(""), 1, -1, 2) == {((), ())}
    # branch (b) is gated shut by beta_1 + B > A
    assert p_abs_set((1,), (2,), IndexOrder("aba"), 1, -1, 2) == {((3,), ())}
    # order BA at A=B=0: only branch (b) opens, walking b1 -> a1
    assert p_abs_set((3,), (1,), IndexOrder("ba"), 0, 0, 2) == {((), (4,))}


def test_extremal_fixture():
    s = p_abs_extremal((1,), (2,), IndexOrder("aba"), 1, -1, 2)
    assert tuple(s.first_terms(4)) == (4, -1, -1, -3)
    assert seq_eq(s, lambda_ABs((3,), (), 1, -1, 2))


def test_extremal_membership_helper():
    o = IndexOrder("aba")
    leq, eq = p_abs_is_extremal_member((1,), (2,), o, 1, -1, 2, ((3,), ()))
    assert leq and eq
    leq, eq = p_abs_is_extremal_member((1,), (2,), o, 1, -1, 2, ((1,), (2,)))
    assert leq and not eq


def small_instances():
    return st.integers(0, 4).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n) or [()]),
                            st.integers(0, 4 - n))).flatmap(
        lambda t: st.tuples(st.just(t[0]),
                            st.sampled_from(partitions_of(t[1]) or [()])))


@settings(deadline=None)
@given(small_instances(), st.data(),
       st.sampled_from([(1, -1, 2), (0, 0, 2),
                        (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2))]))
def test_gated_subset_and_translation(ab, data, params):
    alpha, beta = ab
    w = data.draw(st.sampled_from(all_words(len(alpha), len(beta))))
    o = IndexOrder(w)
    A, B, s = params
    gated = p_abs_set(alpha, beta, o, A, B, s)
    full = p_set(alpha, beta, o)
    assert gated <= full
    c = Fraction(data.draw(st.integers(-4, 4)), 3)
    assert p_abs_set(alpha, beta, o, A + c, B + c, s) == gated


@settings(deadline=None)
@given(small_instances(), st.data())
def test_dominance_maximality(ab, data):
    alpha, beta = ab
    w = data.draw(st.sampled_from(all_words(len(alpha), len(beta))))
    o = IndexOrder(w)
    A, B, s = 1, -1, 2
    gated = p_abs_set(alpha, beta, o, A, B, s)
    if not gated:
        return
    ext = p_abs_extremal(alpha, beta, o, A, B, s)
    for munu in p_set(alpha, beta, o):
        seq = lambda_ABs(munu[0], munu[1], A, B, s)
        assert seq_leq(seq, ext)
        assert seq_eq(seq, ext) == (munu in gated)
