import pytest

from springer_kit.maxmin import (is_quasi_distinguished, lambda_max_algorithm,
                                 lambda_max_even, lambda_max_via_pab,
                                 lambda_min, lambda_min_even, sign_twist)
from springer_kit.symbols import GSCDatum, M_value, enumerate_pport, parse_eps


def test_max_fixtures():
    assert lambda_max_via_pab(GSCDatum((3, 3, 1), (1, 1))).class_key() \
        == ((7,), (1,))
    # the other sign class is its own maximum
    assert lambda_max_via_pab(GSCDatum((3, 3, 1), (1, -1))).class_key() \
        == ((3, 3, 1), (1, -1))
    assert lambda_max_via_pab(GSCDatum((1,), (1,))).class_key() \
        == ((1,), (1,))
    with pytest.raises(ValueError):
        lambda_max_via_pab(GSCDatum((3, 2, 2), (1,)))


def test_sign_twist_fixtures():
    assert sign_twist(GSCDatum((1,), (1,))).lam == (1,)
    assert sign_twist(GSCDatum((7,), (1,))).lam == (1,) * 7
    assert sign_twist(GSCDatum((3, 3, 1), (1, 1))).lam == (3, 2, 2)
    # involution on sign-classes
    for n in range(1, 10):
        for d in enumerate_pport(n):
            assert sign_twist(sign_twist(d)).same_class(d)


def test_min_fixtures():
    assert lambda_min(GSCDatum((3, 3, 1), (1, 1))).lam == (1,) * 7
    assert lambda_min(GSCDatum((1,), (1,))).lam == (1,)
    d = GSCDatum((3, 3, 1), (1, -1))
    assert lambda_min(d).same_class(sign_twist(d))


def test_algorithm_fixtures():
    out, trace = lambda_max_algorithm(GSCDatum((3, 3, 1), (1, 1)))
    assert out.class_key() == ((7,), (1,))
    assert len(trace) == 1 and trace[0].S == (1, 2, 3)
    out, _ = lambda_max_algorithm(GSCDatum((5, 3), (1, 1)))
    assert out.class_key() == ((7, 1), (1, 1))
    out, _ = lambda_max_algorithm(GSCDatum((1,), (1,)))
    assert out.class_key() == ((1,), (1,))


def test_algorithm_worked_example():
    d = parse_eps((19, 17, 15, 13, 11, 9, 7), "-++-+-+")
    out, trace = lambda_max_algorithm(d)
    assert out.lam == (25, 23, 15, 13, 11, 3, 1)
    assert out.eps_seq() == (-1, 1, 1, -1, 1, -1, 1)
    assert M_value(out) == M_value(d)
    # the first level sums lam_1 and lam_3 (the non-contiguous leading set)
    assert trace[0].S == (1, 3) and trace[0].bar1 == 25
    assert lambda_max_via_pab(d).same_class(out)


def test_even_fixtures():
    got = lambda_max_even(GSCDatum((3, 2, 2), (1,)))
    assert got.class_key() == ((7,), (1,))
    got = lambda_max_even(GSCDatum((2, 2, 1), (1,)))
    assert got.class_key() == ((5,), (1,))
    assert lambda_min_even(GSCDatum((3, 2, 2), (1,))).lam == (1,) * 7
    # all-odd input falls back to the plain maximum
    d = GSCDatum((3, 3, 1), (1, 1))
    assert lambda_max_even(d).same_class(lambda_max_via_pab(d))
    with pytest.raises(ValueError):
        lambda_max_even(GSCDatum((2, 2), ()))          # empty odd core
    with pytest.raises(ValueError):
        lambda_max_even(GSCDatum((3, 1), (1, -1)))     # defect 2


def test_quasi_distinguished():
    assert is_quasi_distinguished((7,))
    assert is_quasi_distinguished((3, 3, 1))
    assert not is_quasi_distinguished((1, 1, 1))
    assert not is_quasi_distinguished((2, 2))
