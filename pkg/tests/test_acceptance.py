"""Acceptance gate: the exhaustive desk-scale verification of every claimed
property, at the stated ranges and time budgets.  Everything here is exact."""
import pytest

from springer_kit.maxmin import lambda_max_algorithm
from springer_kit.multiplicity import mult_local_systems
from springer_kit.symbols import GSCDatum, is_H, parse_eps, phi_N
from springer_kit.verify import (suite_algorithm, suite_bijection, suite_max,
                                 suite_min, suite_order, suite_pab,
                                 suite_pieri, suite_quasi, suite_transp)


def _assert_clean(report, budget_s):
    assert report.failures == [], report.failures[:10]
    assert report.elapsed_ms < budget_s * 1000, \
        "suite %s took %d ms (budget %d s)" % (report.suite,
                                               report.elapsed_ms, budget_s)


def test_criterion_01_bijection():
    # counts match the codomain formula and phi round-trips on sign-classes
    _assert_clean(suite_bijection(20), 10)


def test_criterion_02_order():
    # lam <= lam' in dominance iff the merged symbol sequences compare
    _assert_clean(suite_order(16), 30)


def test_criteria_03_04_oracle_and_prop_mult():
    # one instance sweep covers both: the production expansion at t = 1
    # equals the signed configuration count, gated members have mult 1, and
    # a member hits the extremal sequence iff it is gated
    _assert_clean(suite_pab(6), 60)


def test_criterion_05_theorem_max():
    _assert_clean(suite_max(17), 300)


def test_criterion_06_theorem_algorithm():
    report = suite_algorithm(21)
    _assert_clean(report, 60)
    d = parse_eps((19, 17, 15, 13, 11, 9, 7), "-++-+-+")
    out, _trace = lambda_max_algorithm(d)
    assert out.lam == (25, 23, 15, 13, 11, 3, 1)
    assert out.eps_seq() == (-1, 1, 1, -1, 1, -1, 1)


def test_criterion_07_theorem_min():
    _assert_clean(suite_min(17), 300)


def test_criterion_08_pp_and_transp():
    # gated sets agree at s = 2 and s = 1/2, and the doubled extremal
    # sequence equals the twisted transpose plus two unit rays
    _assert_clean(suite_transp(17), 300)


def test_criterion_09_quasi_distinguished():
    _assert_clean(suite_quasi(21), 60)


def test_criterion_10_even_parts():
    _assert_clean(suite_pieri(14), 300)


def test_criterion_11_negative_control():
    d = GSCDatum((4, 4, 1), (1,))
    (alpha, beta), k = phi_N(d)
    assert (alpha, beta) == ((1,), (3,)) and k == 1
    assert not is_H(alpha, beta, k)
    with pytest.raises(ValueError):
        mult_local_systems(d, GSCDatum((9,), (1,)))
