import pytest
from hypothesis import given, settings, strategies as st

from springer_kit.multiplicity import (expansion_table, format_tpoly,
                                       local_system_table, mult_bipartition,
                                       mult_local_systems, pieri_extensions,
                                       raising_expansion,
                                       springer_fiber_multiplicities,
                                       tpoly_at_one, x_count)
from springer_kit.orders import IndexOrder, all_words
from springer_kit.partitions import partitions_of
from springer_kit.symbols import GSCDatum, datum_from_class_key


def test_format_tpoly():
    assert format_tpoly({}) == "0"
    assert format_tpoly({0: 1}) == "1"
    assert format_tpoly({0: 1, 2: 1}) == "1+t^2"
    assert format_tpoly({1: 1, 3: 2}) == "t+2t^3"
    assert format_tpoly({1: -1}) == "-t"


def test_x_count_fixture():
    o = IndexOrder("aba")
    assert x_count((1,), (2,), o, (3, 0), (0,)) == 1
    assert x_count((1,), (2,), o, (1, 0), (2,)) == 1
    assert x_count((1,), (2,), o, (2, 0), (1,)) == 1
    assert x_count((1,), (2,), o, (9, 0), (0,)) == 0


def test_expansion_fixture():
    # the canonical order aba for ((1),(2)) at k=1
    table = raising_expansion((1,), (2,), IndexOrder("aba"))
    assert table == {((1,), (2,)): {0: 1},
                     ((2,), (1,)): {1: 1},
                     ((3,), ()): {2: 1}}
    # the minimal-representative word gives the same expansion
    table2 = raising_expansion((1,), (2,), IndexOrder("ab"))
    assert table2 == table


def test_mult_fixtures():
    o = IndexOrder("aba")
    assert mult_bipartition((1,), (2,), o, (3,), ()) == 1
    assert mult_bipartition((1,), (2,), o, (1,), (2,)) == 1
    assert mult_bipartition((1,), (2,), o, (2, 1), ()) == 0


def small_instances():
    return st.integers(0, 5).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n) or [()]),
                            st.integers(0, 5 - n))).flatmap(
        lambda t: st.tuples(st.just(t[0]),
                            st.sampled_from(partitions_of(t[1]) or [()])))


@settings(deadline=None, max_examples=40)
@given(small_instances(), st.data())
def test_expansion_matches_oracle(ab, data):
    alpha, beta = ab
    w = data.draw(st.sampled_from(all_words(len(alpha), len(beta))))
    o = IndexOrder(w)
    table = raising_expansion(alpha, beta, o)
    for (mu, nu), poly in table.items():
        assert tpoly_at_one(poly) == mult_bipartition(alpha, beta, o, mu, nu)


def test_local_system_fixtures():
    d = GSCDatum((3, 3, 1), (1, 1))
    seven = GSCDatum((7,), (1,))
    assert mult_local_systems(d, d) == 1
    assert mult_local_systems(d, seven) == 1
    assert mult_local_systems(d, GSCDatum((3, 3, 1), (1, -1))) == 0
    # defect mismatch is 0, not an error
    assert mult_local_systems(GSCDatum((5, 3), (1, 1)), seven) == 0


def test_rejects_bad_sources():
    with pytest.raises(ValueError):
        expansion_table(GSCDatum((3, 2, 2), (1,)))     # even parts
    with pytest.raises(ValueError):
        expansion_table(GSCDatum((4, 4, 1), (1,)))     # fails H
    with pytest.raises(ValueError):
        mult_local_systems(GSCDatum((4, 4, 1), (1,)), GSCDatum((9,), (1,)))


def test_table_supports():
    d = GSCDatum((3, 3, 1), (1, 1))
    table = local_system_table(d)
    lams = sorted(datum_from_class_key(ck).lam for ck in table)
    assert lams == [(3, 3, 1), (5, 1, 1), (7,)]
    assert all(m == 1 for (m, _) in table.values())


def test_pieri_fixture():
    base = {((1,), ()): 1}
    got = pieri_extensions(base, 2)
    assert got == {((3,), ()): 1, ((2, 1), ()): 1, ((2,), (1,)): 1,
                   ((1,), (2,)): 1, ((1, 1), (1,)): 1}


def test_springer_fiber_fixture():
    d = GSCDatum((3, 2, 2), (1,))
    table = springer_fiber_multiplicities(d)
    got = {(datum_from_class_key(ck).lam, datum_from_class_key(ck).eps): m
           for ck, m in table.items()}
    assert got == {((3, 2, 2), (1,)): 1,
                   ((3, 3, 1), (1, 1)): 1,
                   ((5, 1, 1), (1, -1)): 1,
                   ((5, 1, 1), (1, 1)): 1,
                   ((7,), (1,)): 1}


def test_springer_fiber_rejections():
    with pytest.raises(ValueError):
        springer_fiber_multiplicities(GSCDatum((2, 2), ()))   # no odd core
    with pytest.raises(ValueError):
        # defect 2 is out of range for the even-parts route
        springer_fiber_multiplicities(GSCDatum((3, 1), (1, -1)))
