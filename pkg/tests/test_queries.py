"""Query AST: evaluation, typing, date resolution, denotation algebra."""

from __future__ import annotations

from datetime import date

import pytest
from hypothesis import given, strategies as st

from softscale.queries import (And, Comparison, DateType, IntSet,
                               NaturalType, Not, Or, ORDERS, QueryTypeError,
                               RelativeYears, StringType,
                               UnresolvedDateError, check_types, denotation,
                               evaluate, functions_used, resolve_dates)


def test_orders_enumerated():
    assert ORDERS == ("less", "less-equal", "greater", "greater-equal",
                      "equal", "not-equal")
    with pytest.raises(QueryTypeError):
        Comparison("age", "between", 10)


def test_evaluate_numeric():
    assert evaluate(Comparison("age", "less-equal", 18), 17)
    assert not evaluate(Comparison("age", "greater-equal", 80), 50)
    assert evaluate(Comparison("age", "greater", 65), 66)
    assert not evaluate(Comparison("age", "greater", 65), 65)
    assert evaluate(Comparison("age", "equal", 50), 50)
    assert evaluate(Comparison("age", "not-equal", 50), 51)


def test_evaluate_combinators():
    q = And((Comparison("age", "less-equal", 65),
             Not(Comparison("age", "less", 40))))
    assert evaluate(q, 40)
    assert evaluate(q, 65)
    assert not evaluate(q, 39)
    assert not evaluate(q, 66)
    q2 = Or((Comparison("age", "less", 18),
             Comparison("age", "greater", 80)))
    assert evaluate(q2, 17)
    assert evaluate(q2, 81)
    assert not evaluate(q2, 50)


def test_query_rendering():
    assert str(Comparison("age", "less-equal", 65)) == "age <= 65"
    assert str(Comparison("born", "greater", RelativeYears(10))) \
        == "born > -P10Y"
    assert str(And((Comparison("age", "less-equal", 65),
                    Not(Comparison("age", "less", 40))))) \
        == "age <= 65 and not (age < 40)"
    assert str(Or((Comparison("age", "equal", 1),
                   And((Comparison("age", "greater", 5),
                        Comparison("age", "less", 9)))))) \
        == "age = 1 or (age > 5 and age < 9)"


def test_evaluate_dates_and_strings():
    q = Comparison("issued", "less-equal", date(2000, 1, 1))
    assert evaluate(q, date(1999, 12, 31))
    assert not evaluate(q, date(2000, 1, 2))
    assert evaluate(Comparison("genre", "equal", "western"), "western")
    assert not evaluate(Comparison("genre", "not-equal", "western"),
                        "western")


def test_evaluate_type_errors():
    with pytest.raises(QueryTypeError):
        evaluate(Comparison("age", "less", 10), "young")
    with pytest.raises(QueryTypeError):
        evaluate(Comparison("genre", "less", "western"), "western")
    with pytest.raises(QueryTypeError):
        evaluate(Comparison("age", "less", 10), True)
    with pytest.raises(UnresolvedDateError):
        evaluate(Comparison("issued", "greater", RelativeYears(10)),
                 date(1995, 1, 1))


def test_resolve_dates():
    q = Comparison("issued", "greater-equal", RelativeYears(10))
    resolved = resolve_dates(q, date(1998, 7, 15))
    assert resolved.constant == date(1988, 7, 15)
    assert evaluate(resolved, date(1990, 1, 1))
    assert not evaluate(resolved, date(1980, 1, 1))
    nested = And((q, Not(q)))
    r = resolve_dates(nested, date(1998, 7, 15))
    assert r.parts[0].constant == date(1988, 7, 15)


def test_resolve_dates_leap_day():
    q = Comparison("issued", "less", RelativeYears(1))
    resolved = resolve_dates(q, date(2024, 2, 29))
    assert resolved.constant == date(2023, 2, 28)


def test_check_types():
    nat = NaturalType()
    assert check_types(Comparison("age", "less", 10), nat) is None
    with pytest.raises(QueryTypeError):
        check_types(Comparison("age", "less", "ten"), nat)
    with pytest.raises(QueryTypeError):
        check_types(Comparison("age", "less", date(2000, 1, 1)), nat)
    dt = DateType()
    assert check_types(
        Comparison("issued", "less", RelativeYears(3)), dt) is None
    st_ = StringType(("western", "drama"))
    assert check_types(Comparison("genre", "equal", "western"),
                       st_) is None
    with pytest.raises(QueryTypeError):
        check_types(Comparison("genre", "equal", "noir"), st_)
    with pytest.raises(QueryTypeError):
        check_types(Comparison("genre", "less", "drama"), st_)


def test_functions_used():
    q = And((Comparison("age", "less", 10),
             Or((Comparison("year", "greater", 1990),
                 Not(Comparison("age", "equal", 3))))))
    assert functions_used(q) == {"age", "year"}


# --- integer interval sets ------------------------------------------------

def members(s: IntSet, hi: int = 200) -> set[int]:
    return {n for n in range(hi) if s.contains(n)}


def test_intset_basics():
    s = IntSet.from_range(5, 10)
    assert members(s) == set(range(5, 11))
    assert not s.is_empty()
    assert IntSet.empty().is_empty()
    open_end = IntSet.from_range(7, None)
    assert open_end.contains(7) and open_end.contains(10 ** 9)


def test_intset_union_merges_adjacent():
    a = IntSet.from_range(0, 4)
    b = IntSet.from_range(5, 9)
    u = a.union(b)
    assert u.ranges == ((0, 9),)
    disjoint = a.union(IntSet.from_range(6, 9))
    assert disjoint.ranges == ((0, 4), (6, 9))


def test_intset_subset_and_complement():
    inner = IntSet.from_range(10, 20)
    outer = IntSet.from_range(0, 30)
    assert inner.subset_of(outer)
    assert not outer.subset_of(inner)
    comp = inner.complement(0)
    assert members(comp, 40) == set(range(0, 10)) | set(range(21, 40))
    assert comp.intersect(inner).is_empty()


@given(st.lists(st.tuples(st.integers(0, 60), st.integers(0, 60)),
                min_size=0, max_size=4),
       st.lists(st.tuples(st.integers(0, 60), st.integers(0, 60)),
                min_size=0, max_size=4))
def test_intset_algebra_matches_sets(pairs_a, pairs_b):
    def build(pairs):
        s = IntSet.empty()
        for lo, hi in pairs:
            if lo <= hi:
                s = s.union(IntSet.from_range(lo, hi))
        return s

    a, b = build(pairs_a), build(pairs_b)
    sa, sb = members(a, 70), members(b, 70)
    assert members(a.union(b), 70) == sa | sb
    assert members(a.intersect(b), 70) == sa & sb
    # every built range tops out below the sampled window, so set
    # comparison over the window decides subset exactly
    assert a.subset_of(b) == (sa <= sb)
    comp = a.complement(0)
    assert members(comp, 70) == set(range(70)) - sa


def test_denotation_naturals():
    nat = NaturalType()
    assert members(denotation(Comparison("age", "less-equal", 18), nat)) \
        == set(range(0, 19))
    assert members(denotation(Comparison("age", "less", 40), nat)) \
        == set(range(0, 40))
    got = denotation(Comparison("age", "greater", 65), nat)
    assert got.contains(66) and not got.contains(65)
    assert got.contains(10 ** 9)
    eq = denotation(Comparison("age", "equal", 7), nat)
    assert members(eq) == {7}
    ne = denotation(Comparison("age", "not-equal", 7), nat)
    assert not ne.contains(7) and ne.contains(6) and ne.contains(8)


def test_denotation_combinators():
    nat = NaturalType()
    working_not_young = And((Comparison("age", "less-equal", 65),
                             Not(Comparison("age", "less", 40))))
    assert members(denotation(working_not_young, nat)) \
        == set(range(40, 66))
    either = Or((Comparison("age", "less", 2),
                 Comparison("age", "equal", 5)))
    assert members(denotation(either, nat)) == {0, 1, 5}


def test_denotation_dates():
    dt = DateType()
    q = Comparison("issued", "greater-equal", date(1990, 1, 1))
    den = denotation(q, dt)
    assert den.contains(date(1990, 1, 1).toordinal())
    assert not den.contains(date(1989, 12, 31).toordinal())
    rel = Comparison("issued", "greater-equal", RelativeYears(10))
    den2 = denotation(rel, dt, reference=date(2000, 1, 1))
    assert den2.contains(date(1990, 1, 1).toordinal())
    with pytest.raises(UnresolvedDateError):
        denotation(rel, dt)


def test_denotation_strings():
    st_ = StringType(("western", "drama", "noir"))
    assert denotation(Comparison("genre", "equal", "western"), st_) \
        == frozenset({"western"})
    assert denotation(Comparison("genre", "not-equal", "western"), st_) \
        == frozenset({"drama", "noir"})
    assert denotation(Not(Comparison("genre", "equal", "noir")), st_) \
        == frozenset({"western", "drama"})
    with pytest.raises(QueryTypeError):
        denotation(Comparison("genre", "equal", "western"),
                   StringType(None))
