"""Closed preorder laws for the three valuations."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from softscale.errors import CarrierError, ValuationMismatchError
from softscale.valuation import (BOOLEAN, EPSILON, FUZZY, INFINITY, REAL,
                                 require_same, valuation)

BOOL_VALUES = [0.0, 1.0]
FUZZY_GRID = [round(i * 0.05, 2) for i in range(21)]
REAL_GRID = [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, INFINITY]


def grid(v):
    if v is BOOLEAN:
        return BOOL_VALUES
    if v is FUZZY:
        return FUZZY_GRID
    return REAL_GRID


ALL = [BOOLEAN, FUZZY, REAL]


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_adjunction(v):
    for a, b, c in itertools.product(grid(v), repeat=3):
        left = v.leq(v.tensor(a, b), c)
        right = v.leq(a, v.implies(b, c))
        assert left == right, (v.kind, a, b, c)


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_tensor_is_commutative_associative_unital(v):
    for a, b in itertools.product(grid(v), repeat=2):
        assert v.eq(v.tensor(a, b), v.tensor(b, a))
        assert v.eq(v.tensor(v.unit, a), a)
        assert v.eq(v.tensor(a, v.unit), a)
    for a, b, c in itertools.product(grid(v), repeat=3):
        assert v.eq(v.tensor(v.tensor(a, b), c),
                    v.tensor(a, v.tensor(b, c)))


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_tensor_monotone_implies_antitone_monotone(v):
    values = grid(v)
    for a, b in itertools.product(values, repeat=2):
        if not v.leq(a, b):
            continue
        for c in values:
            assert v.leq(v.tensor(a, c), v.tensor(b, c))
            # implies is antitone in the first argument
            assert v.leq(v.implies(b, c), v.implies(a, c))
            # and monotone in the second
            assert v.leq(v.implies(c, a), v.implies(c, b))


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_joins_meets_are_bounds(v):
    values = grid(v)
    for xs in itertools.combinations(values, 2):
        j = v.join(xs)
        m = v.meet(xs)
        for x in xs:
            assert v.leq(x, j)
            assert v.leq(m, x)
    assert v.eq(v.join([]), v.bottom)
    assert v.eq(v.meet([]), v.top)


def test_boolean_tables():
    v = BOOLEAN
    assert v.leq(0.0, 1.0)
    assert not v.leq(1.0, 0.0)
    assert v.tensor(1.0, 1.0) == 1.0
    assert v.tensor(1.0, 0.0) == 0.0
    assert v.implies(1.0, 0.0) == 0.0
    assert v.implies(0.0, 0.0) == 1.0
    assert v.join([0.0, 1.0, 0.0]) == 1.0
    assert v.meet([]) == 1.0


def test_fuzzy_tables():
    v = FUZZY
    assert v.tensor(0.4, 0.7) == pytest.approx(0.4)
    assert v.implies(0.3, 0.7) == pytest.approx(1.0)
    assert v.implies(0.7, 0.3) == pytest.approx(0.3)
    assert v.leq(0.3, 0.3)
    assert v.meet([0.2, 0.9]) == pytest.approx(0.2)
    assert v.join([]) == pytest.approx(0.0)


def test_real_downward_order():
    v = REAL
    assert v.leq(5.0, 3.0)
    assert not v.leq(3.0, 5.0)
    assert v.tensor(2.0, 3.0) == pytest.approx(5.0)
    assert v.implies(3.0, 5.0) == pytest.approx(2.0)
    assert v.implies(5.0, 3.0) == pytest.approx(0.0)
    # joins go numerically down, meets numerically up
    assert v.join([3.0, 5.0]) == pytest.approx(3.0)
    assert v.meet([3.0, 5.0]) == pytest.approx(5.0)
    assert v.join([]) == INFINITY
    assert v.meet([]) == 0.0


def test_real_infinity_rules():
    v = REAL
    assert v.tensor(INFINITY, 2.0) == INFINITY
    assert v.implies(INFINITY, 7.0) == 0.0
    assert v.implies(7.0, INFINITY) == INFINITY
    assert v.leq(INFINITY, INFINITY)
    assert v.leq(INFINITY, 0.0)


def test_carrier_checks():
    with pytest.raises(CarrierError):
        BOOLEAN.check(0.5)
    with pytest.raises(CarrierError):
        FUZZY.check(1.5)
    with pytest.raises(CarrierError):
        REAL.check(-1.0)
    assert REAL.check(INFINITY) == INFINITY


def test_valuation_lookup_and_mixing():
    assert valuation("boolean") is BOOLEAN
    assert valuation("fuzzy") is FUZZY
    assert valuation("real") is REAL
    with pytest.raises(ValueError):
        valuation("modal")
    with pytest.raises(ValuationMismatchError):
        require_same(BOOLEAN, FUZZY)
    assert require_same(REAL, REAL) is REAL


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_array_ops_agree_with_scalar(v):
    values = grid(v)
    a = np.array(values)
    b = np.array(list(reversed(values)))
    t = v.tensor_arr(a, b)
    i = v.implies_arr(a, b)
    le = v.leq_arr(a, b)
    for k, (x, y) in enumerate(zip(values, reversed(values))):
        assert v.eq(t[k], v.tensor(x, y))
        assert v.eq(i[k], v.implies(x, y))
        assert bool(le[k]) == v.leq(x, y)
    stacked = np.stack([a, b])
    assert all(v.eq(x, y) for x, y in
               zip(v.join_arr(stacked, axis=0),
                   [v.join([p, q]) for p, q in zip(a, b)]))
    assert all(v.eq(x, y) for x, y in
               zip(v.meet_arr(stacked, axis=0),
                   [v.meet([p, q]) for p, q in zip(a, b)]))


@pytest.mark.parametrize("v", ALL, ids=[v.kind for v in ALL])
def test_empty_axis_reductions(v):
    empty = np.zeros((0, 3))
    j = v.join_arr(empty, axis=0)
    m = v.meet_arr(empty, axis=0)
    assert j.shape == (3,) and m.shape == (3,)
    assert all(v.eq(x, v.bottom) for x in j)
    assert all(v.eq(x, v.top) for x in m)


@given(st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0))
def test_fuzzy_adjunction_property(a, b, c):
    v = FUZZY
    assert v.leq(v.tensor(a, b), c) == v.leq(a, v.implies(b, c))


# multiples of 2^-6 keep every sum and difference exact in floats, so
# the adjunction test never straddles the epsilon tolerance
_real_points = st.integers(min_value=0, max_value=3200).map(
    lambda n: n / 64.0) | st.just(INFINITY)


@given(_real_points, _real_points, _real_points)
def test_real_adjunction_property(a, b, c):
    v = REAL
    assert v.leq(v.tensor(a, b), c) == v.leq(a, v.implies(b, c))
