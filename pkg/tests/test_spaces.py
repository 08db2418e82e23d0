"""Enriched spaces, relations, predicates, and their operators."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from softscale.errors import (DimensionError, UnknownElementError,
                              ValuationMismatchError)
from softscale.spaces import (ApproximationSpace, Facet, VPredicate,
                              VRelation, VSpace, check_predicate,
                              check_relation, check_vmap, check_vspace,
                              compose, lift_map_lower, lift_map_upper,
                              lower_approx, metric_relation, opposite,
                              power_metric, predicate_closure,
                              relation_from_entries, require_valid,
                              residuate, symmetrize, upper_approx, yoneda)
from softscale.valuation import BOOLEAN, FUZZY, INFINITY, REAL


def boolean_space(elements, pairs):
    """Reflexive-transitive boolean metric from a set of ordered pairs."""
    n = len(elements)
    m = np.eye(n)
    idx = {e: i for i, e in enumerate(elements)}
    for a, b in pairs:
        m[idx[a], idx[b]] = 1.0
    # transitive closure, crude but fine at this size
    for _ in range(n):
        m = np.minimum(1.0, m @ m)
    return VSpace(BOOLEAN, tuple(elements), m)


TWO_CHAIN = boolean_space(("a", "b"), [("a", "b")])


def test_discrete_space_is_valid():
    s = VSpace.discrete(BOOLEAN, ("a", "b", "c"))
    assert check_vspace(s) == []
    assert s.distance("a", "a") == 1.0
    assert s.distance("a", "b") == 0.0


def test_transitivity_violation_reported():
    m = np.eye(3)
    m[0, 1] = 1.0
    m[1, 2] = 1.0
    s = VSpace(BOOLEAN, ("a", "b", "c"), m)
    report = check_vspace(s)
    assert any("a" in str(v) and "c" in str(v) for v in report)
    with pytest.raises(ValueError):
        require_valid(report, "space")


def test_real_asymmetric_metric_is_valid():
    m = np.array([[0.0, 1.0], [2.0, 0.0]])
    s = VSpace(REAL, ("x", "y"), m)
    assert check_vspace(s) == []


def test_reflexivity_violation_reported():
    m = np.zeros((2, 2))
    m[0, 1] = 1.0
    s = VSpace(BOOLEAN, ("a", "b"), m)
    report = check_vspace(s)
    assert report, "missing unit distances must be flagged"


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionError):
        VSpace(BOOLEAN, ("a", "b"), np.eye(3))


def test_opposite_transposes_and_involutes():
    m = np.array([[0.0, 1.0], [2.0, 0.0]])
    s = VSpace(REAL, ("x", "y"), m)
    op = opposite(s)
    assert op.distance("x", "y") == 2.0
    assert op.distance("y", "x") == 1.0
    back = opposite(op)
    assert np.array_equal(back.metric, s.metric)
    sym = VSpace.discrete(BOOLEAN, ("a", "b"))
    assert np.array_equal(opposite(sym).metric, sym.metric)


def test_symmetrize_boolean_chain():
    sym = symmetrize(TWO_CHAIN)
    assert isinstance(sym, ApproximationSpace)
    assert sym.distance("a", "b") == 0.0
    assert sym.distance("b", "a") == 0.0
    assert check_vspace(sym) == []


def test_symmetrize_real_adds_distances():
    m = np.array([[0.0, 1.0], [2.0, 0.0]])
    s = VSpace(REAL, ("x", "y"), m)
    sym = symmetrize(s)
    assert sym.distance("x", "y") == pytest.approx(3.0)
    assert sym.distance("y", "x") == pytest.approx(3.0)
    assert check_vspace(sym) == []


def test_symmetrize_boolean_equivalence_unchanged():
    m = np.ones((2, 2))
    s = VSpace(BOOLEAN, ("a", "b"), m)
    assert np.array_equal(symmetrize(s).metric, m)


def test_check_vmap_monotone_vs_antitone():
    target = boolean_space(("u", "v"), [("u", "v")])
    assert check_vmap({"a": "u", "b": "v"}, TWO_CHAIN, target) == []
    report = check_vmap({"a": "v", "b": "u"}, TWO_CHAIN, target)
    assert report, "antitone map must be flagged"
    assert check_vmap({"a": "a", "b": "b"}, TWO_CHAIN, TWO_CHAIN) == []


def test_check_vmap_contraction_real():
    m = np.array([[0.0, 4.0], [6.0, 0.0]])
    s = VSpace(REAL, ("x", "y"), m)
    t = VSpace(REAL, ("x", "y"), m / 2.0)
    assert check_vmap({"x": "x", "y": "y"}, s, t) == []
    # doubling distances is not measure preserving in the downward order
    assert check_vmap({"x": "x", "y": "y"}, t, s)


def test_check_vmap_unknown_target():
    with pytest.raises(UnknownElementError):
        check_vmap({"a": "zzz", "b": "b"}, TWO_CHAIN, TWO_CHAIN)


def test_yoneda_rows():
    ya = yoneda(TWO_CHAIN, "a")
    yb = yoneda(TWO_CHAIN, "b")
    assert list(ya.values) == [1.0, 1.0]
    assert list(yb.values) == [0.0, 1.0]
    assert check_predicate(ya) == [] and check_predicate(yb) == []
    disc = VSpace.discrete(BOOLEAN, ("p", "q"))
    assert list(yoneda(disc, "p").values) == [1.0, 0.0]
    with pytest.raises(UnknownElementError):
        yoneda(disc, "zzz")


def test_yoneda_real_is_metric_row():
    m = np.array([[0.0, 1.0], [2.0, 0.0]])
    s = VSpace(REAL, ("x", "y"), m)
    assert list(yoneda(s, "x").values) == [0.0, 1.0]
    assert check_predicate(yoneda(s, "x")) == []


def equivalence_space(elements, classes):
    n = len(elements)
    idx = {e: i for i, e in enumerate(elements)}
    m = np.zeros((n, n))
    for cls in classes:
        for a, b in itertools.product(cls, repeat=2):
            m[idx[a], idx[b]] = 1.0
    return ApproximationSpace(BOOLEAN, tuple(elements), m)


AB_C = equivalence_space(("a", "b", "c"), [("a", "b"), ("c",)])


def test_check_predicate_definability():
    bad = VPredicate(AB_C, np.array([1.0, 0.0, 0.0]))
    assert check_predicate(bad), "half a class is not definable"
    good = VPredicate(AB_C, np.array([1.0, 1.0, 0.0]))
    assert check_predicate(good) == []


def test_predicate_closure():
    closed = predicate_closure([1.0, 0.0, 0.0], AB_C)
    assert list(closed.values) == [1.0, 1.0, 0.0]
    again = predicate_closure(closed.values, AB_C)
    assert np.array_equal(again.values, closed.values)
    zero = predicate_closure([0.0, 0.0, 0.0], AB_C)
    assert list(zero.values) == [0.0, 0.0, 0.0]
    assert check_predicate(closed) == []


def brute_compose_bool(a, b):
    n, k = a.shape
    k2, m = b.shape
    out = np.zeros((n, m))
    for i in range(n):
        for j in range(m):
            out[i, j] = 1.0 if any(
                a[i, y] >= 0.5 and b[y, j] >= 0.5 for y in range(k)) else 0.0
    return out


def test_compose_matches_boolean_oracle():
    x = VSpace.discrete(BOOLEAN, ("x0", "x1", "x2"))
    y = VSpace.discrete(BOOLEAN, ("y0", "y1", "y2"))
    z = VSpace.discrete(BOOLEAN, ("z0", "z1", "z2"))
    rng = np.random.default_rng(7)
    for _ in range(25):
        a = (rng.random((3, 3)) < 0.5).astype(float)
        b = (rng.random((3, 3)) < 0.5).astype(float)
        got = compose(VRelation(x, y, a), VRelation(y, z, b))
        assert np.array_equal(got.matrix, brute_compose_bool(a, b))


def test_compose_fuzzy_single_middle():
    x = VSpace.discrete(FUZZY, ("x",))
    y = VSpace.discrete(FUZZY, ("y",))
    z = VSpace.discrete(FUZZY, ("z",))
    got = compose(VRelation(x, y, np.array([[0.6]])),
                  VRelation(y, z, np.array([[0.8]])))
    assert got.matrix[0, 0] == pytest.approx(0.6)


def test_metric_relation_is_identity_for_composition():
    mu = metric_relation(TWO_CHAIN)
    tau = VRelation(TWO_CHAIN, VSpace.discrete(BOOLEAN, ("p",)),
                    np.array([[1.0], [1.0]]))
    assert check_relation(tau) == []
    left = compose(mu, tau)
    assert np.allclose(left.matrix, tau.matrix)


def test_residuate_boolean_singletons():
    x = VSpace.discrete(BOOLEAN, ("x",))
    y = VSpace.discrete(BOOLEAN, ("y",))
    z = VSpace.discrete(BOOLEAN, ("z",))
    got = residuate(VRelation(x, y, np.array([[1.0]])),
                    VRelation(x, z, np.array([[0.0]])))
    assert got.matrix[0, 0] == 0.0


def test_residuate_fuzzy_singletons():
    x = VSpace.discrete(FUZZY, ("x",))
    y = VSpace.discrete(FUZZY, ("y",))
    z = VSpace.discrete(FUZZY, ("z",))
    got = residuate(VRelation(x, y, np.array([[0.7]])),
                    VRelation(x, z, np.array([[0.3]])))
    assert got.matrix[0, 0] == pytest.approx(0.3)


def test_residuation_adjointness_small_boolean():
    x = VSpace.discrete(BOOLEAN, ("x0", "x1"))
    y = VSpace.discrete(BOOLEAN, ("y0", "y1"))
    z = VSpace.discrete(BOOLEAN, ("z0",))
    grids = list(itertools.product([0.0, 1.0], repeat=4))
    zcol = list(itertools.product([0.0, 1.0], repeat=2))
    for svals, tvals, rvals in itertools.product(grids, zcol, zcol):
        sigma = VRelation(x, y, np.array(svals).reshape(2, 2))
        tau = VRelation(y, z, np.array(tvals).reshape(2, 1))
        rho = VRelation(x, z, np.array(rvals).reshape(2, 1))
        left = np.all(compose(sigma, tau).matrix <= rho.matrix)
        right = np.all(tau.matrix <= residuate(sigma, rho).matrix)
        assert left == right


def test_relation_mismatch_errors():
    x = VSpace.discrete(BOOLEAN, ("x",))
    yf = VSpace.discrete(FUZZY, ("y",))
    with pytest.raises(ValuationMismatchError):
        VRelation(x, yf, np.array([[1.0]]))
    y = VSpace.discrete(BOOLEAN, ("y",))
    z = VSpace.discrete(BOOLEAN, ("z",))
    with pytest.raises(DimensionError):
        compose(VRelation(x, y, np.ones((1, 1))),
                VRelation(z, y, np.ones((1, 1))))
    with pytest.raises(DimensionError):
        VRelation(x, y, np.ones((2, 1)))


def test_relation_from_entries_defaults_bottom():
    x = VSpace.discrete(REAL, ("x",))
    y = VSpace.discrete(REAL, ("y0", "y1"))
    rel = relation_from_entries(x, y, {("x", "y0"): 2.0})
    assert rel.matrix[0, 0] == 2.0
    assert rel.matrix[0, 1] == INFINITY


def test_lift_identity_map_is_metric():
    mu = metric_relation(TWO_CHAIN)
    ident = {"a": "a", "b": "b"}
    low = lift_map_lower(ident, TWO_CHAIN, TWO_CHAIN)
    up = lift_map_upper(ident, TWO_CHAIN, TWO_CHAIN)
    assert np.array_equal(low.matrix, mu.matrix)
    # f^*(y, x) = nu(y, f(x)); for the identity that is again mu
    assert np.array_equal(up.matrix, mu.matrix)
    assert check_relation(low) == []
    assert check_relation(up) == []


def test_lift_monotone_map_closure():
    target = boolean_space(("u", "v", "w"), [("u", "v"), ("v", "w")])
    f = {"a": "u", "b": "w"}
    low = lift_map_lower(f, TWO_CHAIN, target)
    up = lift_map_upper(f, TWO_CHAIN, target)
    # f_*(x, y) = nu(f(x), y)
    for i, x in enumerate(TWO_CHAIN.elements):
        for j, y in enumerate(target.elements):
            assert low.matrix[i, j] == target.distance(f[x], y)
            assert up.matrix[j, i] == target.distance(y, f[x])
    assert check_relation(low) == []
    assert check_relation(up) == []


def test_lift_rejects_non_vmap():
    target = boolean_space(("u", "v"), [("u", "v")])
    with pytest.raises(ValueError):
        lift_map_lower({"a": "v", "b": "u"}, TWO_CHAIN, target)


def test_power_metric():
    disc = VSpace.discrete(FUZZY, ("p", "q"))
    p = VPredicate(disc, np.array([0.8, 0.2]))
    q = VPredicate(disc, np.array([0.5, 0.9]))
    assert power_metric(p, q) == pytest.approx(0.5)
    assert power_metric(q, q) == pytest.approx(1.0)
    bool_disc = VSpace.discrete(BOOLEAN, ("p", "q"))
    sub = VPredicate(bool_disc, np.array([1.0, 0.0]))
    sup = VPredicate(bool_disc, np.array([1.0, 1.0]))
    assert power_metric(sub, sup) == 1.0
    assert power_metric(sup, sub) == 0.0


def pawlak_lower(classes, subset):
    return set().union(*(cls for cls in classes
                         if set(cls) <= subset)) if classes else set()


def pawlak_upper(classes, subset):
    return set().union(*(cls for cls in classes
                         if set(cls) & subset)) if classes else set()


def test_rough_approximations_match_pawlak():
    elements = ("a", "b", "c", "d")
    classes = [("a", "b"), ("c", "d")]
    space = equivalence_space(elements, classes)
    for bits in itertools.product([0.0, 1.0], repeat=4):
        subset = {e for e, bit in zip(elements, bits) if bit}
        pred = VPredicate(space, np.array(bits))
        low = lower_approx(pred, space)
        up = upper_approx(pred, space)
        class_sets = [set(c) for c in classes]
        expect_low = {e for e in elements
                      if any(e in c and c <= subset for c in class_sets)}
        expect_up = {e for e in elements
                     if any(e in c and (c & subset) for c in class_sets)}
        assert {e for e, v in zip(elements, low.values) if v} == expect_low
        assert {e for e, v in zip(elements, up.values) if v} == expect_up


def test_rough_definable_is_exact():
    pred = VPredicate(AB_C, np.array([1.0, 1.0, 0.0]))
    assert np.array_equal(lower_approx(pred, AB_C).values, pred.values)
    assert np.array_equal(upper_approx(pred, AB_C).values, pred.values)
    top = VPredicate(AB_C, np.ones(3))
    assert np.array_equal(lower_approx(top, AB_C).values, top.values)


def test_rough_requires_symmetry():
    with pytest.raises(ValueError):
        lower_approx(VPredicate(TWO_CHAIN, np.array([1.0, 1.0])),
                     TWO_CHAIN)


@settings(max_examples=200)
@given(st.lists(st.floats(min_value=0.0, max_value=1.0),
                min_size=3, max_size=3))
def test_fuzzy_rough_sandwich(values):
    m = np.array([
        [1.0, 0.6, 0.4],
        [0.6, 1.0, 0.4],
        [0.4, 0.4, 1.0],
    ])
    space = ApproximationSpace(FUZZY, ("a", "b", "c"), m)
    assert check_vspace(space) == []
    pred = VPredicate(space, np.array(values))
    low = lower_approx(pred, space)
    up = upper_approx(pred, space)
    assert np.all(low.values <= pred.values + 1e-9)
    assert np.all(pred.values <= up.values + 1e-9)
