"""Enriched spaces, maps, predicates, and relations.

A space is a finite element set with a matrix-valued metric over a
valuation: reflexive (the unit precedes every diagonal entry) and
transitive (composition of two metric entries precedes the direct one).
Symmetric spaces are approximation spaces, whose metric reads as a
graded indiscernibility.  Relations between spaces compose by
sup-of-tensor and residuate by inf-of-implication; predicates are
metric-constrained characteristic vectors.

Structures validate only shapes and carriers on construction.  The
axioms (reflexivity, transitivity, closure, the predicate constraint)
are checked by the ``check_*`` functions, which return a list of
violations instead of repairing silently; an empty list means valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import DimensionError, UnknownElementError
from .valuation import Valuation, require_same


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Violation:
    """One failed axiom instance: which rule, where, and the values seen."""

    kind: str
    elements: tuple[str, ...]
    values: tuple[float, ...]

    def __str__(self) -> str:
        where = ", ".join(self.elements)
        vals = ", ".join(f"{v:g}" for v in self.values)
        return f"{self.kind} violated at ({where}): values ({vals})"


@dataclass(frozen=True, eq=False)
class VSpace:
    """Finite element set with a valuation-valued metric matrix."""

    valuation: Valuation
    elements: tuple[str, ...]
    metric: np.ndarray
    _index: dict[str, int] = field(repr=False, default=None)

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise DimensionError("duplicate element identifiers")
        metric = self.valuation.check_array(self.metric)
        n = len(elements)
        if metric.shape != (n, n):
            raise DimensionError(
                f"metric shape {metric.shape} does not match "
                f"{n} elements")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "metric", _frozen(metric))
        object.__setattr__(self, "_index",
                           {e: i for i, e in enumerate(elements)})

    @classmethod
    def discrete(cls, valuation: Valuation,
                 elements: Sequence[str]) -> "VSpace":
        """Identity metric: unit on the diagonal, bottom elsewhere."""
        n = len(elements)
        m = np.full((n, n), valuation.bottom)
        np.fill_diagonal(m, valuation.unit)
        return cls(valuation, tuple(elements), m)

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(
                f"unknown element {element!r}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def distance(self, x: str, y: str) -> float:
        return float(self.metric[self.index(x), self.index(y)])

    def same_elements(self, other: "VSpace") -> bool:
        return self.elements == other.elements


class ApproximationSpace(VSpace):
    """A space whose metric is symmetric (graded indiscernibility)."""

    def __post_init__(self):
        super().__post_init__()
        if not np.array_equal(self.metric, self.metric.T):
            raise DimensionError("approximation space metric must be "
                                 "symmetric")


@dataclass(frozen=True, eq=False)
class VRelation:
    """Matrix-valued relation between two spaces over one valuation."""

    source: VSpace
    target: VSpace
    matrix: np.ndarray

    def __post_init__(self):
        require_same(self.source.valuation, self.target.valuation)
        matrix = self.valuation.check_array(self.matrix)
        shape = (len(self.source), len(self.target))
        if matrix.shape != shape:
            raise DimensionError(
                f"relation matrix shape {matrix.shape} does not match "
                f"spaces {shape}")
        object.__setattr__(self, "matrix", _frozen(matrix))

    @property
    def valuation(self) -> Valuation:
        return self.source.valuation

    def value(self, x: str, y: str) -> float:
        return float(self.matrix[self.source.index(x),
                                 self.target.index(y)])


@dataclass(frozen=True, eq=False)
class Facet(VRelation):
    """A relation read as a formal context: objects against attributes."""

    @property
    def objects(self) -> tuple[str, ...]:
        return self.source.elements

    @property
    def attributes(self) -> tuple[str, ...]:
        return self.target.elements

    def incidence(self, obj: str, attr: str) -> float:
        return self.value(obj, attr)

    def is_boolean(self) -> bool:
        return self.valuation.kind == "boolean"


@dataclass(frozen=True, eq=False)
class VPredicate:
    """Valuation-valued characteristic vector over a space."""

    space: VSpace
    values: np.ndarray

    def __post_init__(self):
        values = self.space.valuation.check_array(self.values)
        if values.shape != (len(self.space),):
            raise DimensionError(
                f"predicate length {values.shape} does not match "
                f"{len(self.space)} elements")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def valuation(self) -> Valuation:
        return self.space.valuation

    def value(self, x: str) -> float:
        return float(self.values[self.space.index(x)])


# ---------------------------------------------------------------------------
# validation


def check_vspace(space: VSpace) -> list[Violation]:
    """Report every reflexivity and transitivity failure in the metric."""
    v = space.valuation
    m = space.metric
    out: list[Violation] = []
    for i, e in enumerate(space.elements):
        if not v.leq(v.unit, m[i, i]):
            out.append(Violation("reflexivity", (e,), (float(m[i, i]),)))
    n = len(space)
    for i in range(n):
        for j in range(n):
            step = v.tensor_arr(np.full(n, m[i, j]), m[j])
            bad = ~v.leq_arr(step, m[i])
            for k in np.nonzero(bad)[0]:
                out.append(Violation(
                    "transitivity",
                    (space.elements[i], space.elements[j],
                     space.elements[int(k)]),
                    (float(m[i, j]), float(m[j, k]), float(m[i, k]))))
    return out


def check_vmap(mapping: Mapping[str, str], source: VSpace,
               target: VSpace) -> list[Violation]:
    """Report element pairs where the map fails to preserve measure."""
    require_same(source.valuation, target.valuation)
    v = source.valuation
    images = []
    for e in source.elements:
        if e not in mapping:
            raise UnknownElementError(f"map undefined on {e!r}")
        images.append(target.index(mapping[e]))
    out: list[Violation] = []
    for i, x1 in enumerate(source.elements):
        for j, x2 in enumerate(source.elements):
            left = float(source.metric[i, j])
            right = float(target.metric[images[i], images[j]])
            if not v.leq(left, right):
                out.append(Violation("measure-preservation", (x1, x2),
                                     (left, right)))
    return out


def check_predicate(pred: VPredicate) -> list[Violation]:
    """Report pairs violating the metric constraint of the predicate."""
    v = pred.valuation
    m = pred.space.metric
    vals = pred.values
    out: list[Violation] = []
    n = len(pred.space)
    for i in range(n):
        step = v.tensor_arr(np.full(n, vals[i]), m[i])
        bad = ~v.leq_arr(step, vals)
        for j in np.nonzero(bad)[0]:
            out.append(Violation(
                "predicate-metric",
                (pred.space.elements[i], pred.space.elements[int(j)]),
                (float(vals[i]), float(m[i, j]), float(vals[j]))))
    return out


def check_relation(rel: VRelation) -> list[Violation]:
    """Report entries violating closure with respect to both metrics."""
    v = rel.valuation
    out: list[Violation] = []
    left = _compose_matrices(v, rel.source.metric, rel.matrix)
    right = _compose_matrices(v, rel.matrix, rel.target.metric)
    for name, closed in (("left-closure", left), ("right-closure", right)):
        bad = ~v.leq_arr(closed, rel.matrix)
        for i, j in zip(*np.nonzero(bad)):
            out.append(Violation(
                name,
                (rel.source.elements[int(i)], rel.target.elements[int(j)]),
                (float(closed[i, j]), float(rel.matrix[i, j]))))
    return out


def require_valid(violations: list[Violation], what: str) -> None:
    if violations:
        lines = "\n  ".join(str(v) for v in violations[:10])
        more = "" if len(violations) <= 10 else \
            f"\n  ... and {len(violations) - 10} more"
        raise DimensionError(f"invalid {what}:\n  {lines}{more}")


# ---------------------------------------------------------------------------
# constructions


def opposite(space: VSpace) -> VSpace:
    """Transpose the metric; the dual space."""
    return VSpace(space.valuation, space.elements, space.metric.T)


def symmetrize(space: VSpace) -> ApproximationSpace:
    """Tensor the metric with its transpose to force symmetry."""
    v = space.valuation
    sym = v.tensor_arr(space.metric, space.metric.T)
    return ApproximationSpace(v, space.elements, sym)


def yoneda(space: VSpace, x: str) -> VPredicate:
    """Represent an element by its metric row."""
    return VPredicate(space, space.metric[space.index(x)])


def predicate_closure(raw: Sequence[float], space: VSpace) -> VPredicate:
    """Smallest enriched predicate above a raw value vector.

    closure(x2) = join over x1 of raw(x1) (x) metric(x1, x2).
    """
    v = space.valuation
    vec = v.check_array(np.asarray(raw, dtype=float))
    if vec.shape != (len(space),):
        raise DimensionError("raw vector length does not match space")
    lifted = v.tensor_arr(vec[:, None], space.metric)
    return VPredicate(space, v.join_arr(lifted, axis=0))


def _compose_matrices(v: Valuation, a: np.ndarray,
                      b: np.ndarray) -> np.ndarray:
    """Sup-of-tensor matrix product; handles an empty middle axis."""
    if a.shape[1] == 0:
        return np.full((a.shape[0], b.shape[1]), v.bottom)
    stacked = v.tensor_arr(a[:, :, None], b[None, :, :])
    return v.join_arr(stacked, axis=1)


def compose(first: VRelation, second: VRelation) -> VRelation:
    """Relational composition (x, z) = join_y first(x, y) (x) second(y, z)."""
    require_same(first.valuation, second.valuation)
    if not first.target.same_elements(second.source):
        raise DimensionError("composition requires a shared middle space")
    matrix = _compose_matrices(first.valuation, first.matrix, second.matrix)
    return VRelation(first.source, second.target, matrix)


def residuate(sigma: VRelation, rho: VRelation) -> VRelation:
    """Right adjoint of composition along a shared source.

    (y, z) = meet_x (sigma(x, y) => rho(x, z)); the largest relation tau
    with compose(sigma, tau) below rho.
    """
    v = require_same(sigma.valuation, rho.valuation)
    if not sigma.source.same_elements(rho.source):
        raise DimensionError("residuation requires a shared source space")
    if sigma.matrix.shape[0] == 0:
        matrix = np.full((len(sigma.target), len(rho.target)), v.top)
    else:
        stacked = v.implies_arr(sigma.matrix[:, :, None],
                                rho.matrix[:, None, :])
        matrix = v.meet_arr(stacked, axis=0)
    return VRelation(sigma.target, rho.target, matrix)


def metric_relation(space: VSpace) -> VRelation:
    """The metric itself as the identity relation on the space."""
    return VRelation(space, space, space.metric)


def relation_from_entries(source: VSpace, target: VSpace,
                          entries: Mapping[tuple[str, str], float]
                          | Callable[[str, str], float],
                          default: float | None = None) -> VRelation:
    """Build a relation matrix from a mapping or callable on element pairs."""
    v = require_same(source.valuation, target.valuation)
    if default is None:
        default = v.bottom
    matrix = np.full((len(source), len(target)), float(default))
    if callable(entries):
        for i, x in enumerate(source.elements):
            for j, y in enumerate(target.elements):
                matrix[i, j] = v.check(entries(x, y))
    else:
        for (x, y), val in entries.items():
            matrix[source.index(x), target.index(y)] = v.check(val)
    return VRelation(source, target, matrix)


def lift_map_lower(mapping: Mapping[str, str], source: VSpace,
                   target: VSpace) -> VRelation:
    """Graph a measure-preserving map as a relation source -> target.

    Entry (x, y) is the target distance from the image of x to y.
    """
    bad = check_vmap(mapping, source, target)
    require_valid(bad, "measure-preserving map")
    rows = [target.metric[target.index(mapping[x])]
            for x in source.elements]
    return VRelation(source, target, np.array(rows))


def lift_map_upper(mapping: Mapping[str, str], source: VSpace,
                   target: VSpace) -> VRelation:
    """The adjoint graph, oriented target -> source."""
    bad = check_vmap(mapping, source, target)
    require_valid(bad, "measure-preserving map")
    cols = [target.metric[:, target.index(mapping[x])]
            for x in source.elements]
    return VRelation(target, source, np.array(cols).T)


def power_metric(p: VPredicate, q: VPredicate) -> float:
    """Distance in the power space: meet_x (p(x) => q(x))."""
    v = require_same(p.valuation, q.valuation)
    if not p.space.same_elements(q.space):
        raise DimensionError("power metric requires one common space")
    return float(v.meet_arr(v.implies_arr(p.values, q.values), axis=0))


def lower_approx(p: VPredicate, space: ApproximationSpace) -> VPredicate:
    """Largest definable predicate below p: meet_y (metric(x,y) => p(y))."""
    _check_approx_args(p, space)
    v = space.valuation
    stacked = v.implies_arr(space.metric, p.values[None, :])
    return VPredicate(space, v.meet_arr(stacked, axis=1))


def upper_approx(p: VPredicate, space: ApproximationSpace) -> VPredicate:
    """Smallest definable predicate above p: join_y metric(x,y) (x) p(y)."""
    _check_approx_args(p, space)
    v = space.valuation
    stacked = v.tensor_arr(space.metric, p.values[None, :])
    return VPredicate(space, v.join_arr(stacked, axis=1))


def _check_approx_args(p: VPredicate, space: VSpace) -> None:
    require_same(p.valuation, space.valuation)
    if not p.space.same_elements(space):
        raise DimensionError("predicate space does not match")
    if not np.array_equal(space.metric, space.metric.T):
        raise DimensionError(
            "approximation operators need a symmetric metric")
