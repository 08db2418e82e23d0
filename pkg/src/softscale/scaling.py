"""The scaling process: object metadata through scales into facets.

A description function records one typed datum per object (or a null).
Simple scaling reads each object's grade for every term straight off an
enriched scale; composite scaling pushes a facet through a membership
relation by residuation, grading aggregates by their worst member.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Mapping, Sequence

import numpy as np

from .errors import (DimensionError, UnknownElementError,
                     ValuationMismatchError)
from .queries import (Datatype, DateType, NaturalType, Query, QueryTypeError,
                      StringType, evaluate)
from .scales import EnrichedScale, ScaleError
from .spaces import Facet, VRelation, VSpace, opposite, residuate
from .valuation import require_same


@dataclass(frozen=True, eq=False)
class DescriptionFunction:
    """One metadata column: a typed, possibly partial map over objects."""

    name: str
    category: str
    datatype: Datatype
    objects: tuple[str, ...]
    values: Mapping[str, object]  # None marks a missing datum

    def __post_init__(self):
        objects = tuple(self.objects)
        if len(set(objects)) != len(objects):
            raise DimensionError(
                f"description function {self.name!r} repeats object ids")
        if set(self.values) != set(objects):
            raise DimensionError(
                f"description function {self.name!r} values do not line "
                f"up with its objects")
        for g, d in self.values.items():
            if d is not None:
                _check_datum(self.datatype, d, self.name, g)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "values", dict(self.values))

    def value(self, g: str):
        try:
            return self.values[g]
        except KeyError:
            raise UnknownElementError(f"unknown object {g!r}") from None


def _check_datum(datatype: Datatype, d, fn_name: str, g: str) -> None:
    if isinstance(datatype, NaturalType):
        ok = isinstance(d, int) and not isinstance(d, bool) and d >= 0
    elif isinstance(datatype, DateType):
        ok = isinstance(d, date)
    elif isinstance(datatype, StringType):
        ok = isinstance(d, str) and (datatype.values is None
                                     or d in datatype.values)
    else:
        ok = False
    if not ok:
        raise QueryTypeError(
            f"datum {d!r} for object {g!r} does not inhabit the "
            f"{datatype.name} datatype of {fn_name!r}")


def evaluate_query(q: Query, d) -> float:
    """Boolean truth of a query on one datum, as a valuation value."""
    return 1.0 if evaluate(q, d) else 0.0


def simple_scaling(phi: DescriptionFunction, s: EnrichedScale,
                   object_space: VSpace | None = None) -> Facet:
    """Apply an enriched scale to a description function.

    Each object's row is the scale column of its datum; objects with a
    null datum get an all-bottom row and so land at the lattice top.
    Datum identifiers are matched by str() against the data space.
    """
    v = s.valuation
    if object_space is None:
        object_space = VSpace.discrete(v, phi.objects)
    else:
        require_same(object_space.valuation, v)
        if object_space.elements != phi.objects:
            raise DimensionError("object space does not list the "
                                 "description function's objects")
    matrix = np.full((len(phi.objects), len(s.terms)), v.bottom)
    for i, g in enumerate(phi.objects):
        d = phi.values[g]
        if d is None:
            continue
        try:
            j = s.data_space.index(str(d))
        except UnknownElementError:
            raise UnknownElementError(
                f"datum {d!r} of object {g!r} is outside the scale's "
                f"data space") from None
        matrix[i] = s.sigma.matrix[:, j]
    return Facet(object_space, opposite(s.term_space), matrix)


def object_concept_assignments(f: Facet) -> dict[str, frozenset[str]]:
    """Each object's concept label: its full attribute row.

    In a boolean facet the row is exactly the intent of the object's
    concept, hence the node the object is annotated on.
    """
    if not f.is_boolean():
        raise ValuationMismatchError(
            "object concept assignment needs a boolean facet, got "
            f"{f.valuation.kind}")
    inc = f.matrix >= 0.5
    return {g: frozenset(m for m, keep in zip(f.attributes, inc[i])
                         if keep)
            for i, g in enumerate(f.objects)}


def composite_scaling(psi: VRelation, inner: Facet) -> Facet:
    """Scale aggregate objects through a membership relation.

    psi relates base objects to aggregates; the result grades an
    aggregate at a term by the infimum over members of "membership
    implies the member's grade" (an empty aggregate is graded top).
    """
    if not psi.source.same_elements(inner.source):
        raise DimensionError(
            "membership relation is not over the facet's objects")
    res = residuate(psi, inner)
    return Facet(res.source, res.target, res.matrix)


def facet_apposition(facets: Sequence[Facet]) -> Facet:
    """Combine facets over one object set; attribute sets stay disjoint.

    The combined attribute space is the disjoint sum (cross-distances
    bottom), so the facets sit side by side in one context.
    """
    if not facets:
        raise DimensionError("nothing to combine")
    first = facets[0]
    v = first.valuation
    for f in facets[1:]:
        require_same(v, f.valuation)
        if not f.source.same_elements(first.source):
            raise DimensionError(
                "facets must share one object space to combine")
    names: list[str] = []
    for f in facets:
        names.extend(f.attributes)
    if len(set(names)) != len(names):
        dup = sorted({m for m in names if names.count(m) > 1})
        raise ScaleError(
            f"attribute names collide across facets: {', '.join(dup)}")
    total = len(names)
    metric = np.full((total, total), v.bottom)
    offset = 0
    for f in facets:
        k = len(f.attributes)
        metric[offset:offset + k, offset:offset + k] = f.target.metric
        offset += k
    attr_space = VSpace(v, tuple(names), metric)
    matrix = np.hstack([f.matrix for f in facets])
    return Facet(first.source, attr_space, matrix)
