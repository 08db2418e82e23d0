"""Concept lattices and the browsing algebra.

A boolean facet is a formal context; its concepts (extent/intent pairs
fixed under derivation) form a lattice that doubles as the state space
for interactive browsing: transitions are meets and joins, bookmarks
are named concepts, and every named element is classified relative to
the current concept.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (DimensionError, SoftscaleError, UnknownElementError,
                     ValuationMismatchError)
from .spaces import Facet, VPredicate
from .valuation import EPSILON

MODES = ("extensional", "intentional")

LABEL_EQUIVALENT = "Equivalent"
LABEL_INTENT = "Intent"
LABEL_EXTENT = "Extent"
LABEL_ANCESTOR = "Ancestor"
LABEL_DESCENDANT = "Descendant"
LABEL_SIMILAR = "Similar"


class DuplicateNameError(SoftscaleError, ValueError):
    """A view name is already taken."""


@dataclass(frozen=True)
class Concept:
    extent: frozenset[str]
    intent: frozenset[str]


def _require_boolean(ctx: Facet, what: str) -> None:
    if not ctx.is_boolean():
        raise ValuationMismatchError(f"{what} needs a boolean context, "
                                     f"got {ctx.valuation.kind}")


def derive_attributes(ctx: Facet, objs: Iterable[str]) -> frozenset[str]:
    """Attributes shared by every given object (all of them for none)."""
    _require_boolean(ctx, "derivation")
    rows = [ctx.source.index(g) for g in objs]
    inc = ctx.matrix >= 0.5
    mask = inc[rows].all(axis=0) if rows else \
        np.ones(len(ctx.attributes), dtype=bool)
    return frozenset(m for m, keep in zip(ctx.attributes, mask) if keep)


def derive_objects(ctx: Facet, attrs: Iterable[str]) -> frozenset[str]:
    """Objects carrying every given attribute."""
    _require_boolean(ctx, "derivation")
    cols = [ctx.target.index(m) for m in attrs]
    inc = ctx.matrix >= 0.5
    mask = inc[:, cols].all(axis=1) if cols else \
        np.ones(len(ctx.objects), dtype=bool)
    return frozenset(g for g, keep in zip(ctx.objects, mask) if keep)


# ---------------------------------------------------------------------------
# enriched derivation


def enriched_derive_intent(ctx: Facet, ext: VPredicate) -> VPredicate:
    """intent(m) = meet_g (ext(g) => incidence(g, m))."""
    v = ctx.valuation
    if not ext.space.same_elements(ctx.source):
        raise DimensionError("predicate is not over the object space")
    if len(ctx.objects) == 0:
        return VPredicate(ctx.target,
                          np.full(len(ctx.attributes), v.top))
    stacked = v.implies_arr(ext.values[:, None], ctx.matrix)
    return VPredicate(ctx.target, v.meet_arr(stacked, axis=0))


def enriched_derive_extent(ctx: Facet, intent: VPredicate) -> VPredicate:
    """extent(g) = meet_m (intent(m) => incidence(g, m))."""
    v = ctx.valuation
    if not intent.space.same_elements(ctx.target):
        raise DimensionError("predicate is not over the attribute space")
    if len(ctx.attributes) == 0:
        return VPredicate(ctx.source, np.full(len(ctx.objects), v.top))
    stacked = v.implies_arr(intent.values[None, :], ctx.matrix)
    return VPredicate(ctx.source, v.meet_arr(stacked, axis=1))


def is_enriched_concept(ctx: Facet, ext: VPredicate,
                        intent: VPredicate, tol: float = EPSILON) -> bool:
    """Fixpoint test: the pair derives back onto itself within tol."""
    back_int = enriched_derive_intent(ctx, ext)
    back_ext = enriched_derive_extent(ctx, intent)
    return bool(np.allclose(back_int.values, intent.values, atol=tol)
                and np.allclose(back_ext.values, ext.values, atol=tol))


def enumerate_enriched_concepts(ctx: Facet, grades: Sequence[float],
                                limit: int = 10 ** 6) \
        -> list[tuple[VPredicate, VPredicate]]:
    """All enriched concepts whose values stay in a finite grade set.

    Brute force over extent vectors; only sensible for small contexts
    and small grade sets (boolean, or fuzzy with declared grades).
    """
    v = ctx.valuation
    levels = sorted({v.check(g) for g in grades})
    n = len(ctx.objects)
    if len(levels) ** n > limit:
        raise DimensionError(
            f"{len(levels)}^{n} candidate extents exceed the limit")
    seen = set()
    out = []
    for combo in np.ndindex(*([len(levels)] * n)):
        raw = np.array([levels[i] for i in combo])
        intent = enriched_derive_intent(ctx, VPredicate(ctx.source, raw))
        ext = enriched_derive_extent(ctx, intent)
        key = tuple(np.round(ext.values, 9))
        if key in seen:
            continue
        seen.add(key)
        out.append((ext, enriched_derive_intent(ctx, ext)))
    return out


# ---------------------------------------------------------------------------
# lattice construction


@dataclass(frozen=True, eq=False)
class ConceptLattice:
    """All concepts of a boolean context, in lectic order of intents."""

    context: Facet
    concepts: tuple[Concept, ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper) index pairs
    object_labels: Mapping[str, int]  # object -> its concept's index
    attribute_labels: Mapping[str, int]  # attribute -> its concept's index
    views: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "object_labels",
                           dict(self.object_labels))
        object.__setattr__(self, "attribute_labels",
                           dict(self.attribute_labels))
        object.__setattr__(self, "views", dict(self.views))
        object.__setattr__(self, "_by_extent",
                           {c.extent: i
                            for i, c in enumerate(self.concepts)})
        object.__setattr__(self, "_by_intent",
                           {c.intent: i
                            for i, c in enumerate(self.concepts)})

    def __len__(self) -> int:
        return len(self.concepts)

    @property
    def top(self) -> Concept:
        return self.concepts[0]

    @property
    def bottom(self) -> Concept:
        return self.concepts[-1]

    def index(self, c: Concept) -> int:
        try:
            return self._by_extent[c.extent]
        except KeyError:
            raise UnknownElementError(
                "concept does not belong to this lattice") from None

    def leq(self, a: Concept, b: Concept) -> bool:
        self.index(a)
        self.index(b)
        return a.extent <= b.extent

    def concept_of_intent(self, intent: frozenset[str]) -> Concept:
        return self.concepts[self._by_intent[intent]]

    def element_concept(self, name: str) -> Concept:
        """Resolve a view, attribute, or object name (in that order)."""
        if name in self.views:
            return self.concepts[self.views[name]]
        if name in self.attribute_labels:
            return self.concepts[self.attribute_labels[name]]
        if name in self.object_labels:
            return self.concepts[self.object_labels[name]]
        raise UnknownElementError(f"unknown element {name!r}")

    def contingent_objects(self, i: int) -> tuple[str, ...]:
        """Objects labeled exactly at concept i, in declaration order."""
        return tuple(g for g in self.context.objects
                     if self.object_labels[g] == i)

    def contingent_attributes(self, i: int) -> tuple[str, ...]:
        return tuple(m for m in self.context.attributes
                     if self.attribute_labels[m] == i)


def build_lattice(ctx: Facet) -> ConceptLattice:
    """Enumerate all concepts in lectic order and wire the structure."""
    _require_boolean(ctx, "lattice construction")
    inc = ctx.matrix >= 0.5
    n_attrs = len(ctx.attributes)

    def clo(bits: np.ndarray) -> np.ndarray:
        having = inc[:, bits].all(axis=1)
        return inc[having].all(axis=0)

    intents = []
    current = clo(np.zeros(n_attrs, dtype=bool))
    intents.append(current)
    full = np.ones(n_attrs, dtype=bool)
    while not np.array_equal(current, full):
        for i in reversed(range(n_attrs)):
            if current[i]:
                continue
            head = current.copy()
            head[i:] = False
            head[i] = True
            candidate = clo(head)
            if np.array_equal(candidate[:i], head[:i]):
                current = candidate
                intents.append(current)
                break
        else:
            raise AssertionError("closure enumeration failed to advance")

    concepts = []
    for bits in intents:
        extent = frozenset(
            g for g, keep in zip(ctx.objects, inc[:, bits].all(axis=1))
            if keep)
        intent = frozenset(m for m, keep in zip(ctx.attributes, bits)
                           if keep)
        concepts.append(Concept(extent, intent))

    n = len(concepts)
    strict = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(concepts):
        for j, b in enumerate(concepts):
            strict[i, j] = i != j and a.extent < b.extent
    covers = []
    for i in range(n):
        for j in range(n):
            if strict[i, j] and not (strict[i] & strict[:, j]).any():
                covers.append((i, j))
    covers.sort()

    by_intent = {c.intent: k for k, c in enumerate(concepts)}
    by_extent = {c.extent: k for k, c in enumerate(concepts)}
    object_labels = {}
    for gi, g in enumerate(ctx.objects):
        row = frozenset(m for m, keep in zip(ctx.attributes, inc[gi])
                        if keep)
        object_labels[g] = by_intent[row]
    attribute_labels = {}
    for mj, m in enumerate(ctx.attributes):
        col = frozenset(g for g, keep in zip(ctx.objects, inc[:, mj])
                        if keep)
        attribute_labels[m] = by_extent[col]

    return ConceptLattice(ctx, tuple(concepts), tuple(covers),
                          object_labels, attribute_labels, {})


# ---------------------------------------------------------------------------
# browsing algebra


def meet(lattice: ConceptLattice, concepts: Sequence[Concept]) -> Concept:
    """Greatest concept below all given ones; top for an empty list."""
    extent = frozenset(lattice.context.objects)
    for c in concepts:
        lattice.index(c)
        extent &= c.extent
    return lattice.concepts[lattice._by_extent[extent]]


def join(lattice: ConceptLattice, concepts: Sequence[Concept]) -> Concept:
    """Least concept above all given ones; bottom for an empty list."""
    intent = frozenset(lattice.context.attributes)
    for c in concepts:
        lattice.index(c)
        intent &= c.intent
    return lattice.concepts[lattice._by_intent[intent]]


def similarity(lattice: ConceptLattice, a: Concept, b: Concept,
               mode: str = "extensional") -> int:
    """Extent cardinality of the meet (dually, intent size of the join)."""
    _check_mode(mode)
    if mode == "extensional":
        return len(meet(lattice, [a, b]).extent)
    return len(join(lattice, [a, b]).intent)


def classify_relation(lattice: ConceptLattice, current: Concept,
                      element: str, mode: str = "extensional") -> str:
    """Label a named element relative to the current concept.

    Objects report Extent when inside the current extent, attributes
    Intent when inside the current intent, views Equivalent at the
    current concept or Ancestor/Descendant by strict order (swapped in
    intentional mode); everything else is Similar, to be ranked by
    similarity.
    """
    _check_mode(mode)
    lattice.index(current)
    target = lattice.element_concept(element)
    if element in lattice.views:
        if target == current:
            return LABEL_EQUIVALENT
        strictly_above = current.extent < target.extent
        strictly_below = target.extent < current.extent
        if mode == "intentional":
            strictly_above, strictly_below = strictly_below, strictly_above
        if strictly_above:
            return LABEL_ANCESTOR
        if strictly_below:
            return LABEL_DESCENDANT
        return LABEL_SIMILAR
    if element in lattice.attribute_labels:
        return LABEL_INTENT if element in current.intent else LABEL_SIMILAR
    return LABEL_EXTENT if element in current.extent else LABEL_SIMILAR


def bookmark_view(lattice: ConceptLattice, c: Concept,
                  name: str) -> ConceptLattice:
    """A new lattice value with the concept registered under the name."""
    if not name:
        raise DuplicateNameError("view name must be nonempty")
    if name in lattice.views:
        raise DuplicateNameError(f"view name {name!r} is already taken")
    index = lattice.index(c)
    views = dict(lattice.views)
    views[name] = index
    return dataclasses.replace(lattice, views=views)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise UnknownElementError(
            f"unknown browsing mode {mode!r}; expected one of {MODES}")
