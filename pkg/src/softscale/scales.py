"""Conceptual scales.

An abstract scale is a set of attribute terms plus an implication basis;
binding each term to a logical query gives a concrete scale, and pairing
a term space with a graded term-by-datum relation gives an enriched
scale.  The implication engine (closure, entailment, the induced formal
context and term order) lives here, together with the standard scale
constructors and apposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from datetime import date
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import SoftscaleError, UnknownElementError
from .queries import (And, Datatype, DateType, IntSet, NaturalType, Not,
                      Query, StringType, check_types, denotation,
                      resolve_dates)
from .spaces import Facet, VRelation, VSpace, opposite
from .valuation import BOOLEAN, Valuation, require_same


class ScaleError(SoftscaleError, ValueError):
    """A scale definition is malformed (duplicate or undeclared terms)."""


class ConstraintViolationError(SoftscaleError, ValueError):
    """A scale's constraints fail; carries the list of violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(x) for x in self.violations)
        super().__init__(f"{len(self.violations)} constraint "
                         f"violation(s): {lines}")


class _Inconsistent:
    """Distinguished closure result: the premise is unsatisfiable."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INCONSISTENT"


INCONSISTENT = _Inconsistent()


@dataclass(frozen=True)
class Implication:
    """premise => conclusion over term names; empty conclusion means
    the premise terms are jointly unsatisfiable."""

    premise: frozenset[str]
    conclusion: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "premise", frozenset(self.premise))
        object.__setattr__(self, "conclusion", frozenset(self.conclusion))

    @property
    def is_incompatibility(self) -> bool:
        return not self.conclusion

    def __str__(self) -> str:
        lhs = " & ".join(sorted(self.premise)) if self.premise else "(top)"
        if not self.conclusion:
            return f"{lhs} => (bottom)"
        return f"{lhs} => {' & '.join(sorted(self.conclusion))}"


@dataclass(frozen=True)
class AbstractScale:
    """Named term list with an implication basis over those terms."""

    name: str
    terms: tuple[str, ...]
    basis: tuple[Implication, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        basis = tuple(self.basis)
        if len(set(terms)) != len(terms):
            raise ScaleError(f"scale {self.name!r} declares duplicate terms")
        declared = set(terms)
        for imp in basis:
            stray = (imp.premise | imp.conclusion) - declared
            if stray:
                raise ScaleError(
                    f"scale {self.name!r} implication {imp} references "
                    f"undeclared term(s): {', '.join(sorted(stray))}")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "basis", basis)

    @property
    def term_set(self) -> frozenset[str]:
        return frozenset(self.terms)


# ---------------------------------------------------------------------------
# implication engine


def implication_closure(scale: AbstractScale, premise) -> frozenset[str] \
        | _Inconsistent:
    """Smallest superset of the premise closed under the basis.

    Returns INCONSISTENT as soon as an incompatibility fires.  The
    closure realizes the transitive, projective, and additive inference
    rules at once: a fixpoint under "premise satisfied, add conclusion".
    """
    current = set(premise)
    stray = current - scale.term_set
    if stray:
        raise UnknownElementError(
            f"unknown term(s): {', '.join(sorted(stray))}")
    changed = True
    while changed:
        changed = False
        for imp in scale.basis:
            if imp.premise <= current:
                if not imp.conclusion:
                    return INCONSISTENT
                if not imp.conclusion <= current:
                    current |= imp.conclusion
                    changed = True
    return frozenset(current)


def follows(scale: AbstractScale, imp: Implication) -> bool:
    """Does the basis entail the implication?

    An unsatisfiable premise entails everything; an incompatibility
    follows only from an unsatisfiable premise.
    """
    closed = implication_closure(scale, imp.premise)
    if closed is INCONSISTENT:
        return True
    if not imp.conclusion:
        return False
    return imp.conclusion <= closed


def closed_term_sets(scale: AbstractScale) -> list[frozenset[str]]:
    """All consistent closed term sets plus the full set, in lectic order.

    Enumerates fixpoints of the closure that sends unsatisfiable sets to
    the full term set, walking subsets in the lectic order induced by
    term declaration order.
    """
    terms = scale.terms
    n = len(terms)
    idx = {t: i for i, t in enumerate(terms)}
    full = scale.term_set

    def clo(subset: frozenset[str]) -> frozenset[str]:
        closed = implication_closure(scale, subset)
        return full if closed is INCONSISTENT else closed

    out = [clo(frozenset())]
    current = out[0]
    while current != full:
        for i in reversed(range(n)):
            if terms[i] in current:
                continue
            head = frozenset(t for t in current if idx[t] < i)
            candidate = clo(head | {terms[i]})
            if {t for t in candidate if idx[t] < i} == head:
                current = candidate
                out.append(current)
                break
        else:  # the full set is always reachable, so this cannot happen
            raise AssertionError("closure enumeration failed to advance")
    return out


def scale_context(scale: AbstractScale) -> Facet:
    """The scale's one-valued formal context.

    Objects are the closed term sets (named "0", "1", ... in lectic
    order, the unsatisfiable full set last); incidence is membership.
    The attribute space carries the entailment order so the rows, being
    up-closed, satisfy bimodule closure.
    """
    rows = closed_term_sets(scale)
    objects = VSpace.discrete(BOOLEAN, tuple(str(i)
                                             for i in range(len(rows))))
    matrix = np.array([[1.0 if t in row else 0.0 for t in scale.terms]
                       for row in rows])
    return Facet(objects, opposite(term_metric(scale)), matrix)


def term_metric(scale: AbstractScale) -> VSpace:
    """Boolean term space: metric(m1, m2) = 1 iff m2 entails m1.

    The more specific term sits below, so the metric rows read "all the
    terms this one generalizes".
    """
    n = len(scale.terms)
    matrix = np.zeros((n, n))
    for j, m2 in enumerate(scale.terms):
        closed = implication_closure(scale, frozenset({m2}))
        reach = scale.term_set if closed is INCONSISTENT else closed
        for i, m1 in enumerate(scale.terms):
            matrix[i, j] = 1.0 if m1 in reach else 0.0
    return VSpace(BOOLEAN, scale.terms, matrix)


# ---------------------------------------------------------------------------
# standard scale shapes


def nominal_scale(name: str, values: Sequence[str]) -> AbstractScale:
    """Pairwise-incompatible terms: a partition of the value range."""
    terms = tuple(values)
    if not terms:
        raise ScaleError("a scale needs at least one term")
    basis = tuple(Implication(frozenset({a, b}), frozenset())
                  for a, b in itertools.combinations(terms, 2))
    return AbstractScale(name, terms, basis)


def ordinal_scale(name: str, chain: Sequence[str]) -> AbstractScale:
    """A single chain: each term implies the next (more general) one."""
    terms = tuple(chain)
    if not terms:
        raise ScaleError("a scale needs at least one term")
    basis = tuple(Implication(frozenset({a}), frozenset({b}))
                  for a, b in zip(terms, terms[1:]))
    return AbstractScale(name, terms, basis)


def biordinal_scale(name: str, low_chain: Sequence[str],
                    high_chain: Sequence[str]) -> AbstractScale:
    """Two chains whose most general (last) terms are incompatible.

    Term declaration order follows the printed convention for a split
    value range: the low chain as given, then the high chain reversed
    (ascending thresholds).
    """
    low = tuple(low_chain)
    high = tuple(high_chain)
    if not low or not high:
        raise ScaleError("a biordinal scale needs two nonempty chains")
    basis = tuple(Implication(frozenset({a}), frozenset({b}))
                  for a, b in zip(low, low[1:]))
    basis += tuple(Implication(frozenset({a}), frozenset({b}))
                   for a, b in zip(high, high[1:]))
    basis += (Implication(frozenset({low[-1], high[-1]}), frozenset()),)
    return AbstractScale(name, low + tuple(reversed(high)), basis)


def interordinal_scale(name: str, values: Sequence) -> AbstractScale:
    """A chain of "<=v" terms plus the reversed chain of ">=v" terms."""
    vals = list(values)
    if not vals:
        raise ScaleError("a scale needs at least one term")
    le = [f"<={v}" for v in vals]
    ge = [f">={v}" for v in vals]
    basis = tuple(Implication(frozenset({a}), frozenset({b}))
                  for a, b in zip(le, le[1:]))
    basis += tuple(Implication(frozenset({ge[i + 1]}), frozenset({ge[i]}))
                   for i in range(len(ge) - 1))
    return AbstractScale(name, tuple(le + ge), basis)


def build_standard_scale(kind: str, params, name: str | None = None) \
        -> AbstractScale:
    """Dispatch on the standard scale taxonomy.

    params: term list for nominal/ordinal, a (low chain, high chain)
    pair for biordinal, a value list for interordinal.
    """
    label = name if name is not None else kind
    if kind == "nominal":
        return nominal_scale(label, params)
    if kind == "ordinal":
        return ordinal_scale(label, params)
    if kind == "biordinal":
        low, high = params
        return biordinal_scale(label, low, high)
    if kind == "interordinal":
        return interordinal_scale(label, params)
    raise ScaleError(f"unknown standard scale kind {kind!r}")


# ---------------------------------------------------------------------------
# concrete scales: queries bound to terms


@dataclass(frozen=True)
class ConstraintViolation:
    """One failed implicational constraint, with a witnessing datum."""

    implication: Implication
    term: str | None  # conclusion term not covered; None for incompatibility
    witness: object

    def __str__(self) -> str:
        if self.term is None:
            return (f"[{self.implication}] premise queries are jointly "
                    f"satisfiable, e.g. by {self.witness!r}")
        return (f"[{self.implication}] datum {self.witness!r} satisfies "
                f"the premise but not {self.term!r}")


@dataclass(frozen=True, eq=False)
class ConcreteScale:
    """An abstract scale whose terms are bound to typed queries."""

    abstract: AbstractScale
    assignment: Mapping[str, Query]
    domain: Datatype
    reference: date | None = None

    def __post_init__(self):
        bound = set(self.assignment)
        declared = self.abstract.term_set
        if bound != declared:
            missing = ", ".join(sorted(declared - bound))
            extra = ", ".join(sorted(bound - declared))
            detail = []
            if missing:
                detail.append(f"unbound terms: {missing}")
            if extra:
                detail.append(f"bindings for undeclared terms: {extra}")
            raise ScaleError("; ".join(detail))
        object.__setattr__(self, "assignment", dict(self.assignment))

    @property
    def name(self) -> str:
        return self.abstract.name

    def query(self, term: str) -> Query:
        """The term's query, relative dates resolved if a reference is set."""
        try:
            q = self.assignment[term]
        except KeyError:
            raise UnknownElementError(f"unknown term {term!r}") from None
        if self.reference is not None:
            q = resolve_dates(q, self.reference)
        return q


def _domain_floor(domain: Datatype) -> int:
    return 0 if isinstance(domain, NaturalType) else date.min.toordinal()


def check_assignment(scale: AbstractScale,
                     assignment: Mapping[str, Query], domain: Datatype,
                     reference: date | None = None) \
        -> list[ConstraintViolation]:
    """Check every basis implication extensionally over the domain.

    Numeric and date queries are compared symbolically through their
    interval denotations; string queries by enumerating the declared
    value set.  Returns one violation per uncovered conclusion term (or
    per satisfiable incompatibility), each with a witnessing datum.
    """
    bound = set(assignment)
    declared = scale.term_set
    if bound != declared:
        raise ScaleError(
            f"assignment terms {sorted(bound)} do not match the scale's "
            f"terms {sorted(declared)}")
    for q in assignment.values():
        check_types(q, domain)

    dens = {t: denotation(q, domain, reference)
            for t, q in assignment.items()}
    if isinstance(domain, StringType):
        universe = frozenset(domain.values)

        def meet_all(ts):
            out = universe
            for t in ts:
                out = out & dens[t]
            return out

        def witness_in(s):
            return min(s)

        def uncovered(prem, t):
            return prem - dens[t]
    else:
        floor = _domain_floor(domain)
        everything = IntSet.from_range(floor, None)

        def meet_all(ts):
            out = everything
            for t in ts:
                out = out.intersect(dens[t])
            return out

        def witness_in(s):
            lo, _ = s.ranges[0]
            return date.fromordinal(lo) if isinstance(domain, DateType) \
                else lo

        def uncovered(prem, t):
            return prem.intersect(dens[t].complement(floor))

    violations = []
    for imp in scale.basis:
        premise_den = meet_all(imp.premise)
        if imp.is_incompatibility:
            if not _empty(premise_den):
                violations.append(ConstraintViolation(
                    imp, None, witness_in(premise_den)))
            continue
        for t in sorted(imp.conclusion):
            gap = uncovered(premise_den, t)
            if not _empty(gap):
                violations.append(ConstraintViolation(
                    imp, t, witness_in(gap)))
    return violations


def _empty(den) -> bool:
    return den.is_empty() if isinstance(den, IntSet) else not den


def bind_queries(scale: AbstractScale, assignment: Mapping[str, Query],
                 domain: Datatype,
                 reference: date | None = None) -> ConcreteScale:
    """Bind queries to terms, insisting the constraints hold."""
    violations = check_assignment(scale, assignment, domain, reference)
    if violations:
        raise ConstraintViolationError(violations)
    return ConcreteScale(scale, dict(assignment), domain, reference)


def contingents(cs: ConcreteScale) -> dict[str, Query]:
    """Distinguishing-characteristics query for each term.

    A term's contingent is its own query minus (conjoined negations of)
    the queries of its immediate predecessors in the entailment order.
    """
    scale = cs.abstract
    strictly_below: dict[str, set[str]] = {}
    for n in scale.terms:
        strictly_below[n] = set()
        for c in scale.terms:
            if c == n:
                continue
            if follows(scale, Implication(frozenset({c}), frozenset({n}))) \
                    and not follows(scale, Implication(frozenset({n}),
                                                       frozenset({c}))):
                strictly_below[n].add(c)
    order = {t: i for i, t in enumerate(scale.terms)}
    out = {}
    for n in scale.terms:
        children = [c for c in strictly_below[n]
                    if not any(c in strictly_below[d]
                               for d in strictly_below[n])]
        children.sort(key=order.__getitem__)
        phi = cs.assignment[n]
        if children:
            out[n] = And((phi,) + tuple(Not(cs.assignment[c])
                                        for c in children))
        else:
            out[n] = phi
    return out


# ---------------------------------------------------------------------------
# enriched scales


@dataclass(frozen=True, eq=False)
class ClosureViolation:
    """A graded entailment broken by the relation at one datum."""

    term: str
    via: str
    datum: str
    bound: float
    value: float

    def __str__(self) -> str:
        return (f"sigma({self.term}, {self.datum}) = {self.value:g} "
                f"falls below the {self.bound:g} forced through "
                f"{self.via!r}")


@dataclass(frozen=True, eq=False)
class EnrichedScale:
    """Term space, data space, and a closed graded relation between them."""

    term_space: VSpace
    data_space: VSpace
    sigma: VRelation

    def __post_init__(self):
        require_same(self.term_space.valuation, self.data_space.valuation)
        if not (self.sigma.source.same_elements(self.term_space)
                and self.sigma.target.same_elements(self.data_space)):
            raise ScaleError("relation does not connect the scale's "
                             "term and data spaces")

    @property
    def valuation(self) -> Valuation:
        return self.sigma.valuation

    @property
    def terms(self) -> tuple[str, ...]:
        return self.term_space.elements

    @property
    def datums(self) -> tuple[str, ...]:
        return self.data_space.elements

    def grade(self, term: str, datum: str) -> float:
        return self.sigma.value(term, datum)


def make_enriched_scale(term_space: VSpace, data_space: VSpace,
                        entries: Mapping[tuple[str, str], float]
                        | Callable[[str, str], float]) -> EnrichedScale:
    """Construct the graded relation and verify term-metric closure.

    Closure demands metric(m, m') (x) sigma(m', d) <= sigma(m, d) for
    every pair of terms and every datum: whatever a datum earns at a
    specific term it must keep at every generalization.  Violations are
    collected and raised, never repaired.
    """
    v = require_same(term_space.valuation, data_space.valuation)
    matrix = np.full((len(term_space), len(data_space)), v.bottom)
    if callable(entries):
        for i, m in enumerate(term_space.elements):
            for j, d in enumerate(data_space.elements):
                matrix[i, j] = v.check(entries(m, d))
    else:
        for (m, d), val in entries.items():
            matrix[term_space.index(m), data_space.index(d)] = v.check(val)

    lifted = v.tensor_arr(term_space.metric[:, :, None],
                          matrix[None, :, :])
    violations = []
    bad = ~v.leq_arr(lifted, matrix[:, None, :])
    for i, j, k in zip(*np.nonzero(bad)):
        violations.append(ClosureViolation(
            term_space.elements[i], term_space.elements[j],
            data_space.elements[k], float(lifted[i, j, k]),
            float(matrix[i, k])))
    if violations:
        raise ConstraintViolationError(violations)
    sigma = VRelation(term_space, data_space, matrix)
    return EnrichedScale(term_space, data_space, sigma)


def crisp_enriched_scale(cs: ConcreteScale,
                         domain_values: Sequence) -> EnrichedScale:
    """Boolean enrichment of a concrete scale over an enumerated domain.

    Datum identifiers are the str() of the domain values; the data
    metric is discrete.
    """
    from .scaling import evaluate_query

    term_space = term_metric(cs.abstract)
    values = list(domain_values)
    ids = tuple(str(d) for d in values)
    data_space = VSpace.discrete(BOOLEAN, ids)
    by_id = dict(zip(ids, values))
    queries = {m: cs.query(m) for m in cs.abstract.terms}

    def entry(m: str, d: str) -> float:
        return evaluate_query(queries[m], by_id[d])

    return make_enriched_scale(term_space, data_space, entry)


def apposition(s0: EnrichedScale, s1: EnrichedScale) -> EnrichedScale:
    """Combine two scales side by side.

    Terms form a disjoint sum (cross-distances are bottom: terms of
    different scales are unrelated); datums form pairs whose metric is
    the tensor of the halves; each term grades a pair through its own
    half alone.
    """
    v = require_same(s0.valuation, s1.valuation)
    dup = set(s0.terms) & set(s1.terms)
    if dup:
        raise ScaleError(
            f"term names collide across scales: {', '.join(sorted(dup))}")
    n0, n1 = len(s0.terms), len(s1.terms)
    term_matrix = np.full((n0 + n1, n0 + n1), v.bottom)
    term_matrix[:n0, :n0] = s0.term_space.metric
    term_matrix[n0:, n0:] = s1.term_space.metric
    term_space = VSpace(v, s0.terms + s1.terms, term_matrix)

    d0, d1 = len(s0.datums), len(s1.datums)
    pair_ids = tuple(f"({a},{b})"
                     for a, b in itertools.product(s0.datums, s1.datums))
    m0, m1 = s0.data_space.metric, s1.data_space.metric
    pair_metric = v.tensor_arr(m0[:, None, :, None],
                               m1[None, :, None, :]).reshape(d0 * d1,
                                                             d0 * d1)
    data_space = VSpace(v, pair_ids, pair_metric)

    top_block = np.repeat(s0.sigma.matrix, d1, axis=1)
    bottom_block = np.tile(s1.sigma.matrix, (1, d0))
    sigma = VRelation(term_space, data_space,
                      np.vstack([top_block, bottom_block]))
    return EnrichedScale(term_space, data_space, sigma)
