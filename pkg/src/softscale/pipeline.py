"""Wiring from parsed documents to facets and a browsable lattice.

The boolean pipeline is the default; fuzzy and real valuations embed
the crisp query results into the wider carrier (true maps to the unit,
false to the bottom), so the same documents drive every valuation.
"""

from __future__ import annotations

from datetime import date
from typing import Mapping, Sequence

import numpy as np

from .lattice import ConceptLattice, build_lattice
from .markup import CollectionDoc, MarkupError, OntologyDoc
from .queries import functions_used
from .scales import (ConcreteScale, EnrichedScale, bind_queries,
                     make_enriched_scale, term_metric)
from .scaling import (DescriptionFunction, evaluate_query,
                      facet_apposition, simple_scaling)
from .spaces import Facet, VSpace
from .valuation import BOOLEAN, Valuation, valuation as valuation_by_kind


def concrete_scales(onto: OntologyDoc, coll: CollectionDoc,
                    reference: date | None = None) \
        -> list[tuple[ConcreteScale, str]]:
    """Bind the collection's queries scale by scale.

    Returns (scale, description function name) pairs in first-use
    order.  Every scale must draw on a single description function,
    since scaling reads one datum per object.
    """
    order: list[str] = []
    grouped: dict[str, dict[str, object]] = {}
    for b in coll.attributes:
        if b.scale not in grouped:
            grouped[b.scale] = {}
            order.append(b.scale)
        grouped[b.scale][b.term] = b.query
    out = []
    for scale_name in order:
        assignment = grouped[scale_name]
        fns = set()
        for q in assignment.values():
            fns |= functions_used(q)
        if len(fns) != 1:
            raise MarkupError(
                f"scale {scale_name!r} must use exactly one description "
                f"function, found: {', '.join(sorted(fns)) or 'none'}")
        fn_name = fns.pop()
        domain = onto.schema(fn_name).datatype()
        cs = bind_queries(onto.scale(scale_name), assignment, domain,
                          reference)
        out.append((cs, fn_name))
    return out


def _embed_crisp(matrix: np.ndarray, v: Valuation) -> np.ndarray:
    """Rewrite a boolean 0/1 matrix into the target carrier."""
    if v.kind == "real":
        return np.where(matrix >= 0.5, 0.0, np.inf)
    return np.asarray(matrix, dtype=float)


def enrich_over_observed(cs: ConcreteScale, phi: DescriptionFunction,
                         v: Valuation = BOOLEAN) -> EnrichedScale:
    """Crisp enrichment over exactly the datums the dataset mentions.

    Keeps the data space finite without guessing a domain bound; datum
    identifiers are the str() of the sorted observed values.
    """
    observed = sorted({d for d in phi.values.values() if d is not None})
    ids = tuple(str(d) for d in observed)
    by_id = dict(zip(ids, observed))
    data_space = VSpace.discrete(v, ids)
    crisp = term_metric(cs.abstract)
    term_space = VSpace(v, crisp.elements, _embed_crisp(crisp.metric, v))
    queries = {m: cs.query(m) for m in cs.abstract.terms}

    def entry(m: str, d: str) -> float:
        hit = evaluate_query(queries[m], by_id[d]) >= 0.5
        return v.unit if hit else v.bottom

    return make_enriched_scale(term_space, data_space, entry)


def scale_facets(onto: OntologyDoc, coll: CollectionDoc,
                 functions: Sequence[DescriptionFunction],
                 kind: str = "boolean",
                 reference: date | None = None) -> list[Facet]:
    """One facet per scale in the collection, all over one object list."""
    v = valuation_by_kind(kind)
    by_name: Mapping[str, DescriptionFunction] = {f.name: f
                                                  for f in functions}
    facets = []
    for cs, fn_name in concrete_scales(onto, coll, reference):
        if fn_name not in by_name:
            raise MarkupError(
                f"dataset has no column for description function "
                f"{fn_name!r}")
        phi = by_name[fn_name]
        facets.append(simple_scaling(phi, enrich_over_observed(cs, phi,
                                                               v)))
    if not facets:
        raise MarkupError("collection binds no attributes")
    return facets


def build_browse_space(onto: OntologyDoc, coll: CollectionDoc,
                       functions: Sequence[DescriptionFunction],
                       reference: date | None = None) \
        -> tuple[Facet, ConceptLattice]:
    """The full crisp pipeline: documents to combined facet to lattice."""
    facets = scale_facets(onto, coll, functions, "boolean", reference)
    combined = facet_apposition(facets)
    return combined, build_lattice(combined)
