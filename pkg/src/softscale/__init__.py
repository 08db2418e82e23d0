"""softscale: soft conceptual scaling and lattice browsing.

Valuation-enriched spaces and relations, conceptual scales with
implication constraints, a scaling pipeline from object metadata to
facets and concept lattices, and an HTTP service for browsing them.
"""

from .errors import (CarrierError, DimensionError, SoftscaleError,
                     UnknownElementError, ValuationMismatchError)
from .lattice import (Concept, ConceptLattice, DuplicateNameError, MODES,
                      bookmark_view, build_lattice, classify_relation,
                      derive_attributes, derive_objects,
                      enriched_derive_extent, enriched_derive_intent,
                      enumerate_enriched_concepts, is_enriched_concept,
                      join, meet, similarity)
from .markup import (AttributeBinding, CollectionDoc, FunctionSchema,
                     MarkupError, OntologyDoc, ScaleDecl, facet_to_json,
                     lattice_to_dot, lattice_to_json, load_dataset,
                     parse_collection, parse_ontology, serialize,
                     space_from_json, space_to_json)
from .pipeline import (build_browse_space, concrete_scales,
                       enrich_over_observed, scale_facets)
from .queries import (And, Comparison, DateType, IntSet, NaturalType, Not,
                      Or, ORDERS, QueryTypeError, RelativeYears,
                      StringType, UnresolvedDateError, check_types,
                      denotation, evaluate, functions_used, resolve_dates)
from .scales import (AbstractScale, ClosureViolation, ConcreteScale,
                     ConstraintViolation, ConstraintViolationError,
                     EnrichedScale, Implication, INCONSISTENT, ScaleError,
                     apposition, bind_queries, biordinal_scale,
                     build_standard_scale, check_assignment,
                     closed_term_sets, contingents, crisp_enriched_scale,
                     follows, implication_closure, interordinal_scale,
                     make_enriched_scale, nominal_scale, ordinal_scale,
                     scale_context, term_metric)
from .scaling import (DescriptionFunction, composite_scaling,
                      evaluate_query, facet_apposition,
                      object_concept_assignments, simple_scaling)
from .spaces import (ApproximationSpace, Facet, Violation, VPredicate,
                     VRelation, VSpace, check_predicate, check_relation,
                     check_vmap, check_vspace, compose, lift_map_lower,
                     lift_map_upper, lower_approx, metric_relation,
                     opposite, power_metric, predicate_closure,
                     relation_from_entries, require_valid, residuate,
                     symmetrize, upper_approx, yoneda)
from .valuation import (BOOLEAN, BooleanValuation, EPSILON, FUZZY,
                        FuzzyValuation, INFINITY, REAL, RealValuation,
                        Valuation, valuation)

__version__ = "0.1.0"

__all__ = [
    "ApproximationSpace", "AbstractScale", "And", "AttributeBinding",
    "BOOLEAN", "BooleanValuation", "CarrierError", "ClosureViolation",
    "CollectionDoc", "Comparison", "Concept", "ConceptLattice",
    "ConcreteScale", "ConstraintViolation", "ConstraintViolationError",
    "DateType", "DescriptionFunction", "DimensionError",
    "DuplicateNameError", "EPSILON", "EnrichedScale", "FUZZY", "Facet",
    "FunctionSchema", "FuzzyValuation", "INCONSISTENT", "INFINITY",
    "Implication", "IntSet", "MODES", "MarkupError", "NaturalType",
    "Not", "ORDERS", "OntologyDoc", "Or", "QueryTypeError", "REAL",
    "RealValuation", "RelativeYears", "ScaleDecl", "ScaleError",
    "SoftscaleError", "StringType", "UnknownElementError",
    "UnresolvedDateError", "VPredicate", "VRelation", "VSpace",
    "Valuation", "ValuationMismatchError", "Violation", "apposition",
    "bind_queries", "biordinal_scale", "bookmark_view",
    "build_browse_space", "build_lattice", "build_standard_scale",
    "check_assignment", "check_predicate", "check_relation",
    "check_types", "check_vmap", "check_vspace", "classify_relation",
    "closed_term_sets", "compose", "composite_scaling",
    "concrete_scales", "contingents", "crisp_enriched_scale",
    "denotation", "derive_attributes", "derive_objects",
    "enrich_over_observed", "enriched_derive_extent",
    "enriched_derive_intent", "enumerate_enriched_concepts", "evaluate",
    "evaluate_query", "facet_apposition", "facet_to_json", "follows",
    "functions_used", "implication_closure", "interordinal_scale",
    "is_enriched_concept", "join", "lattice_to_dot", "lattice_to_json",
    "lift_map_lower", "lift_map_upper", "load_dataset", "lower_approx",
    "make_enriched_scale", "meet", "metric_relation", "nominal_scale",
    "object_concept_assignments", "opposite", "ordinal_scale",
    "parse_collection", "parse_ontology", "power_metric",
    "predicate_closure", "relation_from_entries", "require_valid",
    "residuate", "resolve_dates", "scale_context", "scale_facets",
    "serialize", "similarity", "simple_scaling", "space_from_json",
    "space_to_json", "symmetrize", "term_metric", "upper_approx",
    "valuation", "yoneda",
]
