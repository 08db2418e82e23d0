"""Shared fixtures: the Age scale walkthrough in all its forms."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from softscale.lattice import ConceptLattice, build_lattice
from softscale.queries import Comparison, NaturalType
from softscale.scales import (AbstractScale, ConcreteScale, biordinal_scale,
                              bind_queries, scale_context)
from softscale.scaling import DescriptionFunction, simple_scaling
from softscale.spaces import Facet
from softscale.pipeline import enrich_over_observed

FIXTURES = Path(__file__).parent / "fixtures"

# filled by the acceptance tests; echoed after the run so the checklist
# is visible even with output capture on
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance checklist")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)

# Incidence of the Age scale's derived context, rows in lectic order,
# columns minor, young, working, retired, old.
AGE_INCIDENCE = np.array([
    [0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0],
    [0, 1, 1, 0, 0],
    [1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1],
], dtype=float)

PEOPLE_AGES: dict[str, int | None] = {
    "Adam": 21, "Betty": 50, "Chris": 66, "Dora": 88,
    "Eva": 17, "Fred": None, "George": 90, "Harry": 50,
}


@pytest.fixture(scope="session")
def age_scale() -> AbstractScale:
    return biordinal_scale("Age", ("minor", "young", "working"),
                           ("old", "retired"))


@pytest.fixture(scope="session")
def age_context(age_scale) -> Facet:
    return scale_context(age_scale)


@pytest.fixture(scope="session")
def age_assignment() -> dict[str, Comparison]:
    return {
        "minor": Comparison("age", "less-equal", 18),
        "young": Comparison("age", "less", 40),
        "working": Comparison("age", "less-equal", 65),
        "retired": Comparison("age", "greater", 65),
        "old": Comparison("age", "greater-equal", 80),
    }


@pytest.fixture(scope="session")
def age_concrete(age_scale, age_assignment) -> ConcreteScale:
    return bind_queries(age_scale, age_assignment, NaturalType())


@pytest.fixture(scope="session")
def age_description() -> DescriptionFunction:
    return DescriptionFunction("age", "Person", NaturalType(),
                               tuple(PEOPLE_AGES), dict(PEOPLE_AGES))


@pytest.fixture(scope="session")
def people_facet(age_concrete, age_description) -> Facet:
    enriched = enrich_over_observed(age_concrete, age_description)
    return simple_scaling(age_description, enriched)


@pytest.fixture(scope="session")
def people_lattice(people_facet) -> ConceptLattice:
    return build_lattice(people_facet)


@pytest.fixture(scope="session")
def ontology_path() -> Path:
    return FIXTURES / "person.ckml.xml"


@pytest.fixture(scope="session")
def collection_path() -> Path:
    return FIXTURES / "people-attrs.ckml.xml"


@pytest.fixture(scope="session")
def dataset_path() -> Path:
    return FIXTURES / "people.csv"


def fuzzy_age_memberships() -> dict[str, callable]:
    """Graded membership curves for the Age terms.

    Piecewise linear; each more general term dominates the terms that
    entail it, which is the closure condition an enriched scale needs.
    """
    def ramp_down(d: float, one_until: float, zero_at: float) -> float:
        if d <= one_until:
            return 1.0
        if d >= zero_at:
            return 0.0
        return (zero_at - d) / (zero_at - one_until)

    def ramp_up(d: float, zero_until: float, one_at: float) -> float:
        return ramp_down(-d, -one_at, -zero_until)

    return {
        "minor": lambda d: ramp_down(d, 16, 20),
        "young": lambda d: ramp_down(d, 20, 40),
        "working": lambda d: ramp_down(d, 60, 70),
        "retired": lambda d: ramp_up(d, 60, 65),
        "old": lambda d: ramp_up(d, 70, 85),
    }
