"""Document I/O: the CKML subset, CSV datasets, JSON and DOT exports.

The XML grammar covers ontologies (categories, function schemata, and
scales with implication bases) and attribute collections (per-term
comparison queries).  Parsing is strict about the elements it knows and
silently skips the ones it does not; serialization is deterministic so
repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from datetime import date

import numpy as np

from .errors import SoftscaleError
from .lattice import ConceptLattice
from .queries import (And, Comparison, Datatype, DateType, NaturalType,
                      ORDERS, Query, RelativeYears, StringType)
from .scales import AbstractScale, EnrichedScale, Implication
from .scaling import DescriptionFunction
from .spaces import Facet, VPredicate, VRelation, VSpace
from .valuation import valuation as valuation_by_kind


class MarkupError(SoftscaleError, ValueError):
    """A document cannot be parsed or does not satisfy its invariants."""


_IMAGE_TYPES = ("Integer", "Natural", "Date", "String")
_RELATIVE_YEARS = re.compile(r"^-P(\d+)Y$")


@dataclass(frozen=True)
class FunctionSchema:
    """Declared description function: name, argument and image types."""

    name: str
    arg_type: str
    image_type: str
    values: tuple[str, ...] | None = None  # finite range for String

    def datatype(self) -> Datatype:
        if self.image_type in ("Integer", "Natural"):
            return NaturalType()
        if self.image_type == "Date":
            return DateType()
        return StringType(self.values)


@dataclass(frozen=True)
class ScaleDecl:
    category: str
    scale: AbstractScale


@dataclass(frozen=True)
class OntologyDoc:
    name: str
    version: str
    categories: tuple[str, ...]
    schemata: tuple[FunctionSchema, ...]
    scales: tuple[ScaleDecl, ...]

    def scale(self, name: str) -> AbstractScale:
        for decl in self.scales:
            if decl.scale.name == name:
                return decl.scale
        raise MarkupError(f"ontology {self.name!r} declares no scale "
                          f"named {name!r}")

    def schema(self, name: str) -> FunctionSchema:
        for s in self.schemata:
            if s.name == name:
                return s
        raise MarkupError(f"ontology {self.name!r} declares no function "
                          f"named {name!r}")


@dataclass(frozen=True)
class AttributeBinding:
    """One scale term bound to a query over a description function."""

    scale: str
    term: str
    variable: str
    category: str
    query: Query


@dataclass(frozen=True)
class CollectionDoc:
    kind: str
    scope: str
    uses_ontology: str
    uses_version: str
    attributes: tuple[AttributeBinding, ...]


# ---------------------------------------------------------------------------
# XML parsing


def _attr(el: ET.Element, name: str) -> str:
    value = el.get(name)
    if value is None:
        raise MarkupError(f"<{el.tag}> element is missing its "
                          f"{name} attribute")
    return value


def _parse_xml(text: str) -> ET.Element:
    try:
        return ET.fromstring(text)
    except ET.ParseError as exc:
        raise MarkupError(f"malformed XML: {exc}") from None


def parse_ontology(text: str) -> OntologyDoc:
    root = _parse_xml(text)
    if root.tag != "ONTOLOGY":
        raise MarkupError(f"expected an ONTOLOGY document, "
                          f"got <{root.tag}>")
    categories = tuple(_attr(c, "NAME") for c in root.findall("CATEGORY"))
    schemata = []
    for el in root.findall("FNSCHEMA"):
        image = _attr(el, "IMAGETYPE")
        if image not in _IMAGE_TYPES:
            raise MarkupError(f"unknown IMAGETYPE {image!r}; expected "
                              f"one of {_IMAGE_TYPES}")
        values = el.get("VALUES")
        schemata.append(FunctionSchema(
            _attr(el, "NAME"), _attr(el, "ARGTYPE"), image,
            tuple(values.split()) if values is not None else None))
    scales = []
    seen = set()
    for el in root.findall("SCALE"):
        name = _attr(el, "NAME")
        if name in seen:
            raise MarkupError(f"duplicate scale name {name!r}")
        seen.add(name)
        terms = tuple(_attr(t, "NAME") for t in el.findall("TERM"))
        basis = []
        for imp in el.findall("IMPLICATION"):
            if_el = imp.find("IF")
            if if_el is None:
                raise MarkupError(
                    f"IMPLICATION in scale {name!r} has no IF element")
            premise = frozenset(_attr(t, "NAME")
                                for t in if_el.findall("TERM"))
            if not premise:
                raise MarkupError(
                    f"IMPLICATION in scale {name!r} has an empty IF")
            then_el = imp.find("THEN")
            conclusion = frozenset(
                _attr(t, "NAME") for t in then_el.findall("TERM")) \
                if then_el is not None else frozenset()
            if then_el is not None and not conclusion:
                raise MarkupError(
                    f"IMPLICATION in scale {name!r} has an empty THEN")
            basis.append(Implication(premise, conclusion))
        # AbstractScale rejects duplicate or undeclared terms by name
        scales.append(ScaleDecl(_attr(el, "CATEGORY"),
                                AbstractScale(name, terms, tuple(basis))))
    return OntologyDoc(_attr(root, "NAME"), root.get("VERSION", ""),
                       categories, tuple(schemata), tuple(scales))


def _parse_constant(raw: str, datatype: Datatype):
    if isinstance(datatype, NaturalType):
        try:
            return int(raw)
        except ValueError:
            raise MarkupError(
                f"ARGUMENT VALUE {raw!r} is not an integer") from None
    if isinstance(datatype, DateType):
        rel = _RELATIVE_YEARS.match(raw)
        if rel:
            return RelativeYears(int(rel.group(1)))
        try:
            return date.fromisoformat(raw)
        except ValueError:
            raise MarkupError(
                f"ARGUMENT VALUE {raw!r} is neither an ISO date nor a "
                f"-P<n>Y offset") from None
    return raw


def parse_collection(text: str, onto: OntologyDoc) -> CollectionDoc:
    root = _parse_xml(text)
    if root.tag != "COLLECTION":
        raise MarkupError(f"expected a COLLECTION document, "
                          f"got <{root.tag}>")
    uses = root.find("USES")
    if uses is None:
        raise MarkupError("COLLECTION has no USES element")
    uses_name = _attr(uses, "ONTOLOGY")
    if uses_name != onto.name:
        raise MarkupError(f"collection uses ontology {uses_name!r} but "
                          f"{onto.name!r} was provided")
    bindings = []
    for el in root.findall("ATTRIBUTE"):
        scale_name = _attr(el, "SCALE")
        term = _attr(el, "KEY")
        scale = onto.scale(scale_name)
        if term not in scale.term_set:
            raise MarkupError(f"scale {scale_name!r} declares no term "
                              f"{term!r}")
        query_el = el.find("QUERY")
        if query_el is None:
            raise MarkupError(f"ATTRIBUTE {term!r} has no QUERY element")
        variable = _attr(query_el, "VARIABLE")
        category = _attr(query_el, "CATEGORY")
        comparisons = []
        for fn in query_el.findall("FN2REL"):
            fn_name = _attr(fn, "NAME")
            order = _attr(fn, "ORDER")
            if order not in ORDERS:
                raise MarkupError(f"unsupported ORDER keyword {order!r}; "
                                  f"expected one of {ORDERS}")
            datatype = onto.schema(fn_name).datatype()
            args = [_attr(a, "VALUE") for a in fn.findall("ARGUMENT")]
            if len(args) != 2:
                raise MarkupError(
                    f"FN2REL {fn_name!r} needs exactly two ARGUMENT "
                    f"elements, got {len(args)}")
            if args[0] == variable:
                constant_raw = args[1]
            elif args[1] == variable:
                constant_raw = args[0]
            else:
                raise MarkupError(
                    f"FN2REL {fn_name!r} never mentions the query "
                    f"variable {variable!r}")
            comparisons.append(Comparison(
                fn_name, order, _parse_constant(constant_raw, datatype)))
        if not comparisons:
            raise MarkupError(f"QUERY for {term!r} has no FN2REL element")
        query = comparisons[0] if len(comparisons) == 1 \
            else And(tuple(comparisons))
        bindings.append(AttributeBinding(scale_name, term, variable,
                                         category, query))
    return CollectionDoc(root.get("KIND", "attribute"),
                         root.get("SCOPE", ""), uses_name,
                         uses.get("VERSION", ""), tuple(bindings))


# ---------------------------------------------------------------------------
# XML serialization


def _xml_text(root: ET.Element) -> str:
    ET.indent(root, space="   ")
    return ET.tostring(root, encoding="unicode") + "\n"


def serialize_ontology(doc: OntologyDoc) -> str:
    root = ET.Element("ONTOLOGY", NAME=doc.name, VERSION=doc.version)
    for c in doc.categories:
        ET.SubElement(root, "CATEGORY", NAME=c)
    for s in doc.schemata:
        el = ET.SubElement(root, "FNSCHEMA", NAME=s.name,
                           ARGTYPE=s.arg_type, IMAGETYPE=s.image_type)
        if s.values is not None:
            el.set("VALUES", " ".join(s.values))
    for decl in doc.scales:
        el = ET.SubElement(root, "SCALE", CATEGORY=decl.category,
                           NAME=decl.scale.name)
        for t in decl.scale.terms:
            ET.SubElement(el, "TERM", NAME=t)
        for imp in decl.scale.basis:
            imp_el = ET.SubElement(el, "IMPLICATION")
            if_el = ET.SubElement(imp_el, "IF")
            for t in sorted(imp.premise):
                ET.SubElement(if_el, "TERM", NAME=t)
            if imp.conclusion:
                then_el = ET.SubElement(imp_el, "THEN")
                for t in sorted(imp.conclusion):
                    ET.SubElement(then_el, "TERM", NAME=t)
    return _xml_text(root)


def _constant_text(constant) -> str:
    if isinstance(constant, RelativeYears):
        return f"-P{constant.years}Y"
    if isinstance(constant, date):
        return constant.isoformat()
    return str(constant)


def serialize_collection(doc: CollectionDoc) -> str:
    root = ET.Element("COLLECTION", KIND=doc.kind, SCOPE=doc.scope)
    ET.SubElement(root, "USES", ONTOLOGY=doc.uses_ontology,
                  VERSION=doc.uses_version)
    for b in doc.attributes:
        attr_el = ET.SubElement(root, "ATTRIBUTE", SCALE=b.scale,
                                KEY=b.term)
        query_el = ET.SubElement(attr_el, "QUERY", VARIABLE=b.variable,
                                 CATEGORY=b.category)
        parts = b.query.parts if isinstance(b.query, And) else (b.query,)
        for comp in parts:
            if not isinstance(comp, Comparison):
                raise MarkupError(
                    "only conjunctions of comparisons can be written "
                    "to markup")
            fn = ET.SubElement(query_el, "FN2REL", NAME=comp.function,
                               ORDER=comp.order)
            ET.SubElement(fn, "ARGUMENT", VALUE=b.variable)
            ET.SubElement(fn, "ARGUMENT",
                          VALUE=_constant_text(comp.constant))
    return _xml_text(root)


def serialize(doc) -> str:
    """Single entry point over the document kinds."""
    if isinstance(doc, OntologyDoc):
        return serialize_ontology(doc)
    if isinstance(doc, CollectionDoc):
        return serialize_collection(doc)
    if isinstance(doc, ConceptLattice):
        return lattice_to_json(doc)
    raise MarkupError(f"cannot serialize {type(doc).__name__}")


# ---------------------------------------------------------------------------
# datasets


def load_dataset(text: str, onto: OntologyDoc) \
        -> list[DescriptionFunction]:
    """CSV with a header row: object id column, then one column per
    declared description function.  "?" or an empty cell is a null."""
    rows = [row for row in csv.reader(io.StringIO(text))
            if row and any(cell.strip() for cell in row)]
    if not rows:
        raise MarkupError("dataset has no header row")
    header = [cell.strip() for cell in rows[0]]
    schemata = [onto.schema(name) for name in header[1:]]
    objects = []
    seen = set()
    columns: list[dict[str, object]] = [{} for _ in schemata]
    for row in rows[1:]:
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise MarkupError(
                f"row {cells[:1]} has {len(cells)} cells, expected "
                f"{len(header)}")
        g = cells[0]
        if g in seen:
            raise MarkupError(f"duplicate object id {g!r}")
        seen.add(g)
        objects.append(g)
        for k, schema in enumerate(schemata):
            columns[k][g] = _parse_cell(cells[k + 1], schema)
    return [DescriptionFunction(schema.name, schema.arg_type,
                                schema.datatype(), tuple(objects),
                                columns[k])
            for k, schema in enumerate(schemata)]


def _parse_cell(cell: str, schema: FunctionSchema):
    if cell in ("", "?"):
        return None
    datatype = schema.datatype()
    if isinstance(datatype, NaturalType):
        try:
            return int(cell)
        except ValueError:
            raise MarkupError(f"non-numeric cell {cell!r} in numeric "
                              f"column {schema.name!r}") from None
    if isinstance(datatype, DateType):
        try:
            return date.fromisoformat(cell)
        except ValueError:
            raise MarkupError(f"cell {cell!r} in date column "
                              f"{schema.name!r} is not an ISO date") \
                from None
    return cell


# ---------------------------------------------------------------------------
# JSON mirrors


def _num(x: float):
    if math.isinf(x):
        return "inf"
    return round(float(x), 12)


def _matrix_json(matrix) -> list:
    return [[_num(x) for x in row] for row in matrix]


def space_to_json(space: VSpace) -> dict:
    return {"valuation": space.valuation.kind,
            "elements": list(space.elements),
            "metric": _matrix_json(space.metric)}


def space_from_json(data: dict) -> VSpace:
    v = valuation_by_kind(data["valuation"])
    n = len(data["elements"])
    cells = [math.inf if x == "inf" else float(x)
             for row in data["metric"] for x in row]
    metric = np.array(cells, dtype=float).reshape(n, n)
    return VSpace(v, tuple(data["elements"]), metric)


def relation_to_json(rel: VRelation) -> dict:
    return {"valuation": rel.valuation.kind,
            "source": space_to_json(rel.source),
            "target": space_to_json(rel.target),
            "matrix": _matrix_json(rel.matrix)}


def predicate_to_json(pred: VPredicate) -> dict:
    return {"valuation": pred.valuation.kind,
            "space": space_to_json(pred.space),
            "values": [_num(x) for x in pred.values]}


def facet_to_json(f: Facet) -> dict:
    data = relation_to_json(f)
    data["objects"] = list(f.objects)
    data["attributes"] = list(f.attributes)
    return data


def scale_to_json(scale: AbstractScale) -> dict:
    return {"name": scale.name,
            "terms": list(scale.terms),
            "basis": [{"if": sorted(imp.premise),
                       "then": sorted(imp.conclusion)}
                      for imp in scale.basis]}


def enriched_scale_to_json(s: EnrichedScale) -> dict:
    return {"termSpace": space_to_json(s.term_space),
            "dataSpace": space_to_json(s.data_space),
            "sigma": _matrix_json(s.sigma.matrix)}


def lattice_json_doc(lattice: ConceptLattice) -> dict:
    return {
        "concepts": [{"extent": sorted(c.extent),
                      "intent": sorted(c.intent)}
                     for c in lattice.concepts],
        "covers": [list(pair) for pair in lattice.covers],
        "objectLabels": {g: i
                         for g, i in sorted(lattice.object_labels.items())},
        "attributeLabels": {m: i for m, i
                            in sorted(lattice.attribute_labels.items())},
        "views": {name: i for name, i in sorted(lattice.views.items())},
    }


def lattice_to_json(lattice: ConceptLattice) -> str:
    return json.dumps(lattice_json_doc(lattice), indent=2,
                      sort_keys=True) + "\n"


def _dot_quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def lattice_to_dot(lattice: ConceptLattice) -> str:
    """Hasse diagram with contingent labels, top rendered uppermost."""
    lines = ["digraph lattice {",
             '   node [shape=box, style=rounded, fontname="Helvetica"];',
             "   edge [dir=none];"]
    for i in range(len(lattice.concepts)):
        attrs = " ".join(lattice.contingent_attributes(i))
        objs = " ".join(lattice.contingent_objects(i))
        # quote before joining so the line-break escape survives
        label = "\\n".join(_dot_quote(part)
                           for part in (attrs, objs) if part)
        lines.append(f'   n{i} [label="{label}"];')
    for low, up in lattice.covers:
        lines.append(f"   n{up} -> n{low};")
    lines.append("}")
    return "\n".join(lines) + "\n"
