"""Command-line front end.

Subcommands: validate (parse and cross-check documents), scale (emit
scaled facets as JSON), lattice (emit the concept lattice as JSON or
Graphviz), serve (run the HTTP service).  Exit status 0 on success, 1
on a domain error, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from datetime import date
from pathlib import Path

from .errors import SoftscaleError
from .markup import (facet_to_json, lattice_to_dot, lattice_to_json,
                     load_dataset, parse_collection, parse_ontology)
from .pipeline import build_browse_space, scale_facets

log = logging.getLogger("softscale")

_VALUATIONS = ("boolean", "fuzzy", "real")


def _configure_logging() -> None:
    level_name = os.environ.get("SOFTSCALE_LOG", "warning").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _parse_reference(text: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError as exc:
        raise SoftscaleError(f"bad reference date {text!r}: {exc}") from None


def _load_documents(args: argparse.Namespace):
    onto = parse_ontology(Path(args.ontology).read_text(encoding="utf-8"))
    coll = parse_collection(
        Path(args.collection).read_text(encoding="utf-8"), onto)
    functions = load_dataset(
        Path(args.data).read_text(encoding="utf-8"), onto)
    return onto, coll, functions


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _add_document_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ontology", required=True,
                        help="ontology markup file")
    parser.add_argument("--collection", required=True,
                        help="collection markup file")
    parser.add_argument("--data", required=True,
                        help="object metadata as CSV")
    parser.add_argument("--reference-date", default=None, metavar="DATE",
                        help="anchor for relative dates (YYYY-MM-DD)")


def _cmd_validate(args: argparse.Namespace) -> int:
    onto, coll, functions = _load_documents(args)
    reference = (_parse_reference(args.reference_date)
                 if args.reference_date else None)
    scale_facets(onto, coll, functions, "boolean", reference)
    objects = functions[0].objects if functions else ()
    print(f"ok: ontology {onto.name!r} with {len(onto.scales)} scale(s), "
          f"{len(coll.attributes)} binding(s), {len(objects)} object(s)")
    return 0


def _cmd_scale(args: argparse.Namespace) -> int:
    onto, coll, functions = _load_documents(args)
    reference = (_parse_reference(args.reference_date)
                 if args.reference_date else None)
    facets = scale_facets(onto, coll, functions, args.valuation, reference)
    doc = {"valuation": args.valuation,
           "facets": [facet_to_json(f) for f in facets]}
    _write_output(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                  args.out)
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    onto, coll, functions = _load_documents(args)
    reference = (_parse_reference(args.reference_date)
                 if args.reference_date else None)
    _, lattice = build_browse_space(onto, coll, functions, reference)
    fmt = args.format
    if fmt is None:
        fmt = "dot" if args.out and args.out.endswith(".dot") else "json"
    if fmt == "dot":
        text = lattice_to_dot(lattice)
    else:
        text = lattice_to_json(lattice)
    _write_output(text, args.out)
    log.info("lattice with %d concepts written", len(lattice.concepts))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    reference = (_parse_reference(args.reference_date)
                 if args.reference_date else None)
    app = create_app(reference_date=reference)
    if args.ontology:
        if not (args.collection and args.data):
            raise SoftscaleError(
                "preloading a space needs --ontology, --collection "
                "and --data together")
        onto_text = Path(args.ontology).read_text(encoding="utf-8")
        coll_text = Path(args.collection).read_text(encoding="utf-8")
        data_text = Path(args.data).read_text(encoding="utf-8")
        space_id = app.state.register_space(onto_text, coll_text,
                                            data_text)
        print(f"preloaded space {space_id}")
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softscale",
        description="soft conceptual scaling workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser(
        "validate", help="parse documents and check scale constraints")
    _add_document_args(p_validate)
    p_validate.set_defaults(func=_cmd_validate)

    p_scale = sub.add_parser(
        "scale", help="scale object metadata into facets")
    _add_document_args(p_scale)
    p_scale.add_argument("--valuation", choices=_VALUATIONS,
                         default="boolean")
    p_scale.add_argument("--out", default=None, help="output path "
                         "(default: stdout)")
    p_scale.set_defaults(func=_cmd_scale)

    p_lattice = sub.add_parser(
        "lattice", help="build the concept lattice of the scaled data")
    _add_document_args(p_lattice)
    p_lattice.add_argument("--out", default=None, help="output path "
                           "(default: stdout)")
    p_lattice.add_argument("--format", choices=("json", "dot"),
                           default=None,
                           help="output format (default: by extension)")
    p_lattice.set_defaults(func=_cmd_lattice)

    p_serve = sub.add_parser("serve", help="run the browsing service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ontology", default=None)
    p_serve.add_argument("--collection", default=None)
    p_serve.add_argument("--data", default=None)
    p_serve.add_argument("--reference-date", default=None, metavar="DATE")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SoftscaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
