"""The conceptual-space server.

A space is built once from uploaded documents (ontology, collection,
dataset) and cached by content hash; browsing sessions walk its concept
lattice through meet/join transitions.  Sessions live in memory and
expire after idling; views are shared by every session on a space.
"""

from __future__ import annotations

import hashlib
import itertools
import threading
import time
from dataclasses import dataclass, field
from datetime import date

from fastapi import FastAPI, File, HTTPException, UploadFile
from pydantic import BaseModel

from .errors import (SoftscaleError, UnknownElementError,
                     ValuationMismatchError)
from .lattice import (Concept, ConceptLattice, DuplicateNameError, MODES,
                      bookmark_view, classify_relation, join, meet,
                      similarity)
from .markup import (MarkupError, lattice_json_doc, load_dataset,
                     parse_collection, parse_ontology)
from .pipeline import build_browse_space
from .queries import QueryTypeError, UnresolvedDateError
from .scales import ConstraintViolationError, ScaleError

DEFAULT_SESSION_TTL = 30 * 60.0


def _module_of(exc: Exception) -> str:
    if isinstance(exc, MarkupError):
        return "markup"
    if isinstance(exc, (ConstraintViolationError, ScaleError)):
        return "scales"
    if isinstance(exc, (QueryTypeError, UnresolvedDateError)):
        return "queries"
    if isinstance(exc, DuplicateNameError):
        return "lattice"
    if isinstance(exc, UnknownElementError):
        return "lattice"
    if isinstance(exc, ValuationMismatchError):
        return "valuation"
    return "pipeline"


def _fail(status: int, message: str, module: str) -> HTTPException:
    return HTTPException(status_code=status,
                         detail={"error": message, "module": module})


@dataclass
class _Space:
    space_id: str
    lattice: ConceptLattice
    view_agents: dict[str, str | None] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


@dataclass
class _Session:
    session_id: str
    space_id: str
    current: int
    mode: str = "extensional"
    definition: tuple[str, ...] = ()
    last_used: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)


class MeetBody(BaseModel):
    elements: list[str] = []


class ViewBody(BaseModel):
    name: str
    agent: str | None = None


class ModeBody(BaseModel):
    mode: str


def create_app(session_ttl: float = DEFAULT_SESSION_TTL,
               reference_date: date | None = None) -> FastAPI:
    app = FastAPI(title="softscale conceptual-space service")
    spaces: dict[str, _Space] = {}
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()
    session_counter = itertools.count(1)

    def register_space(ontology_text: str, collection_text: str,
                       dataset_text: str) -> str:
        digest = hashlib.sha256(
            b"\x00".join(t.encode("utf-8")
                         for t in (ontology_text, collection_text,
                                   dataset_text))).hexdigest()
        space_id = f"sp-{digest[:12]}"
        with registry_lock:
            if space_id in spaces:
                return space_id
        onto = parse_ontology(ontology_text)
        coll = parse_collection(collection_text, onto)
        functions = load_dataset(dataset_text, onto)
        _, lattice = build_browse_space(onto, coll, functions,
                                        reference_date)
        with registry_lock:
            spaces.setdefault(space_id, _Space(space_id, lattice))
        return space_id

    app.state.register_space = register_space

    def get_space(space_id: str) -> _Space:
        space = spaces.get(space_id)
        if space is None:
            raise _fail(404, f"unknown space {space_id!r}", "service")
        return space

    def get_session(session_id: str) -> tuple[_Session, _Space]:
        session = sessions.get(session_id)
        if session is not None \
                and time.monotonic() - session.last_used > session_ttl:
            del sessions[session_id]
            session = None
        if session is None:
            raise _fail(404, f"unknown or expired session "
                             f"{session_id!r}", "service")
        session.last_used = time.monotonic()
        return session, get_space(session.space_id)

    def state_doc(session: _Session, space: _Space) -> dict:
        lattice = space.lattice
        current = lattice.concepts[session.current]
        mode = session.mode

        def row(name: str, kind: str) -> dict:
            relation = classify_relation(lattice, current, name, mode)
            target = lattice.element_concept(name)
            return {"name": name, "kind": kind,
                    "agent": space.view_agents.get(name),
                    "relation": relation,
                    "similarity": similarity(lattice, current, target,
                                             mode)}

        elements = [row(m, "attribute")
                    for m in lattice.context.attributes]
        elements += [row(g, "object") for g in lattice.context.objects]
        elements += [row(name, "view") for name in sorted(lattice.views)]

        views_below = []
        for name in sorted(lattice.views):
            target = lattice.concepts[lattice.views[name]]
            if mode == "intentional":
                below = current.extent < target.extent
            else:
                below = target.extent < current.extent
            if below:
                views_below.append(name)

        index = session.current
        return {
            "sessionId": session.session_id,
            "spaceId": space.space_id,
            "mode": mode,
            "definition": list(session.definition),
            "current": {
                "index": index,
                "extent": [g for g in lattice.context.objects
                           if g in current.extent],
                "intent": [m for m in lattice.context.attributes
                           if m in current.intent],
                "contingentObjects": list(
                    lattice.contingent_objects(index)),
                "contingentAttributes": list(
                    lattice.contingent_attributes(index)),
            },
            "elements": elements,
            "viewsBelow": views_below,
        }

    def transition(session_id: str, names: list[str],
                   op) -> dict:
        session, space = get_session(session_id)
        with session.lock:
            lattice = space.lattice
            try:
                targets = [lattice.element_concept(n) for n in names]
                landed: Concept = op(lattice, targets)
            except UnknownElementError as exc:
                raise _fail(404, str(exc), "lattice") from None
            session.current = lattice.index(landed)
            session.definition = tuple(names)
            return state_doc(session, space)

    @app.post("/spaces")
    async def create_space(ontology: UploadFile = File(...),
                           collection: UploadFile = File(...),
                           dataset: UploadFile = File(...)) -> dict:
        texts = []
        for upload in (ontology, collection, dataset):
            texts.append((await upload.read()).decode("utf-8"))
        try:
            space_id = register_space(*texts)
        except SoftscaleError as exc:
            raise _fail(422, str(exc), _module_of(exc)) from None
        return {"spaceId": space_id}

    @app.post("/spaces/{space_id}/sessions")
    def create_session(space_id: str) -> dict:
        get_space(space_id)
        session_id = f"s{next(session_counter)}"
        sessions[session_id] = _Session(session_id, space_id, current=0,
                                        last_used=time.monotonic())
        return {"sessionId": session_id, "spaceId": space_id}

    @app.get("/sessions/{session_id}/state")
    def get_state(session_id: str) -> dict:
        session, space = get_session(session_id)
        return state_doc(session, space)

    @app.post("/sessions/{session_id}/meet")
    def transition_meet(session_id: str, body: MeetBody) -> dict:
        return transition(session_id, body.elements, meet)

    @app.post("/sessions/{session_id}/join")
    def transition_join(session_id: str, body: MeetBody) -> dict:
        return transition(session_id, body.elements, join)

    @app.post("/sessions/{session_id}/views")
    def create_view(session_id: str, body: ViewBody) -> dict:
        session, space = get_session(session_id)
        with space.lock:
            lattice = space.lattice
            current = lattice.concepts[session.current]
            try:
                space.lattice = bookmark_view(lattice, current, body.name)
            except DuplicateNameError as exc:
                raise _fail(409, str(exc), "lattice") from None
            space.view_agents[body.name] = body.agent
        return {"name": body.name, "conceptIndex": session.current,
                "agent": body.agent}

    @app.post("/sessions/{session_id}/mode")
    def set_mode(session_id: str, body: ModeBody) -> dict:
        session, space = get_session(session_id)
        if body.mode not in MODES:
            raise _fail(422, f"unknown browsing mode {body.mode!r}; "
                             f"expected one of {MODES}", "service")
        with session.lock:
            session.mode = body.mode
            return state_doc(session, space)

    @app.get("/spaces/{space_id}/lattice")
    def get_lattice(space_id: str) -> dict:
        return lattice_json_doc(get_space(space_id).lattice)

    return app


app = create_app()
