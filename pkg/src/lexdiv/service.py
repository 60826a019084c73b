"""HTTP/JSON service for collaborative lexicon development.

Exposes read endpoints for browsing, searching and the coverage/bias
dashboards, and a single append-only edit endpoint.  Every edit attempt is
recorded in an EditEvent log with its contributor; replaying the successful
events of the log onto an empty store reproduces the live store exactly.
"""

import json
import threading
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import exchange
from .errors import LexdbError, MalformedCode, UnknownRef
from .mapping import (
    FULL_CAPABILITY,
    NO_BN_CAPABILITY,
    NO_GAP_CAPABILITY,
    ModelCapability,
    apply_capability,
    coverage,
    derive_gold,
    derive_mappings,
    pivot_capability,
)
from .metrics import PerfRecord, bias
from .store import Store

DEFAULT_PAGE_SIZE = 50

EDIT_ACTIONS = ("add_language", "add_interlingual_concept",
                "add_semantic_relation", "lexicalize", "mark_gap",
                "add_local_concept", "add_sense", "add_lexical_link")

CAPABILITY_PRESETS = {
    "full": FULL_CAPABILITY,
    "no-gaps": NO_GAP_CAPABILITY,
    "no-bn": NO_BN_CAPABILITY,
}


def resolve_capability(name):
    """Preset name, "pivot:<lang>", or a JSON object string."""
    if name in CAPABILITY_PRESETS:
        return CAPABILITY_PRESETS[name]
    if name.startswith("pivot:"):
        return pivot_capability(name.split(":", 1)[1])
    try:
        obj = json.loads(name)
    except json.JSONDecodeError:
        raise MalformedCode(f"unknown capability {name!r}")
    return ModelCapability(
        pivot=obj.get("pivot"),
        supports_gaps=obj.get("supports_gaps", True),
        supports_broader_narrower=obj.get("supports_broader_narrower", True),
        supports_local_concepts=obj.get("supports_local_concepts", True))


@dataclass
class EditEvent:
    seq: int
    contributor: str
    timestamp: str
    action: str
    args: dict
    status: str                 # "ok" | "error"
    error_code: Optional[str] = None
    result: Optional[dict] = None


class EditLog:
    """Append-only, strictly sequenced record of every edit attempt."""

    def __init__(self, path=None):
        self.events = []
        self.path = Path(path) if path else None
        if self.path and self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    if line.strip():
                        self.events.append(EditEvent(**json.loads(line)))

    @property
    def last_seq(self):
        return self.events[-1].seq if self.events else 0

    def append(self, contributor, action, args, status, error_code=None,
               result=None):
        event = EditEvent(
            seq=self.last_seq + 1, contributor=contributor,
            timestamp=datetime.now(timezone.utc).isoformat(),
            action=action, args=args, status=status,
            error_code=error_code, result=result)
        self.events.append(event)
        if self.path:
            with self.path.open("a") as fh:
                fh.write(json.dumps(asdict(event), ensure_ascii=False) + "\n")
        return event

    def since(self, seq):
        return [e for e in self.events if e.seq > seq]


def apply_action(store, action, args):
    """Run one mutation against the store; returns a JSON-safe result."""
    if action == "add_language":
        lang = store.add_language(args["code"], args.get("name", args["code"]),
                                  args.get("role", "local"))
        return {"id": lang.id, "code": lang.code}
    if action == "add_interlingual_concept":
        concept = store.add_interlingual_concept(args.get("label"))
        return {"id": concept.id}
    if action == "add_semantic_relation":
        store.add_semantic_relation(args["source"], args["target"],
                                    args["kind"])
        return {}
    if action == "lexicalize":
        sense = store.lexicalize(args["interlingual"], args["language"],
                                 args["lemma"], args.get("pos", "noun"),
                                 args.get("gloss"))
        return {"id": sense.id, "concept": sense.concept_id}
    if action == "mark_gap":
        store.mark_gap(args["interlingual"], args["language"])
        return {}
    if action == "add_local_concept":
        lc = store.add_local_concept(args["language"], args["parent"],
                                     gloss=args.get("gloss"),
                                     lemma=args.get("lemma"),
                                     pos=args.get("pos", "noun"))
        return {"id": lc.id}
    if action == "add_sense":
        sense = store.add_sense(args["concept"], args["lemma"])
        return {"id": sense.id}
    if action == "add_lexical_link":
        store.add_lexical_link(args["source"], args["target"], args["kind"])
        return {}
    raise UnknownRef(f"unknown edit action {action!r}")


def replay(events, store=None):
    """Rebuild a store from the successful events of an edit log."""
    if store is None:
        store = Store()
    for event in events:
        if event.status == "ok":
            apply_action(store, event.action, event.args)
    return store


def _paginate(items, page, page_size):
    start = (page - 1) * page_size
    return {"page": page, "page_size": page_size, "total": len(items),
            "items": items[start:start + page_size]}


def _sense_json(store, sense):
    return {"id": sense.id, "lemma": sense.lemma,
            "language": store.languages[sense.language_id].code,
            "concept": sense.concept_id}


def _concept_json(store, concept):
    lexicalizations = []
    for code in store.language_codes():
        senses, is_gap = store.senses_of(concept, code)
        if is_gap:
            status = "gap"
        elif senses or store.is_lexicalized(code, concept):
            status = "lexicalized"
        else:
            status = "missing"
        entry = {"language": code, "status": status,
                 "senses": [_sense_json(store, s) for s in senses]}
        lc = store.language_concept_for(code, concept)
        if lc is not None:
            entry["concept_id"] = lc.id
            entry["gloss"] = lc.gloss
            entry["local_concepts"] = [
                {"id": child.id, "gloss": child.gloss,
                 "lemmas": [s.lemma for s in store.senses_of_concept(child)]}
                for child in store.local_children(lc)]
        lexicalizations.append(entry)
    return {
        "id": concept.id,
        "label": concept.label,
        "parents": store.hypernym_parents(concept),
        "children": [
            {"id": ch, "label": store.concepts[ch].label}
            for ch in store.hypernym_children(concept)],
        "lexicalizations": lexicalizations,
    }


def create_app(store, log=None, snapshot_path=None, frontend_dir=None):
    app = FastAPI(title="lexdiv service")
    log = log if log is not None else EditLog()
    write_lock = threading.Lock()

    @app.exception_handler(LexdbError)
    async def lexdb_error_handler(request: Request, exc: LexdbError):
        status = 404 if isinstance(exc, UnknownRef) else 400
        return JSONResponse(status_code=status, content={
            "code": exc.code, "message": exc.message,
            "location": exc.location})

    @app.get("/languages")
    def languages():
        return [{"id": lang.id, "code": lang.code, "name": lang.name,
                 "role": lang.role}
                for _, lang in sorted(store.languages.items())]

    @app.get("/concepts")
    def concepts(page: int = 1, page_size: int = Query(DEFAULT_PAGE_SIZE),
                 roots: bool = False):
        with store._lock:
            items = []
            for cid in sorted(store.concepts):
                if roots and store._hyper_parents[cid]:
                    continue
                items.append({"id": cid, "label": store.concepts[cid].label})
        return _paginate(items, page, page_size)

    @app.get("/concepts/{concept_id}")
    def concept(concept_id: int):
        with store._lock:
            return _concept_json(store, store._resolve_concept(concept_id))

    @app.get("/search")
    def search(lemma: str, language: Optional[str] = None, page: int = 1,
               page_size: int = Query(DEFAULT_PAGE_SIZE)):
        with store._lock:
            codes = [language] if language else store.language_codes()
            items = []
            for code in codes:
                for sense in store.find_lemma(code, lemma):
                    lc = store.concept_of(sense)
                    items.append({
                        **_sense_json(store, sense),
                        "interlingual": lc.interlingual_id,
                        "gloss": lc.gloss,
                    })
        return _paginate(items, page, page_size)

    @app.get("/mappings")
    def mappings(source: str, target: str):
        with store._lock:
            ms = derive_mappings(store, source, target)
            return exchange.mapping_set_to_record(ms, store, "derived")

    def _coverage_report(langs, capability):
        codes = ([c for c in langs.split(",") if c] if langs
                 else store.language_codes())
        cap = resolve_capability(capability)
        gold = derive_gold(store, codes)
        expressible = apply_capability(gold, cap, store)
        return coverage(expressible, gold)

    @app.get("/coverage")
    def coverage_endpoint(langs: Optional[str] = None,
                          capability: str = "full"):
        with store._lock:
            report = _coverage_report(langs, capability)
        return {"per_language": report.per_language,
                "overall": report.overall,
                "counts": {k: list(v) for k, v in report.counts.items()},
                "overall_counts": list(report.overall_counts)}

    @app.get("/bias")
    def bias_endpoint(langs: Optional[str] = None, capability: str = "full"):
        with store._lock:
            report = _coverage_report(langs, capability)
        records = [PerfRecord(language=lang, value=value, task="coverage",
                              system=capability, bounded=True)
                   for lang, value in report.per_language.items()]
        result = bias(records)
        return {"bias": result.bias, "mean": result.mean, "n": result.n,
                "per_language": report.per_language}

    @app.post("/bias")
    def bias_records(payload: dict):
        records = [PerfRecord(language=r["language"], value=r["value"],
                              task=payload.get("task", ""),
                              system=payload.get("system", ""),
                              direction=payload.get("direction",
                                                    "higher_better"))
                   for r in payload.get("records", ())]
        result = bias(records)
        return {"bias": result.bias, "mean": result.mean, "n": result.n,
                "direction": result.direction}

    @app.post("/edits")
    def edits(payload: dict):
        contributor = payload.get("contributor", "")
        action = payload.get("action")
        args = payload.get("args", {})
        if not contributor:
            return JSONResponse(status_code=400, content={
                "code": "MISSING_CONTRIBUTOR",
                "message": "edits must carry a contributor id"})
        if action not in EDIT_ACTIONS:
            return JSONResponse(status_code=400, content={
                "code": "UNKNOWN_ACTION",
                "message": f"unknown edit action {action!r}"})
        with write_lock, store._lock:
            try:
                result = apply_action(store, action, args)
            except LexdbError as exc:
                event = log.append(contributor, action, args, "error",
                                   error_code=exc.code)
                return JSONResponse(status_code=409, content={
                    "code": exc.code, "message": exc.message,
                    "seq": event.seq})
            event = log.append(contributor, action, args, "ok", result=result)
            if snapshot_path:
                doc = exchange.export_document(store)
                Path(snapshot_path).write_bytes(exchange.canonical_bytes(doc))
        return {"seq": event.seq, "status": "ok", "result": result}

    @app.get("/changelog")
    def changelog(since: int = 0):
        return [asdict(e) for e in log.since(since)]

    @app.get("/export")
    def export(langs: Optional[str] = None):
        scope = [c for c in langs.split(",") if c] if langs else None
        with store._lock:
            doc = exchange.export_document(store, scope=scope)
        return doc

    app.state.store = store
    app.state.log = log

    if frontend_dir:
        app.mount("/", StaticFiles(directory=frontend_dir, html=True),
                  name="frontend")
    return app
