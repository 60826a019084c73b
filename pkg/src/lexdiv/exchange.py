"""Canonical JSON exchange format for lexicons, mapping sets and perf tables.

A document is UTF-8 JSON with a fixed section order and fixed key order per
record; serializing the same content always yields the same bytes, so
documents can be diffed and round-tripped bit-exactly.  Entities carry stable
string IDs (language codes, "c<n>" concepts, "lc<n>" language concepts,
"s<n>" senses); in-memory integer IDs are never serialized.
"""

import json
from dataclasses import dataclass

from . import store as storemod
from .errors import (
    DuplicateGap,
    DuplicateRelation,
    DuplicateSense,
    MergeConflict,
    ParseError,
    UnknownLanguage,
    ValidationFailed,
)
from .mapping import Endpoint, MappingRelation, MappingSet
from .metrics import DIRECTIONS, PerfRecord
from .store import Store

FORMAT_VERSION = "1.0"

SECTIONS = ("languages", "concepts", "semantic_relations", "lexicalizations",
            "lexical_links", "mapping_sets", "perf_tables")

_KNOWN_KEYS = {
    "languages": {"code", "name", "role", "provenance"},
    "concepts": {"id", "label"},
    "semantic_relations": {"source", "target", "kind"},
    "lexicalizations:concept": {"type", "id", "language", "interlingual",
                                "parent", "gloss", "pos"},
    "lexicalizations:sense": {"type", "id", "language", "concept", "lemma"},
    "lexicalizations:gap": {"type", "language", "interlingual"},
    "lexical_links": {"source", "target", "kind"},
    "mapping_sets": {"id", "languages", "relations"},
    "perf_tables": {"id", "task", "system", "direction", "records"},
}


@dataclass
class Diagnostic:
    severity: str  # "error" | "warning"
    code: str
    section: str
    index: int
    message: str

    def __str__(self):
        return (f"{self.severity}[{self.code}] {self.section}"
                f"[{self.index}]: {self.message}")


def canonical_bytes(doc):
    """The one true byte serialization of a document."""
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def dumps(doc):
    return canonical_bytes(doc).decode("utf-8")


def loads(text):
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    return doc


# --- stable id assignment --------------------------------------------------

def _assign_stable_id(store, entity, prefix):
    if entity.stable_id is None:
        candidate = f"{prefix}{entity.id}"
        while candidate in store.stable_ids:
            candidate = f"{candidate}x"
        entity.stable_id = candidate
    return entity.stable_id


def _register(store, stable_id, kind, obj_id):
    store.stable_ids[stable_id] = (kind, obj_id)


# --- export ----------------------------------------------------------------

def export_document(store, scope=None, include=None, mapping_sets=(),
                    perf_tables=()):
    """Serialize a store (optionally restricted to a set of language codes)
    into an exchange document. ``include`` limits the emitted sections."""
    with store._lock:
        return _export_locked(store, scope, include, mapping_sets, perf_tables)


def _export_locked(store, scope, include, mapping_sets, perf_tables):
    if scope is None:
        languages = [store.languages[i] for i in sorted(store.languages)]
    else:
        languages = [store.language(code) for code in scope]
    languages.sort(key=lambda l: l.code)
    lang_ids = {l.id for l in languages}

    # concepts touched by the scoped lexicons, or everything when unscoped
    if scope is None:
        concept_ids = set(store.concepts)
    else:
        concept_ids = set()
        for lc in store.language_concepts.values():
            if lc.language_id in lang_ids and lc.interlingual_id is not None:
                concept_ids.add(lc.interlingual_id)
        for (lid, cid) in store.gaps:
            if lid in lang_ids:
                concept_ids.add(cid)

    for lang in languages:
        _register(store, lang.code, "language", lang.id)
        lang.stable_id = lang.code
    concepts = [store.concepts[i] for i in sorted(concept_ids)]
    for concept in concepts:
        _register(store, _assign_stable_id(store, concept, "c"),
                  "concept", concept.id)

    lex_concepts = [lc for lc in store.language_concepts.values()
                    if lc.language_id in lang_ids]
    for lc in lex_concepts:
        _register(store, _assign_stable_id(store, lc, "lc"),
                  "language_concept", lc.id)
    senses = [s for s in store.senses.values() if s.language_id in lang_ids]
    for s in senses:
        _register(store, _assign_stable_id(store, s, "s"), "sense", s.id)

    doc = {"format_version": FORMAT_VERSION}
    if store.provenance is not None:
        doc["provenance"] = store.provenance

    def lang_record(lang):
        rec = {"code": lang.code, "name": lang.name, "role": lang.role}
        if lang.provenance is not None:
            rec["provenance"] = lang.provenance
        return rec

    sections = {}
    sections["languages"] = [lang_record(l) for l in languages]
    sections["concepts"] = sorted(
        ({"id": c.stable_id, "label": c.label} for c in concepts),
        key=lambda r: r["id"])

    rels = []
    for src, tgt, kind in store.semantic_relations():
        if src in concept_ids and tgt in concept_ids:
            rels.append({"source": store.concepts[src].stable_id,
                         "target": store.concepts[tgt].stable_id,
                         "kind": kind})
    sections["semantic_relations"] = sorted(
        rels, key=lambda r: (r["source"], r["target"], r["kind"]))

    lex = []
    for lc in sorted(lex_concepts, key=lambda x: x.stable_id):
        lang = store.languages[lc.language_id]
        parent = (store.language_concepts[lc.parent_id].stable_id
                  if lc.parent_id is not None else None)
        interlingual = (store.concepts[lc.interlingual_id].stable_id
                        if lc.interlingual_id is not None else None)
        lex.append({"type": "concept", "id": lc.stable_id, "language": lang.code,
                    "interlingual": interlingual, "parent": parent,
                    "gloss": lc.gloss, "pos": lc.pos})
    for s in sorted(senses, key=lambda x: x.stable_id):
        lex.append({"type": "sense", "id": s.stable_id,
                    "language": store.languages[s.language_id].code,
                    "concept": store.language_concepts[s.concept_id].stable_id,
                    "lemma": s.lemma})
    gap_records = sorted(
        (store.languages[lid].code, store.concepts[cid].stable_id)
        for (lid, cid) in store.gaps
        if lid in lang_ids and cid in concept_ids)
    for code, cid in gap_records:
        lex.append({"type": "gap", "language": code, "interlingual": cid})
    sections["lexicalizations"] = lex

    links = []
    for link in store.lexical_links:
        src = store.senses.get(link.source_id)
        tgt = store.senses.get(link.target_id)
        if src.language_id in lang_ids and tgt.language_id in lang_ids:
            links.append({"source": src.stable_id, "target": tgt.stable_id,
                          "kind": link.kind})
    sections["lexical_links"] = sorted(
        links, key=lambda r: (r["source"], r["target"], r["kind"]))

    sections["mapping_sets"] = [mapping_set_to_record(ms, store, f"m{i + 1}")
                                for i, ms in enumerate(mapping_sets)]
    sections["perf_tables"] = list(perf_tables)

    for name in SECTIONS:
        if include is None or name in include:
            doc[name] = sections[name]
        else:
            doc[name] = []
    return doc


# --- mapping sets and perf tables ------------------------------------------

def _endpoint_record(endpoint, store):
    key = endpoint.concept
    obj_id = int(key[1:])
    if key.startswith("l"):
        stable = store.language_concepts[obj_id].stable_id or f"lc{obj_id}"
    else:
        stable = store.concepts[obj_id].stable_id or f"c{obj_id}"
    return {"language": endpoint.language, "concept": stable,
            "is_gap": endpoint.is_gap}


def mapping_set_to_record(ms, store, set_id):
    relations = []
    for r in ms:
        relations.append({"kind": r.kind,
                          "source": _endpoint_record(r.source, store),
                          "target": _endpoint_record(r.target, store)})
    return {"id": set_id, "languages": list(ms.languages),
            "relations": relations}


def _endpoint_from_record(rec, store):
    kind, obj_id = store.stable_ids.get(rec["concept"], (None, None))
    if kind == "concept":
        key = f"i{obj_id}"
    elif kind == "language_concept":
        key = f"l{obj_id}"
    else:
        raise ParseError(f"unknown concept id {rec['concept']!r} in mapping set")
    return Endpoint(rec["language"], key, bool(rec.get("is_gap", False)))


def mapping_set_from_record(rec, store):
    relations = []
    for r in rec.get("relations", ()):
        relations.append(MappingRelation(
            r["kind"], _endpoint_from_record(r["source"], store),
            _endpoint_from_record(r["target"], store)))
    return MappingSet(relations, rec.get("languages", ()))


def load_mapping_sets(doc, store):
    return {rec["id"]: mapping_set_from_record(rec, store)
            for rec in doc.get("mapping_sets", ())}


def perf_table_to_record(records, table_id):
    records = list(records)
    first = records[0]
    return {
        "id": table_id, "task": first.task, "system": first.system,
        "direction": first.direction,
        "records": [{"language": r.language, "value": r.value,
                     "input_set": r.input_set}
                    for r in sorted(records, key=lambda r: r.language)],
    }


def load_perf_tables(doc):
    tables = {}
    for rec in doc.get("perf_tables", ()):
        tables[rec["id"]] = [
            PerfRecord(language=row["language"], value=row["value"],
                       task=rec.get("task", ""), system=rec.get("system", ""),
                       direction=rec.get("direction", "higher_better"),
                       input_set=row.get("input_set"))
            for row in rec.get("records", ())]
    return tables


# --- validation ------------------------------------------------------------

def validate_document(doc):
    """Structural and semantic checks; returns diagnostics, raises nothing
    except ParseError for non-document input."""
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    diags = []

    def err(code, section, index, message):
        diags.append(Diagnostic("error", code, section, index, message))

    def warn(code, section, index, message):
        diags.append(Diagnostic("warning", code, section, index, message))

    if doc.get("format_version") != FORMAT_VERSION:
        err("BAD_VERSION", "format_version", 0,
            f"unsupported format_version {doc.get('format_version')!r}")
    for key in doc:
        if key not in SECTIONS and key not in ("format_version", "provenance"):
            warn("UNKNOWN_SECTION", key, 0, f"unknown section {key!r}")

    def check_keys(record, known_key, section, index):
        for k in record:
            if k not in _KNOWN_KEYS[known_key]:
                warn("UNKNOWN_KEY", section, index, f"unknown key {k!r}")

    languages = {}
    for i, rec in enumerate(doc.get("languages", ())):
        check_keys(rec, "languages", "languages", i)
        code = rec.get("code")
        if not code or not isinstance(code, str):
            err("MISSING_KEY", "languages", i, "language without a code")
            continue
        if code in languages:
            err("DUPLICATE_ID", "languages", i, f"duplicate language {code!r}")
        if rec.get("role", "local") not in storemod.LANGUAGE_ROLES:
            err("BAD_ENUM", "languages", i, f"bad role {rec.get('role')!r}")
        languages[code] = rec

    concepts = {}
    for i, rec in enumerate(doc.get("concepts", ())):
        check_keys(rec, "concepts", "concepts", i)
        cid = rec.get("id")
        if not cid:
            err("MISSING_KEY", "concepts", i, "concept without an id")
            continue
        if cid in concepts:
            err("DUPLICATE_ID", "concepts", i, f"duplicate concept {cid!r}")
        concepts[cid] = rec

    hyper = {}
    seen_rels = set()
    for i, rec in enumerate(doc.get("semantic_relations", ())):
        check_keys(rec, "semantic_relations", "semantic_relations", i)
        src, tgt, kind = rec.get("source"), rec.get("target"), rec.get("kind")
        if kind not in storemod.SEMANTIC_KINDS:
            err("BAD_ENUM", "semantic_relations", i, f"bad kind {kind!r}")
            continue
        for ref in (src, tgt):
            if ref not in concepts:
                err("BAD_REFERENCE", "semantic_relations", i,
                    f"unknown concept {ref!r}")
        if src == tgt:
            err("SELF_LOOP", "semantic_relations", i,
                f"self relation on {src!r}")
            continue
        if (src, tgt, kind) in seen_rels:
            err("DUPLICATE_RELATION", "semantic_relations", i,
                f"duplicate {kind} {src!r}->{tgt!r}")
        seen_rels.add((src, tgt, kind))
        if kind == "hypernym" and src in concepts and tgt in concepts:
            hyper.setdefault(src, set()).add(tgt)

    # cycle check over the in-document hypernym graph
    state = {}

    def walk(node, index):
        state[node] = "open"
        for parent in hyper.get(node, ()):
            if state.get(parent) == "open":
                err("HYPERNYM_CYCLE", "semantic_relations", index,
                    f"hypernym cycle through {parent!r}")
                state[node] = "done"
                return
            if parent not in state:
                walk(parent, index)
        state[node] = "done"

    for i, rec in enumerate(doc.get("semantic_relations", ())):
        node = rec.get("source")
        if node in hyper and node not in state:
            walk(node, i)

    lex_concepts = {}
    pair_concepts = {}
    pair_gaps = set()
    senses = {}
    for i, rec in enumerate(doc.get("lexicalizations", ())):
        rtype = rec.get("type")
        if rtype not in ("concept", "sense", "gap"):
            err("BAD_ENUM", "lexicalizations", i, f"bad record type {rtype!r}")
            continue
        check_keys(rec, f"lexicalizations:{rtype}", "lexicalizations", i)
        lang = rec.get("language")
        if lang not in languages:
            err("BAD_REFERENCE", "lexicalizations", i,
                f"unknown language {lang!r}")
        if rtype == "concept":
            cid = rec.get("id")
            if not cid:
                err("MISSING_KEY", "lexicalizations", i, "concept without id")
                continue
            if cid in lex_concepts or cid in concepts:
                err("DUPLICATE_ID", "lexicalizations", i,
                    f"duplicate id {cid!r}")
            interlingual = rec.get("interlingual")
            parent = rec.get("parent")
            if interlingual is not None and interlingual not in concepts:
                err("BAD_REFERENCE", "lexicalizations", i,
                    f"unknown interlingual concept {interlingual!r}")
            if interlingual is not None:
                pair = (lang, interlingual)
                if pair in pair_concepts:
                    err("DUPLICATE_ID", "lexicalizations", i,
                        f"second concept for pair {pair!r}")
                pair_concepts[pair] = i
            if rec.get("pos", "noun") not in storemod.POS_TAGS:
                err("BAD_ENUM", "lexicalizations", i,
                    f"bad pos {rec.get('pos')!r}")
            lex_concepts[cid] = rec
        elif rtype == "sense":
            sid = rec.get("id")
            if not sid:
                err("MISSING_KEY", "lexicalizations", i, "sense without id")
                continue
            if sid in senses:
                err("DUPLICATE_ID", "lexicalizations", i,
                    f"duplicate sense {sid!r}")
            if not rec.get("lemma"):
                err("MISSING_KEY", "lexicalizations", i, "sense without lemma")
            senses[sid] = rec
        else:
            interlingual = rec.get("interlingual")
            if interlingual not in concepts:
                err("BAD_REFERENCE", "lexicalizations", i,
                    f"unknown interlingual concept {interlingual!r}")
            pair = (lang, interlingual)
            if pair in pair_gaps:
                err("DUPLICATE_ID", "lexicalizations", i,
                    f"duplicate gap for {pair!r}")
            pair_gaps.add(pair)

    # second pass: references between lexicalization records
    for i, rec in enumerate(doc.get("lexicalizations", ())):
        rtype = rec.get("type")
        if rtype == "concept":
            parent = rec.get("parent")
            if parent is not None and parent not in lex_concepts:
                err("BAD_REFERENCE", "lexicalizations", i,
                    f"unknown parent concept {parent!r}")
            if parent is not None:
                prec = lex_concepts.get(parent)
                if prec and prec.get("language") != rec.get("language"):
                    err("CROSS_LANGUAGE_PARENT", "lexicalizations", i,
                        "local parent belongs to another language")
            if rec.get("interlingual") is None:
                # local concepts must reach the interlingua via parents
                seen = set()
                node = rec
                rooted = False
                while node is not None:
                    nid = node.get("id")
                    if nid in seen:
                        break
                    seen.add(nid)
                    if node.get("interlingual") is not None:
                        rooted = True
                        break
                    node = lex_concepts.get(node.get("parent"))
                if not rooted:
                    err("UNROOTED_LOCAL", "lexicalizations", i,
                        f"local concept {rec.get('id')!r} never reaches "
                        "the interlingua")
        elif rtype == "sense":
            concept = rec.get("concept")
            crec = lex_concepts.get(concept)
            if crec is None:
                err("BAD_REFERENCE", "lexicalizations", i,
                    f"unknown concept {concept!r} for sense")
            elif crec.get("language") != rec.get("language"):
                err("LANGUAGE_MISMATCH", "lexicalizations", i,
                    "sense language differs from its concept's language")

    # a gap and a language concept on the same pair are mutually exclusive
    for pair in pair_gaps:
        if pair in pair_concepts:
            err("GAP_SENSE_CONFLICT", "lexicalizations", pair_concepts[pair],
                f"pair {pair!r} has both a gap and a language concept")
    # a gap may coexist with a local concept beneath it; flag, don't block
    for cid, rec in lex_concepts.items():
        if rec.get("interlingual") is None:
            seen = set()
            node = rec
            while node is not None and node.get("id") not in seen:
                seen.add(node.get("id"))
                if node.get("interlingual") is not None:
                    if (rec.get("language"), node["interlingual"]) in pair_gaps:
                        warn("GAP_WITH_LOCAL", "lexicalizations", 0,
                             f"local concept {cid!r} sits under gapped "
                             f"concept {node['interlingual']!r}")
                    break
                node = lex_concepts.get(node.get("parent"))

    seen_links = set()
    for i, rec in enumerate(doc.get("lexical_links", ())):
        check_keys(rec, "lexical_links", "lexical_links", i)
        kind = rec.get("kind")
        src, tgt = rec.get("source"), rec.get("target")
        if kind not in storemod.LEXICAL_KINDS:
            err("BAD_ENUM", "lexical_links", i, f"bad link kind {kind!r}")
            continue
        missing = False
        for ref in (src, tgt):
            if ref not in senses:
                err("BAD_REFERENCE", "lexical_links", i,
                    f"unknown sense {ref!r}")
                missing = True
        if missing:
            continue
        if src == tgt:
            err("SELF_LINK", "lexical_links", i, f"self link on {src!r}")
            continue
        same_lang = senses[src].get("language") == senses[tgt].get("language")
        if kind == "cognate" and same_lang:
            err("COGNATE_SAME_LANGUAGE", "lexical_links", i,
                "cognate link within a single language")
        if kind != "cognate" and not same_lang:
            err("LANGUAGE_MISMATCH", "lexical_links", i,
                f"{kind} link across languages")
        key = (src, tgt, kind)
        if kind in storemod.SYMMETRIC_LEXICAL_KINDS and src > tgt:
            key = (tgt, src, kind)
        if key in seen_links:
            err("DUPLICATE_RELATION", "lexical_links", i,
                f"duplicate {kind} link")
        seen_links.add(key)

    all_concept_ids = set(concepts) | set(lex_concepts)
    for i, rec in enumerate(doc.get("mapping_sets", ())):
        check_keys(rec, "mapping_sets", "mapping_sets", i)
        for rel in rec.get("relations", ()):
            kind = rel.get("kind")
            if kind not in ("equivalent", "broader", "narrower",
                            "untranslatable"):
                err("BAD_ENUM", "mapping_sets", i, f"bad kind {kind!r}")
                continue
            for side in ("source", "target"):
                ep = rel.get(side, {})
                if ep.get("concept") not in all_concept_ids:
                    err("BAD_REFERENCE", "mapping_sets", i,
                        f"unknown concept {ep.get('concept')!r}")
            if (rel.get("source", {}).get("language")
                    == rel.get("target", {}).get("language")):
                err("LANGUAGE_MISMATCH", "mapping_sets", i,
                    "mapping endpoints share a language")
            if kind == "untranslatable" and not rel.get("target", {}).get(
                    "is_gap"):
                err("BAD_ENUM", "mapping_sets", i,
                    "untranslatable relation must target a gap")

    for i, rec in enumerate(doc.get("perf_tables", ())):
        check_keys(rec, "perf_tables", "perf_tables", i)
        if rec.get("direction", "higher_better") not in DIRECTIONS:
            err("BAD_ENUM", "perf_tables", i,
                f"bad direction {rec.get('direction')!r}")
        for row in rec.get("records", ()):
            value = row.get("value")
            if not isinstance(value, (int, float)) or value < 0:
                err("BAD_ENUM", "perf_tables", i,
                    f"bad performance value {value!r}")
    return diags


# --- import ----------------------------------------------------------------

def import_document(doc, store=None):
    """Build (or merge into) a store from a validated document.

    Raises ValidationFailed when the document has error diagnostics, and
    MergeConflict when a stable ID is already present with different content.
    Re-importing the same document is a no-op.
    """
    diags = [d for d in validate_document(doc) if d.severity == "error"]
    if diags:
        raise ValidationFailed(diags)
    if store is None:
        store = Store()

    with store._lock:
        _import_locked(doc, store)
    return store


def _conflict(stable_id, what):
    raise MergeConflict(f"stable id {stable_id!r} already present with "
                        f"different {what}")


def _import_locked(doc, store):
    if doc.get("provenance") is not None and store.provenance is None:
        store.provenance = doc["provenance"]

    for rec in doc.get("languages", ()):
        code = rec["code"]
        try:
            lang = store.language(code)
        except UnknownLanguage:
            lang = store.add_language(code, rec.get("name", code),
                                      rec.get("role", "local"),
                                      rec.get("provenance"))
            lang.stable_id = code
            _register(store, code, "language", lang.id)
            continue
        if (lang.name, lang.role) != (rec.get("name", code),
                                      rec.get("role", "local")):
            _conflict(code, "language metadata")

    for rec in doc.get("concepts", ()):
        cid = rec["id"]
        existing = store.stable_ids.get(cid)
        if existing is None:
            concept = store.add_interlingual_concept(rec.get("label"))
            concept.stable_id = cid
            _register(store, cid, "concept", concept.id)
        else:
            kind, obj_id = existing
            if kind != "concept":
                _conflict(cid, "entity kind")
            if store.concepts[obj_id].label != rec.get("label"):
                _conflict(cid, "label")

    def concept_by_stable(cid):
        return store.concepts[store.stable_ids[cid][1]]

    for rec in doc.get("semantic_relations", ()):
        try:
            store.add_semantic_relation(concept_by_stable(rec["source"]),
                                        concept_by_stable(rec["target"]),
                                        rec["kind"])
        except DuplicateRelation:
            pass

    # language concepts: interlingua-linked first, then locals in dependency
    # order (a local's parent may appear later in the file)
    concept_recs = [r for r in doc.get("lexicalizations", ())
                    if r.get("type") == "concept"]
    pending = []
    for rec in concept_recs:
        if rec.get("interlingual") is not None:
            _import_language_concept(store, rec, concept_by_stable)
        else:
            pending.append(rec)
    while pending:
        progressed = []
        for rec in pending:
            parent = store.stable_ids.get(rec["parent"])
            if parent is not None:
                _import_local_concept(store, rec)
                progressed.append(rec)
        if not progressed:
            raise MergeConflict("unresolvable local concept parents")
        pending = [r for r in pending if r not in progressed]

    for rec in doc.get("lexicalizations", ()):
        if rec.get("type") != "sense":
            continue
        sid = rec["id"]
        existing = store.stable_ids.get(sid)
        kind, lc_id = store.stable_ids[rec["concept"]]
        if existing is not None:
            ekind, obj_id = existing
            sense = store.senses.get(obj_id) if ekind == "sense" else None
            if (sense is None or sense.lemma != rec["lemma"]
                    or sense.concept_id != lc_id):
                _conflict(sid, "sense content")
            continue
        try:
            sense = store.add_sense(lc_id, rec["lemma"])
        except DuplicateSense:
            continue
        sense.stable_id = sid
        _register(store, sid, "sense", sense.id)

    for rec in doc.get("lexicalizations", ()):
        if rec.get("type") != "gap":
            continue
        try:
            store.mark_gap(concept_by_stable(rec["interlingual"]),
                           rec["language"])
        except DuplicateGap:
            pass

    def sense_by_stable(sid):
        return store.senses[store.stable_ids[sid][1]]

    for rec in doc.get("lexical_links", ()):
        try:
            store.add_lexical_link(sense_by_stable(rec["source"]),
                                   sense_by_stable(rec["target"]),
                                   rec["kind"])
        except DuplicateRelation:
            pass


def _import_language_concept(store, rec, concept_by_stable):
    cid = rec["id"]
    lang = store.language(rec["language"])
    interlingual = concept_by_stable(rec["interlingual"])
    existing = store.stable_ids.get(cid)
    if existing is not None:
        kind, obj_id = existing
        lc = store.language_concepts.get(obj_id)
        if (kind != "language_concept" or lc is None
                or lc.interlingual_id != interlingual.id
                or lc.language_id != lang.id):
            _conflict(cid, "language concept content")
        return
    lc = store.language_concept_for(lang, interlingual)
    if lc is not None:
        if lc.stable_id not in (None, cid):
            _conflict(cid, "language concept identity")
    else:
        lc = store._get_or_create_language_concept(
            lang, interlingual, rec.get("gloss"), rec.get("pos", "noun"))
    lc.stable_id = cid
    _register(store, cid, "language_concept", lc.id)


def _import_local_concept(store, rec):
    cid = rec["id"]
    existing = store.stable_ids.get(cid)
    parent_kind, parent_id = store.stable_ids[rec["parent"]]
    if existing is not None:
        kind, obj_id = existing
        lc = store.language_concepts.get(obj_id)
        if (kind != "language_concept" or lc is None
                or lc.parent_id != parent_id or lc.interlingual_id is not None):
            _conflict(cid, "local concept content")
        return
    lc = store.add_local_concept(rec["language"], parent_id,
                                 gloss=rec.get("gloss"),
                                 pos=rec.get("pos", "noun"))
    lc.stable_id = cid
    _register(store, cid, "language_concept", lc.id)
