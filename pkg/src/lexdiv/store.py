"""In-memory diversity-aware lexical database.

The store keeps one language-agnostic layer of interlingual concepts connected
by hypernym/meronym relations, and one lexicon per language.  A lexicon holds
language concepts (interlingua-linked or local), word senses, explicit lexical
gaps, and lexical links (cognates across languages, derivation/antonymy/
metonymy within a language).

All identifiers are store-assigned, monotonically increasing integers.  A
single re-entrant lock serializes mutations; reads taken under the same lock
always observe a consistent state, so the store is safe to share between
threads (single-writer / multi-reader discipline is the caller's choice of
granularity).
"""

import re
import threading
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    CrossLanguageParent,
    CycleError,
    DuplicateCode,
    DuplicateGap,
    DuplicateRelation,
    DuplicateSense,
    GapConflict,
    LanguageMismatch,
    MalformedCode,
    SelfLink,
    SelfLoop,
    SenseConflict,
    UnknownLanguage,
    UnknownRef,
    UnrootedLocal,
)

LANGUAGE_ROLES = ("trade", "local")
POS_TAGS = ("noun", "verb", "adjective", "adverb", "other")
SEMANTIC_KINDS = ("hypernym", "meronym")
LEXICAL_KINDS = ("cognate", "derivation", "antonym", "metonym")
SYMMETRIC_LEXICAL_KINDS = ("cognate", "antonym")

_CODE_RE = re.compile(r"^[a-z][a-z0-9]*(-[A-Za-z0-9]+)*$")


@dataclass
class Language:
    id: int
    code: str
    name: str
    role: str = "local"
    provenance: Optional[dict] = None
    stable_id: Optional[str] = None


@dataclass
class InterlingualConcept:
    id: int
    label: Optional[str] = None
    stable_id: Optional[str] = None


@dataclass
class LanguageConcept:
    id: int
    language_id: int
    interlingual_id: Optional[int] = None
    parent_id: Optional[int] = None  # local-hierarchy parent, same language
    gloss: Optional[str] = None
    pos: str = "noun"
    stable_id: Optional[str] = None

    @property
    def is_local(self):
        return self.interlingual_id is None


@dataclass
class WordSense:
    id: int
    language_id: int
    concept_id: int
    lemma: str
    stable_id: Optional[str] = None


@dataclass(frozen=True)
class LexicalLink:
    source_id: int
    target_id: int
    kind: str


@dataclass
class LexiconStats:
    language: str
    concepts: int = 0
    local_concepts: int = 0
    senses: int = 0
    gaps: int = 0


class Store:
    def __init__(self):
        self._lock = threading.RLock()
        self._next_id = 1
        self.provenance = None

        self.languages = {}          # id -> Language
        self._lang_by_code = {}      # code -> id

        self.concepts = {}           # id -> InterlingualConcept
        self._hyper_parents = {}     # concept id -> set of parent concept ids
        self._hyper_children = {}
        self._mero_wholes = {}       # part concept id -> set of whole ids
        self._mero_parts = {}

        self.language_concepts = {}  # id -> LanguageConcept
        self._lc_by_pair = {}        # (language_id, interlingual_id) -> lc id
        self._locals_by_language = {}  # language_id -> set of local lc ids
        self._local_children = {}    # lc id -> set of child lc ids

        self.gaps = set()            # (language_id, interlingual_id)

        self.senses = {}             # id -> WordSense
        self._sense_keys = set()     # (language_id, lemma, concept_id)
        self._senses_by_concept = {}  # lc id -> list of sense ids

        self.lexical_links = set()   # LexicalLink, symmetric kinds canonical
        self._links_by_sense = {}    # sense id -> set of LexicalLink

        self.stable_ids = {}         # exchange-format id -> (kind, store id)

    # -- id plumbing --------------------------------------------------------

    def _new_id(self):
        nid = self._next_id
        self._next_id += 1
        return nid

    def _resolve_language(self, lang):
        if isinstance(lang, Language):
            lang = lang.id
        if isinstance(lang, str):
            lid = self._lang_by_code.get(lang)
            if lid is None:
                raise UnknownLanguage(f"unknown language {lang!r}")
            return self.languages[lid]
        if lang not in self.languages:
            raise UnknownLanguage(f"unknown language id {lang!r}")
        return self.languages[lang]

    def _resolve_concept(self, concept):
        if isinstance(concept, InterlingualConcept):
            concept = concept.id
        if concept not in self.concepts:
            raise UnknownRef(f"unknown interlingual concept {concept!r}")
        return self.concepts[concept]

    def _resolve_language_concept(self, lc):
        if isinstance(lc, LanguageConcept):
            lc = lc.id
        if lc not in self.language_concepts:
            raise UnknownRef(f"unknown language concept {lc!r}")
        return self.language_concepts[lc]

    def _resolve_sense(self, sense):
        if isinstance(sense, WordSense):
            sense = sense.id
        if sense not in self.senses:
            raise UnknownRef(f"unknown word sense {sense!r}")
        return self.senses[sense]

    # -- mutations ----------------------------------------------------------

    def add_language(self, code, name, role="local", provenance=None):
        with self._lock:
            if not code or not _CODE_RE.match(code):
                raise MalformedCode(f"malformed language code {code!r}")
            if role not in LANGUAGE_ROLES:
                raise MalformedCode(f"unknown language role {role!r}")
            if code in self._lang_by_code:
                raise DuplicateCode(f"language code {code!r} already registered")
            lang = Language(self._new_id(), code, name, role, provenance)
            self.languages[lang.id] = lang
            self._lang_by_code[code] = lang.id
            self._locals_by_language[lang.id] = set()
            return lang

    def add_interlingual_concept(self, label=None):
        with self._lock:
            concept = InterlingualConcept(self._new_id(), label)
            self.concepts[concept.id] = concept
            self._hyper_parents[concept.id] = set()
            self._hyper_children[concept.id] = set()
            self._mero_wholes[concept.id] = set()
            self._mero_parts[concept.id] = set()
            return concept

    def relabel(self, concept, label):
        with self._lock:
            self._resolve_concept(concept).label = label

    def add_semantic_relation(self, source, target, kind):
        """Add ``source --kind--> target``; for hypernym, target is broader."""
        with self._lock:
            if kind not in SEMANTIC_KINDS:
                raise UnknownRef(f"unknown semantic relation kind {kind!r}")
            src = self._resolve_concept(source)
            tgt = self._resolve_concept(target)
            if src.id == tgt.id:
                raise SelfLoop(f"self relation on concept {src.id}")
            if kind == "hypernym":
                if tgt.id in self._hyper_parents[src.id]:
                    raise DuplicateRelation("hypernym relation already present")
                # src -> tgt closes a cycle iff src is already above tgt
                if src.id in self.hypernym_ancestors(tgt.id):
                    raise CycleError(
                        f"hypernym {src.id}->{tgt.id} would create a cycle")
                self._hyper_parents[src.id].add(tgt.id)
                self._hyper_children[tgt.id].add(src.id)
            else:
                if tgt.id in self._mero_wholes[src.id]:
                    raise DuplicateRelation("meronym relation already present")
                self._mero_wholes[src.id].add(tgt.id)
                self._mero_parts[tgt.id].add(src.id)

    def _get_or_create_language_concept(self, language, interlingual,
                                        gloss=None, pos="noun"):
        key = (language.id, interlingual.id)
        lc_id = self._lc_by_pair.get(key)
        if lc_id is not None:
            return self.language_concepts[lc_id]
        if pos not in POS_TAGS:
            raise UnknownRef(f"unknown part of speech {pos!r}")
        lc = LanguageConcept(self._new_id(), language.id, interlingual.id,
                             gloss=gloss, pos=pos)
        self.language_concepts[lc.id] = lc
        self._lc_by_pair[key] = lc.id
        self._senses_by_concept[lc.id] = []
        return lc

    def lexicalize(self, interlingual, language, lemma, pos="noun", gloss=None):
        with self._lock:
            lang = self._resolve_language(language)
            concept = self._resolve_concept(interlingual)
            if (lang.id, concept.id) in self.gaps:
                raise GapConflict(
                    f"({lang.code}, concept {concept.id}) is marked as a gap")
            lc = self._get_or_create_language_concept(lang, concept, gloss, pos)
            return self._attach_sense(lc, lemma)

    def add_sense(self, concept, lemma):
        """Attach an additional sense to an existing language concept."""
        with self._lock:
            lc = self._resolve_language_concept(concept)
            return self._attach_sense(lc, lemma)

    def _attach_sense(self, lc, lemma):
        if not lemma:
            raise DuplicateSense("empty lemma")
        key = (lc.language_id, lemma, lc.id)
        if key in self._sense_keys:
            raise DuplicateSense(
                f"sense {lemma!r} already attached to concept {lc.id}")
        sense = WordSense(self._new_id(), lc.language_id, lc.id, lemma)
        self.senses[sense.id] = sense
        self._sense_keys.add(key)
        self._senses_by_concept[lc.id].append(sense.id)
        self._links_by_sense[sense.id] = set()
        return sense

    def mark_gap(self, interlingual, language):
        with self._lock:
            lang = self._resolve_language(language)
            concept = self._resolve_concept(interlingual)
            key = (lang.id, concept.id)
            if key in self._lc_by_pair:
                raise SenseConflict(
                    f"({lang.code}, concept {concept.id}) is already lexicalized")
            if key in self.gaps:
                raise DuplicateGap(
                    f"gap already recorded for ({lang.code}, {concept.id})")
            self.gaps.add(key)

    def add_local_concept(self, language, parent, gloss=None, lemma=None,
                          pos="noun"):
        with self._lock:
            lang = self._resolve_language(language)
            parent_lc = self._resolve_language_concept(parent)
            if parent_lc.language_id != lang.id:
                raise CrossLanguageParent(
                    f"parent concept {parent_lc.id} belongs to another language")
            self._check_rooted(parent_lc)
            if pos not in POS_TAGS:
                raise UnknownRef(f"unknown part of speech {pos!r}")
            lc = LanguageConcept(self._new_id(), lang.id, None,
                                 parent_id=parent_lc.id, gloss=gloss, pos=pos)
            self.language_concepts[lc.id] = lc
            self._locals_by_language[lang.id].add(lc.id)
            self._local_children.setdefault(parent_lc.id, set()).add(lc.id)
            self._senses_by_concept[lc.id] = []
            if lemma:
                self._attach_sense(lc, lemma)
            return lc

    def _check_rooted(self, lc):
        seen = set()
        node = lc
        while node.interlingual_id is None:
            if node.id in seen:
                raise CycleError(f"local parent cycle at concept {node.id}")
            seen.add(node.id)
            if node.parent_id is None:
                raise UnrootedLocal(
                    f"local concept {lc.id} never reaches the interlingua")
            node = self.language_concepts[node.parent_id]
        return node

    def add_lexical_link(self, source, target, kind):
        with self._lock:
            if kind not in LEXICAL_KINDS:
                raise UnknownRef(f"unknown lexical link kind {kind!r}")
            src = self._resolve_sense(source)
            tgt = self._resolve_sense(target)
            if src.id == tgt.id:
                raise SelfLink(f"self link on sense {src.id}")
            if kind == "cognate":
                if src.language_id == tgt.language_id:
                    raise LanguageMismatch("cognates must cross languages")
            elif src.language_id != tgt.language_id:
                raise LanguageMismatch(f"{kind} links must stay in one language")
            a, b = src.id, tgt.id
            if kind in SYMMETRIC_LEXICAL_KINDS and a > b:
                a, b = b, a
            link = LexicalLink(a, b, kind)
            if link in self.lexical_links:
                raise DuplicateRelation(f"{kind} link already present")
            self.lexical_links.add(link)
            self._links_by_sense[src.id].add(link)
            self._links_by_sense[tgt.id].add(link)
            return link

    # -- reads --------------------------------------------------------------

    def language(self, code):
        with self._lock:
            return self._resolve_language(code)

    def language_codes(self):
        with self._lock:
            return sorted(self._lang_by_code)

    def hypernym_ancestors(self, concept):
        """All strict ancestors of a concept in the hypernym DAG, sorted."""
        with self._lock:
            c = self._resolve_concept(concept)
            out = set()
            frontier = [c.id]
            while frontier:
                node = frontier.pop()
                for parent in self._hyper_parents[node]:
                    if parent not in out:
                        out.add(parent)
                        frontier.append(parent)
            return sorted(out)

    def hypernym_parents(self, concept):
        with self._lock:
            return sorted(self._hyper_parents[self._resolve_concept(concept).id])

    def hypernym_children(self, concept):
        with self._lock:
            return sorted(self._hyper_children[self._resolve_concept(concept).id])

    def language_concept_for(self, language, interlingual):
        with self._lock:
            lang = self._resolve_language(language)
            concept = self._resolve_concept(interlingual)
            lc_id = self._lc_by_pair.get((lang.id, concept.id))
            return self.language_concepts[lc_id] if lc_id is not None else None

    def is_lexicalized(self, language, interlingual):
        return self.language_concept_for(language, interlingual) is not None

    def has_gap(self, language, interlingual):
        with self._lock:
            lang = self._resolve_language(language)
            concept = self._resolve_concept(interlingual)
            return (lang.id, concept.id) in self.gaps

    def senses_of(self, interlingual, language):
        """Senses realizing an interlingual concept in a language.

        Returns ``(senses, is_gap)``; an empty list with the gap flag set means
        the language explicitly has no word for the concept.
        """
        with self._lock:
            lang = self._resolve_language(language)
            concept = self._resolve_concept(interlingual)
            if (lang.id, concept.id) in self.gaps:
                return [], True
            lc_id = self._lc_by_pair.get((lang.id, concept.id))
            if lc_id is None:
                return [], False
            senses = [self.senses[s] for s in sorted(self._senses_by_concept[lc_id])]
            return senses, False

    def senses_of_concept(self, lc):
        with self._lock:
            lc = self._resolve_language_concept(lc)
            return [self.senses[s] for s in sorted(self._senses_by_concept[lc.id])]

    def concept_of(self, sense):
        with self._lock:
            return self.language_concepts[self._resolve_sense(sense).concept_id]

    def gaps_of(self, language):
        """Interlingual concept ids a language explicitly cannot translate."""
        with self._lock:
            lang = self._resolve_language(language)
            return sorted(c for (l, c) in self.gaps if l == lang.id)

    def local_concepts_of(self, language):
        with self._lock:
            lang = self._resolve_language(language)
            return [self.language_concepts[i]
                    for i in sorted(self._locals_by_language[lang.id])]

    def local_children(self, lc):
        with self._lock:
            lc = self._resolve_language_concept(lc)
            return [self.language_concepts[i]
                    for i in sorted(self._local_children.get(lc.id, ()))]

    def local_root(self, lc):
        """The interlingua-linked concept a local concept hangs beneath."""
        with self._lock:
            lc = self._resolve_language_concept(lc)
            return self._check_rooted(lc)

    def find_lemma(self, language, lemma):
        with self._lock:
            lang = self._resolve_language(language)
            return sorted(
                (s for s in self.senses.values()
                 if s.language_id == lang.id and s.lemma == lemma),
                key=lambda s: s.id)

    def linked_senses(self, sense, kind=None):
        """Senses linked to the given one; symmetric kinds answer both ways."""
        with self._lock:
            s = self._resolve_sense(sense)
            out = []
            for link in self._links_by_sense.get(s.id, ()):
                if kind is not None and link.kind != kind:
                    continue
                if link.source_id == s.id:
                    out.append((self.senses[link.target_id], link.kind))
                elif link.kind in SYMMETRIC_LEXICAL_KINDS:
                    out.append((self.senses[link.source_id], link.kind))
            return sorted(out, key=lambda pair: (pair[0].id, pair[1]))

    def lexicon_stats(self, language):
        with self._lock:
            lang = self._resolve_language(language)
            stats = LexiconStats(language=lang.code)
            for lc in self.language_concepts.values():
                if lc.language_id != lang.id:
                    continue
                if lc.is_local:
                    stats.local_concepts += 1
                else:
                    stats.concepts += 1
                stats.senses += len(self._senses_by_concept[lc.id])
            stats.gaps = sum(1 for (l, _) in self.gaps if l == lang.id)
            return stats

    def lexicalized_concepts(self, language):
        """Interlingual concept ids lexicalized in a language, sorted."""
        with self._lock:
            lang = self._resolve_language(language)
            return sorted(c for (l, c) in self._lc_by_pair if l == lang.id)

    def semantic_relations(self):
        with self._lock:
            out = []
            for src in sorted(self._hyper_parents):
                for tgt in sorted(self._hyper_parents[src]):
                    out.append((src, tgt, "hypernym"))
            for src in sorted(self._mero_wholes):
                for tgt in sorted(self._mero_wholes[src]):
                    out.append((src, tgt, "meronym"))
            return out

    def query(self, request, **args):
        """Generic read dispatcher used by the service layer."""
        handlers = {
            "senses_of": lambda: self.senses_of(args["concept"], args["language"]),
            "concept_of": lambda: self.concept_of(args["sense"]),
            "gaps_of": lambda: self.gaps_of(args["language"]),
            "hypernym_ancestors": lambda: self.hypernym_ancestors(args["concept"]),
            "lexicon_stats": lambda: self.lexicon_stats(args["language"]),
            "find_lemma": lambda: self.find_lemma(args["language"], args["lemma"]),
        }
        if request not in handlers:
            raise UnknownRef(f"unknown query {request!r}")
        return handlers[request]()
