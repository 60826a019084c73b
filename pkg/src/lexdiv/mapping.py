"""Cross-lingual mapping derivation, capability models, and coverage.

Mappings relate word meanings across two languages: equivalence when both
lexicalize the same interlingual concept, untranslatability when one side
records an explicit gap, and broader/narrower when one side only has a word
for a hypernym ancestor of the other side's concept.

Capability models describe what competing database architectures can express.
A concept-pivot model with gap and broader/narrower support expresses
everything; a language-pivot model routes every mapping through one language's
lexicon, collapsing concepts that share a single pivot-language word.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import NotSubset, UnknownLanguage, UnknownRef

KINDS = ("equivalent", "broader", "narrower", "untranslatable")


def concept_key(interlingual_id):
    return f"i{interlingual_id}"


def local_key(language_concept_id):
    return f"l{language_concept_id}"


def is_local_key(key):
    return key.startswith("l")


def key_id(key):
    return int(key[1:])


@dataclass(frozen=True, order=True)
class Endpoint:
    """One side of a mapping relation: a concept as seen from one language.

    ``concept`` is "i<id>" for an interlingual concept or "l<id>" for a local
    language concept; ``is_gap`` marks an untranslatability target.
    """
    language: str
    concept: str
    is_gap: bool = False


@dataclass(frozen=True, order=True)
class MappingRelation:
    kind: str
    source: Endpoint
    target: Endpoint

    def canonical(self):
        """Normalize so broader(a,b) and narrower(b,a) compare equal."""
        if self.kind == "narrower":
            return MappingRelation("broader", self.target, self.source)
        if self.kind == "equivalent" and self.target < self.source:
            return MappingRelation("equivalent", self.target, self.source)
        return self

    def invert(self):
        """The same assertion written from the other language's viewpoint."""
        if self.kind == "equivalent":
            return MappingRelation("equivalent", self.target, self.source)
        if self.kind == "broader":
            return MappingRelation("narrower", self.target, self.source)
        if self.kind == "narrower":
            return MappingRelation("broader", self.target, self.source)
        return self

    @property
    def languages(self):
        return (self.source.language, self.target.language)


class MappingSet:
    """Duplicate-free set of mapping relations, closed under the
    broader/narrower symmetry (relations are stored in canonical form)."""

    def __init__(self, relations=(), languages=()):
        canon = set()
        for r in relations:
            if r.kind not in KINDS:
                raise UnknownRef(f"unknown mapping kind {r.kind!r}")
            if r.source.language == r.target.language:
                raise UnknownRef("mapping endpoints share a language")
            if r.kind == "untranslatable" and not r.target.is_gap:
                raise UnknownRef("untranslatable relations must target a gap")
            canon.add(r.canonical())
        self._relations = frozenset(canon)
        langs = set(languages)
        for r in canon:
            langs.update(r.languages)
        self.languages = tuple(sorted(langs))

    def __len__(self):
        return len(self._relations)

    def __iter__(self):
        return iter(sorted(self._relations))

    def __contains__(self, relation):
        return relation.canonical() in self._relations

    def __eq__(self, other):
        return (isinstance(other, MappingSet)
                and self._relations == other._relations)

    def __hash__(self):
        return hash(self._relations)

    def issubset(self, other):
        return self._relations <= other._relations

    def union(self, other):
        return MappingSet(self._relations | other._relations,
                          set(self.languages) | set(other.languages))

    def restrict(self, keep):
        return MappingSet((r for r in self._relations if keep(r)),
                          self.languages)


@dataclass(frozen=True)
class ModelCapability:
    pivot: Optional[str] = None  # language code, or None for concept pivot
    supports_gaps: bool = True
    supports_broader_narrower: bool = True
    supports_local_concepts: bool = True

    @property
    def is_concept_pivot(self):
        return self.pivot is None


FULL_CAPABILITY = ModelCapability()
NO_GAP_CAPABILITY = ModelCapability(supports_gaps=False)
NO_BN_CAPABILITY = ModelCapability(supports_broader_narrower=False)


def pivot_capability(language_code):
    """A wordnet-style model whose pivot meanings are one language's words."""
    return ModelCapability(pivot=language_code, supports_gaps=False,
                           supports_broader_narrower=False,
                           supports_local_concepts=False)


@dataclass
class CoverageReport:
    per_language: dict
    overall: float
    counts: dict  # language -> (expressible, gold)
    overall_counts: tuple


def _nearest_lexicalized_ancestors(store, concept_id, lang, include_self):
    """Interlingual ancestors lexicalized in ``lang`` at minimal hypernym
    distance from ``concept_id``; also returns that distance."""
    start = 0 if include_self else 1
    dist = {concept_id: 0}
    level = [concept_id]
    d = 0
    while level:
        if d >= start:
            hits = sorted(c for c in level if store.is_lexicalized(lang, c))
            if hits:
                return hits, d
        nxt = []
        for node in level:
            for parent in store._hyper_parents[node]:
                if parent not in dist:
                    dist[parent] = d + 1
                    nxt.append(parent)
        level = nxt
        d += 1
    return [], None


def derive_mappings(store, lang_a, lang_b):
    """All mapping relations between two languages implied by the store."""
    a = store.language(lang_a)
    b = store.language(lang_b)
    relations = []
    for cid in sorted(store.concepts):
        key = concept_key(cid)
        a_lex = store.is_lexicalized(a.id, cid)
        b_lex = store.is_lexicalized(b.id, cid)
        a_gap = store.has_gap(a.id, cid)
        b_gap = store.has_gap(b.id, cid)
        if a_lex and b_lex:
            relations.append(MappingRelation(
                "equivalent", Endpoint(a.code, key), Endpoint(b.code, key)))
        if a_lex and b_gap:
            relations.append(MappingRelation(
                "untranslatable", Endpoint(a.code, key),
                Endpoint(b.code, key, is_gap=True)))
        if b_lex and a_gap:
            relations.append(MappingRelation(
                "untranslatable", Endpoint(b.code, key),
                Endpoint(a.code, key, is_gap=True)))
        if b_lex and not a_lex:
            ancestors, _ = _nearest_lexicalized_ancestors(
                store, cid, a.id, include_self=False)
            for anc in ancestors:
                if not store.is_lexicalized(b.id, anc):
                    relations.append(MappingRelation(
                        "broader", Endpoint(a.code, concept_key(anc)),
                        Endpoint(b.code, key)))
        if a_lex and not b_lex:
            ancestors, _ = _nearest_lexicalized_ancestors(
                store, cid, b.id, include_self=False)
            for anc in ancestors:
                if not store.is_lexicalized(a.id, anc):
                    relations.append(MappingRelation(
                        "narrower", Endpoint(a.code, key),
                        Endpoint(b.code, concept_key(anc))))
    # local concepts hang beneath their interlingual root and are, by
    # construction, narrower than the other language's word for that root
    for this, other in ((a, b), (b, a)):
        for lc in store.local_concepts_of(this.id):
            root = store.local_root(lc)
            ancestors, _ = _nearest_lexicalized_ancestors(
                store, root.interlingual_id, other.id, include_self=True)
            for anc in ancestors:
                relations.append(MappingRelation(
                    "broader", Endpoint(other.code, concept_key(anc)),
                    Endpoint(this.code, local_key(lc.id))))
    return MappingSet(relations, languages=(a.code, b.code))


def derive_gold(store, language_codes):
    """Union of pairwise derived mappings over a set of languages."""
    codes = sorted(language_codes)
    if len(codes) < 2:
        raise UnknownLanguage("need at least two languages")
    gold = MappingSet(languages=codes)
    for i, x in enumerate(codes):
        for y in codes[i + 1:]:
            gold = gold.union(derive_mappings(store, x, y))
    return gold


def _endpoint_interlingual(store, endpoint):
    """The interlingual concept behind an endpoint (a local concept's root)."""
    if is_local_key(endpoint.concept):
        lc = store._resolve_language_concept(key_id(endpoint.concept))
        return store.local_root(lc).interlingual_id
    cid = key_id(endpoint.concept)
    store._resolve_concept(cid)
    return cid


def _project(store, endpoint, pivot_lang):
    """Nearest pivot-lexicalized self-or-ancestor concepts of an endpoint.

    Returns ``(frozenset of concept ids, distance)`` or ``(None, None)`` when
    the pivot language has no word anywhere above the concept.
    """
    cid = _endpoint_interlingual(store, endpoint)
    extra = 1 if is_local_key(endpoint.concept) else 0
    hits, d = _nearest_lexicalized_ancestors(store, cid, pivot_lang,
                                             include_self=True)
    if not hits:
        return None, None
    return frozenset(hits), d + extra


def apply_capability(gold, cap, store):
    """The subset of a gold mapping set a capability model can express."""
    survivors = []
    for r in gold:
        if r.kind == "untranslatable" and not cap.supports_gaps:
            continue
        if r.kind in ("broader", "narrower") and not cap.supports_broader_narrower:
            continue
        touches_local = (is_local_key(r.source.concept)
                         or is_local_key(r.target.concept))
        if touches_local and not cap.supports_local_concepts:
            continue
        # referential check against the store
        _endpoint_interlingual(store, r.source)
        _endpoint_interlingual(store, r.target)
        survivors.append(r)
    if cap.is_concept_pivot:
        return MappingSet(survivors, gold.languages)

    pivot = store.language(cap.pivot)
    # Route every relation through the pivot language's lexicon: concepts with
    # no pivot word above them are inexpressible; relations whose endpoints
    # become indistinguishable after projection collapse to a single survivor.
    projected = []
    for r in survivors:
        ps, ds = _project(store, r.source, pivot.id)
        pt, dt = _project(store, r.target, pivot.id)
        if ps is None or pt is None:
            continue
        shape = (r.kind, r.source.language, r.target.language,
                 r.target.is_gap, ps, pt)
        projected.append((shape, ds + dt, r))
    groups = {}
    for shape, dist, r in projected:
        groups.setdefault(shape, []).append((dist, r))
    kept = []
    for bucket in groups.values():
        bucket.sort(key=lambda item: (item[0], item[1]))
        kept.append(bucket[0][1])
    return MappingSet(kept, gold.languages)


def coverage(expressible, gold):
    """Per-language and overall recall of gold mappings by an expressible set."""
    if not expressible.issubset(gold):
        raise NotSubset("expressible relations must be a subset of the gold set")
    langs = gold.languages or expressible.languages
    per_language = {}
    counts = {}
    for lang in langs:
        total = sum(1 for r in gold if lang in r.languages)
        kept = sum(1 for r in expressible if lang in r.languages)
        counts[lang] = (kept, total)
        per_language[lang] = kept / total if total else 1.0
    overall = len(expressible) / len(gold) if len(gold) else 1.0
    return CoverageReport(per_language=per_language, overall=overall,
                          counts=counts,
                          overall_counts=(len(expressible), len(gold)))
