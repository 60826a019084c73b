import random

import pytest

from lexdiv import errors
from lexdiv.store import Store

from conftest import has_cycle, hypernym_edges, reachable


@pytest.fixture
def store():
    return Store()


class TestLanguages:
    def test_first_insert(self, store):
        lang = store.add_language("sw", "Swahili", "local")
        assert lang.code == "sw"
        assert store.language_codes() == ["sw"]

    def test_duplicate_code(self, store):
        store.add_language("sw", "Swahili")
        with pytest.raises(errors.DuplicateCode):
            store.add_language("sw", "Swahili again")

    def test_two_trade_languages_allowed(self, store):
        store.add_language("de", "German", "trade")
        store.add_language("it", "Italian", "trade")
        assert sum(1 for l in store.languages.values()
                   if l.role == "trade") == 2

    @pytest.mark.parametrize("bad", ["", "SW", "1sw", "sw ", "sw_KE"])
    def test_malformed_codes(self, store, bad):
        with pytest.raises(errors.MalformedCode):
            store.add_language(bad, "nope")

    def test_region_subtag_ok(self, store):
        store.add_language("pt-BR", "Brazilian Portuguese")


class TestInterlingualConcepts:
    def test_label_optional(self, store):
        a = store.add_interlingual_concept("rice")
        b = store.add_interlingual_concept()
        assert a.label == "rice" and b.label is None

    def test_bulk_insert_count(self, store):
        for _ in range(111_000):
            store.add_interlingual_concept()
        assert len(store.concepts) == 111_000

    def test_relabel_changes_nothing_else(self, store):
        rice = store.add_interlingual_concept("rice")
        cooked = store.add_interlingual_concept("cooked rice")
        store.add_semantic_relation(cooked, rice, "hypernym")
        store.add_language("fr", "French")
        store.lexicalize(rice, "fr", "riz")
        before = (store.hypernym_ancestors(cooked),
                  [s.lemma for s in store.senses_of(rice, "fr")[0]])
        store.relabel(rice, "renamed")
        after = (store.hypernym_ancestors(cooked),
                 [s.lemma for s in store.senses_of(rice, "fr")[0]])
        assert before == after
        assert store.concepts[rice.id].label == "renamed"


class TestSemanticRelations:
    def test_hypernym_chain(self, store):
        rice = store.add_interlingual_concept("rice")
        cooked = store.add_interlingual_concept("cooked rice")
        store.add_semantic_relation(cooked, rice, "hypernym")
        assert store.hypernym_ancestors(cooked) == [rice.id]

    def test_self_loop(self, store):
        rice = store.add_interlingual_concept("rice")
        with pytest.raises(errors.SelfLoop):
            store.add_semantic_relation(rice, rice, "hypernym")

    def test_cycle_detected(self, store):
        a, b, c = (store.add_interlingual_concept(x) for x in "abc")
        store.add_semantic_relation(a, b, "hypernym")
        store.add_semantic_relation(b, c, "hypernym")
        # the path-search oracle agrees the edge would close a loop
        assert reachable(hypernym_edges(store), a.id, c.id)
        with pytest.raises(errors.CycleError):
            store.add_semantic_relation(c, a, "hypernym")

    def test_duplicate_edge(self, store):
        a, b = store.add_interlingual_concept(), store.add_interlingual_concept()
        store.add_semantic_relation(a, b, "hypernym")
        with pytest.raises(errors.DuplicateRelation):
            store.add_semantic_relation(a, b, "hypernym")

    def test_multiple_parents_allowed(self, store):
        a, b, c = (store.add_interlingual_concept(x) for x in "abc")
        store.add_semantic_relation(c, a, "hypernym")
        store.add_semantic_relation(c, b, "hypernym")
        assert store.hypernym_ancestors(c) == sorted([a.id, b.id])

    def test_meronym_cycles_not_enforced(self, store):
        a, b = store.add_interlingual_concept(), store.add_interlingual_concept()
        store.add_semantic_relation(a, b, "meronym")
        store.add_semantic_relation(b, a, "meronym")  # allowed by design


class TestLexicalization:
    def test_french_rice(self, store):
        store.add_language("fr", "French")
        rice = store.add_interlingual_concept("rice")
        sense = store.lexicalize(rice, "fr", "riz")
        assert sense.lemma == "riz"
        senses, is_gap = store.senses_of(rice, "fr")
        assert [s.id for s in senses] == [sense.id] and not is_gap

    def test_gap_blocks_lexicalization(self, store):
        store.add_language("sw", "Swahili")
        rice = store.add_interlingual_concept("rice")
        store.mark_gap(rice, "sw")
        with pytest.raises(errors.GapConflict):
            store.lexicalize(rice, "sw", "mchele")

    def test_lexicalization_blocks_gap(self, store):
        store.add_language("sw", "Swahili")
        uncooked = store.add_interlingual_concept("uncooked rice")
        store.lexicalize(uncooked, "sw", "mchele")
        with pytest.raises(errors.SenseConflict):
            store.mark_gap(uncooked, "sw")

    def test_duplicate_gap(self, store):
        store.add_language("sw", "Swahili")
        rice = store.add_interlingual_concept("rice")
        store.mark_gap(rice, "sw")
        with pytest.raises(errors.DuplicateGap):
            store.mark_gap(rice, "sw")

    def test_duplicate_sense(self, store):
        store.add_language("sw", "Swahili")
        rice = store.add_interlingual_concept()
        store.lexicalize(rice, "sw", "mchele")
        with pytest.raises(errors.DuplicateSense):
            store.lexicalize(rice, "sw", "mchele")

    def test_synonyms_share_one_concept(self, store):
        store.add_language("en", "English")
        concept = store.add_interlingual_concept()
        s1 = store.lexicalize(concept, "en", "couch")
        s2 = store.lexicalize(concept, "en", "sofa")
        assert s1.concept_id == s2.concept_id

    def test_gap_query_flag(self, store):
        store.add_language("sw", "Swahili")
        rice = store.add_interlingual_concept("rice")
        store.mark_gap(rice, "sw")
        senses, is_gap = store.senses_of(rice, "sw")
        assert senses == [] and is_gap
        assert store.gaps_of("sw") == [rice.id]

    def test_bulk_gap_load(self, store):
        codes = [f"lg{i}" for i in range(9)]
        for code in codes:
            store.add_language(code, code)
        concepts = [store.add_interlingual_concept() for _ in range(20)]
        count = 0
        for concept in concepts:
            for code in codes:
                if count >= 128:
                    break
                store.mark_gap(concept, code)
                count += 1
        assert sum(store.lexicon_stats(code).gaps for code in codes) == 128


class TestLocalConcepts:
    def make_parent(self, store):
        store.add_language("ja", "Japanese")
        uncooked = store.add_interlingual_concept("uncooked rice")
        store.lexicalize(uncooked, "ja", "米")
        return store.language_concept_for("ja", uncooked)

    def test_local_under_interlingua_linked_parent(self, store):
        parent = self.make_parent(store)
        local = store.add_local_concept("ja", parent,
                                        gloss="raw brown rice", lemma="玄米")
        assert local.is_local
        assert store.local_root(local).id == parent.id
        assert [s.lemma for s in store.senses_of_concept(local)] == ["玄米"]

    def test_cross_language_parent(self, store):
        parent = self.make_parent(store)
        store.add_language("sw", "Swahili")
        with pytest.raises(errors.CrossLanguageParent):
            store.add_local_concept("sw", parent, lemma="x")

    def test_two_level_chain_rooted(self, store):
        parent = self.make_parent(store)
        lvl1 = store.add_local_concept("ja", parent, gloss="raw brown rice")
        lvl2 = store.add_local_concept("ja", lvl1,
                                       gloss="raw short grain brown rice")
        # walk the chain by hand: it must end at an interlingua-linked node
        node, steps = lvl2, 0
        while node.interlingual_id is None:
            node = store.language_concepts[node.parent_id]
            steps += 1
            assert steps <= len(store.language_concepts)
        assert node.id == parent.id


class TestLexicalLinks:
    def setup_senses(self, store):
        store.add_language("fr", "French")
        store.add_language("it", "Italian")
        rice = store.add_interlingual_concept("rice")
        riz = store.lexicalize(rice, "fr", "riz")
        riso = store.lexicalize(rice, "it", "riso")
        return riz, riso

    def test_cognate_both_directions(self, store):
        riz, riso = self.setup_senses(store)
        store.add_lexical_link(riz, riso, "cognate")
        assert [(s.id, k) for s, k in store.linked_senses(riz)] == [
            (riso.id, "cognate")]
        assert [(s.id, k) for s, k in store.linked_senses(riso)] == [
            (riz.id, "cognate")]

    def test_cognate_needs_two_languages(self, store):
        _, riso = self.setup_senses(store)
        paddy = store.add_interlingual_concept("rice in the husk")
        risone = store.lexicalize(paddy, "it", "risone")
        with pytest.raises(errors.LanguageMismatch):
            store.add_lexical_link(riso, risone, "cognate")
        store.add_lexical_link(riso, risone, "derivation")

    def test_derivation_is_directed(self, store):
        _, riso = self.setup_senses(store)
        paddy = store.add_interlingual_concept()
        risone = store.lexicalize(paddy, "it", "risone")
        store.add_lexical_link(riso, risone, "derivation")
        assert store.linked_senses(risone, "derivation") == []
        assert [s.id for s, _ in store.linked_senses(riso, "derivation")] == [
            risone.id]

    def test_derivation_cross_language_rejected(self, store):
        riz, riso = self.setup_senses(store)
        with pytest.raises(errors.LanguageMismatch):
            store.add_lexical_link(riz, riso, "derivation")

    def test_self_link(self, store):
        riz, _ = self.setup_senses(store)
        with pytest.raises(errors.SelfLink):
            store.add_lexical_link(riz, riz, "antonym")

    def test_symmetric_duplicate_rejected(self, store):
        riz, riso = self.setup_senses(store)
        store.add_lexical_link(riz, riso, "cognate")
        with pytest.raises(errors.DuplicateRelation):
            store.add_lexical_link(riso, riz, "cognate")


class TestQueries:
    def test_unknown_refs(self, store):
        with pytest.raises(errors.UnknownLanguage):
            store.senses_of(1, "xx")
        store.add_language("fr", "French")
        with pytest.raises(errors.UnknownRef):
            store.senses_of(99, "fr")

    def test_query_dispatcher(self, rice_kinship):
        store, c = rice_kinship
        senses, is_gap = store.query("senses_of", concept=c["rice"],
                                     language="sw")
        assert senses == [] and is_gap
        assert store.query("hypernym_ancestors",
                           concept=c["cooked_rice"]) == sorted(
            [c["rice"].id, c["food"].id])

    def test_reads_are_pure(self, rice_kinship):
        store, c = rice_kinship
        first = store.query("find_lemma", language="sw", lemma="mchele")
        second = store.query("find_lemma", language="sw", lemma="mchele")
        assert first == second

    def test_stats_match_recount(self, rice_kinship):
        store, _ = rice_kinship
        for code in store.language_codes():
            lang = store.language(code)
            stats = store.lexicon_stats(code)
            assert stats.senses == sum(
                1 for s in store.senses.values() if s.language_id == lang.id)
            assert stats.gaps == sum(
                1 for (lid, _) in store.gaps if lid == lang.id)
            assert stats.local_concepts == sum(
                1 for lc in store.language_concepts.values()
                if lc.language_id == lang.id and lc.is_local)


def check_invariants(store):
    """Independent re-verification of every structural invariant."""
    assert not has_cycle(hypernym_edges(store))
    lex_pairs = {(lc.language_id, lc.interlingual_id)
                 for lc in store.language_concepts.values()
                 if lc.interlingual_id is not None}
    assert not (lex_pairs & store.gaps)
    for lc in store.language_concepts.values():
        if lc.is_local:
            node, steps = lc, 0
            while node.interlingual_id is None:
                assert node.parent_id is not None
                node = store.language_concepts[node.parent_id]
                steps += 1
                assert steps <= len(store.language_concepts)
    for link in store.lexical_links:
        src = store.senses[link.source_id]
        tgt = store.senses[link.target_id]
        if link.kind == "cognate":
            assert src.language_id != tgt.language_id
        else:
            assert src.language_id == tgt.language_id


def test_fuzzed_mutations_preserve_invariants():
    rng = random.Random(20240817)
    store = Store()
    codes = ["aa", "bb", "cc"]
    for code in codes:
        store.add_language(code, code)
    concepts, senses, language_concepts = [], [], []
    for op in range(2000):
        action = rng.random()
        try:
            if action < 0.25 or not concepts:
                concepts.append(store.add_interlingual_concept())
            elif action < 0.45:
                a, b = rng.choice(concepts), rng.choice(concepts)
                store.add_semantic_relation(a, b, "hypernym")
            elif action < 0.65:
                sense = store.lexicalize(rng.choice(concepts),
                                         rng.choice(codes),
                                         f"w{rng.randrange(400)}")
                senses.append(sense)
                language_concepts.append(sense.concept_id)
            elif action < 0.78:
                store.mark_gap(rng.choice(concepts), rng.choice(codes))
            elif action < 0.86 and language_concepts:
                lc = store.add_local_concept(
                    store.language_concepts[
                        rng.choice(language_concepts)].language_id,
                    rng.choice(language_concepts),
                    lemma=f"loc{rng.randrange(400)}")
                language_concepts.append(lc.id)
            elif len(senses) >= 2:
                store.add_lexical_link(rng.choice(senses), rng.choice(senses),
                                       rng.choice(["cognate", "derivation",
                                                   "antonym", "metonym"]))
        except errors.LexdbError:
            pass
        if op % 100 == 99:
            check_invariants(store)
    check_invariants(store)
