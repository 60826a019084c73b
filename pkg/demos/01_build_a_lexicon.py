"""Build a small multilingual lexicon by hand and poke at it.

The store has two layers: language-agnostic interlingual concepts connected
by hypernym links, and one lexicon per language. A language can realize a
concept with word senses, declare it untranslatable (a lexical gap), or hang
language-specific local concepts beneath it.
"""

from lexdiv import Store

store = Store()
store.add_language("en", "English", "trade")
store.add_language("sw", "Swahili")
store.add_language("ja", "Japanese")

# the interlingual backbone: rice and its finer forms
rice = store.add_interlingual_concept("rice")
uncooked = store.add_interlingual_concept("uncooked rice")
cooked = store.add_interlingual_concept("cooked rice")
store.add_semantic_relation(uncooked, rice, "hypernym")
store.add_semantic_relation(cooked, rice, "hypernym")

# English has one generic word; Swahili and Japanese split the meanings
store.lexicalize(rice, "en", "rice")
store.lexicalize(uncooked, "sw", "mchele")
store.lexicalize(cooked, "sw", "wali")
store.lexicalize(uncooked, "ja", "米")
store.lexicalize(cooked, "ja", "ご飯")

# ... and neither has a word for rice-in-general: an explicit gap, which is
# stronger than the concept merely missing from an incomplete lexicon
store.mark_gap(rice, "sw")
store.mark_gap(rice, "ja")

senses, is_gap = store.senses_of(rice, "sw")
print("sw words for 'rice':", [s.lemma for s in senses], "gap:", is_gap)
senses, _ = store.senses_of(uncooked, "sw")
print("sw words for 'uncooked rice':", [s.lemma for s in senses])

# a Swahili-only meaning, attached beneath the uncooked-rice concept
mchele_concept = store.language_concept_for("sw", uncooked)
pishori = store.add_local_concept("sw", mchele_concept,
                                  gloss="fine aromatic rice", lemma="pishori")
print("local concept root:",
      store.concepts[store.local_root(pishori).interlingual_id].label)

# cognates witness shared word history across languages
fr = store.add_language("fr", "French")
riz = store.lexicalize(rice, "fr", "riz")
rice_sense = store.find_lemma("en", "rice")[0]
store.add_lexical_link(rice_sense, riz, "cognate")
print("cognates of 'riz':",
      [s.lemma for s, _ in store.linked_senses(riz, "cognate")])

for code in store.language_codes():
    print(code, store.lexicon_stats(code))
