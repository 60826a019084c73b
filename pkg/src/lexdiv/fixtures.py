"""Hand-built demonstration lexicons.

Two desk-scale domains known to be lexically diverse across languages: rice
terminology and kinship terms.  English is the trade language and carries only
coarse vocabulary; the other lexicons make fine-grained distinctions or record
explicit gaps, which is exactly the configuration where pivot-based database
architectures lose information.
"""

from .store import Store


def build_rice_kinship_store():
    """Six languages, two domains, generous gap coverage.

    Returns ``(store, concepts)`` where ``concepts`` maps readable names to
    interlingual concept objects.
    """
    store = Store()
    store.add_language("en", "English", "trade")
    for code, name in [("fr", "French"), ("it", "Italian"),
                       ("sw", "Swahili"), ("ja", "Japanese"),
                       ("hu", "Hungarian")]:
        store.add_language(code, name)

    c = {}

    def concept(name, label=None, parent=None):
        node = store.add_interlingual_concept(label or name.replace("_", " "))
        c[name] = node
        if parent is not None:
            store.add_semantic_relation(node, c[parent], "hypernym")
        return node

    # rice domain
    concept("food")
    concept("rice", parent="food")
    concept("uncooked_rice", parent="rice")
    concept("cooked_rice", parent="rice")
    concept("brown_rice", parent="uncooked_rice")
    concept("rice_in_husk", parent="uncooked_rice")

    store.lexicalize(c["food"], "en", "food")
    store.lexicalize(c["rice"], "en", "rice")
    store.lexicalize(c["food"], "fr", "nourriture")
    store.lexicalize(c["rice"], "fr", "riz")
    store.lexicalize(c["food"], "it", "cibo")
    store.lexicalize(c["rice"], "it", "riso")
    store.lexicalize(c["rice_in_husk"], "it", "risone")
    store.lexicalize(c["food"], "sw", "chakula")
    store.lexicalize(c["uncooked_rice"], "sw", "mchele")
    store.lexicalize(c["cooked_rice"], "sw", "wali")
    store.lexicalize(c["rice_in_husk"], "sw", "mpunga")
    store.lexicalize(c["food"], "ja", "食物")
    store.lexicalize(c["uncooked_rice"], "ja", "米")
    store.lexicalize(c["cooked_rice"], "ja", "ご飯")
    store.lexicalize(c["brown_rice"], "ja", "玄米")
    store.lexicalize(c["food"], "hu", "étel")
    store.lexicalize(c["rice"], "hu", "rizs")

    # no single word for the generic or for the finer distinctions
    store.mark_gap(c["rice"], "sw")
    store.mark_gap(c["rice"], "ja")
    store.mark_gap(c["uncooked_rice"], "fr")
    store.mark_gap(c["cooked_rice"], "fr")
    store.mark_gap(c["brown_rice"], "sw")
    store.mark_gap(c["uncooked_rice"], "hu")
    store.mark_gap(c["cooked_rice"], "hu")

    # kinship domain
    concept("relative")
    concept("sibling", parent="relative")
    concept("brother", parent="sibling")
    concept("sister", parent="sibling")
    concept("elder_brother", parent="brother")
    concept("younger_brother", parent="brother")
    concept("elder_sister", parent="sister")
    concept("younger_sister", parent="sister")
    concept("uncle", parent="relative")
    concept("maternal_uncle", parent="uncle")
    concept("paternal_uncle", parent="uncle")

    store.lexicalize(c["relative"], "en", "relative")
    store.lexicalize(c["sibling"], "en", "sibling")
    store.lexicalize(c["brother"], "en", "brother")
    store.lexicalize(c["sister"], "en", "sister")
    store.lexicalize(c["uncle"], "en", "uncle")

    store.lexicalize(c["relative"], "fr", "parent")
    store.lexicalize(c["brother"], "fr", "frère")
    store.lexicalize(c["sister"], "fr", "sœur")
    store.lexicalize(c["uncle"], "fr", "oncle")

    store.lexicalize(c["relative"], "it", "parente")
    store.lexicalize(c["brother"], "it", "fratello")
    store.lexicalize(c["sister"], "it", "sorella")
    store.lexicalize(c["uncle"], "it", "zio")

    store.lexicalize(c["relative"], "sw", "jamaa")
    store.lexicalize(c["sibling"], "sw", "ndugu")
    store.lexicalize(c["brother"], "sw", "kaka")
    store.lexicalize(c["sister"], "sw", "dada")
    store.lexicalize(c["maternal_uncle"], "sw", "mjomba")
    store.lexicalize(c["paternal_uncle"], "sw", "amu")

    store.lexicalize(c["relative"], "ja", "親戚")
    store.lexicalize(c["sibling"], "ja", "兄弟")
    store.lexicalize(c["elder_brother"], "ja", "兄")
    store.lexicalize(c["younger_brother"], "ja", "弟")
    store.lexicalize(c["elder_sister"], "ja", "姉")
    store.lexicalize(c["younger_sister"], "ja", "妹")
    store.lexicalize(c["uncle"], "ja", "おじ")

    store.lexicalize(c["relative"], "hu", "rokon")
    store.lexicalize(c["sibling"], "hu", "testvér")
    store.lexicalize(c["elder_brother"], "hu", "báty")
    store.lexicalize(c["younger_brother"], "hu", "öcs")
    store.lexicalize(c["elder_sister"], "hu", "nővér")
    store.lexicalize(c["younger_sister"], "hu", "húg")
    store.lexicalize(c["uncle"], "hu", "nagybácsi")

    store.mark_gap(c["elder_brother"], "en")
    store.mark_gap(c["younger_brother"], "en")
    store.mark_gap(c["elder_brother"], "fr")
    store.mark_gap(c["younger_brother"], "fr")
    store.mark_gap(c["elder_sister"], "it")
    store.mark_gap(c["younger_sister"], "it")
    store.mark_gap(c["maternal_uncle"], "fr")
    store.mark_gap(c["paternal_uncle"], "fr")
    store.mark_gap(c["brother"], "hu")
    store.mark_gap(c["sister"], "hu")
    store.mark_gap(c["uncle"], "sw")

    # a Swahili-only meaning under its uncooked-rice concept
    mchele_lc = store.language_concept_for("sw", c["uncooked_rice"])
    store.add_local_concept("sw", mchele_lc, gloss="fine aromatic rice",
                            lemma="pishori")

    # cognates and word-level diversity links
    riz = store.find_lemma("fr", "riz")[0]
    riso = store.find_lemma("it", "riso")[0]
    rice = store.find_lemma("en", "rice")[0]
    risone = store.find_lemma("it", "risone")[0]
    store.add_lexical_link(rice, riz, "cognate")
    store.add_lexical_link(riz, riso, "cognate")
    store.add_lexical_link(rice, riso, "cognate")
    store.add_lexical_link(riso, risone, "derivation")
    frere = store.find_lemma("fr", "frère")[0]
    soeur = store.find_lemma("fr", "sœur")[0]
    fratello = store.find_lemma("it", "fratello")[0]
    store.add_lexical_link(frere, fratello, "cognate")
    store.add_lexical_link(frere, soeur, "antonym")

    return store, c


def build_alpine_store():
    """German trade language plus Mòcheno, a Germanic minority language.

    Mòcheno's lexicon is deliberately incomplete so an editing session has
    something to add: `rye_bread` is neither lexicalized nor gapped.
    """
    store = Store()
    store.add_language("de", "German", "trade")
    store.add_language("mhn", "Mòcheno")

    c = {}
    for name, label in [("food", "food"), ("bread", "bread"),
                        ("rye_bread", "rye bread"), ("pastry", "pastry")]:
        c[name] = store.add_interlingual_concept(label)
    store.add_semantic_relation(c["bread"], c["food"], "hypernym")
    store.add_semantic_relation(c["rye_bread"], c["bread"], "hypernym")
    store.add_semantic_relation(c["pastry"], c["food"], "hypernym")

    store.lexicalize(c["food"], "de", "Essen")
    store.lexicalize(c["bread"], "de", "Brot")
    store.lexicalize(c["rye_bread"], "de", "Roggenbrot")
    store.lexicalize(c["pastry"], "de", "Gebäck")

    store.lexicalize(c["food"], "mhn", "essn")
    store.lexicalize(c["bread"], "mhn", "proat")
    store.mark_gap(c["pastry"], "mhn")

    return store, c
