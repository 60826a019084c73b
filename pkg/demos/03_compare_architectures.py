"""Compare lexical-database architectures by what they can express.

Cross-lingual mappings (equivalent, broader/narrower, untranslatable) are
derived from the shared concept hierarchy. A database architecture is modeled
as a capability profile: whether it can record gaps, broader/narrower links,
local concepts, or forces everything through a single pivot language. The
relations a profile cannot express are lost, and the loss falls unevenly on
languages far from the design center. Coverage measures that per language,
and the bias statistic condenses the unevenness into one number.
"""

from lexdiv import (
    FULL_CAPABILITY,
    NO_GAP_CAPABILITY,
    PerfRecord,
    apply_capability,
    bias,
    coverage,
    derive_gold,
    derive_mappings,
    pivot_capability,
)
from lexdiv.fixtures import build_rice_kinship_store

store, _ = build_rice_kinship_store()


def show(relation):
    def side(e):
        # endpoint concepts are "i<id>" (interlingual) or "l<id>" (local)
        if e.concept.startswith("i"):
            label = store.concepts[int(e.concept[1:])].label
        else:
            label = store.language_concepts[int(e.concept[1:])].gloss
        gap = " (gap)" if e.is_gap else ""
        return f"{e.language}:{label}{gap}"
    return f"{relation.kind}({side(relation.source)}, {side(relation.target)})"


# Swahili and Japanese both split rice by preparation state, so their rice
# words align one-to-one; French lumps them, producing broader relations
# and an untranslatable pointing at the French gap
for pair in [("sw", "ja"), ("fr", "sw")]:
    mappings = derive_mappings(store, *pair)
    print(f"{pair[0]}-{pair[1]}: {len(mappings)} relations, e.g.")
    for r in sorted(mappings, key=show)[:3]:
        print("   ", show(r))

# the gold standard is everything derivable between all language pairs
gold = derive_gold(store, store.language_codes())
print("gold relations:", len(gold))

profiles = {
    "full model": FULL_CAPABILITY,
    "no gap support": NO_GAP_CAPABILITY,
    "English pivot": pivot_capability("en"),
}
for name, capability in profiles.items():
    expressible = apply_capability(gold, capability, store)
    report = coverage(expressible, gold)
    spread = bias(PerfRecord(language=l, value=v, task="coverage",
                             direction="higher_better")
                  for l, v in report.per_language.items())
    langs = " ".join(f"{l}={v:.2f}"
                     for l, v in sorted(report.per_language.items()))
    print(f"{name:16} overall={report.overall:.2f} bias={spread.bias:.4f}")
    print(f"{'':16} {langs}")
