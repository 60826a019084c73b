"""Measure how unevenly an NLP system treats different languages.

The bias of a system over a set of languages is the sample standard deviation
of its per-language performance scores: zero means perfectly even treatment,
and larger values mean some languages are served much better than others.
The same module also provides Greenberg's diversity index for speaker
populations and a hierarchy-based semantic distance for grading mappings.
"""

from lexdiv import DistancePair, PerfRecord, bias, greenberg
from lexdiv import avg_semantic_distance, lcs_distance
from lexdiv.fixtures import build_rice_kinship_store

# semantic-distance error of a commercial translator on five languages,
# measured against native-speaker judgements (lower is better)
scores = {"ru": 0.34, "ja": 0.38, "ko": 0.90, "hu": 1.06, "mn": 1.12}
report = bias(PerfRecord(language=l, value=v, task="mt", system="GT",
                         direction="lower_better")
              for l, v in scores.items())
print(f"translator bias {report.bias:.4f} around mean error {report.mean:.3f}")

# a hypothetical system with identical scores everywhere has zero bias
flat = bias(PerfRecord(language=l, value=0.5) for l in scores)
print("uniform system bias", flat.bias)

# Greenberg: probability that two random speakers do NOT share a language
result = greenberg({"sw": 0.6, "en": 0.3, "ar": 0.1})
print(f"diversity {result.diversity:.2f} "
      f"(same-language chance {result.same_language:.2f})")

# semantic distance counts hypernym steps through the least common subsumer
store, concepts = build_rice_kinship_store()
print("brother vs sister:",
      lcs_distance(concepts["brother"], concepts["sister"], store))
print("brother vs uncle:",
      lcs_distance(concepts["brother"], concepts["uncle"], store))

# grading a translator: 4 perfect translations, 1 that hit a sibling concept
pairs = [DistancePair(concepts["brother"].id, concepts["brother"].id,
                      weight=4),
         DistancePair(concepts["sister"].id, concepts["brother"].id)]
print("avg semantic distance:", avg_semantic_distance(pairs, store))
