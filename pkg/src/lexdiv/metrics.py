"""Linguistic-bias statistic, Greenberg diversity, and semantic distance.

The bias of a system over a set of languages is the sample standard deviation
of its per-language performance values.  Semantic distance between two
concepts is measured over the hypernym hierarchy via the least common
subsumer: the common ancestor minimizing the summed shortest upward paths.
"""

import math
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import (
    DuplicateLanguage,
    EmptyInput,
    InvalidShares,
    InvalidValue,
    MixedTasks,
    NoCommonSubsumer,
    TooFewLanguages,
    UnknownRef,
)

DIRECTIONS = ("higher_better", "lower_better")


@dataclass(frozen=True)
class PerfRecord:
    language: str
    value: float
    task: str = ""
    system: str = ""
    direction: str = "higher_better"
    input_set: Optional[str] = None
    bounded: bool = False


@dataclass
class BiasReport:
    bias: float
    mean: float
    n: int
    task: str
    system: str
    direction: str
    per_language: list = field(default_factory=list)

    @property
    def languages(self):
        return [r.language for r in self.per_language]


def bias(records):
    """Sample standard deviation of per-language performance values."""
    records = list(records)
    if len(records) < 2:
        raise TooFewLanguages(f"need at least 2 languages, got {len(records)}")
    first = records[0]
    seen = set()
    for r in records:
        if (r.task, r.system, r.direction) != (first.task, first.system,
                                               first.direction):
            raise MixedTasks("records mix tasks, systems or metric directions")
        if r.language in seen:
            raise DuplicateLanguage(f"duplicate language {r.language!r}")
        seen.add(r.language)
        if not math.isfinite(r.value) or r.value < 0:
            raise InvalidValue(f"performance value {r.value!r} out of range")
        if r.bounded and not 0.0 <= r.value <= 1.0:
            raise InvalidValue(f"bounded metric value {r.value!r} not in [0,1]")

    n = len(records)
    values = [r.value for r in records]
    mean = math.fsum(values) / n
    if all(v == values[0] for v in values):
        b = 0.0
    else:
        sumsq = math.fsum(v * v for v in values)
        b = math.sqrt(max(0.0, (sumsq - n * mean * mean) / (n - 1)))
    return BiasReport(bias=b, mean=mean, n=n, task=first.task,
                      system=first.system, direction=first.direction,
                      per_language=sorted(records, key=lambda r: r.language))


class GreenbergResult(NamedTuple):
    same_language: float
    diversity: float


def greenberg(shares):
    """Greenberg's monolingual nonweighted method over population shares.

    ``shares`` maps group labels to population fractions (or is a bare
    sequence of fractions).  Returns the probability that two random speakers
    share a language, and its complement, the diversity of the area.
    """
    if hasattr(shares, "values"):
        values = list(shares.values())
    else:
        values = [p for _, p in shares] if shares and isinstance(
            next(iter(shares), None), tuple) else list(shares)
    if not values:
        raise InvalidShares("no population shares given")
    for p in values:
        if not math.isfinite(p) or p < 0 or p > 1:
            raise InvalidShares(f"share {p!r} outside [0, 1]")
    total = math.fsum(values)
    if abs(total - 1.0) > 1e-9:
        raise InvalidShares(f"shares sum to {total}, expected 1")
    same = math.fsum(p * p for p in values)
    same = min(1.0, same)
    return GreenbergResult(same, 1.0 - same)


def _ancestor_distances(store, concept_id):
    """Shortest upward hypernym-path length to every self-or-ancestor."""
    dist = {concept_id: 0}
    queue = deque([concept_id])
    while queue:
        node = queue.popleft()
        for parent in store._hyper_parents[node]:
            if parent not in dist:
                dist[parent] = dist[node] + 1
                queue.append(parent)
    return dist


def lcs_distance(a, b, store):
    """Least-common-subsumer distance between two interlingual concepts.

    Minimizes, over all common ancestors (each concept counting as its own
    ancestor), the sum of the two shortest upward path lengths.
    """
    a = store._resolve_concept(a).id
    b = store._resolve_concept(b).id
    if a == b:
        return 0
    da = _ancestor_distances(store, a)
    db = _ancestor_distances(store, b)
    common = set(da) & set(db)
    if not common:
        raise NoCommonSubsumer(f"concepts {a} and {b} share no ancestor")
    return min(da[c] + db[c] for c in common)


@dataclass(frozen=True)
class DistancePair:
    predicted: int
    gold: int
    weight: int = 1


def avg_semantic_distance(pairs, store):
    """Weighted mean LCS distance between predicted and gold concepts."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyInput("no distance pairs given")
    total_weight = 0
    total = 0.0
    for pair in pairs:
        if pair.weight < 1:
            raise InvalidValue(f"weight {pair.weight!r} must be >= 1")
        total += pair.weight * lcs_distance(pair.predicted, pair.gold, store)
        total_weight += pair.weight
    return total / total_weight
