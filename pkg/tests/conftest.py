import random

import pytest

from lexdiv.store import Store


@pytest.fixture
def rice_kinship():
    from lexdiv.fixtures import build_rice_kinship_store
    return build_rice_kinship_store()


@pytest.fixture
def alpine():
    from lexdiv.fixtures import build_alpine_store
    return build_alpine_store()


def random_dag_store(rng, n_concepts, edge_prob=0.15):
    """A store whose hypernym DAG is random but guaranteed acyclic: edges only
    point from higher to lower creation index."""
    store = Store()
    concepts = [store.add_interlingual_concept(f"n{i}")
                for i in range(n_concepts)]
    for i in range(1, n_concepts):
        for j in range(i):
            if rng.random() < edge_prob:
                store.add_semantic_relation(concepts[i], concepts[j],
                                            "hypernym")
    return store, concepts


def random_lexicalized_store(rng, n_concepts=30, n_languages=4,
                             lex_prob=0.5, gap_prob=0.15):
    """Random DAG plus random lexicalizations and gaps per language."""
    store, concepts = random_dag_store(rng, n_concepts)
    codes = [f"lg{i}" for i in range(n_languages)]
    for i, code in enumerate(codes):
        store.add_language(code, f"Language {i}",
                           "trade" if i == 0 else "local")
    for concept in concepts:
        for code in codes:
            roll = rng.random()
            if roll < lex_prob:
                store.lexicalize(concept, code,
                                 f"w{concept.id}_{code}")
            elif roll < lex_prob + gap_prob:
                store.mark_gap(concept, code)
    return store, concepts, codes


# --- independent oracles ----------------------------------------------------

def reachable(edges, start, goal):
    """Brute-force DFS reachability over an explicit edge list."""
    adjacency = {}
    for a, b in edges:
        adjacency.setdefault(a, []).append(b)
    stack, seen = [start], set()
    while stack:
        node = stack.pop()
        if node == goal:
            return True
        if node in seen:
            continue
        seen.add(node)
        stack.extend(adjacency.get(node, ()))
    return False


def hypernym_edges(store):
    return [(child, parent)
            for child in store._hyper_parents
            for parent in store._hyper_parents[child]]


def has_cycle(edges):
    return _has_cycle_dfs(edges, {n for e in edges for n in e})


def _has_cycle_dfs(edges, nodes):
    adjacency = {}
    for a, b in edges:
        adjacency.setdefault(a, []).append(b)
    state = dict.fromkeys(nodes, 0)  # 0 unseen, 1 open, 2 done

    def visit(node):
        state[node] = 1
        for nxt in adjacency.get(node, ()):
            if state[nxt] == 1:
                return True
            if state[nxt] == 0 and visit(nxt):
                return True
        state[node] = 2
        return False

    return any(state[n] == 0 and visit(n) for n in nodes)


def two_pass_stddev(values):
    """Textbook two-pass sample standard deviation."""
    n = len(values)
    mean = sum(values) / n
    return (sum((v - mean) ** 2 for v in values) / (n - 1)) ** 0.5


def floyd_warshall_lcs(store, a, b):
    """LCS distance via all-pairs shortest paths, or None when disjoint."""
    nodes = sorted(store.concepts)
    inf = float("inf")
    dist = {(x, y): (0 if x == y else inf) for x in nodes for y in nodes}
    for child, parent in hypernym_edges(store):
        dist[(child, parent)] = 1
    for k in nodes:
        for i in nodes:
            ik = dist[(i, k)]
            if ik == inf:
                continue
            for j in nodes:
                if ik + dist[(k, j)] < dist[(i, j)]:
                    dist[(i, j)] = ik + dist[(k, j)]
    best = min((dist[(a, c)] + dist[(b, c)] for c in nodes), default=inf)
    return None if best == inf else int(best)
