"""Shared fixtures: named graphs, random graphs, and brute-force oracles.

The oracles here are deliberately independent of the library's algorithms:
isomorphism by permutation search, Kuratowski subdivisions by explicit
disjoint-path search, and the all-graphs corpus by vertex augmentation.
Randomized tests read their seed from POLYUNI_TEST_SEED (default fixed).
"""

from __future__ import annotations

import os
import random
from itertools import combinations, permutations

import pytest

from polyuni.canon import canonical_form
from polyuni.graphcore import Graph

SEED = int(os.environ.get("POLYUNI_TEST_SEED", "20250810"))


def rng(salt: int = 0) -> random.Random:
    return random.Random(SEED + salt)


def random_graph(rnd: random.Random, n: int, prob: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < prob]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def octahedron() -> Graph:
    non_edges = {(0, 1), (2, 3), (4, 5)}
    return Graph.from_edges(
        6, [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in non_edges]
    )


def cube_graph() -> Graph:
    edges = []
    for v in range(8):
        for bit in range(3):
            w = v ^ (1 << bit)
            if v < w:
                edges.append((v, w))
    return Graph.from_edges(8, edges)


def icosahedron() -> Graph:
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    edges = [(top, u) for u in up] + [(bottom, v) for v in lo]
    edges += [(up[i], up[(i + 1) % 5]) for i in range(5)]
    edges += [(lo[i], lo[(i + 1) % 5]) for i in range(5)]
    edges += [(up[i], lo[i]) for i in range(5)]
    edges += [(up[i], lo[(i + 1) % 5]) for i in range(5)]
    return Graph.from_edges(12, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------

def perm_isomorphic(g: Graph, h: Graph) -> bool:
    """Ground-truth isomorphism by permutation search (small orders only)."""
    if g.p != h.p or g.edge_count != h.edge_count:
        return False
    if sorted(g.bits[v].bit_count() for v in range(g.p)) != sorted(
        h.bits[v].bit_count() for v in range(h.p)
    ):
        return False
    g_edges = list(g.edges())
    h_edges = set(h.edges())
    for perm in permutations(range(g.p)):
        mapped = {(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g_edges}
        if mapped == h_edges:
            return True
    return False


def _disjoint_paths_exist(g: Graph, branch: tuple[int, ...], pairs: list[tuple[int, int]]) -> bool:
    """Internally-disjoint paths realizing every pair, interiors avoiding branch."""
    branch_set = set(branch)

    def connect(idx: int, used: set[int]) -> bool:
        if idx == len(pairs):
            return True
        u, v = pairs[idx]

        def dfs(x: int, interior: list[int]) -> bool:
            for y in g.neighbors(x):
                if y == v:
                    if connect(idx + 1, used | set(interior)):
                        return True
                elif y not in branch_set and y not in used and y not in interior:
                    interior.append(y)
                    if dfs(y, interior):
                        return True
                    interior.pop()
            return False

        return dfs(u, [])

    return connect(0, set())


def kuratowski_bruteforce(g: Graph) -> bool:
    """True iff g contains a K5 or K3,3 subdivision (hence is nonplanar)."""
    verts = range(g.p)
    for branch in combinations(verts, 5):
        if any(g.degree(v) < 4 for v in branch):
            continue
        pairs = list(combinations(branch, 2))
        if _disjoint_paths_exist(g, branch, pairs):
            return True
    for six in combinations(verts, 6):
        if any(g.degree(v) < 3 for v in six):
            continue
        for left in combinations(six[1:], 2):
            side_a = (six[0],) + left
            side_b = tuple(v for v in six if v not in side_a)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _disjoint_paths_exist(g, six, pairs):
                return True
    return False


# ---------------------------------------------------------------------------
# All-graphs corpora (independent completeness reference)
# ---------------------------------------------------------------------------

def _augment_all_graphs(n: int) -> list[Graph]:
    reps = {canonical_form(Graph.from_edges(1, [])): Graph.from_edges(1, [])}
    for k in range(2, n + 1):
        nxt: dict = {}
        for g in reps.values():
            base = g.edges()
            for mask in range(1 << (k - 1)):
                edges = base + [(v, k - 1) for v in range(k - 1) if (mask >> v) & 1]
                h = Graph.from_edges(k, edges)
                code = canonical_form(h)
                if code not in nxt:
                    nxt[code] = h
        reps = nxt
    return list(reps.values())


_CORPUS_CACHE: dict[int, list[Graph]] = {}


def all_graphs_of_order(n: int) -> list[Graph]:
    if n not in _CORPUS_CACHE:
        _CORPUS_CACHE[n] = _augment_all_graphs(n)
    return _CORPUS_CACHE[n]


@pytest.fixture(scope="session")
def corpus6() -> list[Graph]:
    return all_graphs_of_order(6)


@pytest.fixture(scope="session")
def corpus7() -> list[Graph]:
    return all_graphs_of_order(7)
