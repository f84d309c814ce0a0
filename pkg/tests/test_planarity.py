import pytest

from polyuni.graphcore import Graph, degree_sequence
from polyuni.planarity import (
    CutWitness,
    Embedding,
    KuratowskiWitness,
    connectivity_at_least,
    embedding_faces,
    is_planar,
    is_polyhedral,
    planarity_check,
    verify_cut_witness,
    verify_embedding,
    verify_kuratowski,
)

from conftest import (
    all_graphs_of_order,
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    icosahedron,
    kuratowski_bruteforce,
    octahedron,
    path_graph,
    random_graph,
    rng,
)


def test_k4_embedding():
    emb = planarity_check(complete_graph(4))
    assert isinstance(emb, Embedding)
    assert emb.face_count == 4
    assert verify_embedding(complete_graph(4), emb)


def test_octahedron_embedding():
    g = octahedron()
    emb = planarity_check(g)
    assert isinstance(emb, Embedding)
    assert emb.face_count == 8  # 6 - 12 + 8 = 2
    assert verify_embedding(g, emb)


def test_k5_and_k33_witnesses():
    w = planarity_check(complete_graph(5))
    assert isinstance(w, KuratowskiWitness) and w.kind == "K5"
    assert verify_kuratowski(complete_graph(5), w)

    k33 = complete_bipartite(3, 3)
    w = planarity_check(k33)
    assert isinstance(w, KuratowskiWitness) and w.kind == "K33"
    assert verify_kuratowski(k33, w)


def test_verify_embedding_rejects_mutations():
    g = complete_graph(4)
    emb = planarity_check(g)
    # swapping two rotation entries at one vertex changes the face structure
    rot = list(map(list, emb.rotation))
    rot[0][0], rot[0][1] = rot[0][1], rot[0][0]
    mutated = Embedding(rotation=tuple(map(tuple, rot)), face_count=emb.face_count)
    assert not verify_embedding(g, mutated)
    # a wrong face count also fails
    assert not verify_embedding(g, Embedding(emb.rotation, emb.face_count - 1))
    # rotations must cover the right neighborhoods
    assert not verify_embedding(octahedron(), emb)


def test_verify_kuratowski_rejects_mutations():
    g = complete_graph(5)
    w = planarity_check(g)
    # delete one witness-path edge from the host graph
    u, v = w.paths[0][0], w.paths[0][1]
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    smaller = Graph.from_edges(5, edges)
    assert not verify_kuratowski(smaller, w)
    # wrong kind
    assert not verify_kuratowski(g, KuratowskiWitness("K33", w.branch_vertices, w.paths))


def test_connectivity_definition_cases():
    assert connectivity_at_least(octahedron(), 3) is True
    w = connectivity_at_least(path_graph(4), 2)
    assert isinstance(w, CutWitness) and w.cut_vertices in ({1}, {2})
    assert verify_cut_witness(path_graph(4), 2, w)

    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    w = connectivity_at_least(bowtie, 2)
    assert isinstance(w, CutWitness) and w.cut_vertices == {2}
    assert verify_cut_witness(bowtie, 2, w)

    assert connectivity_at_least(complete_graph(4), 3) is True
    assert connectivity_at_least(cycle_graph(5), 2) is True
    assert isinstance(connectivity_at_least(cycle_graph(5), 3), CutWitness)
    # degenerate orders
    w = connectivity_at_least(complete_graph(3), 3)
    assert isinstance(w, CutWitness) and verify_cut_witness(complete_graph(3), 3, w)


def test_three_connected_implies_min_degree_three():
    rnd = rng(4)
    for _ in range(300):
        g = random_graph(rnd, rnd.randint(4, 9), rnd.random())
        if connectivity_at_least(g, 3) is True:
            assert min(g.degree(v) for v in range(g.p)) >= 3


def test_is_polyhedral_examples():
    assert is_polyhedral(complete_graph(4))
    assert not is_polyhedral(complete_graph(5))
    # cube with one edge subdivided: the degree-2 vertex kills 3-connectivity
    cube = cube_graph()
    edges = [e for e in cube.edges() if e != (0, 1)] + [(0, 8), (8, 1)]
    assert not is_polyhedral(Graph.from_edges(9, edges))
    assert is_polyhedral(icosahedron())
    assert not is_polyhedral(cycle_graph(5))


def test_planar_face_count_formula():
    rnd = rng(5)
    for _ in range(300):
        g = random_graph(rnd, rnd.randint(2, 9), 0.4)
        res = planarity_check(g)
        if isinstance(res, Embedding):
            comps = _component_count(g)
            assert res.face_count == 1 + comps - g.p + g.edge_count
            assert verify_embedding(g, res)


def _component_count(g: Graph) -> int:
    seen: set[int] = set()
    comps = 0
    for s in range(g.p):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def test_certificate_duality_random():
    rnd = rng(6)
    for _ in range(500):
        g = random_graph(rnd, rnd.randint(1, 10), rnd.random())
        res = planarity_check(g)
        if isinstance(res, Embedding):
            assert verify_embedding(g, res)
        else:
            assert verify_kuratowski(g, res)


def test_oracle_equivalence_exhaustive_small():
    for n in range(1, 7):
        for g in all_graphs_of_order(n):
            assert is_planar(g) == (not kuratowski_bruteforce(g))


def test_oracle_equivalence_random_order_9():
    rnd = rng(7)
    for _ in range(200):
        n = rnd.randint(7, 9)
        g = random_graph(rnd, n, rnd.uniform(0.25, 0.7))
        assert is_planar(g) == (not kuratowski_bruteforce(g))


@pytest.mark.slow
def test_oracle_equivalence_random_large_sample():
    rnd = rng(8)
    for _ in range(10_000):
        n = rnd.randint(4, 9)
        g = random_graph(rnd, n, rnd.random())
        assert is_planar(g) == (not kuratowski_bruteforce(g))


def test_disconnected_and_degenerate_inputs():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])  # two edges + isolated vertex
    emb = planarity_check(g)
    assert isinstance(emb, Embedding)
    # p - e + f = 1 + c: 5 - 2 + f = 1 + 3
    assert emb.face_count == 1
    assert verify_embedding(g, emb)

    lone = Graph.from_edges(1, [])
    emb = planarity_check(lone)
    assert emb.face_count == 1 and verify_embedding(lone, emb)


def test_embedding_faces_of_triangulation():
    emb = planarity_check(octahedron())
    faces = embedding_faces(emb)
    assert len(faces) == 8
    assert all(len(f) == 3 for f in faces)
