from collections import Counter

import pytest

from polyuni.graphcore import (
    DegreeSequence,
    Graph,
    MalformedGraph6,
    NotGraphical,
    SequenceParseError,
    degree_sequence,
    graph6_decode,
    graph6_encode,
    havel_hakimi_realize,
    is_graphical,
    polyhedral_feasible,
)

from conftest import all_graphs_of_order, complete_graph, octahedron, random_graph, rng


def test_degree_sequence_examples():
    assert degree_sequence(octahedron()).degrees == (4, 4, 4, 4, 4, 4)
    assert degree_sequence(complete_graph(4)).degrees == (3, 3, 3, 3)
    assert degree_sequence(Graph.from_edges(3, [])).degrees == (0, 0, 0)


def test_degree_sequence_sorted_on_construction():
    s = DegreeSequence((3, 5, 4, 5))
    assert s.degrees == (5, 5, 4, 3)
    assert s.p == 4 and s.total == 17


def test_degree_sum_is_twice_edge_count():
    rnd = rng(1)
    for _ in range(200):
        g = random_graph(rnd, rnd.randint(1, 12), rnd.random())
        assert degree_sequence(g).total == 2 * g.edge_count


def test_sequence_text_grammar():
    s = DegreeSequence.from_text("6,5^3,4^3,3")
    assert s.degrees == (6, 5, 5, 5, 4, 4, 4, 3)
    assert DegreeSequence.from_text("8,8,5,4^6,3").p == 10
    assert s.text() == "6,5,5,5,4,4,4,3"
    assert s.text_compact() == "6,5^3,4^3,3"
    assert DegreeSequence.from_text(s.text_compact()) == s
    for bad in ("", "3,,4", "a,b", "4^0", "3^-1", "4^"):
        with pytest.raises(SequenceParseError):
            DegreeSequence.from_text(bad)


def test_is_graphical_paper_examples():
    assert is_graphical(DegreeSequence.from_text("2,2,2,1,1"))
    assert is_graphical(DegreeSequence.from_text("3,3,3,3"))
    assert is_graphical(DegreeSequence.from_text("3,1,1,1"))
    assert not is_graphical(DegreeSequence.from_text("3,3,1,1"))


def test_is_graphical_brute_force_order_4():
    # every 4-vertex simple graph's degree multiset, by direct enumeration
    realizable = set()
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    for mask in range(64):
        edges = [pairs[i] for i in range(6) if (mask >> i) & 1]
        realizable.add(degree_sequence(Graph.from_edges(4, edges)).degrees)
    assert (3, 1, 1, 1) in realizable
    assert (3, 3, 1, 1) not in realizable


def test_is_graphical_matches_corpus_up_to_order_7():
    # the corpus is generated independently of the Erdős–Gallai test
    for n in range(1, 8):
        realizable = {degree_sequence(g).degrees for g in all_graphs_of_order(n)}
        stack = [()]
        for _ in range(n):
            stack = [
                t + (d,)
                for t in stack
                for d in range(t[-1] if t else n - 1, -1, -1)
            ]
        for degs in stack:
            assert is_graphical(DegreeSequence(degs)) == (degs in realizable), degs


def test_havel_hakimi_examples():
    g = havel_hakimi_realize(DegreeSequence.from_text("2,2,2,1,1"))
    assert degree_sequence(g).degrees == (2, 2, 2, 1, 1)
    k4 = havel_hakimi_realize(DegreeSequence.from_text("3,3,3,3"))
    assert sorted(k4.edges()) == sorted(complete_graph(4).edges())
    k2 = havel_hakimi_realize(DegreeSequence.from_text("1,1"))
    assert k2.edges() == [(0, 1)]
    with pytest.raises(NotGraphical):
        havel_hakimi_realize(DegreeSequence.from_text("3,3,1,1"))


def test_havel_hakimi_deterministic_and_degree_exact():
    rnd = rng(2)
    for _ in range(100):
        g = random_graph(rnd, rnd.randint(2, 10), rnd.random())
        s = degree_sequence(g)
        h1 = havel_hakimi_realize(s)
        h2 = havel_hakimi_realize(s)
        assert h1 == h2
        assert degree_sequence(h1) == s


def test_polyhedral_feasible():
    rep = polyhedral_feasible(DegreeSequence.from_text("5,5,5,4,4,4,3"))
    assert rep.polyhedral_necessary and rep.graphical
    assert rep.violated_conditions == ()

    rep = polyhedral_feasible(DegreeSequence.from_text("2,2,2,1,1"))
    assert not rep.polyhedral_necessary
    assert "min-degree-3" in rep.violated_conditions

    rep = polyhedral_feasible(DegreeSequence.from_text("6,6,6,6,6,6,6"))
    assert "euler-edge-bound" in rep.violated_conditions
    assert "max-degree-bound" not in rep.violated_conditions

    rep = polyhedral_feasible(DegreeSequence.from_text("3,3,3"))
    assert "order-bound" in rep.violated_conditions
    rep = polyhedral_feasible(DegreeSequence.from_text("5,3,3,3,3"))
    assert "max-degree-bound" in rep.violated_conditions
    rep = polyhedral_feasible(DegreeSequence.from_text("4,3,3,3,3"))
    assert "sum-parity" in rep.violated_conditions


def test_graph6_hand_packed():
    # K4: upper triangle column-major is 111111 -> one byte 63+63 = '~'
    assert graph6_encode(complete_graph(4)) == b"C~"
    # single vertex: order byte only
    assert graph6_encode(Graph.from_edges(1, [])) == b"@"
    assert graph6_decode(b"C~") == complete_graph(4)


def test_graph6_round_trip_random():
    rnd = rng(3)
    for _ in range(1000):
        g = random_graph(rnd, rnd.randint(1, 20), rnd.random())
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_decode_errors():
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"")
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"C~~")  # extra body byte
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"C")  # missing body
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"\x20\x20")  # bytes below 63
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"~??")  # long-order header unsupported
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"Bw")  # nonzero padding for p=3


def test_graph6_header_prefix_stripped():
    assert graph6_decode(b">>graph6<<C~") == complete_graph(4)


def test_graph_invariants():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])  # duplicate collapses
    assert g.edge_count == 2
    assert g.neighbors(1) == (0,)
    assert g.adjacency == ((1,), (0,), (3,), (2,))


def test_relabel_preserves_structure():
    g = octahedron()
    perm = (3, 4, 5, 0, 1, 2)
    h = g.relabel(perm)
    assert degree_sequence(h) == degree_sequence(g)
    assert Counter(map(len, [h.neighbors(v) for v in range(6)])) == Counter({4: 6})
