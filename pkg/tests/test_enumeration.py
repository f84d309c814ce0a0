from collections import Counter

import pytest

from polyuni.canon import canonical_form, is_isomorphic
from polyuni.enumeration import (
    ApexPreconditionViolated,
    UnigraphicReport,
    decompose_apex,
    enumerate_apex,
    enumerate_auto,
    enumerate_generic,
    feasible_sequences,
    unigraphic_check,
)
from polyuni.graphcore import DegreeSequence, degree_sequence, graph6_decode, graph6_encode
from polyuni.planarity import is_polyhedral

from conftest import all_graphs_of_order, octahedron, perm_isomorphic

DS = DegreeSequence.from_text


def codes(graphs):
    return [canonical_form(g).text for g in graphs]


def test_k4_unique():
    got = enumerate_generic(DS("3,3,3,3"))
    assert len(got) == 1
    assert graph6_encode(got[0]) == b"C~"


def test_alpha7_both_methods():
    s = DS("5,5,5,4,4,4,3")
    a = enumerate_apex(s)
    g = enumerate_generic(s)
    assert len(a) == len(g) == 1
    assert codes(a) == codes(g)


def test_sigma1_10_regression_count():
    # at least two per the non-uniqueness argument; exactly two by this
    # enumerator (frozen regression value, cross-checked generic vs apex)
    s = DS("8,8,6,6,4,4,3,3,3,3")
    got = enumerate_apex(s)
    assert len(got) == 2


def test_named_counts():
    assert len(enumerate_apex(DS("5,5,4,4,4,4,4"))) == 1  # pentagonal bipyramid
    assert len(enumerate_apex(DS("7,4,4,4,4,4,4,4,3"))) == 1  # gamma(9)
    assert len(enumerate_apex(DS("6,6,6,6,3,3,3,3"))) == 1


def test_bipyramid_beta6_found():
    got = enumerate_auto(DS("4,4,4,4,4,4"))
    assert len(got) == 1
    assert perm_isomorphic(got[0], octahedron())


def test_auto_dispatch_and_infeasible():
    s = DS("5,5,5,4,4,4,3")
    assert codes(enumerate_auto(s)) == codes(enumerate_apex(s))
    assert enumerate_auto(DS("3,3,3")) == []
    # d1 != p-2 dispatches to the generic strategy
    assert codes(enumerate_auto(DS("3,3,3,3"))) == codes(enumerate_generic(DS("3,3,3,3")))


def test_apex_precondition():
    with pytest.raises(ApexPreconditionViolated):
        enumerate_apex(DS("3,3,3,3"))  # p = 4 < 5
    with pytest.raises(ApexPreconditionViolated):
        enumerate_apex(DS("4,4,4,4,3,3,3,3"))  # d1 = 4 != 6


def test_soundness_and_isomorph_freeness():
    for text in ("6,6,5,5,3,3,3,3", "6,6,5,4,4,3,3,3", "5,5,4,4,4,4,4"):
        got = enumerate_auto(DS(text))
        assert got, text
        cs = codes(got)
        assert cs == sorted(cs) and len(set(cs)) == len(cs)
        for g in got:
            assert degree_sequence(g) == DS(text)
            assert is_polyhedral(g)


def test_unigraphic_verdicts():
    assert unigraphic_check(DS("6,5^3,4^3,3")).verdict == "UNIGRAPHIC"
    assert unigraphic_check(DS("8,8,6,5,5,4,3,3,3,3")).verdict == "UNIGRAPHIC"
    assert unigraphic_check(DS("7,7,5,5,5,4,3,3,3")).verdict == "UNIGRAPHIC"
    assert unigraphic_check(DS("4,4,3,3,3,3")).verdict == "UNIGRAPHIC"

    r = unigraphic_check(DS("6,6,5,5,3,3,3,3"))
    assert r.verdict == "NOT_UNIGRAPHIC"
    assert len(r.witnesses) == 2
    w1, w2 = (graph6_decode(w) for w in r.witnesses)
    assert not is_isomorphic(w1, w2)
    assert is_polyhedral(w1) and is_polyhedral(w2)

    r = unigraphic_check(DS("5,5,5,5,4,3,3"))  # feasible form, no realization
    assert r.verdict == "NOT_POLYHEDRAL" and r.realization_count == 0
    r = unigraphic_check(DS("2,2,2,1,1"))
    assert r.verdict == "NOT_POLYHEDRAL"


def test_unigraphic_limit_semantics():
    r = unigraphic_check(DS("6,5^3,4^3,3"), limit=1)
    assert r.verdict == "TRUNCATED" and r.count_is_lower_bound
    r = unigraphic_check(DS("6,6,5,5,3,3,3,3"), limit=3)
    assert r.verdict == "NOT_UNIGRAPHIC"
    with pytest.raises(ValueError):
        unigraphic_check(DS("3,3,3,3"), limit=0)


def test_report_json_round_trip():
    r = unigraphic_check(DS("6,6,5,5,3,3,3,3"))
    assert UnigraphicReport.from_json_dict(r.to_json_dict()) == r


def test_enumerate_limit_truncates():
    s = DS("6,6,5,4,4,3,3,3")  # sigma9(8): six realizations in full
    assert len(enumerate_auto(s)) == 6
    assert len(enumerate_auto(s, limit=2)) == 2


def test_determinism():
    s = DS("6,6,5,5,3,3,3,3")
    assert codes(enumerate_apex(s)) == codes(enumerate_apex(s))
    assert codes(enumerate_generic(s)) == codes(enumerate_generic(s))


def test_oracle_equivalence_small_orders():
    # full sweep at p <= 8 here; p = 9 runs in the acceptance suite
    for p in range(5, 9):
        for s in feasible_sequences(p, prefix=(p - 2,)):
            assert codes(enumerate_apex(s)) == codes(enumerate_generic(s)), s.text()


def test_completeness_against_corpus_order_7():
    # independent reference: filter the all-graphs corpus for polyhedra
    for n in (4, 5, 6, 7):
        poly = [g for g in all_graphs_of_order(n) if is_polyhedral(g)]
        assert len(poly) == {4: 1, 5: 2, 6: 7, 7: 34}[n]
        per_seq = Counter(degree_sequence(g).degrees for g in poly)
        for degs, count in per_seq.items():
            assert len(enumerate_auto(DegreeSequence(degs))) == count


@pytest.mark.slow
def test_completeness_against_corpus_order_8():
    poly = [g for g in all_graphs_of_order(8) if is_polyhedral(g)]
    assert len(poly) == 257
    per_seq = Counter(degree_sequence(g).degrees for g in poly)
    for degs, count in per_seq.items():
        assert len(enumerate_auto(DegreeSequence(degs))) == count


def test_decompose_apex_structure():
    g = enumerate_auto(DS("5,5,4,4,4,4,4"))[0]
    d = decompose_apex(g)
    assert g.degree(d.y) == g.p - 2
    assert not g.has_edge(d.y, d.a) and d.y != d.a
    assert len(d.cycle_c) == g.p - 2
    assert d.a not in d.cycle_c and d.y not in d.cycle_c
    # every non-cycle edge of G - y is accounted for
    f_edges = {e for e in g.edges() if d.y not in e}
    assert set(d.interior_edges) <= f_edges


def test_feasible_sequences_helper():
    seqs = feasible_sequences(6, prefix=(4, 4))
    texts = [s.text() for s in seqs]
    assert "4,4,4,4,4,4" in texts and "4,4,3,3,3,3" in texts
    assert texts == sorted(texts, reverse=True)
    for s in seqs:
        assert s.total % 2 == 0 and s.total <= 6 * s.p - 12
