import pytest
from hypothesis import given

from conftest import as_graph, digraphs
from groundkernel.digraph import DefGraph, build_graph, induced_subgraph, is_acyclic, scc
from groundkernel.errors import UnknownWord
from groundkernel.lexicon import Dictionary
from oracles import brute_sccs, has_cycle

CHAIN = DefGraph("abc", [("a", "b"), ("b", "c")])


def test_build_toy(g1, toy):
    assert len(g1) == 15
    assert g1.has_arc("red", "apple")
    assert not g1.has_arc("apple", "red")
    assert g1.outdegree("apple") == 0
    assert g1.arc_count == sum(len(ds) for ds in toy.values()) == 27
    assert all(g1.indegree(v) > 0 for v in g1)


def test_build_self_loop():
    g = build_graph(Dictionary({"a": {"a"}}))
    assert g.vertices == ("a",)
    assert g.arcs == {("a", "a")}


def test_adjacency_consistency(g1):
    for u, v in g1.arcs:
        assert u in g1.in_adjacency[v]
        assert v in g1.out_adjacency[u]
    assert sum(len(s) for s in g1.out_adjacency.values()) == len(g1.arcs)


def test_open_words_have_no_in_arcs():
    g = build_graph(Dictionary({"a": {"b"}}, allow_open=True))
    assert g.vertices == ("a", "b")
    assert g.indegree("b") == 0


def test_induced_subgraph(g1):
    sub = induced_subgraph(g1, {"good", "bad"})
    assert sub.vertices == ("bad", "good")
    assert sub.arcs == {("good", "bad"), ("bad", "good")}
    assert len(induced_subgraph(g1, set())) == 0
    assert induced_subgraph(g1, g1.vertices) == g1


def test_induced_subgraph_unknown(g1):
    with pytest.raises(UnknownWord):
        induced_subgraph(g1, {"pear"})


def test_scc_toy(g1):
    dec = scc(g1)
    comps = set(dec.components)
    assert {"good", "bad"} in comps
    assert {"dark", "light"} in comps
    singles = [c for c in comps if len(c) == 1]
    assert len(singles) == 11
    loops = {next(iter(c)) for c in singles if g1.has_self_loop(next(iter(c)))}
    assert loops == {"not", "or", "thing"}
    assert len(dec) == 13


def test_scc_chain():
    dec = scc(CHAIN)
    assert [dec.members(i) for i in dec.topo_order] == [["a"], ["b"], ["c"]]


def test_scc_self_loop():
    dec = scc(DefGraph("a", [("a", "a")]))
    assert dec.components == (frozenset("a"),)


def test_is_acyclic(g1):
    assert not is_acyclic(g1)
    assert is_acyclic(CHAIN)
    assert not is_acyclic(DefGraph("a", [("a", "a")]))
    assert is_acyclic(DefGraph([], []))


def test_deep_chain_does_not_recurse():
    n = 50_000
    names = [f"w{i:05d}" for i in range(n)]
    g = DefGraph(names, zip(names, names[1:]))
    assert len(scc(g)) == n


@given(digraphs(max_size=10))
def test_scc_matches_pairwise_reachability(graph):
    vertices, arcs = graph
    dec = scc(as_graph(vertices, arcs))
    assert set(dec.components) == brute_sccs(vertices, arcs)
    assert sorted(v for c in dec.components for v in c) == sorted(vertices)
    for u, v in arcs:
        cu, cv = dec.component_of[u], dec.component_of[v]
        if cu != cv:
            assert dec.topo_order.index(cu) < dec.topo_order.index(cv)


@given(digraphs(max_size=10))
def test_acyclic_iff_trivial_components(graph):
    vertices, arcs = graph
    g = as_graph(vertices, arcs)
    dec = scc(g)
    trivial = all(len(c) == 1 and not g.has_self_loop(next(iter(c))) for c in dec.components)
    assert is_acyclic(g) == trivial == (not has_cycle(vertices, arcs))
