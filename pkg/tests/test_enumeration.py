from __future__ import annotations

import math
from itertools import combinations

import pytest

from localturan.canon import are_isomorphic, canonical_certificate
from localturan.enumeration import (
    Pattern,
    automorphism_count,
    clique_count,
    clique_number,
    cliques,
    connected_graphs_by_edges,
    copies,
    copies_count,
    count_copies_in_clique,
    injective_hom_count,
    make_pattern,
    nonisomorphic_graphs,
    nonisomorphic_graphs_by_edges,
    pattern_by_name,
    pattern_from_edge_list,
    remove_dominating,
)
from localturan.graphs import (
    Graph,
    bits,
    complete_graph,
    cycle_graph,
    mask_of,
    path_graph,
    star_graph,
)

from .oracles import distinct_copies, injective_map_count


def all_patterns_up_to(t_max: int) -> list[Pattern]:
    out = []
    for n in range(1, t_max + 1):
        for i, g in enumerate(nonisomorphic_graphs(n)):
            out.append(make_pattern(f"n{n}c{i}", g))
    return out


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def test_clique_enumeration_examples():
    assert clique_count(complete_graph(4), 3) == 4
    assert clique_count(cycle_graph(5), 3) == 0
    k4_minus = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert clique_count(k4_minus, 3) == 2
    with pytest.raises(ValueError):
        list(cliques(complete_graph(3), 0))


def test_clique_counts_on_complete_graphs():
    for n in range(1, 9):
        g = complete_graph(n)
        for t in range(1, n + 1):
            assert clique_count(g, t) == math.comb(n, t)


def test_clique_enumeration_is_lexicographic():
    g = complete_graph(4)
    seen = [sorted(bits(c)) for c in cliques(g, 2)]
    assert seen == sorted(seen)
    assert seen[0] == [0, 1]


def test_clique_number():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(Graph(3)) == 1
    assert clique_number(Graph(0)) == 0


# ---------------------------------------------------------------------------
# patterns and copies
# ---------------------------------------------------------------------------

def test_automorphism_counts():
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(path_graph(4)) == 2
    assert automorphism_count(star_graph(3)) == 6
    assert pattern_by_name("paw").aut_size == 2
    assert pattern_by_name("diamond").aut_size == 4


def test_dominating_sets():
    assert pattern_by_name("K4").dom_size == 4
    assert pattern_by_name("S3").dom_size == 1
    assert pattern_by_name("paw").dom_size == 1
    assert pattern_by_name("diamond").dom_size == 2
    assert pattern_by_name("K2").dom_size == 2
    assert pattern_by_name("P4").dom_size == 0


def test_pattern_catalog_names():
    assert pattern_by_name("C5").graph == cycle_graph(5)
    assert pattern_by_name("P4").graph == path_graph(4)
    with pytest.raises(ValueError):
        pattern_by_name("Q7")
    p = pattern_from_edge_list("tri", "3 3\n0 1\n1 2\n0 2\n")
    assert are_isomorphic(p.graph, complete_graph(3))


def test_remove_dominating():
    paw1 = remove_dominating(pattern_by_name("paw"), 1)
    assert are_isomorphic(paw1.graph, Graph(3, [(0, 1)]))  # K2 + K1
    dia2 = remove_dominating(pattern_by_name("diamond"), 2)
    assert dia2.graph == Graph(2)
    with pytest.raises(ValueError):
        remove_dominating(pattern_by_name("paw"), 2)


def test_copy_count_examples():
    assert copies_count(complete_graph(3), pattern_by_name("P3")) == 3
    assert copies_count(complete_graph(5), pattern_by_name("paw")) == 60
    assert copies_count(complete_graph(4), pattern_by_name("K2")) == 6


def test_copies_match_naive_oracle_small():
    patterns = all_patterns_up_to(4)
    hosts = [g for n in range(1, 6) for g in nonisomorphic_graphs(n)]
    for g in hosts:
        for h in patterns:
            maps = injective_map_count(g, h.graph)
            assert injective_hom_count(g, h.graph) == maps
            got = {(c.vertices, c.edges) for c in copies(g, h)}
            assert got == distinct_copies(g, h.graph)
            assert len(got) * h.aut_size == maps
            assert copies_count(g, h) == len(got)


def test_copy_dom_matches_pattern_dom():
    patterns = [pattern_by_name(nm) for nm in ("K2", "K3", "S2", "S3", "paw", "diamond")]
    for g in nonisomorphic_graphs(5):
        for h in patterns:
            for copy in copies(g, h):
                assert copy.dom.bit_count() == h.dom_size
                deg = {v: 0 for v in bits(copy.vertices)}
                for u, v in copy.edges:
                    deg[u] += 1
                    deg[v] += 1
                k = copy.vertices.bit_count()
                assert copy.dom == mask_of(v for v, d in deg.items() if d == k - 1)


def test_count_copies_in_clique():
    paw_minus = remove_dominating(pattern_by_name("paw"), 1)
    assert count_copies_in_clique(paw_minus, 3) == 3
    star_minus = remove_dominating(pattern_by_name("S3"), 1)
    assert count_copies_in_clique(star_minus, 3) == 1
    assert count_copies_in_clique(pattern_by_name("K3"), 2) == 0
    # closed form against direct enumeration
    for h in all_patterns_up_to(4):
        for k in range(7):
            assert count_copies_in_clique(h, k) == copies_count(complete_graph(k), h)


# ---------------------------------------------------------------------------
# generation by vertices
# ---------------------------------------------------------------------------

def test_generation_counts_small():
    assert [len(nonisomorphic_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_generation_is_pairwise_nonisomorphic():
    for n in range(1, 6):
        gs = nonisomorphic_graphs(n)
        certs = {canonical_certificate(g) for g in gs}
        assert len(certs) == len(gs)


def test_generation_cap():
    with pytest.raises(ValueError):
        nonisomorphic_graphs(9)
    with pytest.raises(ValueError):
        nonisomorphic_graphs(0)


# ---------------------------------------------------------------------------
# generation by edges
# ---------------------------------------------------------------------------

def test_by_edges_counts_small():
    # m=3: K3, P4, S3, K2+P3, 3K2
    assert [len(nonisomorphic_graphs_by_edges(m)) for m in range(7)] == [
        1, 1, 2, 5, 11, 26, 68,
    ]
    assert [len(connected_graphs_by_edges(m)) for m in range(1, 8)] == [
        1, 1, 3, 5, 12, 30, 79,
    ]


def test_by_edges_m3_classes():
    got = nonisomorphic_graphs_by_edges(3)
    names = {
        canonical_certificate(g)
        for g in (
            complete_graph(3),
            path_graph(4),
            star_graph(3),
            Graph(5, [(0, 1), (2, 3), (3, 4)]),
            Graph(6, [(0, 1), (2, 3), (4, 5)]),
        )
    }
    assert {canonical_certificate(g) for g in got} == names


def test_by_edges_no_isolated_vertices_and_exact_m():
    for m in range(7):
        for g in nonisomorphic_graphs_by_edges(m):
            assert g.m == m
            assert all(g.adj[v] != 0 for v in range(g.n))


def test_by_edges_agrees_with_by_vertices_slice():
    # restrict both enumerations to graphs on at most 7 vertices
    for m in range(6):
        by_edges = {
            canonical_certificate(g)
            for g in nonisomorphic_graphs_by_edges(m)
            if g.n <= 7
        }
        by_vertices = set()
        for n in range(1, 8):
            for g in nonisomorphic_graphs(n):
                if g.m == m and all(g.adj[v] != 0 for v in range(g.n)):
                    by_vertices.add(canonical_certificate(g))
        if m == 0:
            assert by_vertices == set()  # null graph only appears by edges
            assert len(by_edges) == 1
        else:
            assert by_edges == by_vertices


def test_by_edges_m4_split_by_order():
    # the only m=4 class needing 8 vertices is the perfect matching 4K2
    graphs = nonisomorphic_graphs_by_edges(4)
    big = [g for g in graphs if g.n == 8]
    assert len(big) == 1 and big[0].m == 4 and all(
        g.adj and r.bit_count() == 1 for g in big for r in g.adj
    )
    assert len([g for g in graphs if g.n <= 7]) == 10


def test_by_edges_n_max_filter():
    only_small = nonisomorphic_graphs_by_edges(3, n_max=4)
    assert {g.n for g in only_small} <= {3, 4}
    assert len(only_small) == 3  # K3, P4, S3


def test_by_edges_cap():
    with pytest.raises(ValueError):
        nonisomorphic_graphs_by_edges(14)
