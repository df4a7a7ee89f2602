from __future__ import annotations

import math
from fractions import Fraction

import pytest

from localturan.enumeration import make_pattern, pattern_by_name
from localturan.graphs import Graph, from_graph6
from localturan.search import is_free_of, search_conjecture, turan_number

from .oracles import injective_map_count

K2 = pattern_by_name("K2")
K3 = pattern_by_name("K3")
P4 = pattern_by_name("P4")


def test_turan_examples():
    res = turan_number("ex", 6, K3, P4)
    assert res["value"] == 2
    assert res["checked_classes"] == 156
    res = turan_number("mex", 6, K3, P4)
    assert res["value"] == 2
    res = turan_number("ex", 4, K2, K3)
    assert res["value"] == 4
    # Mantel at n=5: the unique maximizer is the balanced bipartite graph
    res = turan_number("ex", 5, K2, K3)
    assert res["value"] == 6 and len(res["extremal"]) == 1


def test_turan_extremal_graphs_are_free_by_independent_oracle():
    for mode, budget in (("ex", 6), ("mex", 6)):
        res = turan_number(mode, budget, K3, P4)
        for g6 in res["extremal"]:
            g = from_graph6(g6)
            assert injective_map_count(g, P4.graph) == 0
            assert injective_map_count(g, K3.graph) // K3.aut_size == res["value"]


def test_turan_monotone_in_budget():
    prev = -1
    for n in range(3, 7):
        value = turan_number("ex", n, K3, P4)["value"]
        assert value >= prev
        prev = value
    prev = -1
    for m in range(1, 9):
        value = turan_number("mex", m, K3, P4)["value"]
        assert value >= prev
        prev = value


def test_turan_agrees_with_derived_bounds():
    # ex(6,K3,P4) vs (n/r) binom(r,t) at r=3, mex vs (m/binom(r,2)) binom(r,t)
    assert turan_number("ex", 6, K3, P4)["value"] == Fraction(6, 3) * math.comb(3, 3)
    assert turan_number("mex", 6, K3, P4)["value"] == Fraction(6, 3) * math.comb(3, 3)
    # Mantel at n=4 vs the clique-count bound binom(r,t) (n/r)^t at r=t=2
    assert turan_number("ex", 4, K2, K3)["value"] == math.comb(2, 2) * (4 // 2) ** 2


def test_turan_validation():
    with pytest.raises(ValueError):
        turan_number("ex", 9, K3, P4)
    with pytest.raises(ValueError):
        turan_number("nope", 4, K3, P4)
    with_isolated = make_pattern("K2+K1", Graph(3, [(0, 1)]))
    with pytest.raises(ValueError):
        turan_number("mex", 4, with_isolated, P4)


def test_is_free_of():
    assert is_free_of(from_graph6("Dhc"), pattern_by_name("K4"))
    assert not is_free_of(from_graph6("C~"), K3)


def test_frohmader_tight_examples():
    res = search_conjecture("frohmader", n_max=3, t_values=(2, 3))
    assert res["violations"] == [] and res["flagged"] == []
    tight = {(tc["graph6"], tc["t"]) for tc in res["tight_cases"]}
    # K3: three edges of weight 1 sum to 3 = m at t=2; at t=3 the single
    # triangle gives 3^(3/2) on both sides (verified exactly via squares)
    assert ("Bw", 2) in tight and ("Bw", 3) in tight


def test_cycle_conjecture_tight_examples():
    res = search_conjecture("cycle-order", n_max=3, t_values=(2,))
    tight = {tc["graph6"] for tc in res["tight_cases"]}
    assert "Bw" in tight  # K3: 3 * (2/3) = 2 = n - 1
    assert all(tc["characterization"] for tc in res["tight_cases"])
    assert res["violations"] == []

    res = search_conjecture("cycle-size", n_max=4, t_values=(3,))
    assert res["violations"] == []
    assert all(tc["characterization"] for tc in res["tight_cases"])


def test_cycle_size_t2_is_degenerate_on_bridgeless_graphs():
    # every edge on a cycle carries weight exactly 1 at t=2, so e.g. C4 is
    # tight without being complete: the equality clause only bites at t >= 3
    res = search_conjecture("cycle-size", n_max=4, t_values=(2,))
    flagged = {tc["graph6"] for tc in res["tight_cases"] if not tc["characterization"]}
    assert "Cl" in flagged  # C4
    assert res["violations"] == []


def test_conjecture_convention_notes_present():
    res = search_conjecture("cycle-order", n_max=3, t_values=(2,))
    assert "acyclic_copies" in res["convention_notes"]
    res = search_conjecture("frohmader", n_max=3, t_values=(2, 3))
    assert "odd_t" in res["convention_notes"]


def test_hypergraph_conjecture_search_small():
    res = search_conjecture("hypergraph-m", hyper_n_max=4, t_values=(3, 4))
    assert res["violations"] == []
    # t = q = 3 makes every hypergraph tight (weight 1 per clique-edge)
    assert any(tc["t"] == 3 for tc in res["tight_cases"])


def test_unknown_conjecture():
    with pytest.raises(ValueError):
        search_conjecture("zarankiewicz")
