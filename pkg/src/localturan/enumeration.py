"""Enumeration of cliques, pattern copies, and non-isomorphic small graphs.

Copies of a pattern are (vertex set, embedded edge set) pairs: two copies on
the same vertices with different edge sets are distinct, matching the
not-necessarily-induced subgraph convention used throughout.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .canon import canonical_certificate_adj
from .graphs import (
    Graph,
    bits,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list_text,
    induced_subgraph,
    mask_of,
    path_graph,
    star_graph,
)

DEFAULT_VERTEX_CAP = 8
DEFAULT_EDGE_CAP = 13


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def cliques(g: Graph, t: int) -> Iterator[int]:
    """Vertex masks of t-cliques, in lexicographic order of sorted vertex lists."""
    if t < 1:
        raise ValueError("clique size must be at least 1")

    def rec(current: int, cand: int, depth: int) -> Iterator[int]:
        if depth == t:
            yield current
            return
        if cand.bit_count() < t - depth:
            return
        for v in bits(cand):
            above = -(1 << (v + 1))
            yield from rec(current | 1 << v, cand & g.adj[v] & above, depth + 1)

    yield from rec(0, g.vertex_mask(), 0)


def clique_count(g: Graph, t: int) -> int:
    return sum(1 for _ in cliques(g, t))


def clique_number(g: Graph) -> int:
    """Size of the largest clique (0 for the null graph)."""
    best = 0

    def rec(size: int, cand: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        for v in bits(cand):
            rec(size + 1, cand & g.adj[v] & -(1 << (v + 1)))

    rec(0, g.vertex_mask())
    return best


# ---------------------------------------------------------------------------
# patterns and copies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """A pattern graph with cached automorphism count and dominating set."""

    name: str
    graph: Graph
    aut_size: int
    dom: int  # mask of vertices adjacent to all others

    @property
    def t(self) -> int:
        return self.graph.n

    @property
    def dom_size(self) -> int:
        return self.dom.bit_count()


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by brute force over vertex permutations (patterns are small)."""
    count = 0
    edges = list(g.edges())
    for p in permutations(range(g.n)):
        if all(g.has_edge(p[u], p[v]) for u, v in edges):
            count += 1
    return count


def dominating_mask(g: Graph) -> int:
    full = g.vertex_mask()
    return mask_of(v for v in range(g.n) if g.adj[v] == full & ~(1 << v))


def make_pattern(name: str, g: Graph) -> Pattern:
    if g.n > 8:
        raise ValueError("patterns larger than 8 vertices are out of scope")
    return Pattern(name, g, automorphism_count(g), dominating_mask(g))


_NAME_RE = re.compile(r"^([KPSC])(\d+)$")


def pattern_by_name(name: str) -> Pattern:
    """Catalog lookup: K_t, P_n, S_r, C_k by name, plus paw and diamond."""
    if name == "paw":
        return make_pattern(name, Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]))
    if name == "diamond":
        return make_pattern(name, Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown pattern name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    if kind == "K":
        return make_pattern(name, complete_graph(k))
    if kind == "P":
        return make_pattern(name, path_graph(k))
    if kind == "S":
        return make_pattern(name, star_graph(k))
    return make_pattern(name, cycle_graph(k))


def pattern_from_edge_list(name: str, text: str) -> Pattern:
    return make_pattern(name, from_edge_list_text(text))


def remove_dominating(h: Pattern, u: int) -> Pattern:
    """Pattern with u dominating vertices removed (any u; the results are
    isomorphic because dominating vertices are interchangeable)."""
    if u > h.dom_size:
        raise ValueError(f"pattern {h.name} has only {h.dom_size} dominating vertices")
    drop = 0
    for v in bits(h.dom):
        if drop.bit_count() == u:
            break
        drop |= 1 << v
    sub, _ = induced_subgraph(h.graph, h.graph.vertex_mask() & ~drop)
    return make_pattern(f"{h.name}-{u}dom", sub)


@dataclass(frozen=True)
class SubgraphCopy:
    """An embedded copy of a pattern: vertex mask, embedded edges, dominating
    vertices of the copy (computed from the embedded edge set)."""

    vertices: int
    edges: tuple[tuple[int, int], ...]
    dom: int


def _matching_order(h: Graph) -> list[int]:
    """Static search order: connect to already-placed vertices early."""
    order: list[int] = []
    placed = 0
    degs = [h.adj[v].bit_count() for v in range(h.n)]
    while len(order) < h.n:
        best_v, best_key = -1, None
        for v in range(h.n):
            if placed >> v & 1:
                continue
            key = ((h.adj[v] & placed).bit_count(), degs[v], -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        order.append(best_v)
        placed |= 1 << best_v
    return order


def injective_homomorphisms(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    """All injective edge-preserving maps V(h) -> V(g), as assignment tuples."""
    t = h.n
    if t == 0:
        yield ()
        return
    if t > g.n:
        return
    order = _matching_order(h)
    assignment = [-1] * t
    full = g.vertex_mask()

    def rec(k: int, used: int) -> Iterator[tuple[int, ...]]:
        if k == t:
            yield tuple(assignment)
            return
        p = order[k]
        cand = full
        anchored = False
        for q in bits(h.adj[p]):
            if assignment[q] != -1:
                cand &= g.adj[assignment[q]]
                anchored = True
        if not anchored:
            cand = full
        cand &= ~used
        for v in bits(cand):
            assignment[p] = v
            yield from rec(k + 1, used | 1 << v)
            assignment[p] = -1

    yield from rec(0, 0)


def injective_hom_count(g: Graph, h: Graph) -> int:
    return sum(1 for _ in injective_homomorphisms(g, h))


def _dom_of_copy(vmask: int, edges: tuple[tuple[int, int], ...]) -> int:
    deg = {v: 0 for v in bits(vmask)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    k = vmask.bit_count()
    return mask_of(v for v, d in deg.items() if d == k - 1)


def copies(g: Graph, h: Pattern) -> Iterator[SubgraphCopy]:
    """Each subgraph of g isomorphic to h, exactly once."""
    h_edges = list(h.graph.edges())
    seen: set[tuple[int, tuple[tuple[int, int], ...]]] = set()
    for mapping in injective_homomorphisms(g, h.graph):
        vmask = mask_of(mapping)
        emb = tuple(
            sorted(
                (mapping[u], mapping[v]) if mapping[u] < mapping[v]
                else (mapping[v], mapping[u])
                for u, v in h_edges
            )
        )
        key = (vmask, emb)
        if key in seen:
            continue
        seen.add(key)
        yield SubgraphCopy(vmask, emb, _dom_of_copy(vmask, emb))


def copies_count(g: Graph, h: Pattern) -> int:
    """Number of copies = injective homomorphisms / |Aut(h)|."""
    total = injective_hom_count(g, h.graph)
    assert total % h.aut_size == 0
    return total // h.aut_size


def count_copies_in_clique(h: Pattern, k: int) -> int:
    """Copies of the pattern in K_k: k!/((k-t)! |Aut|), 0 when k < t."""
    if k < 0:
        raise ValueError("clique order must be non-negative")
    t = h.t
    if k < t:
        return 0
    value = math.perm(k, t)
    assert value % h.aut_size == 0
    return value // h.aut_size


# ---------------------------------------------------------------------------
# isomorph-free generation, by vertex count
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[tuple[int, ...], None] = {}
    for parent in _graphs_on(n - 1):
        base = list(parent.adj) + [0]
        for sub in range(1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = sub
            for v in bits(sub):
                adj[v] |= 1 << (n - 1)
            seen[canonical_certificate_adj(adj)] = None
    return tuple(Graph.from_adj(cert) for cert in sorted(seen))


def nonisomorphic_graphs(n: int, cap: int = DEFAULT_VERTEX_CAP) -> tuple[Graph, ...]:
    """One representative per isomorphism class of simple graphs on n vertices."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > cap:
        raise ValueError(f"vertex cap exceeded: {n} > {cap}")
    return _graphs_on(n)


def nonisomorphic_graphs_up_to(n: int, cap: int = DEFAULT_VERTEX_CAP) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(nonisomorphic_graphs(k, cap))
    return out


# ---------------------------------------------------------------------------
# isomorph-free generation, by edge count (no isolated vertices)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def connected_graphs_by_edges(m: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly m >= 1 edges, one per isomorphism class.

    Augmentation: every connected graph with m edges arises from a connected
    graph with m-1 edges by adding an edge between existing vertices
    (inverse: delete a cycle edge) or attaching a pendant vertex (inverse:
    delete a leaf).
    """
    if m < 1:
        return ()
    if m == 1:
        return (complete_graph(2),)
    seen: dict[tuple[int, ...], None] = {}
    for parent in connected_graphs_by_edges(m - 1):
        n = parent.n
        for u in range(n):
            for v in range(u + 1, n):
                if not parent.has_edge(u, v):
                    adj = list(parent.adj)
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    seen[canonical_certificate_adj(adj)] = None
        for u in range(n):
            adj = list(parent.adj) + [1 << u]
            adj[u] |= 1 << n
            seen[canonical_certificate_adj(adj)] = None
    return tuple(Graph.from_adj(cert) for cert in sorted(seen))


def nonisomorphic_graphs_by_edges(
    m: int, n_max: int | None = None, cap: int = DEFAULT_EDGE_CAP
) -> list[Graph]:
    """Graphs with exactly m edges and no isolated vertices, one per class.

    Assembled as multisets of connected classes, so no global isomorphism
    dedup is needed: distinct component multisets give non-isomorphic unions.
    """
    if m < 0:
        raise ValueError("edge count must be non-negative")
    if m > cap:
        raise ValueError(f"edge cap exceeded: {m} > {cap}")
    if n_max is None:
        n_max = 2 * m
    if m == 0:
        return [Graph(0)] if n_max >= 0 else []
    catalog = {c: connected_graphs_by_edges(c) for c in range(1, m + 1)}

    out: list[Graph] = []

    def assemble(remaining: int, limit: tuple[int, int], parts: list[Graph], n_used: int):
        if remaining == 0:
            out.append(disjoint_union(parts))
            return
        c_hi, i_hi = limit
        for c in range(min(remaining, c_hi), 0, -1):
            pool = catalog[c]
            top = i_hi if c == c_hi else len(pool) - 1
            for i in range(top, -1, -1):
                comp = pool[i]
                if n_used + comp.n > n_max:
                    continue
                parts.append(comp)
                assemble(remaining - c, (c, i), parts, n_used + comp.n)
                parts.pop()

    assemble(m, (m, len(catalog[m]) - 1), [], 0)
    return out
