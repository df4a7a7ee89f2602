"""Canonical forms for small graphs.

Color refinement plus individualization backtracking.  The certificate is
the minimum relabeled adjacency tuple over the leaves of the refinement
tree, which is a complete isomorphism invariant (two graphs have equal
certificates iff they are isomorphic).  A homogeneous-partition shortcut
keeps highly symmetric graphs (complete multipartite, unions of cliques)
from exploding the search.

Intended scale is the package's working range (n <= ~16); tests compare
against a permutation brute force on small n.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, bits


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Iterate color refinement to a stable partition.

    New color ids are ranks of (old color, sorted neighbor colors)
    signatures, so they are isomorphism-invariant.
    """
    ncolors = len(set(colors))
    n = len(nbrs)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [order[sig] for sig in sigs]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _cells(colors: list[int]) -> list[int]:
    """Vertex masks of the color classes, ordered by color id."""
    out: dict[int, int] = {}
    for v, c in enumerate(colors):
        out[c] = out.get(c, 0) | (1 << v)
    return [out[c] for c in sorted(out)]


def _is_homogeneous(adj: Sequence[int], cells: list[int]) -> bool:
    """True when every cell pair (and cell interior) is complete or empty.

    In that case the relabeled adjacency matrix does not depend on the
    ordering within cells, so a certificate can be read off directly.
    """
    for ci in cells:
        for v in bits(ci):
            inside = adj[v] & ci & ~(1 << v)
            if inside != 0 and inside != ci & ~(1 << v):
                return False
        for cj in cells:
            if cj <= ci:
                continue
            for v in bits(ci):
                out = adj[v] & cj
                if out != 0 and out != cj:
                    return False
    return True


def _certificate_for_order(adj: Sequence[int], perm: list[int]) -> tuple[int, ...]:
    """Relabeled adjacency rows when old vertex perm[i] becomes i."""
    pos = [0] * len(adj)
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _search(adj, nbrs, colors: list[int], best: list) -> None:
    colors = _refine(nbrs, colors)
    cells = _cells(colors)
    target = next((c for c in cells if c.bit_count() > 1), None)
    if target is None or _is_homogeneous(adj, cells):
        perm = [v for c in cells for v in bits(c)]
        cert = _certificate_for_order(adj, perm)
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    for v in bits(target):
        branched = [c + 1 for c in colors]
        branched[v] = 0
        _search(adj, nbrs, branched, best)


def canonical_certificate_adj(adj: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of raw adjacency rows (no validation)."""
    n = len(adj)
    if n == 0:
        return ()
    nbrs = [list(bits(row)) for row in adj]
    best: list = [None]
    _search(adj, nbrs, [0] * n, best)
    return best[0]


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Canonical adjacency-row tuple; equal certificates mean isomorphic."""
    return canonical_certificate_adj(g.adj)


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_adj(canonical_certificate(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_certificate(g1) == canonical_certificate(g2)


def brute_force_certificate(g: Graph) -> tuple[int, ...]:
    """Minimum relabeled adjacency tuple over all permutations.

    Exponential; only useful as an oracle for the refinement-based form
    on very small graphs.
    """
    from itertools import permutations

    if g.n == 0:
        return ()
    return min(
        _certificate_for_order(g.adj, list(p)) for p in permutations(range(g.n))
    )
