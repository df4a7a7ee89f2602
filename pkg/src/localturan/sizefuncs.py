"""Size functions: the largest clique, path, star, or cycle through a copy.

Longest-path and longest-cycle containment are NP-hard in general; here they
are exact anchored DFS with reachability pruning, which is plenty at the
package's working scale (components of at most ~13 vertices).
"""

from __future__ import annotations

from .enumeration import SubgraphCopy
from .graphs import (
    Graph,
    bits,
    common_neighborhood,
    component_of,
    components,
    is_clique,
)


def _closure(g: Graph, seed: int, allowed: int) -> int:
    """Vertices reachable from seed using only vertices in *allowed*."""
    region = seed & allowed
    frontier = region
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= g.adj[u]
        frontier = grow & allowed & ~region
        region |= frontier
    return region


def _require_clique(g: Graph, t_clique: int) -> None:
    if t_clique == 0:
        raise ValueError("empty vertex set is not a clique")
    if not is_clique(g, t_clique):
        raise ValueError("input vertex set does not span a clique")


def largest_clique_with(g: Graph, t_clique: int) -> int:
    """Order of the largest clique of g containing the given clique."""
    _require_clique(g, t_clique)
    cand = common_neighborhood(g, t_clique)
    best = 0

    def extend(size: int, pool: int) -> None:
        nonlocal best
        if size + pool.bit_count() <= best:
            return
        if pool == 0:
            best = max(best, size)
            return
        for v in bits(pool):
            extend(size + 1, pool & g.adj[v] & -(1 << (v + 1)))

    extend(0, cand)
    return t_clique.bit_count() + best


def longest_path_through(g: Graph, t_clique: int) -> int:
    """Maximum k such that some path subgraph P_{k+1} of g contains all
    vertices of the clique.  Returns the path length in edges.

    Any ordering of the clique itself is a path, so the result is at least
    t-1 for a t-clique.
    """
    _require_clique(g, t_clique)
    comp = component_of(g, t_clique)
    ub = comp.bit_count() - 1
    best = -1

    def dfs(path: int, end: int, length: int) -> bool:
        nonlocal best
        if t_clique & ~path == 0 and length > best:
            best = length
            if best == ub:
                return True
        for v in bits(g.adj[end] & comp & ~path):
            allowed = comp & ~path
            region = _closure(g, 1 << v, allowed)
            if t_clique & ~path & ~region:
                continue  # some required vertex unreachable ahead
            if length + region.bit_count() <= best:
                continue  # cannot beat the best path found so far
            if dfs(path | 1 << v, v, length + 1):
                return True
        return False

    for start in bits(comp):
        if dfs(1 << start, start, 0):
            break
    return best


def largest_cycle_through(g: Graph, t_clique: int) -> int:
    """Maximum k such that some cycle subgraph C_k contains all clique
    vertices; 0 when no cycle does."""
    _require_clique(g, t_clique)
    comp = component_of(g, t_clique)
    nmax = comp.bit_count()
    if nmax < 3:
        return 0
    anchor = (t_clique & -t_clique).bit_length() - 1
    best = 0

    def dfs(path: int, end: int, count: int) -> bool:
        nonlocal best
        if count >= 3 and g.adj[end] >> anchor & 1 and t_clique & ~path == 0:
            if count > best:
                best = count
                if best == nmax:
                    return True
        for v in bits(g.adj[end] & comp & ~path):
            allowed = (comp & ~path) | (1 << anchor)
            region = _closure(g, 1 << v, allowed)
            if not region >> anchor & 1:
                continue  # cannot close the cycle from here
            if t_clique & ~path & ~region:
                continue
            if count + region.bit_count() - 1 <= best:
                continue  # anchor is in region but already counted
            if dfs(path | 1 << v, v, count + 1):
                return True
        return False

    dfs(1 << anchor, anchor, 1)
    return best


def largest_star_size(g: Graph, copy: SubgraphCopy) -> int:
    """Maximum g-degree over the copy's dominating vertices (the size of the
    largest star centered in the copy that contains all its vertices)."""
    if copy.dom == 0:
        raise ValueError("copy has no dominating vertex")
    return max(g.adj[v].bit_count() for v in bits(copy.dom))


def longest_path_length(g: Graph) -> int:
    """Length in edges of a longest path anywhere in g (0 for edgeless g)."""
    best = 0
    for comp in components(g):
        ub = comp.bit_count() - 1
        if ub <= best:
            continue

        done = False

        def dfs(path: int, end: int, length: int) -> None:
            nonlocal best, done
            if length > best:
                best = length
                if best == ub:
                    done = True
            if done:
                return
            for v in bits(g.adj[end] & comp & ~path):
                region = _closure(g, 1 << v, comp & ~path)
                if length + region.bit_count() <= best:
                    continue
                dfs(path | 1 << v, v, length + 1)
                if done:
                    return

        for start in bits(comp):
            dfs(1 << start, start, 0)
            if done:
                break
    return best
