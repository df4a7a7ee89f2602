"""Simple undirected graphs on vertex set {0, ..., n-1} with bitmask adjacency.

Vertex sets are plain Python ints used as bitmasks; ``bits`` and ``mask_of``
convert between masks and vertex iterables.  Every enumeration in this
package is intersection-heavy, which is why adjacency rows are bitmasks.
Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph: no loops, no multi-edges, vertices 0..n-1."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} rejected")
            if adj[u] >> v & 1:
                raise ValueError(f"multi-edge ({u},{v}) rejected")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self.adj = tuple(adj)
        self.m = m

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Build from adjacency rows, validating symmetry and irreflexivity."""
        g = cls.__new__(cls)
        n = len(adj)
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError("adjacency row references vertex >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v} rejected")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError("adjacency is not symmetric")
            total += row.bit_count()
        g.n = n
        g.adj = tuple(adj)
        g.m = total // 2
        return g

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.adj[v].bit_count()


def min_degree(g: Graph) -> int:
    return min((row.bit_count() for row in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def common_neighborhood(g: Graph, u_set: int) -> int:
    """Vertices adjacent to every member of *u_set*, excluding u_set itself."""
    if u_set == 0:
        raise ValueError("common neighborhood of the empty set is undefined")
    inter = g.vertex_mask()
    for v in bits(u_set):
        inter &= g.adj[v]
    return inter & ~u_set


def common_degree(g: Graph, u_set: int) -> int:
    return common_neighborhood(g, u_set).bit_count()


def is_clique(g: Graph, vset: int) -> bool:
    for v in bits(vset):
        if vset & ~g.adj[v] & ~(1 << v):
            return False
    return True


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def component_of(g: Graph, vset: int) -> int:
    """Mask of the component containing *vset*; raises if vset spans several."""
    for comp in components(g):
        if vset & comp:
            if vset & ~comp:
                raise ValueError("vertex set spans multiple components")
            return comp
    raise ValueError("empty vertex set has no component")


def induced_subgraph(g: Graph, vset: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on *vset*, relabeled 0..k-1; returns (graph, old labels)."""
    verts = list(bits(vset))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & vset):
            adj[index[v]] |= 1 << index[u]
    return Graph.from_adj(adj), verts


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph.from_adj(adj)


def is_balanced_complete_multipartite(
    g: Graph, min_parts: int
) -> tuple[bool, list[int] | None]:
    """Check complete multipartite structure with equal part sizes.

    Non-adjacency must be an equivalence relation (so the parts are the
    non-adjacency classes), all parts must have equal size, and there must
    be at least *min_parts* of them.  Returns the partition as vertex masks
    when the answer is yes.
    """
    if g.n == 0:
        return False, None
    full = g.vertex_mask()
    parts = []
    assigned = 0
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        part = full & ~g.adj[v]  # v plus its non-neighbors
        # every member must have exactly the same non-neighborhood
        for u in bits(part):
            if (full & ~g.adj[u]) != part:
                return False, None
        parts.append(part)
        assigned |= part
    sizes = {p.bit_count() for p in parts}
    if len(sizes) != 1 or len(parts) < min_parts:
        return False, None
    return True, parts


def is_disjoint_union_of_cliques(
    g: Graph, min_order: int, allow_isolated: bool
) -> bool:
    """True iff every component is complete, with order >= min_order or
    (when allowed) an isolated vertex."""
    if min_order < 1:
        raise ValueError("min_order must be at least 1")
    for comp in components(g):
        size = comp.bit_count()
        if not is_clique(g, comp):
            return False
        if size < min_order and not (allow_isolated and size == 1):
            return False
    return True


def components_regular_no_isolated(g: Graph) -> bool:
    """True iff minimum degree >= 1 and each component is regular."""
    if g.n == 0:
        return False
    for comp in components(g):
        degs = {g.adj[v].bit_count() for v in bits(comp)}
        if degs == {0} or len(degs) != 1:
            return False
    return True


def blocks(g: Graph) -> list[int]:
    """Biconnected components (blocks) as vertex masks.

    Bridges appear as 2-vertex blocks; isolated vertices are not listed.
    Iterative lowpoint DFS so deep paths don't hit the recursion limit.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    out: list[int] = []
    for root in range(g.n):
        if disc[root] != -1 or g.adj[root] == 0:
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(bits(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    block = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        block |= (1 << a) | (1 << b)
                        if (a, b) == (pv, v):
                            break
                    out.append(block)
    return out


# ---------------------------------------------------------------------------
# graph6 format (bit-exact per the McKay format description)
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = [63 + n]
    elif n <= 258047:
        header = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise ValueError("graph6 writer supports n <= 258047")
    # upper triangle, columns before rows: (0,1),(0,2),(1,2),(0,3),...
    body = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                body.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        body.append(63 + (acc << (6 - nbits)))
    return bytes(header + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [c - 63 for c in s.encode("ascii")]
    if any(not 0 <= d <= 63 for d in data):
        raise ValueError("invalid graph6 character")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 63:  # '~' prefix: extended vertex count
        if len(data) < 4:
            raise ValueError("truncated graph6 header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = n * (n - 1) // 2
    if len(data) * 6 < need:
        raise ValueError("graph6 body too short")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if data[pos // 6] >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph.from_adj(adj)


# ---------------------------------------------------------------------------
# plain edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------

def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge-list input must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed edge-list input: {exc}") from None
    if len(edges) != m:
        raise ValueError(f"edge-list declares {m} edges but has {len(edges)}")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# small constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for j in range(n) for i in range(j)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
