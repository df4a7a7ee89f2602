"""q-uniform hypergraphs: i-degrees, the real size function x, and the
machinery behind the localized hypergraph bound and its degree-capped
corollary.

The size function x(I) is defined implicitly by d(I) = binom(x(I)-i, q-i)
with x(I)-i >= q-i-1; it is irrational in general, so this side of the
package works in floats with fixed tolerances (1e-9 on sums) and re-examines
near-ties at 50 significant digits with mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import mpmath
import numpy as np

from .graphs import Graph
from .weights import gen_binom

SUM_TOLERANCE = 1e-9
NEAR_TIE = 1e-6


@dataclass(frozen=True)
class UniformHypergraph:
    """q-uniform hypergraph on vertices 0..n-1; edges are sorted q-tuples."""

    n: int
    q: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def identifier(self) -> str:
        """Deterministic text id used as the report key."""
        body = ",".join("".join(str(v) for v in e) if self.n <= 10
                        else "-".join(str(v) for v in e)
                        for e in self.edges)
        return f"hg(n={self.n},q={self.q},m={self.m};{body})"


def uniform_hypergraph(n: int, q: int, edges: Iterable[Sequence[int]]) -> UniformHypergraph:
    if q < 1:
        raise ValueError("uniformity must be at least 1")
    norm = set()
    for e in edges:
        tup = tuple(sorted(e))
        if len(tup) != q or len(set(tup)) != q:
            raise ValueError(f"edge {e} is not a set of {q} distinct vertices")
        if not all(0 <= v < n for v in tup):
            raise ValueError(f"edge {e} out of range for n={n}")
        if tup in norm:
            raise ValueError(f"duplicate edge {e}")
        norm.add(tup)
    return UniformHypergraph(n, q, tuple(sorted(norm)))


def graph_as_hypergraph(g: Graph) -> UniformHypergraph:
    return uniform_hypergraph(g.n, 2, list(g.edges()))


def i_degree(h: UniformHypergraph, i_set: Sequence[int]) -> int:
    """Number of edges containing the given i-set (i < q)."""
    s = set(i_set)
    if not 1 <= len(s) < h.q or len(s) != len(tuple(i_set)):
        raise ValueError(f"i-set must have 1 <= |I| < q distinct vertices, got {i_set}")
    return sum(1 for e in h.edges if s.issubset(e))


def max_i_degree(h: UniformHypergraph, i: int) -> int:
    if not 1 <= i < h.q:
        raise ValueError("need 1 <= i < q")
    best = 0
    for s in combinations(range(h.n), i):
        best = max(best, sum(1 for e in h.edges if set(s).issubset(e)))
    return best


def solve_x(d: int, i: int, q: int, tol: float = 1e-12) -> float:
    """The unique x >= q-1 with d = binom(x-i, q-i), by monotone bisection.

    For d = 0 the generalized binomial vanishes exactly at the left endpoint
    x-i = q-i-1, so x = q-1 is returned.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if not 1 <= i < q:
        raise ValueError("need q > i >= 1")
    k = q - i
    lo = float(k - 1)
    if d == 0:
        return lo + i
    hi = float(k + d)  # binom(k+d, k) >= d+1, so the root is below
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if gen_binom(mid, k) < d:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2 + i


def _solve_x_mp(d: int, i: int, q: int) -> mpmath.mpf:
    """High-precision variant used to re-examine near-ties."""
    k = q - i
    lo = mpmath.mpf(k - 1)
    if d == 0:
        return lo + i

    def f(y):
        prod = mpmath.mpf(1)
        for j in range(k):
            prod *= y - j
        return prod / math.factorial(k) - d

    hi = mpmath.mpf(k + d)
    for _ in range(mpmath.mp.prec + 40):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2 + i


def hypercliques(h: UniformHypergraph, t: int) -> Iterator[tuple[int, ...]]:
    """t-sets all of whose q-subsets are edges, in lexicographic order."""
    if t < h.q:
        raise ValueError("clique size below uniformity")
    edge_set = set(h.edges)

    def ok_with(chosen: tuple[int, ...], v: int) -> bool:
        # all q-subsets involving v must be edges
        return all(
            tuple(sorted(sub + (v,))) in edge_set
            for sub in combinations(chosen, h.q - 1)
        )

    def rec(chosen: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == t:
            yield chosen
            return
        for v in range(start, h.n):
            if len(chosen) < h.q - 1 or ok_with(chosen, v):
                yield from rec(chosen + (v,), v + 1)

    yield from rec((), 0)


def hyperclique_count(h: UniformHypergraph, t: int) -> int:
    return sum(1 for _ in hypercliques(h, t))


def clique_x_value(h: UniformHypergraph, t_set: Sequence[int], i: int) -> float:
    """x(T) = max over i-subsets I of T of x(I).

    For a clique T every i-subset has positive degree (the q-subsets of T
    through I are edges); a zero degree here would mean T is not a clique.
    """
    best = None
    for s in combinations(sorted(t_set), i):
        d = i_degree(h, s)
        if d == 0:
            raise ValueError(f"i-set {s} inside a clique has degree 0")
        x = solve_x(d, i, h.q)
        if best is None or x > best:
            best = x
    if best is None:
        raise ValueError("empty t-set")
    return best


# ---------------------------------------------------------------------------
# sums and bounds for the localized hypergraph theorem and its corollary
# ---------------------------------------------------------------------------

def local_hypergraph_sum(h: UniformHypergraph, t: int, i: int) -> float:
    """Sum over t-cliques of 1/binom(x(T)-i, t-i)."""
    if not t >= h.q > i >= 1:
        raise ValueError("need t >= q > i >= 1")
    total = 0.0
    for clique in hypercliques(h, t):
        x = clique_x_value(h, clique, i)
        total += 1.0 / gen_binom(x - i, t - i)
    return total


def local_hypergraph_bound(h: UniformHypergraph, t: int, i: int) -> Fraction:
    return Fraction(math.comb(h.n, i), math.comb(t, i))


def local_hypergraph_sum_highprec(h: UniformHypergraph, t: int, i: int) -> mpmath.mpf:
    """Quadruple-width re-evaluation for sums within NEAR_TIE of the bound."""
    with mpmath.workdps(50):
        total = mpmath.mpf(0)
        for clique in hypercliques(h, t):
            best = None
            for s in combinations(clique, i):
                x = _solve_x_mp(i_degree(h, s), i, h.q)
                if best is None or x > best:
                    best = x
            prod = mpmath.mpf(1)
            for j in range(t - i):
                prod *= best - i - j
            total += math.factorial(t - i) / prod
        return total


def kr22_bound(h: UniformHypergraph, t: int, i: int, x_cap: float) -> float:
    """Degree-capped clique bound: binom(n,i)/binom(x,i) * binom(x,t)."""
    if x_cap < h.q:
        raise ValueError("x_cap must be at least q")
    return math.comb(h.n, i) / gen_binom(float(x_cap), i) * gen_binom(float(x_cap), t)


def kr22_hypothesis_holds(h: UniformHypergraph, i: int, x_cap: float) -> bool:
    return max_i_degree(h, i) <= gen_binom(float(x_cap) - i, h.q - i) + SUM_TOLERANCE


def lkk_x(m: int, q: int) -> float:
    """Real x >= q-1 with m = binom(x, q) (edge-count Kruskal-Katona form)."""
    if m < 0:
        raise ValueError("edge count must be non-negative")
    lo = float(q - 1)
    if m == 0:
        return lo
    hi = float(q + m)
    for _ in range(200):
        if hi - lo <= 1e-12:
            break
        mid = (lo + hi) / 2
        if gen_binom(mid, q) < m:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def edge_conjecture_sum(h: UniformHypergraph, t: int, i: int) -> float:
    """Sum over t-cliques of 1/binom(x(T)-q, t-q) (edge-budget weighting)."""
    if not t >= h.q > i >= 1:
        raise ValueError("need t >= q > i >= 1")
    total = 0.0
    for clique in hypercliques(h, t):
        x = clique_x_value(h, clique, i)
        total += 1.0 / gen_binom(x - h.q, t - h.q)
    return total


def edge_conjecture_bound(h: UniformHypergraph, t: int) -> Fraction:
    return Fraction(h.m, math.comb(t, h.q))


# ---------------------------------------------------------------------------
# isomorph-free enumeration of small uniform hypergraphs
# ---------------------------------------------------------------------------

def nonisomorphic_hypergraphs(n: int, q: int = 3) -> list[UniformHypergraph]:
    """One representative per isomorphism class of q-uniform hypergraphs on
    labeled vertex set [n] (isolated vertices allowed).

    Scans all labeled edge-set bitmasks in increasing order and expands the
    full vertex-permutation orbit of each unseen mask, so the representative
    kept is the minimum mask of its orbit.
    """
    combos = list(combinations(range(n), q))
    nbits = len(combos)
    if nbits > 20:
        raise ValueError("labeled scan supports at most 20 candidate edges")
    index = {c: j for j, c in enumerate(combos)}
    perms = list(permutations(range(n)))
    dst = np.empty((len(perms), nbits), dtype=np.int64)
    for p, perm in enumerate(perms):
        for j, c in enumerate(combos):
            dst[p, j] = index[tuple(sorted(perm[v] for v in c))]
    powers = np.left_shift(np.int64(1), dst)
    seen = bytearray(1 << nbits)
    reps: list[int] = []
    positions = np.arange(nbits, dtype=np.int64)
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        reps.append(mask)
        bits_vec = (mask >> positions) & 1
        orbit = (bits_vec[np.newaxis, :] * powers).sum(axis=1)
        for value in np.unique(orbit):
            seen[int(value)] = 1
    out = []
    for mask in reps:
        edges = [combos[j] for j in range(nbits) if mask >> j & 1]
        out.append(UniformHypergraph(n, q, tuple(edges)))
    return out


# ---------------------------------------------------------------------------
# text format and fixtures
# ---------------------------------------------------------------------------

def to_hypergraph_text(h: UniformHypergraph) -> str:
    lines = [f"{h.n} {h.q} {h.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def from_hypergraph_text(text: str) -> UniformHypergraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 3:
        raise ValueError("hypergraph input must start with a line 'n q m'")
    try:
        n, q, m = (int(w) for w in rows[0])
        edges = [[int(w) for w in row] for row in rows[1:]]
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed hypergraph input: {exc}") from None
    if len(edges) != m:
        raise ValueError(f"hypergraph declares {m} edges but has {len(edges)}")
    return uniform_hypergraph(n, q, edges)


def shadow(h: UniformHypergraph, q: int) -> UniformHypergraph:
    """The q-shadow: all q-subsets of edges of h (q <= uniformity of h)."""
    if q > h.q:
        raise ValueError("shadow uniformity exceeds edge size")
    out = set()
    for e in h.edges:
        out.update(combinations(e, q))
    return UniformHypergraph(h.n, q, tuple(sorted(out)))


def fano_plane() -> UniformHypergraph:
    """The Steiner triple system S(2,3,7): every pair in exactly one block."""
    from importlib.resources import files

    text = files("localturan.fixtures").joinpath("fano.hg").read_text()
    return from_hypergraph_text(text)
