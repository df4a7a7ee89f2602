from __future__ import annotations

import pytest

from localturan.enumeration import (
    nonisomorphic_graphs,
    nonisomorphic_graphs_by_edges,
)


@pytest.fixture(scope="session")
def graphs_by_n() -> dict[int, list]:
    """All isomorphism classes on 1..7 vertices (cached for the session)."""
    return {n: list(nonisomorphic_graphs(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def edge_catalog() -> dict[int, list]:
    """All isomorphism classes with m <= 12 edges and no isolated vertices.

    Expensive to build (about a minute); only tests that need the edge
    sweeps should request it.
    """
    return {m: nonisomorphic_graphs_by_edges(m) for m in range(13)}
