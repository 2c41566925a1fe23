"""Hand-built inputs shared by several test modules."""

from __future__ import annotations

from itertools import combinations

from chromstab.graph import Graph
from chromstab.theorems import G12_LABELS

TRIPLES = (("a", "b", "c"), ("u", "v", "w"), ("1", "2", "3"), ("x", "y", "z"))

# cross-triple pairs left out of the candidate G12
G12_NON_EDGES = {
    frozenset(p)
    for p in [
        ("a", "v"), ("b", "u"), ("c", "w"), ("1", "z"), ("2", "y"),
        ("3", "x"), ("b", "1"), ("b", "z"), ("u", "1"), ("u", "z"),
    ]
}


def g12_candidate() -> Graph:
    """Four independent triples, joined completely except for ``G12_NON_EDGES``.

    Derived from the textual constraints on the 14-vertex example; the only
    independent sets of size >= 3 it admits in G14 are the triples and the
    subsets of {b, u, 1, z}.
    """
    at = {name: i for i, name in enumerate(G12_LABELS)}
    side = {name: i for i, t in enumerate(TRIPLES) for name in t}
    edges = [
        (at[p], at[q])
        for p, q in combinations(G12_LABELS, 2)
        if side[p] != side[q] and frozenset((p, q)) not in G12_NON_EDGES
    ]
    return Graph.from_edges(12, edges, G12_LABELS)
