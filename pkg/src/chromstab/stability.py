"""Exact chromatic-stability index with certificates.

``es_chi`` minimises the number of monochromatic edges over partitions of the
vertex set into ``chi - 1`` classes: the monochromatic edges of such a
partition are exactly an edge set whose removal leaves a ``(chi - 1)``-colourable
graph, and every minimum such edge set arises this way. ``es_chi_oracle``
instead tries edge subsets in increasing size straight from the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import (
    Partition,
    chromatic_coloring,
    chromatic_number,
    k_colorable,
    partition_masks,
)
from .graph import Edge, Graph, bits, complement, delete_edges, popcount


@dataclass(frozen=True)
class StabilityCertificate:
    """``value`` edges whose deletion lowers chi, plus a ``(chi - 1)``-colouring
    of what remains. ``residual_coloring`` is ``None`` for edgeless graphs."""

    value: int
    deleted_edges: tuple[Edge, ...]
    residual_coloring: Partition | None

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "deleted_edges": [list(e) for e in self.deleted_edges],
            "residual_coloring": None if self.residual_coloring is None else self.residual_coloring.as_lists(),
        }


def _residual(g: Graph, deleted: tuple[Edge, ...], k: int) -> Partition:
    rest = delete_edges(g, deleted)
    masks = next(partition_masks(rest.adj, k))
    return Partition.from_masks(masks)


def _edgeless_certificate() -> StabilityCertificate:
    return StabilityCertificate(0, (), None)


def es_chi(g: Graph) -> StabilityCertificate:
    """Exact ``es_chi(g)`` by branch and bound over ``(chi - 1)``-partitions.

    Among minimum edge sets the lexicographically least sorted one is returned;
    its residual colouring is the first canonical ``(chi - 1)``-colouring of
    ``g`` minus those edges.
    """
    if g.m == 0:
        return _edgeless_certificate()
    chi = chromatic_number(g)
    k = chi - 1
    if k == 1:
        edges = tuple(g.edges())
        return StabilityCertificate(len(edges), edges, Partition(((*range(g.n),),)))
    value, deleted = _min_monochromatic(g, k)
    return StabilityCertificate(value, deleted, _residual(g, deleted, k))


def _initial_incumbent(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    # merge the two classes of an optimal colouring with the fewest edges between them
    masks = list(chromatic_coloring(g).masks)
    best = None
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            merged = masks[:i] + masks[i + 1 : j] + masks[j + 1 :] + [masks[i] | masks[j]]
            cand = _mono_edges(g, merged)
            key = (len(cand), cand)
            if best is None or key < best:
                best = key
    assert best is not None
    return best


def _mono_edges(g: Graph, masks: list[int]) -> tuple[Edge, ...]:
    out = []
    for cm in masks:
        for v in bits(cm):
            for u in bits(g.adj[v] & cm):
                if v < u:
                    out.append((v, u))
    out.sort()
    return tuple(out)


def _min_monochromatic(g: Graph, k: int) -> tuple[int, tuple[Edge, ...]]:
    n = g.n
    adj = g.adj
    order = sorted(range(n), key=lambda v: (-popcount(adj[v]), v))
    best_count, best_edges = _initial_incumbent(g)
    classes: list[int] = []

    def lower_bound(i: int) -> int:
        if len(classes) < k:
            return 0
        total = 0
        for v in order[i:]:
            a = adj[v]
            total += min(popcount(a & cm) for cm in classes)
        return total

    def rec(i: int, count: int) -> None:
        nonlocal best_count, best_edges
        if count > best_count:
            return
        if i == n:
            edges = _mono_edges(g, classes)
            if (count, edges) < (best_count, best_edges):
                best_count, best_edges = count, edges
            return
        if count + lower_bound(i) > best_count:
            return
        v = order[i]
        a = adj[v]
        bit = 1 << v
        # cheapest class first so good incumbents appear early
        choices = sorted(range(len(classes)), key=lambda c: popcount(a & classes[c]))
        for c in choices:
            add = popcount(a & classes[c])
            if count + add > best_count:
                break
            classes[c] |= bit
            rec(i + 1, count + add)
            classes[c] &= ~bit
        if len(classes) < k:
            classes.append(bit)
            rec(i + 1, count)
            classes.pop()

    rec(0, 0)
    return best_count, best_edges


def es_chi_oracle(g: Graph) -> StabilityCertificate:
    """``es_chi`` straight from the definition: try every edge subset of size
    0, 1, 2, ... in lexicographic order until one lowers chi. Small graphs only."""
    if g.m == 0:
        return _edgeless_certificate()
    chi = chromatic_number(g)
    edges = g.edges()
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            rows = list(g.adj)
            for u, v in subset:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            if k_colorable(rows, chi - 1):
                return StabilityCertificate(size, subset, _residual(g, subset, chi - 1))
    raise AssertionError("deleting every edge must lower chi")


def stability_sum_with_complement(g: Graph) -> int:
    return es_chi(g).value + es_chi(complement(g)).value


def single_edge_drops(g: Graph) -> list[Edge]:
    """Edges whose individual removal lowers the chromatic number."""
    chi = chromatic_number(g)
    out = []
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if k_colorable(rows, chi - 1):
            out.append((u, v))
    return out


def is_edge_critical(g: Graph) -> bool:
    if g.m == 0:
        raise ValueError("edge-criticality needs at least one edge")
    return len(single_edge_drops(g)) == g.m
