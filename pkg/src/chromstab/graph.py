"""Immutable simple graphs on vertices ``0..n-1`` backed by adjacency bitmasks."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid vertices, edges or construction parameters."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u`` is a neighbour of
    ``v``. Instances are hashable values; every operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must name every vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], labels: Iterable[str] | None = None
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, label: str) -> int:
        if not self.labels or label not in self.labels:
            raise GraphError(f"unknown vertex label {label!r}")
        return self.labels.index(label)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)), g.labels)


def delete_edges(g: Graph, f: Iterable[Edge]) -> Graph:
    rows = list(g.adj)
    seen: set[Edge] = set()
    for u, v in f:
        e = norm_edge(u, v)
        if e in seen:
            raise GraphError(f"edge {e} listed twice")
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"{e} is not an edge of the graph")
        seen.add(e)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), g.labels)


def add_edges(g: Graph, f: Iterable[Edge]) -> Graph:
    return Graph.from_edges(g.n, [*g.edges(), *f], g.labels)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for order {g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(sum(1 << pos[u] for u in bits(g.adj[v]) if u in pos))
    labels = tuple(g.labels[v] for v in keep) if g.labels else None
    return Graph(len(keep), tuple(rows), labels)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(rows))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def regular_degree(g: Graph) -> int:
    """Common degree of a regular graph, or -1 if degrees differ."""
    degs = set(g.degrees())
    if len(degs) > 1:
        return -1
    return degs.pop() if degs else 0


def odd_cycle(g: Graph) -> list[int] | None:
    """Return the vertices of some odd cycle of ``g``, or ``None`` if bipartite."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return _close_cycle(parent, u, v)
    return None


def _close_cycle(parent: list[int], u: int, v: int) -> list[int]:
    # u and v sit in the same BFS tree at equal parity; join their root paths
    path_u, path_v = [u], [v]
    anc_u = {u: 0}
    x = u
    while parent[x] >= 0:
        x = parent[x]
        anc_u[x] = len(path_u)
        path_u.append(x)
    y = v
    while y not in anc_u:
        y = parent[y]
        path_v.append(y)
    return path_u[: anc_u[y]] + path_v[::-1]


def is_bipartite(g: Graph) -> bool:
    return odd_cycle(g) is None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def clique_number(g: Graph) -> int:
    best, _ = max_clique(g)
    return best


def max_clique(g: Graph) -> tuple[int, list[int]]:
    """Exact maximum clique by branch and bound with a colouring bound."""
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = list(current)
            return
        # greedy colour classes of the candidate set bound the clique extension
        order, bounds = _colour_bound(g, cand)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(current) + bound <= len(best):
                return
            current.append(v)
            expand(current, cand & g.adj[v])
            current.pop()
            cand &= ~(1 << v)

    expand([], g.vertex_mask)
    return len(best), sorted(best)


def _colour_bound(g: Graph, cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def edges_between(g: Graph, a: int, b: int) -> int:
    """``e(A, B)`` for disjoint vertex masks ``a`` and ``b``."""
    return sum(popcount(g.adj[v] & b) for v in bits(a))


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out
