"""Exact chromatic number, colouring enumeration and colouring-derived invariants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import Graph, bits, edges_between, popcount


class ChromaticError(ValueError):
    """An invariant was requested for a graph outside its domain (e.g. chi < 2)."""


@dataclass(frozen=True)
class Partition:
    """Ordered vertex classes, canonically sorted by least vertex."""

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Partition:
        groups = [tuple(bits(m)) for m in masks if m]
        return cls(tuple(sorted(groups)))

    @classmethod
    def from_assignment(cls, colour: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colour):
            groups.setdefault(c, []).append(v)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in c) for c in self.classes)

    def colour_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class GoodColoring:
    """A chi-colouring whose class ``singleton`` has one vertex and exactly one
    edge into class ``partner``."""

    partition: Partition
    singleton: int
    partner: int

    @property
    def vertex(self) -> int:
        return self.partition.classes[self.singleton][0]

    def third_classes(self) -> list[tuple[int, ...]]:
        return [c for i, c in enumerate(self.partition.classes) if i not in (self.singleton, self.partner)]


def is_proper(g: Graph, p: Partition) -> bool:
    covered = 0
    for mask in p.masks:
        if covered & mask:
            return False
        covered |= mask
        for v in bits(mask):
            if g.adj[v] & mask:
                return False
    return covered == g.vertex_mask


def monochromatic_edges(g: Graph, p: Partition) -> list[tuple[int, int]]:
    colour = [0] * g.n
    for i, c in enumerate(p.classes):
        for v in c:
            colour[v] = i
    return [(u, v) for u, v in g.edges() if colour[u] == colour[v]]


# --- chromatic number -------------------------------------------------------


def _greedy_clique(adj: Sequence[int], n: int) -> int:
    best = 1 if n else 0
    for s in range(n):
        size, cand = 1, adj[s]
        while cand:
            v = max(bits(cand), key=lambda u: popcount(adj[u] & cand))
            size += 1
            cand &= adj[v]
        best = max(best, size)
    return best


def _colour_search(adj: Sequence[int], n: int, limit: int, target: int) -> list[int] | None:
    """DSATUR branch and bound.

    Returns a colouring with fewer than ``limit`` colours and as few as
    possible, stopping early once ``target`` colours are reached. ``None`` if
    no colouring below ``limit`` exists.
    """
    colour = [-1] * n
    classes: list[int] = []
    best: list[int] | None = None
    best_k = limit

    def rec(uncol: int, k: int) -> bool:
        nonlocal best, best_k
        if not uncol:
            best, best_k = colour[:], k
            return k <= target
        v, top_sat, top_deg = -1, -1, -1
        for u in bits(uncol):
            a = adj[u]
            sat = 0
            for cm in classes:
                if a & cm:
                    sat += 1
            if sat < top_sat:
                continue
            deg = popcount(a & uncol)
            if sat > top_sat or deg > top_deg:
                v, top_sat, top_deg = u, sat, deg
        a = adj[v]
        rest = uncol & ~(1 << v)
        for c in range(k):
            if not a & classes[c]:
                classes[c] |= 1 << v
                colour[v] = c
                done = rec(rest, k)
                classes[c] &= ~(1 << v)
                if done:
                    return True
                if k >= best_k:
                    break
        if k + 1 < best_k:
            classes.append(1 << v)
            colour[v] = k
            done = rec(rest, k + 1)
            classes.pop()
            if done:
                return True
        colour[v] = -1
        return False

    rec((1 << n) - 1, 0)
    return best


@lru_cache(maxsize=1 << 16)
def _chromatic(adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    n = len(adj)
    if n == 0:
        return 0, ()
    lower = _greedy_clique(adj, n)
    found = _colour_search(adj, n, n + 1, lower)
    assert found is not None
    return max(found) + 1, tuple(found)


def chromatic_number(g: Graph) -> int:
    return _chromatic(g.adj)[0]


def chromatic_coloring(g: Graph) -> Partition:
    """An optimal colouring certifying ``chromatic_number(g)``."""
    return Partition.from_assignment(_chromatic(g.adj)[1])


def k_colorable(adj: Sequence[int], k: int) -> bool:
    n = len(adj)
    if k >= n:
        return True
    if k <= 0:
        return n == 0
    if k == 1:
        return not any(adj)
    return _colour_search(adj, n, k + 1, k) is not None


def is_k_colorable(g: Graph, k: int) -> bool:
    return k_colorable(g.adj, k)


# --- partition enumeration --------------------------------------------------


def partition_masks(adj: Sequence[int], k: int, proper: bool = True) -> Iterator[list[int]]:
    """Yield every partition of the vertices into exactly ``k`` nonempty classes
    as a list of class bitmasks in canonical order.

    With ``proper`` every class is independent in ``adj``. The yielded list is
    reused between iterations; copy it to keep it.
    """
    n = len(adj)
    if k < 0 or k > n or (k == 0 and n > 0):
        return
    classes: list[int] = []

    def rec(v: int) -> Iterator[list[int]]:
        if v == n:
            yield classes
            return
        bit = 1 << v
        a = adj[v]
        used = len(classes)
        if k - used < n - v:
            for c in range(used):
                if not proper or not a & classes[c]:
                    classes[c] |= bit
                    yield from rec(v + 1)
                    classes[c] &= ~bit
        if used < k:
            classes.append(bit)
            yield from rec(v + 1)
            classes.pop()

    yield from rec(0)


def enumerate_k_partitions(g: Graph, k: int) -> Iterator[Partition]:
    """Lazily yield every proper colouring of ``g`` with exactly ``k`` colour
    classes, each exactly once, in canonical form."""
    for masks in partition_masks(g.adj, k):
        yield Partition.from_masks(masks)


def chi_colorings(g: Graph) -> Iterator[Partition]:
    return enumerate_k_partitions(g, chromatic_number(g))


# --- derived invariants -----------------------------------------------------


def c_star_witness(g: Graph) -> tuple[int, Partition]:
    """Smallest colour-class size over all chi-colourings, with a colouring attaining it."""
    if g.n == 0:
        raise ChromaticError("c* is undefined for the null graph")
    best, witness = g.n + 1, None
    for masks in partition_masks(g.adj, chromatic_number(g)):
        size = min(popcount(m) for m in masks)
        if size < best:
            best, witness = size, list(masks)
            if best == 1:
                break
    assert witness is not None
    return best, Partition.from_masks(witness)


def c_star(g: Graph) -> int:
    return c_star_witness(g)[0]


@dataclass(frozen=True)
class Bondage:
    value: int
    coloring: Partition
    pair: tuple[int, int]


def bondage_witness(g: Graph) -> Bondage:
    chi = chromatic_number(g)
    if chi < 2:
        raise ChromaticError(f"chromatic bondage needs chi >= 2 (got {chi})")
    adj = g.adj
    best: Bondage | None = None
    for masks in partition_masks(adj, chi):
        for i in range(chi):
            for j in range(i + 1, chi):
                e = sum(popcount(adj[v] & masks[j]) for v in bits(masks[i]))
                if best is None or e < best.value:
                    p = Partition.from_masks(masks)
                    best = Bondage(e, p, (i, j))
                    # two classes of a chi-colouring always share an edge
                    if e == 1:
                        return best
    assert best is not None
    return best


def chromatic_bondage(g: Graph) -> int:
    return bondage_witness(g).value


def good_colorings(g: Graph) -> Iterator[GoodColoring]:
    """Every (colouring, singleton class, partner class) triple making a good colouring."""
    chi = chromatic_number(g)
    if chi < 2:
        raise ChromaticError(f"good colourings need chi >= 2 (got {chi})")
    adj = g.adj
    for masks in partition_masks(adj, chi):
        p = None
        for s, ms in enumerate(masks):
            if ms & (ms - 1):
                continue
            row = adj[ms.bit_length() - 1]
            for t, mt in enumerate(masks):
                if t != s and popcount(row & mt) == 1:
                    p = p or Partition.from_masks(masks)
                    yield GoodColoring(p, s, t)


def is_equitable(p: Partition | Sequence[int]) -> bool:
    sizes = p.sizes if isinstance(p, Partition) else tuple(p)
    return not sizes or max(sizes) - min(sizes) <= 1


def class_edges(g: Graph, p: Partition, i: int, j: int) -> int:
    m = p.masks
    return edges_between(g, m[i], m[j])
