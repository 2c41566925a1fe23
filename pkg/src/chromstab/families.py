"""Constructors for the named graph families used throughout the package."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError

GRAPH_X_LABELS = ("w", "v1", "v2", "v3", "u1", "u2", "u3", "u4", "u5", "u6")


def complete(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph.empty(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    owner = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if owner[i] != owner[j]])


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    """``C(n; jumps)``: ``i ~ j`` iff their cyclic distance is one of ``jumps``."""
    js = list(jumps)
    if len(set(js)) != len(js):
        raise GraphError(f"duplicate jumps in {js}")
    if not js:
        raise GraphError("at least one jump is required")
    for a in js:
        if not 1 <= a <= n / 2:
            raise GraphError(f"jump {a} outside [1, {n}/2]")
    allowed = set(js)
    return Graph.from_edges(
        n,
        [(i, j) for i, j in combinations(range(n), 2) if min(j - i, n - j + i) in allowed],
    )


def petersen() -> Graph:
    """The Petersen graph as the Kneser graph K(5, 2)."""
    pairs = list(combinations(range(5), 2))
    return Graph.from_edges(
        10, [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    )


def graph_x() -> Graph:
    """The 6-regular, 4-chromatic graph X on ``w, v1..v3, u1..u6``.

    Vertex ``i`` carries label ``GRAPH_X_LABELS[i]``. Edges: a K4 on
    ``{w, v1, v2, v3}``; ``w ~ u2, u4, u6``; ``v1 ~ u1, u2, u5``;
    ``v2 ~ u3, u5, u6``; ``v3 ~ u1, u3, u4``; and ``u1..u6`` induce K6 minus
    the matching ``u1u4, u2u5, u3u6``.
    """
    idx = {name: i for i, name in enumerate(GRAPH_X_LABELS)}
    pairs = [("w", "v1"), ("w", "v2"), ("w", "v3"), ("v1", "v2"), ("v1", "v3"), ("v2", "v3")]
    pairs += [("w", "u2"), ("w", "u4"), ("w", "u6")]
    pairs += [("v1", "u1"), ("v1", "u2"), ("v1", "u5")]
    pairs += [("v2", "u3"), ("v2", "u5"), ("v2", "u6")]
    pairs += [("v3", "u1"), ("v3", "u3"), ("v3", "u4")]
    missing = {frozenset(p) for p in [("u1", "u4"), ("u2", "u5"), ("u3", "u6")]}
    us = [f"u{i}" for i in range(1, 7)]
    pairs += [p for p in combinations(us, 2) if frozenset(p) not in missing]
    return Graph.from_edges(10, [(idx[a], idx[b]) for a, b in pairs], GRAPH_X_LABELS)


FAMILIES = {
    "complete": "complete N",
    "empty": "empty N",
    "cycle": "cycle N",
    "path": "path N",
    "complete-multipartite": "complete-multipartite N1,N2,...",
    "circulant": "circulant N A0,A1,...",
    "petersen": "petersen",
    "X": "X",
}


def build_family(name: str, *params: str | int | Sequence[int]) -> Graph:
    """Build a family member from loosely typed parameters (CLI strings or ints)."""
    try:
        if name == "complete":
            return complete(_int(params, 0))
        if name == "empty":
            return empty(_int(params, 0))
        if name == "cycle":
            return cycle(_int(params, 0))
        if name == "path":
            return path(_int(params, 0))
        if name == "complete-multipartite":
            return complete_multipartite(*_ints(params, 0))
        if name == "circulant":
            return circulant(_int(params, 0), _ints(params, 1))
        if name == "petersen":
            return petersen()
        if name in ("X", "graph-x"):
            return graph_x()
    except (IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {name}: usage '{FAMILIES.get(name, name)}'") from exc
    raise GraphError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphError(f"negative order {n}")


def _int(params: tuple, i: int) -> int:
    return int(params[i])


def _ints(params: tuple, i: int) -> list[int]:
    rest = params[i:]
    if len(rest) == 1 and isinstance(rest[0], str):
        return [int(x) for x in rest[0].split(",") if x.strip()]
    if len(rest) == 1 and not isinstance(rest[0], (int, str)):
        return [int(x) for x in rest[0]]
    return [int(x) for x in rest]
