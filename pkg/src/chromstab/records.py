"""Lazily evaluated invariants for one graph6 line of an input stream."""

from __future__ import annotations

import math
from typing import Any

from .coloring import (
    ChromaticError,
    bondage_witness,
    c_star_witness,
    chromatic_coloring,
    chromatic_number,
)
from .graph import clique_number, girth, is_connected, max_clique, regular_degree
from .graph6 import parse_graph6
from .stability import StabilityCertificate, es_chi
from .theorems import upper_bound

INVARIANTS = ("n", "m", "regular", "connected", "girth", "omega", "chi", "cstar", "rho", "es", "bound", "tight")
EXACT_ONLY = {"cstar", "rho", "es", "tight"}
DEFAULT_MAX_EXACT_N = 16


class ExactLimitError(ValueError):
    """An exponential invariant was requested for a graph above the size limit."""


class GraphStreamRecord:
    """One input graph plus the invariants computed for it so far.

    Values are computed on first access through :meth:`get` and cached.
    Undefined values (rho of a graph with chi < 2, bound of an edgeless graph)
    are ``None``; an infinite girth is ``math.inf``.
    """

    def __init__(self, lineno: int, text: str, max_exact_n: int = DEFAULT_MAX_EXACT_N) -> None:
        self.lineno = lineno
        self.text = text
        self.graph = parse_graph6(text)
        self.max_exact_n = max_exact_n
        self.values: dict[str, Any] = {}
        self._cert: StabilityCertificate | None = None

    def get(self, name: str) -> Any:
        if name not in self.values:
            if name not in INVARIANTS:
                raise KeyError(name)
            if name in EXACT_ONLY and self.graph.n > self.max_exact_n:
                raise ExactLimitError(
                    f"{name} refused: order {self.graph.n} exceeds --max-exact-n {self.max_exact_n}"
                )
            self.values[name] = getattr(self, f"_compute_{name}")()
        return self.values[name]

    def _compute_n(self) -> int:
        return self.graph.n

    def _compute_m(self) -> int:
        return self.graph.m

    def _compute_regular(self) -> int:
        return regular_degree(self.graph)

    def _compute_connected(self) -> bool:
        return is_connected(self.graph)

    def _compute_girth(self) -> float:
        return girth(self.graph)

    def _compute_omega(self) -> int:
        return clique_number(self.graph)

    def _compute_chi(self) -> int:
        return chromatic_number(self.graph)

    def _compute_cstar(self) -> int | None:
        return c_star_witness(self.graph)[0] if self.graph.n else None

    def _compute_rho(self) -> int | None:
        try:
            return bondage_witness(self.graph).value
        except ChromaticError:
            return None

    def certificate(self) -> StabilityCertificate:
        if self._cert is None:
            self._cert = es_chi(self.graph)
        return self._cert

    def _compute_es(self) -> int:
        return self.certificate().value

    def _compute_bound(self) -> int | None:
        r = self.get("chi")
        return upper_bound(self.graph.n, r) if r >= 2 else None

    def _compute_tight(self) -> bool | None:
        bound = self.get("bound")
        return None if bound is None else self.get("es") == bound

    def witness(self, name: str) -> Any:
        g = self.graph
        if name == "chi":
            return chromatic_coloring(g).as_lists()
        if name == "es":
            return self.certificate().as_dict()
        if name == "rho" and self.get("rho") is not None:
            b = bondage_witness(g)
            return {"coloring": b.coloring.as_lists(), "pair": list(b.pair)}
        if name == "cstar" and self.get("cstar") is not None:
            return c_star_witness(g)[1].as_lists()
        if name == "omega":
            return max_clique(g)[1]
        return None

    def as_dict(self, names: list[str], witnesses: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {"line": self.lineno, "graph6": self.text}
        for name in names:
            value = self.get(name)
            out[name] = None if value == math.inf else value
        if witnesses:
            wit = {name: self.witness(name) for name in names}
            out["witnesses"] = {k: v for k, v in wit.items() if v is not None}
        return out
