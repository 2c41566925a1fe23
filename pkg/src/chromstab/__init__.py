"""Exact chromatic-stability index and companion invariants for small graphs."""

from .coloring import (
    ChromaticError,
    GoodColoring,
    Partition,
    c_star,
    chromatic_bondage,
    chromatic_coloring,
    chromatic_number,
    enumerate_k_partitions,
    good_colorings,
    is_equitable,
)
from .families import build_family, circulant, graph_x
from .graph import Graph, GraphError, clique_number, complement, delete_edges, girth, induced
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .stability import StabilityCertificate, es_chi, es_chi_oracle, is_edge_critical
from .theorems import TheoremReport

build_circulant = circulant
build_graph_X = graph_x

__all__ = [
    "ChromaticError",
    "GoodColoring",
    "Graph",
    "Graph6Error",
    "GraphError",
    "Partition",
    "StabilityCertificate",
    "TheoremReport",
    "build_circulant",
    "build_family",
    "build_graph_X",
    "c_star",
    "chromatic_bondage",
    "chromatic_coloring",
    "chromatic_number",
    "clique_number",
    "complement",
    "delete_edges",
    "enumerate_k_partitions",
    "es_chi",
    "es_chi_oracle",
    "girth",
    "good_colorings",
    "graph_x",
    "induced",
    "is_edge_critical",
    "is_equitable",
    "parse_graph6",
    "write_graph6",
]
