"""Signless Laplacian Estrada index: exact computation and extremal verification."""

from .errors import CostGuardError, Graph6Error, GraphError, SleeError
from .graph import (
    CanonicalForm,
    Graph,
    attach_pendants,
    canonical_form,
    complete,
    cycle,
    disjoint_union,
    empty,
    g_nr,
    identify,
    is_isomorphic,
    join,
    k_pqr,
    path,
    star,
)
from .io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .spectral import lee, moments, q_matrix, l_matrix, slee, slee_series

__all__ = [
    "CanonicalForm",
    "CostGuardError",
    "Graph",
    "Graph6Error",
    "GraphError",
    "SleeError",
    "attach_pendants",
    "canonical_form",
    "complete",
    "cycle",
    "disjoint_union",
    "empty",
    "g_nr",
    "identify",
    "is_isomorphic",
    "join",
    "k_pqr",
    "l_matrix",
    "lee",
    "moments",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "q_matrix",
    "slee",
    "slee_series",
    "star",
    "write_edge_list",
    "write_graph6",
]
