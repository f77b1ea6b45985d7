"""Exact symmetry computations for small matroids: automorphism groups,
fixing numbers, clone classes, and graph-derived matroids."""

from .builders import (BinaryMatrix, TransversalPresentation, fano, from_binary, m_n_k, named, p6,
                       projective_geometry, transversal, uniform, vamos)
from .errors import CapExceeded, MatroidError
from .graphs import Graph, bicircular_matroid, cycle_matroid, edge_action, graph_automorphisms
from .groups import PermGroup
from .matroid import (GroundSet, Matroid, SetFamily, circuits_of, cocircuits_of, contract,
                      cyclic_flats, delete, direct_sum, dual, free_extension, from_bases,
                      from_circuits, is_connected, is_uniform, rank_of)
from .symmetry import (FixReport, automorphism_group, clone_classes, clone_classes_via_cyclic_flats,
                       fixing_number, stabilizer_chain)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix", "TransversalPresentation", "fano", "from_binary", "m_n_k", "named", "p6",
    "projective_geometry", "transversal", "uniform", "vamos", "CapExceeded", "MatroidError", "Graph",
    "bicircular_matroid", "cycle_matroid", "edge_action", "graph_automorphisms", "PermGroup",
    "GroundSet", "Matroid", "SetFamily", "circuits_of", "cocircuits_of", "contract", "cyclic_flats",
    "delete", "direct_sum", "dual", "free_extension", "from_bases", "from_circuits", "is_connected",
    "is_uniform", "rank_of", "FixReport", "automorphism_group", "clone_classes",
    "clone_classes_via_cyclic_flats", "fixing_number", "stabilizer_chain",
]
