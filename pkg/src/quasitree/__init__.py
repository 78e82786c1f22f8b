"""Quasi-tree polynomials of all-A ribbon graphs of knot diagrams."""

from .determinant import knot_determinant
from .diagram import KnotDiagram, faces, parse_pd, reidemeister_3
from .mapcore import CombMap, boundary_components, components, subgraph_profile
from .quasitrees import (
    QuasiTreePoly,
    TriVarPoly,
    brt_polynomial,
    enumerate_quasi_trees,
    quasi_tree_polynomial,
    two_variable_q,
)
from .ribbon import build_all_a_ribbon_graph, build_ribbon_graph, kauffman_state, turaev_genus

__version__ = "0.1.0"
