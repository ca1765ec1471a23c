"""Combinatorial invariants behind the ideal structure of higher-rank graph algebras."""

from .boundary import (
    BoundaryPath,
    boundary_equal,
    boundary_path,
    dedupe,
    enumerate_boundary,
    shift,
    validate_boundary,
)
from .decompose import chains, decompose, decomposability, delta_omega, succeeds
from .desourcify import DesElement, DesVertex, canonicalize_element, des_window, project_pi
from .errors import KGraphError, ParseError
from .fileformat import parse_kgraph, serialize_kgraph
from .ideals import enumerate_hs_lattice, is_hereditary, saturate, subgraph
from .intgroup import IntSubgroup
from .periodicity import Answer, aperiodicity, equivalent_paths, h_per, per_group, per_group_des
from .skeleton import (
    BudgetConfig,
    KGraph,
    Path,
    build_kgraph,
    check_shape,
    compose,
    factorize,
    omega_graph,
    paths_of_degree,
    product_1graphs,
)
from .tails_prim import classify_prim, maximal_tails, prim_catalogue

__version__ = "0.1.0"

__all__ = [
    "Answer", "BoundaryPath", "BudgetConfig", "DesElement", "DesVertex", "IntSubgroup", "KGraph",
    "KGraphError", "ParseError", "Path", "aperiodicity", "boundary_equal", "boundary_path",
    "build_kgraph", "canonicalize_element", "chains", "check_shape", "classify_prim", "compose",
    "decompose", "decomposability", "dedupe", "delta_omega", "des_window", "enumerate_boundary",
    "enumerate_hs_lattice", "equivalent_paths", "factorize", "h_per", "is_hereditary",
    "maximal_tails", "omega_graph", "parse_kgraph", "paths_of_degree", "per_group", "per_group_des",
    "prim_catalogue", "product_1graphs", "project_pi", "saturate", "serialize_kgraph", "shift",
    "subgraph", "succeeds", "validate_boundary",
]
