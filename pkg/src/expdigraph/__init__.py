"""Expanded digraphs, voltage lifts, line digraphs and quotients."""

from .constructions import (
    ExpansionSpec,
    FiberedDigraph,
    VoltageAssignment,
    cayley_digraph,
    coset_digraph,
    expand,
    expanded_coset_digraph,
    lift,
)
from .digraph import Digraph, MalformedInputError, all_pairs_distances, build_digraph, metrics
from .families import (
    alt_de_bruijn,
    alt_kautz,
    de_bruijn,
    kautz,
    phi,
    phi_inv,
    phi_star,
    prop1_voltage,
    prop2_voltage,
)
from .groups import FiniteGroup, cyclic_group, product_group, right_cosets, subgroup
from .iso import is_isomorphic
from .lineops import (
    SplitSpec,
    heuchenne_is_line,
    line_digraph,
    line_root_search,
    matched_split_spec,
    partial_line_digraph,
    plift_expansion_spec,
    prop4_condition,
    vertex_split,
)
from .partitions import check_regular, induced_arc_partition, quotient, verify_commutation

__version__ = "0.1.0"
