"""Graphs defined on finite groups, and exact checks of how they compare.

Groups are Cayley tables (numpy arrays).  The main entry points are
``make_family`` for building groups from short specs like ``"SL(2,3)"``,
``build_graph`` for the eight graph kinds, and ``run_suite`` for the
verification checks.
"""

from .core import (COMMUTATOR_CONVENTION, CayleyGroup, Subgroup, center, closure, commutator,
                   conjugacy_classes, cyclic_subgroup, derived_subgroup, elem_order, exponent,
                   from_cayley_table, has_cyclic_sylows, is_2_generated, is_abelian, is_cyclic,
                   is_dedekind, is_eppo, is_nilpotent, is_normal, is_p_group, is_simple,
                   iterated_commutator, lower_central_series, materialize, nilpotency_class,
                   normaliser, sylow_subgroup, sylow_subgroups)
from .errors import (BadParameter, BadShape, DimensionMismatch, GroupGraphsError, NotAGroup,
                     NotAPGroup, NotAWitness, OrderLimitExceeded, ParseError)
from .families import (SnncParams, TypeBParams, cyclic, dihedral, direct_product,
                       elementary_abelian, generalized_quaternion, heisenberg, make_snnc,
                       make_type_b, special_linear, symmetric, alternating)
from .graphs import (GraphKind, GroupGraph, build_directed_normalising, build_graph,
                     connected_components, degree_sequence, edge_count, export, graphs_equal,
                     is_spanning_subgraph)
from .groupspec import GroupSpec, make_family, parse_spec
from .permutations import from_permutations, parse_cycles
from .theorems import (WitnessPair, classify_type_b, find_generating_adjacent_pair,
                       has_snnc_subgroup, is_snnc, is_type_b, run_suite, snorm_witness_pairs,
                       verify_witness_subgroup)

__version__ = "0.1.0"
