"""Endomorphism, automorphism and power graphs of small finite groups."""

from ._kernels import BACKEND
from .builders import (GraphKind, build, build_with_info, clique_count_formula,
                       edge_count_formula, is_completeness_shape,
                       is_elementary_abelian_shape, is_per_prime_homocyclic)
from .catalog import catalog_group, catalog_groups_up_to
from .graphs import (Digraph, SimpleGraph, digraphs_isomorphic, girth, graphs_isomorphic,
                     has_hamiltonian_cycle, has_single_point_basis, is_bipartite,
                     is_planar, is_strongly_connected, is_tree, maximal_cliques,
                     minimum_point_basis, to_dot, to_json)
from .groups import (AbelianShape, Group, GroupSizeError, UnsupportedError, abelian_shape,
                     are_isomorphic_groups, center, centralizer, make_abelian,
                     make_alternating, make_cyclic, make_dihedral, make_direct_product,
                     make_quaternion, make_symmetric)
from .morphisms import (BudgetExceeded, Morphism, abelian_arc_fast, automorphism_orbits,
                        compose, endo_arc_matrix, enumerate_automorphisms,
                        enumerate_endomorphisms, exists_endo_arc, is_homomorphism)
from .verify import TheoremCheck, VerificationReport, VerifyConfig, run_all

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
