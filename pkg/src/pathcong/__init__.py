"""Congruence lattices of path semigroups of finite acyclic quivers.

Every congruence of the path semigroup corresponds to an ideal of the
path algebra generated by monomial and commutative relations, and the
two lattices are isomorphic.  This package enumerates both sides
exactly, builds the lattices, and decides the structural properties
(semimodularity, modularity, distributivity) that the number of parallel
paths governs.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .ideals import (
    Relation,
    SpecialIdeal,
    all_relations,
    commutative_relation,
    congruence_to_ideal,
    enumerate_special_ideals,
    generate_ideal,
    ideal_join,
    ideal_meet,
    ideal_to_congruence,
    monomial_relation,
    zero_ideal,
)
from .lattice import (
    FiniteLattice,
    LatticeError,
    build_lattice,
    find_diamond,
    find_pentagon,
    is_distributive,
    is_lower_semimodular,
    is_modular,
    is_strong_lower_semimodular,
    is_strong_upper_semimodular,
    is_upper_semimodular,
    lattice_properties,
    lattice_to_dot,
    lattice_to_json_dict,
)
from .linalg import (
    PathVector,
    Subspace,
    membership,
    row_reduce,
    subspace_intersection,
    subspace_sum,
)
from .quiver import (
    Arrow,
    CyclicQuiverError,
    Path,
    Quiver,
    QuiverError,
    QuiverParseError,
    connected_components,
    enumerate_paths,
    is_acyclic,
    max_parallel_paths,
    parse_quiver,
    quiver_to_text,
    underlying_graph_is_tree,
)
from .random_quivers import random_acyclic_quiver, random_suite
from .semigroup import (
    ZERO,
    CapExceeded,
    Congruence,
    PathSemigroup,
    build_semigroup,
    congruence_from_blocks,
    congruence_from_json,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    identity_congruence,
    is_rees,
    join_congruences,
    meet_congruences,
    principal_congruence,
    universal_congruence,
)
from .verify import (
    TheoremReport,
    check_theorems,
    congruence_lattice,
    ideal_lattice,
    predict_properties,
)

__version__ = "0.1.0"
