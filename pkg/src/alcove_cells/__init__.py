"""Exact alcove, facette, weak-order, and weight-cell computations for type A.

Everything runs over `fractions.Fraction`; no floating point anywhere.
Points are carried rho-shifted (as lambda + rho), with the shift applied
once at the API boundary by `point_from_weight`.
"""

from .errors import (
    InvariantViolationError,
    PreconditionError,
    ResourceLimitError,
)
from .rootsys import (
    RootA,
    ShiftedPoint,
    chain_components,
    point_from_e,
    point_from_weight,
    positive_roots,
    root_leq,
    root_pairing,
    shifted_point,
    simple_roots,
)
from .partition import (
    OrbitLabel,
    Partition,
    dominance_leq,
    orbit_label,
    parse_partition,
    partition,
    partition_of_basis,
    partitions_of,
    sup,
    transpose,
)
from .alcove import (
    AffineMap,
    Alcove,
    Between,
    Facette,
    Wall,
    alcove_of,
    bottom_alcove,
    closure_contains,
    facette_from_alcove,
    facette_of,
    interior_point,
    lower_closure_contains,
    lower_closure_contains_via_stabilizer,
    lower_walls,
    stabilizer_group,
    stabilizer_subroot_system,
    up_reachable,
    up_step_neighbors,
    upper_walls,
    weak_leq,
    weak_leq_oracle,
)
from .cells import (
    d_partition,
    enumerate_good_bases,
    gamma,
    is_good_basis,
    is_subroot_basis,
    positive_roots_of,
    reduce_all,
    reduce_step,
    s_partition,
    s_partition_oracle,
)
from .support import (
    CONJECTURE,
    THEOREM,
    CertificateLeg,
    SupportPrediction,
    UpperBoundCertificate,
    construct_mu,
    enumerate_cell,
    facette_lattice_point,
    induced_support,
    tilting_support,
    upper_bound_certificate,
    weight_cell_of,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "Alcove",
    "Between",
    "CONJECTURE",
    "CertificateLeg",
    "Facette",
    "InvariantViolationError",
    "OrbitLabel",
    "Partition",
    "PreconditionError",
    "ResourceLimitError",
    "RootA",
    "ShiftedPoint",
    "SupportPrediction",
    "THEOREM",
    "UpperBoundCertificate",
    "Wall",
    "alcove_of",
    "bottom_alcove",
    "chain_components",
    "closure_contains",
    "construct_mu",
    "d_partition",
    "dominance_leq",
    "enumerate_cell",
    "enumerate_good_bases",
    "facette_from_alcove",
    "facette_lattice_point",
    "facette_of",
    "gamma",
    "induced_support",
    "interior_point",
    "is_good_basis",
    "is_subroot_basis",
    "lower_closure_contains",
    "lower_closure_contains_via_stabilizer",
    "lower_walls",
    "orbit_label",
    "parse_partition",
    "partition",
    "partition_of_basis",
    "partitions_of",
    "point_from_e",
    "point_from_weight",
    "positive_roots",
    "positive_roots_of",
    "reduce_all",
    "reduce_step",
    "root_leq",
    "root_pairing",
    "s_partition",
    "s_partition_oracle",
    "shifted_point",
    "simple_roots",
    "stabilizer_group",
    "stabilizer_subroot_system",
    "sup",
    "tilting_support",
    "transpose",
    "up_reachable",
    "up_step_neighbors",
    "upper_bound_certificate",
    "upper_walls",
    "weak_leq",
    "weak_leq_oracle",
    "weight_cell_of",
]
