"""Cover ideals of finite simple graphs: powers, irredundant irreducible
decompositions, associated primes, and the stabilization behavior of the
built-in ht graph family, all verifiable against brute-force oracles."""

__version__ = "0.1.0"

from ._kernels import active_backend, use_backend
from .covers import (
    AdmissibleVector,
    CoverCertificate,
    check_degree_sum_bound,
    decompose_into_one_covers,
    enumerate_cluster_admissible,
    enumerate_cycle_admissible,
    is_k_cover,
    minimum_one_covers,
)
from .decomposition import (
    associated_primes,
    component_contains_monomial,
    component_ideal,
    component_subset,
    irreducible_components,
    irredundant,
)
from .errors import CapacityError, DocumentError
from .graphs import (
    ClusterDescriptor,
    Graph,
    build_ht,
    build_odd_cycle,
    chromatic_number,
    enumerate_induced_odd_cycles,
    enumerate_minimal_vertex_covers,
    enumerate_r_clusters,
    induced_subgraph,
    is_induced_odd_cycle,
    minimum_coloring,
    minimum_vertex_cover_size,
    minimum_vertex_covers,
    neighbors,
    vertex_tuple,
)
from .ideals import (
    MonomialIdeal,
    contains,
    cover_ideal,
    edge_ideal,
    intersect,
    intersect_all,
    minimalize,
    multiply,
    power,
    unit_ideal,
    zero_ideal,
)
from .theorems import (
    DecompositionReport,
    StabilizationReport,
    closed_form_components,
    cluster_components,
    cycle_components,
    edge_components,
    min_generators_within_edge_components,
    predicted_associated_primes,
    stabilization_scan,
    verify_power_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
