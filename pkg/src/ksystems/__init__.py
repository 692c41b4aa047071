"""k-systems, AOF orientations, and face certificates for simple polytope graphs."""

from .certificates import (
    AofCertificate,
    FaceCertificate,
    Verdict,
    facets_from_2faces,
    polygon_is_aof,
    unique_sink_per_set,
    verify_aof_certificate,
    verify_face_certificate,
    verify_larger_system,
    verify_smaller_h2,
)
from .graphs import (
    ALL,
    HVector,
    Orientation,
    PolytopeGraph,
    TopoResult,
    check_bound,
    directed_edges,
    graph_fingerprint,
    hk_sum,
    indegree_histogram,
    is_acyclic,
    make_orientation,
    out_adjacency,
    reverse_orientation,
    sinks_in_subset,
    topological_order,
    validate_graph,
)
from .oracle import (
    Instance,
    cube,
    f_vector,
    faces_from_incidence,
    fig1,
    generate,
    geometric_aof,
    is_aof_oracle,
    make_instance,
    product,
    simplex,
    truncate_vertex,
)
from .search import (
    connected_k_regular_sets,
    enumerate_acyclic_orientations,
    enumerate_acyclic_orientations_parallel,
    enumerate_k_systems,
    enumerate_k_systems_parallel,
    max_k_system,
    minimize_hk,
    minimize_hk_parallel,
    search_k_sink_counterexample,
)
from .systems import (
    KFrame,
    KSystemReport,
    SetSystem,
    check_k_range,
    check_system_bound,
    enumerate_k_frames,
    frame_count,
    frame_coverage,
    is_k_regular_set,
    make_set_system,
    validate_k_system,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "AofCertificate",
    "FaceCertificate",
    "HVector",
    "Instance",
    "KFrame",
    "KSystemReport",
    "Orientation",
    "PolytopeGraph",
    "SetSystem",
    "TopoResult",
    "Verdict",
    "check_bound",
    "check_k_range",
    "check_system_bound",
    "connected_k_regular_sets",
    "cube",
    "directed_edges",
    "enumerate_acyclic_orientations",
    "enumerate_acyclic_orientations_parallel",
    "enumerate_k_frames",
    "enumerate_k_systems",
    "enumerate_k_systems_parallel",
    "f_vector",
    "faces_from_incidence",
    "facets_from_2faces",
    "fig1",
    "frame_count",
    "frame_coverage",
    "generate",
    "geometric_aof",
    "graph_fingerprint",
    "hk_sum",
    "indegree_histogram",
    "is_acyclic",
    "is_aof_oracle",
    "is_k_regular_set",
    "make_instance",
    "make_orientation",
    "make_set_system",
    "max_k_system",
    "minimize_hk",
    "minimize_hk_parallel",
    "out_adjacency",
    "polygon_is_aof",
    "product",
    "reverse_orientation",
    "search_k_sink_counterexample",
    "simplex",
    "sinks_in_subset",
    "topological_order",
    "truncate_vertex",
    "unique_sink_per_set",
    "validate_graph",
    "validate_k_system",
    "verify_aof_certificate",
    "verify_face_certificate",
    "verify_larger_system",
    "verify_smaller_h2",
]
