"""Minimal quadrangulations of orientable surfaces."""

from ._qforge import (
    EmbeddingReport,
    FormatError,
    GenusMismatch,
    Graph,
    RotationSystem,
    SpinalInstance,
    betti,
    build_for_genus,
    build_instance,
    build_spinal,
    complete_graph,
    delete_edges_connected,
    euler_genus,
    formulas,
    interlace,
    is_connected,
    load_embedding,
    load_graph,
    octahedral_graph,
    oracle,
    save_embedding,
    save_graph,
    trace_faces,
    validate_quadrangulation,
)

__version__ = "0.1.0"
