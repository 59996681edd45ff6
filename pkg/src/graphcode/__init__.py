"""Graph-represented low-power erasure coding.

Schemes that transmit single packets and pairwise packet sums are studied
through their multigraph representation: loops are uncoded transmissions,
non-loop edges are pairwise sums, and packet erasures are edge deletions.
The package decides decodability of subgraphs, computes exact deletion
spectra and decoding probabilities, finds minimum decoding cuts, verifies
cut and counting bounds, generates reference scheme constructions, and
runs the packet-level encode/erase/decode pipeline.
"""

__version__ = "0.1.0"

from .analysis import (
    DCutResult,
    DeletionSpectrum,
    MonteCarloEstimate,
    SizeCapError,
    decoding_probability,
    decoding_probability_exact,
    deletion_spectrum,
    min_dcut,
    monte_carlo_probability,
    spectrum_by_recurrence,
)
from .bounds import BoundsReport, InvariantViolation, b_upper_bounds, max_cut, u_lower_bounds, verify_all
from .codec import DecodingError, ReceivedBatch, decode, encode, erase
from .constructions import (
    CodingScheme,
    Encoding,
    algorithm1,
    algorithm2,
    graph_to_scheme,
    scheme_to_graph,
    uncoded,
)
from .decodability import (
    Parity,
    adjacency_matrix,
    incidence_matrix,
    is_decodable_rank,
    is_decodable_structural,
    is_decodable_trace,
)
from .finite_field import FieldSpec, InconsistentError, UnderdeterminedError, rank, solve
from .multigraph import Edge, GraphError, MultiGraph, build, format_graph, parse_graph

__all__ = [
    "BoundsReport",
    "CodingScheme",
    "DCutResult",
    "DecodingError",
    "DeletionSpectrum",
    "Edge",
    "Encoding",
    "FieldSpec",
    "GraphError",
    "InconsistentError",
    "InvariantViolation",
    "MonteCarloEstimate",
    "MultiGraph",
    "Parity",
    "ReceivedBatch",
    "SizeCapError",
    "UnderdeterminedError",
    "adjacency_matrix",
    "algorithm1",
    "algorithm2",
    "b_upper_bounds",
    "build",
    "decode",
    "decoding_probability",
    "decoding_probability_exact",
    "deletion_spectrum",
    "encode",
    "erase",
    "format_graph",
    "graph_to_scheme",
    "incidence_matrix",
    "is_decodable_rank",
    "is_decodable_structural",
    "is_decodable_trace",
    "max_cut",
    "min_dcut",
    "monte_carlo_probability",
    "parse_graph",
    "rank",
    "scheme_to_graph",
    "solve",
    "spectrum_by_recurrence",
    "u_lower_bounds",
    "uncoded",
    "verify_all",
]
