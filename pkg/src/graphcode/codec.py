"""Packet-level encode / erase / decode pipeline.

Packets are rows of a matrix over a prime field. Encoding applies the
scheme row by row; erasure keeps each encoded row independently with a
given probability; decoding solves the surviving sub-incidence system by
elimination. Structural decodability is used as a fast pre-check, but the
elimination remains the source of truth: a disagreement between the two
is an internal error, never a fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .constructions import CodingScheme, scheme_to_graph
from .decodability import Parity, incidence_matrix, is_decodable_structural
from .finite_field import FieldSpec, SolveError, solve
from .multigraph import MultiGraph


class DecodingError(Exception):
    """Decoding failed; carries the vertex sets that cannot be recovered."""

    def __init__(self, message: str, unrecoverable: tuple[frozenset[int], ...]):
        super().__init__(message)
        self.unrecoverable = unrecoverable


class InternalCheckError(RuntimeError):
    """Structural pre-check and elimination disagreed."""


@dataclass(frozen=True)
class ReceivedBatch:
    """Surviving encoded rows, tagged with their encoding indices."""

    edge_ids: tuple[int, ...]
    rows: np.ndarray

    def __post_init__(self) -> None:
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise ValueError("duplicate encoding indices in batch")
        if self.rows.shape[0] != len(self.edge_ids):
            raise ValueError("row count does not match the id list")


def encode(scheme: CodingScheme, packets: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Apply every encoding to the packet matrix; row i is encoding i."""
    packets = np.asarray(packets, dtype=np.int64) % field.p
    if packets.ndim != 2 or packets.shape[0] != scheme.n:
        raise ValueError(
            f"packet matrix must have {scheme.n} rows, got shape {packets.shape}"
        )
    out = np.empty((scheme.m, packets.shape[1]), dtype=np.int64)
    for i, enc in enumerate(scheme.encodings):
        if enc.is_single:
            out[i] = packets[enc.j - 1]
        else:
            out[i] = (packets[enc.j - 1] + packets[enc.k - 1]) % field.p
    return out


def erase(
    rows: np.ndarray,
    keep_probability: float,
    seed: int,
    *,
    stream_index: int = 0,
) -> ReceivedBatch:
    """Keep each encoded row independently with the given probability.

    Uses stream(seed, stream_index); simulations running many batches give
    each trial its own stream index.
    """
    if not 0.0 <= keep_probability <= 1.0:
        raise ValueError(f"keep probability {keep_probability} outside [0, 1]")
    rows = np.asarray(rows)
    kept = rng.stream(seed, stream_index).random(rows.shape[0]) < keep_probability
    ids = tuple(int(i) + 1 for i in np.flatnonzero(kept))
    return ReceivedBatch(edge_ids=ids, rows=rows[kept].copy())


def decode(batch: ReceivedBatch, scheme: CodingScheme, field: FieldSpec) -> np.ndarray:
    """Recover the full packet matrix from a surviving batch.

    Succeeds exactly when the surviving subgraph is decodable; on failure
    raises DecodingError listing the unrecoverable components.
    """
    graph = scheme_to_graph(scheme)
    known = set(graph.edge_ids())
    bad = [i for i in batch.edge_ids if i not in known]
    if bad:
        raise ValueError(f"batch refers to unknown encoding indices {bad}")
    surviving = graph.delete_edges(known - set(batch.edge_ids))

    parity = Parity.from_field(field)
    structurally_ok = is_decodable_structural(surviving, parity)
    if not structurally_ok:
        failing = tuple(
            c.vertices
            for c in surviving.components().components
            if not (c.has_loop if parity is Parity.EVEN else c.has_odd_cycle)
        )
        raise DecodingError(
            f"{len(failing)} component(s) cannot be recovered", unrecoverable=failing
        )

    order = np.argsort(np.array(batch.edge_ids))
    sub_incidence = incidence_matrix(surviving)
    received = np.asarray(batch.rows, dtype=np.int64)[order] % field.p
    try:
        return solve(sub_incidence, received, field)
    except SolveError as exc:
        raise InternalCheckError(
            "structural pre-check accepted a batch elimination rejects"
        ) from exc


def surviving_subgraph(batch: ReceivedBatch, scheme: CodingScheme) -> MultiGraph:
    """The graph left after deleting every erased encoding's edge."""
    graph = scheme_to_graph(scheme)
    return graph.delete_edges(set(graph.edge_ids()) - set(batch.edge_ids))


def parse_packets(text: str) -> tuple[np.ndarray, FieldSpec]:
    """Parse the packet file format: header ``n l p``, then n symbol rows."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty packet text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad header {lines[0]!r}: expected 'n l p'")
    n, width, p = (int(tok) for tok in head)
    field = FieldSpec(p)
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} packet rows, got {len(lines) - 1}")
    matrix = np.zeros((n, width), dtype=np.int64)
    for i, ln in enumerate(lines[1:]):
        values = [int(tok) for tok in ln.split()]
        if len(values) != width:
            raise ValueError(f"row {i + 1} has {len(values)} symbols, expected {width}")
        if any(not 0 <= v < p for v in values):
            raise ValueError(f"row {i + 1} has symbols outside 0..{p - 1}")
        matrix[i] = values
    return matrix, field


def format_packets(packets: np.ndarray, field: FieldSpec) -> str:
    packets = np.asarray(packets, dtype=np.int64)
    lines = [f"{packets.shape[0]} {packets.shape[1]} {field.p}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in packets)
    return "\n".join(lines) + "\n"
