"""Decodability of erasure subgraphs.

A subgraph is decodable when the terminal can recover every source packet
from the surviving encodings. Three equivalent criteria are provided:

* structural (production path): with even field characteristic every
  component must contain a loop; with odd characteristic every component
  must contain an odd cycle (a loop counts as a length-1 cycle);
* rank: the edge-vertex incidence matrix has rank n over the field;
* trace: some odd power of the component adjacency matrix has positive
  trace, i.e. an odd closed walk exists (odd characteristic only).

The rank and trace routes exist as independent verification oracles.
"""

from __future__ import annotations

import enum

import numpy as np

from .finite_field import FieldSpec, rank
from .multigraph import MultiGraph


class Parity(enum.Enum):
    """Field characteristic class; the only field property decoding sees."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def from_field(cls, field: FieldSpec) -> Parity:
        return cls.EVEN if field.is_even else cls.ODD


def incidence_matrix(h: MultiGraph) -> np.ndarray:
    """m x n 0-1 matrix, one row per edge in id order.

    A non-loop row has two ones; a loop row has a single one, matching the
    received linear form of an uncoded transmission.
    """
    mat = np.zeros((h.m, h.n), dtype=np.int64)
    for row, e in enumerate(sorted(h.edges, key=lambda e: e.id)):
        mat[row, e.u - 1] = 1
        mat[row, e.v - 1] = 1
    return mat


def adjacency_matrix(h: MultiGraph) -> np.ndarray:
    """n x n matrix of edge multiplicities; entry (v, v) is the loop count."""
    mat = np.zeros((h.n, h.n), dtype=np.int64)
    for e in h.edges:
        if e.is_loop:
            mat[e.u - 1, e.u - 1] += 1
        else:
            mat[e.u - 1, e.v - 1] += 1
            mat[e.v - 1, e.u - 1] += 1
    return mat


def is_decodable_structural(h: MultiGraph, parity: Parity) -> bool:
    summary = h.components()
    if parity is Parity.EVEN:
        return all(c.has_loop for c in summary.components)
    return all(c.has_odd_cycle for c in summary.components)


def is_decodable_rank(h: MultiGraph, field: FieldSpec) -> bool:
    return rank(incidence_matrix(h), field) == h.n


def is_decodable_trace(h: MultiGraph) -> bool:
    """Trace criterion, applied per component with exact integer powers."""
    adjacency = adjacency_matrix(h)
    for comp in h.components().components:
        verts = sorted(comp.vertices)
        sub = [[int(adjacency[a - 1, b - 1]) for b in verts] for a in verts]
        if not _has_odd_closed_walk(sub):
            return False
    return True


def _has_odd_closed_walk(a: list[list[int]]) -> bool:
    # checks Tr(A^len) > 0 for odd len up to the vertex count
    size = len(a)
    power = a
    length = 1
    while length <= size:
        if length % 2 == 1 and any(power[i][i] for i in range(size)):
            return True
        length += 1
        if length > size:
            break
        power = _matmul(power, a)
    return False


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    size = len(x)
    cols = range(size)
    return [
        [sum(x[i][k] * y[k][j] for k in cols) for j in cols]
        for i in range(size)
    ]
