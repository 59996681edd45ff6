"""Shared fixtures: reference tables, graph corpora, cached spectra."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

import pytest

from graphcode import MultiGraph, Parity, build, deletion_spectrum
from graphcode.cli import comparison_suite

# Reference values for the bundled 12-scheme comparison suite
# (9 packets, redundancy 2), keyed by graph label -> (even, odd).

MIN_CUT_TABLE = {
    "G_0": (0, 3),
    "G_1": (1, 3),
    "G_2": (2, 3),
    "G_3": (3, 3),
    "G_4": (3, 3),
    "G_5": (3, 3),
    "G_6": (3, 3),
    "G_7": (3, 3),
    "G_8": (3, 3),
    "G_9": (3, 3),
    "G'": (0, 4),
    "G": (2, 2),
}

PROBABILITY_TABLES = {
    0.6: {
        "G_0": (0.0, 0.623651),
        "G_1": (0.405309, 0.639395),
        "G_2": (0.554459, 0.646345),
        "G_3": (0.607826, 0.644499),
        "G_4": (0.605533, 0.617078),
        "G_5": (0.587424, 0.592104),
        "G_6": (0.567454, 0.569576),
        "G_7": (0.541135, 0.542086),
        "G_8": (0.515860, 0.516201),
        "G_9": (0.491854, 0.491856),
        "G'": (0.0, 0.703957),
        "G": (0.208216, 0.208216),
    },
    0.7: {
        "G_0": (0.0, 0.847225),
        "G_1": (0.608349, 0.856136),
        "G_2": (0.784263, 0.859695),
        "G_3": (0.834280, 0.857901),
        "G_4": (0.832605, 0.838849),
        "G_5": (0.818904, 0.821020),
        "G_6": (0.803590, 0.804415),
        "G_7": (0.784373, 0.784757),
        "G_8": (0.765603, 0.765757),
        "G_9": (0.747395, 0.747396),
        "G'": (0.0, 0.902653),
        "G": (0.427930, 0.427930),
    },
    0.8: {
        "G_0": (0.0, 0.961702),
        "G_1": (0.772801, 0.964009),
        "G_2": (0.925741, 0.964775),
        "G_3": (0.955810, 0.963999),
        "G_4": (0.955182, 0.956759),
        "G_5": (0.949392, 0.949776),
        "G_6": (0.942937, 0.943050),
        "G_7": (0.935311, 0.935368),
        "G_8": (0.927755, 0.927783),
        "G_9": (0.920293, 0.920293),
        "G'": (0.0, 0.982510),
        "G": (0.692534, 0.692534),
    },
}

# The 18 encodings of the k=3, loops=4 reference scheme on 9 packets,
# in transmission order; single entries are uncoded packets.
REFERENCE_SCHEME_L4 = [
    (1,), (2,), (3, 4), (4, 5), (5, 6), (6, 1),
    (4,), (5, 8), (6, 7), (7, 8), (8, 9), (9, 4),
    (7,), (8, 2), (9, 1), (1, 2), (2, 3), (3, 7),
]

# The 18 encodings of the circulant scheme on 9 packets, redundancy 2.
CIRCULANT_SCHEME = [
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
    (7, 8), (8, 9), (9, 1), (1, 3), (2, 4), (3, 5),
    (4, 6), (5, 7), (6, 8), (7, 9), (8, 1), (9, 2),
]


def triangle() -> MultiGraph:
    return build(3, [(1, 2), (2, 3), (3, 1)])


def four_cycle() -> MultiGraph:
    return build(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


def all_vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]


def small_graphs(max_n: int, max_m: int):
    """Every multigraph with n <= max_n, m <= max_m, loops and parallels included."""
    for n in range(1, max_n + 1):
        pairs = all_vertex_pairs(n)
        for m in range(max_m + 1):
            for combo in combinations_with_replacement(pairs, m):
                yield build(n, combo)


def random_graph(
    rand: random.Random,
    max_n: int,
    max_m: int,
    *,
    min_n: int = 1,
    allow_loops: bool = True,
) -> MultiGraph:
    n = rand.randint(max(min_n, 1 if allow_loops else 2), max_n)
    m = rand.randint(0, max_m)
    pairs = []
    while len(pairs) < m:
        u = rand.randint(1, n)
        v = rand.randint(1, n)
        if u == v and not allow_loops:
            continue
        pairs.append((u, v))
    return build(n, pairs)


@pytest.fixture(scope="session")
def suite_graphs() -> dict[str, MultiGraph]:
    return dict(comparison_suite())


@pytest.fixture(scope="session")
def suite_spectra(suite_graphs):
    return {
        (label, parity): deletion_spectrum(g, parity)
        for label, g in suite_graphs.items()
        for parity in (Parity.EVEN, Parity.ODD)
    }
