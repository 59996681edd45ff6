"""Exact deletion spectra, decoding probabilities, and minimum decoding cuts.

The deletion spectrum of a graph counts, for every x, the labeled x-subsets
of edges whose deletion leaves a decodable subgraph. Evaluating the
associated polynomial sum(c_x * y^(m-x) * z^x) at y = p, z = 1 - p gives
the probability that all packets are recovered when each transmission
survives independently with probability p.

Exact spectra come from exhaustive bitmask enumeration (compiled, optionally
partitioned across threads), from a deletion-contraction recurrence on
parallel classes, or are estimated by seeded Monte Carlo sampling.
"""

from __future__ import annotations

import concurrent.futures
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, sqrt

import numpy as np

from . import _kernels, rng
from .decodability import Parity
from .multigraph import MultiGraph

DEFAULT_ENUMERATION_CAP = 26

_MONTE_CARLO_CHUNK = 1 << 15


class SizeCapError(ValueError):
    """Edge count exceeds the exhaustive-enumeration cap."""


@dataclass(frozen=True)
class DeletionSpectrum:
    """Exact counts c_x of decodable x-edge deletions, x = 0..m."""

    m: int
    c: tuple[int, ...]
    parity: Parity

    def __post_init__(self) -> None:
        if len(self.c) != self.m + 1:
            raise ValueError(f"need {self.m + 1} coefficients, got {len(self.c)}")

    def undecodable_count(self, x: int) -> int:
        """u_x: deletions of size x that break decodability."""
        if not 0 <= x <= self.m:
            raise ValueError(f"x={x} outside 0..{self.m}")
        return comb(self.m, x) - self.c[x]

    def min_dcut_size(self) -> int:
        """Smallest x with u_x > 0."""
        for x in range(self.m + 1):
            if self.c[x] < comb(self.m, x):
                return x
        raise RuntimeError("no undecodable deletion exists; graph has no vertices?")


@dataclass(frozen=True)
class DCutResult:
    b: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class MonteCarloEstimate:
    p: float
    trials: int
    successes: int
    estimate: float
    std_error: float
    seed: int


def _edge_arrays(g: MultiGraph) -> tuple[np.ndarray, np.ndarray]:
    ordered = sorted(g.edges, key=lambda e: e.id)
    eu = np.array([e.u - 1 for e in ordered], dtype=np.int64)
    ev = np.array([e.v - 1 for e in ordered], dtype=np.int64)
    return eu, ev


def deletion_spectrum(
    g: MultiGraph,
    parity: Parity,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    threads: int | None = None,
) -> DeletionSpectrum:
    """Exact spectrum by exhaustive enumeration of all 2^m edge subsets."""
    if g.m > cap:
        raise SizeCapError(
            f"m={g.m} edges exceeds the enumeration cap ({cap}); "
            "use monte_carlo_probability or spectrum_by_recurrence"
        )
    eu, ev = _edge_arrays(g)
    even = parity is Parity.EVEN
    total = 1 << g.m
    workers = max(1, threads or 1)
    if workers == 1 or total < (1 << 16):
        counts = _kernels.spectrum_counts(eu, ev, g.n, even, 0, total)
    else:
        step = -(-total // workers)
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda span: _kernels.spectrum_counts(eu, ev, g.n, even, *span),
                ranges,
            )
            counts = sum(parts, np.zeros(g.m + 1, dtype=np.int64))
    return DeletionSpectrum(m=g.m, c=tuple(int(x) for x in counts), parity=parity)


def decoding_probability(spectrum: DeletionSpectrum, p: float) -> float:
    """Evaluate the spectrum polynomial at y = p, z = 1 - p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"survival probability {p} outside [0, 1]")
    q = 1.0 - p
    m = spectrum.m
    return float(sum(c * p ** (m - x) * q**x for x, c in enumerate(spectrum.c)))


def decoding_probability_exact(
    spectrum: DeletionSpectrum, p: Fraction | int | str
) -> Fraction:
    """Exact rational evaluation for rational survival probabilities."""
    y = Fraction(p)
    if not 0 <= y <= 1:
        raise ValueError(f"survival probability {y} outside [0, 1]")
    z = 1 - y
    m = spectrum.m
    return sum(
        (c * y ** (m - x) * z**x for x, c in enumerate(spectrum.c)),
        start=Fraction(0),
    )


def min_dcut(g: MultiGraph, parity: Parity) -> DCutResult:
    """Smallest edge set whose deletion breaks decodability.

    Scans deletion sizes upward; the witness is the lexicographically
    smallest undecodable edge-id set of minimum size. An already
    undecodable graph yields b = 0 with an empty witness.
    """
    eu, ev = _edge_arrays(g)
    even = parity is Parity.EVEN
    ids = g.edge_ids()
    full = (1 << g.m) - 1
    for x in range(g.m + 1):
        for combo in combinations(range(g.m), x):
            deleted = 0
            for i in combo:
                deleted |= 1 << i
            if not _kernels.decodable_mask(eu, ev, g.n, full ^ deleted, even):
                return DCutResult(b=x, witness=tuple(ids[i] for i in combo))
    raise RuntimeError("deleting every edge left a decodable graph")


def spectrum_by_recurrence(
    g: MultiGraph,
    parity: Parity,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    _memo: dict | None = None,
) -> DeletionSpectrum:
    """Spectrum via deletion-contraction on parallel edge classes.

    Decodability sees a class of k parallel (u, v) edges only through
    whether any of its edges survives: a cycle uses at most one edge of
    the class, and the 2-cycles parallel edges form are even. Splitting
    the x-deletions by the number j of class edges removed and applying
    the contraction bijection whenever a class edge survives gives

        c_x(G) = sum_{j=0..k-1} C(k, j) c_{x-j}(G . e^k) + c_{x-k}(G - e^k)

    with G . e^k the class contracted and G - e^k the class deleted
    outright. With even characteristic any class reduces; with odd
    characteristic only a multiplicity-1 bridge does (the contraction
    bijection needs that no class edge lies in a cycle). Irreducible
    graphs fall back to exhaustive enumeration, and results are memoized
    on the labeled edge-pair multiset.
    """
    even = parity is Parity.EVEN
    memo: dict = {} if _memo is None else _memo
    pairs = tuple(sorted(e.pair() for e in g.edges))
    c = _recurrence(g.n, pairs, even, cap, memo)
    return DeletionSpectrum(m=g.m, c=c, parity=parity)


def _recurrence(
    n: int,
    pairs: tuple[tuple[int, int], ...],
    even: bool,
    cap: int,
    memo: dict,
) -> tuple[int, ...]:
    key = (n, even, pairs)
    cached = memo.get(key)
    if cached is not None:
        return cached
    target = _reducible_class(n, pairs, even)
    if target is None:
        counts = _enumerate_pairs(n, pairs, even, cap)
    else:
        (a, b), k = target
        m = len(pairs)
        acc = [0] * (m + 1)
        merged = _recurrence(*_contract_pairs(n, pairs, a, b), even, cap, memo)
        for j in range(k):
            weight = comb(k, j)
            for y, value in enumerate(merged):
                acc[y + j] += weight * value
        without = tuple(p for p in pairs if p != (a, b))
        removed = _recurrence(n, without, even, cap, memo)
        for y, value in enumerate(removed):
            acc[y + k] += value
        counts = tuple(acc)
    memo[key] = counts
    return counts


def _reducible_class(
    n: int, pairs: tuple[tuple[int, int], ...], even: bool
) -> tuple[tuple[int, int], int] | None:
    classes = Counter(pairs)
    for (a, b), k in sorted(classes.items()):
        if a == b:
            continue
        if even:
            return (a, b), k
        if k == 1 and not _connected_without(n, pairs, (a, b)):
            return (a, b), k
    return None


def _connected_without(
    n: int, pairs: tuple[tuple[int, int], ...], drop: tuple[int, int]
) -> bool:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    skipped = False
    for a, b in pairs:
        if not skipped and (a, b) == drop:
            skipped = True
            continue
        if a != b:
            adj[a].append(b)
            adj[b].append(a)
    start, goal = drop
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def _contract_pairs(
    n: int, pairs: tuple[tuple[int, int], ...], a: int, b: int
) -> tuple[int, tuple[tuple[int, int], ...]]:
    # a < b; the merged vertex keeps index a, vertices above b shift down
    out = []
    for x, y in pairs:
        if (x, y) == (a, b):
            continue
        x2 = a if x == b else (x - 1 if x > b else x)
        y2 = a if y == b else (y - 1 if y > b else y)
        out.append((x2, y2) if x2 <= y2 else (y2, x2))
    return n - 1, tuple(sorted(out))


def _enumerate_pairs(
    n: int, pairs: tuple[tuple[int, int], ...], even: bool, cap: int
) -> tuple[int, ...]:
    m = len(pairs)
    if m > cap:
        raise SizeCapError(
            f"irreducible subgraph has m={m} edges, over the enumeration cap ({cap})"
        )
    eu = np.array([a - 1 for a, _ in pairs], dtype=np.int64)
    ev = np.array([b - 1 for _, b in pairs], dtype=np.int64)
    counts = _kernels.spectrum_counts(eu, ev, n, even, 0, 1 << m)
    return tuple(int(x) for x in counts)


def monte_carlo_probability(
    g: MultiGraph,
    parity: Parity,
    p: float,
    trials: int,
    seed: int,
) -> MonteCarloEstimate:
    """Estimate the decoding probability by seeded sampling.

    Each trial keeps every edge independently with probability p and tests
    structural decodability. Trials are drawn in fixed-size chunks, chunk i
    from stream(seed, i), so the result is reproducible bit for bit.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"survival probability {p} outside [0, 1]")
    eu, ev = _edge_arrays(g)
    even = parity is Parity.EVEN
    powers = (np.int64(1) << np.arange(g.m, dtype=np.int64)).astype(np.int64)
    successes = 0
    done = 0
    chunk_index = 0
    while done < trials:
        size = min(_MONTE_CARLO_CHUNK, trials - done)
        draws = rng.stream(seed, chunk_index).random((size, g.m)) < p
        masks = draws @ powers if g.m else np.zeros(size, dtype=np.int64)
        successes += int(
            _kernels.count_decodable_masks(eu, ev, g.n, masks.astype(np.int64), even)
        )
        done += size
        chunk_index += 1
    estimate = successes / trials
    return MonteCarloEstimate(
        p=p,
        trials=trials,
        successes=successes,
        estimate=estimate,
        std_error=sqrt(estimate * (1.0 - estimate) / trials),
        seed=seed,
    )


def format_spectrum(spectrum: DeletionSpectrum) -> str:
    lines = [f"m {spectrum.m} parity {spectrum.parity.value}"]
    lines.extend(f"{x} {c}" for x, c in enumerate(spectrum.c))
    return "\n".join(lines) + "\n"


def parse_spectrum(text: str) -> DeletionSpectrum:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty spectrum text")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "m" or head[2] != "parity":
        raise ValueError(f"bad spectrum header {lines[0]!r}")
    m = int(head[1])
    parity = Parity(head[3])
    if len(lines) != m + 2:
        raise ValueError(f"expected {m + 1} coefficient lines, got {len(lines) - 1}")
    c = [0] * (m + 1)
    for ln in lines[1:]:
        x_str, c_str = ln.split()
        x, value = int(x_str), int(c_str)
        if not 0 <= x <= m:
            raise ValueError(f"coefficient index {x} outside 0..{m}")
        if not 0 <= value <= comb(m, x):
            raise ValueError(f"c_{x}={value} outside 0..C({m},{x})")
        c[x] = value
    return DeletionSpectrum(m=m, c=tuple(c), parity=parity)
