"""Coding-scheme constructions and the scheme/graph bijection.

A scheme is an ordered list of relay encodings, each either a single
packet or the sum of two distinct packets. Its graph representation has
one vertex per packet, a loop per single-packet encoding, and a non-loop
edge per pairwise sum; encoding index i becomes edge id i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multigraph import GraphError, MultiGraph, build


@dataclass(frozen=True)
class Encoding:
    """One relay encoding: packet j alone, or the sum of packets j and k."""

    j: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.j < 1 or (self.k is not None and self.k < 1):
            raise ValueError("packet indices are 1-based")
        if self.k == self.j:
            raise ValueError(f"pairwise encoding needs distinct packets, got p_{self.j} twice")

    @property
    def is_single(self) -> bool:
        return self.k is None


@dataclass(frozen=True)
class CodingScheme:
    n: int
    encodings: tuple[Encoding, ...]

    @property
    def m(self) -> int:
        return len(self.encodings)

    @property
    def redundancy(self) -> Fraction:
        return Fraction(self.m, self.n)


def _norm(i: int, n: int) -> int:
    return (i - 1) % n + 1


def algorithm1(n: int, r: int, k: int, loops: int) -> CodingScheme:
    """Ring-plus-loops scheme from a k x (r*s) table, s = n/k.

    Cell (a, b) holds encoding f with index b + (a-1)*r*s; cells are
    visited in column-wise order a + (b-1)*k, and the first ``loops`` of
    them emit single-packet encodings. The remaining cells emit pairwise
    sums: vertical neighbors for b <= s-1, ring successors for
    s <= b <= r*s-1, and a wrap-around closing pair at b = r*s.
    """
    if n < 2:
        raise ValueError("need at least 2 packets")
    if r < 1:
        raise ValueError("redundancy must be at least 1")
    if k < 1 or n % k != 0 or n // k <= 1:
        raise ValueError(f"k={k} must be a proper divisor of n={n}")
    if not 0 <= loops <= n:
        raise ValueError(f"loop count {loops} outside 0..{n}")
    s = n // k
    width = r * s
    encodings = [Encoding(1)] * (r * n)
    for a in range(1, k + 1):
        for b in range(1, width + 1):
            index = b + (a - 1) * width
            order = a + (b - 1) * k
            base = _norm(b + (a - 1) * s, n)
            if 1 <= order <= loops:
                enc = Encoding(base)
            else:
                if b <= s - 1:
                    other = _norm(b + a * s, n)
                elif b <= width - 1:
                    other = _norm(b + (a - 1) * s + 1, n)
                else:
                    other = _norm(1 + (a - 1) * s, n)
                if other == base:
                    raise ValueError(
                        f"cell (a={a}, b={b}) pairs packet p_{base} with itself; "
                        "k=1 needs loops >= s-1 to stay valid"
                    )
                enc = Encoding(base, other)
            encodings[index - 1] = enc
    return CodingScheme(n, tuple(encodings))


def algorithm1_warnings(n: int, r: int, k: int, loops: int) -> list[str]:
    """Notes on parameter choices outside the proven-optimal range."""
    s = n // k
    notes = []
    if not (k >= 2 and r >= 2 and loops >= 2 * r - 1 and k <= loops <= (s - 1) * k):
        notes.append(
            "outside the even-characteristic optimality conditions "
            f"(need k >= 2, r >= 2, and max(2r-1, k) <= loops <= (s-1)k; "
            f"got k={k}, r={r}, loops={loops})"
        )
    if loops > (s - 1) * k:
        notes.append(
            "single-packet cells overlap the ring-edge region "
            f"(loops={loops} > (s-1)k={(s - 1) * k}); no optimality guarantee applies"
        )
    return notes


def algorithm2(n: int, r: int) -> CodingScheme:
    """Circulant scheme: encoding i sums packet i with packet i + ceil(i/n)."""
    if n < 3:
        raise ValueError("need at least 3 packets")
    if not 1 <= r < n:
        raise ValueError(f"redundancy {r} outside 1..{n - 1} (offsets must stay nonzero mod n)")
    encodings = []
    for i in range(1, n * r + 1):
        offset = -(-i // n)
        if offset % n == 0:
            raise ValueError(f"encoding {i} would pair a packet with itself")
        encodings.append(Encoding(_norm(i, n), _norm(i + offset, n)))
    return CodingScheme(n, tuple(encodings))


def algorithm2_warnings(n: int, r: int) -> list[str]:
    if not (n > 3 and n / 2 < 4 * r < n):
        return [
            "outside the odd-characteristic optimality conditions "
            f"(need n > 3 and n/2 < 4r < n; got n={n}, r={r})"
        ]
    return []


def uncoded(n: int, r: int) -> CodingScheme:
    """Send every packet r times with no coding."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 packets and r >= 1 copies")
    return CodingScheme(
        n, tuple(Encoding(j) for j in range(1, n + 1) for _ in range(r))
    )


def scheme_to_graph(scheme: CodingScheme) -> MultiGraph:
    pairs = [
        (enc.j, enc.j if enc.k is None else enc.k) for enc in scheme.encodings
    ]
    try:
        return build(scheme.n, pairs)
    except GraphError as exc:
        raise ValueError(f"scheme refers to packets outside 1..{scheme.n}") from exc


def graph_to_scheme(g: MultiGraph) -> CodingScheme:
    encodings = []
    for e in sorted(g.edges, key=lambda e: e.id):
        encodings.append(Encoding(e.u) if e.is_loop else Encoding(e.u, e.v))
    return CodingScheme(g.n, tuple(encodings))


def parse_scheme(text: str) -> CodingScheme:
    """Parse the scheme text format (same syntax as the graph format)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty scheme text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {lines[0]!r}: expected 'n m'")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header says m={m} but found {len(body)} encoding lines")
    encodings = []
    for ln in body:
        nums = [int(tok) for tok in ln.split()]
        if len(nums) == 1:
            encodings.append(Encoding(nums[0]))
        elif len(nums) == 2:
            encodings.append(Encoding(nums[0], nums[1]))
        else:
            raise ValueError(f"bad encoding line {ln!r}")
        if not all(1 <= x <= n for x in nums):
            raise ValueError(f"encoding line {ln!r} outside 1..{n}")
    return CodingScheme(n, tuple(encodings))


def format_scheme(scheme: CodingScheme) -> str:
    lines = [f"{scheme.n} {scheme.m}"]
    for enc in scheme.encodings:
        lines.append(f"{enc.j}" if enc.is_single else f"{enc.j} {enc.k}")
    return "\n".join(lines) + "\n"
