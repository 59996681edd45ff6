"""Labeled undirected multigraphs with loops.

Vertices are the integers 1..n. Edges carry distinct integer ids, so a set
of edge ids names a deletion unambiguously even across parallel edges.
Graphs are immutable: deletion and contraction return new graphs, and the
surviving edges keep their original ids.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Malformed graph input: endpoint out of range, unknown edge id, ..."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def pair(self) -> tuple[int, int]:
        """Endpoints as a canonical (low, high) pair."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex and aggregate degree data.

    ``incidence_degree[i]`` is the number of edges meeting vertex ``i + 1``,
    a loop counting once. ``max_parallel_multiplicity`` is the size of the
    largest non-loop parallel class; loops are tallied separately in
    ``loop_count`` / ``max_loop_count``.
    """

    incidence_degree: tuple[int, ...]
    loop_count: tuple[int, ...]
    min_incidence_degree: int
    max_loop_count: int
    total_loops: int
    incidence_degree_sum: int
    max_parallel_multiplicity: int


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    has_loop: bool
    has_odd_cycle: bool
    is_isolated_vertex: bool


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components with the flags decodability tests consume.

    ``bipartite_loop_free_count`` counts components that have at least one
    edge but no odd closed walk (a loop counts as an odd cycle of length 1);
    ``isolated_vertex_count`` counts single vertices with no incident edge.
    """

    components: tuple[Component, ...]
    bipartite_loop_free_count: int
    isolated_vertex_count: int


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(e.id for e in self.edges))

    def edge(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise GraphError(f"unknown edge id {edge_id}")

    def loop_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_loop)

    def parallel_classes(self) -> dict[tuple[int, int], tuple[Edge, ...]]:
        """Non-loop edges grouped by canonical endpoint pair."""
        grouped: dict[tuple[int, int], list[Edge]] = {}
        for e in self.edges:
            if not e.is_loop:
                grouped.setdefault(e.pair(), []).append(e)
        return {pair: tuple(es) for pair, es in sorted(grouped.items())}

    def parallel_class(self, u: int, v: int) -> tuple[Edge, ...]:
        self._check_vertex(u)
        self._check_vertex(v)
        key = (u, v) if u <= v else (v, u)
        return tuple(e for e in self.edges if not e.is_loop and e.pair() == key)

    def components(self) -> ComponentSummary:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        loops = [0] * (self.n + 1)
        for e in self.edges:
            if e.is_loop:
                loops[e.u] += 1
            else:
                adj[e.u].append(e.v)
                adj[e.v].append(e.u)

        color = [-1] * (self.n + 1)
        comps: list[Component] = []
        for start in range(1, self.n + 1):
            if color[start] != -1:
                continue
            color[start] = 0
            members = [start]
            queue = deque([start])
            odd = False
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if color[y] == -1:
                        color[y] = color[x] ^ 1
                        members.append(y)
                        queue.append(y)
                    elif color[y] == color[x]:
                        odd = True
            has_loop = any(loops[v] for v in members)
            if has_loop:
                odd = True
            isolated = len(members) == 1 and not adj[start] and not loops[start]
            comps.append(Component(frozenset(members), has_loop, odd, isolated))

        s = sum(1 for c in comps if not c.has_odd_cycle and not c.is_isolated_vertex)
        t = sum(1 for c in comps if c.is_isolated_vertex)
        return ComponentSummary(tuple(comps), s, t)

    def degree_profile(self) -> DegreeProfile:
        inc = [0] * self.n
        loops = [0] * self.n
        classes: Counter[tuple[int, int]] = Counter()
        for e in self.edges:
            if e.is_loop:
                inc[e.u - 1] += 1
                loops[e.u - 1] += 1
            else:
                inc[e.u - 1] += 1
                inc[e.v - 1] += 1
                classes[e.pair()] += 1
        total_loops = sum(loops)
        degree_sum = sum(inc)
        # loops contribute one, every other edge two
        assert degree_sum == 2 * self.m - total_loops
        return DegreeProfile(
            incidence_degree=tuple(inc),
            loop_count=tuple(loops),
            min_incidence_degree=min(inc) if inc else 0,
            max_loop_count=max(loops) if loops else 0,
            total_loops=total_loops,
            incidence_degree_sum=degree_sum,
            max_parallel_multiplicity=max(classes.values()) if classes else 0,
        )

    def delete_edges(self, ids: Iterable[int]) -> MultiGraph:
        """Remove the given edge ids; all n vertices are retained."""
        wanted = set(ids)
        known = {e.id for e in self.edges}
        missing = wanted - known
        if missing:
            raise GraphError(f"unknown edge ids: {sorted(missing)}")
        return MultiGraph(self.n, tuple(e for e in self.edges if e.id not in wanted))

    def contract_parallel_class(self, u: int, v: int) -> MultiGraph:
        """Merge u and v, removing the whole (u, v) parallel class.

        Edges formerly meeting u or v re-attach to the merged vertex; a
        former (u, v) edge does not become a loop. Vertices above
        max(u, v) shift down by one so vertex ids stay 1..n-1.
        """
        if u == v:
            raise GraphError("contraction endpoints must be distinct")
        self._check_vertex(u)
        self._check_vertex(v)
        removed = {e.id for e in self.parallel_class(u, v)}
        if not removed:
            raise GraphError(f"no edge joins {u} and {v}")
        low, high = (u, v) if u < v else (v, u)

        def remap(x: int) -> int:
            if x == high:
                return low
            return x - 1 if x > high else x

        kept = tuple(
            Edge(e.id, remap(e.u), remap(e.v))
            for e in self.edges
            if e.id not in removed
        )
        return MultiGraph(self.n - 1, kept)

    def edge_in_cycle(self, edge_id: int) -> bool:
        """True when some cycle of the graph uses this edge.

        A parallel class of multiplicity >= 2 is a length-2 cycle, so any
        of its edges qualifies; otherwise the edge lies in a cycle exactly
        when its endpoints stay connected after it is removed.
        """
        e = self.edge(edge_id)
        if e.is_loop:
            raise GraphError("edge_in_cycle is undefined for loops")
        if len(self.parallel_class(e.u, e.v)) >= 2:
            return True
        rest = self.delete_edges([edge_id])
        return rest._connected_pair(e.u, e.v)

    def is_connected(self) -> bool:
        return len(self.components().components) == 1

    def edge_connectivity(self) -> int:
        """Exact edge-connectivity by scanning all vertex bipartitions.

        Defined as 0 for disconnected input; loops never cross a cut.
        """
        if self.n < 2:
            raise GraphError("edge connectivity needs at least 2 vertices")
        if not self.is_connected():
            return 0
        nonloop = [(e.u - 1, e.v - 1) for e in self.edges if not e.is_loop]
        best = len(nonloop)
        # vertex 1 stays on side 0; masks range over nonempty subsets of 2..n
        for mask in range(1, 1 << (self.n - 1)):
            side = mask << 1
            crossing = 0
            for a, b in nonloop:
                if ((side >> a) ^ (side >> b)) & 1:
                    crossing += 1
            if crossing < best:
                best = crossing
        return best

    def _connected_pair(self, u: int, v: int) -> bool:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for e in self.edges:
            if not e.is_loop:
                adj[e.u].append(e.v)
                adj[e.v].append(e.u)
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                return True
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return v in seen

    def _check_vertex(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise GraphError(f"vertex {x} out of range 1..{self.n}")


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a graph from endpoint pairs; edges get ids 1..m in input order.

    A loop is given as the pair (u, u).
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    edges = []
    for i, (u, v) in enumerate(edge_list, start=1):
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge {i}: endpoint out of range 1..{n}: ({u}, {v})")
        edges.append(Edge(i, u, v))
    return MultiGraph(n, tuple(edges))


def parse_graph(text: str) -> MultiGraph:
    """Parse the graph text format.

    Header line ``n m``, then one edge per line: ``u v`` for a non-loop,
    ``u`` alone for a loop at u. 1-indexed, whitespace-separated.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty graph text")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"bad header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header says m={m} but found {len(body)} edge lines")
    pairs = []
    for ln in body:
        parts = ln.split()
        try:
            nums = [int(tok) for tok in parts]
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
        if len(nums) == 1:
            pairs.append((nums[0], nums[0]))
        elif len(nums) == 2:
            pairs.append((nums[0], nums[1]))
        else:
            raise GraphError(f"bad edge line {ln!r}: expected 1 or 2 endpoints")
    return build(n, pairs)


def format_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    for e in sorted(g.edges, key=lambda e: e.id):
        lines.append(f"{e.u}" if e.is_loop else f"{e.u} {e.v}")
    return "\n".join(lines) + "\n"
