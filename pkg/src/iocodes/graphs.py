"""Immutable simple undirected graphs over dense vertex indices.

Vertices are the integers ``0..n-1``.  Every neighborhood is kept as a
Python integer used as a bitset, which makes the intersection/symmetric
difference operations at the heart of code verification and the exact
solver word-parallel.  All operations are pure; derived graphs (edge or
vertex deletion, components) are fresh values.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import (
    Disconnected,
    EmptyGraph,
    InvalidVertex,
    NotATree,
    NotPresent,
    UniverseMismatch,
)

__all__ = [
    "Graph",
    "VertexSet",
    "open_neighborhood",
    "max_degree",
    "min_degree",
    "find_open_twins",
    "has_four_cycle",
    "is_connected",
    "components",
    "classify_vertices",
    "diameter",
    "longest_path_in_tree",
    "delete_edge",
    "delete_vertex",
    "find_induced_cycle",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph, immutable after construction."""

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidVertex(f"negative vertex count {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidVertex(f"self-loop at {u}")
            if adj[u] >> v & 1:
                continue  # ignore duplicate edge
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self.adj = tuple(adj)
        self.edge_count = m

    @classmethod
    def _from_adj(cls, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g.edge_count = sum(m.bit_count() for m in adj) // 2
        return g

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    def vertices(self) -> range:
        return range(self.n)

    def degree_sequence(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class VertexSet:
    """A set of vertex indices tied to the ``n`` it was built against."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: int, members: Iterable[int] = (), mask: int | None = None):
        self.universe = universe
        if mask is None:
            mask = _mask_of(members)
        if mask < 0 or mask >> universe:
            raise InvalidVertex(f"members outside universe 0..{universe - 1}")
        self.mask = mask

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, mask=(1 << universe) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(
                f"universes differ: {self.universe} vs {other.universe}"
            )

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, mask=self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, mask=self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, mask=self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __or__(self, other):
        return self.union(other)

    def __and__(self, other):
        return self.intersection(other)

    def __sub__(self, other):
        return self.difference(other)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.universe == other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.universe}, {sorted(self)})"


# ---------------------------------------------------------------------------
# Structural queries


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    """The set of neighbors of ``v``; never contains ``v`` itself."""
    g.check_vertex(v)
    return VertexSet(g.n, mask=g.adj[v])


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("max_degree of empty graph")
    return max(m.bit_count() for m in g.adj)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("min_degree of empty graph")
    return min(m.bit_count() for m in g.adj)


def find_open_twins(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs with identical open neighborhoods, sorted."""
    seen: dict[int, list[int]] = {}
    for v in range(g.n):
        seen.setdefault(g.adj[v], []).append(v)
    pairs = []
    for group in seen.values():
        if len(group) > 1:
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    pairs.append((group[i], group[j]))
    return sorted(pairs)


def has_four_cycle(g: Graph) -> bool:
    """True iff some 4-cycle exists, i.e. two vertices share >= 2 neighbors."""
    for u in range(g.n):
        au = g.adj[u]
        for v in range(u + 1, g.n):
            common = au & g.adj[v] & ~(1 << u) & ~(1 << v)
            if common.bit_count() >= 2:
                return True
    return False


def _bfs_order(g: Graph, start: int) -> tuple[list[int], list[int]]:
    """BFS distances and parents from ``start`` (-1 where unreachable)."""
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in _bits(g.adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    dist, _ = _bfs_order(g, 0)
    return all(d >= 0 for d in dist)


def components(g: Graph) -> list[tuple[Graph, list[int], dict[int, int]]]:
    """Connected components as ``(subgraph, new_to_old, old_to_new)`` triples."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in _bits(g.adj[u]):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comp.sort()
        old_to_new = {old: i for i, old in enumerate(comp)}
        edges = [
            (old_to_new[u], old_to_new[v])
            for u in comp
            for v in _bits(g.adj[u])
            if u < v
        ]
        out.append((Graph(len(comp), edges), comp, old_to_new))
    return out


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def classify_vertices(g: Graph) -> dict[str, VertexSet]:
    """Tag vertices as leaf / support / strong_support / internal.

    A support vertex has at least one leaf neighbor, a strong support at
    least two.  Tags may overlap (in P_2 both vertices are leaf and
    support); ``internal`` marks vertices that are neither leaves nor
    supports.
    """
    leaf_mask = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            leaf_mask |= 1 << v
    support = 0
    strong = 0
    for v in range(g.n):
        leaf_nbrs = (g.adj[v] & leaf_mask).bit_count()
        if leaf_nbrs >= 1:
            support |= 1 << v
        if leaf_nbrs >= 2:
            strong |= 1 << v
    internal = ((1 << g.n) - 1) & ~leaf_mask & ~support if g.n else 0
    return {
        "leaf": VertexSet(g.n, mask=leaf_mask),
        "support": VertexSet(g.n, mask=support),
        "strong_support": VertexSet(g.n, mask=strong),
        "internal": VertexSet(g.n, mask=internal),
    }


def support_vertices(g: Graph) -> VertexSet:
    return classify_vertices(g)["support"]


def diameter(g: Graph) -> int:
    """Maximum pairwise distance; raises on disconnected input."""
    if g.n == 0:
        raise EmptyGraph("diameter of empty graph")
    best = 0
    for v in range(g.n):
        dist, _ = _bfs_order(g, v)
        if min(dist) < 0:
            raise Disconnected("diameter of disconnected graph")
        best = max(best, max(dist))
    return best


def tree_path(g: Graph, a: int, b: int) -> list[int]:
    """The unique path from ``a`` to ``b`` in a tree."""
    _, parent = _bfs_order(g, a)
    path = [b]
    while path[-1] != a:
        p = parent[path[-1]]
        if p < 0:
            raise Disconnected(f"no path {a}..{b}")
        path.append(p)
    path.reverse()
    return path


def longest_path_in_tree(g: Graph) -> list[int]:
    """A diameter-realizing path, endpoints tie-broken to lowest indices."""
    if g.n == 0:
        raise EmptyGraph("longest path of empty graph")
    if not is_connected(g):
        raise Disconnected("longest path of disconnected graph")
    if g.edge_count != g.n - 1:
        raise NotATree("longest_path_in_tree on cyclic input")
    if g.n == 1:
        return [0]
    best = None
    for a in range(g.n):
        dist, _ = _bfs_order(g, a)
        for b in range(a + 1, g.n):
            key = (-dist[b], a, b)
            if best is None or key < best:
                best = key
    _, a, b = best
    return tree_path(g, a, b)


def diametral_paths(g: Graph) -> list[list[int]]:
    """All diameter-realizing paths of a tree, in both orientations.

    Ordered by (start, end) endpoint pair; used by the constructive
    algorithms, which root a tree at either end of a longest path.
    """
    if g.n <= 1:
        return [[0]] if g.n == 1 else []
    dists = {}
    diam = 0
    for a in range(g.n):
        dist, _ = _bfs_order(g, a)
        dists[a] = dist
        diam = max(diam, max(dist))
    out = []
    for a in range(g.n):
        for b in range(g.n):
            if a != b and dists[a][b] == diam:
                out.append(tree_path(g, a, b))
    return out


def delete_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """A fresh graph with one edge removed."""
    u, v = edge
    if not g.has_edge(u, v):
        raise NotPresent(f"edge ({u}, {v}) not in graph")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._from_adj(tuple(adj))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int], dict[int, int]]:
    """Remove ``v`` and re-densify; returns (graph, new_to_old, old_to_new)."""
    if not (0 <= v < g.n):
        raise NotPresent(f"vertex {v} not in graph")
    keep = [u for u in range(g.n) if u != v]
    old_to_new = {old: i for i, old in enumerate(keep)}
    edges = [
        (old_to_new[a], old_to_new[b])
        for a, b in g.edges()
        if a != v and b != v
    ]
    return Graph(len(keep), edges), keep, old_to_new


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    """The subgraph induced on ``vertices``; returns index maps both ways."""
    keep = sorted(set(vertices))
    for v in keep:
        g.check_vertex(v)
    old_to_new = {old: i for i, old in enumerate(keep)}
    keep_mask = _mask_of(keep)
    edges = []
    for u in keep:
        for v in _bits(g.adj[u] & keep_mask):
            if u < v:
                edges.append((old_to_new[u], old_to_new[v]))
    return Graph(len(keep), edges), keep, old_to_new


def _shortest_cycle_through(g: Graph, v: int) -> list[int] | None:
    """Shortest cycle containing ``v`` as a vertex sequence, or None.

    Deterministic: minimal length, then lexicographically smallest
    sequence starting at ``v``.  Any shortest cycle through a vertex is
    chordless.
    """
    best = None
    for u in g.neighbors(v):
        h = delete_edge(g, (v, u))
        dist, parent = _bfs_order(h, u)
        if dist[v] < 0:
            continue
        # walk the v..u shortest path in G - vu; the closing edge uv is implicit
        chain = []
        cur = v
        while cur != u:
            cur = parent[cur]
            chain.append(cur)
        walk = [v] + chain
        key = (len(walk), tuple(walk))
        if best is None or key < best:
            best = key
    return list(best[1]) if best else None


def find_induced_cycle(g: Graph) -> list[int] | None:
    """Some chordless cycle, or None for forests.

    Returns the shortest cycle through the lowest-index vertex that lies
    on a cycle; the sequence starts at that vertex.
    """
    for v in range(g.n):
        cycle = _shortest_cycle_through(g, v)
        if cycle is not None:
            return cycle
    return None
