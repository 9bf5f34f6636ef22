"""Immutable simple graphs on {0..n-1} with structural queries and graph6 I/O.

Adjacency is stored as one bitmask per vertex, which keeps neighbourhood
intersections (common neighbours, bounded-distance checks) cheap at the sizes
this package works with (n <= 1024).
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1024

#: Girth of an acyclic graph.  A float so that comparisons like
#: ``girth(g) >= 5`` behave sensibly without sentinel special-casing.
INFINITE = math.inf


class Graph:
    """Simple undirected graph.  Vertices are 0..n-1; no loops or multi-edges.

    Instances are immutable and hashable, so they are safe to share and to use
    as dictionary keys.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        """Trusted fast path; masks must already be symmetric and loop-free."""
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(masks)
        return g

    def __setattr__(self, name, value):
        if hasattr(self, "adj"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def union_disjoint(self, other: "Graph") -> "Graph":
        off = self.n
        edges = list(self.edges()) + [(u + off, v + off) for u, v in other.edges()]
        return Graph(self.n + other.n, edges)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v].bit_count()


def common_neighbors(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """N(u) & N(v), as a sorted vertex tuple.  Requires u != v."""
    if u == v:
        raise ValueError("common_neighbors requires two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex label out of range")
    return tuple(_bits(g.adj[u] & g.adj[v]))


def is_cubic(g: Graph) -> bool:
    return all(m.bit_count() == 3 for m in g.adj)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def girth(g: Graph):
    """Length of a shortest cycle, or INFINITE for forests.

    BFS from every vertex; the first non-tree edge seen from root r closes a
    cycle of length dist[u]+dist[v]+1, and the minimum over all roots is the
    girth (a BFS rooted on a shortest cycle attains it exactly).
    """
    best = INFINITE
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                break
            for w in _bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def bounded_distance_at_least(adj: Sequence[int], u: int, v: int, limit: int) -> bool:
    """True iff dist(u, v) >= limit in the graph given by adjacency masks.

    Used as the girth guard when tentatively adding the edge {u, v}: the edge
    creates no cycle shorter than limit+1 iff u and v are at distance >= limit.
    """
    if u == v:
        return limit <= 0
    seen = 1 << u
    frontier = seen
    for _ in range(limit - 1):
        nxt = 0
        for w in _bits(frontier):
            nxt |= adj[w]
        frontier = nxt & ~seen
        if frontier >> v & 1:
            return False
        if not frontier:
            return True
        seen |= frontier
    return True


# ---------------------------------------------------------------------------
# graph6 (bit-exact per the published format; one graph per line)
# ---------------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def to_graph6(g: Graph) -> bytes:
    """Encode in graph6.  Canonical for the given labeling, not isomorphism."""
    n = g.n
    out = bytearray(_encode_g6_size(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _encode_g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("n exceeds the graph6 format limit")


def parse_graph6(data) -> Graph:
    """Decode one graph6 line (optionally prefixed with >>graph6<<)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise ValueError("empty graph6 string")
    for ch in data:
        if not 63 <= ch <= 126:
            raise ValueError(f"graph6 byte {ch} outside printable range 63..126")
    n, body = _decode_g6_size(data)
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} exceeds supported cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    adj = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for ch in body:
        group = ch - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                idx += 1
            elif bit:
                raise ValueError("graph6 padding bits must be zero")
    return Graph.from_adjacency_masks(n, adj)


def _decode_g6_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 length header")
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ch - 63)
        if n <= 62:
            raise ValueError("non-canonical graph6 length header")
        return n, data[4:]
    if len(data) < 8:
        raise ValueError("truncated graph6 length header")
    n = 0
    for ch in data[2:8]:
        n = n << 6 | (ch - 63)
    if n <= 258047:
        raise ValueError("non-canonical graph6 length header")
    return n, data[8:]


# ---------------------------------------------------------------------------
# named constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k}.

    Outer vertices are 0..n-1, inner ones n..2n-1.
    """
    if n < 3 or not 1 <= k < n or 2 * k == n:
        raise ValueError(f"generalized_petersen({n},{k}) out of range")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def prism() -> Graph:
    """The 3-prism (triangular prism)."""
    return generalized_petersen(3, 1)


def corona_product_cycle(g: int) -> Graph:
    """Cycle u_0..u_{g-1} (labels 0..g-1) with pendant v_i = g+i on each u_i."""
    if g < 3:
        raise ValueError("corona product needs a cycle of length >= 3")
    edges = [(i, (i + 1) % g) for i in range(g)]
    edges += [(i, g + i) for i in range(g)]
    return Graph(2 * g, edges)


def tutte_eight_cage() -> Graph:
    """Tutte's 8-cage, built exactly as in the girth-8 case analysis.

    Fixed numbering: u_0..u_7 = 0..7 (outer 8-cycle), v_i = 8+i (spokes),
    w_i = 16+i with w_i ~ w_{i+3 mod 8}, hubs v04=24, v15=25, v26=26, v37=27,
    a=28, b=29.
    """
    edges = []
    for i in range(8):
        edges.append((i, (i + 1) % 8))
        edges.append((i, 8 + i))
        edges.append((8 + i, 16 + i))
        edges.append((16 + i, 16 + (i + 3) % 8))
    hubs = {24: (8 + 0, 8 + 4, 28), 25: (8 + 1, 8 + 5, 29),
            26: (8 + 2, 8 + 6, 28), 27: (8 + 3, 8 + 7, 29)}
    for hub, nbrs in hubs.items():
        for w in nbrs:
            edges.append((hub, w))
    edges.append((28, 29))
    g = Graph(30, edges)
    assert is_cubic(g) and g.edge_count() == 45
    return g
