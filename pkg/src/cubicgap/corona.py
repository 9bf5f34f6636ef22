"""Corona and strong-neighbourhood structure around girth cycles.

Implements the subgraph S~ determined by a vertex set S (S plus the outside
vertices with >= 2 neighbours in S, keeping only edges with an endpoint in S),
the corona of a girth cycle, and the exhaustive search over extensions of the
5-cycle corona that survive the positive-semidefiniteness filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_key, is_isomorphic
from .certify import is_psd
from .graphs import Graph, _bits, bounded_distance_at_least, girth, is_cubic
from .intmatrix import IntMatrix


@dataclass(frozen=True)
class Corona:
    """A girth cycle u_0..u_{g-1} plus each u_i's unique off-cycle neighbour v_i."""

    host: Graph
    cycle: tuple[int, ...]
    pendants: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        seen = []
        for v in self.cycle + self.pendants:
            if v not in seen:
                seen.append(v)
        return tuple(seen)


@dataclass(frozen=True)
class MarkedGraph:
    """A graph whose vertices are split into core (the set S) and external."""

    graph: Graph
    core: tuple[int, ...]
    external: tuple[int, ...]

    def __post_init__(self):
        n = self.graph.n
        if sorted(self.core + self.external) != list(range(n)):
            raise ValueError("core and external must partition the vertex set")
        core_mask = 0
        for v in self.core:
            core_mask |= 1 << v
        for w in self.external:
            nbrs = self.graph.adj[w]
            if nbrs & ~core_mask:
                raise ValueError(f"external vertex {w} has an external neighbour")
            if (nbrs & core_mask).bit_count() < 2:
                raise ValueError(f"external vertex {w} has < 2 core neighbours")

    def colors(self) -> tuple[int, ...]:
        cols = [0] * self.graph.n
        for w in self.external:
            cols[w] = 1
        return tuple(cols)

    def core_mask_string(self) -> str:
        cols = self.colors()
        return "".join("1" if c == 0 else "0" for c in cols)


def strong_open_neighbourhood(g: Graph, s: Sequence[int]) -> tuple[int, ...]:
    """Vertices outside s with at least two neighbours inside s."""
    smask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        smask |= 1 << v
    out = []
    for v in range(g.n):
        if smask >> v & 1:
            continue
        if (g.adj[v] & smask).bit_count() >= 2:
            out.append(v)
    return tuple(out)


def tilde_subgraph(g: Graph, s: Sequence[int]) -> MarkedGraph:
    """The subgraph S~ on S plus its strong open neighbourhood.

    Keeps exactly the host edges with one endpoint in S and the other in
    S or the strong neighbourhood; external-external edges of the host are
    dropped, mirroring the fact that they do not contribute to M_SS.
    """
    core_sorted = tuple(sorted(set(s)))
    ext_sorted = strong_open_neighbourhood(g, core_sorted)
    verts = core_sorted + ext_sorted
    relabel = {v: i for i, v in enumerate(verts)}
    sset = set(core_sorted)
    edges = []
    for u in core_sorted:
        for w in _bits(g.adj[u]):
            if w in relabel and (w in sset and w > u or w not in sset):
                edges.append((relabel[u], relabel[w]))
    sub = Graph(len(verts), edges)
    return MarkedGraph(sub, tuple(range(len(core_sorted))),
                       tuple(range(len(core_sorted), len(verts))))


def corona_of_cycle(g: Graph, cycle: Sequence[int]) -> Corona:
    """Corona of a girth cycle: the cycle plus each vertex's third neighbour."""
    if not is_cubic(g):
        raise ValueError("corona is defined for cubic hosts")
    cyc = tuple(cycle)
    k = len(cyc)
    if k != girth(g):
        raise ValueError("cycle length differs from the girth")
    if len(set(cyc)) != k:
        raise ValueError("cycle revisits a vertex")
    for i in range(k):
        if not g.has_edge(cyc[i], cyc[(i + 1) % k]):
            raise ValueError("vertex sequence is not a cycle")
    on_cycle = set(cyc)
    pendants = []
    for u in cyc:
        off = [w for w in _bits(g.adj[u]) if w not in on_cycle]
        if len(off) != 1:
            raise ValueError(f"cycle vertex {u} has {len(off)} off-cycle neighbours")
        pendants.append(off[0])
    return Corona(g, cyc, tuple(pendants))


def cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All cycles of the given length, one representative per cyclic class.

    Representatives start at their minimum vertex and fix the orientation by
    requiring the second vertex to be smaller than the last.
    """
    out = []
    n = g.n

    def extend(path: list[int], seen: int) -> None:
        u = path[-1]
        if len(path) == length:
            if g.has_edge(u, path[0]) and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in _bits(g.adj[u]):
            if w <= path[0] or seen >> w & 1:
                continue
            path.append(w)
            extend(path, seen | 1 << w)
            path.pop()

    for start in range(n):
        extend([start], 1 << start)
    return out


def m_from_visible(g: Graph) -> IntMatrix:
    """Certificate-matrix entries determined by a configuration subgraph.

    The ambient graph is cubic, so the diagonal is 3; off-diagonal entries
    come from adjacency and common neighbours visible inside g.
    """
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        rows[u][u] = 3
        for v in range(u + 1, n):
            cnt = (g.adj[u] & g.adj[v]).bit_count()
            if g.adj[u] >> v & 1:
                cnt += 2
            rows[u][v] = cnt
            rows[v][u] = cnt
    return IntMatrix(rows)


def m_ss_from_marked(mg: MarkedGraph) -> IntMatrix:
    """M_SS over the core vertices; externals contribute as common neighbours."""
    return m_from_visible(mg.graph).submatrix(mg.core)


def colored_isomorphic(a: MarkedGraph, b: MarkedGraph) -> bool:
    """Isomorphism respecting the core/external split on both sides."""
    return is_isomorphic(a.graph, b.graph, a.colors(), b.colors())


def marked_canonical_key(mg: MarkedGraph) -> tuple:
    return canonical_key(mg.graph, mg.colors())


# ---------------------------------------------------------------------------
# girth-5 extension search
# ---------------------------------------------------------------------------

_CYCLE = tuple(range(5))
_PENDANTS = tuple(range(5, 10))
_BASE_N = 10


def _base_adjacency() -> list[int]:
    adj = [0] * _BASE_N
    for i in range(5):
        j = (i + 1) % 5
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        adj[i] |= 1 << (5 + i)
        adj[5 + i] |= 1 << i
    return adj


def _raw_girth5_configs() -> Iterator[tuple[MarkedGraph, bool]]:
    """Stream all structurally valid extensions of the 5-cycle corona.

    Structural validity: degrees <= 3 everywhere, externals attach to 2 or 3
    pendants, and the realized graph stays free of cycles shorter than 5
    (which also excludes any vertex pair with two common neighbours).  The
    second component reports the positive-semidefiniteness of M_SS.
    """
    pend_pairs = list(combinations(_PENDANTS, 2))
    attach_cands = list(combinations(_PENDANTS, 2)) + list(combinations(_PENDANTS, 3))
    adj = _base_adjacency()
    deg = [m.bit_count() for m in adj]

    def emit() -> tuple[MarkedGraph, bool]:
        n = len(adj)
        graph = Graph.from_adjacency_masks(n, tuple(adj))
        mg = MarkedGraph(graph, tuple(range(_BASE_N)), tuple(range(_BASE_N, n)))
        return mg, is_psd(m_ss_from_marked(mg))

    def attach_dfs(start: int) -> Iterator[tuple[MarkedGraph, bool]]:
        yield emit()
        for idx in range(start, len(attach_cands)):
            cand = attach_cands[idx]
            if any(deg[p] >= 3 for p in cand):
                continue
            if any(not bounded_distance_at_least(adj, p, q, 3)
                   for p, q in combinations(cand, 2)):
                continue
            w = len(adj)
            adj.append(0)
            deg.append(0)
            for p in cand:
                adj[w] |= 1 << p
                adj[p] |= 1 << w
                deg[p] += 1
                deg[w] += 1
            yield from attach_dfs(idx + 1)
            for p in cand:
                adj[p] &= ~(1 << w)
                deg[p] -= 1
            adj.pop()
            deg.pop()

    def internal_dfs(i: int) -> Iterator[tuple[MarkedGraph, bool]]:
        if i == len(pend_pairs):
            yield from attach_dfs(0)
            return
        yield from internal_dfs(i + 1)
        p, q = pend_pairs[i]
        if deg[p] < 3 and deg[q] < 3 and bounded_distance_at_least(adj, p, q, 4):
            adj[p] |= 1 << q
            adj[q] |= 1 << p
            deg[p] += 1
            deg[q] += 1
            yield from internal_dfs(i + 1)
            adj[p] &= ~(1 << q)
            adj[q] &= ~(1 << p)
            deg[p] -= 1
            deg[q] -= 1

    yield from internal_dfs(0)


def enumerate_girth5_extensions() -> tuple[MarkedGraph, ...]:
    """The corona extensions whose M_SS is PSD, deduplicated up to colored
    isomorphism and sorted by canonical form."""
    survivors: dict[tuple, MarkedGraph] = {}
    for mg, psd_ok in _raw_girth5_configs():
        if not psd_ok:
            continue
        key = marked_canonical_key(mg)
        if key not in survivors:
            survivors[key] = mg
    return tuple(mg for _, mg in sorted(survivors.items(), key=lambda kv: kv[0]))


def girth5_enumeration_stats() -> dict:
    """Raw counts behind the girth-5 search (structure-valid configs and PSD verdicts)."""
    total = psd = 0
    for _, psd_ok in _raw_girth5_configs():
        total += 1
        psd += bool(psd_ok)
    survivors = enumerate_girth5_extensions()
    return {
        "structure_valid": total,
        "psd": psd,
        "psd_rejected": total - psd,
        "survivors": len(survivors),
    }


def verify_girth5_endgame(g: Graph) -> str:
    """Check every 5-cycle's S~ against the two admissible shapes, then classify.

    Returns PETERSEN or DODECAHEDRON for the two legitimate outcomes and
    INCONSISTENT if any corona shape falls outside {X1, X7} or the graph is
    neither of the two (which would contradict the classification).
    """
    from .certify import gap_check
    from .graphs import dodecahedron, petersen

    if not is_cubic(g):
        raise ValueError("endgame check requires a cubic graph")
    if girth(g) != 5:
        raise ValueError("endgame check requires girth 5")
    if not gap_check(g).has_gap:
        raise ValueError("endgame check requires no eigenvalues in (-2, 0)")

    pet = petersen()
    dod = dodecahedron()
    ref1 = tilde_subgraph(pet, corona_of_cycle(pet, cycles_of_length(pet, 5)[0]).vertices)
    ref7 = tilde_subgraph(dod, corona_of_cycle(dod, cycles_of_length(dod, 5)[0]).vertices)
    key1 = marked_canonical_key(ref1)
    key7 = marked_canonical_key(ref7)

    for cyc in cycles_of_length(g, 5):
        cor = corona_of_cycle(g, cyc)
        mg = tilde_subgraph(g, cor.vertices)
        key = marked_canonical_key(mg)
        if key not in (key1, key7):
            return "INCONSISTENT"
    if is_isomorphic(g, pet):
        return "PETERSEN"
    if is_isomorphic(g, dod):
        return "DODECAHEDRON"
    return "INCONSISTENT"
