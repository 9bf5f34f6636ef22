"""Colored canonical forms via refinement plus individualization backtracking.

Exact for the graph sizes used here (<= a few dozen vertices).  The canonical
form of a colored graph is the maximum, over all refinement-tree leaves, of
the relabeled adjacency encoding; two colored graphs are isomorphic iff their
canonical forms coincide.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

from .graphs import Graph, _bits


def refine(n: int, adj: Sequence[int], colors: Sequence[int]) -> tuple[int, ...]:
    """Stable 1-dimensional color refinement (equitable partition)."""
    colors = tuple(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[w] for w in _bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = tuple(rank[s] for s in sigs)
        if new == colors:
            return new
        colors = new


def _cells(n: int, colors: Sequence[int]) -> list[list[int]]:
    by = {}
    for v in range(n):
        by.setdefault(colors[v], []).append(v)
    return [by[c] for c in sorted(by)]


def _leaf_key(n: int, adj: Sequence[int], colors: Sequence[int]) -> tuple:
    """Encoding of a discrete coloring: relabeled adjacency rows plus colors."""
    order = sorted(range(n), key=lambda v: colors[v])
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        key = 0
        for w in _bits(adj[v]):
            key |= 1 << (n - 1 - pos[w])
        rows.append(key)
    return tuple(rows)


def canonical_key(g: Graph, colors: Sequence[int] | None = None) -> tuple:
    """Canonical invariant of (graph, colors); equal iff colored-isomorphic.

    The initial colors partition vertices into classes that any isomorphism
    must preserve (class values themselves are significant).
    """
    n = g.n
    base = tuple(colors) if colors is not None else (0,) * n
    start = refine(n, g.adj, _seed_colors(base))
    best: list[tuple | None] = [None]

    def search(cols: tuple[int, ...]) -> None:
        cells = _cells(n, cols)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            key = _leaf_key(n, g.adj, cols)
            if best[0] is None or key > best[0]:
                best[0] = key
            return
        for v in target:
            nxt = list(cols)
            for w in range(n):
                nxt[w] = nxt[w] * 2 + (1 if w == v else 0)
            search(refine(n, g.adj, nxt))

    search(start)
    assert best[0] is not None
    return (n, _color_class_sizes(base)) + best[0]


def _seed_colors(base: Sequence[int]) -> tuple[int, ...]:
    order = sorted(set(base))
    rank = {c: i for i, c in enumerate(order)}
    return tuple(rank[c] for c in base)


def _color_class_sizes(base: Sequence[int]) -> tuple:
    sizes = {}
    for c in base:
        sizes[c] = sizes.get(c, 0) + 1
    return tuple(sorted(sizes.items()))


def is_isomorphic(a: Graph, b: Graph,
                  colors_a: Sequence[int] | None = None,
                  colors_b: Sequence[int] | None = None) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a, colors_a) == canonical_key(b, colors_b)


def _iso_backtrack(a: Graph, b: Graph, ca: tuple[int, ...], cb: tuple[int, ...],
                   count_all: bool) -> int:
    """Count (or detect) isomorphisms a -> b respecting refined colors."""
    n = a.n
    ra = refine(n, a.adj, ca)
    rb = refine(n, b.adj, cb)
    if sorted(ra) != sorted(rb):
        return 0
    order = sorted(range(n), key=lambda v: (ra[v], -a.adj[v].bit_count(), v))
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(rb[v], []).append(v)
    mapping = [-1] * n
    used = [False] * n
    found = 0

    def place(i: int) -> bool:
        nonlocal found
        if i == n:
            found += 1
            return not count_all
        v = order[i]
        for w in by_color.get(ra[v], ()):
            if used[w]:
                continue
            ok = True
            for u in _bits(a.adj[v]):
                mu = mapping[u]
                if mu >= 0 and not (b.adj[w] >> mu & 1):
                    ok = False
                    break
            if ok:
                deg_v = a.adj[v].bit_count()
                if deg_v != b.adj[w].bit_count():
                    continue
                mapping[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    place(0)
    return found


def count_automorphisms(g: Graph, colors: Sequence[int] | None = None) -> int:
    base = tuple(colors) if colors is not None else (0,) * g.n
    seed = _seed_colors(base)
    return _iso_backtrack(g, g, seed, seed, count_all=True)
