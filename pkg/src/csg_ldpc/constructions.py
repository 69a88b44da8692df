"""Programmatic cubic graph families used to generate catalog entries."""

from __future__ import annotations

from .graphs import Graph

__all__ = ["generalized_petersen", "bipartite_double_cover", "coxeter_graph"]


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle, spokes, inner rim with step k.

    Vertices 0..n-1 are the outer cycle, n..2n-1 the inner rim.  Requires
    3 <= n and 1 <= k < n/2 so the result is simple and cubic.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if not (1 <= k < n / 2):
        raise ValueError("need 1 <= k < n/2 for a simple cubic graph")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def bipartite_double_cover(g: Graph) -> Graph:
    """Tensor product with K2: each edge {u, w} becomes (u,0)-(w,1) and (w,0)-(u,1).

    Copy 0 of vertex v keeps index v, copy 1 gets index v + n.  The cover of
    a connected non-bipartite graph is connected and bipartite, with odd
    cycles unfolded to twice their length.
    """
    n = g.vertex_count
    edges = []
    for u, w in g.edges():
        edges.append((u, n + w))
        edges.append((w, n + u))
    return Graph.from_edges(2 * n, edges)


def coxeter_graph() -> Graph:
    """The 28-vertex Coxeter graph.

    Three seven-vertex rings with chord steps 1, 2 and 3 (the heptagon and
    the two heptagrams), plus seven hub vertices joined to the matching
    vertex of each ring.
    """
    edges = []
    for step, base in ((1, 0), (2, 7), (3, 14)):
        for i in range(7):
            edges.append((base + i, base + (i + step) % 7))
    for i in range(7):
        hub = 21 + i
        edges.extend([(hub, i), (hub, 7 + i), (hub, 14 + i)])
    return Graph.from_edges(28, edges)
