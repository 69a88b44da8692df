"""Structural and spectral bounds for codes built from cubic bipartite graphs.

Everything here is mechanical: the bit-adjacency graph and its clique
number bound the minimum distance, a greedy independent set bounds the
dimension, and the second adjacency eigenvalue feeds the two
eigenvalue-based distance bounds plus a coarser piecewise one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import LinearCode, tanner_graph
from .graphs import Graph, adjacency_array, girth

__all__ = [
    "BitNodeGraph",
    "BoundsReport",
    "bit_node_graph",
    "verify_gram_identity",
    "clique_number",
    "independent_set_lower",
    "dimension_bound_check",
    "spectrum",
    "tanner_bounds",
    "piecewise_distance_bound",
    "predict_trivial",
    "compute_bounds",
]


@dataclass(frozen=True)
class BitNodeGraph:
    """Graph on codeword bits, adjacent when two columns of H share a row.

    ``hypotheses_hold`` is False when the Tanner graph has girth 4; the
    graph is still built, but two bits may then share more than one check
    and the 6-regularity and Gram identity arguments break down.
    """

    graph: Graph
    hypotheses_hold: bool


def bit_node_graph(code: LinearCode) -> BitNodeGraph:
    cols = code.H.column_bits()
    n = code.n
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if cols[u] & cols[v]
    ]
    g = Graph.from_edges(n, edges)
    tg = girth(tanner_graph(code.H))
    return BitNodeGraph(graph=g, hypotheses_hold=tg is not None and tg >= 6)


def verify_gram_identity(code: LinearCode, gamma: BitNodeGraph) -> bool:
    """Check H^T H = 3I + A(gamma) over the integers.

    Holds exactly when no two columns of H share more than one row, i.e.
    when the Tanner graph is 4-cycle free.
    """
    ht = code.H.transpose()
    product = ht.multiply_integer(code.H)
    expected = 3 * np.eye(code.n, dtype=np.int64) + adjacency_array(
        gamma.graph
    ).astype(np.int64)
    return bool(np.array_equal(product, expected))


def _degeneracy_order(g: Graph) -> list[int]:
    remaining = set(range(g.vertex_count))
    deg = {v: g.degree(v) for v in remaining}
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        order.append(v)
        remaining.remove(v)
        for w in g.adjacency[v]:
            if w in remaining:
                deg[w] -= 1
    return order


def clique_number(g: Graph) -> int:
    """Exact maximum clique size via branch and bound on bitset candidates."""
    n = g.vertex_count
    if n == 0:
        return 0
    adj_bits = [0] * n
    for u, nbrs in enumerate(g.adjacency):
        for v in nbrs:
            adj_bits[u] |= 1 << v
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & adj_bits[v])
            cand &= cand - 1

    order = _degeneracy_order(g)
    later = 0
    for v in reversed(order):
        later |= 1 << v
        expand(1, adj_bits[v] & later)
    return best


def independent_set_lower(g: Graph) -> tuple[int, ...]:
    """Greedy independent set: repeatedly take a minimum-degree vertex.

    Guaranteed size at least ceil(n / (max degree + 1)); for the 6-regular
    bit-adjacency graphs this means at least n/7, and in practice well
    above the n/6 existence bound.
    """
    remaining = set(range(g.vertex_count))
    deg = {v: g.degree(v) for v in remaining}
    chosen: list[int] = []
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        chosen.append(v)
        dropped = {v} | (set(g.adjacency[v]) & remaining)
        remaining -= dropped
        for w in dropped:
            for x in g.adjacency[w]:
                if x in remaining:
                    deg[x] -= 1
    return tuple(sorted(chosen))


def dimension_bound_check(code: LinearCode, s: Sequence[int]) -> bool:
    """Verify k <= n - |s| and k <= floor(5n/6) for an independent bit set s.

    Bits that pairwise share no check have linearly independent H-columns,
    so any such set caps the dimension.  Raises ValueError when s is not
    independent in the bit-adjacency sense.
    """
    cols = code.H.column_bits()
    s = list(s)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if cols[s[i]] & cols[s[j]]:
                raise ValueError(
                    f"bits {s[i]} and {s[j]} share a check, set is not independent"
                )
    return code.k <= code.n - len(s) and code.k <= (5 * code.n) // 6


def spectrum(a: np.ndarray, tol: float = 1e-10, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.

    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol``;
    a symmetric input that fails to converge within ``max_sweeps`` raises
    RuntimeError (unconditional convergence makes that unreachable in
    practice).
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    a = a.copy()
    n = a.shape[0]
    if n < 2:
        return np.sort(np.diag(a))[::-1]
    skip = 1e-14 * max(1.0, float(np.abs(a).max()))
    off_diag = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # sum the off-diagonal squares directly; subtracting the diagonal
        # from the full Frobenius norm cancels catastrophically once the
        # matrix is nearly diagonal and can leave off stuck above tol
        off = math.sqrt(float((a[off_diag] ** 2).sum()))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.sort(np.diag(a))[::-1]


def tanner_bounds(n: int, lambda2: float) -> tuple[float, float]:
    """The two eigenvalue distance bounds for a (3,3)-regular Tanner graph.

    With mu2 = lambda2**2 they read n(6 - mu2)/(9 - mu2) and
    2n(7 - mu2)/(3(9 - mu2)).  Only lambda2 < 3 (connected, non-degenerate)
    is accepted.
    """
    if lambda2 >= 3:
        raise ValueError("second eigenvalue must be below the degree 3")
    mu2 = lambda2 * lambda2
    d1 = n * (6.0 - mu2) / (9.0 - mu2)
    d2 = 2.0 * n * (7.0 - mu2) / (3.0 * (9.0 - mu2))
    return d1, d2


def piecewise_distance_bound(n: int, lambda2: float) -> float:
    """Coarser spectral bound: 2n/5, 2n/9 or 4 by range of lambda2."""
    if lambda2 <= 2.0:
        return 2.0 * n / 5.0
    if lambda2 <= math.sqrt(6.0):
        return 2.0 * n / 9.0
    return 4.0


def predict_trivial(g: Graph) -> bool:
    """Power-of-two vertex count forces the [n, 0, n] code."""
    v = g.vertex_count
    return v > 0 and (v & (v - 1)) == 0


@dataclass(frozen=True)
class BoundsReport:
    """All mechanically checkable bounds for one catalog code."""

    lambda2: float
    mu2: float
    d1: float
    d2: float
    tanner_bound: float
    piecewise_bound: float
    dim_bound: float
    clique_number: int
    independent_set_size: int
    predicted_trivial: bool

    def to_dict(self) -> dict:
        return {
            "lambda2": self.lambda2,
            "mu2": self.mu2,
            "d1": self.d1,
            "d2": self.d2,
            "tanner_bound": self.tanner_bound,
            "piecewise_bound": self.piecewise_bound,
            "dim_bound": self.dim_bound,
            "clique_number": self.clique_number,
            "independent_set_size": self.independent_set_size,
            "predicted_trivial": self.predicted_trivial,
        }


def compute_bounds(g: Graph, code: LinearCode) -> BoundsReport:
    """Assemble the full BoundsReport for a catalog graph and its code."""
    eigs = spectrum(adjacency_array(g))
    lam2 = float(eigs[1])
    mu2 = lam2 * lam2
    d1, d2 = tanner_bounds(code.n, lam2)
    gamma = bit_node_graph(code)
    ind_set = independent_set_lower(gamma.graph)
    return BoundsReport(
        lambda2=lam2,
        mu2=mu2,
        d1=d1,
        d2=d2,
        tanner_bound=max(d1, d2),
        piecewise_bound=piecewise_distance_bound(code.n, lam2),
        dim_bound=5.0 * code.n / 6.0,
        clique_number=clique_number(gamma.graph),
        independent_set_size=len(ind_set),
        predicted_trivial=predict_trivial(g),
    )
