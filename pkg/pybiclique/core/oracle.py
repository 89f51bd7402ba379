# #############################################################################
# oracle.py
# =========
# #############################################################################

r"""
Brute-force reference implementations.

These functions work directly on the adjacency structure of the original graph, in quadratic or exponential time. They
are the ground truth against which the compressed queries, the densest subgraph approximation, the biclique finders
and the entropy slicer are checked.
"""

import math
from fractions import Fraction
from typing import Iterable, List, Tuple

import numpy as np

from pybiclique.core.graph import Graph
from pybiclique.util.misc import as_vertex_set

MAX_BRUTE_FORCE_N = 20


def brute_is_independent(g: Graph, S: Iterable[int]) -> bool:
    r"""
    Check that no two vertices of ``S`` are adjacent.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.oracle import brute_is_independent
       >>> path = Graph.from_edges(3, [(0, 1), (1, 2)])
       >>> brute_is_independent(path, [0, 2]), brute_is_independent(path, [0, 1])
       (True, False)
    """
    S = as_vertex_set(S, g.n, 'S')
    return g.adjacency_matrix()[S][:, S].nnz == 0


def brute_cut(g: Graph, S: Iterable[int], T: Iterable[int]) -> int:
    r"""
    Number of edges with one endpoint in ``S`` and the other in ``T`` (``S`` and ``T`` disjoint).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.oracle import brute_cut
       >>> brute_cut(Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]), [0], [2, 3])
       2
    """
    S = as_vertex_set(S, g.n, 'S')
    T = as_vertex_set(T, g.n, 'T')
    if np.intersect1d(S, T).size > 0:
        raise ValueError('Cut sides S and T must be disjoint.')
    return int(g.adjacency_matrix()[S][:, T].nnz)


def brute_densest(g: Graph) -> Tuple[Fraction, np.ndarray]:
    r"""
    Exact densest subgraph by enumeration of all :math:`2^n` vertex subsets.

    Edge counts of all subsets are computed by dynamic programming over the highest vertex of each subset, in
    :math:`O(2^n n)` time and memory.

    Parameters
    ----------
    g: :py:class:`~pybiclique.core.graph.Graph`
        Graph with at most 20 vertices.

    Returns
    -------
    Tuple[Fraction, np.ndarray]
        Optimal degree density :math:`\delta^\star=\max_S |E(G[S])|/|S|` and the lexicographically first (smallest
        bit mask) optimal subset. ``(0, [])`` for graphs without vertices.

    Raises
    ------
    ValueError
        If ``g`` has more than 20 vertices.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.oracle import brute_densest
       >>> star = Graph.from_edges(10, [(0, v) for v in range(1, 10)])
       >>> brute_densest(star)[0]
       Fraction(9, 10)
       >>> density, subset = brute_densest(Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]))
       >>> density, subset.tolist()
       (Fraction(1, 1), [0, 1, 2])
    """
    n = g.n
    if n > MAX_BRUTE_FORCE_N:
        raise ValueError(f'Brute-force densest subgraph is limited to n <= {MAX_BRUTE_FORCE_N}, got n={n}.')
    if n == 0:
        return Fraction(0), np.zeros(0, dtype=np.int64)
    size = 1 << n
    popcount = np.zeros(size, dtype=np.int64)
    edges = np.zeros(size, dtype=np.int64)
    adjacency = np.zeros(n, dtype=np.int64)
    for v in range(n):
        adjacency[v] = int(np.sum(np.left_shift(np.int64(1), g.neighbors(v).astype(np.int64))))
    for b in range(n):
        lower = np.arange(1 << b, dtype=np.int64)
        popcount[(1 << b):(2 << b)] = popcount[:(1 << b)] + 1
        edges[(1 << b):(2 << b)] = edges[:(1 << b)] + popcount[lower & adjacency[b]]
    ratio = edges[1:] / popcount[1:]
    best = ratio.max()
    candidates = np.flatnonzero(ratio >= best - 1e-9) + 1
    density, mask = max((Fraction(int(edges[c]), int(popcount[c])), -int(c)) for c in candidates)
    mask = -mask
    subset = np.flatnonzero((mask >> np.arange(n)) & 1).astype(np.int64)
    return density, subset


def is_complete_bipartite(g: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    r"""
    Check that ``A`` and ``B`` are nonempty, disjoint and that every pair of :math:`A\times B` is an edge of ``g``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.oracle import is_complete_bipartite
       >>> k23 = Graph.from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
       >>> is_complete_bipartite(k23, [0, 1], [2, 3, 4]), is_complete_bipartite(k23, [0, 2], [3])
       (True, False)
    """
    A = as_vertex_set(A, g.n, 'A')
    B = as_vertex_set(B, g.n, 'B')
    if A.size == 0 or B.size == 0 or np.intersect1d(A, B).size > 0:
        return False
    return int(g.adjacency_matrix()[A][:, B].nnz) == A.size * B.size


def reference_slices(positions: Iterable[int], part_size: int, threshold: Fraction) -> List[Tuple[int, int]]:
    r"""
    Quadratic-time entropy slicer.

    Starting from position 0, every window :math:`[a,b]` is extended to the largest :math:`b<` ``part_size`` such that
    :math:`\binom{b-a+1}{y}<T`, where :math:`y` is the number of ``positions`` inside the window, by trying every
    candidate end and recounting from scratch.

    Parameters
    ----------
    positions: Iterable[int]
        Sorted neighbour positions within the part.
    part_size: int
        Size of the part.
    threshold: Fraction
        Threshold :math:`T\geq 2`.

    Returns
    -------
    List[Tuple[int, int]]
        All windows ``(a, b)`` (0-based, inclusive), tiling ``[0, part_size)``.

    Examples
    --------

    .. doctest::

       >>> from fractions import Fraction
       >>> from pybiclique.core.oracle import reference_slices
       >>> reference_slices([], 6, Fraction(2))
       [(0, 5)]
       >>> reference_slices([1, 2, 4], 6, Fraction(2))
       [(0, 0), (1, 2), (3, 3), (4, 4), (5, 5)]
    """
    positions = sorted(int(q) for q in positions)
    windows = []
    a = 0
    while a < part_size:
        best = a
        for b in range(a, part_size):
            y = sum(1 for q in positions if a <= q <= b)
            if math.comb(b - a + 1, y) < threshold:
                best = b
        windows.append((a, best))
        a = best + 1
    return windows
