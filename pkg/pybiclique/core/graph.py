# #############################################################################
# graph.py
# ========
# #############################################################################

r"""
Graph, digraph and uniform hypergraph containers.

Graphs are stored in compressed sparse row (CSR) form: the neighbours of vertex :math:`v` are
``indices[indptr[v]:indptr[v+1]]``, sorted in increasing order. Containers are immutable after construction.
"""

from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np
import scipy.sparse as sparse

from pybiclique.util.misc import as_vertex_set, check_natural


def _edge_array(edges: Union[np.ndarray, Iterable], width: int) -> np.ndarray:
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f'Edges must be given as an array of shape (m, {width}), got shape {arr.shape}.')
    return arr


def _index_dtype(n: int) -> type:
    return np.int32 if n < 2 ** 31 else np.int64


def _csr(n: int, rows: np.ndarray, cols: np.ndarray) -> sparse.csr_matrix:
    adjacency = sparse.coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n)).tocsr()
    adjacency.sort_indices()
    return adjacency


class Graph:
    r"""
    Simple undirected graph on the vertex set :math:`\{0,\ldots,n-1\}`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> g = Graph.from_edges(4, [(0, 1), (2, 1), (1, 3)])
       >>> g.n, g.m
       (4, 3)
       >>> g.neighbors(1).tolist()
       [0, 2, 3]
       >>> g.edges().tolist()
       [[0, 1], [1, 2], [1, 3]]
       >>> g.edge_density()
       Fraction(1, 2)
       >>> Graph.from_edges(3, [(0, 1), (1, 0)])
       Traceback (most recent call last):
       ...
       ValueError: Duplicate edge (0, 1).

    Notes
    -----
    Self-loops and duplicate edges are rejected rather than silently removed, so that edge counts (and hence edge
    densities) are always exact.
    """

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        r"""
        Parameters
        ----------
        n: int
            Number of vertices.
        indptr: np.ndarray
            CSR row pointers (length ``n+1``).
        indices: np.ndarray
            CSR column indices, sorted within each row and symmetric.

        Notes
        -----
        Use :py:meth:`~pybiclique.core.graph.Graph.from_edges` to build a graph from an edge list; this constructor
        trusts its inputs.
        """
        self.n = check_natural(n, 'n')
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=_index_dtype(n))
        self.m = int(self.indices.size // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Union[np.ndarray, Iterable]) -> 'Graph':
        r"""
        Build a graph from an edge list.

        Parameters
        ----------
        n: int
            Number of vertices.
        edges: Union[np.ndarray, Iterable]
            Unordered pairs ``(u, v)``.

        Returns
        -------
        :py:class:`~pybiclique.core.graph.Graph`
            The graph.

        Raises
        ------
        ValueError
            On out-of-range endpoints, self-loops or duplicate edges.
        """
        n = check_natural(n, 'n')
        arr = _edge_array(edges, 2)
        if arr.size > 0:
            if arr.min() < 0 or arr.max() >= n:
                bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
                raise ValueError(f'Edge ({bad[0]}, {bad[1]}) has an endpoint outside of [0, {n}).')
            loops = arr[:, 0] == arr[:, 1]
            if loops.any():
                v = arr[loops][0, 0]
                raise ValueError(f'Self-loop at vertex {v}.')
        u = np.minimum(arr[:, 0], arr[:, 1])
        v = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.sort(u * n + v)
        duplicated = np.flatnonzero(keys[1:] == keys[:-1])
        if duplicated.size > 0:
            key = keys[duplicated[0]]
            raise ValueError(f'Duplicate edge ({key // n}, {key % n}).')
        adjacency = _csr(n, np.concatenate([u, v]), np.concatenate([v, u]))
        return cls(n, adjacency.indptr, adjacency.indices)

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        r"""
        Edgeless graph on ``n`` vertices.
        """
        return cls(n, np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))

    @property
    def degrees(self) -> np.ndarray:
        r"""
        Vertex degrees.
        """
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        r"""
        Sorted neighbours of ``v`` (a read-only view).
        """
        if not 0 <= v < self.n:
            raise ValueError(f'Vertex {v} is outside of [0, {self.n}).')
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edges(self) -> np.ndarray:
        r"""
        Edges as an array of shape ``(m, 2)`` with ``u < v``, in lexicographic order.
        """
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        upper = self.indices > src
        return np.stack([src[upper], self.indices[upper]], axis=1)

    def edge_keys(self) -> np.ndarray:
        r"""
        Sorted integer keys :math:`u\,n+v` (:math:`u<v`) of the edges, used for membership tests.
        """
        e = self.edges()
        return e[:, 0] * self.n + e[:, 1]

    def has_edge(self, u: int, v: int) -> bool:
        r"""
        Adjacency test by binary search in the sorted neighbour list of ``u``.

        Examples
        --------

        .. doctest::

           >>> from pybiclique.core.graph import Graph
           >>> g = Graph.from_edges(3, [(0, 2)])
           >>> g.has_edge(2, 0), g.has_edge(0, 1)
           (True, False)
        """
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return bool(pos < row.size and row[pos] == v)

    def adjacency_matrix(self) -> sparse.csr_matrix:
        r"""
        Boolean adjacency matrix as a :py:class:`scipy.sparse.csr_matrix`.
        """
        data = np.ones(self.indices.size, dtype=bool)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def edge_density(self) -> Fraction:
        r"""
        Edge density :math:`\gamma=m/\binom{n}{2}` as an exact rational. See
        :py:func:`~pybiclique.core.graph.edge_density`.
        """
        return edge_density(self)

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        r"""
        Number of edges of the subgraph induced by ``vertices``.

        Examples
        --------

        .. doctest::

           >>> from pybiclique.core.graph import Graph
           >>> g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
           >>> g.induced_edge_count([0, 1, 2])
           3
        """
        members = np.zeros(self.n, dtype=bool)
        members[as_vertex_set(vertices, self.n)] = True
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        inside = members[src] & members[self.indices]
        return int(inside.sum() // 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n) and np.array_equal(self.indptr, other.indptr) and np.array_equal(
            self.indices, other.indices)

    def __repr__(self) -> str:
        return f'Graph(n={self.n}, m={self.m})'


class Digraph:
    r"""
    Simple directed graph (no self-loops, no parallel arcs) on :math:`\{0,\ldots,n-1\}`.

    Both the out- and in-adjacencies are stored in CSR form.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Digraph
       >>> g = Digraph.from_arcs(3, [(0, 1), (1, 0), (2, 0)])
       >>> g.m, g.successors(0).tolist(), g.predecessors(0).tolist()
       (3, [1], [1, 2])
       >>> Digraph.from_arcs(2, [(1, 1)])
       Traceback (most recent call last):
       ...
       ValueError: Self-loop at vertex 1.
    """

    def __init__(self, n: int, out_indptr: np.ndarray, out_indices: np.ndarray, in_indptr: np.ndarray,
                 in_indices: np.ndarray):
        self.n = check_natural(n, 'n')
        self.out_indptr = np.asarray(out_indptr, dtype=np.int64)
        self.out_indices = np.asarray(out_indices, dtype=_index_dtype(n))
        self.in_indptr = np.asarray(in_indptr, dtype=np.int64)
        self.in_indices = np.asarray(in_indices, dtype=_index_dtype(n))
        self.m = int(self.out_indices.size)

    @classmethod
    def from_arcs(cls, n: int, arcs: Union[np.ndarray, Iterable]) -> 'Digraph':
        r"""
        Build a digraph from a list of arcs ``(u, v)`` meaning :math:`u\to v`.

        Raises
        ------
        ValueError
            On out-of-range endpoints, self-loops or duplicate arcs.
        """
        n = check_natural(n, 'n')
        arr = _edge_array(arcs, 2)
        if arr.size > 0:
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError(f'Some arc has an endpoint outside of [0, {n}).')
            loops = arr[:, 0] == arr[:, 1]
            if loops.any():
                raise ValueError(f'Self-loop at vertex {arr[loops][0, 0]}.')
        keys = np.sort(arr[:, 0] * n + arr[:, 1])
        duplicated = np.flatnonzero(keys[1:] == keys[:-1])
        if duplicated.size > 0:
            key = keys[duplicated[0]]
            raise ValueError(f'Duplicate arc ({key // n}, {key % n}).')
        out_adj = _csr(n, arr[:, 0], arr[:, 1])
        in_adj = _csr(n, arr[:, 1], arr[:, 0])
        return cls(n, out_adj.indptr, out_adj.indices, in_adj.indptr, in_adj.indices)

    def successors(self, v: int) -> np.ndarray:
        r"""
        Sorted out-neighbours of ``v``.
        """
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]

    def predecessors(self, v: int) -> np.ndarray:
        r"""
        Sorted in-neighbours of ``v``.
        """
        return self.in_indices[self.in_indptr[v]:self.in_indptr[v + 1]]

    def arcs(self) -> np.ndarray:
        r"""
        Arcs as an array of shape ``(m, 2)`` in lexicographic order.
        """
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.out_indptr))
        return np.stack([src, self.out_indices], axis=1)

    def arc_keys(self) -> np.ndarray:
        r"""
        Sorted integer keys :math:`u\,n+v` of the arcs.
        """
        a = self.arcs()
        return a[:, 0] * self.n + a[:, 1]

    def __repr__(self) -> str:
        return f'Digraph(n={self.n}, m={self.m})'


class Hypergraph:
    r"""
    :math:`d`-uniform hypergraph on :math:`\{0,\ldots,n-1\}`.

    Edges are stored as the rows of an ``(m, d)`` array, each row sorted, rows in lexicographic order.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Hypergraph
       >>> h = Hypergraph.from_edges(4, 3, [(3, 1, 0), (0, 1, 2)])
       >>> h.edges.tolist()
       [[0, 1, 2], [0, 1, 3]]
       >>> Hypergraph.from_edges(4, 3, [(0, 1, 1)])
       Traceback (most recent call last):
       ...
       ValueError: Edge (0, 1, 1) does not have 3 distinct vertices.
    """

    def __init__(self, n: int, d: int, edges: np.ndarray):
        self.n = check_natural(n, 'n')
        self.d = check_natural(d, 'd', minimum=2)
        self.edges = np.asarray(edges, dtype=np.int64).reshape(-1, self.d)
        self.m = int(self.edges.shape[0])

    @classmethod
    def from_edges(cls, n: int, d: int, edges: Union[np.ndarray, Iterable]) -> 'Hypergraph':
        r"""
        Build a :math:`d`-uniform hypergraph from a list of :math:`d`-sets.

        Raises
        ------
        ValueError
            On out-of-range vertices, repeated vertices within an edge or duplicate edges.
        """
        n = check_natural(n, 'n')
        d = check_natural(d, 'd', minimum=2)
        arr = np.sort(_edge_array(edges, d), axis=1)
        if arr.size > 0:
            if arr.min() < 0 or arr.max() >= n:
                raise ValueError(f'Some edge has a vertex outside of [0, {n}).')
            repeated = (arr[:, 1:] == arr[:, :-1]).any(axis=1)
            if repeated.any():
                raise ValueError(f'Edge {tuple(arr[repeated][0].tolist())} does not have {d} distinct vertices.')
        arr = arr[np.lexsort(arr.T[::-1])] if arr.shape[0] > 1 else arr
        if arr.shape[0] > 1:
            same = (arr[1:] == arr[:-1]).all(axis=1)
            if same.any():
                raise ValueError(f'Duplicate edge {tuple(arr[np.flatnonzero(same)[0]].tolist())}.')
        return cls(n, d, arr)

    def edge_keys(self) -> np.ndarray:
        r"""
        Integer keys :math:`\sum_j v_j n^{d-1-j}` of the (sorted) edges.

        Raises
        ------
        ValueError
            If :math:`n^d` does not fit in a signed 64-bit integer.
        """
        return encode_sets(self.edges, self.n)

    def __repr__(self) -> str:
        return f'Hypergraph(n={self.n}, d={self.d}, m={self.m})'


def encode_sets(rows: np.ndarray, n: int) -> np.ndarray:
    r"""
    Encode sorted rows of vertex ids as integers in base ``n``.
    """
    rows = np.asarray(rows, dtype=np.int64)
    d = rows.shape[1] if rows.ndim == 2 else 1
    if max(n, 2) ** d >= 2 ** 63:
        raise ValueError(f'Key space {n}^{d} does not fit in 64 bits.')
    keys = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(d):
        keys = keys * n + rows[:, j]
    return keys


def edge_density(g: Graph) -> Fraction:
    r"""
    Edge density :math:`\gamma := m/\binom{n}{2}` of a graph, as an exact rational.

    Parameters
    ----------
    g: :py:class:`~pybiclique.core.graph.Graph`
        Input graph.

    Returns
    -------
    Fraction
        Edge density in :math:`[0,1]`.

    Raises
    ------
    ValueError
        If :math:`n<2` (degenerate graph).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph, edge_density
       >>> edge_density(Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]))
       Fraction(1, 1)
       >>> edge_density(Graph.empty(10))
       Fraction(0, 1)
       >>> edge_density(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
       Fraction(1, 2)
       >>> edge_density(Graph.empty(1))
       Traceback (most recent call last):
       ...
       ValueError: Edge density of a degenerate graph with n=1 < 2 vertices is undefined.
    """
    if g.n < 2:
        raise ValueError(f'Edge density of a degenerate graph with n={g.n} < 2 vertices is undefined.')
    return Fraction(g.m, g.n * (g.n - 1) // 2)
