# #############################################################################
# basic.py
# ========
# #############################################################################

r"""
Trace-bucketing biclique partitioners.

All partitioners of this module split the vertex set into consecutive parts :math:`P_0,P_1,\ldots` of size at most
:math:`r` and, for every part :math:`P_i`, group the vertices :math:`v` in charge of :math:`P_i` by their *trace*
:math:`S=N(v)\cap P_i`. Every group :math:`A(S)` yields the biclique :math:`(S, A(S))`; edges inside a part are emitted
as single-edge bicliques.
"""

import math
import warnings
from functools import partial
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from pybiclique.core.graph import Digraph, Graph
from pybiclique.core.partition import BicliquePartition, PartitionBuilder
from pybiclique.core.partitioner import GraphPartitioner
from pybiclique.core.tournament import Tournament, make_almost_regular
from pybiclique.util.misc import ceil_div, iroot, lglg

MAX_PART_SIZE = 20

Block = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def ep_part_size(n: int) -> int:
    r"""
    Part size :math:`r=\lfloor \lg n-2\lg\lg n\rfloor` of the optimal partitioner, clamped to at most 20.

    The value may be smaller than 1 for small :math:`n`, in which case partitioners fall back to the trivial partition.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.basic import ep_part_size
       >>> [ep_part_size(n) for n in (16, 128, 4096, 2 ** 16)]
       [0, 1, 4, 8]
    """
    if n < 2:
        return 0
    return min(MAX_PART_SIZE, int(math.floor(math.log2(n) - 2 * lglg(n))))


def ep_load_bound(n: int, r: int) -> int:
    r"""
    Hard per-vertex load bound :math:`(r-1)+2^r+\lceil\lceil n/r\rceil/2\rceil+1` of
    :py:class:`~pybiclique.partition.basic.TracePartitioner` with parts of size :math:`r`.

    The three terms account for single-edge bicliques inside the part of :math:`v`, the bicliques whose trace contains
    :math:`v`, and the parts :math:`v` is in charge of (its part's outdegree in the tournament).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.basic import ep_load_bound
       >>> ep_load_bound(4096, 4)
       532
    """
    return (r - 1) + 2 ** r + ceil_div(ceil_div(n, r), 2) + 1


def part_pairs(indptr: np.ndarray, indices: np.ndarray, start: int, stop: int) -> Tuple[np.ndarray, np.ndarray]:
    r"""
    Adjacencies of the part :math:`\{start,\ldots,stop-1\}`.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        Arrays ``(pos, v)``: ``v`` is a neighbour of vertex ``start + pos``. Pairs are sorted by ``pos`` then ``v``.
    """
    counts = np.diff(indptr[start:stop + 1])
    pos = np.repeat(np.arange(stop - start, dtype=np.int64), counts)
    return pos, indices[indptr[start]:indptr[stop]].astype(np.int64)


def group_by_vertex(pos: np.ndarray, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    r"""
    Sort pairs by vertex then position.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray, np.ndarray]
        ``(vertices, indptr, positions)``: the distinct vertices in increasing order and, for each of them, its sorted
        positions ``positions[indptr[j]:indptr[j+1]]``.
    """
    order = np.lexsort((pos, v))
    v, pos = v[order], pos[order]
    starts = np.flatnonzero(np.r_[True, v[1:] != v[:-1]]) if v.size else np.zeros(0, dtype=np.int64)
    indptr = np.r_[starts, v.size].astype(np.int64)
    return v[starts], indptr, pos


def _bits_block(start: int, masks: np.ndarray, size: int) -> Tuple[np.ndarray, np.ndarray]:
    bits = ((masks[:, None] >> np.arange(size, dtype=np.int64)) & 1).astype(bool)
    _, cols = np.nonzero(bits)
    return bits.sum(axis=1).astype(np.int64), start + cols.astype(np.int64)


def _mask_groups(pos: np.ndarray, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    # trace of every vertex as a bit mask over the positions of the part, then vertices grouped by mask
    verts, indptr, pos = group_by_vertex(pos, v)
    masks = np.add.reduceat(np.left_shift(np.int64(1), pos), indptr[:-1]) if verts.size else np.zeros(0, np.int64)
    order = np.lexsort((verts, masks))
    masks, verts = masks[order], verts[order]
    starts = np.flatnonzero(np.r_[True, masks[1:] != masks[:-1]]) if masks.size else np.zeros(0, dtype=np.int64)
    counts = np.diff(np.r_[starts, masks.size]).astype(np.int64)
    return masks[starts], counts, verts


def within_part_block(start: int, stop: int, pos: np.ndarray, v: np.ndarray) -> Optional[Block]:
    r"""
    Single-edge bicliques :math:`(\{u\},\{w\})` for the edges :math:`u<w` inside a part, in lexicographic order.
    """
    inside = (v >= start) & (v < stop) & (v > start + pos)
    if not inside.any():
        return None
    ones = np.ones(int(inside.sum()), dtype=np.int64)
    return ones, start + pos[inside], ones.copy(), v[inside]


def _ep_part(g: Graph, T: Tournament, r: int, i: int) -> List[Block]:
    start, stop = i * r, min(g.n, (i + 1) * r)
    pos, v = part_pairs(g.indptr, g.indices, start, stop)
    blocks = []
    charged = np.asarray(T.beats(v // r, i), dtype=bool)
    if charged.any():
        masks, counts, verts = _mask_groups(pos[charged], v[charged])
        left_counts, left_ids = _bits_block(start, masks, stop - start)
        blocks.append((left_counts, left_ids, counts, verts))
    blocks.append(within_part_block(start, stop, pos, v))
    return blocks


def partition_trivial(g: Graph) -> BicliquePartition:
    r"""
    Trivial partition with one biclique :math:`(\{u\},\{v\})` per edge :math:`u<v` (per arc for digraphs), in
    lexicographic order.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.partition.basic import partition_trivial
       >>> list(partition_trivial(Graph.from_edges(3, [(1, 2), (0, 1)])))
       [Biclique(left=[0], right=[1]), Biclique(left=[1], right=[2])]
    """
    directed = isinstance(g, Digraph)
    edges = g.arcs() if directed else g.edges()
    builder = PartitionBuilder(g.n, directed=directed)
    builder.add_edges(edges[:, 0], edges[:, 1])
    return builder.build()


class TrivialPartitioner(GraphPartitioner):
    r"""
    Partitioner wrapping :py:func:`~pybiclique.partition.basic.partition_trivial`, e.g. as the base of a hypergraph
    partitioner. Graphs and digraphs are both accepted.
    """

    def __call__(self, g: Union[Graph, Digraph]) -> BicliquePartition:
        return partition_trivial(g)


class TracePartitioner(GraphPartitioner):
    r"""
    Optimal :math:`O(n^2)` biclique partitioner.

    This class is also accessible via the alias ``EP()``.

    Notes
    -----
    The vertex set is split into :math:`\lceil n/r\rceil` consecutive parts of size :math:`r=\lfloor\lg n-2\lg\lg
    n\rfloor`, and an almost-regular tournament :math:`R` is set up between the parts. For each part :math:`P_i`, every
    vertex :math:`v` with :math:`R(g(v),i)` (where :math:`g(v)` is the part of :math:`v`) is bucketed by its trace
    :math:`S=N(v)\cap P_i`; each nonempty bucket :math:`A(S)` yields the biclique :math:`(S,A(S))`. Edges within a part
    are emitted as single-edge bicliques.

    Every cross-part edge :math:`\{u,v\}` is covered exactly once: by the part of :math:`v` if :math:`R(g(u),g(v))`
    and by the part of :math:`u` otherwise. The resulting partition has weight :math:`(\frac{1}{2}+o(1))n^2/\lg n`
    and every vertex load is at most :math:`(r-1)+2^r+\lceil\lceil n/r\rceil/2\rceil`
    (see :py:func:`~pybiclique.partition.basic.ep_load_bound`).

    Buckets are emitted part by part: traces in increasing bit-mask order (bit :math:`j` standing for the
    :math:`j`-th vertex of the part), then the edges inside the part in lexicographic order.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.partition import verify_partition
       >>> from pybiclique.partition.basic import TracePartitioner, ep_load_bound
       >>> from pybiclique.util.generators import gen_gnp
       >>> g = gen_gnp(4096, 0.5, seed=0)
       >>> p = TracePartitioner()(g)
       >>> verify_partition(g, p).ok
       True
       >>> p.max_load() <= ep_load_bound(4096, 4)
       True
       >>> len(p) <= 1024 * (2 ** 4 + 4 ** 2)
       True
       >>> len(TracePartitioner()(Graph.empty(100)))
       0
    """

    def __init__(self, part_size: Optional[int] = None, tournament: Callable[[int], Tournament] = make_almost_regular,
                 n_jobs: int = 1, joblib_backend: str = 'loky', verbose: Optional[int] = None, min_part_size: int = 0):
        r"""
        Parameters
        ----------
        part_size: Optional[int]
            Part size :math:`r` (clamped to :math:`[1,20]`). Defaults to
            :py:func:`~pybiclique.partition.basic.ep_part_size`.
        tournament: Callable[[int], Tournament]
            Factory of the tournament on the parts.
        n_jobs: int
            Number of workers for the per-part loop.
        joblib_backend: str
            Joblib backend.
        verbose: Optional[int]
            Print a progress line every ``verbose`` parts.
        min_part_size: int
            Lower bound on the default part size. With 1, graphs of at least 4 vertices on which
            :py:func:`~pybiclique.partition.basic.ep_part_size` is below 1 are partitioned with parts of one vertex
            (weight about :math:`n+m`) instead of one biclique per edge (weight :math:`2m`).
        """
        super(TracePartitioner, self).__init__(n_jobs=n_jobs, joblib_backend=joblib_backend, verbose=verbose)
        if part_size is not None and part_size < 1:
            raise ValueError(f'Part size must be at least 1, got {part_size}.')
        self.part_size = part_size
        self.min_part_size = min_part_size
        self.tournament = tournament

    def part_size_for(self, n: int) -> int:
        r"""
        Part size used on a graph with ``n`` vertices (smaller than 1 when the trivial partition is used).
        """
        if self.part_size is not None:
            return max(1, min(MAX_PART_SIZE, self.part_size, n))
        return min(max(ep_part_size(n), self.min_part_size), n)

    def __call__(self, g: Graph) -> BicliquePartition:
        if not isinstance(g, Graph):
            raise TypeError(f'Input must be of type {Graph}, got {type(g).__name__}.')
        if g.m == 0:
            return BicliquePartition.empty(g.n)
        r = self.part_size_for(g.n)
        if r < 1 or (self.part_size is None and g.n < 4):
            warnings.warn(f'Part size {r} < 1 for n={g.n}: using the trivial per-edge partition.', RuntimeWarning)
            return partition_trivial(g)
        count = ceil_div(g.n, r)
        T = self.tournament(count)
        builder = PartitionBuilder(g.n)
        self.map_parts(partial(_ep_part, g, T, r), count, builder)
        return builder.build()


EP = TracePartitioner


def partition_ep(g: Graph, part_size: Optional[int] = None) -> BicliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.basic.TracePartitioner`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.partition.basic import partition_ep
       >>> p = partition_ep(Graph.from_edges(2, [(0, 1)]))
       >>> list(p), p.weight()
       ([Biclique(left=[0], right=[1])], 2)
    """
    return TracePartitioner(part_size=part_size)(g)


def _directed_part(g: Digraph, r: int, i: int) -> List[Block]:
    start, stop = i * r, min(g.n, (i + 1) * r)
    # (pos, v) with arc v -> start + pos
    pos, v = part_pairs(g.in_indptr, g.in_indices, start, stop)
    if v.size == 0:
        return []
    masks, counts, verts = _mask_groups(pos, v)
    right_counts, right_ids = _bits_block(start, masks, stop - start)
    return [(counts, verts, right_counts, right_ids)]


class DirectedTracePartitioner(GraphPartitioner):
    r"""
    Directed biclique partitioner.

    This class is also accessible via the alias ``DEP()``.

    Notes
    -----
    Parts are as in :py:class:`~pybiclique.partition.basic.TracePartitioner`, but no tournament is needed: for every
    part :math:`P_i`, *all* vertices :math:`v` are bucketed by their out-trace :math:`S=N^+(v)\cap P_i`, and each bucket
    yields the directed biclique :math:`A(S)\to S` (left side: tails, right side: heads). Sides are disjoint since
    there are no self-loops. Every vertex has load at most :math:`\lceil n/r\rceil+2^r`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Digraph
       >>> from pybiclique.core.partition import verify_partition
       >>> from pybiclique.partition.basic import DirectedTracePartitioner
       >>> list(DirectedTracePartitioner()(Digraph.from_arcs(2, [(0, 1)])))
       [Biclique(left=[0], right=[1])]
       >>> g = Digraph.from_arcs(3, [(u, v) for u in range(3) for v in range(3) if u != v])
       >>> verify_partition(g, DirectedTracePartitioner(part_size=2)(g)).ok
       True
       >>> len(DirectedTracePartitioner()(Digraph.from_arcs(5, [])))
       0
    """

    def __init__(self, part_size: Optional[int] = None, n_jobs: int = 1, joblib_backend: str = 'loky',
                 verbose: Optional[int] = None):
        super(DirectedTracePartitioner, self).__init__(n_jobs=n_jobs, joblib_backend=joblib_backend, verbose=verbose)
        self.part_size = part_size

    def __call__(self, g: Digraph) -> BicliquePartition:
        if not isinstance(g, Digraph):
            raise TypeError(f'Input must be of type {Digraph}, got {type(g).__name__}.')
        if g.m == 0:
            return BicliquePartition.empty(g.n, directed=True)
        if self.part_size is not None:
            r = max(1, min(MAX_PART_SIZE, self.part_size, g.n))
        else:
            r = min(ep_part_size(g.n), g.n)
        if r < 1:
            warnings.warn(f'Part size {r} < 1 for n={g.n}: using the trivial per-arc partition.', RuntimeWarning)
            return partition_trivial(g)
        builder = PartitionBuilder(g.n, directed=True)
        self.map_parts(partial(_directed_part, g, r), ceil_div(g.n, r), builder)
        return builder.build()


DEP = DirectedTracePartitioner


def partition_ep_directed(g: Digraph, part_size: Optional[int] = None) -> BicliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.basic.DirectedTracePartitioner`.
    """
    return DirectedTracePartitioner(part_size=part_size)(g)


def trace_groups(pos: np.ndarray, v: np.ndarray, size: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    r"""
    Group vertices by their trace on a part of arbitrary size (traces compared as packed bit rows).

    Parameters
    ----------
    pos, v: np.ndarray
        Pairs ``(pos, v)`` meaning that ``v`` is adjacent to position ``pos`` of the part.
    size: int
        Size of the part.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray, np.ndarray]
        ``(traces, counts, vertices)``: a boolean matrix with one distinct trace per row, the number of vertices sharing
        each trace, and these vertices (grouped by trace, increasing within a group).
    """
    verts, indptr, pos = group_by_vertex(pos, v)
    if verts.size == 0:
        return np.zeros((0, size), dtype=bool), np.zeros(0, dtype=np.int64), verts
    rows = np.repeat(np.arange(verts.size), np.diff(indptr))
    matrix = np.zeros((verts.size, size), dtype=bool)
    matrix[rows, pos] = True
    packed = np.packbits(matrix, axis=1)
    unique, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    order = np.lexsort((verts, inverse))
    traces = np.unpackbits(unique, axis=1, count=size).astype(bool)
    return traces, np.bincount(inverse, minlength=unique.shape[0]).astype(np.int64), verts[order]


def _shatter_part(g: Graph, T: Tournament, r: int, i: int) -> List[Block]:
    start, stop = i * r, min(g.n, (i + 1) * r)
    pos, v = part_pairs(g.indptr, g.indices, start, stop)
    blocks = []
    charged = np.asarray(T.beats(v // r, i), dtype=bool)
    if charged.any():
        traces, counts, verts = trace_groups(pos[charged], v[charged], stop - start)
        _, cols = np.nonzero(traces)
        blocks.append((traces.sum(axis=1).astype(np.int64), start + cols.astype(np.int64), counts, verts))
    blocks.append(within_part_block(start, stop, pos, v))
    return blocks


def shattering_part_size(n: int, d: int) -> int:
    r"""
    Part size :math:`r=\lfloor n^{1/(d+1)}\rfloor` for graphs whose shatter function is :math:`O(z^d)`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.basic import shattering_part_size
       >>> shattering_part_size(1024, 2)
       10
    """
    return iroot(n, d + 1)


class ShatterPartitioner(GraphPartitioner):
    r"""
    Biclique partitioner for graphs with a polynomially bounded shatter function.

    This class is also accessible via the alias ``SP()``.

    Notes
    -----
    Same construction as :py:class:`~pybiclique.partition.basic.TracePartitioner` with parts of size
    :math:`r=\lfloor n^{1/(d+1)}\rfloor`. Since :math:`2^r` bit masks are no longer affordable, traces are compared as
    packed bit rows. A vertex has load at most :math:`r+\tau+\lceil n/r\rceil`, where :math:`\tau` is the largest
    number of distinct traces on a part; if :math:`\pi_G(z)\leq cz^d`, then :math:`\tau\leq cr^d` and the maximum load
    is :math:`O(n^{1-1/(d+1)})`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.partition import verify_partition
       >>> from pybiclique.partition.basic import ShatterPartitioner
       >>> from pybiclique.util.generators import gen_interval
       >>> g = gen_interval(1024, seed=3)
       >>> p = ShatterPartitioner(d=2)(g)
       >>> verify_partition(g, p).ok
       True
       >>> p.max_load() <= 12 * 1024 ** (2 / 3)
       True
       >>> len(ShatterPartitioner(d=2)(Graph.empty(10)))
       0
    """

    def __init__(self, d: int, tournament: Callable[[int], Tournament] = make_almost_regular, n_jobs: int = 1,
                 joblib_backend: str = 'loky', verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        d: int
            Degree of the polynomial bounding the shatter function (:math:`d\geq 1`).
        tournament: Callable[[int], Tournament]
            Factory of the tournament on the parts.
        n_jobs: int
            Number of workers for the per-part loop.
        joblib_backend: str
            Joblib backend.
        verbose: Optional[int]
            Print a progress line every ``verbose`` parts.
        """
        super(ShatterPartitioner, self).__init__(n_jobs=n_jobs, joblib_backend=joblib_backend, verbose=verbose)
        if d < 1:
            raise ValueError(f'Shattering exponent d must be at least 1, got {d}.')
        self.d = d
        self.tournament = tournament

    def __call__(self, g: Graph) -> BicliquePartition:
        if not isinstance(g, Graph):
            raise TypeError(f'Input must be of type {Graph}, got {type(g).__name__}.')
        if g.m == 0:
            return BicliquePartition.empty(g.n)
        r = max(1, shattering_part_size(g.n, self.d))
        count = ceil_div(g.n, r)
        T = self.tournament(count)
        builder = PartitionBuilder(g.n)
        self.map_parts(partial(_shatter_part, g, T, r), count, builder)
        return builder.build()


SP = ShatterPartitioner


def partition_shattering(g: Graph, d: int) -> BicliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.basic.ShatterPartitioner`.
    """
    return ShatterPartitioner(d=d)(g)


def trace_counts(g: Graph, part_size: int, tournament: Callable[[int], Tournament] = make_almost_regular) \
        -> np.ndarray:
    r"""
    Number of distinct nonempty traces of the vertices in charge of each part.

    This is the middle term of the load bound of :py:class:`~pybiclique.partition.basic.ShatterPartitioner`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.partition.basic import trace_counts
       >>> g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
       >>> trace_counts(g, 2).tolist()
       [1, 0]
    """
    r = max(1, part_size)
    count = ceil_div(g.n, r)
    T = tournament(count)
    out = np.zeros(count, dtype=np.int64)
    for i in range(count):
        start, stop = i * r, min(g.n, (i + 1) * r)
        pos, v = part_pairs(g.indptr, g.indices, start, stop)
        charged = np.asarray(T.beats(v // r, i), dtype=bool)
        out[i] = trace_groups(pos[charged], v[charged], stop - start)[0].shape[0]
    return out
