# #############################################################################
# finder.py
# =========
# #############################################################################

r"""
Extraction of large balanced bicliques :math:`K_{t,t}`.

Three methods are available:

* :py:func:`~pybiclique.opt.finder.find_from_partition`: any biclique partition of weight :math:`w` contains a member
  whose smaller side has at least :math:`m/w` vertices;
* :py:func:`~pybiclique.opt.finder.find_topdeg`: truncated traces of the vertices on a set :math:`D` of highest-degree
  vertices, then a pigeonhole argument on the most frequent trace;
* :py:func:`~pybiclique.opt.finder.find_sampled`: same, with :math:`D` found by degree estimation on random samples.

Every returned biclique is checked against the original graph.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numba import njit

from pybiclique.core.graph import Graph
from pybiclique.core.oracle import is_complete_bipartite
from pybiclique.core.partition import BicliquePartition
from pybiclique.core.partitioner import GraphPartitioner
from pybiclique.math.entropy import binary_entropy
from pybiclique.partition.basic import TracePartitioner
from pybiclique.util.misc import lglg


class BicliqueVerificationError(AssertionError):
    r"""
    Raised when an extracted biclique is not complete bipartite in the original graph.
    """
    pass


@dataclass
class FoundBiclique:
    r"""
    Complete bipartite subgraph :math:`A\times B` of a graph.

    Attributes
    ----------
    A, B: np.ndarray
        Disjoint sorted vertex sets.
    provenance: str
        Method that produced it: ``'partition'``, ``'topdeg'`` or ``'sampled'``.
    """
    A: np.ndarray
    B: np.ndarray
    provenance: str

    @property
    def t(self) -> int:
        return int(min(self.A.size, self.B.size))

    def verify(self, g: Graph) -> bool:
        return is_complete_bipartite(g, self.A, self.B)

    def checked(self, g: Graph) -> 'FoundBiclique':
        if not self.verify(g):
            raise BicliqueVerificationError(f'{self.provenance} biclique with sides {self.A.tolist()} and '
                                            f'{self.B.tolist()} is not complete bipartite.')
        return self


def find_from_partition(g: Graph, p: BicliquePartition) -> FoundBiclique:
    r"""
    Member of ``p`` maximising :math:`\min(|L|,|R|)` (the first one in case of ties).

    Since :math:`\sum_i |L_i||R_i|=m` and :math:`|L_i||R_i|\leq\min(|L_i|,|R_i|)(|L_i|+|R_i|)`, the smaller side of the
    returned member has at least :math:`m/w` vertices.

    Raises
    ------
    ValueError
        If ``g`` has no edges.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.opt.finder import find_from_partition
       >>> k23 = Graph.from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
       >>> found = find_from_partition(k23, BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4])]))
       >>> found.A.tolist(), found.B.tolist(), found.t
       ([0, 1], [2, 3, 4], 2)
    """
    if g.m == 0:
        raise ValueError('Cannot find a biclique in a graph without edges.')
    smaller = np.minimum(p.part_sizes(0), p.part_sizes(1))
    i = int(np.argmax(smaller))
    member = p[i]
    return FoundBiclique(A=member.left, B=member.right, provenance='partition').checked(g)


def topdeg_epsilon(n: int) -> float:
    r"""
    Error term :math:`\varepsilon=1/\sqrt[3]{\lg n}` (1 for :math:`n\leq 2`).
    """
    return 1. if n <= 2 else 1. / math.log2(n) ** (1. / 3.)


def topdeg_size(n: int, gamma: float, epsilon: float) -> int:
    r"""
    Size :math:`r=\lfloor(\lg n-2\lg\lg n+\lg h_2(\gamma)+\lg\gamma)/h_2((1-\varepsilon)^2\gamma)\rfloor` of the
    top-degree set, clamped to :math:`[1,n]`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.opt.finder import topdeg_epsilon, topdeg_size
       >>> topdeg_size(2 ** 13, 0.5, topdeg_epsilon(2 ** 13))
       7
       >>> topdeg_size(64, 1., 0.5)
       1
    """
    h = binary_entropy(gamma)
    inner = binary_entropy(min(max((1 - epsilon) ** 2 * gamma, 0.), 1.))
    if h == 0 or gamma == 0 or inner == 0:
        return 1
    r = math.floor((math.log2(n) - 2 * lglg(n) + math.log2(h) + math.log2(gamma)) / inner)
    return int(min(max(r, 1), n))


@njit
def _collect_traces(indptr, indices, in_d, threshold, cap, k):
    n = indptr.size - 1
    vertices = np.empty(cap, dtype=np.int64)
    traces = np.empty((cap, k), dtype=np.int64)
    count = 0
    for v in range(n):
        if count == cap:
            break
        if in_d[v]:
            continue
        hits = 0
        for e in range(indptr[v], indptr[v + 1]):
            if in_d[indices[e]]:
                hits += 1
        if hits < threshold:
            continue
        j = 0
        for e in range(indptr[v], indptr[v + 1]):
            if in_d[indices[e]]:
                traces[count, j] = indices[e]
                j += 1
                if j == k:
                    break
        vertices[count] = v
        count += 1
    return vertices[:count], traces[:count]


def _pigeonhole(g: Graph, D: np.ndarray, gamma: float, epsilon: float) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    # most frequent truncated trace on D among the vertices of V* (None if there is nothing to pick from)
    q = (1 - epsilon) ** 2 * gamma
    k = int(math.floor(q * D.size))
    if k == 0:
        return None
    in_d = np.zeros(g.n, dtype=np.bool_)
    in_d[D] = True
    cap = int(math.ceil(g.n * gamma / math.log2(g.n)))
    vertices, traces = _collect_traces(g.indptr, g.indices.astype(np.int64), in_d, q * D.size, cap, k)
    if vertices.size == 0:
        return None
    keys, inverse, counts = np.unique(traces, axis=0, return_inverse=True, return_counts=True)
    best = int(np.argmax(counts))
    return keys[best].astype(np.int64), vertices[np.asarray(inverse).reshape(-1) == best]


def find_topdeg(g: Graph, epsilon: Optional[float] = None,
                partitioner: Optional[GraphPartitioner] = None) -> FoundBiclique:
    r"""
    Top-degree biclique finder.

    Parameters
    ----------
    g: :py:class:`~pybiclique.core.graph.Graph`
        Graph with at least one edge, of density :math:`\gamma`.
    epsilon: Optional[float]
        Error term :math:`\varepsilon`. Defaults to :py:func:`~pybiclique.opt.finder.topdeg_epsilon`.
    partitioner: Optional[GraphPartitioner]
        Partitioner used by the fallback. Defaults to :py:class:`~pybiclique.partition.basic.TracePartitioner`.

    Returns
    -------
    :py:class:`~pybiclique.opt.finder.FoundBiclique`
        Verified biclique.

    Notes
    -----
    Let :math:`D` be the :math:`r` vertices of highest degree (ties broken by id, :math:`r` given by
    :py:func:`~pybiclique.opt.finder.topdeg_size`) and :math:`q=(1-\varepsilon)^2\gamma`. The vertices
    :math:`v\notin D` with at least :math:`q|D|` neighbours in :math:`D` are collected by increasing id, up to
    :math:`\lceil n\gamma/\lg n\rceil` of them. The trace of every collected vertex is truncated to its first
    :math:`\lfloor q|D|\rfloor` neighbours in :math:`D`; the traces are sorted and the most frequent one (the
    lexicographically least among ties) gives :math:`A`, with :math:`B` the vertices sharing it.

    When :math:`\lfloor q|D|\rfloor=0` or no vertex qualifies (this happens outside the regime
    :math:`\gamma^{-1}=n^{o(1)}`, for instance on complete graphs), a ``RuntimeWarning`` is issued and the method falls
    back to :py:func:`~pybiclique.opt.finder.find_from_partition`.

    Examples
    --------

    .. doctest::

       >>> import warnings
       >>> from pybiclique.opt.finder import find_topdeg
       >>> from pybiclique.util.generators import gen_gnp
       >>> g = gen_gnp(2 ** 11, 0.5, seed=3)
       >>> found = find_topdeg(g, epsilon=0.1)
       >>> found.provenance, found.verify(g), found.t >= 1
       ('topdeg', True, True)
       >>> from pybiclique.core.graph import Graph
       >>> k = Graph.from_edges(64, [(u, v) for u in range(64) for v in range(u + 1, 64)])
       >>> with warnings.catch_warnings():
       ...     warnings.simplefilter('ignore')
       ...     find_topdeg(k).provenance
       'partition'
    """
    if g.m == 0:
        raise ValueError('Cannot find a biclique in a graph without edges.')
    gamma = float(g.edge_density())
    epsilon = topdeg_epsilon(g.n) if epsilon is None else epsilon
    r = topdeg_size(g.n, gamma, epsilon)
    order = np.lexsort((np.arange(g.n), -g.degrees))
    found = _pigeonhole(g, np.sort(order[:r]), gamma, epsilon)
    if found is None:
        warnings.warn('Top-degree traces are empty: falling back to the partition finder.', RuntimeWarning)
        return find_from_partition(g, (partitioner or TracePartitioner())(g))
    return FoundBiclique(A=found[0], B=found[1], provenance='topdeg').checked(g)


def find_sampled(g: Graph, seed: Optional[int] = None, epsilon: Optional[float] = None,
                 partitioner: Optional[GraphPartitioner] = None) -> FoundBiclique:
    r"""
    Sampling biclique finder.

    The set :math:`D` of :py:func:`~pybiclique.opt.finder.find_topdeg` is replaced by :math:`r` vertices found by
    rejection sampling: a uniformly random vertex :math:`v\notin D` is accepted if its degree, estimated as
    :math:`(n-1)|N(v)\cap U|/|U|` on a uniform sample :math:`U` of :math:`\lceil\sqrt n\rceil` other vertices, is at
    least :math:`\theta=(1-\varepsilon)\gamma(n-1)`. Each of the :math:`r` slots gets at most :math:`\lceil
    n^{0.4}\rceil` draws; if one runs out, or the trace phase finds nothing, the method falls back to
    :py:func:`~pybiclique.opt.finder.find_topdeg` with a ``RuntimeWarning``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.opt.finder import find_sampled
       >>> from pybiclique.util.generators import gen_circulant
       >>> g = gen_circulant(4096, 1024)
       >>> first, second = find_sampled(g, seed=5, epsilon=0.1), find_sampled(g, seed=5, epsilon=0.1)
       >>> first.provenance, first.verify(g)
       ('sampled', True)
       >>> first.A.tolist() == second.A.tolist() and first.B.tolist() == second.B.tolist()
       True

    The warning tells how far sampling got. On a graph with a single edge almost every draw is rejected:

    .. doctest::

       >>> import warnings
       >>> from pybiclique.core.graph import Graph
       >>> g = Graph.from_edges(64, [(0, 1)])
       >>> with warnings.catch_warnings(record=True) as caught:
       ...     warnings.simplefilter('always')
       ...     found = find_sampled(g, seed=0)
       >>> message = str(caught[0].message)
       >>> message.startswith('Sampling found') and 'of 1 top-degree vertices with 6 draws per slot' in message
       True
       >>> found.provenance != 'sampled', found.verify(g)
       (True, True)
    """
    if g.m == 0:
        raise ValueError('Cannot find a biclique in a graph without edges.')
    rng = np.random.default_rng(seed)
    gamma = float(g.edge_density())
    epsilon = topdeg_epsilon(g.n) if epsilon is None else epsilon
    r = topdeg_size(g.n, gamma, epsilon)
    theta = (1 - epsilon) * gamma * (g.n - 1)
    budget = int(math.ceil(g.n ** 0.4))
    sample_size = min(int(math.ceil(math.sqrt(g.n))), g.n - 1)
    adjacency = g.adjacency_matrix()
    chosen = np.zeros(g.n, dtype=bool)
    D = []
    for _ in range(r):
        for _ in range(budget):
            v = int(rng.integers(g.n))
            if chosen[v]:
                continue
            others = rng.choice(g.n - 1, size=sample_size, replace=False)
            others = others + (others >= v)
            estimate = (g.n - 1) * int(adjacency[v, others].sum()) / sample_size
            if estimate >= theta:
                chosen[v] = True
                D.append(v)
                break
        else:
            break
    found = _pigeonhole(g, np.sort(np.array(D, dtype=np.int64)), gamma, epsilon) if len(D) == r else None
    if found is None:
        reason = ' but their traces are empty' if len(D) == r else ''
        warnings.warn(f'Sampling found {len(D)} of {r} top-degree vertices with {budget} draws per slot{reason}: '
                      f'falling back to the top-degree finder.', RuntimeWarning)
        return find_topdeg(g, epsilon=epsilon, partitioner=partitioner)
    return FoundBiclique(A=found[0], B=found[1], provenance='sampled').checked(g)
