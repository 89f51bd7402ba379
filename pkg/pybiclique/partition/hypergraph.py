# #############################################################################
# hypergraph.py
# =============
# #############################################################################

r"""
:math:`d`-clique partitioners of :math:`d`-uniform hypergraphs and equitable selection strategies.

A :math:`d`-*distribution* is a tuple :math:`(x_0,\ldots,x_{d-2})` of nonnegative integers summing to :math:`d`: it
records how the :math:`d` vertices of an edge split among :math:`d-1` vertex parts. A *selection strategy* maps every
distribution :math:`x` to a part index :math:`i` with :math:`x_i\geq 2`; it is *equitable* if every index receives the
same total multinomial mass :math:`\sum_{f(x)=i} d!/(x_0!\cdots x_{d-2}!)`.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from pybiclique.core.graph import Hypergraph
from pybiclique.core.partition import DCliquePartition, concatenate_dpartitions
from pybiclique.core.partitioner import GraphPartitioner, HypergraphPartitioner
from pybiclique.math.combinatorics import multinomial, weak_compositions

Distribution = Tuple[int, ...]


def enumerate_distributions(d: int) -> List[Distribution]:
    r"""
    All :math:`d`-distributions, in lexicographic order.

    There are :math:`\binom{2d-2}{d-2}` of them.

    Raises
    ------
    ValueError
        If :math:`d<2`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.hypergraph import enumerate_distributions
       >>> enumerate_distributions(2)
       [(2,)]
       >>> enumerate_distributions(3)
       [(0, 3), (1, 2), (2, 1), (3, 0)]
       >>> len(enumerate_distributions(4))
       15
    """
    if d < 2:
        raise ValueError(f'Uniformity d must be at least 2, got {d}.')
    return list(weak_compositions(d, d - 1))


def multinomial_identity_check(d: int) -> bool:
    r"""
    Check the identity :math:`\sum_{x} \frac{d!}{x_0!\cdots x_{d-2}!}=(d-1)^d` over all :math:`d`-distributions.

    Both sides count the strings of length :math:`d` over an alphabet of size :math:`d-1`. Arithmetic is exact.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.hypergraph import multinomial_identity_check
       >>> all(multinomial_identity_check(d) for d in range(2, 11))
       True
    """
    return sum(multinomial(d, x) for x in enumerate_distributions(d)) == (d - 1) ** d


def rotate(x: Distribution, j: int) -> Distribution:
    r"""
    Cyclic left shift of ``x`` by ``j`` positions.
    """
    j %= len(x)
    return x[j:] + x[:j]


def rotation_classes(d: int) -> List[List[Distribution]]:
    r"""
    Partition the :math:`d`-distributions into classes of cyclic rotations.

    Classes are listed by their lexicographically least member, members in lexicographic order.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.hypergraph import rotation_classes
       >>> rotation_classes(4)[:2]
       [[(0, 0, 4), (0, 4, 0), (4, 0, 0)], [(0, 1, 3), (1, 3, 0), (3, 0, 1)]]
       >>> all(len(c) == d - 1 for d in range(2, 9) for c in rotation_classes(d))
       True
    """
    seen = set()
    classes = []
    for x in enumerate_distributions(d):
        if x in seen:
            continue
        members = sorted({rotate(x, j) for j in range(d - 1)})
        seen.update(members)
        classes.append(members)
    return classes


class EquitableStrategy:
    r"""
    Equitable selection strategy.

    For every rotation class, the representative is the lexicographically least rotation whose first entry is at
    least 2. The rotation of the representative by :math:`j` positions to the left is mapped to index
    :math:`-j \bmod (d-1)`, the new position of the representative's first entry. When every class has exactly
    :math:`d-1` members, each class sends exactly one distribution to each index, and the multinomial coefficient is
    invariant under rotation, so the strategy is equitable.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.hypergraph import make_equitable_strategy
       >>> f = make_equitable_strategy(4)
       >>> f((2, 1, 1)), f((1, 1, 2)), f((1, 2, 1))
       (0, 2, 1)
       >>> f.masses()
       [27, 27, 27]
       >>> f.is_valid(), f.is_equitable(), f.primitive
       (True, True, True)
       >>> make_equitable_strategy(2)((2,))
       0
    """

    def __init__(self, d: int):
        r"""
        Parameters
        ----------
        d: int
            Uniformity (:math:`d\geq 2`).
        """
        if d < 2:
            raise ValueError(f'Uniformity d must be at least 2, got {d}.')
        self.d = d
        self.classes = rotation_classes(d)
        self.primitive = all(len(c) == d - 1 for c in self.classes)
        self.mapping: Dict[Distribution, int] = {}
        for members in self.classes:
            representative = min(x for x in members if x[0] >= 2)
            for j in range(d - 1):
                # non-primitive classes repeat rotations: the first index assigned wins
                self.mapping.setdefault(rotate(representative, j), (-j) % (d - 1))

    def __call__(self, x: Sequence[int]) -> int:
        try:
            return self.mapping[tuple(int(xi) for xi in x)]
        except KeyError:
            raise ValueError(f'{tuple(x)} is not a {self.d}-distribution.')

    def masses(self) -> List[int]:
        r"""
        Multinomial mass :math:`\sum_{f(x)=i} d!/(x_0!\cdots x_{d-2}!)` received by every index :math:`i`.
        """
        out = [0] * (self.d - 1)
        for x, i in self.mapping.items():
            out[i] += multinomial(self.d, x)
        return out

    def is_valid(self) -> bool:
        r"""
        Check that :math:`x_{f(x)}\geq 2` for every distribution.
        """
        return all(x[i] >= 2 for x, i in self.mapping.items())

    def is_equitable(self) -> bool:
        r"""
        Check that all indices receive the same multinomial mass (exact integers).
        """
        return len(set(self.masses())) == 1

    def __repr__(self) -> str:
        return f'EquitableStrategy(d={self.d}, classes={len(self.classes)})'


def make_equitable_strategy(d: int) -> EquitableStrategy:
    r"""
    Construct the equitable selection strategy for uniformity ``d``.
    See :py:class:`~pybiclique.partition.hypergraph.EquitableStrategy`.
    """
    return EquitableStrategy(d)


def _host_size(n: int, i: int, k: int) -> int:
    # number of ids v < n with v % k == i
    return max(0, (n - i + k - 1) // k)


class StepUpPartitioner(HypergraphPartitioner):
    r"""
    Step-up :math:`d`-clique partitioner.

    Notes
    -----
    Every edge is assigned to its least vertex :math:`v`. The edges assigned to :math:`v`, with :math:`v` removed, form
    the link :math:`(d-1)`-graph of :math:`v` on the vertices above :math:`v`; it is partitioned recursively (by the
    base biclique partitioner when :math:`d-1=2`) and the singleton part :math:`\{v\}` is prepended to every returned
    clique.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Hypergraph
       >>> from pybiclique.core.partition import verify_dpartition
       >>> from pybiclique.partition.hypergraph import StepUpPartitioner
       >>> list(StepUpPartitioner()(Hypergraph.from_edges(3, 3, [(0, 1, 2)])))
       [DClique(parts=[[0], [1], [2]])]
       >>> h = Hypergraph.from_edges(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
       >>> verify_dpartition(h, StepUpPartitioner()(h)).ok
       True
    """

    def __init__(self, base: Optional[GraphPartitioner] = None, verbose: Optional[int] = None):
        super(StepUpPartitioner, self).__init__(base=base, verbose=verbose)

    def __call__(self, h: Hypergraph) -> DCliquePartition:
        if not isinstance(h, Hypergraph):
            raise TypeError(f'Input must be of type {Hypergraph}, got {type(h).__name__}.')
        return self._partition(h.n, h.d, h.edges, top=True)

    def _partition(self, n: int, d: int, edges: np.ndarray, top: bool = False) -> DCliquePartition:
        if edges.shape[0] == 0:
            return DCliquePartition.empty(n, d)
        if d == 2:
            return self.partition_graph(n, edges)
        order = np.argsort(edges[:, 0], kind='stable')
        edges = edges[order]
        heads, starts = np.unique(edges[:, 0], return_index=True)
        bounds = np.r_[starts, edges.shape[0]]
        parts = []
        for j, v in enumerate(heads.tolist()):
            link = edges[bounds[j]:bounds[j + 1], 1:] - (v + 1)
            sub = self._partition(n - v - 1, d - 1, link)
            parts.append(sub.relabel(np.arange(v + 1, n, dtype=np.int64), n).extend([v]))
            if top and self.verbose is not None and (j + 1) % self.verbose == 0:
                print(f'{type(self).__name__}: {j + 1}/{heads.size} link graphs processed.')
        return concatenate_dpartitions(n, d, parts)


def partition_stepup(h: Hypergraph, base: Optional[GraphPartitioner] = None) -> DCliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.hypergraph.StepUpPartitioner`.
    """
    return StepUpPartitioner(base=base)(h)


class EquitablePartitioner(HypergraphPartitioner):
    r"""
    Recursive equitable :math:`d`-clique partitioner, in time :math:`O(n^d/d!)`.

    Notes
    -----
    The vertices are dealt into :math:`d-1` parts :math:`P_j=\{v : v \equiv j \bmod (d-1)\}`. Every edge :math:`e` has a
    distribution :math:`x` (:math:`x_j=|e\cap P_j|`) and is routed to the part :math:`P_i` with :math:`i=f(x)`, for an
    equitable strategy :math:`f`. Edges sharing :math:`x` and the *selection* :math:`S=e\setminus P_i` form an
    :math:`x_i`-uniform link hypergraph on :math:`P_i`, which is partitioned recursively: by the base biclique
    partitioner when :math:`x_i=2`, at uniformity :math:`x_i` when :math:`2<x_i<d`, and at uniformity :math:`d` on the
    strictly smaller vertex set :math:`P_i` when :math:`x_i=d`. Every returned clique is extended by the singletons of
    :math:`S`.

    Groups are processed by increasing distribution, then increasing selection, and empty link hypergraphs are skipped.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Hypergraph
       >>> from pybiclique.core.partition import verify_dpartition
       >>> from pybiclique.partition.hypergraph import EquitablePartitioner
       >>> from pybiclique.util.generators import gen_hypergraph
       >>> list(EquitablePartitioner()(Hypergraph.from_edges(3, 3, [(0, 1, 2)])))
       [DClique(parts=[[1], [0], [2]])]
       >>> h = gen_hypergraph(24, 4, 0.5, seed=2)
       >>> p = EquitablePartitioner()(h)
       >>> verify_dpartition(h, p).ok, p.weight() <= 4 * h.m
       (True, True)
    """

    def __init__(self, base: Optional[GraphPartitioner] = None, verbose: Optional[int] = None):
        super(EquitablePartitioner, self).__init__(base=base, verbose=verbose)
        self._strategies: Dict[int, EquitableStrategy] = {}

    def strategy(self, d: int) -> EquitableStrategy:
        if d not in self._strategies:
            self._strategies[d] = make_equitable_strategy(d)
        return self._strategies[d]

    def __call__(self, h: Hypergraph) -> DCliquePartition:
        if not isinstance(h, Hypergraph):
            raise TypeError(f'Input must be of type {Hypergraph}, got {type(h).__name__}.')
        return self._partition(h.n, h.d, h.edges, top=True)

    def _partition(self, n: int, d: int, edges: np.ndarray, top: bool = False) -> DCliquePartition:
        if edges.shape[0] == 0:
            return DCliquePartition.empty(n, d)
        if d == 2:
            return self.partition_graph(n, edges)
        k = d - 1
        if n < k:
            return DCliquePartition.singletons(n, edges)
        f = self.strategy(d)
        labels = edges % k
        x = np.stack([np.count_nonzero(labels == j, axis=1) for j in range(k)], axis=1)
        distributions, inverse = np.unique(x, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)
        parts = []
        for g, row in enumerate(distributions):
            i = f(row)
            xi = int(row[i])
            group = edges[inverse == g]
            inside = (group % k) == i
            selections = group[~inside].reshape(-1, d - xi)
            link = group[inside].reshape(-1, xi) // k
            size = _host_size(n, i, k)
            host = i + k * np.arange(size, dtype=np.int64)
            if d - xi == 0:
                keys, counts, order = np.zeros((1, 0), dtype=np.int64), np.array([group.shape[0]]), \
                                      np.arange(group.shape[0])
            else:
                keys, sel_inverse = np.unique(selections, axis=0, return_inverse=True)
                sel_inverse = np.asarray(sel_inverse).reshape(-1)
                order = np.argsort(sel_inverse, kind='stable')
                counts = np.bincount(sel_inverse, minlength=keys.shape[0])
            bounds = np.r_[0, np.cumsum(counts)]
            for s in range(keys.shape[0]):
                rows = link[order[bounds[s]:bounds[s + 1]]]
                sub = self._partition(size, xi, rows)
                parts.append(sub.relabel(host, n).extend(keys[s].tolist()))
            if top and self.verbose is not None and (g + 1) % self.verbose == 0:
                print(f'{type(self).__name__}: {g + 1}/{distributions.shape[0]} distributions processed.')
        return concatenate_dpartitions(n, d, parts)


def partition_equitable(h: Hypergraph, base: Optional[GraphPartitioner] = None) -> DCliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.hypergraph.EquitablePartitioner`.
    """
    return EquitablePartitioner(base=base)(h)
