# #############################################################################
# queries.py
# ==========
# #############################################################################

r"""
Independent-set and cut queries answered on the SB representation, in time :math:`O(w+|S|+|T|)`.
"""

import threading
from typing import Iterable, Tuple

import numpy as np

from pybiclique.compress.succinct import SBRepr
from pybiclique.util.misc import as_vertex_set


class QueryEngine:
    r"""
    Query evaluator over an SB representation.

    Set membership is recorded in an epoch-stamped array of size :math:`n`, allocated once: every query bumps the epoch
    instead of clearing the array, so that its cost is :math:`O(w+|S|+|T|)` rather than :math:`O(n)`.

    An engine holds mutable scratch state: concurrent queries need one engine per thread.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.compress.succinct import build_sb
       >>> from pybiclique.compress.queries import QueryEngine
       >>> engine = QueryEngine(build_sb(BicliquePartition.from_bicliques(4, [([0, 1], [2, 3])])))
       >>> engine.is_independent([0, 1]), engine.is_independent([0, 2])
       (True, False)
       >>> engine.cut([0], [2, 3]), engine.cut([2, 3], [0]), engine.cut([], [1])
       (2, 2, 0)
       >>> engine.cut([0, 2], [2])
       Traceback (most recent call last):
       ...
       ValueError: Cut sides S and T must be disjoint.
    """

    def __init__(self, sb: SBRepr):
        if not isinstance(sb, SBRepr):
            raise TypeError(f'Expected a {SBRepr}, got {type(sb).__name__}.')
        self.sb = sb
        self.stamp = np.zeros(sb.n, dtype=np.int64)
        self.epoch = 0
        k = len(sb)
        self.left_owner = np.repeat(np.arange(k, dtype=np.int64), sb.left_sizes)
        self.right_owner = np.repeat(np.arange(k, dtype=np.int64), sb.right_sizes)

    def _mark(self, vertices: np.ndarray) -> int:
        self.epoch += 1
        self.stamp[vertices] = self.epoch
        return self.epoch

    def _counts(self, epoch: int) -> Tuple[np.ndarray, np.ndarray]:
        # per biclique, number of marked vertices on each side
        k = len(self.sb)
        in_left = self.stamp[self.sb.left_indices] == epoch
        in_right = self.stamp[self.sb.right_indices] == epoch
        return (np.bincount(self.left_owner[in_left], minlength=k),
                np.bincount(self.right_owner[in_right], minlength=k))

    def is_independent(self, S: Iterable[int]) -> bool:
        r"""
        ``True`` iff no biclique meets ``S`` on both sides.

        Raises
        ------
        ValueError
            If a vertex of ``S`` is outside of :math:`[0,n)`.
        """
        S = as_vertex_set(S, self.sb.n, 'S')
        if S.size < 2:
            return True
        left, right = self._counts(self._mark(S))
        return not bool(np.any((left > 0) & (right > 0)))

    def cut(self, S: Iterable[int], T: Iterable[int]) -> int:
        r"""
        Number of edges between the disjoint sets ``S`` and ``T``:
        :math:`\sum_i |S\cap L_i||T\cap R_i|+|S\cap R_i||T\cap L_i|`.

        Raises
        ------
        ValueError
            If ``S`` and ``T`` intersect or contain a vertex outside of :math:`[0,n)`.
        """
        S = as_vertex_set(S, self.sb.n, 'S')
        T = as_vertex_set(T, self.sb.n, 'T')
        first = self._mark(S)
        if np.any(self.stamp[T] == first):
            raise ValueError('Cut sides S and T must be disjoint.')
        if S.size == 0 or T.size == 0:
            return 0
        s_left, s_right = self._counts(first)
        t_left, t_right = self._counts(self._mark(T))
        return int(np.dot(s_left, t_right) + np.dot(s_right, t_left))


def _engine(sb: SBRepr) -> QueryEngine:
    # one engine per thread and representation, so that concurrent queries never share scratch state
    local = vars(sb).setdefault('_query_engines', threading.local())
    engine = getattr(local, 'engine', None)
    if engine is None:
        engine = QueryEngine(sb)
        local.engine = engine
    return engine


def is_independent(sb: SBRepr, S: Iterable[int]) -> bool:
    r"""
    Independent-set query. See :py:meth:`~pybiclique.compress.queries.QueryEngine.is_independent`.

    Every thread keeps its own engine for ``sb``, so that repeated queries reuse its scratch array and queries from
    several threads do not interfere.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.compress.succinct import build_sb
       >>> from pybiclique.compress.queries import is_independent
       >>> from pybiclique.partition.basic import partition_trivial
       >>> sb = build_sb(partition_trivial(Graph.from_edges(3, [(0, 1), (1, 2)])))
       >>> is_independent(sb, [0, 2]), is_independent(sb, []), is_independent(sb, [1])
       (True, True, True)
    """
    return _engine(sb).is_independent(S)


def cut(sb: SBRepr, S: Iterable[int], T: Iterable[int]) -> int:
    r"""
    Cut query. See :py:meth:`~pybiclique.compress.queries.QueryEngine.cut`.

    Safe to call from several threads on the same representation.

    Examples
    --------

    .. doctest::

       >>> import joblib as job
       >>> import numpy as np
       >>> from pybiclique.compress.queries import cut
       >>> from pybiclique.compress.succinct import build_sb
       >>> from pybiclique.core.oracle import brute_cut
       >>> from pybiclique.partition.basic import partition_ep
       >>> from pybiclique.util.generators import gen_gnp
       >>> g = gen_gnp(200, 0.3, seed=4)
       >>> sb = build_sb(partition_ep(g))
       >>> rng = np.random.default_rng(4)
       >>> queries = [np.split(rng.permutation(200)[:60], [30]) for _ in range(400)]
       >>> with job.Parallel(n_jobs=8, backend='threading') as parallel:
       ...     answers = parallel(job.delayed(cut)(sb, S, T) for S, T in queries)
       >>> answers == [brute_cut(g, S, T) for S, T in queries]
       True
    """
    return _engine(sb).cut(S, T)
