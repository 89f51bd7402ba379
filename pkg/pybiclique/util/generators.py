# #############################################################################
# generators.py
# =============
# #############################################################################

r"""
Seeded random graph and hypergraph generators.

Every generator takes a ``seed`` forwarded to :py:func:`numpy.random.default_rng`: an integer, a
:py:class:`numpy.random.SeedSequence` (e.g. a child spawned from a run-level seed) or a
:py:class:`numpy.random.Generator`. The same seed always produces the same graph.
"""

import itertools
import math
from typing import Optional, Union

import numpy as np

from pybiclique.core.graph import Digraph, Graph, Hypergraph, encode_sets
from pybiclique.util.misc import check_natural, check_probability

SeedType = Optional[Union[int, np.random.SeedSequence, np.random.Generator]]


def _pair_offsets(n: int) -> np.ndarray:
    # index of the first pair (u, u+1) in the lexicographic list of pairs u < v
    u = np.arange(n, dtype=np.int64)
    return u * (2 * n - u - 1) // 2


def unrank_pairs(ranks: np.ndarray, n: int) -> np.ndarray:
    r"""
    Pairs :math:`(u,v)`, :math:`u<v`, of given ranks in the lexicographic order of the :math:`\binom{n}{2}` pairs.

    Examples
    --------

    .. doctest::

       >>> import numpy as np
       >>> from pybiclique.util.generators import unrank_pairs
       >>> unrank_pairs(np.arange(6), 4).tolist()
       [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    """
    ranks = np.asarray(ranks, dtype=np.int64)
    offsets = _pair_offsets(n)
    u = np.searchsorted(offsets, ranks, side='right') - 1
    v = ranks - offsets[u] + u + 1
    return np.stack([u, v], axis=1)


def gen_gnp(n: int, p: float, seed: SeedType = None) -> Graph:
    r"""
    Binomial random graph :math:`G(n,p)`: every pair is an edge independently with probability :math:`p`.

    Parameters
    ----------
    n: int
        Number of vertices.
    p: float
        Edge probability in :math:`[0,1]`.
    seed: SeedType
        Seed of the generator.

    Returns
    -------
    :py:class:`~pybiclique.core.graph.Graph`
        The random graph.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_gnp
       >>> gen_gnp(10, 0, seed=1).m, gen_gnp(10, 1, seed=1).m
       (0, 45)
       >>> gen_gnp(200, 0.3, seed=4) == gen_gnp(200, 0.3, seed=4)
       True
       >>> gen_gnp(10, 1.5)
       Traceback (most recent call last):
       ...
       ValueError: Parameter p must be in [0,1], got 1.5.
    """
    n = check_natural(n, 'n')
    check_probability(p)
    rng = np.random.default_rng(seed)
    blocks = []
    for u in range(max(n - 1, 0)):
        hits = np.flatnonzero(rng.random(n - u - 1) < p) + (u + 1)
        if hits.size > 0:
            blocks.append(np.stack([np.full(hits.size, u, dtype=np.int64), hits], axis=1))
    edges = np.concatenate(blocks) if blocks else np.zeros((0, 2), dtype=np.int64)
    return Graph.from_edges(n, edges)


def gen_gnm(n: int, m: int, seed: SeedType = None) -> Graph:
    r"""
    Uniform random graph :math:`G(n,m)`: a uniformly random set of exactly :math:`m` pairs.

    Raises
    ------
    ValueError
        If :math:`m>\binom{n}{2}`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_gnm
       >>> gen_gnm(100, 1000, seed=0).m
       1000
       >>> gen_gnm(4, 7)
       Traceback (most recent call last):
       ...
       ValueError: Parameter m must be <= 6 for n=4, got 7.
    """
    n = check_natural(n, 'n')
    m = check_natural(m, 'm')
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f'Parameter m must be <= {total} for n={n}, got {m}.')
    rng = np.random.default_rng(seed)
    ranks = rng.choice(total, size=m, replace=False) if m > 0 else np.zeros(0, dtype=np.int64)
    return Graph.from_edges(n, unrank_pairs(ranks, n))


def gen_dgnp(n: int, p: float, seed: SeedType = None) -> Digraph:
    r"""
    Binomial random digraph: every ordered pair :math:`(u,v)`, :math:`u\neq v`, is an arc independently with
    probability :math:`p`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_dgnp
       >>> gen_dgnp(6, 1, seed=0).m, gen_dgnp(6, 0, seed=0).m
       (30, 0)
    """
    n = check_natural(n, 'n')
    check_probability(p)
    rng = np.random.default_rng(seed)
    blocks = []
    for u in range(n if n > 1 else 0):
        hits = np.flatnonzero(rng.random(n - 1) < p)
        hits = hits + (hits >= u)
        if hits.size > 0:
            blocks.append(np.stack([np.full(hits.size, u, dtype=np.int64), hits], axis=1))
    arcs = np.concatenate(blocks) if blocks else np.zeros((0, 2), dtype=np.int64)
    return Digraph.from_arcs(n, arcs)


def gen_hypergraph(n: int, d: int, p: float, seed: SeedType = None, enumeration_limit: int = 1 << 20) -> Hypergraph:
    r"""
    Binomial random :math:`d`-uniform hypergraph: every :math:`d`-subset is an edge independently with probability
    :math:`p`.

    Parameters
    ----------
    n, d: int
        Number of vertices and uniformity.
    p: float
        Edge probability in :math:`[0,1]`.
    seed: SeedType
        Seed of the generator.
    enumeration_limit: int
        Up to this many :math:`d`-subsets, all of them are enumerated and kept independently. Above it, the number of
        edges is drawn from :math:`\text{Bin}(\binom{n}{d},p)` and a uniform set of that many distinct
        :math:`d`-subsets is drawn by rejection, which has the same distribution.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_hypergraph
       >>> h = gen_hypergraph(24, 4, 0.5, seed=2)
       >>> h.d, h.n, 4000 < h.m < 6700
       (4, 24, True)
       >>> gen_hypergraph(8, 3, 1, seed=0).m
       56
       >>> large = gen_hypergraph(256, 3, 1e-4, seed=0)
       >>> large.m == len(set(map(tuple, large.edges.tolist())))
       True
    """
    n = check_natural(n, 'n')
    d = check_natural(d, 'd', minimum=2)
    check_probability(p)
    rng = np.random.default_rng(seed)
    total = math.comb(n, d)
    if total == 0:
        return Hypergraph(n, d, np.zeros((0, d), dtype=np.int64))
    if total <= enumeration_limit:
        subsets = np.array(list(itertools.combinations(range(n), d)), dtype=np.int64).reshape(-1, d)
        return Hypergraph.from_edges(n, d, subsets[rng.random(total) < p])
    count = int(rng.binomial(total, p))
    if 2 * count > total:
        raise ValueError(f'Cannot draw {count} of the {total} {d}-subsets by rejection: lower p or raise '
                         f'enumeration_limit.')
    keys = np.zeros(0, dtype=np.int64)
    while keys.size < count:
        batch = max(2 * (count - keys.size), 64)
        rows = np.sort(np.argsort(rng.random((batch, n)), axis=1)[:, :d], axis=1)
        keys = np.unique(np.concatenate([keys, encode_sets(rows, n)]))
    keys = rng.choice(keys, size=count, replace=False)
    edges = np.stack([(keys // n ** (d - 1 - j)) % n for j in range(d)], axis=1)
    return Hypergraph.from_edges(n, d, edges)


def gen_interval(n: int, seed: SeedType = None, length: float = 0.1) -> Graph:
    r"""
    Random interval graph.

    Vertex :math:`v` is the interval :math:`[a_v,a_v+\ell_v]` with :math:`a_v` uniform in :math:`[0,1)` and
    :math:`\ell_v` uniform in :math:`[0,\texttt{length})`; two vertices are adjacent iff their intervals overlap.
    Interval graphs have a shatter function of degree 2.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_interval
       >>> g = gen_interval(300, seed=3)
       >>> g.n, g.m > 0, g == gen_interval(300, seed=3)
       (300, True, True)
    """
    n = check_natural(n, 'n')
    rng = np.random.default_rng(seed)
    starts = rng.random(n)
    ends = starts + length * rng.random(n)
    order = np.argsort(starts, kind='stable')
    starts, ends = starts[order], ends[order]
    # intervals i < j in start order overlap iff start_j <= end_i
    stop = np.searchsorted(starts, ends, side='right')
    counts = np.maximum(stop - np.arange(n) - 1, 0)
    u = np.repeat(np.arange(n, dtype=np.int64), counts)
    first = np.repeat(np.cumsum(counts) - counts, counts)
    v = u + 1 + np.arange(u.size, dtype=np.int64) - first
    return Graph.from_edges(n, np.stack([order[u], order[v]], axis=1))


def gen_circulant(n: int, k: int) -> Graph:
    r"""
    Circulant graph on :math:`\mathbb{Z}_n` with offsets :math:`1,\ldots,k`: every vertex has degree exactly :math:`2k`.

    Raises
    ------
    ValueError
        If :math:`2k\geq n`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_circulant
       >>> g = gen_circulant(10, 2)
       >>> g.m, set(g.degrees.tolist()), g.neighbors(0).tolist()
       (20, {4}, [1, 2, 8, 9])
    """
    n = check_natural(n, 'n')
    k = check_natural(k, 'k')
    if 2 * k >= n and k > 0:
        raise ValueError(f'Parameter k must satisfy 2k < n, got k={k} and n={n}.')
    v = np.repeat(np.arange(n, dtype=np.int64), k)
    offsets = np.tile(np.arange(1, k + 1, dtype=np.int64), n)
    return Graph.from_edges(n, np.stack([v, (v + offsets) % n], axis=1))
