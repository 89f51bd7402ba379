# #############################################################################
# stats.py
# ========
# #############################################################################

r"""
Partition statistics compared with their asymptotic targets.
"""

import math
from typing import Optional

import numpy as np

from pybiclique.core.graph import Graph, Hypergraph
from pybiclique.core.partition import BicliquePartition, DCliquePartition
from pybiclique.math.entropy import binary_entropy
from pybiclique.partition.basic import ep_load_bound, trace_counts
from pybiclique.util.generators import SeedType
from pybiclique.util.misc import check_natural

__all__ = ['report_theory', 'report_theory_dpartition', 'shatter_estimate', 'ep_load_bound', 'trace_counts']


def report_theory(p: BicliquePartition, g: Optional[Graph] = None,
                  baseline: Optional[BicliquePartition] = None) -> dict:
    r"""
    Weight and load of a biclique partition next to the quantities whose limits the theory predicts.

    Parameters
    ----------
    p: :py:class:`~pybiclique.core.partition.BicliquePartition`
        Partition of a graph on :math:`n` vertices.
    g: Optional[:py:class:`~pybiclique.core.graph.Graph`]
        Partitioned graph. If ``None``, its edge count is recovered from the partition as :math:`\sum_i|L_i||R_i|`.
    baseline: Optional[:py:class:`~pybiclique.core.partition.BicliquePartition`]
        Another partition of the same graph, typically the one of
        :py:class:`~pybiclique.partition.basic.TracePartitioner`, to compare with.

    Returns
    -------
    dict
        Record with keys

        * ``n``, ``m``, ``gamma`` (edge density), ``h2`` (:math:`h_2(\gamma)`), ``members``, ``weight``, ``max_load``;
        * ``weight_ratio`` :math:`=w\lg n/n^2` and its target ``weight_target`` :math:`=h_2(\gamma)/2`;
        * ``density_ratio`` :math:`=w\lg n/(h_2(\gamma)n^2)`, whose target is :math:`1/2`;
        * ``load_ratio`` :math:`=\ell_{\max}\lg n/n` and its target ``load_target`` :math:`=1/2`;
        * ``weight_bound`` :math:`=h_2(\gamma)n^2/(2\lg n)` and ``load_bound`` :math:`=n/(2\lg n)`;
        * ``trivial_weight`` :math:`=2m`, the weight of the per-edge partition;
        * ``degenerate``: ``True`` when :math:`h_2(\gamma)=0` (empty or complete graphs) or :math:`n<2`. Ratios
          involving :math:`h_2(\gamma)` are then ``nan``.
        * with a ``baseline``: ``baseline_weight``, ``best_weight`` (the smaller of both weights), ``baseline_ratio``
          (:math:`w` over the baseline weight) and ``best_density_ratio`` (``density_ratio`` of ``best_weight``).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.partition.basic import partition_trivial
       >>> from pybiclique.util.stats import report_theory
       >>> k = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
       >>> record = report_theory(partition_trivial(k))
       >>> record['m'], record['gamma'], record['weight'], record['trivial_weight'], record['degenerate']
       (6, 1.0, 12, 12, True)
       >>> record['weight_ratio'], record['load_ratio']
       (1.5, 1.5)

    With a baseline, the lighter of both partitions is reported:

    .. doctest::

       >>> from pybiclique.partition.basic import partition_ep
       >>> from pybiclique.partition.density import partition_density
       >>> from pybiclique.util.generators import gen_gnm
       >>> g = gen_gnm(2048, int(0.9 * 2048 * 2047 / 2), seed=1)
       >>> record = report_theory(partition_density(g), g, baseline=partition_ep(g))
       >>> record['best_weight'] == min(record['weight'], record['baseline_weight'])
       True
       >>> record['baseline_ratio'] < 1, record['best_density_ratio'] == record['density_ratio']
       (True, True)
    """
    n = p.n
    if g is not None:
        if g.n != n:
            raise ValueError(f'Partition is on {n} vertices but the graph has {g.n}.')
        m = g.m
    else:
        m = int(np.dot(p.part_sizes(0), p.part_sizes(1)))
    pairs = n * (n - 1) // 2
    gamma = m / pairs if pairs > 0 else 0.
    h2 = binary_entropy(gamma)
    w = p.weight()
    max_load = p.max_load()
    degenerate = n < 2 or h2 == 0
    lg_n = math.log2(n) if n >= 2 else math.nan
    record = dict(n=n, m=m, gamma=gamma, h2=h2, members=len(p), weight=w, max_load=max_load,
                  weight_ratio=w * lg_n / n ** 2 if n >= 2 else math.nan,
                  weight_target=h2 / 2,
                  density_ratio=math.nan if degenerate else w * lg_n / (h2 * n ** 2),
                  load_ratio=max_load * lg_n / n if n >= 2 else math.nan,
                  load_target=0.5,
                  weight_bound=math.nan if degenerate else h2 * n ** 2 / (2 * lg_n),
                  load_bound=n / (2 * lg_n) if n >= 2 else math.nan,
                  trivial_weight=2 * m,
                  degenerate=degenerate)
    if baseline is not None:
        if baseline.n != n:
            raise ValueError(f'Partition is on {n} vertices but the baseline on {baseline.n}.')
        w_base = baseline.weight()
        best = min(w, w_base)
        record.update(baseline_weight=w_base, best_weight=best,
                      baseline_ratio=w / w_base if w_base > 0 else math.nan,
                      best_density_ratio=math.nan if degenerate else best * lg_n / (h2 * n ** 2))
    return record


def report_theory_dpartition(p: DCliquePartition, h: Optional[Hypergraph] = None) -> dict:
    r"""
    Weight and load of a :math:`d`-clique partition, next to the weight :math:`d|E|` of the per-edge partition.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import DCliquePartition
       >>> from pybiclique.util.stats import report_theory_dpartition
       >>> p = DCliquePartition.from_cliques(4, 3, [([0], [1], [2, 3])])
       >>> record = report_theory_dpartition(p)
       >>> record['m'], record['weight'], record['trivial_weight'], record['weight_fraction']
       (2, 4, 6, 0.6666666666666666)
    """
    if h is not None and (h.n != p.n or h.d != p.d):
        raise ValueError(f'Partition is a {p.d}-partition on {p.n} vertices, the hypergraph a {h.d}-graph on {h.n}.')
    m = h.m if h is not None else int(p.products().sum())
    w = p.weight()
    trivial = p.d * m
    return dict(n=p.n, d=p.d, m=m, members=len(p), weight=w, max_load=p.max_load(), trivial_weight=trivial,
                weight_fraction=w / trivial if trivial > 0 else math.nan)


def shatter_estimate(g: Graph, z: int, samples: int = 32, seed: SeedType = None) -> int:
    r"""
    Lower bound on the shatter function :math:`\pi_G(z)`: the largest number of distinct traces
    :math:`N(v)\cap Z` over ``samples`` uniformly random :math:`z`-subsets :math:`Z`.

    Raises
    ------
    ValueError
        If :math:`z>\min(n,62)`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.generators import gen_gnp, gen_interval
       >>> from pybiclique.util.stats import shatter_estimate
       >>> shatter_estimate(gen_gnp(512, 0.5, seed=0), 4, seed=0)
       16
       >>> shatter_estimate(gen_interval(512, seed=0), 4, seed=0) <= (4 + 1) ** 2
       True
    """
    z = check_natural(z, 'z', minimum=1)
    if z > min(g.n, 62):
        raise ValueError(f'Parameter z must be <= min(n, 62), got z={z} and n={g.n}.')
    rng = np.random.default_rng(seed)
    adjacency = g.adjacency_matrix().astype(np.int64).tocsc()
    powers = np.left_shift(np.int64(1), np.arange(z, dtype=np.int64))
    best = 0
    for _ in range(samples):
        Z = rng.choice(g.n, size=z, replace=False)
        codes = np.asarray(adjacency[:, Z] @ powers).reshape(-1)
        best = max(best, int(np.unique(codes).size))
    return best
