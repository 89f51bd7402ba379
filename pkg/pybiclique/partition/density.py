# #############################################################################
# density.py
# ==========
# #############################################################################

r"""
Density-aware biclique partitioner based on entropy slicing.
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import List, Optional, Tuple, Union

import numpy as np
from numba import njit
from scipy.special import gammaln

from pybiclique.core.graph import Graph
from pybiclique.core.partition import BicliquePartition, PartitionBuilder
from pybiclique.core.partitioner import GraphPartitioner
from pybiclique.core.tournament import Tournament, make_almost_regular
from pybiclique.math.combinatorics import largest_below
from pybiclique.math.entropy import binary_entropy
from pybiclique.partition.basic import Block, TracePartitioner, group_by_vertex, part_pairs, within_part_block
from pybiclique.util.misc import ceil_div

MIN_THRESHOLD = Fraction(2)
MAX_CALIBRATED_PART_SIZE = 128


@dataclass
class SliceTable:
    r"""
    Lookup table of maximal window lengths.

    Attributes
    ----------
    n: int
        Number of vertices of the host graph.
    r: int
        Part size.
    threshold: Fraction
        Effective threshold, :math:`T=\max(n/r^4, 2)` unless given explicitly.
    nominal: Fraction
        Nominal threshold :math:`n/r^4`.
    max_len: np.ndarray
        ``max_len[y]`` (:math:`0\leq y\leq r`) is the largest :math:`x\leq n` (or the cap given to
        :py:func:`~pybiclique.partition.density.build_slice_table`) with :math:`\binom{x}{y}<T`.
    """
    n: int
    r: int
    threshold: Fraction
    nominal: Fraction
    max_len: np.ndarray

    def capped(self, size: int) -> np.ndarray:
        r"""
        Window lengths capped at the size of a part.
        """
        return np.minimum(self.max_len, size).astype(np.int64)

    def slack_nonincreasing(self) -> bool:
        r"""
        Check that :math:`\text{max\_len}(y)-y` is nonincreasing in :math:`y`.

        Since :math:`\binom{y+z}{z}` is increasing in :math:`y` at fixed :math:`z`, this holds for every table. It is the
        property the one-pass slicer relies on.
        """
        slack = self.max_len[1:] - np.arange(1, self.r + 1)
        return bool(np.all(np.diff(slack) <= 0))

    def nonincreasing_prefix(self) -> bool:
        r"""
        Check that ``max_len`` is nonincreasing on the prefix of weights :math:`y\geq 1` where
        :math:`\text{max\_len}(y)\geq 2y`.
        """
        y = np.arange(1, self.r + 1)
        wide = self.max_len[1:] >= 2 * y
        stop = int(np.argmin(wide)) if not wide.all() else wide.size
        return bool(np.all(np.diff(self.max_len[1:stop + 1]) <= 0)) if stop > 1 else True


def slice_threshold(n: int, r: int) -> Tuple[Fraction, Fraction]:
    r"""
    Effective and nominal thresholds :math:`(\max(n/r^4,2),\, n/r^4)`.

    The effective threshold is floored at 2, the smallest value for which windows of length one are always admissible.
    """
    nominal = Fraction(n, r ** 4)
    return max(nominal, MIN_THRESHOLD), nominal


def build_slice_table(n: int, r: int, threshold: Optional[Union[Fraction, int]] = None,
                      cap: Optional[int] = None) -> SliceTable:
    r"""
    Tabulate the maximal window lengths of the entropy slicer.

    Parameters
    ----------
    n: int
        Number of vertices.
    r: int
        Part size (:math:`r\geq 1`).
    threshold: Optional[Union[Fraction, int]]
        Threshold :math:`T>1`. Defaults to :math:`\max(n/r^4,2)`.
    cap: Optional[int]
        Largest tabulated window length. Defaults to :math:`n`.

    Returns
    -------
    :py:class:`~pybiclique.partition.density.SliceTable`
        Table with ``max_len[y]`` for :math:`0\leq y\leq r`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.density import build_slice_table
       >>> table = build_slice_table(2 ** 20, 1)
       >>> table.threshold, int(table.max_len[1])
       (Fraction(1048576, 1), 1048575)
       >>> table = build_slice_table(2 ** 16, 4)
       >>> table.max_len.tolist()
       [65536, 255, 23, 12, 10]
       >>> table.slack_nonincreasing(), table.nonincreasing_prefix()
       (True, True)
       >>> build_slice_table(2 ** 14, 417).max_len[:4].tolist()
       [16384, 1, 2, 3]
       >>> build_slice_table(2 ** 14, 6, threshold=21, cap=6).max_len.tolist()
       [6, 6, 6, 6, 6, 6, 6]

    Notes
    -----
    Binomials are accumulated incrementally and compared to the exact rational threshold; the scan stops at the first
    value reaching it, so values above the threshold are never computed.
    """
    if r < 1:
        raise ValueError(f'Part size must be at least 1, got {r}.')
    effective, nominal = slice_threshold(n, r)
    if threshold is not None:
        effective = Fraction(threshold)
        if effective <= 1:
            raise ValueError(f'Slicing threshold must be larger than 1, got {threshold}.')
    cap = n if cap is None else cap
    max_len = np.array([largest_below(y, effective, cap) for y in range(r + 1)], dtype=np.int64)
    return SliceTable(n=n, r=r, threshold=effective, nominal=nominal, max_len=max_len)


@njit
def _slice_kernel(positions, indptr, part_size, max_len, keep_empty):
    groups = indptr.size - 1
    capacity = 2 * positions.size + groups
    owner = np.empty(capacity, dtype=np.int64)
    lo = np.empty(capacity, dtype=np.int64)
    hi = np.empty(capacity, dtype=np.int64)
    first = np.empty(capacity, dtype=np.int64)
    count = np.empty(capacity, dtype=np.int64)
    out = 0
    for g in range(groups):
        idx = indptr[g]
        stop = indptr[g + 1]
        a = 0
        while a < part_size:
            k = 0
            begin = idx
            while idx < stop and positions[idx] - a + 1 <= max_len[k + 1]:
                k += 1
                idx += 1
            nxt = positions[idx] if idx < stop else part_size
            b = min(a - 1 + max_len[k], nxt - 1, part_size - 1)
            if k > 0 or keep_empty:
                owner[out] = g
                lo[out] = a
                hi[out] = b
                first[out] = begin
                count[out] = k
                out += 1
            a = b + 1
    return owner[:out], lo[:out], hi[:out], first[:out], count[:out]


@dataclass
class SliceSet:
    r"""
    Windows of one trace.

    Attributes
    ----------
    windows: np.ndarray
        Array of shape ``(q, 2)`` of inclusive windows ``(a, b)``, in increasing order.
    counts: np.ndarray
        Number of neighbours inside every window.
    """
    windows: np.ndarray
    counts: np.ndarray

    def tiles(self, part_size: int) -> bool:
        r"""
        Check that the windows are contiguous, disjoint and cover :math:`[0,\text{part\_size})`.
        """
        if self.windows.shape[0] == 0:
            return part_size == 0
        a, b = self.windows[:, 0], self.windows[:, 1]
        return bool(a[0] == 0 and b[-1] == part_size - 1 and np.all(a[1:] == b[:-1] + 1) and np.all(b >= a))

    def to_list(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in self.windows]


def slice_trace(positions: np.ndarray, part_size: int, table: SliceTable) -> SliceSet:
    r"""
    Cut the trace of a vertex on a part into entropy slices.

    Every window is extended greedily to the largest end :math:`b` such that :math:`\binom{b-a+1}{y}<T`, where :math:`y`
    is the number of neighbours inside :math:`[a,b]`. Because :math:`\text{max\_len}(y)-y` is nonincreasing, one pass
    over the sorted positions suffices: a neighbour enters the window as long as the window length up to it stays
    within ``max_len`` of the new weight.

    Parameters
    ----------
    positions: np.ndarray
        Sorted positions (in :math:`[0,\text{part\_size})`) of the neighbours of the vertex within the part.
    part_size: int
        Size of the part.
    table: :py:class:`~pybiclique.partition.density.SliceTable`
        Lookup table built for the part size.

    Returns
    -------
    :py:class:`~pybiclique.partition.density.SliceSet`
        All windows, including those without neighbours.

    Examples
    --------

    .. doctest::

       >>> import numpy as np
       >>> from pybiclique.core.oracle import reference_slices
       >>> from pybiclique.partition.density import build_slice_table, slice_trace
       >>> table = build_slice_table(2 ** 16, 8)
       >>> slice_trace(np.array([], dtype=np.int64), 8, table).to_list()
       [(0, 7)]
       >>> slice_trace(np.arange(8), 8, table).to_list()
       [(0, 7)]
       >>> rng = np.random.default_rng(0)
       >>> checks = []
       >>> for _ in range(200):
       ...     trace = np.flatnonzero(rng.random(8) < 0.5)
       ...     got = slice_trace(trace, 8, table)
       ...     checks.append(got.tiles(8) and got.to_list() == reference_slices(trace, 8, table.threshold))
       >>> all(checks)
       True
    """
    positions = np.asarray(positions, dtype=np.int64)
    indptr = np.array([0, positions.size], dtype=np.int64)
    _, lo, hi, _, count = _slice_kernel(positions, indptr, part_size, table.capped(part_size), True)
    return SliceSet(windows=np.stack([lo, hi], axis=1), counts=count)


def density_part_size(n: int, gamma: float) -> float:
    r"""
    Unclamped part size :math:`\lg^2 n/h_2(\gamma)` (``inf`` if :math:`h_2(\gamma)=0`).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.density import density_part_size
       >>> int(density_part_size(2 ** 14, 0.1))
       417
    """
    h = binary_entropy(gamma)
    if h == 0:
        return math.inf
    return math.log2(n) ** 2 / h if n > 1 else 0.


def trace_weight_model(n: int, r: int, gamma: float) -> float:
    r"""
    Expected weight of the partition of :math:`G(n,\gamma)` with parts of size :math:`r` and one window per part.

    Every part :math:`P_i` is in charge of :math:`N=r(\lceil n/r\rceil-1)/2` vertices on average. Each of them with a
    nonempty trace adds one to the weight, each distinct trace :math:`S` adds :math:`|S|` once, and the edges inside
    the part add two each:

    .. math::

       \left\lceil\frac{n}{r}\right\rceil\left(N\left(1-(1-\gamma)^r\right)+\sum_{y=1}^{r}y\binom{r}{y}
       \left(1-\left(1-\gamma^y(1-\gamma)^{r-y}\right)^N\right)+\gamma r(r-1)\right).

    With :math:`r` given by :py:func:`~pybiclique.partition.basic.ep_part_size`, this is the expected weight of
    :py:class:`~pybiclique.partition.basic.TracePartitioner`.

    Parameters
    ----------
    n: int
        Number of vertices.
    r: int
        Part size, in :math:`[1,n]`.
    gamma: float
        Edge density, in :math:`(0,1)`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.basic import TracePartitioner
       >>> from pybiclique.partition.density import trace_weight_model
       >>> from pybiclique.util.generators import gen_gnp
       >>> g = gen_gnp(2048, 0.1, seed=1)
       >>> predicted = trace_weight_model(2048, 8, 0.1)
       >>> abs(TracePartitioner(part_size=8)(g).weight() / predicted - 1) < 0.03
       True
    """
    if not 0 < gamma < 1:
        raise ValueError(f'Edge density must be in (0,1), got {gamma}.')
    if not 1 <= r <= n:
        raise ValueError(f'Part size must be in [1, {n}], got {r}.')
    count = ceil_div(n, r)
    N = r * (count - 1) / 2
    y = np.arange(1, r + 1, dtype=np.float64)
    log_p = y * math.log(gamma) + (r - y) * math.log1p(-gamma)
    with np.errstate(divide='ignore', under='ignore'):
        appear = -np.expm1(N * np.log1p(-np.exp(log_p)))
        log_terms = gammaln(r + 1) - gammaln(y + 1) - gammaln(r - y + 1) + np.log(y) + np.log(appear)
    buckets = float(np.exp(log_terms).sum())
    pairs = N * -math.expm1(r * math.log1p(-gamma))
    inside = gamma * r * (r - 1)
    return count * (pairs + buckets + inside)


def calibrated_part_size(n: int, gamma: float, max_part_size: int = MAX_CALIBRATED_PART_SIZE) -> int:
    r"""
    Part size minimising :py:func:`~pybiclique.partition.density.trace_weight_model` over
    :math:`1\leq r\leq\min(n,\text{max\_part\_size})` (the least one among ties).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.partition.basic import ep_part_size
       >>> from pybiclique.partition.density import calibrated_part_size, trace_weight_model
       >>> n = 2 ** 14
       >>> [calibrated_part_size(n, gamma) > ep_part_size(n) for gamma in (0.1, 0.25, 0.9)]
       [True, True, True]
       >>> r = calibrated_part_size(n, 0.1)
       >>> trace_weight_model(n, r, 0.1) < trace_weight_model(n, ep_part_size(n), 0.1)
       True
    """
    sizes = range(1, min(n, max_part_size) + 1)
    weights = [trace_weight_model(n, r, gamma) for r in sizes]
    return int(np.argmin(weights)) + 1


def whole_part_threshold(r: int) -> Fraction:
    r"""
    Smallest threshold :math:`\binom{r}{\lfloor r/2\rfloor}+1` for which every window of a part of size :math:`r` is
    admissible, so that the slicer returns the whole part.
    """
    return Fraction(math.comb(r, r // 2) + 1)


def _density_part(g: Graph, T: Tournament, r: int, table: SliceTable, i: int) -> List[Block]:
    start, stop = i * r, min(g.n, (i + 1) * r)
    size = stop - start
    pos, v = part_pairs(g.indptr, g.indices, start, stop)
    blocks = []
    charged = np.asarray(T.beats(v // r, i), dtype=bool)
    if charged.any():
        verts, indptr, positions = group_by_vertex(pos[charged], v[charged])
        owner, lo, hi, first, count = _slice_kernel(positions, indptr, size, table.capped(size), False)
        for length in np.unique(count):
            sel = np.flatnonzero(count == length)
            gather = first[sel][:, None] + np.arange(length, dtype=np.int64)
            rows = np.concatenate([lo[sel][:, None], hi[sel][:, None], positions[gather]], axis=1)
            keys, inverse = np.unique(rows, axis=0, return_inverse=True)
            inverse = np.asarray(inverse).reshape(-1)
            members = verts[owner[sel]]
            order = np.lexsort((members, inverse))
            left_counts = np.full(keys.shape[0], length, dtype=np.int64)
            left_ids = start + keys[:, 2:].reshape(-1)
            right_counts = np.bincount(inverse, minlength=keys.shape[0]).astype(np.int64)
            blocks.append((left_counts, left_ids, right_counts, members[order]))
    blocks.append(within_part_block(start, stop, pos, v))
    return blocks


class DensityPartitioner(GraphPartitioner):
    r"""
    Density-aware biclique partitioner, in time :math:`O(m)`.

    This class is also accessible via the alias ``DP()``.

    Notes
    -----
    For a graph of edge density :math:`\gamma`, the vertex set is split into consecutive parts of size :math:`r` with
    an almost-regular tournament between them. The trace :math:`N(v)\cap P_i` of every vertex :math:`v` in charge of
    :math:`P_i` is cut into windows :math:`[a,b]` whose number of neighbours :math:`y` keeps
    :math:`\binom{b-a+1}{y}` below a threshold :math:`T` (see :py:func:`~pybiclique.partition.density.slice_trace`).
    Vertices are bucketed by the key :math:`(a,b,S)` where :math:`S` is their trace on the window, and every bucket
    :math:`A_i(a,b,S)` with :math:`S\neq\emptyset` yields the biclique :math:`(S,A_i(a,b,S))`. Edges inside a part
    are emitted as single-edge bicliques. Buckets are emitted part by part, grouped by the size of :math:`S`, then in
    increasing :math:`(a,b,S)` order.

    The parameters are chosen as follows (the choice is recorded in :py:attr:`regime`):

    * ``theorem``: :math:`r=\lfloor\lg^2 n/h_2(\gamma)\rfloor` (clamped to :math:`[2,n]`) and :math:`T=n/r^4`, for
      which the weight is :math:`(\frac{1}{2}+o(1))h_2(\gamma)n^2/\lg n`. This requires :math:`n/r^4\geq 2`, that is
      :math:`n\geq 2\lg^8 n`: no graph that fits in memory qualifies.
    * ``calibrated``: below that size, :math:`r` minimises the expected weight on :math:`G(n,\gamma)` given by
      :py:func:`~pybiclique.partition.density.trace_weight_model`, and :math:`T` is
      :py:func:`~pybiclique.partition.density.whole_part_threshold`, so that every trace is one window. The
      candidates include the part size of :py:class:`~pybiclique.partition.basic.TracePartitioner`.
    * ``manual``: ``part_size`` and/or ``threshold`` were given. A missing threshold is :math:`n/r^4`, floored at 2
      with a ``RuntimeWarning`` when smaller.
    * ``degenerate``: :math:`h_2(\gamma)=0` (complete graphs): a single part, one biclique per edge.

    When :math:`\lg^2 n/h_2(\gamma)<2` the method falls back to
    :py:class:`~pybiclique.partition.basic.TracePartitioner` with a ``RuntimeWarning`` (regime ``ep``).

    Examples
    --------

    .. doctest::

       >>> import warnings
       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.partition import verify_partition
       >>> from pybiclique.partition.basic import TracePartitioner
       >>> from pybiclique.partition.density import DensityPartitioner
       >>> from pybiclique.util.generators import gen_gnm, gen_gnp
       >>> g = gen_gnp(512, 0.1, seed=1)
       >>> partitioner = DensityPartitioner()
       >>> p = partitioner(g)
       >>> verify_partition(g, p).ok, partitioner.regime
       (True, 'calibrated')
       >>> g = gen_gnm(2048, int(0.9 * 2048 * 2047 / 2), seed=1)
       >>> p = DensityPartitioner()(g)
       >>> verify_partition(g, p).ok, p.weight() < TracePartitioner()(g).weight()
       (True, True)
       >>> with warnings.catch_warnings():
       ...     warnings.simplefilter('ignore')
       ...     p = DensityPartitioner(part_size=64)(g)
       >>> verify_partition(g, p).ok
       True
       >>> len(DensityPartitioner()(Graph.empty(64)))
       0
       >>> k = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
       >>> with warnings.catch_warnings():
       ...     warnings.simplefilter('ignore')
       ...     len(DensityPartitioner()(k))
       15
    """

    def __init__(self, part_size: Optional[int] = None, threshold: Optional[Union[Fraction, int]] = None,
                 n_jobs: int = 1, joblib_backend: str = 'loky', verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        part_size: Optional[int]
            Part size :math:`r`. Chosen from the graph if ``None`` (see Notes).
        threshold: Optional[Union[Fraction, int]]
            Slicing threshold :math:`T>1`. Chosen from the graph if ``None`` (see Notes).
        n_jobs: int
            Number of workers for the per-part loop.
        joblib_backend: str
            Joblib backend.
        verbose: Optional[int]
            Print a progress line every ``verbose`` parts.
        """
        super(DensityPartitioner, self).__init__(n_jobs=n_jobs, joblib_backend=joblib_backend, verbose=verbose)
        if part_size is not None and part_size < 1:
            raise ValueError(f'Part size must be at least 1, got {part_size}.')
        if threshold is not None and Fraction(threshold) <= 1:
            raise ValueError(f'Slicing threshold must be larger than 1, got {threshold}.')
        self.part_size = part_size
        self.threshold = threshold
        self.table: Optional[SliceTable] = None
        self.regime: Optional[str] = None

    def _manual_table(self, g: Graph, gamma: float) -> SliceTable:
        if self.part_size is not None:
            r = min(self.part_size, g.n)
        else:
            raw = density_part_size(g.n, gamma)
            r = g.n if math.isinf(raw) else int(min(max(math.floor(raw), 2), g.n))
        table = build_slice_table(g.n, r, threshold=self.threshold)
        if self.threshold is None and table.nominal < MIN_THRESHOLD:
            warnings.warn(f'Slicing threshold n/r^4={float(table.nominal):.3g} is below 2 for n={g.n}, r={r}: '
                          f'flooring it at 2.', RuntimeWarning)
        return table

    def __call__(self, g: Graph) -> BicliquePartition:
        if not isinstance(g, Graph):
            raise TypeError(f'Input must be of type {Graph}, got {type(g).__name__}.')
        self.table, self.regime = None, None
        if g.m == 0:
            return BicliquePartition.empty(g.n)
        gamma = float(g.edge_density())
        if self.part_size is not None or self.threshold is not None:
            self.regime, self.table = 'manual', self._manual_table(g, gamma)
        else:
            raw = density_part_size(g.n, gamma)
            if raw < 2:
                warnings.warn(f'Part size {raw:.3g} < 2 for n={g.n}: using the trace partitioner.', RuntimeWarning)
                self.regime = 'ep'
                return TracePartitioner(n_jobs=self.n_jobs, joblib_backend=self.joblib_backend,
                                        verbose=self.verbose)(g)
            if math.isinf(raw):
                warnings.warn(f'Edge density {gamma} has zero entropy: one biclique per edge.', RuntimeWarning)
                self.regime, self.table = 'degenerate', build_slice_table(g.n, g.n)
            else:
                r = int(min(math.floor(raw), g.n))
                if slice_threshold(g.n, r)[1] >= MIN_THRESHOLD:
                    self.regime, self.table = 'theorem', build_slice_table(g.n, r)
                else:
                    r = calibrated_part_size(g.n, gamma)
                    self.regime = 'calibrated'
                    self.table = build_slice_table(g.n, r, threshold=whole_part_threshold(r), cap=r)
        r = self.table.r
        count = ceil_div(g.n, r)
        T = make_almost_regular(count)
        builder = PartitionBuilder(g.n)
        self.map_parts(partial(_density_part, g, T, r, self.table), count, builder)
        return builder.build()


DP = DensityPartitioner


def partition_density(g: Graph, part_size: Optional[int] = None,
                      threshold: Optional[Union[Fraction, int]] = None) -> BicliquePartition:
    r"""
    Functional interface to :py:class:`~pybiclique.partition.density.DensityPartitioner`.
    """
    return DensityPartitioner(part_size=part_size, threshold=threshold)(g)
