# #############################################################################
# densest.py
# ==========
# #############################################################################

r"""
Densest subgraph approximation on the compact representation.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np
from pandas import DataFrame

from pybiclique.compress.succinct import CBRepr
from pybiclique.core.graph import Graph
from pybiclique.core.solver import GenericIterativeAlgorithm


@dataclass
class DensestResult:
    r"""
    Outcome of :py:class:`~pybiclique.opt.densest.ThresholdPeeling`.

    Attributes
    ----------
    vertices: np.ndarray
        Sorted vertex set of the returned subgraph (empty if the graph has no edges).
    density: Fraction
        Its degree density :math:`|E(G[S])|/|S|`.
    rounds: int
        Number of rounds executed.
    thresholds: List[float]
        Degree threshold used at every round.
    diagnostics: Optional[DataFrame]
        Per-round trace.
    """
    vertices: np.ndarray
    density: Fraction
    rounds: int
    thresholds: List[float] = field(default_factory=list)
    diagnostics: Optional[DataFrame] = None

    def verify(self, g: Graph) -> bool:
        r"""
        Recount the density of :py:attr:`vertices` on the original graph and compare it to :py:attr:`density`.
        """
        if self.vertices.size == 0:
            return self.density == 0
        return Fraction(g.induced_edge_count(self.vertices), int(self.vertices.size)) == self.density


class ThresholdPeeling(GenericIterativeAlgorithm):
    r"""
    Threshold peeling :math:`2\alpha`-approximation of the densest subgraph.

    This class is also accessible via the alias ``TP()``.

    Notes
    -----
    Starting with the threshold :math:`t=1`, every round computes the live degrees of all vertices in :math:`O(w)`
    (:py:meth:`~pybiclique.compress.succinct.CBRepr.degrees_all`), records the density
    :math:`\sum_v \deg(v)/(2|V_{\text{live}}|)` of the live subgraph and keeps the live vertex set if it is the densest
    seen so far, then lazily removes every live vertex of degree smaller than :math:`t` (in increasing id order) and
    multiplies :math:`t` by :math:`\alpha`. The algorithm stops when no vertex is left, after at most
    :math:`\lceil\log_\alpha n\rceil+1` rounds, i.e. in time :math:`O(w\log n/\lg\alpha)`.

    Let :math:`S^\star` be a densest subgraph, of density :math:`\delta^\star`. Every vertex of :math:`S^\star` has at
    least :math:`\delta^\star` neighbours in :math:`S^\star`, so no vertex of :math:`S^\star` is removed in a round
    with :math:`t\leq\delta^\star`. After the last such round, the live subgraph contains :math:`S^\star` and all its
    vertices have degree at least :math:`t>\delta^\star/\alpha`: its density, measured at the next round, is at least
    :math:`\delta^\star/(2\alpha)`.

    The first round measures the whole graph, so the returned density is never below :math:`m/n`. The diagnostics also
    record the density right after the removals of every round.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.compress.succinct import build_cb
       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.opt.densest import ThresholdPeeling
       >>> from pybiclique.partition.basic import partition_trivial
       >>> triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
       >>> result, converged, diagnostics = ThresholdPeeling(build_cb(partition_trivial(triangle)), alpha=2).iterate()
       >>> result.vertices.tolist(), result.density, result.rounds, converged
       ([0, 1, 2], Fraction(1, 1), 3, True)
       >>> list(diagnostics.columns)
       ['Iter', 'Threshold', 'Live', 'Density', 'Post-removal density', 'Best density']
       >>> result.verify(triangle)
       True
    """

    columns = ('Threshold', 'Live', 'Density', 'Post-removal density', 'Best density')

    def __init__(self, cb: CBRepr, alpha: float = 2., verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        cb: :py:class:`~pybiclique.compress.succinct.CBRepr`
            Compact representation without removed vertices. It is not modified: the algorithm works on a copy.
        alpha: float
            Threshold growth factor :math:`\alpha>1`.
        verbose: Optional[int]
            Print diagnostics every ``verbose`` rounds. If ``None`` does not print anything.

        Raises
        ------
        ValueError
            If :math:`\alpha\leq 1` or ``cb`` has removed vertices.
        """
        if not isinstance(cb, CBRepr):
            raise TypeError(f'Expected a {CBRepr}, got {type(cb).__name__}.')
        if not alpha > 1:
            raise ValueError(f'Parameter alpha must be > 1, got {alpha}.')
        if cb.live_count() != cb.n:
            raise ValueError('Threshold peeling needs a compact representation without removed vertices.')
        self.alpha = float(alpha)
        self.n = cb.n
        max_iter = int(math.ceil(math.log(max(cb.n, 2)) / math.log(self.alpha))) + 2
        init_iterand = {'cb': cb, 'threshold': 1., 'best_density': None,
                        'best_vertices': np.zeros(0, dtype=np.int64)}
        super(ThresholdPeeling, self).__init__(init_iterand=init_iterand, max_iter=max_iter, min_iter=0,
                                               accuracy_threshold=0, verbose=verbose)

    def copy_iterand(self, iterand: dict) -> dict:
        return dict(iterand, cb=iterand['cb'].copy())

    def update_iterand(self) -> Tuple[dict, dict]:
        state = self.iterand
        cb = state['cb']
        threshold = state['threshold']
        degrees = cb.degrees_all()
        live = cb.live_count()
        density = Fraction(int(degrees.sum()), 2 * live)
        if state['best_density'] is None or density > state['best_density']:
            state['best_density'] = density
            state['best_vertices'] = cb.live_vertices()
        cb.lazy_remove_many(np.flatnonzero((degrees < threshold) & ~cb.removed))
        remaining = cb.live_count()
        post = Fraction(int(cb.degrees_all().sum()), 2 * remaining) if remaining > 0 else Fraction(0)
        self.thresholds.append(threshold)
        state['threshold'] = threshold * self.alpha
        return state, {'Threshold': threshold, 'Live': live, 'Density': float(density),
                       'Post-removal density': float(post), 'Best density': float(state['best_density'])}

    def postprocess_iterand(self) -> DensestResult:
        density = self.iterand['best_density']
        vertices = self.iterand['best_vertices']
        if density is None or density == 0:
            density, vertices = Fraction(0), np.zeros(0, dtype=np.int64)
        return DensestResult(vertices=vertices, density=density, rounds=self.iter, thresholds=list(self.thresholds),
                             diagnostics=self.diagnostics)

    def stopping_metric(self):
        return self.iterand['cb'].live_count()

    def reset(self):
        super(ThresholdPeeling, self).reset()
        self.thresholds: List[float] = []


TP = ThresholdPeeling


def densest_approx(cb: CBRepr, alpha: float = 2., verbose: Optional[int] = None) -> DensestResult:
    r"""
    Functional interface to :py:class:`~pybiclique.opt.densest.ThresholdPeeling`.

    Examples
    --------

    .. doctest::

       >>> from fractions import Fraction
       >>> from pybiclique.compress.succinct import build_cb
       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.oracle import brute_densest
       >>> from pybiclique.opt.densest import densest_approx
       >>> from pybiclique.partition.basic import partition_trivial
       >>> star = Graph.from_edges(10, [(0, v) for v in range(1, 10)])
       >>> result = densest_approx(build_cb(partition_trivial(star)), alpha=2)
       >>> result.density >= brute_densest(star)[0] / 4
       True
       >>> empty = densest_approx(build_cb(partition_trivial(Graph.empty(5))), alpha=2)
       >>> empty.density, empty.vertices.tolist()
       (Fraction(0, 1), [])
       >>> densest_approx(build_cb(partition_trivial(star)), alpha=1)
       Traceback (most recent call last):
       ...
       ValueError: Parameter alpha must be > 1, got 1.
    """
    return ThresholdPeeling(cb, alpha=alpha, verbose=verbose).iterate()[0]
