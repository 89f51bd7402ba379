# #############################################################################
# partitioner.py
# ==============
# #############################################################################

r"""
Abstract classes for graph and hypergraph partitioners.
"""

import warnings
from abc import ABC, abstractmethod
from typing import Callable, Optional

import joblib as job
import numpy as np

from pybiclique.core.graph import Graph, Hypergraph
from pybiclique.core.partition import (BicliquePartition, DCliquePartition, PartitionBuilder, verify_dpartition,
                                       verify_partition)


class GraphPartitioner(ABC):
    r"""
    Base class for biclique partitioners.

    Any instance/subclass of this class must at least implement the abstract method ``__call__``, mapping a graph to a
    biclique partition of it. Partitioners whose construction splits the vertex set into independent parts may
    process these parts in parallel through :py:meth:`~pybiclique.core.partitioner.GraphPartitioner.map_parts`; the
    results are always merged by increasing part index, so the output does not depend on ``n_jobs``.
    """

    def __init__(self, n_jobs: int = 1, joblib_backend: str = 'loky', verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        n_jobs: int
            Number of workers for the per-part loop. ``n_jobs=-1`` uses all available cores, ``n_jobs=1`` runs
            sequentially.
        joblib_backend: str
            Joblib backend (`more details here <https://joblib.readthedocs.io/en/latest/generated/joblib.Parallel.html>`_).
        verbose: Optional[int]
            Print a progress line every ``verbose`` parts. If ``None`` does not print anything.
        """
        self.n_jobs = n_jobs
        self.joblib_backend = joblib_backend
        self.verbose = verbose
        super(GraphPartitioner, self).__init__()

    @abstractmethod
    def __call__(self, g: Graph) -> BicliquePartition:
        r"""
        Partition the edge set of ``g`` into bicliques.

        Parameters
        ----------
        g: :py:class:`~pybiclique.core.graph.Graph`
            Input graph.

        Returns
        -------
        :py:class:`~pybiclique.core.partition.BicliquePartition`
            Biclique partition of ``g``.
        """
        pass

    def map_parts(self, func: Callable, count: int, builder: PartitionBuilder) -> PartitionBuilder:
        r"""
        Evaluate ``func(i)`` for every part index ``i < count`` and append the returned blocks to ``builder``.

        ``func`` returns a list of blocks (see :py:meth:`~pybiclique.core.partition.PartitionBuilder.add_block`).
        """
        if self.n_jobs == 1:
            for i in range(count):
                builder.extend(func(i))
                if self.verbose is not None and (i + 1) % self.verbose == 0:
                    print(f'{type(self).__name__}: {i + 1}/{count} parts processed.')
        else:
            with job.Parallel(backend=self.joblib_backend, n_jobs=self.n_jobs, verbose=self.verbose or 0) as parallel:
                results = parallel(job.delayed(func)(i) for i in range(count))
            for blocks in results:
                builder.extend(blocks)
        return builder

    def verified(self, g: Graph) -> BicliquePartition:
        r"""
        Partition ``g`` and check the result with :py:func:`~pybiclique.core.partition.verify_partition`.

        Raises
        ------
        :py:class:`~pybiclique.core.partition.PartitionVerificationError`
            If the partition is not exact.
        """
        p = self(g)
        verify_partition(g, p).raise_if_failed()
        return p


class HypergraphPartitioner(ABC):
    r"""
    Base class for :math:`d`-clique partitioners of uniform hypergraphs.

    Any instance/subclass of this class must at least implement the abstract method ``__call__``.
    """

    def __init__(self, base: Optional[GraphPartitioner] = None, verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        base: Optional[GraphPartitioner]
            Biclique partitioner used at uniformity 2. Defaults to
            :py:class:`~pybiclique.partition.basic.TracePartitioner` with ``min_part_size=1``: link graphs are small,
            and parts of one vertex are lighter than one biclique per edge on them.
        verbose: Optional[int]
            Verbosity level.
        """
        if base is None:
            from pybiclique.partition.basic import TracePartitioner
            base = TracePartitioner(min_part_size=1)
        if not isinstance(base, GraphPartitioner):
            raise TypeError(f'base must be of type {GraphPartitioner}.')
        self.base = base
        self.verbose = verbose
        super(HypergraphPartitioner, self).__init__()

    @abstractmethod
    def __call__(self, h: Hypergraph) -> DCliquePartition:
        r"""
        Partition the edge set of ``h`` into :math:`d`-cliques.
        """
        pass

    def partition_graph(self, n: int, edges: np.ndarray) -> DCliquePartition:
        r"""
        Partition a graph given by its edge list with the base partitioner and view the result as 2-cliques.
        """
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', RuntimeWarning)
            p = self.base(Graph.from_edges(n, edges))
        return DCliquePartition.from_biclique_partition(p)

    def verified(self, h: Hypergraph) -> DCliquePartition:
        r"""
        Partition ``h`` and check the result with :py:func:`~pybiclique.core.partition.verify_dpartition`.
        """
        p = self(h)
        verify_dpartition(h, p).raise_if_failed()
        return p
