# #############################################################################
# solver.py
# =========
# #############################################################################

r"""
Base class for round-based algorithms.
"""

from abc import ABC, abstractmethod
from copy import deepcopy
from typing import Any, List, Optional, Sequence, Tuple

from pandas import DataFrame


class GenericIterativeAlgorithm(ABC):
    r"""
    Base class for algorithms proceeding in rounds.

    A subclass describes one round in :py:meth:`update_iterand`, which returns the new state together with a record of
    the round (a mapping from the names in :py:attr:`columns` to values), and measures the work left in
    :py:meth:`stopping_metric`. :py:meth:`iterate` runs rounds until the stopping metric falls to
    ``accuracy_threshold`` or below (and at least ``min_iter`` rounds have been run), or ``max_iter`` rounds have been
    run. The round records are returned as a :py:class:`pandas.DataFrame` with one row per round.

    The initial state is never modified: every run starts from :py:meth:`copy_iterand` of it, so that
    :py:meth:`iterate` may be called several times.
    """

    columns: Sequence[str] = ()

    def __init__(self, init_iterand: Any, max_iter: int = 500, min_iter: int = 0, accuracy_threshold: float = 0,
                 verbose: Optional[int] = None):
        r"""
        Parameters
        ----------
        init_iterand: Any
            Initial state.
        max_iter: int
            Maximum number of rounds.
        min_iter: int
            Minimum number of rounds.
        accuracy_threshold: float
            Stop once the stopping metric is at most this value.
        verbose: Optional[int]
            Print the record of every ``verbose``-th round. If ``None`` does not print anything.

        Raises
        ------
        ValueError
            If ``min_iter > max_iter`` or ``verbose`` is not a positive integer.
        """
        if not 0 <= min_iter <= max_iter:
            raise ValueError(f'Expected 0 <= min_iter <= max_iter, got min_iter={min_iter}, max_iter={max_iter}.')
        if verbose is not None and verbose < 1:
            raise ValueError(f'Parameter verbose must be a positive integer or None, got {verbose}.')
        self.max_iter = max_iter
        self.min_iter = min_iter
        self.accuracy_threshold = accuracy_threshold
        self.verbose = verbose
        self.init_iterand = init_iterand
        self.reset()

    def reset(self):
        r"""
        Forget the outcome of the previous run.
        """
        self.iter = 0
        self.iterand = None
        self.converged = False
        self.diagnostics: Optional[DataFrame] = None
        self._records: List[dict] = []

    def copy_iterand(self, iterand: Any) -> Any:
        r"""
        Copy of the initial state a run starts from. Defaults to a deep copy.
        """
        return deepcopy(iterand)

    def iterate(self) -> Tuple[Any, bool, DataFrame]:
        r"""
        Run the algorithm.

        Returns
        -------
        Tuple[Any, bool, DataFrame]
            Outcome (see :py:meth:`postprocess_iterand`), convergence flag and per-round diagnostics.
        """
        self.reset()
        self.iterand = self.copy_iterand(self.init_iterand)
        while self.iter < self.min_iter or (
                self.iter < self.max_iter and self.stopping_metric() > self.accuracy_threshold):
            self.iterand, record = self.update_iterand()
            self._records.append(dict(Iter=self.iter, **record))
            if self.verbose is not None and self.iter % self.verbose == 0:
                self.print_diagnostics()
            self.iter += 1
        self.converged = self.stopping_metric() <= self.accuracy_threshold
        self.diagnostics = DataFrame(self._records, columns=['Iter', *self.columns])
        self.iterand = self.postprocess_iterand()
        return self.iterand, self.converged, self.diagnostics

    def postprocess_iterand(self) -> Any:
        return self.iterand

    def print_diagnostics(self):
        r"""
        Print the record of the last round.
        """
        print(self._records[-1])

    @abstractmethod
    def update_iterand(self) -> Tuple[Any, dict]:
        r"""
        Run one round.

        Returns
        -------
        Tuple[Any, dict]
            New state and record of the round.
        """
        pass

    @abstractmethod
    def stopping_metric(self) -> float:
        r"""
        Work left, compared to ``accuracy_threshold``.
        """
        pass
