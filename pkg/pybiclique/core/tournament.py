# #############################################################################
# tournament.py
# =============
# #############################################################################

r"""
Tournaments over part indices.

A tournament orients every pair :math:`\{i,j\}` of indices; partitioners use it to decide which of two parts is in
charge of the edges between them. A tournament is *almost regular* if :math:`|d^+(i)-d^-(i)|\leq 1` for every
index :math:`i`. Orientations are evaluated arithmetically and never materialised.
"""

from abc import ABC, abstractmethod
from typing import Tuple, Union

import numpy as np

from pybiclique.util.misc import check_natural


class Tournament(ABC):
    r"""
    Base class for tournaments on :math:`\{0,\ldots,t-1\}`.

    Any subclass must implement the vectorised orientation oracle ``beats``.
    """

    def __init__(self, t: int):
        r"""
        Parameters
        ----------
        t: int
            Number of indices (at least 1).

        Raises
        ------
        ValueError
            If ``t == 0`` (empty tournament).
        """
        t = check_natural(t, 't')
        if t == 0:
            raise ValueError('Cannot build an empty tournament (t=0).')
        self.t = t

    @abstractmethod
    def beats(self, i: Union[int, np.ndarray], j: Union[int, np.ndarray]) -> Union[bool, np.ndarray]:
        r"""
        Orientation oracle :math:`R(i,j)`: ``True`` iff the arc :math:`i\to j` is present. ``False`` when ``i == j``.
        """
        pass

    def __call__(self, i: int, j: int) -> bool:
        return bool(self.beats(i, j))

    def outdegrees(self) -> np.ndarray:
        r"""
        Outdegrees of all indices (:math:`O(t^2)` scan).
        """
        idx = np.arange(self.t)
        return np.array([int(np.count_nonzero(self.beats(i, idx))) for i in range(self.t)], dtype=np.int64)


class CirculantTournament(Tournament):
    r"""
    Circulant almost-regular tournament.

    For odd :math:`t`, :math:`R(i,j)` iff :math:`(j-i) \bmod t\in\{1,\ldots,(t-1)/2\}`: every index has outdegree
    :math:`(t-1)/2`. For even :math:`t`, the circulant tournament on :math:`t+1` indices is built and index :math:`t` is
    deleted, which changes every degree by exactly one.

    This class is also accessible via the alias ``CT()``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.tournament import CirculantTournament
       >>> T = CirculantTournament(5)
       >>> T.outdegrees().tolist()
       [2, 2, 2, 2, 2]
       >>> T(0, 1), T(1, 0), T(0, 3)
       (True, False, False)
       >>> CirculantTournament(4).outdegrees().tolist()
       [2, 2, 1, 1]
    """

    def __init__(self, t: int):
        super(CirculantTournament, self).__init__(t)
        self.modulus = t if t % 2 == 1 else t + 1
        self.half = (self.modulus - 1) // 2

    def beats(self, i, j):
        delta = np.mod(np.subtract(j, i), self.modulus)
        return (delta >= 1) & (delta <= self.half)


CT = CirculantTournament


class ParityTournament(Tournament):
    r"""
    Parity tournament.

    With :math:`d_t(i,j)=\min(|i-j|,t-|i-j|)`, the arc :math:`i\to j` is present iff either :math:`i<j` and
    :math:`d_t(i,j)` is even, or :math:`i>j` and :math:`d_t(i,j)` is odd.

    Warnings
    --------
    This orientation is **not** almost regular in general: for :math:`t=3` it is transitive. It is provided for
    experimentation only; use :py:func:`~pybiclique.core.tournament.check_almost_regular` before relying on it.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.tournament import ParityTournament, check_almost_regular
       >>> check_almost_regular(ParityTournament(3))
       (False, 2)
    """

    def beats(self, i, j):
        i = np.asarray(i)
        j = np.asarray(j)
        gap = np.abs(i - j)
        dist = np.minimum(gap, self.t - gap)
        even = np.mod(dist, 2) == 0
        return ((i < j) & even) | ((i > j) & ~even)


def make_almost_regular(t: int) -> CirculantTournament:
    r"""
    Construct an almost-regular tournament on ``t`` indices.

    Parameters
    ----------
    t: int
        Number of indices, :math:`t\geq 1`.

    Returns
    -------
    :py:class:`~pybiclique.core.tournament.CirculantTournament`
        Tournament with :math:`|d^+(i)-d^-(i)|\leq 1` for all :math:`i`, evaluated in :math:`O(1)` per pair.

    Raises
    ------
    ValueError
        If ``t == 0``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.tournament import make_almost_regular, check_almost_regular
       >>> check_almost_regular(make_almost_regular(1))
       (True, 0)
       >>> check_almost_regular(make_almost_regular(4))
       (True, 1)
       >>> all(check_almost_regular(make_almost_regular(t))[0] for t in range(1, 513))
       True
       >>> make_almost_regular(0)
       Traceback (most recent call last):
       ...
       ValueError: Cannot build an empty tournament (t=0).
    """
    return CirculantTournament(t)


def check_almost_regular(T: Tournament) -> Tuple[bool, int]:
    r"""
    Scan all pairs of a tournament and compute its worst imbalance :math:`\max_i |d^+(i)-d^-(i)|`.

    Parameters
    ----------
    T: :py:class:`~pybiclique.core.tournament.Tournament`
        Tournament to check.

    Returns
    -------
    Tuple[bool, int]
        ``(ok, imbalance)`` with ``ok`` true iff the imbalance is at most 1 and the orientation is antisymmetric and
        total.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.tournament import CirculantTournament, check_almost_regular
       >>> check_almost_regular(CirculantTournament(7))
       (True, 0)
    """
    idx = np.arange(T.t)
    forward = np.asarray(T.beats(idx[:, None], idx[None, :]), dtype=bool)
    backward = forward.T
    off_diagonal = ~np.eye(T.t, dtype=bool)
    total = bool(np.all((forward ^ backward)[off_diagonal])) and not bool(np.any(np.diag(forward)))
    out = forward.sum(axis=1)
    imbalance = int(np.max(np.abs(2 * out - (T.t - 1)))) if T.t > 0 else 0
    return total and imbalance <= 1, imbalance
