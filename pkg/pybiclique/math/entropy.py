# #############################################################################
# entropy.py
# ==========
# #############################################################################

r"""
Entropy functions governing information-optimal partition weights.
"""

import math
from numbers import Real
from typing import Union

import numpy as np


def binary_entropy(x: Real) -> float:
    r"""
    Binary entropy function.

    The binary entropy function is defined as:

    .. math::

       h_2(x) = -x\lg x - (1-x)\lg(1-x), \qquad x\in[0,1],

    with :math:`h_2(0)=h_2(1)=0` by continuity.

    Parameters
    ----------
    x: Real
        Probability (``float``, ``int`` or :py:class:`fractions.Fraction`).

    Returns
    -------
    float
        :math:`h_2(x)`, in bits.

    Raises
    ------
    ValueError
        If ``x`` is outside of :math:`[0,1]`.

    Examples
    --------

    .. doctest::

       >>> from fractions import Fraction
       >>> from pybiclique.math.entropy import binary_entropy
       >>> binary_entropy(0.5)
       1.0
       >>> binary_entropy(0), binary_entropy(1)
       (0.0, 0.0)
       >>> abs(binary_entropy(Fraction(1, 4)) - 0.811278124459) < 1e-9
       True
       >>> binary_entropy(1.5)
       Traceback (most recent call last):
       ...
       ValueError: Parameter x must be in [0,1], got 1.5.

    Notes
    -----
    :math:`h_2(\gamma)` is the per-pair information content of a graph of edge density :math:`\gamma`: the weight of an
    optimal biclique partition of a typical such graph scales like :math:`\frac{h_2(\gamma)}{2}\frac{n^2}{\lg n}`.
    """
    if not 0 <= x <= 1:
        raise ValueError(f'Parameter x must be in [0,1], got {x}.')
    x = float(x)
    if x == 0. or x == 1.:
        return 0.
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def binary_entropy_array(x: Union[np.ndarray, list]) -> np.ndarray:
    r"""
    Vectorised :py:func:`~pybiclique.math.entropy.binary_entropy`.

    Examples
    --------

    .. doctest::

       >>> import numpy as np
       >>> from pybiclique.math.entropy import binary_entropy_array
       >>> np.round(binary_entropy_array([0, 0.25, 0.5, 1]), 6).tolist()
       [0.0, 0.811278, 1.0, 0.0]
    """
    x = np.asarray(x, dtype=np.float64)
    if np.any((x < 0) | (x > 1)):
        raise ValueError('Entries of x must be in [0,1].')
    out = np.zeros_like(x)
    inner = (x > 0) & (x < 1)
    xi = x[inner]
    out[inner] = -xi * np.log2(xi) - (1 - xi) * np.log2(1 - xi)
    return out


def entropy_weight_target(n: int, gamma: Real) -> float:
    r"""
    Information-theoretic weight target :math:`\frac{h_2(\gamma)}{2}\frac{n^2}{\lg n}`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.math.entropy import entropy_weight_target
       >>> entropy_weight_target(1024, 0.5)
       52428.8
    """
    if n < 2:
        return 0.
    return binary_entropy(gamma) * n ** 2 / (2 * math.log2(n))


def load_target(n: int) -> float:
    r"""
    Load target :math:`\frac{n}{2\lg n}` of an optimal load-balanced biclique partition.
    """
    if n < 2:
        return 0.
    return n / (2 * math.log2(n))
