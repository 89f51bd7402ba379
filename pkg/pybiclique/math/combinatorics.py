# #############################################################################
# combinatorics.py
# ================
# #############################################################################

r"""
Exact combinatorial helpers: saturating binomials, multinomials and weak compositions.

All quantities are exact Python integers; thresholds are compared as exact rationals.
"""

import math
from fractions import Fraction
from typing import Iterator, Sequence, Tuple, Union


def saturating_binomial(x: int, y: int, cap: Union[int, Fraction]) -> int:
    r"""
    Binomial coefficient :math:`\binom{x}{y}` saturated at ``cap``.

    The product is accumulated incrementally and the computation stops as soon as the running value reaches ``cap``,
    so values above the threshold are never computed exactly.

    Parameters
    ----------
    x, y: int
        Binomial arguments (:math:`\binom{x}{y}=0` if :math:`y>x` or :math:`y<0`).
    cap: Union[int, Fraction]
        Saturation threshold.

    Returns
    -------
    int
        :math:`\binom{x}{y}` if it is smaller than ``cap``, ``ceil(cap)`` otherwise.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.math.combinatorics import saturating_binomial
       >>> saturating_binomial(10, 3, 1000)
       120
       >>> saturating_binomial(100, 50, 10 ** 6)
       1000000
       >>> saturating_binomial(3, 5, 10)
       0
    """
    saturated = math.ceil(cap)
    if y < 0 or y > x:
        return 0
    y = min(y, x - y)
    value = 1
    for j in range(1, y + 1):
        # C(x-y+j, j) = C(x-y+j-1, j-1) * (x-y+j) / j, increasing in j
        value = value * (x - y + j) // j
        if value >= saturated:
            return saturated
    return value


def multinomial(d: int, x: Sequence[int]) -> int:
    r"""
    Multinomial coefficient :math:`\frac{d!}{x_1!\cdots x_k!}`.

    Raises
    ------
    ValueError
        If the entries of ``x`` do not sum to ``d`` or are negative.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.math.combinatorics import multinomial
       >>> multinomial(4, (2, 1, 1)), multinomial(4, (0, 0, 4))
       (12, 1)
    """
    if any(xi < 0 for xi in x) or sum(x) != d:
        raise ValueError(f'Entries {tuple(x)} must be nonnegative and sum to {d}.')
    value = math.factorial(d)
    for xi in x:
        value //= math.factorial(xi)
    return value


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    r"""
    Weak compositions of ``total`` into ``parts`` nonnegative parts, in lexicographic order.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.math.combinatorics import weak_compositions
       >>> list(weak_compositions(3, 2))
       [(0, 3), (1, 2), (2, 1), (3, 0)]
    """
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def largest_below(y: int, threshold: Fraction, cap: int) -> int:
    r"""
    Largest :math:`x\leq` ``cap`` such that :math:`\binom{x}{y}<` ``threshold``.

    :math:`\binom{x}{y}` is nondecreasing in :math:`x`, hence the valid :math:`x` form a prefix and the search stops at
    the first failure. ``y=0`` returns ``cap`` and ``y=1`` uses the closed form :math:`\lceil T\rceil-1`.

    Parameters
    ----------
    y: int
        Hamming weight (number of ones in a window).
    threshold: Fraction
        Exact threshold :math:`T>1`.
    cap: int
        Upper bound returned when the threshold is never reached.

    Returns
    -------
    int
        The largest admissible window length (at least ``min(y, cap)``).

    Examples
    --------

    .. doctest::

       >>> from fractions import Fraction
       >>> from pybiclique.math.combinatorics import largest_below
       >>> largest_below(1, Fraction(2 ** 20), 2 ** 20)
       1048575
       >>> largest_below(2, Fraction(100), 1000)  # C(14,2)=91 < 100 <= C(15,2)=105
       14
       >>> largest_below(3, Fraction(2), 1000)
       3
    """
    if y == 0:
        return cap
    if y == 1:
        return min(cap, math.ceil(threshold) - 1)
    x = y
    value = 1  # C(y, y)
    if y >= cap:
        return cap
    while x < cap:
        nxt = value * (x + 1) // (x + 1 - y)
        if nxt >= threshold:
            break
        value = nxt
        x += 1
    return x
