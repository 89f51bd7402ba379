# #############################################################################
# misc.py
# =======
# #############################################################################

r"""
Miscellaneous functions.
"""

import math
from numbers import Integral
from typing import Iterable, Optional, Tuple, Union

import numpy as np


def lg(x: Union[int, float]) -> float:
    r"""
    Binary logarithm :math:`\lg x=\log_2 x`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.misc import lg
       >>> lg(1024)
       10.0
    """
    return math.log2(x)


def lglg(n: int) -> float:
    r"""
    Iterated binary logarithm :math:`\lg\lg n`, evaluated as ``0`` for :math:`n<4`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.misc import lglg
       >>> lglg(16), lglg(3)
       (2.0, 0)
    """
    if n < 4:
        return 0
    return math.log2(math.log2(n))


def ceil_lg(n: int) -> int:
    r"""
    Exact :math:`\lceil \lg n\rceil` for positive integers (``0`` for :math:`n\leq 1`).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.misc import ceil_lg
       >>> [ceil_lg(n) for n in (1, 2, 3, 4, 5, 1024, 1025)]
       [0, 1, 2, 2, 3, 10, 11]
    """
    if n <= 1:
        return 0
    return int(n - 1).bit_length()


def ceil_div(a: int, b: int) -> int:
    r"""
    Integer ceiling division :math:`\lceil a/b\rceil` for :math:`b>0`.
    """
    return -(-a // b)


def iroot(n: int, k: int) -> int:
    r"""
    Integer :math:`k`-th root: the largest :math:`r\geq 0` such that :math:`r^k\leq n`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.misc import iroot
       >>> iroot(1024, 3), iroot(1000, 3), iroot(999, 3), iroot(5, 1)
       (10, 10, 9, 5)
    """
    if k < 1:
        raise ValueError(f'Root order must be positive, got {k}.')
    if n < 0:
        raise ValueError(f'Cannot take the root of a negative number {n}.')
    r = int(round(n ** (1. / k)))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def check_probability(p: float, name: str = 'p') -> float:
    r"""
    Check that ``p`` lies in :math:`[0,1]`.

    Raises
    ------
    ValueError
        If ``p`` is outside of :math:`[0,1]`.
    """
    if not 0 <= p <= 1:
        raise ValueError(f'Parameter {name} must be in [0,1], got {p}.')
    return p


def check_natural(x: int, name: str, minimum: int = 0) -> int:
    r"""
    Check that ``x`` is an integer larger or equal to ``minimum``.

    Raises
    ------
    TypeError
        If ``x`` is not an integer.
    ValueError
        If ``x < minimum``.
    """
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise TypeError(f'Parameter {name} must be an integer, got {type(x).__name__}.')
    if x < minimum:
        raise ValueError(f'Parameter {name} must be >= {minimum}, got {x}.')
    return int(x)


def as_vertex_set(vertices: Iterable[int], n: int, name: str = 'vertices') -> np.ndarray:
    r"""
    Convert a collection of vertex ids into a sorted array of distinct ids in :math:`[0,n)`.

    Parameters
    ----------
    vertices: Iterable[int]
        Vertex ids (duplicates are merged).
    n: int
        Number of vertices of the host graph.
    name: str
        Name used in error messages.

    Returns
    -------
    np.ndarray
        Sorted ``int64`` array of distinct vertex ids.

    Raises
    ------
    ValueError
        If some vertex id is outside of :math:`[0,n)`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.misc import as_vertex_set
       >>> as_vertex_set([3, 1, 3], n=4).tolist()
       [1, 3]
       >>> as_vertex_set([4], n=4)
       Traceback (most recent call last):
       ...
       ValueError: Vertex 4 in vertices is outside of [0, 4).
    """
    arr = np.unique(np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices,
                               dtype=np.int64).reshape(-1))
    if arr.size > 0 and (arr[0] < 0 or arr[-1] >= n):
        bad = arr[0] if arr[0] < 0 else arr[-1]
        raise ValueError(f'Vertex {bad} in {name} is outside of [0, {n}).')
    return arr


def expand_products(left_indptr: np.ndarray, left_indices: np.ndarray, right_indptr: np.ndarray,
                    right_indices: np.ndarray, members: Optional[np.ndarray] = None) -> Tuple[np.ndarray, ...]:
    r"""
    Enumerate the pairs :math:`L_i\times R_i` of a collection of bicliques stored in CSR form.

    Parameters
    ----------
    left_indptr, left_indices, right_indptr, right_indices: np.ndarray
        CSR arrays of the left and right sides.
    members: Optional[np.ndarray]
        Indices of the bicliques to expand (all of them if ``None``).

    Returns
    -------
    Tuple[np.ndarray, np.ndarray, np.ndarray]
        Arrays ``(owner, u, v)``: for every covered pair, the index of the biclique covering it, its left and right
        endpoints. Pairs are listed biclique by biclique, in lexicographic order within a biclique.

    Examples
    --------

    .. doctest::

       >>> import numpy as np
       >>> from pybiclique.util.misc import expand_products
       >>> owner, u, v = expand_products(np.array([0, 2]), np.array([0, 1]), np.array([0, 3]), np.array([2, 3, 4]))
       >>> list(zip(u.tolist(), v.tolist()))
       [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    """
    if members is None:
        members = np.arange(left_indptr.size - 1, dtype=np.int64)
    members = np.asarray(members, dtype=np.int64)
    a = (left_indptr[members + 1] - left_indptr[members]).astype(np.int64)
    b = (right_indptr[members + 1] - right_indptr[members]).astype(np.int64)
    sizes = a * b
    total = int(sizes.sum())
    owner = np.repeat(members, sizes)
    offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(sizes) - sizes, sizes)
    b_rep = np.repeat(b, sizes)
    u = left_indices[np.repeat(left_indptr[members], sizes) + offsets // np.maximum(b_rep, 1)]
    v = right_indices[np.repeat(right_indptr[members], sizes) + offsets % np.maximum(b_rep, 1)]
    return owner, u.astype(np.int64), v.astype(np.int64)


def chunk_members(sizes: np.ndarray, budget: int = 1 << 24) -> Iterable[np.ndarray]:
    r"""
    Split member indices into consecutive chunks whose cumulative ``sizes`` stay around ``budget``.

    Used to bound the memory of pair expansions over large partitions.
    """
    total = np.cumsum(np.asarray(sizes, dtype=np.int64))
    start = 0
    k = total.size
    while start < k:
        base = total[start - 1] if start > 0 else 0
        stop = int(np.searchsorted(total, base + budget, side='right'))
        stop = max(stop, start + 1)
        yield np.arange(start, min(stop, k), dtype=np.int64)
        start = stop
