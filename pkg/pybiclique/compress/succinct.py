# #############################################################################
# succinct.py
# ===========
# #############################################################################

r"""
Succinct (SB) and compact (CB) representations of graphs by biclique partitions.

The SB representation of a graph stores the list of bicliques of one of its biclique partitions, each as two sorted
vertex lists: it uses :math:`w\lceil\lg n\rceil` bits for a partition of weight :math:`w`. The CB representation adds,
for every vertex, the list of bicliques containing it together with one side bit, and mutable live counters of both
sides of every biclique. This supports the degree queries and lazy removals of
:py:class:`~pybiclique.opt.densest.ThresholdPeeling` in :math:`O(w)` time per round.

Binary layouts (all integers unsigned 32-bit little-endian):

* SB: magic ``SBP1``, ``n``, ``k``, then per biclique ``|L|``, ``|R|``, the ids of :math:`L`, the ids of :math:`R`.
* CB: magic ``CBP1``, the byte length of the SB payload, the SB payload, the :math:`k` live left counts, the :math:`k`
  live right counts, then one byte per vertex (1 if removed).
"""

import struct
from typing import Iterable, Optional

import numpy as np
from numba import njit

from pybiclique.core.partition import BicliquePartition
from pybiclique.util.misc import as_vertex_set, ceil_lg

SB_MAGIC = b'SBP1'
CB_MAGIC = b'CBP1'
_U32 = np.dtype('<u4')


@njit
def _record_offsets(payload, k):
    starts = np.empty(k, dtype=np.int64)
    pos = 0
    for i in range(k):
        if pos + 2 > payload.size:
            raise ValueError('Truncated SB payload.')
        starts[i] = pos
        pos += 2 + payload[pos] + payload[pos + 1]
    if pos != payload.size:
        raise ValueError('SB payload length does not match its records.')
    return starts


def _ranges(indptr: np.ndarray, members: np.ndarray) -> np.ndarray:
    # concatenated positions indptr[i]:indptr[i+1] of the given members
    sizes = indptr[members + 1] - indptr[members]
    offsets = np.arange(int(sizes.sum()), dtype=np.int64) - np.repeat(np.cumsum(sizes) - sizes, sizes)
    return np.repeat(indptr[members], sizes) + offsets


class SBRepr:
    r"""
    Succinct biclique representation.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.compress.succinct import SBRepr, build_sb
       >>> sb = build_sb(BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4])]))
       >>> sb.id_slots(), sb.bits()
       (5, 15)
       >>> data = sb.to_bytes()
       >>> data[:4], len(data)
       (b'SBP1', 40)
       >>> SBRepr.from_bytes(data) == sb
       True
       >>> len(build_sb(BicliquePartition.empty(3)).to_bytes())
       12

    Headers are checked against the payload before anything is allocated:

    .. doctest::

       >>> import struct
       >>> SBRepr.from_bytes(b'SBP1' + struct.pack('<II', 4, 2 ** 31) + bytes(8))
       Traceback (most recent call last):
       ...
       ValueError: SB header announces 2147483648 bicliques but the payload holds at most 1.
    """

    def __init__(self, n: int, left_indptr: np.ndarray, left_indices: np.ndarray, right_indptr: np.ndarray,
                 right_indices: np.ndarray):
        self.n = int(n)
        self.left_indptr = np.asarray(left_indptr, dtype=np.int64)
        self.left_indices = np.asarray(left_indices, dtype=np.int64)
        self.right_indptr = np.asarray(right_indptr, dtype=np.int64)
        self.right_indices = np.asarray(right_indices, dtype=np.int64)
        self.left_sizes = np.diff(self.left_indptr)
        self.right_sizes = np.diff(self.right_indptr)

    @classmethod
    def from_partition(cls, p: BicliquePartition) -> 'SBRepr':
        if not isinstance(p, BicliquePartition):
            raise TypeError(f'Expected a {BicliquePartition}, got {type(p).__name__}.')
        return cls(p.n, p.left_indptr, p.left_indices, p.right_indptr, p.right_indices)

    def __len__(self) -> int:
        return int(self.left_sizes.size)

    def id_slots(self) -> int:
        r"""
        Number of stored vertex ids, equal to the weight of the partition.
        """
        return int(self.left_indices.size + self.right_indices.size)

    def bits(self) -> int:
        r"""
        Size :math:`w\lceil\lg n\rceil` of the representation in bits.
        """
        return self.id_slots() * ceil_lg(self.n)

    def to_partition(self) -> BicliquePartition:
        return BicliquePartition(self.n, self.left_indptr, self.left_indices, self.right_indptr, self.right_indices)

    def edges(self) -> np.ndarray:
        r"""
        Decoded edge set as an array of shape ``(m, 2)`` with ``u < v``, in lexicographic order.
        """
        return self.to_partition().to_graph().edges()

    def to_bytes(self) -> bytes:
        if self.n >= 2 ** 32 or len(self) >= 2 ** 32:
            raise ValueError(f'Cannot encode n={self.n}, k={len(self)} on 32 bits.')
        k = len(self)
        sizes = 2 + self.left_sizes + self.right_sizes
        starts = np.cumsum(sizes) - sizes
        payload = np.empty(int(sizes.sum()), dtype=_U32)
        payload[starts] = self.left_sizes
        payload[starts + 1] = self.right_sizes
        owners = np.arange(k, dtype=np.int64)
        left_pos = np.repeat(starts + 2, self.left_sizes) + _ranges(self.left_indptr, owners) - np.repeat(
            self.left_indptr[:-1], self.left_sizes)
        right_pos = np.repeat(starts + 2 + self.left_sizes, self.right_sizes) + _ranges(
            self.right_indptr, owners) - np.repeat(self.right_indptr[:-1], self.right_sizes)
        payload[left_pos] = self.left_indices
        payload[right_pos] = self.right_indices
        return SB_MAGIC + struct.pack('<II', self.n, k) + payload.tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> 'SBRepr':
        r"""
        Decode an SB payload.

        Raises
        ------
        ValueError
            If the magic is wrong, the payload is truncated or malformed, or an id is outside of :math:`[0,n)`.
        """
        if data[:4] != SB_MAGIC:
            raise ValueError(f'Bad magic {data[:4]!r}: expected {SB_MAGIC!r}.')
        if len(data) < 12 or (len(data) - 12) % 4 != 0:
            raise ValueError('Truncated SB header or payload.')
        n, k = struct.unpack('<II', data[4:12])
        payload = np.frombuffer(data[12:], dtype=_U32).astype(np.int64)
        if k > payload.size // 2:
            raise ValueError(f'SB header announces {k} bicliques but the payload holds at most {payload.size // 2}.')
        starts = _record_offsets(payload, k)
        left_sizes, right_sizes = payload[starts], payload[starts + 1]
        left_indptr = np.r_[0, np.cumsum(left_sizes)].astype(np.int64)
        right_indptr = np.r_[0, np.cumsum(right_sizes)].astype(np.int64)
        owners = np.arange(k, dtype=np.int64)
        left = payload[np.repeat(starts + 2, left_sizes) + _ranges(left_indptr, owners) - np.repeat(
            left_indptr[:-1], left_sizes)]
        right = payload[np.repeat(starts + 2 + left_sizes, right_sizes) + _ranges(right_indptr, owners) - np.repeat(
            right_indptr[:-1], right_sizes)]
        if (left.size and left.max() >= n) or (right.size and right.max() >= n):
            raise ValueError(f'Vertex id outside of [0, {n}) in SB payload.')
        return cls(n, left_indptr, left, right_indptr, right)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SBRepr):
            return NotImplemented
        return self.n == other.n and all(np.array_equal(a, b) for a, b in zip(
            (self.left_indptr, self.left_indices, self.right_indptr, self.right_indices),
            (other.left_indptr, other.left_indices, other.right_indptr, other.right_indices)))

    def __repr__(self) -> str:
        return f'SBRepr(n={self.n}, k={len(self)}, weight={self.id_slots()})'


class CBRepr:
    r"""
    Compact biclique representation with lazy vertex removal.

    Attributes
    ----------
    sb: :py:class:`~pybiclique.compress.succinct.SBRepr`
        Underlying succinct representation (shared between copies, never mutated).
    incidence_indptr, incidence_member, incidence_right: np.ndarray
        Incidence lists: the bicliques containing ``v`` are ``incidence_member[incidence_indptr[v]:incidence_indptr[v+1]]``
        (in increasing order) and ``incidence_right`` flags those where ``v`` is on the right side.
    live_left, live_right: np.ndarray
        Number of non-removed vertices on each side of every biclique.
    removed: np.ndarray
        Removal marks.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.compress.succinct import build_cb
       >>> cb = build_cb(BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4])]))
       >>> cb.degree(0)
       3
       >>> cb.lazy_remove(2)
       >>> cb.degree(0), cb.degrees_all().tolist()
       (2, [2, 2, 0, 2, 2])
       >>> cb.lazy_remove(2)
       Traceback (most recent call last):
       ...
       ValueError: Vertex 2 has already been removed.
       >>> cb.extra_bits() == 5 * (2 * 3 + 1)
       True
    """

    def __init__(self, sb: SBRepr, incidence_indptr: np.ndarray, incidence_member: np.ndarray,
                 incidence_right: np.ndarray, live_left: np.ndarray, live_right: np.ndarray, removed: np.ndarray):
        self.sb = sb
        self.n = sb.n
        self.incidence_indptr = incidence_indptr
        self.incidence_member = incidence_member
        self.incidence_right = incidence_right
        self.live_left = live_left
        self.live_right = live_right
        self.removed = removed
        self._incidence_vertex = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(incidence_indptr))

    @classmethod
    def from_sb(cls, sb: SBRepr) -> 'CBRepr':
        r"""
        Build the incidence lists of ``sb`` in one bucketing pass over the bicliques.
        """
        k = len(sb)
        members = np.concatenate([np.repeat(np.arange(k, dtype=np.int64), sb.left_sizes),
                                  np.repeat(np.arange(k, dtype=np.int64), sb.right_sizes)])
        vertices = np.concatenate([sb.left_indices, sb.right_indices])
        right = np.concatenate([np.zeros(sb.left_indices.size, dtype=bool), np.ones(sb.right_indices.size, dtype=bool)])
        order = np.lexsort((members, vertices))
        indptr = np.zeros(sb.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(vertices, minlength=sb.n), out=indptr[1:])
        return cls(sb, indptr, members[order], right[order], sb.left_sizes.copy(), sb.right_sizes.copy(),
                   np.zeros(sb.n, dtype=bool))

    def __len__(self) -> int:
        return len(self.sb)

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f'Vertex {v} is outside of [0, {self.n}).')
        return int(v)

    def degree(self, v: int) -> int:
        r"""
        Live degree of ``v``: the sum, over the bicliques containing ``v``, of the live count of the opposite side.
        Removed vertices have degree 0.
        """
        v = self._check_vertex(v)
        if self.removed[v]:
            return 0
        lo, hi = self.incidence_indptr[v], self.incidence_indptr[v + 1]
        members = self.incidence_member[lo:hi]
        right = self.incidence_right[lo:hi]
        return int(self.live_right[members[~right]].sum() + self.live_left[members[right]].sum())

    def degrees_all(self) -> np.ndarray:
        r"""
        Live degrees of all vertices in :math:`O(w)` (0 for removed vertices).
        """
        opposite = np.where(self.incidence_right, self.live_left[self.incidence_member],
                            self.live_right[self.incidence_member])
        degrees = np.bincount(self._incidence_vertex, weights=opposite, minlength=self.n).astype(np.int64)
        degrees[self.removed] = 0
        return degrees

    def lazy_remove(self, v: int):
        r"""
        Remove ``v``: decrement the live count of its side in every biclique containing it.

        Raises
        ------
        ValueError
            If ``v`` has already been removed.
        """
        v = self._check_vertex(v)
        if self.removed[v]:
            raise ValueError(f'Vertex {v} has already been removed.')
        lo, hi = self.incidence_indptr[v], self.incidence_indptr[v + 1]
        members = self.incidence_member[lo:hi]
        right = self.incidence_right[lo:hi]
        self.live_left[members[~right]] -= 1
        self.live_right[members[right]] -= 1
        self.removed[v] = True

    def lazy_remove_many(self, vertices: Iterable[int]):
        r"""
        Remove a batch of vertices in time proportional to the sum of their loads.
        """
        vertices = as_vertex_set(vertices, self.n)
        if np.any(self.removed[vertices]):
            v = int(vertices[np.flatnonzero(self.removed[vertices])[0]])
            raise ValueError(f'Vertex {v} has already been removed.')
        if vertices.size == 0:
            return
        entries = _ranges(self.incidence_indptr, vertices)
        members = self.incidence_member[entries]
        right = self.incidence_right[entries]
        k = len(self)
        self.live_left -= np.bincount(members[~right], minlength=k)
        self.live_right -= np.bincount(members[right], minlength=k)
        self.removed[vertices] = True

    def live_vertices(self) -> np.ndarray:
        return np.flatnonzero(~self.removed)

    def live_count(self) -> int:
        return int(self.n - np.count_nonzero(self.removed))

    def copy(self) -> 'CBRepr':
        r"""
        Independent copy of the mutable state (live counts and removal marks) in :math:`O(w+n)`.
        """
        return CBRepr(self.sb, self.incidence_indptr, self.incidence_member, self.incidence_right,
                      self.live_left.copy(), self.live_right.copy(), self.removed.copy())

    def extra_bits(self) -> int:
        r"""
        Bits used on top of the SB representation: :math:`\sum_v \ell(v)(2\lceil\lg n\rceil+1)`, one pointer, one
        back-pointer and one side bit per incidence.
        """
        return int(self.incidence_member.size) * (2 * ceil_lg(self.n) + 1)

    def bits(self) -> int:
        return self.sb.bits() + self.extra_bits()

    def to_bytes(self) -> bytes:
        payload = self.sb.to_bytes()
        return (CB_MAGIC + struct.pack('<I', len(payload)) + payload + self.live_left.astype(_U32).tobytes() +
                self.live_right.astype(_U32).tobytes() + self.removed.astype(np.uint8).tobytes())

    @classmethod
    def from_bytes(cls, data: bytes) -> 'CBRepr':
        if data[:4] != CB_MAGIC:
            raise ValueError(f'Bad magic {data[:4]!r}: expected {CB_MAGIC!r}.')
        (size,) = struct.unpack('<I', data[4:8])
        cb = cls.from_sb(SBRepr.from_bytes(data[8:8 + size]))
        k, n = len(cb), cb.n
        tail = data[8 + size:]
        if len(tail) != 8 * k + n:
            raise ValueError('CB payload length does not match its header.')
        cb.live_left = np.frombuffer(tail, dtype=_U32, count=k).astype(np.int64)
        cb.live_right = np.frombuffer(tail, dtype=_U32, count=k, offset=4 * k).astype(np.int64)
        cb.removed = np.frombuffer(tail, dtype=np.uint8, offset=8 * k).astype(bool)
        return cb

    def __repr__(self) -> str:
        return f'CBRepr(n={self.n}, k={len(self)}, live={self.live_count()})'


def build_sb(p: BicliquePartition) -> SBRepr:
    r"""
    SB representation of a biclique partition.
    """
    return SBRepr.from_partition(p)


def build_cb(p: BicliquePartition) -> CBRepr:
    r"""
    CB representation of a biclique partition.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.compress.succinct import build_cb, copy
       >>> cb = build_cb(BicliquePartition.from_bicliques(3, [([0], [1]), ([0], [2])]))
       >>> snapshot = copy(cb)
       >>> cb.lazy_remove(0)
       >>> cb.degrees_all().tolist(), snapshot.degrees_all().tolist()
       ([0, 0, 0], [2, 1, 1])
       >>> build_cb(BicliquePartition.empty(4)).degrees_all().tolist()
       [0, 0, 0, 0]
    """
    return CBRepr.from_sb(build_sb(p))


def degree(cb: CBRepr, v: int) -> int:
    r"""
    See :py:meth:`~pybiclique.compress.succinct.CBRepr.degree`.
    """
    return cb.degree(v)


def degrees_all(cb: CBRepr) -> np.ndarray:
    r"""
    See :py:meth:`~pybiclique.compress.succinct.CBRepr.degrees_all`.
    """
    return cb.degrees_all()


def lazy_remove(cb: CBRepr, v: int):
    r"""
    See :py:meth:`~pybiclique.compress.succinct.CBRepr.lazy_remove`.
    """
    cb.lazy_remove(v)


def copy(cb: CBRepr) -> CBRepr:
    r"""
    See :py:meth:`~pybiclique.compress.succinct.CBRepr.copy`.
    """
    return cb.copy()


def decode(data: bytes, n: Optional[int] = None) -> BicliquePartition:
    r"""
    Decode an SB or CB payload into the biclique partition it stores.
    """
    if data[:4] == CB_MAGIC:
        sb = CBRepr.from_bytes(data).sb
    else:
        sb = SBRepr.from_bytes(data)
    if n is not None and sb.n != n:
        raise ValueError(f'Payload describes n={sb.n} vertices, expected {n}.')
    return sb.to_partition()
