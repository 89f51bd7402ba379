# #############################################################################
# partition.py
# ============
# #############################################################################

r"""
Biclique and :math:`d`-clique partition containers, weight/load accounting and exactness verification.

A *biclique partition* of a graph :math:`G` is a family of bicliques :math:`(L_i,R_i)` whose edge sets
:math:`L_i\times R_i` partition :math:`E(G)`. Its *weight* is :math:`w=\sum_i |L_i|+|R_i|` and the *load* of a vertex
is the number of members containing it, so that :math:`w=\sum_v \ell(v)`.

Partitions are stored as flat CSR arrays (one pair of ``indptr``/``indices`` arrays per side), which keeps
construction, serialization and queries vectorised.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from pybiclique.core.graph import Digraph, Graph, Hypergraph, encode_sets
from pybiclique.util.misc import chunk_members, expand_products


class Biclique:
    r"""
    Complete bipartite graph :math:`(L,R)` with nonempty, disjoint, sorted sides.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import Biclique
       >>> Biclique([1, 0], [4, 2, 3])
       Biclique(left=[0, 1], right=[2, 3, 4])
       >>> Biclique([0, 1], [1]).is_valid()
       False
    """

    __slots__ = ('left', 'right')

    def __init__(self, left: Sequence[int], right: Sequence[int]):
        self.left = np.sort(np.asarray(left, dtype=np.int64))
        self.right = np.sort(np.asarray(right, dtype=np.int64))

    @property
    def size(self) -> int:
        return int(self.left.size + self.right.size)

    def is_valid(self) -> bool:
        r"""
        ``True`` if both sides are nonempty, duplicate-free and disjoint.
        """
        if self.left.size == 0 or self.right.size == 0:
            return False
        if np.any(self.left[1:] == self.left[:-1]) or np.any(self.right[1:] == self.right[:-1]):
            return False
        return not np.intersect1d(self.left, self.right).size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Biclique):
            return NotImplemented
        return np.array_equal(self.left, other.left) and np.array_equal(self.right, other.right)

    def __repr__(self) -> str:
        return f'Biclique(left={self.left.tolist()}, right={self.right.tolist()})'


class DClique:
    r"""
    Complete :math:`d`-partite :math:`d`-uniform hypergraph :math:`(V_1,\ldots,V_d)`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import DClique
       >>> DClique([[0], [1], [3, 2]])
       DClique(parts=[[0], [1], [2, 3]])
    """

    __slots__ = ('parts',)

    def __init__(self, parts: Sequence[Sequence[int]]):
        self.parts = tuple(np.sort(np.asarray(p, dtype=np.int64)) for p in parts)

    @property
    def size(self) -> int:
        return int(sum(p.size for p in self.parts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DClique):
            return NotImplemented
        return len(self.parts) == len(other.parts) and all(
            np.array_equal(p, q) for p, q in zip(self.parts, other.parts))

    def __repr__(self) -> str:
        return f'DClique(parts={[p.tolist() for p in self.parts]})'


def _ragged(counts: np.ndarray, ids: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(counts) + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, np.asarray(ids, dtype=np.int64)


class CliquePartition:
    r"""
    Base container for partitions into complete multipartite members.

    Member :math:`i` has ``arity`` parts; part :math:`j` of member :math:`i` is
    ``indices[j][indptr[j][i]:indptr[j][i+1]]``.
    """

    def __init__(self, n: int, indptr: Sequence[np.ndarray], indices: Sequence[np.ndarray]):
        self.n = int(n)
        self.indptr = [np.asarray(p, dtype=np.int64) for p in indptr]
        self.indices = [np.asarray(i, dtype=np.int64) for i in indices]
        sizes = {p.size for p in self.indptr}
        if len(sizes) != 1:
            raise ValueError('All parts must describe the same number of members.')

    @property
    def arity(self) -> int:
        return len(self.indptr)

    def __len__(self) -> int:
        return int(self.indptr[0].size - 1)

    def part_sizes(self, j: int) -> np.ndarray:
        r"""
        Sizes of part ``j`` of every member.
        """
        return np.diff(self.indptr[j])

    def owners(self, j: int) -> np.ndarray:
        r"""
        Member index of every entry of ``indices[j]``.
        """
        return np.repeat(np.arange(len(self), dtype=np.int64), self.part_sizes(j))

    def weight(self) -> int:
        r"""
        Total weight. See :py:func:`~pybiclique.core.partition.weight`.
        """
        return int(sum(i.size for i in self.indices))

    def loads(self) -> np.ndarray:
        r"""
        Per-vertex loads. See :py:func:`~pybiclique.core.partition.loads`.
        """
        total = np.zeros(self.n, dtype=np.int64)
        for idx in self.indices:
            total += np.bincount(idx, minlength=self.n)
        return total

    def max_load(self) -> int:
        return int(self.loads().max()) if self.n > 0 else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliquePartition) or type(self) is not type(other):
            return NotImplemented
        return self.n == other.n and self.arity == other.arity and all(
            np.array_equal(a, b) for a, b in zip(self.indptr + self.indices, other.indptr + other.indices))


class BicliquePartition(CliquePartition):
    r"""
    Biclique partition of a graph (or of a digraph, members then being read left :math:`\to` right).

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition
       >>> p = BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4]), ([2], [3])])
       >>> len(p), p.weight(), p.loads().tolist()
       (2, 7, [1, 1, 2, 2, 1])
       >>> p[0]
       Biclique(left=[0, 1], right=[2, 3, 4])
       >>> p.covered_pairs()
       7
    """

    def __init__(self, n: int, left_indptr: np.ndarray, left_indices: np.ndarray, right_indptr: np.ndarray,
                 right_indices: np.ndarray, directed: bool = False):
        r"""
        Parameters
        ----------
        n: int
            Number of vertices of the host graph.
        left_indptr, left_indices: np.ndarray
            CSR arrays of the left sides.
        right_indptr, right_indices: np.ndarray
            CSR arrays of the right sides.
        directed: bool
            Whether members are directed bicliques (all arcs :math:`L\to R`).
        """
        super(BicliquePartition, self).__init__(n, [left_indptr, right_indptr], [left_indices, right_indices])
        self.directed = directed

    @classmethod
    def from_bicliques(cls, n: int, bicliques: Iterable[Union[Biclique, Tuple[Sequence[int], Sequence[int]]]],
                       directed: bool = False) -> 'BicliquePartition':
        r"""
        Build a partition from a sequence of bicliques or ``(left, right)`` pairs.
        """
        members = [b if isinstance(b, Biclique) else Biclique(*b) for b in bicliques]
        left_ptr, left_idx = _ragged([b.left.size for b in members],
                                     np.concatenate([b.left for b in members]) if members else [])
        right_ptr, right_idx = _ragged([b.right.size for b in members],
                                       np.concatenate([b.right for b in members]) if members else [])
        return cls(n, left_ptr, left_idx, right_ptr, right_idx, directed=directed)

    @classmethod
    def empty(cls, n: int, directed: bool = False) -> 'BicliquePartition':
        zero = np.zeros(1, dtype=np.int64)
        none = np.zeros(0, dtype=np.int64)
        return cls(n, zero, none, zero.copy(), none.copy(), directed=directed)

    @property
    def left_indptr(self) -> np.ndarray:
        return self.indptr[0]

    @property
    def left_indices(self) -> np.ndarray:
        return self.indices[0]

    @property
    def right_indptr(self) -> np.ndarray:
        return self.indptr[1]

    @property
    def right_indices(self) -> np.ndarray:
        return self.indices[1]

    def __getitem__(self, i: int) -> Biclique:
        if not -len(self) <= i < len(self):
            raise IndexError(f'Biclique index {i} out of range.')
        i = i % len(self)
        return Biclique(self.left_indices[self.left_indptr[i]:self.left_indptr[i + 1]],
                        self.right_indices[self.right_indptr[i]:self.right_indptr[i + 1]])

    def __iter__(self) -> Iterator[Biclique]:
        for i in range(len(self)):
            yield self[i]

    def covered_pairs(self) -> int:
        r"""
        :math:`\sum_i |L_i|\,|R_i|`, which equals :math:`m` for a valid partition.
        """
        return int(np.sum(self.part_sizes(0) * self.part_sizes(1)))

    def pairs(self, budget: int = 1 << 24) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        r"""
        Iterate over the covered pairs, chunk by chunk.

        Yields
        ------
        Tuple[np.ndarray, np.ndarray, np.ndarray]
            ``(owner, u, v)`` arrays, see :py:func:`~pybiclique.util.misc.expand_products`.
        """
        for members in chunk_members(self.part_sizes(0) * self.part_sizes(1), budget=budget):
            yield expand_products(self.left_indptr, self.left_indices, self.right_indptr, self.right_indices,
                                  members=members)

    def to_graph(self) -> Graph:
        r"""
        Decode the covered edge set as a :py:class:`~pybiclique.core.graph.Graph`.
        """
        chunks = [np.stack([u, v], axis=1) for _, u, v in self.pairs()]
        edges = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
        return Graph.from_edges(self.n, edges)

    def to_digraph(self) -> Digraph:
        r"""
        Decode the covered arc set (members read left :math:`\to` right).

        Examples
        --------

        .. doctest::

           >>> from pybiclique.core.partition import BicliquePartition
           >>> p = BicliquePartition.from_bicliques(3, [([0], [1, 2]), ([2], [0])], directed=True)
           >>> p.to_digraph().successors(0).tolist(), p.to_digraph().successors(2).tolist()
           ([1, 2], [0])
        """
        chunks = [np.stack([u, v], axis=1) for _, u, v in self.pairs()]
        arcs = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
        return Digraph.from_arcs(self.n, arcs)

    def __repr__(self) -> str:
        kind = 'directed ' if self.directed else ''
        return f'BicliquePartition(n={self.n}, k={len(self)}, {kind}weight={self.weight()})'


class DCliquePartition(CliquePartition):
    r"""
    :math:`d`-clique partition of a :math:`d`-uniform hypergraph.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import DCliquePartition
       >>> p = DCliquePartition.from_cliques(4, 3, [([0], [1], [2, 3])])
       >>> len(p), p.weight(), p.loads().tolist()
       (1, 4, [1, 1, 1, 1])
       >>> p[0]
       DClique(parts=[[0], [1], [2, 3]])
    """

    def __init__(self, n: int, d: int, indptr: Sequence[np.ndarray], indices: Sequence[np.ndarray]):
        super(DCliquePartition, self).__init__(n, indptr, indices)
        if self.arity != d:
            raise ValueError(f'A {d}-clique partition needs {d} parts, got {self.arity}.')
        self.d = d

    @classmethod
    def from_cliques(cls, n: int, d: int, cliques: Iterable[Union[DClique, Sequence[Sequence[int]]]]) \
            -> 'DCliquePartition':
        r"""
        Build a partition from a sequence of :py:class:`~pybiclique.core.partition.DClique` or part lists.
        """
        members = [c if isinstance(c, DClique) else DClique(c) for c in cliques]
        indptr, indices = [], []
        for j in range(d):
            ptr, idx = _ragged([c.parts[j].size for c in members],
                               np.concatenate([c.parts[j] for c in members]) if members else [])
            indptr.append(ptr)
            indices.append(idx)
        return cls(n, d, indptr, indices)

    @classmethod
    def empty(cls, n: int, d: int) -> 'DCliquePartition':
        return cls(n, d, [np.zeros(1, dtype=np.int64) for _ in range(d)],
                   [np.zeros(0, dtype=np.int64) for _ in range(d)])

    @classmethod
    def from_biclique_partition(cls, p: BicliquePartition) -> 'DCliquePartition':
        r"""
        View a biclique partition as a 2-clique partition.
        """
        return cls(p.n, 2, [p.left_indptr, p.right_indptr], [p.left_indices, p.right_indices])

    @classmethod
    def singletons(cls, n: int, edges: np.ndarray) -> 'DCliquePartition':
        r"""
        One all-singleton clique per edge.
        """
        edges = np.asarray(edges, dtype=np.int64)
        d = edges.shape[1]
        ptr = np.arange(edges.shape[0] + 1, dtype=np.int64)
        return cls(n, d, [ptr.copy() for _ in range(d)], [edges[:, j].copy() for j in range(d)])

    def __getitem__(self, i: int) -> DClique:
        if not -len(self) <= i < len(self):
            raise IndexError(f'Clique index {i} out of range.')
        i = i % len(self)
        return DClique([self.indices[j][self.indptr[j][i]:self.indptr[j][i + 1]] for j in range(self.d)])

    def __iter__(self) -> Iterator[DClique]:
        for i in range(len(self)):
            yield self[i]

    def relabel(self, vertices: np.ndarray, n: int) -> 'DCliquePartition':
        r"""
        Map local vertex ids ``u`` to ``vertices[u]`` in a host of size ``n``.
        """
        vertices = np.asarray(vertices, dtype=np.int64)
        return DCliquePartition(n, self.d, self.indptr, [vertices[idx] for idx in self.indices])

    def extend(self, singletons: Sequence[int]) -> 'DCliquePartition':
        r"""
        Prepend one singleton part per vertex of ``singletons`` to every member.

        Examples
        --------

        .. doctest::

           >>> from pybiclique.core.partition import DCliquePartition
           >>> p = DCliquePartition.from_cliques(5, 2, [([1], [2, 3])]).extend([0])
           >>> p[0]
           DClique(parts=[[0], [1], [2, 3]])
        """
        k = len(self)
        ptr = np.arange(k + 1, dtype=np.int64)
        heads = [np.full(k, s, dtype=np.int64) for s in singletons]
        return DCliquePartition(self.n, self.d + len(heads), [ptr.copy() for _ in heads] + self.indptr,
                                heads + self.indices)

    def products(self) -> np.ndarray:
        r"""
        All covered :math:`d`-sets, one sorted row per covered set, member by member.
        """
        k = len(self)
        if k == 0:
            return np.zeros((0, self.d), dtype=np.int64)
        sizes = np.ones(k, dtype=np.int64)
        for j in range(self.d):
            sizes = sizes * self.part_sizes(j)
        total = int(sizes.sum())
        offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(sizes) - sizes, sizes)
        rows = np.empty((total, self.d), dtype=np.int64)
        stride = sizes.copy()
        for j in range(self.d):
            part = self.part_sizes(j)
            stride = stride // np.maximum(part, 1)
            local = (offsets // np.repeat(stride, sizes)) % np.repeat(np.maximum(part, 1), sizes)
            rows[:, j] = self.indices[j][np.repeat(self.indptr[j][:-1], sizes) + local]
        return np.sort(rows, axis=1)

    def __repr__(self) -> str:
        return f'DCliquePartition(n={self.n}, d={self.d}, k={len(self)}, weight={self.weight()})'


class PartitionBuilder:
    r"""
    Accumulate blocks of bicliques and assemble them into a :py:class:`~pybiclique.core.partition.BicliquePartition`.

    A block is given by the left sizes and concatenated left ids of its members, and likewise for the right sides.
    Blocks are concatenated in insertion order.
    """

    def __init__(self, n: int, directed: bool = False):
        self.n = n
        self.directed = directed
        self._blocks: List[Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = []

    def add_block(self, left_counts: np.ndarray, left_ids: np.ndarray, right_counts: np.ndarray,
                  right_ids: np.ndarray):
        if len(left_counts) != len(right_counts):
            raise ValueError('Left and right sides describe different numbers of bicliques.')
        if len(left_counts) > 0:
            self._blocks.append((np.asarray(left_counts, dtype=np.int64), np.asarray(left_ids, dtype=np.int64),
                                 np.asarray(right_counts, dtype=np.int64), np.asarray(right_ids, dtype=np.int64)))

    def add_edges(self, u: np.ndarray, v: np.ndarray):
        r"""
        Add one biclique :math:`(\{u\},\{v\})` per pair.
        """
        ones = np.ones(len(u), dtype=np.int64)
        self.add_block(ones, u, ones.copy(), v)

    def extend(self, blocks: Iterable[Optional[Tuple[np.ndarray, ...]]]):
        for block in blocks:
            if block is not None:
                self.add_block(*block)

    def build(self) -> BicliquePartition:
        if not self._blocks:
            return BicliquePartition.empty(self.n, directed=self.directed)
        lc, li, rc, ri = (np.concatenate([b[j] for b in self._blocks]) for j in range(4))
        left_ptr, left_idx = _ragged(lc, li)
        right_ptr, right_idx = _ragged(rc, ri)
        return BicliquePartition(self.n, left_ptr, left_idx, right_ptr, right_idx, directed=self.directed)


def concatenate_dpartitions(n: int, d: int, parts: Sequence[DCliquePartition]) -> DCliquePartition:
    r"""
    Concatenate :math:`d`-clique partitions over the same host, in order.
    """
    parts = [p for p in parts if len(p) > 0]
    if not parts:
        return DCliquePartition.empty(n, d)
    indptr, indices = [], []
    for j in range(d):
        counts = np.concatenate([p.part_sizes(j) for p in parts])
        ptr, idx = _ragged(counts, np.concatenate([p.indices[j] for p in parts]))
        indptr.append(ptr)
        indices.append(idx)
    return DCliquePartition(n, d, indptr, indices)


def weight(p: CliquePartition) -> int:
    r"""
    Weight of a biclique or :math:`d`-clique partition.

    The weight is :math:`w=\sum_i \sum_j |V^{(i)}_j|`, the sum over members of the sizes of their parts.

    Parameters
    ----------
    p: :py:class:`~pybiclique.core.partition.CliquePartition`
        Partition.

    Returns
    -------
    int
        Weight of ``p``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition, weight
       >>> weight(BicliquePartition.empty(4))
       0
       >>> weight(BicliquePartition.from_bicliques(2, [([0], [1])]))
       2
       >>> weight(BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4])]))
       5
    """
    return p.weight()


def loads(p: CliquePartition) -> np.ndarray:
    r"""
    Per-vertex loads :math:`\ell(v)`: the number of members containing :math:`v`.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.partition import BicliquePartition, loads, weight
       >>> loads(BicliquePartition.from_bicliques(3, [([0], [1])])).tolist()
       [1, 1, 0]
       >>> p = BicliquePartition.from_bicliques(3, [([0], [1]), ([0], [2])])
       >>> loads(p).tolist()
       [2, 1, 1]
       >>> int(loads(p).sum()) == weight(p)
       True
    """
    return p.loads()


class PartitionVerificationError(AssertionError):
    r"""
    Raised when a partition that must be exact fails verification.
    """
    pass


@dataclass
class VerificationReport:
    r"""
    Outcome of a partition verification.

    Attributes
    ----------
    ok: bool
        ``True`` if the partition is exact.
    message: str
        Description of the first violation found (empty if ``ok``).
    edge: Optional[tuple]
        First offending edge/arc/hyperedge, if any.
    member: Optional[int]
        Index of the first offending member, if any.
    """
    ok: bool
    message: str = ''
    edge: Optional[tuple] = None
    member: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_failed(self):
        if not self.ok:
            raise PartitionVerificationError(self.message)


def _check_members(p: CliquePartition) -> Optional[VerificationReport]:
    k = len(p)
    for j in range(p.arity):
        sizes = p.part_sizes(j)
        if k > 0 and sizes.min() == 0:
            i = int(np.flatnonzero(sizes == 0)[0])
            return VerificationReport(False, f'Member {i} has an empty part {j}.', member=i)
        idx = p.indices[j]
        if idx.size > 0 and (idx.min() < 0 or idx.max() >= p.n):
            i = int(p.owners(j)[np.flatnonzero((idx < 0) | (idx >= p.n))[0]])
            return VerificationReport(False, f'Member {i} has a vertex outside of [0, {p.n}).', member=i)
    owners = np.concatenate([p.owners(j) for j in range(p.arity)]) if k > 0 else np.zeros(0, dtype=np.int64)
    vertices = np.concatenate(p.indices) if k > 0 else np.zeros(0, dtype=np.int64)
    keys = np.sort(owners * max(p.n, 1) + vertices)
    repeated = np.flatnonzero(keys[1:] == keys[:-1])
    if repeated.size > 0:
        i = int(keys[repeated[0]] // max(p.n, 1))
        return VerificationReport(False, f'Member {i} has parts that are not pairwise disjoint.', member=i)
    return None


def _check_cover(keys_expected: np.ndarray, chunks: Iterable[Tuple[np.ndarray, np.ndarray]],
                 decode) -> VerificationReport:
    cover = np.zeros(keys_expected.size, dtype=np.int64)
    for owner, keys in chunks:
        pos = np.searchsorted(keys_expected, keys)
        found = pos < keys_expected.size
        found[found] = keys_expected[pos[found]] == keys[found]
        if not found.all():
            first = int(np.flatnonzero(~found)[0])
            edge = decode(int(keys[first]))
            return VerificationReport(False, f'Member {int(owner[first])} covers non-edge {edge}.', edge=edge,
                                      member=int(owner[first]))
        cover += np.bincount(pos, minlength=keys_expected.size)
    if np.any(cover > 1):
        edge = decode(int(keys_expected[np.flatnonzero(cover > 1)[0]]))
        return VerificationReport(False, f'Edge {edge} is covered more than once.', edge=edge)
    if np.any(cover == 0):
        edge = decode(int(keys_expected[np.flatnonzero(cover == 0)[0]]))
        return VerificationReport(False, f'Edge {edge} is uncovered.', edge=edge)
    return VerificationReport(True)


def verify_partition(g: Union[Graph, Digraph], p: BicliquePartition) -> VerificationReport:
    r"""
    Check that ``p`` is an exact biclique partition of ``g``.

    Every pair :math:`(u,v)\in L_i\times R_i` must be an edge of ``g`` (an arc :math:`u\to v` for digraphs), every edge
    must be covered exactly once and every member must have nonempty disjoint sides.

    Parameters
    ----------
    g: Union[:py:class:`~pybiclique.core.graph.Graph`, :py:class:`~pybiclique.core.graph.Digraph`]
        Host graph.
    p: :py:class:`~pybiclique.core.partition.BicliquePartition`
        Candidate partition.

    Returns
    -------
    :py:class:`~pybiclique.core.partition.VerificationReport`
        ``ok`` or the first violation found. Verification never raises.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Graph
       >>> from pybiclique.core.partition import BicliquePartition, verify_partition
       >>> k23 = Graph.from_edges(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
       >>> verify_partition(k23, BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4])])).ok
       True
       >>> path = Graph.from_edges(3, [(0, 1), (1, 2)])
       >>> verify_partition(path, BicliquePartition.from_bicliques(3, [([0], [1])])).message
       'Edge (1, 2) is uncovered.'
       >>> triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
       >>> verify_partition(triangle, BicliquePartition.from_bicliques(3, [([0], [1, 2]), ([1], [2])])).ok
       True

    Notes
    -----
    Covered pairs are enumerated in memory-bounded chunks and located among the sorted edge keys :math:`u\,n+v` by
    binary search; the cost is :math:`O((m+w)\log m)`.
    """
    if p.n != g.n:
        return VerificationReport(False, f'Partition host size {p.n} differs from graph size {g.n}.')
    if p.arity != 2:
        return VerificationReport(False, f'Expected a biclique partition, got {p.arity} parts per member.')
    bad = _check_members(p)
    if bad is not None:
        return bad
    n = max(g.n, 1)
    directed = isinstance(g, Digraph)
    expected = g.arc_keys() if directed else g.edge_keys()

    def chunks():
        for owner, u, v in p.pairs():
            if directed:
                yield owner, u * n + v
            else:
                yield owner, np.minimum(u, v) * n + np.maximum(u, v)

    return _check_cover(expected, chunks(), lambda key: (key // n, key % n))


def verify_dpartition(h: Hypergraph, p: DCliquePartition) -> VerificationReport:
    r"""
    Check that the product sets :math:`V_1\times\cdots\times V_d` of ``p``, read as :math:`d`-sets, cover every edge of
    ``h`` exactly once and nothing else.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.core.graph import Hypergraph
       >>> from pybiclique.core.partition import DCliquePartition, verify_dpartition
       >>> verify_dpartition(Hypergraph.from_edges(3, 3, [(0, 1, 2)]),
       ...                   DCliquePartition.from_cliques(3, 3, [([0], [1], [2])])).ok
       True
       >>> h = Hypergraph.from_edges(4, 3, [(0, 1, 2), (0, 1, 3)])
       >>> verify_dpartition(h, DCliquePartition.from_cliques(4, 3, [([0], [1], [2, 3])])).ok
       True
       >>> verify_dpartition(h, DCliquePartition.from_cliques(4, 3, [([0], [1], [2])])).message
       'Edge (0, 1, 3) is uncovered.'
    """
    if p.n != h.n or p.d != h.d:
        return VerificationReport(False, f'Partition dimensions (n={p.n}, d={p.d}) differ from (n={h.n}, d={h.d}).')
    bad = _check_members(p)
    if bad is not None:
        return bad
    n = max(h.n, 1)
    d = h.d

    def decode(key: int) -> tuple:
        out = []
        for _ in range(d):
            out.append(key % n)
            key //= n
        return tuple(reversed(out))

    products = p.products()
    owners = np.repeat(np.arange(len(p), dtype=np.int64),
                       np.prod(np.stack([p.part_sizes(j) for j in range(d)]), axis=0) if len(p) else 0)
    return _check_cover(h.edge_keys(), [(owners, encode_sets(products, n))], decode)
