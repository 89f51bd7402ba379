# #############################################################################
# io.py
# =====
# #############################################################################

r"""
Text and binary file formats.

* Graphs and digraphs: first line ``n m``, then ``m`` lines ``u v`` (0-based, whitespace-separated).
* Hypergraphs: first line ``d n m``, then ``m`` lines of ``d`` sorted ids.
* Clique partitions: first line ``d n k`` (followed by the word ``directed`` for directed biclique partitions), then
  one line per member: the ``d`` part sizes followed by the ids of every part, in order. Biclique partitions use
  ``d=2``.
* Vertex sets: whitespace- or comma-separated ids.
* Binary succinct representations: see :py:meth:`~pybiclique.compress.succinct.SBRepr.to_bytes`.

Readers and writers accept a path or an open text (binary for ``.sbp`` files) stream.
"""

import contextlib
import os
from typing import IO, Iterator, List, Union

import numpy as np

from pybiclique.compress.succinct import SBRepr
from pybiclique.core.graph import Digraph, Graph, Hypergraph
from pybiclique.core.partition import BicliquePartition, CliquePartition, DCliquePartition, _ragged

Source = Union[str, os.PathLike, IO]


@contextlib.contextmanager
def _opened(source: Source, mode: str) -> Iterator[IO]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, mode) as stream:
            yield stream
    else:
        yield source


def _header(line: str, width: int, what: str) -> List[int]:
    tokens = line.split()
    if len(tokens) < width:
        raise ValueError(f'Malformed {what} header {line.strip()!r}: expected {width} integers.')
    try:
        return [int(t) for t in tokens[:width]]
    except ValueError:
        raise ValueError(f'Malformed {what} header {line.strip()!r}: expected {width} integers.') from None


def _body(stream: IO, rows: int, width: int, what: str) -> np.ndarray:
    try:
        values = np.array(stream.read().split(), dtype=np.int64)
    except ValueError:
        raise ValueError(f'Non-integer token in {what} body.') from None
    if values.size != rows * width:
        raise ValueError(f'Expected {rows} {what} lines of {width} ids, got {values.size} ids.')
    return values.reshape(rows, width)


def read_graph(source: Source) -> Graph:
    r"""
    Read a graph in the ``n m`` edge-list format.

    Raises
    ------
    ValueError
        On a malformed file, or any error raised by :py:meth:`~pybiclique.core.graph.Graph.from_edges`.

    Examples
    --------

    .. doctest::

       >>> import io
       >>> from pybiclique.util.io import read_graph, write_graph
       >>> g = read_graph(io.StringIO('3 2\n0 1\n2 1\n'))
       >>> g.m, g.neighbors(1).tolist()
       (2, [0, 2])
       >>> out = io.StringIO(); write_graph(g, out); out.getvalue()
       '3 2\n0 1\n1 2\n'
       >>> read_graph(io.StringIO('3 1\n1 1\n'))
       Traceback (most recent call last):
       ...
       ValueError: Self-loop at vertex 1.
    """
    with _opened(source, 'r') as stream:
        n, m = _header(stream.readline(), 2, 'graph')
        return Graph.from_edges(n, _body(stream, m, 2, 'edge'))


def write_graph(g: Graph, target: Source):
    r"""
    Write a graph in the ``n m`` edge-list format, edges sorted with :math:`u<v`.
    """
    _write_rows(target, f'{g.n} {g.m}', g.edges())


def read_digraph(source: Source) -> Digraph:
    r"""
    Read a digraph in the ``n m`` arc-list format.
    """
    with _opened(source, 'r') as stream:
        n, m = _header(stream.readline(), 2, 'digraph')
        return Digraph.from_arcs(n, _body(stream, m, 2, 'arc'))


def write_digraph(g: Digraph, target: Source):
    _write_rows(target, f'{g.n} {g.m}', g.arcs())


def read_hypergraph(source: Source) -> Hypergraph:
    r"""
    Read a hypergraph in the ``d n m`` format.

    Examples
    --------

    .. doctest::

       >>> import io
       >>> from pybiclique.util.io import read_hypergraph
       >>> h = read_hypergraph(io.StringIO('3 4 2\n0 1 2\n0 1 3\n'))
       >>> h.d, h.n, h.edges.tolist()
       (3, 4, [[0, 1, 2], [0, 1, 3]])
    """
    with _opened(source, 'r') as stream:
        d, n, m = _header(stream.readline(), 3, 'hypergraph')
        return Hypergraph.from_edges(n, d, _body(stream, m, d, 'edge'))


def write_hypergraph(h: Hypergraph, target: Source):
    _write_rows(target, f'{h.d} {h.n} {h.m}', h.edges)


def _write_rows(target: Source, header: str, rows: np.ndarray):
    with _opened(target, 'w') as stream:
        stream.write(header + '\n')
        for row in np.asarray(rows).tolist():
            stream.write(' '.join(map(str, row)) + '\n')


def read_partition(source: Source) -> CliquePartition:
    r"""
    Read a clique partition.

    Returns
    -------
    :py:class:`~pybiclique.core.partition.CliquePartition`
        A :py:class:`~pybiclique.core.partition.BicliquePartition` if ``d=2``, a
        :py:class:`~pybiclique.core.partition.DCliquePartition` otherwise.

    Raises
    ------
    ValueError
        On a malformed file (wrong member count, sizes not matching the number of ids, ids outside of :math:`[0,n)`).

    Examples
    --------

    .. doctest::

       >>> import io
       >>> from pybiclique.core.partition import BicliquePartition
       >>> from pybiclique.util.io import read_partition, write_partition
       >>> p = BicliquePartition.from_bicliques(5, [([0, 1], [2, 3, 4]), ([2], [3])])
       >>> out = io.StringIO(); write_partition(p, out); out.getvalue()
       '2 5 2\n2 3 0 1 2 3 4\n1 1 2 3\n'
       >>> read_partition(io.StringIO(out.getvalue())) == p
       True
       >>> read_partition(io.StringIO('2 5 1\n2 1 0 1\n'))
       Traceback (most recent call last):
       ...
       ValueError: Member 0 announces 3 ids but lists 2.
    """
    with _opened(source, 'r') as stream:
        first = stream.readline()
        d, n, k = _header(first, 3, 'partition')
        directed = first.split()[3:4] == ['directed']
        sizes = np.zeros((k, d), dtype=np.int64)
        ids = []
        lines = [line for line in stream.read().splitlines() if line.strip()]
        if len(lines) != k:
            raise ValueError(f'Expected {k} members, got {len(lines)}.')
        for i, line in enumerate(lines):
            try:
                row = np.array(line.split(), dtype=np.int64)
            except ValueError:
                raise ValueError(f'Non-integer token in member {i}.') from None
            sizes[i] = row[:d]
            if row.size - d != sizes[i].sum():
                raise ValueError(f'Member {i} announces {sizes[i].sum()} ids but lists {row.size - d}.')
            ids.append(row[d:])
    parts_ids = [[] for _ in range(d)]
    for i, row in enumerate(ids):
        bounds = np.concatenate([[0], np.cumsum(sizes[i])])
        for j in range(d):
            parts_ids[j].append(row[bounds[j]:bounds[j + 1]])
    indptr, indices = [], []
    for j in range(d):
        ptr, idx = _ragged(sizes[:, j], np.concatenate(parts_ids[j]) if k > 0 else [])
        if idx.size > 0 and (idx.min() < 0 or idx.max() >= n):
            raise ValueError(f'Partition lists a vertex outside of [0, {n}).')
        indptr.append(ptr)
        indices.append(idx)
    if d == 2:
        return BicliquePartition(n, indptr[0], indices[0], indptr[1], indices[1], directed=directed)
    return DCliquePartition(n, d, indptr, indices)


def write_partition(p: CliquePartition, target: Source):
    r"""
    Write a clique partition. See :py:func:`~pybiclique.util.io.read_partition`.
    """
    header = f'{p.arity} {p.n} {len(p)}'
    if getattr(p, 'directed', False):
        header += ' directed'
    with _opened(target, 'w') as stream:
        stream.write(header + '\n')
        sizes = [p.part_sizes(j).tolist() for j in range(p.arity)]
        for i in range(len(p)):
            row = [sizes[j][i] for j in range(p.arity)]
            for j in range(p.arity):
                row.extend(p.indices[j][p.indptr[j][i]:p.indptr[j][i + 1]].tolist())
            stream.write(' '.join(map(str, row)) + '\n')


def read_sbp(source: Source) -> SBRepr:
    r"""
    Read a binary ``.sbp`` file.

    Raises
    ------
    ValueError
        On a bad magic or truncated payload.
    """
    with _opened(source, 'rb') as stream:
        return SBRepr.from_bytes(stream.read())


def write_sbp(sb: SBRepr, target: Source):
    with _opened(target, 'wb') as stream:
        stream.write(sb.to_bytes())


def parse_vertex_list(text: str) -> np.ndarray:
    r"""
    Parse whitespace- or comma-separated vertex ids.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.util.io import parse_vertex_list
       >>> parse_vertex_list('3, 1 2').tolist(), parse_vertex_list('').tolist()
       ([3, 1, 2], [])
    """
    try:
        return np.array(text.replace(',', ' ').split(), dtype=np.int64)
    except ValueError:
        raise ValueError(f'Malformed vertex list {text!r}.') from None
