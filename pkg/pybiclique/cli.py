# #############################################################################
# cli.py
# ======
# #############################################################################

r"""
Command-line front end.

Data (graphs, partitions, ``.sbp`` files) flows through stdin/stdout in the formats of :py:mod:`pybiclique.util.io`, so
that commands can be piped::

    pybiclique gen gnp 1024 0.5 --seed 7 | pybiclique partition --algo ep | pybiclique stats

Results are printed as JSON lines on stdout, diagnostics and errors on stderr. The exit code is 0 on success, 1 on
an input error (bad arguments, malformed files, invalid parameters) and 2 when an internal check fails (e.g. a
partition that does not verify).
"""

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import IO, List, Optional

import numpy as np

from pybiclique.compress.queries import QueryEngine
from pybiclique.compress.succinct import SBRepr, build_cb, build_sb
from pybiclique.core.graph import Graph
from pybiclique.core.partition import BicliquePartition, verify_dpartition, verify_partition
from pybiclique.core.partitioner import GraphPartitioner, HypergraphPartitioner
from pybiclique.core.tournament import ParityTournament, make_almost_regular
from pybiclique.opt.densest import ThresholdPeeling
from pybiclique.opt.finder import find_from_partition, find_sampled, find_topdeg
from pybiclique.partition.basic import (DirectedTracePartitioner, ShatterPartitioner, TracePartitioner,
                                        TrivialPartitioner)
from pybiclique.partition.density import DensityPartitioner
from pybiclique.partition.hypergraph import EquitablePartitioner, StepUpPartitioner
from pybiclique.util import generators as gen
from pybiclique.util import io
from pybiclique.util.stats import report_theory, report_theory_dpartition

GRAPH_ALGOS = ('trivial', 'ep', 'density', 'shattering')
HYPERGRAPH_ALGOS = ('stepup', 'equitable')


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors: exit code 1 instead of argparse's 2

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f'{self.prog}: error: {message}\n')


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, Fraction):
        return f'{value.numerator}/{value.denominator}'
    raise TypeError(f'Object of type {type(value).__name__} is not JSON serializable.')


def emit(record: dict, stream: Optional[IO] = None):
    r"""
    Print ``record`` as one JSON line.
    """
    stream = sys.stdout if stream is None else stream
    stream.write(json.dumps(record, default=_jsonable) + '\n')
    stream.flush()


def make_partitioner(algo: str, part_size: Optional[int] = None, d: Optional[int] = None, tournament: str = 'circulant',
                     directed: bool = False, n_jobs: int = 1, verbose: Optional[int] = None,
                     min_part_size: int = 0) -> GraphPartitioner:
    r"""
    Instantiate a biclique partitioner by name (one of ``trivial``, ``ep``, ``density``, ``shattering``).
    ``min_part_size`` only applies to ``ep``.

    Raises
    ------
    ValueError
        On an unknown name, a directed request for an undirected-only algorithm, or ``shattering`` without ``d``.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.cli import make_partitioner
       >>> type(make_partitioner('ep')).__name__, type(make_partitioner('ep', directed=True)).__name__
       ('TracePartitioner', 'DirectedTracePartitioner')
       >>> make_partitioner('ep', min_part_size=1).part_size_for(8)
       1
       >>> make_partitioner('shattering')
       Traceback (most recent call last):
       ...
       ValueError: Algorithm shattering needs the degree d of the shatter function.
    """
    T = ParityTournament if tournament == 'parity' else make_almost_regular
    if algo == 'trivial':
        return TrivialPartitioner()
    if directed:
        if algo != 'ep':
            raise ValueError(f'Algorithm {algo} does not support digraphs: use trivial or ep.')
        return DirectedTracePartitioner(part_size=part_size, n_jobs=n_jobs, verbose=verbose)
    if algo == 'ep':
        return TracePartitioner(part_size=part_size, tournament=T, n_jobs=n_jobs, verbose=verbose,
                                min_part_size=min_part_size)
    if algo == 'density':
        return DensityPartitioner(part_size=part_size, n_jobs=n_jobs, verbose=verbose)
    if algo == 'shattering':
        if d is None:
            raise ValueError('Algorithm shattering needs the degree d of the shatter function.')
        return ShatterPartitioner(d=d, tournament=T, n_jobs=n_jobs, verbose=verbose)
    raise ValueError(f'Unknown algorithm {algo}: expected one of {", ".join(GRAPH_ALGOS)}.')


def make_hypergraph_partitioner(algo: str, base: GraphPartitioner) -> HypergraphPartitioner:
    if algo == 'stepup':
        return StepUpPartitioner(base=base)
    if algo == 'equitable':
        return EquitablePartitioner(base=base)
    raise ValueError(f'Unknown algorithm {algo}: expected one of {", ".join(HYPERGRAPH_ALGOS)}.')


def _input(path: Optional[str]):
    return sys.stdin if path in (None, '-') else path


def _output(path: Optional[str]):
    return sys.stdout if path in (None, '-') else path


def _cmd_gen(args) -> int:
    target = _output(args.output)
    if args.model == 'gnp':
        if args.directed:
            io.write_digraph(gen.gen_dgnp(int(args.params[0]), float(args.params[1]), seed=args.seed), target)
            return 0
        g = gen.gen_gnp(int(args.params[0]), float(args.params[1]), seed=args.seed)
    elif args.model == 'gnm':
        g = gen.gen_gnm(int(args.params[0]), int(args.params[1]), seed=args.seed)
    elif args.model == 'interval':
        g = gen.gen_interval(int(args.params[0]), seed=args.seed)
    elif args.model == 'circulant':
        g = gen.gen_circulant(int(args.params[0]), int(args.params[1]))
    else:
        n, d, p = int(args.params[0]), int(args.params[1]), float(args.params[2])
        io.write_hypergraph(gen.gen_hypergraph(n, d, p, seed=args.seed), target)
        return 0
    io.write_graph(g, target)
    return 0


_GEN_ARITY = dict(gnp=2, gnm=2, interval=1, circulant=2, hypergraph=3)


def _cmd_partition(args) -> int:
    g = io.read_digraph(_input(args.input)) if args.directed else io.read_graph(_input(args.input))
    partitioner = make_partitioner(args.algo, part_size=args.part_size, d=args.d, tournament=args.tournament,
                                   directed=args.directed, n_jobs=args.n_jobs, verbose=args.verbose)
    p = partitioner(g)
    verify_partition(g, p).raise_if_failed()
    io.write_partition(p, _output(args.output))
    print(f'{args.algo}: {len(p)} bicliques, weight {p.weight()}, max load {p.max_load()}.', file=sys.stderr)
    if args.algo == 'density':
        w_ep = make_partitioner('ep', n_jobs=args.n_jobs)(g).weight()
        print(f'ep: weight {w_ep}, min(density, ep) {min(p.weight(), w_ep)}.', file=sys.stderr)
    return 0


def _cmd_dpartition(args) -> int:
    h = io.read_hypergraph(_input(args.input))
    # links are small: single-vertex parts beat the default part size there
    base = make_partitioner(args.base, part_size=args.part_size, n_jobs=args.n_jobs, min_part_size=1)
    p = make_hypergraph_partitioner(args.algo, base)(h)
    verify_dpartition(h, p).raise_if_failed()
    io.write_partition(p, _output(args.output))
    print(f'{args.algo}: {len(p)} {h.d}-cliques, weight {p.weight()}, max load {p.max_load()}.', file=sys.stderr)
    return 0


def _read_biclique_partition(path: Optional[str]) -> BicliquePartition:
    p = io.read_partition(_input(path))
    if not isinstance(p, BicliquePartition):
        raise ValueError(f'Expected a biclique partition, got a {p.arity}-clique partition.')
    return p


def _cmd_compress(args) -> int:
    sb = build_sb(_read_biclique_partition(args.input))
    if args.output in (None, '-'):
        sys.stdout.buffer.write(sb.to_bytes())
        sys.stdout.buffer.flush()
    else:
        io.write_sbp(sb, args.output)
    print(f'{len(sb)} bicliques, {sb.bits()} bits.', file=sys.stderr)
    return 0


def _read_sb(path: Optional[str]) -> SBRepr:
    if path in (None, '-'):
        return SBRepr.from_bytes(sys.stdin.buffer.read())
    return io.read_sbp(path)


def _cmd_decompress(args) -> int:
    io.write_partition(_read_sb(args.input).to_partition(), _output(args.output))
    return 0


def _cmd_query(args) -> int:
    engine = QueryEngine(_read_sb(args.input))
    S = io.parse_vertex_list(args.S)
    if args.kind == 'independent':
        emit(dict(query='independent', size=int(S.size), result=engine.is_independent(S)))
    else:
        T = io.parse_vertex_list(args.T or '')
        emit(dict(query='cut', result=engine.cut(S, T)))
    return 0


def _cmd_densest(args) -> int:
    p = _read_sb(args.sbp).to_partition() if args.sbp is not None else _read_biclique_partition(args.input)
    result = ThresholdPeeling(build_cb(p), alpha=args.alpha, verbose=args.verbose).iterate()[0]
    emit(dict(vertices=result.vertices, size=int(result.vertices.size), density=result.density,
              density_value=float(result.density), rounds=result.rounds))
    return 0


def _cmd_find(args) -> int:
    g = io.read_graph(_input(args.input))
    if args.method == 'partition':
        p = make_partitioner(args.algo, part_size=args.part_size)(g)
        verify_partition(g, p).raise_if_failed()
        found = find_from_partition(g, p)
    elif args.method == 'topdeg':
        found = find_topdeg(g, epsilon=args.epsilon)
    else:
        found = find_sampled(g, seed=args.seed, epsilon=args.epsilon)
    emit(dict(A=found.A, B=found.B, t=found.t, provenance=found.provenance))
    return 0


def _cmd_stats(args) -> int:
    p = io.read_partition(_input(args.input))
    if isinstance(p, BicliquePartition):
        g: Optional[Graph] = io.read_graph(args.graph) if args.graph is not None else None
        if g is not None:
            verify_partition(g, p).raise_if_failed()
        baseline = None
        if args.baseline is not None:
            if g is None:
                raise ValueError('Option --baseline needs the partitioned graph: pass --graph.')
            baseline = make_partitioner(args.baseline)(g)
        emit(report_theory(p, g, baseline=baseline))
    else:
        if args.baseline is not None:
            raise ValueError('Option --baseline only applies to biclique partitions.')
        h = io.read_hypergraph(args.graph) if args.graph is not None else None
        if h is not None:
            verify_dpartition(h, p).raise_if_failed()
        emit(report_theory_dpartition(p, h))
    return 0


def _cmd_bench(args) -> int:
    from pybiclique import bench
    return bench.run(suite=args.suite, seed=args.seed, config=args.config, output=args.output,
                     large=args.large)


def build_parser() -> argparse.ArgumentParser:
    r"""
    Argument parser of the ``pybiclique`` command.
    """
    parser = _Parser(prog='pybiclique', description='Biclique and d-clique partitions of graphs and hypergraphs.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    cmd = sub.add_parser('gen', help='Generate a random graph or hypergraph.')
    cmd.add_argument('model', choices=sorted(_GEN_ARITY))
    cmd.add_argument('params', nargs='+', help='gnp: n p; gnm: n m; interval: n; circulant: n k; hypergraph: n d p.')
    cmd.add_argument('--seed', type=int, default=None)
    cmd.add_argument('--directed', action='store_true', help='Directed G(n,p) (gnp only).')
    cmd.add_argument('-o', '--output', default=None)
    cmd.set_defaults(func=_cmd_gen)

    def partition_options(cmd, algos, default):
        cmd.add_argument('--algo', choices=algos, default=default)
        cmd.add_argument('--part-size', type=int, default=None)
        cmd.add_argument('--n-jobs', type=int, default=1)
        cmd.add_argument('-i', '--input', default=None)
        cmd.add_argument('-o', '--output', default=None)

    cmd = sub.add_parser('partition', help='Biclique partition of a graph read on stdin.')
    partition_options(cmd, GRAPH_ALGOS, 'ep')
    cmd.add_argument('--d', type=int, default=None, help='Degree of the shatter function (shattering only).')
    cmd.add_argument('--tournament', choices=('circulant', 'parity'), default='circulant')
    cmd.add_argument('--directed', action='store_true')
    cmd.add_argument('--verbose', type=int, default=None)
    cmd.set_defaults(func=_cmd_partition)

    cmd = sub.add_parser('dpartition', help='d-clique partition of a hypergraph read on stdin.')
    partition_options(cmd, HYPERGRAPH_ALGOS, 'equitable')
    cmd.add_argument('--base', choices=('trivial', 'ep', 'density'), default='ep')
    cmd.set_defaults(func=_cmd_dpartition)

    cmd = sub.add_parser('compress', help='Encode a biclique partition as a .sbp file.')
    cmd.add_argument('-i', '--input', default=None)
    cmd.add_argument('-o', '--output', default=None)
    cmd.set_defaults(func=_cmd_compress)

    cmd = sub.add_parser('decompress', help='Decode a .sbp file into a biclique partition.')
    cmd.add_argument('input', nargs='?', default=None)
    cmd.add_argument('-o', '--output', default=None)
    cmd.set_defaults(func=_cmd_decompress)

    cmd = sub.add_parser('query', help='Independent-set or cut query on a .sbp file.')
    cmd.add_argument('kind', choices=('independent', 'cut'))
    cmd.add_argument('input', nargs='?', default=None)
    cmd.add_argument('--S', required=True, help='Comma- or space-separated vertex ids.')
    cmd.add_argument('--T', default=None, help='Second side of a cut query.')
    cmd.set_defaults(func=_cmd_query)

    cmd = sub.add_parser('densest', help='Approximate densest subgraph of a partitioned graph.')
    cmd.add_argument('-i', '--input', default=None, help='Partition file (stdin by default).')
    cmd.add_argument('--sbp', default=None, help='Read a .sbp file instead of a partition.')
    cmd.add_argument('--alpha', type=float, default=2.)
    cmd.add_argument('--verbose', type=int, default=None)
    cmd.set_defaults(func=_cmd_densest)

    cmd = sub.add_parser('find-biclique', help='Large balanced biclique of a graph read on stdin.')
    cmd.add_argument('--method', choices=('partition', 'topdeg', 'sampled'), default='topdeg')
    cmd.add_argument('--algo', choices=('trivial', 'ep', 'density'), default='density')
    cmd.add_argument('--part-size', type=int, default=None)
    cmd.add_argument('--epsilon', type=float, default=None)
    cmd.add_argument('--seed', type=int, default=None)
    cmd.add_argument('-i', '--input', default=None)
    cmd.set_defaults(func=_cmd_find)

    cmd = sub.add_parser('stats', help='Weight, loads and theoretical targets of a partition read on stdin.')
    cmd.add_argument('-i', '--input', default=None)
    cmd.add_argument('--graph', default=None, help='Partitioned graph or hypergraph, verified against the partition.')
    cmd.add_argument('--baseline', choices=('ep',), default=None,
                     help='Also partition --graph with this algorithm and report the lighter of both weights.')
    cmd.set_defaults(func=_cmd_stats)

    cmd = sub.add_parser('bench', help='Run an experiment suite and print a JSON-lines report.')
    cmd.add_argument('--suite', choices=('acceptance', 'smoke'), default='smoke')
    cmd.add_argument('--seed', type=int, default=0)
    cmd.add_argument('--config', default=None, help='INI file overriding the bundled bench.cfg.')
    cmd.add_argument('--large', action='store_true', help='Extend the weight trend to n = 2^16 (tens of GB).')
    cmd.add_argument('-o', '--output', default=None)
    cmd.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    r"""
    Entry point of the ``pybiclique`` command.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.cli import main
       >>> main(['gen', 'circulant', '6', '1', '-o', 'ring.graph'])
       0
       >>> main(['partition', '--algo', 'trivial', '-i', 'ring.graph', '-o', 'ring.part'])
       0
       >>> main(['stats', '-i', 'ring.part'])  # doctest: +ELLIPSIS
       {"n": 6, "m": 6, ...}
       0
       >>> main(['gen', 'gnp', '10'])
       1
       >>> main(['partition', '--unknown'])
       1
       >>> import os; os.remove('ring.graph'); os.remove('ring.part')
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == 'gen' and len(args.params) != _GEN_ARITY[args.model]:
            raise ValueError(f'gen {args.model} takes {_GEN_ARITY[args.model]} parameters, got {len(args.params)}.')
        with warnings.catch_warnings():
            warnings.simplefilter('default', RuntimeWarning)
            return args.func(args)
    except AssertionError as e:
        print(f'pybiclique: internal check failed: {e}', file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as e:
        print(f'pybiclique: error: {e}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
