# #############################################################################
# bench.py
# ========
# #############################################################################

r"""
Experiment suites checking the exactness, bounds and trends of the library at desk scale.

A suite is a list of independent *cells*, each producing one or more records ``(criterion, case, value, passed,
hard, detail)``. Cells are spread over ``BICLIQUE_THREADS`` joblib workers (1 if unset) and every cell draws its
randomness from its own child of one :py:class:`numpy.random.SeedSequence`, so that the report only depends on the
seed. Instance sizes and bands are read from ``bench.cfg`` (bundled with the package) or a user-provided INI file
with the same keys.

The report is a JSON-lines table (one line per case, then one ``summary`` line per criterion). A failed hard check
makes :py:func:`~pybiclique.bench.run` return 2; soft checks (timings, relative comparisons) only warn.
"""

import configparser
import itertools
import math
import os
import pathlib
import sys
import time
import warnings
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import joblib as job
import numpy as np
import pandas as pd

from pybiclique.compress.queries import QueryEngine
from pybiclique.compress.succinct import CBRepr, build_cb, build_sb, decode
from pybiclique.core.graph import Graph
from pybiclique.core.oracle import brute_cut, brute_densest, brute_is_independent
from pybiclique.core.partition import verify_dpartition, verify_partition
from pybiclique.math.entropy import binary_entropy
from pybiclique.opt.densest import densest_approx
from pybiclique.opt.finder import find_from_partition, find_sampled, find_topdeg
from pybiclique.partition.basic import (DirectedTracePartitioner, ShatterPartitioner, TracePartitioner,
                                        ep_load_bound)
from pybiclique.partition.density import DensityPartitioner
from pybiclique.partition.hypergraph import (EquitablePartitioner, StepUpPartitioner, make_equitable_strategy,
                                             multinomial_identity_check)
from pybiclique.util.generators import gen_dgnp, gen_gnm, gen_gnp, gen_hypergraph, gen_interval
from pybiclique.util.misc import ceil_lg

DEFAULT_CONFIG = pathlib.Path(__file__).parent / 'bench.cfg'
THREADS_VARIABLE = 'BICLIQUE_THREADS'

Cell = Tuple[str, Callable, dict]


def load_config(suite: str, path: Optional[str] = None) -> configparser.SectionProxy:
    r"""
    Read the section ``suite`` of a bench configuration file.

    Raises
    ------
    ValueError
        If the file has no such section.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.bench import load_config, as_floats
       >>> config = load_config('acceptance')
       >>> as_floats(config['weight_band']), config.getint('query_exhaustive_n')
       ([0.5, 1.25], 5)
    """
    parser = configparser.ConfigParser()
    if not parser.read(path or DEFAULT_CONFIG):
        raise ValueError(f'Cannot read bench configuration {path or DEFAULT_CONFIG}.')
    if not parser.has_section(suite):
        raise ValueError(f'Unknown suite {suite}: expected one of {", ".join(parser.sections())}.')
    return parser[suite]


def as_ints(value: str) -> List[int]:
    return [int(v) for v in value.split(',')]


def as_floats(value: str) -> List[float]:
    return [float(v) for v in value.split(',')]


def thread_count() -> int:
    r"""
    Number of bench workers, read from ``BICLIQUE_THREADS``.
    """
    value = os.environ.get(THREADS_VARIABLE, '1')
    try:
        return max(1, int(value))
    except ValueError:
        raise ValueError(f'{THREADS_VARIABLE} must be an integer, got {value!r}.') from None


def _record(criterion: str, case: str, passed: bool, value=None, hard: bool = True, detail: str = '') -> dict:
    return dict(criterion=criterion, case=case, value=value, passed=bool(passed), hard=hard, detail=detail)


def _quiet(func: Callable, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', RuntimeWarning)
        return func(*args, **kwargs)


def _in_band(value: float, band: List[float]) -> bool:
    return band[0] <= value <= band[1]


# cells ################################################################################################################

def cell_exactness(kind: str, n: int, seed: np.random.SeedSequence, p: float = 0.5, d: int = 3, m: int = 0,
                   algo: str = 'ep') -> List[dict]:
    case = f'{kind}/{algo}/n={n}' + (f'/d={d}' if kind == 'hypergraph' else f'/p={p}')
    if kind == 'hypergraph':
        h = gen_hypergraph(n, d, min(1., m / math.comb(n, d)), seed=seed)
        partitioner = StepUpPartitioner() if algo == 'stepup' else EquitablePartitioner()
        report = verify_dpartition(h, _quiet(partitioner, h))
    else:
        if kind == 'directed':
            g, partitioner = gen_dgnp(n, p, seed=seed), DirectedTracePartitioner()
        elif kind == 'interval':
            g, partitioner = gen_interval(n, seed=seed), ShatterPartitioner(d=2)
        else:
            g = gen_gnp(n, p, seed=seed)
            partitioner = DensityPartitioner() if algo == 'density' else TracePartitioner()
        report = verify_partition(g, _quiet(partitioner, g))
    return [_record('exactness', case, report.ok, detail=report.message)]


def cell_load_bound(n: int, seed: np.random.SeedSequence) -> List[dict]:
    g = gen_gnp(n, 0.5, seed=seed)
    partitioner = TracePartitioner()
    r = partitioner.part_size_for(n)
    load, bound = _quiet(partitioner, g).max_load(), ep_load_bound(n, r)
    return [_record('load-bound', f'n={n}/r={r}', load <= bound, value=load, detail=f'bound {bound}')]


def cell_weight_trend(ns: List[int], band: List[float], seed: np.random.SeedSequence) -> List[dict]:
    ratios = []
    seeds = seed.spawn(len(ns))
    for n, s in zip(ns, seeds):
        p = _quiet(TracePartitioner(), gen_gnp(n, 0.5, seed=s))
        ratios.append(p.weight() * math.log2(n) / n ** 2)
    records = [_record('weight-trend', f'n={n}', True, value=ratio) for n, ratio in zip(ns, ratios)]
    decreasing = all(b < a for a, b in zip(ratios, ratios[1:]))
    records.append(_record('weight-trend', 'band', _in_band(ratios[-1], band), value=ratios[-1],
                           detail=f'band {band} at n={ns[-1]}'))
    records.append(_record('weight-trend', 'decreasing', decreasing, detail=f'ratios {ratios}'))
    return records


def cell_density_trend(n: int, gamma: float, band: List[float], graded: bool,
                       seed: np.random.SeedSequence) -> List[dict]:
    g = gen_gnm(n, int(round(gamma * n * (n - 1) / 2)), seed=seed)
    w_density = _quiet(DensityPartitioner(), g).weight()
    w_ep = _quiet(TracePartitioner(), g).weight()
    best = min(w_density, w_ep)
    ratio = best * math.log2(n) / (binary_entropy(float(g.edge_density())) * n ** 2)
    case = f'n={n}/gamma={gamma}'
    records = [_record('density-trend', case, _in_band(ratio, band) if graded else True, value=ratio,
                       hard=graded, detail=f'band {band}' if graded else 'not graded'),
               _record('density-trend', f'{case}/weights', True, value=[w_density, w_ep, best])]
    if gamma <= 0.2 or gamma >= 0.8:
        records.append(_record('density-trend', f'{case}/beats-ep', w_density < w_ep, value=w_density / w_ep,
                               detail=f'density weight {w_density}, ep weight {w_ep}'))
    return records


def cell_multinomial(d: int, seed: np.random.SeedSequence) -> List[dict]:
    strategy = make_equitable_strategy(d)
    return [_record('multinomial', f'd={d}/identity', multinomial_identity_check(d)),
            _record('multinomial', f'd={d}/equitable', strategy.is_valid() and strategy.is_equitable(),
                    detail=f'masses {strategy.masses()}')]


def _all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[j] for j in range(len(pairs)) if mask >> j & 1])


def cell_queries_exhaustive(n: int, seed: np.random.SeedSequence) -> List[dict]:
    mismatches = 0
    checked = 0
    for g in _all_graphs(n):
        engine = QueryEngine(build_sb(TracePartitioner(part_size=2)(g)))
        for sides in itertools.product(range(3), repeat=n):
            S = [v for v in range(n) if sides[v] == 1]
            T = [v for v in range(n) if sides[v] == 2]
            if not T:
                mismatches += engine.is_independent(S) != brute_is_independent(g, S)
            mismatches += engine.cut(S, T) != brute_cut(g, S, T)
            checked += 1
    return [_record('queries', f'exhaustive/n<={n}', mismatches == 0, value=mismatches,
                    detail=f'{checked} (S, T) pairs checked')]


def cell_queries_sampled(samples: int, max_n: int, seed: np.random.SeedSequence) -> List[dict]:
    rng = np.random.default_rng(seed)
    mismatches = 0
    for _ in range(samples):
        n = int(rng.integers(6, max_n + 1))
        g = gen_gnp(n, float(rng.random()), seed=rng)
        engine = QueryEngine(build_sb(_quiet(TracePartitioner(), g)))
        sides = rng.integers(0, 3, size=n)
        S, T = np.flatnonzero(sides == 1), np.flatnonzero(sides == 2)
        mismatches += engine.cut(S, T) != brute_cut(g, S, T)
        independent = rng.choice(n, size=int(rng.integers(1, 5)), replace=False)
        mismatches += engine.is_independent(independent) != brute_is_independent(g, independent)
    return [_record('queries', f'sampled/n<={max_n}', mismatches == 0, value=mismatches,
                    detail=f'{samples} triples')]


def cell_densest(n: int, samples: int, alphas: List[float], seed: np.random.SeedSequence) -> List[dict]:
    rng = np.random.default_rng(seed)
    failures = 0
    worst = math.inf
    for _ in range(samples):
        g = gen_gnp(n, float(rng.uniform(0.1, 0.9)), seed=rng)
        optimum, _ = brute_densest(g)
        if optimum == 0:
            continue
        cb = build_cb(_quiet(TracePartitioner(), g))
        for alpha in alphas:
            density = densest_approx(cb, alpha=alpha).density
            failures += density < optimum / Fraction(2 * alpha)
            worst = min(worst, float(density / optimum) * 2 * alpha)
    return [_record('densest', f'n={n}', failures == 0, value=worst,
                    detail=f'{failures} failures, alpha {alphas}')]


def cell_finder_soundness(n: int, runs: int, seed: np.random.SeedSequence) -> List[dict]:
    rng = np.random.default_rng(seed)
    unsound = 0
    pigeonhole = 0
    for _ in range(runs):
        g = gen_gnp(n, float(rng.uniform(0.2, 0.9)), seed=rng)
        if g.m == 0:
            continue
        p = _quiet(DensityPartitioner(), g)
        found = find_from_partition(g, p)
        pigeonhole += found.t * p.weight() < g.m
        for other in (_quiet(find_topdeg, g), _quiet(find_sampled, g, seed=rng)):
            unsound += not other.verify(g)
        unsound += not found.verify(g)
    return [_record('finder', f'soundness/n={n}', unsound == 0, value=unsound, detail=f'{runs} runs'),
            _record('finder', f'pigeonhole/n={n}', pigeonhole == 0, value=pigeonhole)]


def cell_finder_floor(n: int, gamma: float, floor: int, seed: np.random.SeedSequence) -> List[dict]:
    g = gen_gnp(n, gamma, seed=seed)
    found = _quiet(find_topdeg, g)
    return [_record('finder', f'topdeg/n={n}', found.t >= floor and found.verify(g), value=found.t,
                    detail=f'floor {floor}, {found.provenance}')]


def cell_representation(n: int, seed: np.random.SeedSequence) -> List[dict]:
    g = gen_gnp(n, 0.3, seed=seed)
    p = _quiet(TracePartitioner(), g)
    sb, cb = build_sb(p), build_cb(p)
    lg_n = ceil_lg(n)
    roundtrip = decode(sb.to_bytes()) == p and CBRepr.from_bytes(cb.to_bytes()).to_bytes() == cb.to_bytes()
    accounting = sb.bits() == p.weight() * lg_n and cb.extra_bits() == int(p.loads().sum()) * (2 * lg_n + 1)
    return [_record('representation', f'n={n}/roundtrip', roundtrip),
            _record('representation', f'n={n}/bits', accounting, value=sb.bits())]


def cell_runtime(n: int, band: List[float], seed: np.random.SeedSequence) -> List[dict]:
    _warm_up()
    timings = []
    for size, s in zip((n // 2, n), seed.spawn(2)):
        g = gen_gnp(size, 0.5, seed=s)
        start = time.perf_counter()
        _quiet(TracePartitioner(), g)
        timings.append(time.perf_counter() - start)
    ratio = timings[1] / max(timings[0], 1e-9)
    return [_record('runtime', f'ep/n={n}', _in_band(ratio, band), value=ratio, hard=False,
                    detail=f'band {band}, {timings[0]:.3f}s -> {timings[1]:.3f}s')]


def _warm_up():
    # compiles the numba kernels before anything is timed
    g = gen_gnp(64, 0.5, seed=0)
    _quiet(TracePartitioner(), g)
    _quiet(DensityPartitioner(), g)
    densest_approx(build_cb(_quiet(TracePartitioner(), g)), alpha=2)


def cell_runtime_density(n: int, gammas: List[float], band: List[float], seed: np.random.SeedSequence) -> List[dict]:
    _warm_up()
    timings = []
    for gamma, s in zip(gammas, seed.spawn(2)):
        g = gen_gnm(n, int(round(gamma * n * (n - 1) / 2)), seed=s)
        start = time.perf_counter()
        _quiet(DensityPartitioner(), g)
        timings.append(time.perf_counter() - start)
    ratio = timings[1] / max(timings[0], 1e-9)
    return [_record('runtime', f'density/n={n}/gamma={gammas[0]}->{gammas[1]}', _in_band(ratio, band), value=ratio,
                    hard=False, detail=f'band {band}, {timings[0]:.3f}s -> {timings[1]:.3f}s')]


def cell_runtime_densest(n: int, alphas: List[float], band: List[float], seed: np.random.SeedSequence) -> List[dict]:
    _warm_up()
    cb = build_cb(_quiet(TracePartitioner(), gen_gnp(n, 0.5, seed=seed)))
    rounds, timings = [], []
    for alpha in alphas:
        start = time.perf_counter()
        rounds.append(densest_approx(cb, alpha=alpha).rounds)
        timings.append(time.perf_counter() - start)
    rounds_ratio = rounds[1] / rounds[0]
    time_ratio = timings[1] / max(timings[0], 1e-9)
    case = f'densest/n={n}/alpha={alphas[0]}->{alphas[1]}'
    return [_record('runtime', f'{case}/rounds', _in_band(rounds_ratio, band), value=rounds_ratio, hard=False,
                    detail=f'band {band}, {rounds[0]} -> {rounds[1]} rounds'),
            _record('runtime', f'{case}/time', _in_band(time_ratio, band), value=time_ratio, hard=False,
                    detail=f'band {band}, {timings[0]:.3f}s -> {timings[1]:.3f}s')]


# planning #############################################################################################################

def plan(config: configparser.SectionProxy, large: bool = False) -> List[Cell]:
    r"""
    List the cells of a suite.

    Parameters
    ----------
    config: configparser.SectionProxy
        Suite section, see :py:func:`~pybiclique.bench.load_config`.
    large: bool
        If ``True``, the weight trend is extended to ``weight_trend_large_n`` and graded against
        ``weight_band_large``. Beware that :math:`G(2^{16}, 1/2)` alone needs tens of GB of memory.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.bench import load_config, plan
       >>> config = load_config('acceptance')
       >>> trend = [kwargs for name, _, kwargs in plan(config, large=True) if name == 'weight-trend'][0]
       >>> trend['ns'], trend['band']
       ([4096, 8192, 16384, 32768, 65536], [0.5, 1.1])
       >>> [kwargs['gamma'] for name, _, kwargs in plan(config) if name == 'density-trend']
       [0.05, 0.1, 0.25, 0.9]
    """
    cells: List[Cell] = []
    for n, p, _ in itertools.product(as_ints(config['exactness_graph_n']), as_floats(config['exactness_graph_p']),
                                     range(config.getint('exactness_graph_seeds'))):
        for algo in ('ep', 'density'):
            cells.append(('exactness', cell_exactness, dict(kind='graph', n=n, p=p, algo=algo)))
    for n in as_ints(config['exactness_large_n']):
        for algo in ('ep', 'density'):
            cells.append(('exactness', cell_exactness, dict(kind='graph', n=n, p=0.1, algo=algo)))
    for _ in range(config.getint('exactness_sparse_seeds')):
        for n in as_ints(config['exactness_directed_n']):
            cells.append(('exactness', cell_exactness, dict(kind='directed', n=n, p=0.3)))
        for n in as_ints(config['exactness_interval_n']):
            cells.append(('exactness', cell_exactness, dict(kind='interval', n=n, algo='shattering')))
    for n, d, _ in itertools.product(as_ints(config['exactness_hypergraph_n']), as_ints(config['exactness_hypergraph_d']),
                                     range(config.getint('exactness_hypergraph_seeds'))):
        for algo in ('stepup', 'equitable'):
            cells.append(('exactness', cell_exactness, dict(kind='hypergraph', n=n, d=d, algo=algo,
                                                            m=config.getint('exactness_hypergraph_m'))))
    for n in as_ints(config['load_bound_n']):
        cells.append(('load-bound', cell_load_bound, dict(n=n)))
    trend_ns, trend_band = as_ints(config['weight_trend_n']), as_floats(config['weight_band'])
    if large:
        trend_ns = trend_ns + as_ints(config['weight_trend_large_n'])
        trend_band = as_floats(config['weight_band_large'])
    cells.append(('weight-trend', cell_weight_trend, dict(ns=trend_ns, band=trend_band)))
    graded = as_floats(config['density_band_gammas'])
    for gamma in as_floats(config['density_gammas']):
        cells.append(('density-trend', cell_density_trend, dict(n=config.getint('density_n'), gamma=gamma,
                                                                band=as_floats(config['density_band']),
                                                                graded=gamma in graded)))
    for d in as_ints(config['multinomial_d']):
        cells.append(('multinomial', cell_multinomial, dict(d=d)))
    cells.append(('queries', cell_queries_exhaustive, dict(n=config.getint('query_exhaustive_n'))))
    cells.append(('queries', cell_queries_sampled, dict(samples=config.getint('query_samples'),
                                                        max_n=config.getint('query_max_n'))))
    for n in as_ints(config['densest_n']):
        cells.append(('densest', cell_densest, dict(n=n, samples=config.getint('densest_samples'),
                                                    alphas=as_floats(config['densest_alpha']))))
    cells.append(('finder', cell_finder_soundness, dict(n=config.getint('finder_sound_n'),
                                                        runs=config.getint('finder_sound_runs'))))
    cells.append(('finder', cell_finder_floor, dict(n=config.getint('finder_floor_n'),
                                                    gamma=config.getfloat('finder_floor_gamma'),
                                                    floor=config.getint('finder_floor'))))
    for n in as_ints(config['representation_n']):
        cells.append(('representation', cell_representation, dict(n=n)))
    cells.append(('runtime', cell_runtime, dict(n=config.getint('runtime_n'), band=as_floats(config['runtime_band']))))
    cells.append(('runtime', cell_runtime_density, dict(n=config.getint('runtime_density_n'),
                                                        gammas=as_floats(config['runtime_density_gammas']),
                                                        band=as_floats(config['runtime_density_band']))))
    cells.append(('runtime', cell_runtime_densest, dict(n=config.getint('runtime_densest_n'),
                                                        alphas=as_floats(config['runtime_densest_alpha']),
                                                        band=as_floats(config['runtime_densest_band']))))
    return cells


def evaluate(cells: List[Cell], seed: int = 0, n_jobs: int = 1, joblib_backend: str = 'loky') -> pd.DataFrame:
    r"""
    Run the cells and gather their records in a table, followed by one summary row per criterion.

    Examples
    --------

    .. doctest::

       >>> from pybiclique.bench import cell_multinomial, evaluate
       >>> report = evaluate([('multinomial', cell_multinomial, dict(d=d)) for d in (3, 4)], seed=1)
       >>> summary = report[report.case == 'summary']
       >>> summary.criterion.tolist(), summary.passed.tolist()
       (['multinomial'], [True])
    """
    seeds = np.random.SeedSequence(seed).spawn(len(cells))
    with job.Parallel(backend=joblib_backend, n_jobs=n_jobs) as parallel:
        results = parallel(job.delayed(func)(seed=s, **kwargs) for (_, func, kwargs), s in zip(cells, seeds))
    records = [r for result in results for r in result]
    report = pd.DataFrame(records, columns=['criterion', 'case', 'value', 'passed', 'hard', 'detail'])
    summary = []
    for criterion, rows in report.groupby('criterion', sort=False):
        hard = rows[rows.hard]
        summary.append(_record(criterion, 'summary', bool(hard.passed.all()),
                               value=int((~rows.passed).sum()), hard=bool(rows.hard.any()),
                               detail=f'{int(rows.passed.sum())}/{len(rows)} cases passed'))
    return pd.concat([report, pd.DataFrame(summary, columns=report.columns)], ignore_index=True)


def run(suite: str = 'smoke', seed: int = 0, config: Optional[str] = None, output: Optional[str] = None,
        large: bool = False) -> int:
    r"""
    Run a suite and write its JSON-lines report to ``output`` (stdout by default). ``large`` adds the instances too
    big for a default run, see :py:func:`~pybiclique.bench.plan`.

    Returns
    -------
    int
        0 if every hard check passed, 2 otherwise.
    """
    section = load_config(suite, config)
    report = evaluate(plan(section, large=large), seed=seed, n_jobs=thread_count())
    text = report.to_json(orient='records', lines=True)
    if output in (None, '-'):
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
    else:
        pathlib.Path(output).write_text(text)
    soft = report[(report.case != 'summary') & ~report.hard & ~report.passed]
    for _, row in soft.iterrows():
        warnings.warn(f'Soft check {row.criterion} {row.case} out of band: {row.detail}', RuntimeWarning)
    hard = report[(report.case != 'summary') & report.hard & ~report.passed]
    for _, row in hard.iterrows():
        print(f'FAILED {row.criterion} {row.case}: {row.detail}', file=sys.stderr)
    return 2 if len(hard) > 0 else 0
