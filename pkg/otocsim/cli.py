"""
    Command-line driver.

    Every subcommand prints JSON (or CSV for `sweep`) on stdout; diagnostics and
    logs go to stderr. Exit codes: 0 success, 2 invalid input, 1 runtime failure.
"""

import argparse
import json
import logging
import math
import os
import sys

import numpy as np

from .circuits.ensemble import (EnsembleSpec, GridGeometry, sample_circuit, resolve_entangler, default_butterfly,
                               default_measurement)
from .circuits.helperfn import pairs_to_complex
from .circuits.lightcone import lightcone_report, min_connecting_depth, corner_depth_scaling
from .circuits.namesnmapper import EnsembleType
from .circuits.paulis import parse_pauli_string, format_pauli_string
from .circuits.statevector import check_qubit_limit
from .correlators.engineconfig import CorrelatorEngine
from .correlators.namesnmapper import TraceMethod
from .errors import SpecError, FormatError, UndefinedCorrelationError
from .harness.ensembles import depth_sweep
from .harness.persistence import save_circuit, load_circuit, save_results, load_results
from .harness.statistics import fluctuation_stats, std_vs_n, pearson, records_frame

logger = logging.getLogger(__name__)

PROG = 'otocsim'


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so run_cli owns the exit code and the diagnostic line."""

    def error(self, message):
        raise _ArgumentError(message)


def _int_list(text):
    """'1,2,5' or '1-4' or a mix: '1-3,8'."""
    values = []
    try:
        for chunk in text.split(','):
            chunk = chunk.strip()
            if '-' in chunk[1:]:
                low, high = chunk.split('-', 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers like '1,2' or '1-8', got %r" % text)
    if not values:
        raise argparse.ArgumentTypeError("empty list %r" % text)
    return values


def _seed(text):
    try:
        value = int(text, 16) if text.lower().startswith('0x') else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer, got %r" % text)
    return value


def _add_common(parser):
    parser.add_argument('--max-qubits', type=int, default=None,
                        help="Override the statevector memory guard (default $OTOC_MAX_QUBITS or 26).")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG logs.")


def _add_grid(parser):
    parser.add_argument('--rows', type=int, default=3, help="Grid rows (default 3).")
    parser.add_argument('--cols', type=int, default=3, help="Grid columns (default 3).")


def _add_operators(parser):
    parser.add_argument('--b', default=None, help='Butterfly operator, e.g. "X:(3,3)" (default X at (rows,cols)).')
    parser.add_argument('--m', default=None, help='Z-type measurement operator (default "Z:(1,1)").')


def _add_ensemble(parser):
    parser.add_argument('--depth', type=int, default=8, help="Number of brickwork layers (default 8).")
    parser.add_argument('--seed', type=_seed, default=0, help="64-bit master seed (default 0).")
    parser.add_argument('--ensemble', default=EnsembleType.HAAR_2Q.value,
                        choices=[e.value for e in EnsembleType], help="Gate distribution.")
    parser.add_argument('--entangler', default=None,
                        help="fixed-entangler gate: iswap, sqrt-iswap, sycamore, cz, fsim:<theta>,<phi> "
                             "or a JSON file with a 4x4 matrix of [re, im] pairs.")


def _add_circuit_source(parser):
    _add_grid(parser)
    _add_ensemble(parser)
    parser.add_argument('--circuit', default=None, help="Circuit JSON from `sample`; overrides the grid flags.")
    _add_operators(parser)


def build_parser():
    parser = _Parser(prog=PROG, description="Out-of-time-order correlators of random brickwork circuits.")
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    sample_p = subparsers.add_parser('sample', help="Sample one circuit and write it as JSON.")
    _add_grid(sample_p)
    _add_ensemble(sample_p)
    sample_p.add_argument('-o', '--output', default=None, help="Output path (default stdout).")
    _add_common(sample_p)

    eval_p = subparsers.add_parser('eval', help="Exact moments <0|C^{2k}|0>.")
    _add_circuit_source(eval_p)
    eval_p.add_argument('--k', type=_int_list, default=[1], help="Moment order(s), e.g. 2 or 1,2,3.")
    eval_p.add_argument('--direct', action='store_true', help="Also report the 2k-application overlap.")
    eval_p.add_argument('--time-ordered', action='store_true', help="Also report <U^dagger B U M>.")
    _add_common(eval_p)

    estimate_p = subparsers.add_parser('estimate', help="Shot-based estimate of the moment.")
    _add_circuit_source(estimate_p)
    estimate_p.add_argument('--k', type=int, default=1, help="Moment order.")
    budget = estimate_p.add_mutually_exclusive_group(required=True)
    budget.add_argument('--shots', type=int, help="Number of shots.")
    budget.add_argument('--epsilon', type=float, help="Target additive error; shots = ceil(1/eps^2).")
    estimate_p.add_argument('--shot-seed', type=_seed, default=None,
                            help="Seed of the outcome stream (default the circuit seed).")
    _add_common(estimate_p)

    sweep_p = subparsers.add_parser('sweep', help="Depth sweep over an ensemble; writes CSV.")
    _add_grid(sweep_p)
    sweep_p.add_argument('--depths', type=_int_list, required=True, help="Depths, e.g. 1-8 or 2,4,8,20.")
    sweep_p.add_argument('--instances', type=int, default=10, help="Circuits per depth (default 10).")
    sweep_p.add_argument('--k', type=_int_list, default=[1, 2], help="Moment orders (default 1,2).")
    sweep_p.add_argument('--shots', type=int, default=None, help="Optional shots per instance.")
    sweep_p.add_argument('--seed', type=_seed, default=0, help="64-bit master seed (default 0).")
    sweep_p.add_argument('--ensemble', default=EnsembleType.HAAR_2Q.value, choices=[e.value for e in EnsembleType])
    sweep_p.add_argument('--entangler', default=None, help="Gate for the fixed-entangler ensemble.")
    sweep_p.add_argument('--threads', type=int, default=1, help="Worker processes (default 1).")
    sweep_p.add_argument('-o', '--output', default=None, help="CSV path (default stdout); writes <path>.spec.json.")
    _add_operators(sweep_p)
    _add_common(sweep_p)

    lightcone_p = subparsers.add_parser('lightcone', help="d* and light-cone growth.")
    _add_grid(lightcone_p)
    _add_operators(lightcone_p)
    lightcone_p.add_argument('--max-depth', type=int, default=None, help="Report cone sizes up to this depth.")
    lightcone_p.add_argument('--sides', type=_int_list, default=None,
                             help="Instead: corner-to-corner d* on l x l grids for these l, with a linear fit.")
    _add_common(lightcone_p)

    trace_p = subparsers.add_parser('trace', help="Maximally mixed moment Tr(C^{2k})/2^n.")
    _add_circuit_source(trace_p)
    trace_p.add_argument('--k', type=int, default=1, help="Moment order.")
    trace_p.add_argument('--method', default=TraceMethod.EXACT.value, choices=[m.value for m in TraceMethod])
    trace_p.add_argument('--samples', type=int, default=None, help="Basis-state samples (stochastic method).")
    trace_p.add_argument('--trace-seed', type=_seed, default=None, help="Seed of the sample stream.")
    _add_common(trace_p)

    stats_p = subparsers.add_parser('stats', help="Aggregate a results CSV.")
    stats_p.add_argument('input', help="Results CSV written by `sweep`.")
    _add_common(stats_p)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')


def _entangler(text):
    if text is None:
        return None
    if os.path.isfile(text):
        with open(text) as handle:
            try:
                return pairs_to_complex(json.load(handle), (4, 4))
            except (ValueError, TypeError) as err:
                raise FormatError("%s: entangler must be a 4x4 matrix of [re, im] pairs (%s)" % (text, err))
    return resolve_entangler(text)


def _ensemble_spec(args, geometry, depth):
    return EnsembleSpec(geometry, depth, args.ensemble, _operator(args.b, geometry), _operator(args.m, geometry),
                        args.seed, _entangler(args.entangler))


def _operator(text, geometry):
    return None if text is None else parse_pauli_string(text, geometry)


def _operators(args, geometry):
    butterfly = _operator(args.b, geometry) or default_butterfly(geometry)
    measurement = _operator(args.m, geometry) or default_measurement(geometry)
    return butterfly, measurement


def _circuit(args):
    """Circuit from --circuit, else sampled from the grid/ensemble flags; returns (circuit, B, M)."""
    if args.circuit is not None:
        circuit = load_circuit(args.circuit)
        geometry = circuit.geometry
        check_qubit_limit(geometry.n, args.max_qubits)
        return (circuit,) + _operators(args, geometry)
    geometry = GridGeometry(args.rows, args.cols)
    check_qubit_limit(geometry.n, args.max_qubits)
    spec = _ensemble_spec(args, geometry, args.depth)
    return sample_circuit(spec), spec.butterfly, spec.measurement


def _complex(value):
    return [float(value.real), float(value.imag)]


def _json_ready(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, np.generic):
        return _json_ready(value.item())
    return value


def _frame_rows(frame):
    return [{key: _json_ready(value) for key, value in row.items()} for row in frame.to_dict('records')]


def _emit(payload, stdout):
    stdout.write(json.dumps(payload) + '\n')


def cmd_sample(args, stdout):
    geometry = GridGeometry(args.rows, args.cols)
    check_qubit_limit(geometry.n, args.max_qubits)
    # operators do not enter the circuit file
    spec = EnsembleSpec(geometry, args.depth, args.ensemble, master_seed=args.seed, entangler=_entangler(args.entangler))
    circuit = sample_circuit(spec)
    save_circuit(circuit, args.output if args.output else stdout)


def _header(circuit, butterfly, measurement):
    geometry = circuit.geometry
    return {'rows': geometry.rows, 'cols': geometry.cols, 'depth': circuit.depth, 'seed': circuit.seed,
            'ensemble': circuit.ensemble, 'b': format_pauli_string(butterfly, geometry),
            'm': format_pauli_string(measurement, geometry),
            'd_star': min_connecting_depth(geometry, butterfly, measurement)}


def cmd_eval(args, stdout):
    circuit, butterfly, measurement = _circuit(args)
    payload = _header(circuit, butterfly, measurement)
    engines = [CorrelatorEngine(circuit, butterfly, measurement, k, args.max_qubits) for k in args.k]
    exact = [engine.moment() for engine in engines]
    if len(engines) == 1:
        payload.update({'k': args.k[0], 'exact': exact[0]})
    else:
        payload.update({'k': args.k, 'exact': exact})
    if args.direct:
        direct = [_complex(engine.moment_direct()) for engine in engines]
        payload['direct'] = direct[0] if len(engines) == 1 else direct
    if args.time_ordered:
        payload['time_ordered'] = _complex(engines[0].time_ordered())
    _emit(payload, stdout)


def cmd_estimate(args, stdout):
    circuit, butterfly, measurement = _circuit(args)
    engine = CorrelatorEngine(circuit, butterfly, measurement, args.k, args.max_qubits)
    result = engine.estimate(shots=args.shots, epsilon=args.epsilon, seed=args.shot_seed)
    payload = _header(circuit, butterfly, measurement)
    payload.update({'k': args.k, 'estimate': result.estimate, 'stderr': result.stderr, 'shots': result.shots,
                    'epsilon': result.target_epsilon, 'exact': engine.moment()})
    _emit(payload, stdout)


def cmd_sweep(args, stdout):
    geometry = GridGeometry(args.rows, args.cols)
    check_qubit_limit(geometry.n, args.max_qubits)
    spec = _ensemble_spec(args, geometry, min(args.depths))
    table = depth_sweep(spec, args.depths, args.instances, args.k, shots=args.shots, threads=args.threads,
                        max_qubits=args.max_qubits)
    save_results(table, args.output if args.output else stdout)


def cmd_lightcone(args, stdout):
    if args.sides is not None:
        _emit(corner_depth_scaling(args.sides), stdout)
        return
    geometry = GridGeometry(args.rows, args.cols)
    butterfly, measurement = _operators(args, geometry)
    payload = {'rows': geometry.rows, 'cols': geometry.cols, 'b': format_pauli_string(butterfly, geometry),
               'm': format_pauli_string(measurement, geometry)}
    payload.update(lightcone_report(geometry, butterfly, measurement, args.max_depth))
    _emit(payload, stdout)


def cmd_trace(args, stdout):
    circuit, butterfly, measurement = _circuit(args)
    engine = CorrelatorEngine(circuit, butterfly, measurement, args.k, args.max_qubits)
    result = engine.mixed_moment(method=args.method, samples=args.samples, seed=args.trace_seed)
    payload = _header(circuit, butterfly, measurement)
    payload.update({'k': args.k, 'value': result.value, 'stderr': result.stderr, 'method': result.method,
                    'samples': result.samples})
    _emit(payload, stdout)


def cmd_stats(args, stdout):
    records = load_results(args.input)
    if not records:
        raise FormatError("%s: no records" % args.input)
    frame = records_frame(records)
    payload = {'records': len(records), 'by_depth_k': _frame_rows(fluctuation_stats(frame)),
               'std_vs_n': _frame_rows(std_vs_n(frame)), 'pearson_exact_estimate': None}
    paired = frame.dropna(subset=['estimate'])
    if len(paired) >= 2:
        try:
            payload['pearson_exact_estimate'] = pearson(paired['exact'], paired['estimate'])
        except UndefinedCorrelationError as err:
            logger.warning("%s", err)
    _emit(payload, stdout)


COMMAND_MAPPER = {
    'sample': cmd_sample,
    'eval': cmd_eval,
    'estimate': cmd_estimate,
    'sweep': cmd_sweep,
    'lightcone': cmd_lightcone,
    'trace': cmd_trace,
    'stats': cmd_stats,
}


def run_cli(argv=None, stdout=None, stderr=None):
    """Parses argv, runs the subcommand and returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as err:
        stderr.write("%s: error: %s\n" % (PROG, err))
        return 2
    except SystemExit as exit_:
        return exit_.code or 0
    _configure_logging(args.verbose)
    try:
        COMMAND_MAPPER[args.command](args, stdout)
    except (SpecError, FormatError) as err:
        stderr.write("%s: error: %s\n" % (PROG, err))
        return 2
    except Exception as err:
        logger.debug("unhandled error", exc_info=True)
        stderr.write("%s: error: %s: %s\n" % (PROG, type(err).__name__, err))
        return 1
    return 0


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
