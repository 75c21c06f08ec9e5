"""
    Ensemble runs and depth sweeps.

    Instance i of an ensemble uses the seed SplitMix64(master_seed, i), so any
    instance can be rebuilt alone. Work items may run in any order on a worker
    pool; results are always ordered by (depth, k, instance index).
"""

import dataclasses
import logging
import platform
import time
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import List, Optional

import numpy as np
import pandas as pd

from .namesnmapper import RESULT_COLUMNS
from .statistics import fluctuation_stats, records_frame, transition_violations
from ..circuits.ensemble import EnsembleSpec, sample_circuit
from ..circuits.lightcone import min_connecting_depth
from ..circuits.statevector import check_qubit_limit
from ..correlators.engineconfig import CorrelatorEngine
from ..errors import SpecError
from ..montecarlo.seeding import instance_seed

logger = logging.getLogger(__name__)


@dataclass
class OtocRecord:
    instance_seed: int
    rows: int
    cols: int
    depth: int
    k: int
    ensemble: str
    exact: float
    estimate: Optional[float] = None
    stderr: Optional[float] = None
    shots: Optional[int] = None
    d_star: int = 0
    wall_time_s: float = 0.0

    def __post_init__(self):
        assert -1.0 <= self.exact <= 1.0, "exact moment %r outside [-1, 1]" % self.exact
        if self.estimate is not None:
            assert self.stderr is not None and self.shots is not None, "estimate without stderr/shots"

    @property
    def n(self):
        return self.rows * self.cols

    def as_row(self):
        row = dataclasses.asdict(self)
        return {column: row[column] for column in RESULT_COLUMNS}


@dataclass
class SweepTable:
    spec: dict
    records: List[OtocRecord]
    aggregates: pd.DataFrame = field(default=None)

    def __post_init__(self):
        if self.aggregates is None:
            self.aggregates = fluctuation_stats(self.records)

    @property
    def frame(self):
        return records_frame(self.records)


def p_map(func, parameter, processes=None):
    """Ordered map over a bounded process pool; serial for one worker or on Windows."""
    if processes == 1 or platform.system() == "Windows":
        return list(map(func, parameter))
    with Pool(processes) as p:
        return p.map(func, parameter)


def _check_ks(ks):
    ks = list(ks)
    if not ks:
        raise SpecError("ks must be nonempty")
    for k in ks:
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
            raise SpecError("every k must be a positive integer, got %r" % (k,))
    if len(set(ks)) != len(ks):
        raise SpecError("ks must be distinct, got %s" % ks)
    return [int(k) for k in ks]


def _evaluate_instance(spec, ks, shots, d_star, max_qubits, index):
    seed = instance_seed(spec.master_seed, index)
    circuit = sample_circuit(dataclasses.replace(spec, master_seed=seed))
    records = []
    for k in ks:
        start = time.perf_counter()
        engine = CorrelatorEngine(circuit, spec.butterfly, spec.measurement, k, max_qubits)
        exact = engine.moment()
        estimate = engine.estimate(shots=shots, seed=seed) if shots is not None else None
        records.append(OtocRecord(
            instance_seed=seed, rows=spec.geometry.rows, cols=spec.geometry.cols, depth=spec.depth, k=k,
            ensemble=spec.gate_distribution.value, exact=exact,
            estimate=None if estimate is None else estimate.estimate,
            stderr=None if estimate is None else estimate.stderr,
            shots=None if estimate is None else estimate.shots,
            d_star=d_star, wall_time_s=time.perf_counter() - start))
        logger.debug("instance %d seed %d k=%d exact=%.6f", index, seed, k, exact)
    return records


def run_ensemble(spec, instances, ks, shots=None, threads=1, max_qubits=None):
    """
    Evaluates the exact moments (and optional shot estimates) of `instances` circuits.
        Args required:
            spec: EnsembleSpec
            instances: (Integer >= 1) number of circuits
            ks: list of moment orders e.g. [1, 2]
            shots: optional shot count for emulated measurement
            threads: worker processes (1 = serial)
    """
    if not isinstance(spec, EnsembleSpec):
        raise SpecError("run_ensemble expects an EnsembleSpec")
    if isinstance(instances, bool) or not isinstance(instances, (int, np.integer)) or instances < 1:
        raise SpecError("instances must be a positive integer, got %r" % (instances,))
    if threads is not None and threads < 1:
        raise SpecError("threads must be >= 1, got %r" % (threads,))
    if shots is not None and (isinstance(shots, bool) or not isinstance(shots, (int, np.integer)) or shots < 1):
        raise SpecError("shots must be a positive integer or None, got %r" % (shots,))
    ks = _check_ks(ks)
    check_qubit_limit(spec.geometry.n, max_qubits)
    d_star = min_connecting_depth(spec.geometry, spec.butterfly, spec.measurement)
    start = time.perf_counter()
    work = partial(_evaluate_instance, spec, ks, shots, d_star, max_qubits)
    per_instance = p_map(work, range(instances), threads)
    records = [per_instance[i][position] for position in range(len(ks)) for i in range(instances)]
    logger.info("ensemble %dx%d depth %d: %d instances, ks=%s in %.2fs", spec.geometry.rows, spec.geometry.cols,
                spec.depth, instances, ks, time.perf_counter() - start)
    return records


def depth_sweep(spec_base, depths, instances, ks, shots=None, threads=1, max_qubits=None):
    """run_ensemble at every depth, aggregated per (depth, k)."""
    depths = sorted(set(int(d) for d in depths))
    if not depths:
        raise SpecError("depths must be nonempty")
    ks = _check_ks(ks)
    records = []
    for depth in depths:
        records.extend(run_ensemble(dataclasses.replace(spec_base, depth=depth), instances, ks,
                                    shots=shots, threads=threads, max_qubits=max_qubits))
    snapshot = spec_base.snapshot()
    snapshot.update({'depths': depths, 'instances': int(instances), 'ks': ks, 'shots': shots})
    table = SweepTable(snapshot, records)
    assert len(table.records) == instances * len(depths) * len(ks)
    d_star = records[0].d_star
    for violation in transition_violations(table.aggregates, d_star):
        logger.warning("sweep transition check: %s", violation)
    return table


def time_ordered_ensemble(spec, instances, bins=20, threads=1, max_qubits=None):
    """Time-ordered correlator <U^dagger B U M> over an ensemble, with a histogram of its real part."""
    if isinstance(instances, bool) or not isinstance(instances, (int, np.integer)) or instances < 1:
        raise SpecError("instances must be a positive integer, got %r" % (instances,))
    check_qubit_limit(spec.geometry.n, max_qubits)
    values = p_map(partial(_time_ordered_instance, spec, max_qubits), range(instances), threads)
    counts, edges = np.histogram(np.real(values), bins=bins, range=(-1.0, 1.0))
    return {'values': values, 'counts': counts.tolist(), 'edges': edges.tolist(),
            'mean_abs': float(np.mean(np.abs(values)))}


def _time_ordered_instance(spec, max_qubits, index):
    circuit = sample_circuit(dataclasses.replace(spec, master_seed=instance_seed(spec.master_seed, index)))
    return CorrelatorEngine(circuit, spec.butterfly, spec.measurement, 1, max_qubits).time_ordered()
