"""
    Ensembles, sweeps, statistics and persistence.

"""

from .ensembles import OtocRecord, SweepTable, run_ensemble, depth_sweep, time_ordered_ensemble
from .statistics import fluctuation_stats, std_vs_n, pearson
from .persistence import save_results, load_results, save_circuit, load_circuit
