"""
    Fluctuation statistics and correlation metrics over OTOC records.

"""

import logging
from math import sqrt

import numpy as np
import pandas as pd
from scipy import stats

from .namesnmapper import RESULT_COLUMNS, AGGREGATE_MAPPER
from ..errors import SpecError, UndefinedCorrelationError

logger = logging.getLogger(__name__)


def records_frame(records):
    """DataFrame of records (OtocRecord list or an existing frame) with a derived `n` column."""
    if isinstance(records, pd.DataFrame):
        frame = records.copy()
    else:
        frame = pd.DataFrame([record.as_row() for record in records], columns=RESULT_COLUMNS)
    frame['n'] = frame['rows'] * frame['cols']
    return frame


def fluctuation_stats(records, group_by=('depth', 'k')):
    """
    Per group: count, mean, unbiased (n-1) variance and std of the exact moments.
    A group with a single record has undefined variance (NaN).
    """
    frame = records_frame(records)
    if frame.empty:
        raise SpecError("no records to aggregate")
    group_by = list(group_by)
    missing = [column for column in group_by if column not in frame.columns]
    if missing:
        raise SpecError("cannot group by unknown columns %s" % missing)
    grouped = frame.groupby(group_by, sort=True)['exact']
    return grouped.agg(**AGGREGATE_MAPPER).reset_index()


def std_vs_n(records):
    """Fluctuation table across geometries: std of the exact moment per (n, depth, k)."""
    return fluctuation_stats(records, group_by=('n', 'depth', 'k'))


def pearson(xs, ys):
    """Sample Pearson correlation; zero variance in either input is an error."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.ndim != 1 or xs.shape != ys.shape:
        raise SpecError("pearson needs two 1-D samples of equal length, got %s and %s" % (xs.shape, ys.shape))
    if xs.shape[0] < 2:
        raise SpecError("pearson needs at least two points")
    if np.ptp(xs) == 0 or np.ptp(ys) == 0:
        raise UndefinedCorrelationError("Pearson correlation undefined: an input has zero variance")
    statistic, _ = stats.pearsonr(xs, ys)
    return float(np.clip(statistic, -1.0, 1.0))


def transition_violations(aggregates, d_star, tolerance=2.0):
    """
    Checks a depth sweep per k: mean exactly 1 below d_star, and no rise in the mean
    between consecutive depths beyond `tolerance` combined standard errors.
    """
    violations = []
    for k, group in aggregates.groupby('k', sort=True):
        rows = group.sort_values('depth').to_dict('records')
        for row in rows:
            if row['depth'] < d_star and abs(row['mean'] - 1.0) > 1e-9:
                violations.append("k=%d depth %d below d*=%d has mean %.12g, expected 1"
                                  % (k, row['depth'], d_star, row['mean']))
        for before, after in zip(rows, rows[1:]):
            rise = after['mean'] - before['mean']
            if rise > 1e-9 and rise > tolerance * sqrt(_stderr_sq(before) + _stderr_sq(after)):
                violations.append("k=%d mean rises from %.6f (depth %d) to %.6f (depth %d)"
                                  % (k, before['mean'], before['depth'], after['mean'], after['depth']))
    return violations


def _stderr_sq(row):
    if row['count'] < 2 or pd.isna(row['variance']):
        return 0.0
    return row['variance'] / row['count']
