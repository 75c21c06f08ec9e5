"""
    Column names and formats of harness artifacts.

"""

from enum import Enum


class ResultColumn(Enum):
    INSTANCE_SEED = 'instance_seed'
    ROWS = 'rows'
    COLS = 'cols'
    DEPTH = 'depth'
    K = 'k'
    ENSEMBLE = 'ensemble'
    EXACT = 'exact'
    ESTIMATE = 'estimate'
    STDERR = 'stderr'
    SHOTS = 'shots'
    D_STAR = 'd_star'
    WALL_TIME = 'wall_time_s'


RESULT_COLUMNS = [column.value for column in ResultColumn]

INT_COLUMNS = [ResultColumn.INSTANCE_SEED.value, ResultColumn.ROWS.value, ResultColumn.COLS.value,
               ResultColumn.DEPTH.value, ResultColumn.K.value, ResultColumn.D_STAR.value]
FLOAT_COLUMNS = [ResultColumn.EXACT.value, ResultColumn.WALL_TIME.value]
OPTIONAL_FLOAT_COLUMNS = [ResultColumn.ESTIMATE.value, ResultColumn.STDERR.value]
OPTIONAL_INT_COLUMNS = [ResultColumn.SHOTS.value]

# aggregate column -> pandas reduction of the exact moments
AGGREGATE_MAPPER = {'count': 'count', 'mean': 'mean', 'variance': 'var', 'std': 'std'}

FLOAT_FORMAT = '%.17g'
SPEC_SIDECAR_SUFFIX = '.spec.json'
