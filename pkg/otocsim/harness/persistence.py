"""
    Reading and writing circuits (JSON) and results (CSV).

"""

import json
import logging
import os

import pandas as pd

from .namesnmapper import (RESULT_COLUMNS, INT_COLUMNS, FLOAT_COLUMNS, OPTIONAL_FLOAT_COLUMNS,
                           OPTIONAL_INT_COLUMNS, FLOAT_FORMAT, SPEC_SIDECAR_SUFFIX)
from .ensembles import OtocRecord
from .statistics import records_frame
from ..circuits.ensemble import circuit_to_dict, circuit_from_dict
from ..errors import FormatError

logger = logging.getLogger(__name__)


def save_circuit(circuit, path_or_buffer):
    payload = json.dumps(circuit_to_dict(circuit))
    if hasattr(path_or_buffer, 'write'):
        path_or_buffer.write(payload + '\n')
    else:
        with open(path_or_buffer, 'w') as handle:
            handle.write(payload + '\n')
        logger.info("wrote circuit (%d layers) to %s", circuit.depth, path_or_buffer)


def load_circuit(path):
    with open(path) as handle:
        text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError("%s: invalid JSON at line %d column %d (offset %d): %s"
                          % (path, err.lineno, err.colno, err.pos, err.msg))
    try:
        return circuit_from_dict(payload)
    except FormatError as err:
        raise FormatError("%s: %s" % (path, err))


def save_results(table, path_or_buffer):
    """
    Writes one CSV row per record (header = RESULT_COLUMNS, floats with 17 significant
    digits). When writing to a file path and `table` carries a spec snapshot, the
    snapshot goes to <path>.spec.json.
    """
    records = getattr(table, 'records', table)
    frame = records_frame(records)[RESULT_COLUMNS].copy()
    for column in OPTIONAL_INT_COLUMNS:
        frame[column] = frame[column].astype('Int64')
    frame.to_csv(path_or_buffer, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    spec = getattr(table, 'spec', None)
    if spec is not None and isinstance(path_or_buffer, (str, os.PathLike)):
        with open(str(path_or_buffer) + SPEC_SIDECAR_SUFFIX, 'w') as handle:
            json.dump(spec, handle, indent=2, sort_keys=True)
    logger.info("wrote %d records", len(records))


def _convert(value, column, line, path):
    try:
        if column in INT_COLUMNS:
            return int(value)
        if column in FLOAT_COLUMNS:
            return float(value)
        if value == '':
            return None
        if column in OPTIONAL_FLOAT_COLUMNS:
            return float(value)
        if column in OPTIONAL_INT_COLUMNS:
            return int(value)
        return value
    except ValueError:
        raise FormatError("%s line %d field %s: cannot parse %r" % (path, line, column, value))


def load_results(path):
    """Reads a results CSV back into OtocRecords; errors name the line and field."""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise FormatError("%s: empty results file" % path)
    except pd.errors.ParserError as err:
        raise FormatError("%s: %s" % (path, err))
    if list(frame.columns) != RESULT_COLUMNS:
        raise FormatError("%s line 1: header %s does not match %s"
                          % (path, ",".join(frame.columns), ",".join(RESULT_COLUMNS)))
    records = []
    for offset, row in enumerate(frame.to_dict('records')):
        line = offset + 2
        values = {column: _convert(row[column], column, line, path) for column in RESULT_COLUMNS}
        try:
            records.append(OtocRecord(**values))
        except AssertionError as err:
            raise FormatError("%s line %d: %s" % (path, line, err))
    return records
