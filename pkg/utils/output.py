"""
Report Output - JSON and CSV serialization for CLI reports
"""
import csv
import io
import json
import math
from typing import Dict, List, Optional, Sequence

import numpy as np


def to_jsonable(obj):
    """Plain Python types only; non-finite floats become the strings "inf", "-inf", "nan"."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return 'nan'
        if math.isinf(x):
            return 'inf' if x > 0 else '-inf'
        return x
    return obj


def dumps_json(report) -> str:
    # repr-based float formatting is the shortest string that round-trips exactly
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True, allow_nan=False) + '\n'


def _csv_cell(value) -> str:
    if value is None:
        return ''
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if math.isnan(x):
            return 'nan'
        if math.isinf(x):
            return 'inf' if x > 0 else '-inf'
        return format(x, '.6g')
    return str(value)


def dumps_csv(rows: Sequence[Dict], columns: Optional[List[str]] = None) -> str:
    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def rows_of(report) -> List[Dict]:
    """Flatten a report into CSV rows: its `rows` table when present, else a single row of scalars."""
    if isinstance(report, dict) and isinstance(report.get('rows'), list):
        return report['rows']
    if isinstance(report, dict):
        return [{k: v for k, v in report.items() if not isinstance(v, (dict, list, tuple))}]
    return list(report)
