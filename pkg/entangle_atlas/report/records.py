"""
Flat file forms of survey records.

CSV: one row per statistic per dimension with the header below, floats in shortest round-trip form. The JSON mirror
is an array of objects with the same fields and values.
"""
import os.path as osp
from collections import OrderedDict

from ..exceptions import IOFailure, ReportError
from ..survey import SurveyRecord
from ..utils.data import num_to_str
from ..utils.file import dump, load
from ..utils.meta import mkdir_or_exist


CSV_HEADER = ["n1", "n2", "N", "samples", "label", "count", "probability", "std_error", "boundary_count"]


def survey_filename(n1, suffix):
    return f"survey_n1={n1}.{suffix}"


def records_to_rows(records):
    """Row dicts in output order: records as given, labels in record order."""
    rows = []
    for record in records:
        for label in record.labels:
            rows.append(
                OrderedDict(
                    n1=record.dims.n_a,
                    n2=record.dims.n_b,
                    N=record.dims.total(),
                    samples=record.samples,
                    label=label,
                    count=record.counters[label],
                    probability=record.probabilities[label],
                    std_error=record.std_errors[label],
                    boundary_count=record.boundary_counts.get(label, 0),
                )
            )
    return rows


def _check_records(records):
    records = list(records)
    if len(records) == 0:
        raise ReportError("No survey records to write")
    return records


def write_file(obj, path, **kwargs):
    try:
        mkdir_or_exist(osp.dirname(str(path)))
        dump(obj, str(path), **kwargs)
    except OSError as e:
        raise IOFailure(f"Cannot write {path}: {e}") from e
    return str(path)


def write_records_csv(records, path):
    rows = records_to_rows(_check_records(records))
    lines = [CSV_HEADER] + [[num_to_str(row[key]) if isinstance(row[key], float) else str(row[key]) for key in CSV_HEADER] for row in rows]
    return write_file(lines, path)


def write_records_json(records, path):
    return write_file(records_to_rows(_check_records(records)), path, indent=2)


def rows_to_records(rows):
    """Group row dicts back into SurveyRecords; inverse of :func:`records_to_rows` on counts."""
    grouped = OrderedDict()
    for row in rows:
        try:
            key = (int(row["n1"]), int(row["n2"]))
            samples = int(row["samples"])
            label, count, boundary = row["label"], int(row["count"]), int(row["boundary_count"])
        except (KeyError, TypeError, ValueError) as e:
            raise ReportError(f"Malformed survey row {row}: {e}") from e
        if key not in grouped:
            grouped[key] = SurveyRecord(key, samples)
        record = grouped[key]
        if record.samples != samples:
            raise ReportError(f"Inconsistent sample counts for dims {key}: {record.samples} and {samples}")
        record.counters[label] = count
        record.boundary_counts[label] = boundary
    return [record.recompute() for record in grouped.values()]


def load_records_csv(path):
    try:
        rows = load(str(path), as_dict=True)
    except OSError as e:
        raise IOFailure(f"Cannot read {path}: {e}") from e
    return rows_to_records(rows)


def load_records_json(path):
    try:
        rows = load(str(path))
    except OSError as e:
        raise IOFailure(f"Cannot read {path}: {e}") from e
    return rows_to_records(rows)


def write_anomalies(records, path):
    anomalies = [item for record in records for item in record.anomalies]
    return write_file(anomalies, path, indent=2)
