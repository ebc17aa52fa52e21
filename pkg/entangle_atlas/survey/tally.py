import numpy as np

from ..criteria import PPT, REDUCTION
from .record import AGREEMENT_LABELS, VIOLATION_LABELS, SurveyRecord


def label_outcomes(verdict, label):
    """(values, boundary) boolean arrays of one statistic over a BatchVerdict.

    A derived statistic is on the boundary when any criterion it is built from is.
    """
    agreements = dict(AGREEMENT_LABELS)
    violations = dict(VIOLATION_LABELS)
    if label in agreements:
        criteria = agreements[label]
        values = np.stack([verdict.holds(name) for name in criteria])
        boundary = np.any(np.stack([verdict.on_boundary(name) for name in criteria]), axis=0)
        return np.all(values == values[:1], axis=0), boundary
    if label in violations:
        name = violations[label]
        return ~verdict.holds(name), verdict.on_boundary(name)
    return verdict.holds(label), verdict.on_boundary(label)


def find_ppt_reduction_anomalies(verdict, dims, stream_id):
    """Samples whose PPT and reduction verdicts differ; such states do not exist for n_a = 2 or n_b = 2."""
    ppt, reduction = verdict.holds(PPT), verdict.holds(REDUCTION)
    ret = []
    for index in np.flatnonzero(ppt != reduction):
        ret.append(
            dict(
                dims=list(dims.as_tuple()),
                stream_id=int(stream_id),
                index=int(index),
                ppt=bool(ppt[index]),
                reduction=bool(reduction[index]),
                ppt_margin=float(verdict.margins[PPT][index]),
                reduction_margin=float(verdict.margins[REDUCTION][index]),
            )
        )
    return ret


def tally_batch(verdict, dims, labels, stream_id=0, track_anomalies=False):
    """Count every label of ``labels`` over one BatchVerdict."""
    counters, boundary_counts = {}, {}
    for label in labels:
        values, boundary = label_outcomes(verdict, label)
        counters[label] = int(np.count_nonzero(values))
        boundary_counts[label] = int(np.count_nonzero(boundary))
    anomalies = find_ppt_reduction_anomalies(verdict, dims, stream_id) if track_anomalies else []
    return SurveyRecord(dims, len(verdict), counters, boundary_counts, anomalies)


__all__ = ["label_outcomes", "tally_batch", "find_ppt_reduction_anomalies"]
