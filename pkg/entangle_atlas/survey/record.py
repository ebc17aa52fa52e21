from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from ..criteria import DISTILLABLE, MAJORIZATION, PPT, Q_ENTROPIC, Q_ENTROPIC_INF, RANK_SEPARABLE, REDUCTION
from ..exceptions import DimsMismatch
from ..linalg import SystemDims


# (label, criteria whose agreement is tallied)
AGREEMENT_LABELS = [
    ("agree_ppt_reduction", (PPT, REDUCTION)),
    ("agree_ppt_majorization", (PPT, MAJORIZATION)),
    ("agree_ppt_qent", (PPT, Q_ENTROPIC_INF)),
    ("agree_reduction_majorization", (REDUCTION, MAJORIZATION)),
    ("agree_reduction_qent", (REDUCTION, Q_ENTROPIC_INF)),
    ("agree_majorization_qent", (MAJORIZATION, Q_ENTROPIC_INF)),
    ("agree_all", (PPT, REDUCTION, MAJORIZATION, Q_ENTROPIC_INF)),
]
# (label, criterion whose failure is tallied)
VIOLATION_LABELS = [
    ("violate_reduction", REDUCTION),
    ("violate_majorization", MAJORIZATION),
]


def survey_labels(with_q_finite=False):
    """Statistic labels of a record, in output order."""
    labels = [PPT, REDUCTION, MAJORIZATION, Q_ENTROPIC_INF]
    if with_q_finite:
        labels.append(Q_ENTROPIC)
    labels.append(RANK_SEPARABLE)
    labels += [label for label, _ in AGREEMENT_LABELS]
    labels += [label for label, _ in VIOLATION_LABELS]
    labels.append(DISTILLABLE)
    return labels


def binomial_std_error(p, samples):
    return float(np.sqrt(p * (1 - p) / samples)) if samples > 0 else 0.0


@dataclass
class SurveyRecord:
    """Counts of every statistic for one pair of dimensions.

    ``probabilities`` and ``std_errors`` are derived from ``counters`` and ``samples`` by :meth:`recompute`:
    p = count / samples and sigma = sqrt(p (1 - p) / samples).
    """

    dims: SystemDims
    samples: int = 0
    counters: Dict[str, int] = field(default_factory=dict)
    boundary_counts: Dict[str, int] = field(default_factory=dict)
    anomalies: List[dict] = field(default_factory=list)
    probabilities: Dict[str, float] = field(init=False, default_factory=dict)
    std_errors: Dict[str, float] = field(init=False, default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.dims, SystemDims):
            self.dims = SystemDims(*self.dims)
        self.recompute()

    @classmethod
    def zeros(cls, dims, labels):
        return cls(dims, 0, {label: 0 for label in labels}, {label: 0 for label in labels})

    @property
    def labels(self):
        return list(self.counters)

    def recompute(self):
        self.probabilities = {label: (count / self.samples if self.samples > 0 else 0.0) for label, count in self.counters.items()}
        self.std_errors = {label: binomial_std_error(p, self.samples) for label, p in self.probabilities.items()}
        return self

    def to_dict(self):
        return dict(
            n1=self.dims.n_a,
            n2=self.dims.n_b,
            N=self.dims.total(),
            samples=self.samples,
            counters=dict(self.counters),
            probabilities=dict(self.probabilities),
            std_errors=dict(self.std_errors),
            boundary_counts=dict(self.boundary_counts),
            anomalies=list(self.anomalies),
        )

    def __eq__(self, other):
        if not isinstance(other, SurveyRecord):
            return NotImplemented
        return (
            self.dims == other.dims
            and self.samples == other.samples
            and self.counters == other.counters
            and self.boundary_counts == other.boundary_counts
            and self.anomalies == other.anomalies
        )


def anomaly_key(anomaly):
    return (anomaly.get("stream_id", 0), anomaly.get("index", 0))


def merge_records(partials):
    """Sum the counters of records over disjoint sample streams of the same dims.

    Associative and commutative: counts add, anomalies are kept sorted by their replay coordinates and the
    probabilities are recomputed from the merged counts.
    """
    partials = list(partials)
    if len(partials) == 0:
        raise ValueError("merge_records needs at least one record")
    dims = partials[0].dims
    for record in partials[1:]:
        if record.dims != dims:
            raise DimsMismatch(f"Cannot merge records of dims {dims} and {record.dims}")

    labels = []
    for record in partials:
        labels += [label for label in record.counters if label not in labels]
    counters = {label: sum(record.counters.get(label, 0) for record in partials) for label in labels}
    boundary_counts = {label: sum(record.boundary_counts.get(label, 0) for record in partials) for label in labels}
    anomalies = sorted([item for record in partials for item in record.anomalies], key=anomaly_key)
    return SurveyRecord(dims, sum(record.samples for record in partials), counters, boundary_counts, anomalies)
