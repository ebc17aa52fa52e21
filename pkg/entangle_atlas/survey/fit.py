from dataclasses import asdict, dataclass

import numpy as np
from scipy import stats


@dataclass
class ExponentialFit:
    """ln p = intercept + slope * N over the fitted records."""

    label: str
    slope: float
    intercept: float
    r_squared: float
    num_points: int

    def to_dict(self):
        return asdict(self)


def fit_exponential_decay(records, label="ppt"):
    """Least-squares fit of ln p(label) against the total dimension N.

    Records with p = 0 carry no information on the log scale and are skipped; at least two points must remain.
    """
    points = [(record.dims.total(), record.probabilities[label]) for record in records if record.probabilities.get(label, 0) > 0]
    if len({n for n, _ in points}) < 2:
        raise ValueError(f"Need at least two dimensions with p({label}) > 0 to fit, got {len(points)}")
    n, p = np.array(points, dtype=np.float64).T
    result = stats.linregress(n, np.log(p))
    return ExponentialFit(label, float(result.slope), float(result.intercept), float(result.rvalue**2), len(points))
