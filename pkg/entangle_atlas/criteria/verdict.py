from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional

import numpy as np


CRIT_TOL = 1e-10

PPT = "ppt"
REDUCTION = "reduction"
MAJORIZATION = "majorization"
Q_ENTROPIC_INF = "q_entropic_inf"
Q_ENTROPIC = "q_entropic"
RANK_SEPARABLE = "rank_separable"
DISTILLABLE = "distillable"

# The four criteria compared in the agreement statistics, strongest first.
CHAIN_CRITERIA = (PPT, REDUCTION, MAJORIZATION, Q_ENTROPIC_INF)


@dataclass
class BatchVerdict:
    """Criteria outcomes of a stack of states: one boolean array per criterion plus the deciding quantities.

    A criterion holds when its margin is >= -crit_tol; a state is on the boundary of a criterion when
    |margin| <= crit_tol.
    """

    margins: Dict[str, np.ndarray]
    ranks: np.ndarray
    max_local_dim: int
    crit_tol: float = CRIT_TOL

    def __len__(self):
        return len(self.ranks)

    def holds(self, label):
        if label == RANK_SEPARABLE:
            return self.holds(PPT) & (self.ranks <= self.max_local_dim)
        if label == DISTILLABLE:
            return ~self.holds(REDUCTION)
        return self.margins[label] >= -self.crit_tol

    def on_boundary(self, label):
        if label == RANK_SEPARABLE:
            return self.on_boundary(PPT)
        if label == DISTILLABLE:
            return self.on_boundary(REDUCTION)
        return np.abs(self.margins[label]) <= self.crit_tol

    @property
    def labels(self):
        return list(self.margins) + [RANK_SEPARABLE, DISTILLABLE]

    def verdict(self, i):
        """The :class:`CriteriaVerdict` of state ``i``."""
        boundary = frozenset(label for label in self.margins if bool(self.on_boundary(label)[i]))
        return CriteriaVerdict(
            ppt=bool(self.holds(PPT)[i]),
            reduction=bool(self.holds(REDUCTION)[i]),
            majorization=bool(self.holds(MAJORIZATION)[i]),
            q_entropic_inf=bool(self.holds(Q_ENTROPIC_INF)[i]),
            q_entropic_finite=bool(self.holds(Q_ENTROPIC)[i]) if Q_ENTROPIC in self.margins else None,
            rank_separable=bool(self.holds(RANK_SEPARABLE)[i]),
            distillable=bool(self.holds(DISTILLABLE)[i]),
            boundary_flags=boundary,
            margins={label: float(value[i]) for label, value in self.margins.items()},
            rank=int(self.ranks[i]),
        )


@dataclass
class CriteriaVerdict:
    ppt: bool
    reduction: bool
    majorization: bool
    q_entropic_inf: bool
    rank_separable: bool
    distillable: bool
    q_entropic_finite: Optional[bool] = None
    boundary_flags: FrozenSet[str] = field(default_factory=frozenset)
    margins: Dict[str, float] = field(default_factory=dict)
    rank: int = 0

    def chain_values(self):
        return tuple(getattr(self, label) for label in CHAIN_CRITERIA)

    def to_dict(self):
        return dict(
            ppt=self.ppt,
            reduction=self.reduction,
            majorization=self.majorization,
            q_entropic_inf=self.q_entropic_inf,
            q_entropic_finite=self.q_entropic_finite,
            rank_separable=self.rank_separable,
            distillable=self.distillable,
            boundary_flags=sorted(self.boundary_flags),
            margins=dict(self.margins),
            rank=self.rank,
        )
