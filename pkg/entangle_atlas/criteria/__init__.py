from .entropy import (
    check_q,
    clamp_spectrum,
    von_neumann_entropy,
    log_omega,
    omega_q,
    tsallis_entropy,
    renyi_entropy,
    tsallis_product,
    tsallis_from_renyi,
    conditional_renyi_from_spectra,
    conditional_tsallis_from_spectra,
    conditional_q_entropy,
    conditional_renyi_entropy,
    EntropyReport,
    entropy_report,
)
from .verdict import (
    CRIT_TOL,
    PPT,
    REDUCTION,
    MAJORIZATION,
    Q_ENTROPIC_INF,
    Q_ENTROPIC,
    RANK_SEPARABLE,
    DISTILLABLE,
    CHAIN_CRITERIA,
    BatchVerdict,
    CriteriaVerdict,
)
from .checks import (
    StateSpectra,
    evaluate_batch,
    evaluate_all,
    check_ppt,
    check_reduction,
    check_majorization,
    check_q_entropic_inf,
    check_q_entropic,
    check_rank_separable,
)
