# Quick implication-chain run with the finite-q entropic criterion tallied as well.
_base_ = ["n1_2.py"]


survey_cfg = dict(
    n2_range=[2, 4],
    samples_per_dim=20000,
    q_finite=2.0,
)


output_cfg = dict(
    out_dir="work_dirs/chain_check",
    format="csv",
    plots="off",
)
