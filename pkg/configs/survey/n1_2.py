survey_cfg = dict(
    n1=2,
    n2_range=[2, 8],
    samples_per_dim=100000,
    seed=0,
    workers=4,
    q_finite=None,
    crit_tol=1e-10,
    chunk_size=1000,
    simplex_method="exponential",
)


output_cfg = dict(
    out_dir="work_dirs/survey_n1=2",
    format="both",
    plots="on",
)
