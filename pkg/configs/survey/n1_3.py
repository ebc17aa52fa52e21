_base_ = ["n1_2.py"]


survey_cfg = dict(
    n1=3,
    n2_range=[2, 7],
)


output_cfg = dict(
    out_dir="work_dirs/survey_n1=3",
)
