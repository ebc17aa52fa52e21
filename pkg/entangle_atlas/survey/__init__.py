from .config import SurveyConfig, MIN_MEANINGFUL_SAMPLES
from .record import SurveyRecord, AGREEMENT_LABELS, VIOLATION_LABELS, survey_labels, binomial_std_error, merge_records
from .tally import label_outcomes, tally_batch, find_ppt_reduction_anomalies
from .runner import evaluate_chunk, survey_block, run_dimension, run_survey, replay_survey_sample
from .fit import ExponentialFit, fit_exponential_decay
