"""
Monte Carlo survey over dims (n1, n2).

The samples of one dimension are cut into chunks of ``chunk_size``; chunk c is drawn from RNG substream c of the
master seed, keyed by the dims. Each worker gets a contiguous run of chunks and returns a partial SurveyRecord, and
the partials are merged in worker order. The chunks, and hence the merged record, do not depend on the worker count.
"""
import numpy as np

from ..criteria import evaluate_batch
from ..exceptions import ConvergenceFailure, NonHermitianInput, SampleFailure
from ..linalg import SystemDims
from ..sampling import NaturalMeasureSampler, SamplerConfig, replay_sample
from ..utils.math import contiguous_blocks
from ..utils.meta import Timer, add_env_var, get_logger, td_format, track_parallel_progress, track_progress
from .record import merge_records, survey_labels
from .tally import tally_batch


def sampler_config(cfg, dims, chunk_id):
    return SamplerConfig(dims, seed=cfg.seed, stream_id=chunk_id, simplex_method=cfg.simplex_method)


def _locate_failure(mats, dims, cfg, chunk_id, error):
    """Re-evaluate a failed chunk state by state and raise SampleFailure for the first bad sample."""
    for index in range(len(mats)):
        try:
            verdict = evaluate_batch(mats[index : index + 1], dims, q_finite=cfg.q_finite, crit_tol=cfg.crit_tol)
        except (ConvergenceFailure, NonHermitianInput) as e:
            raise SampleFailure(e.message, dims=dims.as_tuple(), stream_id=chunk_id, index=index) from e
        bad = [label for label, value in verdict.margins.items() if np.isnan(value[0])]
        if len(bad) > 0:
            raise SampleFailure(f"NaN deciding quantity for {bad}", dims=dims.as_tuple(), stream_id=chunk_id, index=index)
    raise SampleFailure(f"Chunk failed but no single sample reproduces it: {error}", dims=dims.as_tuple(), stream_id=chunk_id, index=None)


def evaluate_chunk(cfg, dims, chunk_id, labels=None):
    """Draw chunk ``chunk_id`` of ``dims`` and tally it into a partial SurveyRecord."""
    if labels is None:
        labels = survey_labels(cfg.q_finite is not None)
    size = cfg.chunk_length(chunk_id)
    mats, _ = NaturalMeasureSampler(sampler_config(cfg, dims, chunk_id)).sample_batch(size)
    try:
        verdict = evaluate_batch(mats, dims, q_finite=cfg.q_finite, crit_tol=cfg.crit_tol)
    except (ConvergenceFailure, NonHermitianInput) as e:
        _locate_failure(mats, dims, cfg, chunk_id, e)
    if any(np.any(np.isnan(value)) for value in verdict.margins.values()):
        _locate_failure(mats, dims, cfg, chunk_id, "NaN margins")
    return tally_batch(verdict, dims, labels, stream_id=chunk_id, track_anomalies=dims.n_a == 2)


def survey_block(task):
    """Pool entry point: ``task`` is (cfg, dims tuple, chunk ids)."""
    cfg, dims, chunk_ids = task
    dims = SystemDims(*dims)
    labels = survey_labels(cfg.q_finite is not None)
    return merge_records([evaluate_chunk(cfg, dims, chunk_id, labels) for chunk_id in chunk_ids])


def run_dimension(cfg, dims, progress=True):
    """SurveyRecord of one dims, computed with ``cfg.workers`` processes."""
    blocks = [block for block in contiguous_blocks(range(cfg.num_chunks()), cfg.workers) if len(block) > 0]
    tasks = [(cfg, dims.as_tuple(), block) for block in blocks]
    if cfg.workers > 1 and len(tasks) > 1:
        add_env_var()
        partials = track_parallel_progress(survey_block, tasks, len(tasks), enabled=progress)
    else:
        partials = track_progress(survey_block, tasks, enabled=progress)
    return merge_records(partials)


def run_survey(cfg, progress=True, timings=None):
    """Run the sweep of ``cfg`` and return one SurveyRecord per n2.

    Args:
        cfg (SurveyConfig): A validated survey configuration.
        progress (bool): Draw progress bars on stderr.
        timings (dict | None): If given, filled with wall-clock seconds per dims string ("2x3").
    Returns:
        list[SurveyRecord]
    """
    logger = get_logger()
    records = []
    for dims in cfg.dims_list():
        timer = Timer()
        logger.info(f"Survey dims {dims}: {cfg.samples_per_dim} samples in {cfg.num_chunks()} chunks, {cfg.workers} workers.")
        record = run_dimension(cfg, dims, progress=progress)
        seconds = timer.since_start()
        if timings is not None:
            timings[str(dims)] = seconds
        logger.info(f"Finished dims {dims} in {td_format(seconds)} ({seconds:.2f}s).")
        if len(record.anomalies) > 0:
            logger.warning(f"dims {dims}: {len(record.anomalies)} samples where PPT and reduction disagree.")
        records.append(record)
    return records


def replay_survey_sample(cfg, dims, stream_id, index):
    """The state behind replay coordinates (dims, stream_id, index) of a survey run with ``cfg``."""
    if not isinstance(dims, SystemDims):
        dims = SystemDims(*dims)
    return replay_sample(sampler_config(cfg, dims, stream_id), index, cfg.chunk_length(stream_id))
