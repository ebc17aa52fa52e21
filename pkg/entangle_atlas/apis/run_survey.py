import argparse
import os.path as osp
import sys

from tabulate import tabulate

from ..exceptions import AtlasError, ConfigInvalid, SampleFailure
from ..report import RunManifest, emit_plots, manifest_filename, survey_filename, write_anomalies, write_records_csv, write_records_json
from ..survey import SurveyConfig, fit_exponential_decay, run_survey
from ..utils.data import is_not_null
from ..utils.meta import Config, DictAction, colored_print, get_logger, get_num_threads, log_meta_info, mkdir_or_exist


DEFAULT_OUTPUT_CFG = dict(out_dir="work_dirs/survey", format="csv", plots="on")
SUMMARY_LABELS = ["ppt", "reduction", "majorization", "q_entropic_inf", "agree_all", "violate_reduction"]

# flag dest -> survey_cfg key
FLAG_TO_SURVEY_KEY = dict(
    n1="n1",
    samples="samples_per_dim",
    seed="seed",
    workers="workers",
    q="q_finite",
    tol="crit_tol",
    chunk_size="chunk_size",
    simplex="simplex_method",
)


def print_error(message):
    colored_print(message, level="error", logger=lambda line: print(line, file=sys.stderr))


class ArgumentParser(argparse.ArgumentParser):
    """Raises on bad flags instead of exiting, so the commands can map them to exit code 2."""

    def error(self, message):
        raise ConfigInvalid(message)


def build_parser():
    parser = ArgumentParser(prog="entangle-atlas survey", description="Monte Carlo survey of separability criteria")
    parser.add_argument("--config", default=None, help="Config file (.py, .json, .yaml) or a run manifest to rerun")
    parser.add_argument(
        "--cfg-options",
        "--opt",
        nargs="+",
        action=DictAction,
        help="Override settings of the config file, e.g. survey_cfg.seed=7 survey_cfg.n2_range=[2,5].",
    )
    parser.add_argument("--n1", type=int, default=None, help="Dimension of subsystem A, 2 or 3")
    parser.add_argument("--n2-min", type=int, default=None)
    parser.add_argument("--n2-max", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None, help="Samples per dimension")
    parser.add_argument("--seed", type=int, default=None, help="Master seed")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes; ENTANGLE_ATLAS_THREADS overrides it")
    parser.add_argument("--q", type=float, default=None, help="Also tally the entropic criterion at this finite q")
    parser.add_argument("--tol", type=float, default=None, help="Criterion tolerance crit_tol")
    parser.add_argument("--chunk-size", type=int, default=None, help="Samples per RNG substream")
    parser.add_argument("--simplex", default=None, help="Simplex sampler: exponential or spacings")
    parser.add_argument("--out-dir", default=None)
    parser.add_argument("--format", choices=["csv", "json", "both"], default=None)
    parser.add_argument("--plots", choices=["on", "off"], default=None)
    parser.add_argument("--progress", choices=["on", "off"], default=None, help="Progress bars on stderr (default: on for a terminal)")
    return parser


def parse_args(argv=None):
    """Parse the flags and build (SurveyConfig, output_cfg, args).

    Precedence: config file < --cfg-options < explicit flags < ENTANGLE_ATLAS_THREADS (workers only).
    """
    args = build_parser().parse_args(argv)
    try:
        cfg = Config.fromfile(args.config) if is_not_null(args.config) else Config()
    except (OSError, TypeError, SyntaxError, KeyError, ValueError) as e:
        raise ConfigInvalid(f"Cannot load config {args.config}: {e}")
    if is_not_null(args.cfg_options):
        cfg.merge_from_dict(args.cfg_options)

    survey_cfg = SurveyConfig().to_dict()
    survey_cfg.update(cfg.to_dict().get("survey_cfg", {}))
    for flag, key in FLAG_TO_SURVEY_KEY.items():
        value = getattr(args, flag)
        if is_not_null(value):
            survey_cfg[key] = value
    try:
        n2_range = list(survey_cfg["n2_range"])
    except TypeError:
        raise ConfigInvalid(f"n2_range must be a pair of integers, got {survey_cfg['n2_range']!r}")
    if len(n2_range) != 2:
        raise ConfigInvalid(f"n2_range must be a pair of integers, got {n2_range!r}")
    if is_not_null(args.n2_min):
        n2_range[0] = args.n2_min
    if is_not_null(args.n2_max):
        n2_range[1] = args.n2_max
    survey_cfg["n2_range"] = n2_range
    try:
        survey_cfg["workers"] = get_num_threads(survey_cfg["workers"])
    except ValueError as e:
        raise ConfigInvalid(str(e))

    output_cfg = dict(DEFAULT_OUTPUT_CFG)
    output_cfg.update(cfg.to_dict().get("output_cfg", {}))
    for key in ["out_dir", "format", "plots"]:
        if is_not_null(getattr(args, key)):
            output_cfg[key] = getattr(args, key)
    if output_cfg["format"] not in ["csv", "json", "both"] or output_cfg["plots"] not in ["on", "off"]:
        raise ConfigInvalid(f"Invalid output settings {output_cfg}")
    return SurveyConfig.from_dict(survey_cfg), output_cfg, args


def summary_table(records):
    rows = []
    for record in records:
        row = [str(record.dims), record.dims.total()]
        row += [f"{record.probabilities[label]:.4f} +- {record.std_errors[label]:.4f}" for label in SUMMARY_LABELS]
        rows.append(row)
    return tabulate(rows, headers=["dims", "N"] + SUMMARY_LABELS, tablefmt="github")


def log_results(logger, records):
    logger.info("Survey summary:\n" + summary_table(records))
    for record in records:
        for label, count in record.boundary_counts.items():
            if count > 0:
                logger.info(f"dims {record.dims}: {count} samples within crit_tol of the {label} boundary.")
    try:
        fit = fit_exponential_decay(records, "ppt")
        logger.info(f"ln p(ppt) = {fit.intercept:.4f} + {fit.slope:.4f} N, R^2 = {fit.r_squared:.4f} over {fit.num_points} dimensions.")
    except ValueError as e:
        logger.info(f"No exponential fit of p(ppt): {e}")


def write_outputs(records, cfg, output_cfg):
    out_dir = output_cfg["out_dir"]
    files = []
    if output_cfg["format"] in ["csv", "both"]:
        files.append(write_records_csv(records, osp.join(out_dir, survey_filename(cfg.n1, "csv"))))
    if output_cfg["format"] in ["json", "both"]:
        files.append(write_records_json(records, osp.join(out_dir, survey_filename(cfg.n1, "json"))))
    if cfg.n1 == 2:
        files.append(write_anomalies(records, osp.join(out_dir, f"anomalies_n1={cfg.n1}.json")))
    if output_cfg["plots"] == "on":
        files += emit_plots(records, out_dir)
    return files


def cmd_survey(argv=None):
    """``entangle-atlas survey``: exit 0 on success, 1 on a numeric failure, 2 on invalid flags or configuration."""
    try:
        cfg, output_cfg, args = parse_args(argv)
        mkdir_or_exist(output_cfg["out_dir"])
    except ConfigInvalid as e:
        print_error(f"entangle-atlas survey: error: {e.message}")
        return 2
    except OSError as e:
        print_error(f"entangle-atlas survey: error: cannot create output directory: {e}")
        return 2

    logger = get_logger(log_file=osp.join(output_cfg["out_dir"], "survey.log"))
    log_meta_info(logger)
    logger.info(f"Config:\n{Config(dict(survey_cfg=cfg.to_dict(), output_cfg=output_cfg)).pretty_text}")
    progress = sys.stderr.isatty() if args.progress is None else args.progress == "on"

    timings = {}
    try:
        records = run_survey(cfg, progress=progress, timings=timings)
    except SampleFailure as e:
        logger.error(f"Numeric failure: {e.message}")
        print_error(f"entangle-atlas survey: numeric failure, replay coordinates {e.replay_coordinates} (seed={cfg.seed}, chunk_size={cfg.chunk_size})")
        return 1
    except AtlasError as e:
        logger.error(f"Numeric failure: {e.message}")
        return 1

    log_results(logger, records)
    try:
        files = write_outputs(records, cfg, output_cfg)
        manifest = RunManifest(cfg.to_dict(), dim_seconds=timings, output_cfg=output_cfg, outputs=[osp.basename(f) for f in files])
        files.append(manifest.dump(osp.join(output_cfg["out_dir"], manifest_filename(cfg.n1))))
    except AtlasError as e:
        logger.error(e.message)
        print_error(f"entangle-atlas survey: output failure: {e.message}")
        return 1
    logger.info(f"Wrote {len(files)} files to {output_cfg['out_dir']}.")
    return 0
