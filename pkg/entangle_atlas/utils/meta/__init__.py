from .config import ConfigDict, Config, DictAction
from .collect_env import get_meta_info, log_meta_info, get_package_version
from .logger import get_logger, get_logger_name
from .magic_utils import colored_print
from .path_utils import is_filepath, check_files_exist, mkdir_or_exist
from .progressbar import ProgressBar, track_progress, track_parallel_progress
from .random_utils import get_random_generator, check_seed, MAX_SEED
from .registry import Registry, build_from_cfg
from .timer import Timer, TimerError, get_time_stamp, td_format
from .env_var import add_env_var, get_num_threads, is_debug_mode, THREADS_VAR
