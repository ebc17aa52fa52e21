import os


THREADS_VAR = "ENTANGLE_ATLAS_THREADS"
DEBUG_VAR = "ENTANGLE_ATLAS_DEBUG"
LOGGER_NAME_VAR = "ENTANGLE_ATLAS_LOGGER_NAME"


def add_env_var():
    # One BLAS thread per worker process; the survey parallelises over processes instead.
    default_values = {"NUMEXPR_MAX_THREADS": "1", "MKL_NUM_THREADS": "1", "OMP_NUM_THREADS": "1", "OPENBLAS_NUM_THREADS": "1"}
    for key, value in default_values.items():
        os.environ[key] = os.environ.get(key, value)


def get_num_threads(default=None):
    """Worker count from ENTANGLE_ATLAS_THREADS, or ``default`` when unset."""
    value = os.environ.get(THREADS_VAR, "").strip()
    if len(value) == 0:
        return default
    try:
        num = int(value)
    except ValueError:
        raise ValueError(f"{THREADS_VAR} must be a positive integer, got {value!r}")
    if num < 1:
        raise ValueError(f"{THREADS_VAR} must be a positive integer, got {value!r}")
    return num


def is_debug_mode():
    return os.environ.get(DEBUG_VAR, "False").lower() in ["1", "true", "yes"]
