import logging, os, sys
from collections import OrderedDict

from .env_var import LOGGER_NAME_VAR, is_debug_mode


logger_initialized = OrderedDict()


class CustomFormatter(logging.Formatter):

    grey = "\x1b[38;21m"
    yellow = "\x1b[33;21m"
    red = "\x1b[31;21m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"
    format = f"%(name)s - (%(filename)s:%(lineno)d) - %(levelname)s - %(asctime)s - %(message)s"

    FORMATS = {
        logging.DEBUG: grey + format + reset,
        logging.INFO: grey + format + reset,
        logging.WARNING: yellow + format + reset,
        logging.ERROR: red + format + reset,
        logging.CRITICAL: bold_red + format + reset,
    }

    def format(self, record):
        log_fmt = self.FORMATS.get(record.levelno)
        formatter = logging.Formatter(log_fmt, datefmt="%Y-%m-%d,%H:%M:%S")
        return formatter.format(record)


def get_logger_name():
    return os.environ.get(LOGGER_NAME_VAR, "entangle_atlas")


def get_logger(name=None, with_stream=True, log_file=None, log_level=logging.INFO):
    """Initialize and get a logger by name.

    The first call for a name attaches a stderr StreamHandler with the colour formatter and, if ``log_file`` is
    given, a plain FileHandler. Later calls return the initialized logger; children of an initialized logger
    ("entangle_atlas.survey" under "entangle_atlas") share its level.

    Args:
        name (str): Logger name, defaults to :func:`get_logger_name`.
        with_stream (bool): Attach the stderr handler.
        log_file (str | None): The log filename.
        log_level (int): The logger level. Debug mode (ENTANGLE_ATLAS_DEBUG) forces logging.DEBUG.
    Returns:
        logging.Logger: The expected logger.
    """
    if name is None:
        name = get_logger_name()
    logger = logging.getLogger(name)
    for logger_name, logger_level in logger_initialized.items():
        if name == logger_name and log_file is None:
            return logger
        if name.startswith(logger_name + "."):
            logger.setLevel(logger_level)
            return logger

    logger.propagate = False
    for handler in logger.handlers:
        handler.close()
    logger.handlers = []
    if is_debug_mode():
        log_level = logging.DEBUG

    if with_stream:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(CustomFormatter())
        logger.addHandler(stream_handler)

    if log_file is not None:
        file_handler = logging.FileHandler(log_file, "w")
        log_fmt = f"%(name)s - (%(filename)s:%(lineno)d) - %(levelname)s - %(asctime)s - %(message)s"
        file_handler.setFormatter(logging.Formatter(log_fmt, datefmt="%Y-%m-%d,%H:%M:%S"))
        logger.addHandler(file_handler)

    logger.setLevel(log_level)
    logger_initialized[name] = log_level
    return logger
