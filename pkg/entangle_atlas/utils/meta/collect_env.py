import sys, time
from importlib import import_module


def get_package_version(package_name):
    try:
        package = import_module(package_name)
    except ImportError:
        return "n/a"
    return getattr(package, "__version__", "unknown")


def get_meta_info():
    """Versions and time of the current run, as stored in run manifests."""
    ret = {"meta_collect_time": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
    ret["Python"] = sys.version.replace("\n", "")
    for print_name, package_name in [
        ["entangle_atlas", "entangle_atlas"],
        ["numpy", "numpy"],
        ["scipy", "scipy"],
        ["matplotlib", "matplotlib"],
    ]:
        ret[print_name] = get_package_version(package_name)
    return ret


def log_meta_info(logger, meta_info=None):
    if meta_info is None:
        meta_info = get_meta_info()
    for key in meta_info:
        logger.info(f"{key}: {meta_info[key]}")


if __name__ == "__main__":
    for name, val in get_meta_info().items():
        print(f"{name}: {val}")
