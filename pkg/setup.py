import os.path as osp
import re
import sys

from setuptools import find_packages, setup


def parse_requirements(fname="requirements.txt", with_version=True):
    """Parse the package dependencies listed in a requirements file.

    Args:
        fname (str): Path to the requirements file; ``-r other.txt`` lines are followed.
        with_version (bool): Keep version specifiers such as ``numpy>=1.17``.
    Returns:
        list[str]: Requirement strings for ``install_requires``.
    """

    def parse_line(line):
        if line.startswith("-r "):
            yield from parse_require_file(line.split(" ")[1])
            return
        info = {"line": line}
        pat = "(" + "|".join([">=", "==", ">"]) + ")"
        parts = [p.strip() for p in re.split(pat, line, maxsplit=1)]
        info["package"] = parts[0]
        if len(parts) > 1:
            op, rest = parts[1:]
            if ";" in rest:
                version, platform_deps = map(str.strip, rest.split(";"))
                info["platform_deps"] = platform_deps
            else:
                version = rest
            info["version"] = (op, version)
        yield info

    def parse_require_file(fpath):
        with open(fpath, "r") as f:
            for line in f.readlines():
                line = line.strip()
                if line and not line.startswith("#"):
                    yield from parse_line(line)

    if not osp.exists(fname):
        return []
    packages = []
    for info in parse_require_file(fname):
        parts = [info["package"]]
        if with_version and "version" in info:
            parts.extend(info["version"])
        if info.get("platform_deps") is not None:
            parts.append(";" + info["platform_deps"])
        packages.append("".join(parts))
    return packages


def get_version():
    version_file = "entangle_atlas/version.py"
    with open(version_file, "r", encoding="utf-8") as f:
        exec(compile(f.read(), version_file, "exec"))
    return locals()["__version__"]


if sys.version_info < (3, 8):
    raise RuntimeError("entangle_atlas requires Python >= 3.8")


setup(
    name="entangle_atlas",
    version=get_version(),
    description="Monte Carlo survey of separability criteria on random bipartite quantum states",
    install_requires=parse_requirements(),
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    entry_points={"console_scripts": ["entangle-atlas=entangle_atlas.apis.main:main"]},
    zip_safe=False,
)
