"""
Plain-text density matrix files.

First line ``n_a n_b``, then one line ``i j re im`` per entry (0-indexed, row-major). Unlisted entries are zero;
blank lines and lines starting with ``#`` are skipped.
"""
import numpy as np

from ..exceptions import StateFileError
from ..utils.data import num_to_str
from ..utils.file import dump, load
from .matrix import DensityMatrix, SystemDims


STATE_FILE_TRACE_TOL = 1e-6


def _content_lines(lines):
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if len(line) > 0 and not line.startswith("#"):
            yield lineno, line


def parse_state_lines(lines):
    """Parse the lines of a state file into (matrix, dims) without validating the state."""
    content = list(_content_lines(lines))
    if len(content) == 0:
        raise StateFileError("State file is empty; expected a header line 'n_a n_b'")
    lineno, header = content[0]
    try:
        n_a, n_b = [int(x) for x in header.split()]
        dims = SystemDims(n_a, n_b)
    except Exception:
        raise StateFileError(f"line {lineno}: expected header 'n_a n_b' with two positive integers, got {header!r}")

    n = dims.total()
    mat = np.zeros((n, n), dtype=np.complex128)
    seen = set()
    for lineno, line in content[1:]:
        parts = line.split()
        try:
            if len(parts) != 4:
                raise ValueError("expected 4 fields")
            i, j, re, im = int(parts[0]), int(parts[1]), float(parts[2]), float(parts[3])
        except ValueError as e:
            raise StateFileError(f"line {lineno}: expected 'i j re im', got {line!r} ({e})")
        if not (0 <= i < n and 0 <= j < n):
            raise StateFileError(f"line {lineno}: index ({i}, {j}) outside a {n}x{n} matrix (dims mismatch)")
        if (i, j) in seen:
            raise StateFileError(f"line {lineno}: entry ({i}, {j}) listed twice")
        if not (np.isfinite(re) and np.isfinite(im)):
            raise StateFileError(f"line {lineno}: non-finite entry {line!r}")
        seen.add((i, j))
        mat[i, j] = complex(re, im)
    return mat, dims


def read_state_file(path, dims=None):
    """Load and validate a density matrix file.

    The trace must be 1 within 1e-6; the matrix is then renormalized to unit trace. ``dims``, if given, must
    match the header. Hermiticity and positivity failures surface as NonHermitianInput and InvalidState.
    """
    try:
        lines = load(str(path), file_format="txt")
    except OSError as e:
        raise StateFileError(f"Cannot read state file {path}: {e}")
    mat, file_dims = parse_state_lines(lines)
    if dims is not None:
        dims = dims if isinstance(dims, SystemDims) else SystemDims(*dims)
        if dims != file_dims:
            raise StateFileError(f"dims mismatch: requested {dims} but the file declares {file_dims}")
    return DensityMatrix.from_array(mat, file_dims, trace_tol=STATE_FILE_TRACE_TOL, normalize=True)


def state_file_lines(mat, dims, atol=0.0):
    """Lines of the state file of ``mat``; entries with modulus <= ``atol`` are left out."""
    mat = np.asarray(mat, dtype=np.complex128)
    lines = [f"{dims.n_a} {dims.n_b}"]
    for i, j in zip(*np.nonzero(np.abs(mat) > atol)):
        lines.append(f"{i} {j} {num_to_str(float(mat[i, j].real))} {num_to_str(float(mat[i, j].imag))}")
    return lines


def write_state_file(rho, path, atol=0.0):
    dump(state_file_lines(rho.mat, rho.dims, atol), str(path), file_format="txt")
    return str(path)
