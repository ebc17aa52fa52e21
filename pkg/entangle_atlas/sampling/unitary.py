import numpy as np

from ..exceptions import ConvergenceFailure, InvalidDimension


def ginibre(n, rng, size=None):
    """n x n matrices of i.i.d. standard complex Gaussians (E|z|^2 = 1)."""
    shape = (n, n) if size is None else tuple(np.atleast_1d(size)) + (n, n)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def haar_unitary(n, rng, size=None):
    """Haar-distributed unitary matrix (or stack) of order n.

    QR of a Ginibre matrix, then column j of Q is multiplied by the phase of R[j, j] so that R has a positive real
    diagonal; without this correction Q is not Haar distributed.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidDimension(f"Unitary order must be a positive integer, got {n!r}")
    try:
        q, r = np.linalg.qr(ginibre(int(n), rng, size=size))
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(f"QR decomposition failed: {e}") from e
    d = np.diagonal(r, axis1=-2, axis2=-1)
    modulus = np.abs(d)
    phase = np.where(modulus > 0, d / np.where(modulus > 0, modulus, 1), 1)
    return q * phase[..., None, :]


def unitarity_error(u):
    """max |U^dagger U - I| per matrix."""
    u = np.asarray(u)
    n = u.shape[-1]
    return np.abs(np.conj(np.swapaxes(u, -1, -2)) @ u - np.eye(n)).max(axis=(-1, -2))
