"""Input validation helpers used by the public estimators and operations."""

import numpy as np

UNIT_TOL = 1e-9


def as_float_array(x, name="array"):
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_points(x, name="points"):
    """Coerce to a contiguous (n, 3) float64 array."""
    arr = as_float_array(x, name)
    if arr.ndim == 1 and arr.shape == (3,):
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"{name} must have shape (n, 3), got {arr.shape}")
    return np.ascontiguousarray(arr)


def as_unit_vectors(x, name="directions", tol=UNIT_TOL):
    arr = as_points(x, name)
    norms = np.linalg.norm(arr, axis=1)
    if np.any(np.abs(norms - 1.0) > tol):
        worst = float(np.abs(norms - 1.0).max())
        raise ValueError(f"{name} must be unit length (worst deviation {worst:.3g})")
    return arr


def check_positive(value, name):
    if not np.isscalar(value) or not np.isfinite(value) or value <= 0:
        raise ValueError(f"{name} must be a positive finite scalar, got {value!r}")
    return float(value)


def check_rotation(R, name="rotation", tol=UNIT_TOL):
    R = as_float_array(R, name)
    if R.shape != (3, 3):
        raise ValueError(f"{name} must be 3x3, got {R.shape}")
    err = np.abs(R @ R.T - np.eye(3)).max()
    if err > tol:
        raise ValueError(f"{name} is not orthonormal (deviation {err:.3g})")
    return R


def check_faces(faces, n_vertices, name="faces"):
    f = np.asarray(faces)
    if f.size == 0:
        return np.zeros((0, 3), dtype=np.int64)
    if f.ndim != 2 or f.shape[1] != 3:
        raise ValueError(f"{name} must have shape (m, 3), got {f.shape}")
    if not np.issubdtype(f.dtype, np.integer):
        raise ValueError(f"{name} must be integer indices")
    if f.min() < 0 or f.max() >= n_vertices:
        raise ValueError(f"{name} contains out-of-range vertex indices")
    return np.ascontiguousarray(f, dtype=np.int64)
