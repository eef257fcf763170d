"""Basic 3D types: vectors, rays, rigid motions.

Positions are in millimeters; directions are unit-length float64 arrays.
"""

from dataclasses import dataclass

import numpy as np

from .._validation import as_float_array, as_unit_vectors


def normalize(v):
    """Return v scaled to unit length (works on (3,) or (n, 3) arrays)."""
    v = np.asarray(v, dtype=np.float64)
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(n == 0.0):
        raise ValueError("cannot normalize zero-length vector")
    return v / n


@dataclass(frozen=True)
class Ray:
    """A ray with unit direction; origin in mm."""

    origin: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "origin", as_float_array(self.origin, "origin").reshape(3))
        object.__setattr__(
            self, "direction", as_unit_vectors(self.direction, "direction").reshape(3)
        )

    def at(self, t):
        return self.origin + float(t) * self.direction


def rotation_about_axis(axis, angle_rad):
    """Rodrigues rotation matrix about a unit axis through the origin."""
    a = normalize(np.asarray(axis, dtype=np.float64).reshape(3))
    c, s = np.cos(angle_rad), np.sin(angle_rad)
    K = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return np.eye(3) * c + s * K + (1 - c) * np.outer(a, a)


def rotation_z(angle_rad):
    c, s = np.cos(angle_rad), np.sin(angle_rad)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
