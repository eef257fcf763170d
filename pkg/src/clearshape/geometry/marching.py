"""Scalar grids and iso-surface extraction."""

from dataclasses import dataclass

import numpy as np
from skimage import measure

from ..errors import EmptyIsoSurface
from .mesh import TriangleMesh


@dataclass
class ScalarGrid:
    """Regular scalar field: values[i, j, k] at origin + spacing * (i, j, k)."""

    values: np.ndarray
    origin: np.ndarray
    spacing: float

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 3 or min(self.values.shape) < 2:
            raise ValueError("grid must be 3D with at least 2 samples per axis")
        self.origin = np.asarray(self.origin, dtype=np.float64).reshape(3)
        self.spacing = float(self.spacing)


def marching_cubes(grid, iso_level=0.0):
    """Extract the iso-surface as a closed, outward-oriented triangle mesh.

    The field convention is negative inside / positive outside. Vertices lie
    on grid edges by linear interpolation. Raises EmptyIsoSurface when the
    level is outside the field's range.
    """
    values = grid.values
    if iso_level <= values.min() or iso_level >= values.max():
        raise EmptyIsoSurface(
            f"iso level {iso_level} outside field range "
            f"[{values.min():.6g}, {values.max():.6g}]"
        )
    verts, faces, _, _ = measure.marching_cubes(
        values, level=iso_level, spacing=(grid.spacing,) * 3
    )
    mesh = TriangleMesh(verts + grid.origin, faces.astype(np.int64))
    if mesh.volume() < 0:  # enforce outward orientation
        mesh = TriangleMesh(mesh.vertices, mesh.faces[:, ::-1], drop_degenerate=False)
    return mesh
