"""Geometric substrate: meshes, rays, point sets, sampling, extraction, metrics."""

from .core import Ray, normalize, rotation_about_axis, rotation_z
from .intersect import RAY_EPSILON, ray_mesh_intersect
from .marching import ScalarGrid, marching_cubes
from .mesh import TriangleMesh
from .metrics import HausdorffResult, hausdorff, point_mesh_distances
from .pointcloud import (
    PointCloud,
    PointIndex,
    estimate_normals_pca,
    knn_graph,
    pca_normals_from_neighborhoods,
)
from .primitives import make_box, make_icosphere, make_quad
from .sampling import poisson_disk_sample

__all__ = [
    "Ray",
    "normalize",
    "rotation_about_axis",
    "rotation_z",
    "RAY_EPSILON",
    "ray_mesh_intersect",
    "ScalarGrid",
    "marching_cubes",
    "TriangleMesh",
    "HausdorffResult",
    "hausdorff",
    "point_mesh_distances",
    "PointCloud",
    "PointIndex",
    "estimate_normals_pca",
    "knn_graph",
    "pca_normals_from_neighborhoods",
    "make_box",
    "make_icosphere",
    "make_quad",
    "poisson_disk_sample",
]
