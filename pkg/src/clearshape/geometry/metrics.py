"""Surface-to-surface distance metrics for reconstruction evaluation."""

from dataclasses import dataclass

import numpy as np


def point_mesh_distances(points, mesh):
    """Euclidean distance from each point to the mesh surface."""
    d, _, _ = mesh.bvh.closest_points(points)
    return d


@dataclass
class HausdorffResult:
    mean: float
    max: float
    per_vertex: np.ndarray  # closest-surface distance for each vertex of mesh A


def hausdorff(mesh_a, mesh_b, sample_count=20000, rng=None):
    """Symmetric sampled Hausdorff distance between two surfaces (mm).

    Surface samples plus vertices of each mesh are measured against the other
    surface; mean and max pool both directions. per_vertex holds distances of
    mesh A's vertices to surface B for error-map export.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    pa, _, _ = mesh_a.sample_surface(sample_count, rng)
    pb, _, _ = mesh_b.sample_surface(sample_count, rng)
    per_vertex = point_mesh_distances(mesh_a.vertices, mesh_b)
    d_ab = np.concatenate([point_mesh_distances(pa, mesh_b), per_vertex])
    d_ba = np.concatenate(
        [point_mesh_distances(pb, mesh_a), point_mesh_distances(mesh_b.vertices, mesh_a)]
    )
    both = np.concatenate([d_ab, d_ba])
    return HausdorffResult(float(both.mean()), float(both.max()), per_vertex)
