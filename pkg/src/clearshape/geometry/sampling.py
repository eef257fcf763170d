"""Blue-noise (Poisson-disk) sampling of mesh surfaces."""

import numpy as np
from scipy.spatial import cKDTree

from .pointcloud import PointCloud


def poisson_disk_sample(mesh, target_count, rng, oversample=4, tolerance=0.1):
    """Evenly spaced surface samples via dart thinning.

    Oversamples the surface uniformly, then greedily keeps points no closer
    than a disk radius, retuning the radius until the kept count is within
    tolerance of target_count. Returns (cloud, mean_spacing) where
    mean_spacing is the average nearest-neighbor distance of the result and
    the kept set has minimum pairwise distance >= the final disk radius.
    """
    if target_count < 100:
        raise ValueError("target_count must be >= 100")
    area = mesh.area()
    if area <= 0.0:
        raise ValueError("mesh has zero surface area")
    pts, fidx, nrm = mesh.sample_surface(int(target_count * oversample), rng)
    # hexagonal-packing estimate of the disk radius for the target density
    radius = np.sqrt(2.0 * area / (np.sqrt(3.0) * target_count)) * 0.75
    keep = None
    for _ in range(8):
        keep = _dart_thin(pts, radius)
        count = keep.sum()
        if abs(count - target_count) <= tolerance * target_count:
            break
        radius *= np.sqrt(count / target_count)
    cloud = PointCloud(pts[keep], normals=nrm[keep], tags=fidx[keep].astype(np.int32))
    d, _ = cKDTree(cloud.points).query(cloud.points, k=2)
    mean_spacing = float(d[:, 1].mean())
    return cloud, mean_spacing


def _dart_thin(points, radius):
    tree = cKDTree(points)
    neighbor_lists = tree.query_ball_tree(tree, radius)
    keep = np.zeros(len(points), dtype=bool)
    blocked = np.zeros(len(points), dtype=bool)
    for i in range(len(points)):
        if blocked[i]:
            continue
        keep[i] = True
        for j in neighbor_lists[i]:
            blocked[j] = True
    return keep
