"""Point clouds, exact k-NN queries, and PCA normal estimation."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from .._validation import as_points
from ..errors import DegenerateNeighborhood


@dataclass
class PointCloud:
    """Points in mm with optional unit normals and small-integer tags."""

    points: np.ndarray
    normals: Optional[np.ndarray] = None
    tags: Optional[np.ndarray] = None

    def __post_init__(self):
        self.points = as_points(self.points, "points")
        if self.normals is not None:
            self.normals = as_points(self.normals, "normals")
            if len(self.normals) != len(self.points):
                raise ValueError("normals must match points")
        if self.tags is not None:
            self.tags = np.asarray(self.tags, dtype=np.int32)
            if len(self.tags) != len(self.points):
                raise ValueError("tags must match points")

    def __len__(self):
        return len(self.points)


class PointIndex:
    """Exact nearest-neighbor index over a point set.

    k-NN results use the deterministic tie-break "smaller index first" among
    equidistant points, matching the brute-force definition.
    """

    def __init__(self, points):
        self.points = as_points(points, "points")
        self._tree = cKDTree(self.points)

    def knn(self, queries, k, exclude_self=False):
        """Indices of the k nearest points per query, tie-broken by index."""
        queries = as_points(queries, "queries")
        # over-fetch so exact-distance ties can be reordered by index
        kq = min(len(self.points), k + (1 if exclude_self else 0) + 8)
        dist, idx = self._tree.query(queries, k=kq)
        if kq == 1:
            dist = dist[:, None]
            idx = idx[:, None]
        out = np.empty((len(queries), k), dtype=np.int64)
        for i in range(len(queries)):
            cand = idx[i]
            d = dist[i]
            if exclude_self:
                keep = cand != i
                cand, d = cand[keep], d[keep]
            order = np.lexsort((cand, d))
            out[i] = cand[order][:k]
        return out

    def ball(self, queries, radius, sort=True):
        """Indices within radius per query (list of arrays)."""
        queries = as_points(queries, "queries")
        res = self._tree.query_ball_point(queries, radius)
        out = []
        for ids in res:
            ids = np.asarray(ids, dtype=np.int64)
            out.append(np.sort(ids) if sort else ids)
        return out

    def nearest_distances(self, queries):
        d, _ = self._tree.query(as_points(queries, "queries"), k=1)
        return d


def knn_graph(cloud, k):
    """(n, k) adjacency of the k nearest neighbors, excluding the point itself."""
    points = cloud.points if isinstance(cloud, PointCloud) else as_points(cloud)
    if len(points) <= k:
        raise ValueError(f"need more than k={k} points, got {len(points)}")
    index = PointIndex(points)
    return index.knn(points, k, exclude_self=True)


def estimate_normals_pca(cloud, neighbor_count=20, reference_directions=None, index=None):
    """Per-point unit normals from local PCA.

    The normal is the eigenvector of the smallest covariance eigenvalue over
    each point's neighborhood (the point plus its neighbor_count - 1 nearest
    neighbors). Orientation: flipped to oppose reference_directions when
    given, otherwise left with a deterministic sign.

    Raises DegenerateNeighborhood when a neighborhood is collinear.
    """
    points = cloud.points if isinstance(cloud, PointCloud) else as_points(cloud)
    if neighbor_count < 3:
        raise ValueError("neighbor_count must be >= 3")
    if len(points) < neighbor_count:
        raise ValueError("cloud smaller than neighbor_count")
    if index is None:
        index = PointIndex(points)
    nbrs = index.knn(points, neighbor_count)
    normals, ok = pca_normals_from_neighborhoods(points, nbrs)
    if not ok.all():
        bad = int(np.flatnonzero(~ok)[0])
        raise DegenerateNeighborhood(f"collinear neighborhood at point {bad}")
    if reference_directions is not None:
        refs = as_points(reference_directions, "reference_directions")
        flip = np.einsum("ij,ij->i", normals, refs) > 0
        normals[flip] = -normals[flip]
    else:
        # deterministic sign: largest-magnitude component positive
        lead = np.take_along_axis(
            normals, np.abs(normals).argmax(axis=1)[:, None], axis=1
        ).ravel()
        normals[lead < 0] = -normals[lead < 0]
    return normals


def pca_normals_from_neighborhoods(points, neighbor_indices):
    """Smallest-eigenvector normals for fixed neighborhoods.

    Returns (normals, ok) where ok flags neighborhoods of rank >= 2.
    Unoriented: callers fix the sign.
    """
    q = points[neighbor_indices]  # (n, k, 3)
    mu = q.mean(axis=1, keepdims=True)
    d = q - mu
    cov = np.einsum("nki,nkj->nij", d, d) / q.shape[1]
    vals, vecs = np.linalg.eigh(cov)
    normals = np.ascontiguousarray(vecs[:, :, 0])
    scale = vals[:, 2]
    ok = vals[:, 1] > np.maximum(scale, 1e-300) * 1e-10
    return normals, ok
