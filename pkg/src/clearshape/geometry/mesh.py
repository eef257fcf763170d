"""Triangle mesh container with cached derived quantities.

Meshes are immutable-by-convention: operations return new meshes. Derived
data (face normals, areas, the BVH) is computed lazily and cached.
"""

import numpy as np

from .._validation import as_points, check_faces


class TriangleMesh:
    """Indexed triangle mesh.

    Degenerate (zero-area) faces are dropped at construction. Vertex normals
    are optional; when present they are unit length and enable smooth
    (interpolated) normals during ray tracing.
    """

    def __init__(self, vertices, faces, vertex_normals=None, drop_degenerate=True):
        self.vertices = as_points(vertices, "vertices")
        self.faces = check_faces(faces, len(self.vertices))
        if vertex_normals is not None:
            vertex_normals = as_points(vertex_normals, "vertex_normals")
            if len(vertex_normals) != len(self.vertices):
                raise ValueError("vertex_normals must match vertices")
            norms = np.linalg.norm(vertex_normals, axis=1, keepdims=True)
            norms[norms == 0] = 1.0
            vertex_normals = vertex_normals / norms
        self.vertex_normals = vertex_normals
        if drop_degenerate and len(self.faces):
            areas = self._raw_face_areas()
            keep = areas > 0.0
            if not keep.all():
                self.faces = self.faces[keep]
        self._cache = {}

    # -- derived quantities -------------------------------------------------

    def _raw_face_areas(self):
        tri = self.vertices[self.faces]
        cross = np.cross(tri[:, 1] - tri[:, 0], tri[:, 2] - tri[:, 0])
        return 0.5 * np.linalg.norm(cross, axis=1)

    @property
    def face_normals(self):
        if "face_normals" not in self._cache:
            tri = self.vertices[self.faces]
            cross = np.cross(tri[:, 1] - tri[:, 0], tri[:, 2] - tri[:, 0])
            norms = np.linalg.norm(cross, axis=1, keepdims=True)
            norms[norms == 0] = 1.0
            self._cache["face_normals"] = cross / norms
        return self._cache["face_normals"]

    @property
    def face_areas(self):
        if "face_areas" not in self._cache:
            self._cache["face_areas"] = self._raw_face_areas()
        return self._cache["face_areas"]

    @property
    def bvh(self):
        if "bvh" not in self._cache:
            from .bvh import MeshBVH

            self._cache["bvh"] = MeshBVH(self)
        return self._cache["bvh"]

    def area(self):
        return float(self.face_areas.sum())

    def volume(self):
        """Signed volume (positive for outward-oriented closed meshes)."""
        tri = self.vertices[self.faces]
        return float(np.einsum("ij,ij->i", tri[:, 0], np.cross(tri[:, 1], tri[:, 2])).sum() / 6.0)

    def bounds(self):
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def bbox_diagonal(self):
        lo, hi = self.bounds()
        return float(np.linalg.norm(hi - lo))

    def is_closed(self):
        """True when every edge is shared by exactly two faces."""
        if len(self.faces) == 0:
            return False
        edges = np.concatenate(
            [self.faces[:, [0, 1]], self.faces[:, [1, 2]], self.faces[:, [2, 0]]]
        )
        edges = np.sort(edges, axis=1)
        _, counts = np.unique(edges, axis=0, return_counts=True)
        return bool(np.all(counts == 2))

    def compute_vertex_normals(self):
        """Area-weighted vertex normals; returns a new mesh carrying them."""
        tri = self.vertices[self.faces]
        cross = np.cross(tri[:, 1] - tri[:, 0], tri[:, 2] - tri[:, 0])
        vn = np.zeros_like(self.vertices)
        for k in range(3):
            np.add.at(vn, self.faces[:, k], cross)
        norms = np.linalg.norm(vn, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        return TriangleMesh(self.vertices, self.faces, vn / norms, drop_degenerate=False)

    # -- operations ----------------------------------------------------------

    def transformed(self, R=None, t=None):
        """Apply the rigid motion x -> R x + t."""
        v = self.vertices
        vn = self.vertex_normals
        if R is not None:
            R = np.asarray(R, dtype=np.float64)
            v = v @ R.T
            vn = vn @ R.T if vn is not None else None
        if t is not None:
            v = v + np.asarray(t, dtype=np.float64)
        return TriangleMesh(v, self.faces, vn, drop_degenerate=False)

    def laplacian_smoothed(self, passes=1, weight=0.5):
        """Umbrella-operator smoothing; removes voxel staircasing."""
        if passes <= 0:
            return self
        n = len(self.vertices)
        e0 = np.concatenate([self.faces[:, 0], self.faces[:, 1], self.faces[:, 2]])
        e1 = np.concatenate([self.faces[:, 1], self.faces[:, 2], self.faces[:, 0]])
        src = np.concatenate([e0, e1])
        dst = np.concatenate([e1, e0])
        deg = np.zeros(n)
        np.add.at(deg, src, 1.0)
        deg[deg == 0] = 1.0
        v = self.vertices.copy()
        for _ in range(passes):
            acc = np.zeros_like(v)
            np.add.at(acc, src, v[dst])
            v += weight * (acc / deg[:, None] - v)
        return TriangleMesh(v, self.faces, None, drop_degenerate=False)

    def sample_surface(self, count, rng):
        """Uniform area-weighted surface samples.

        Returns (points, face_indices, normals); normals are flat face
        normals at the sampled faces.
        """
        areas = self.face_areas
        total = areas.sum()
        if total <= 0:
            raise ValueError("mesh has zero surface area")
        probs = areas / total
        fidx = rng.choice(len(self.faces), size=count, p=probs)
        u = rng.random(count)
        v = rng.random(count)
        flip = u + v > 1.0
        u[flip] = 1.0 - u[flip]
        v[flip] = 1.0 - v[flip]
        tri = self.vertices[self.faces[fidx]]
        pts = tri[:, 0] + u[:, None] * (tri[:, 1] - tri[:, 0]) + v[:, None] * (tri[:, 2] - tri[:, 0])
        return pts, fidx, self.face_normals[fidx]
