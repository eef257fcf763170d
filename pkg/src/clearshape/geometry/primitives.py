"""Procedural test meshes: icospheres, boxes, quads."""

import numpy as np

from .core import normalize
from .mesh import TriangleMesh


def make_icosphere(radius=1.0, subdivisions=3, center=(0.0, 0.0, 0.0), smooth_normals=True):
    """Geodesic sphere by repeated icosahedron subdivision.

    With smooth_normals the exact radial directions are attached as vertex
    normals, so refraction through the mesh closely matches the analytic
    sphere.
    """
    phi = (1.0 + np.sqrt(5.0)) / 2.0
    verts = np.array(
        [
            [-1, phi, 0], [1, phi, 0], [-1, -phi, 0], [1, -phi, 0],
            [0, -1, phi], [0, 1, phi], [0, -1, -phi], [0, 1, -phi],
            [phi, 0, -1], [phi, 0, 1], [-phi, 0, -1], [-phi, 0, 1],
        ],
        dtype=np.float64,
    )
    verts = normalize(verts)
    faces = np.array(
        [
            [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
            [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
            [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
            [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
        ],
        dtype=np.int64,
    )
    for _ in range(subdivisions):
        edge_mid = {}
        verts_list = list(verts)

        def midpoint(i, j):
            key = (i, j) if i < j else (j, i)
            if key not in edge_mid:
                m = normalize(verts_list[i] + verts_list[j])
                edge_mid[key] = len(verts_list)
                verts_list.append(m)
            return edge_mid[key]

        new_faces = []
        for a, b, c in faces:
            ab = midpoint(a, b)
            bc = midpoint(b, c)
            ca = midpoint(c, a)
            new_faces += [[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]
        verts = np.asarray(verts_list)
        faces = np.asarray(new_faces, dtype=np.int64)
    normals = verts.copy() if smooth_normals else None
    verts = verts * radius + np.asarray(center, dtype=np.float64)
    return TriangleMesh(verts, faces, normals)


def make_box(center=(0.0, 0.0, 0.0), size=(1.0, 1.0, 1.0)):
    """Axis-aligned box with outward-oriented faces."""
    c = np.asarray(center, dtype=np.float64)
    h = np.asarray(size, dtype=np.float64) / 2.0
    corners = np.array(
        [[sx, sy, sz] for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)],
        dtype=np.float64,
    )
    verts = c + corners * h
    # two triangles per face, CCW seen from outside
    quads = [
        (0, 1, 3, 2), (4, 6, 7, 5),  # -x, +x
        (0, 4, 5, 1), (2, 3, 7, 6),  # -y, +y
        (0, 2, 6, 4), (1, 5, 7, 3),  # -z, +z
    ]
    faces = []
    for a, b, cc, d in quads:
        faces += [[a, b, cc], [a, cc, d]]
    return TriangleMesh(verts, np.asarray(faces, dtype=np.int64))


def make_quad(origin, edge_u, edge_v):
    """Two-triangle parallelogram patch: origin plus spans edge_u, edge_v."""
    o = np.asarray(origin, dtype=np.float64)
    u = np.asarray(edge_u, dtype=np.float64)
    v = np.asarray(edge_v, dtype=np.float64)
    verts = np.stack([o, o + u, o + u + v, o + v])
    faces = np.array([[0, 1, 2], [0, 2, 3]], dtype=np.int64)
    return TriangleMesh(verts, faces)
