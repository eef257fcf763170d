"""Ray/mesh intersection with the full ordered hit list."""

import numpy as np

RAY_EPSILON = 1e-6  # mm; self-intersection offset along the ray


def ray_mesh_intersect(ray, mesh, t_min=RAY_EPSILON):
    """All intersections of a ray with a mesh, sorted ascending by distance.

    Returns a list of (t, face_index, point, normal) with the geometric face
    normal flipped to oppose the ray direction. An empty list is a miss.
    """
    if len(mesh.faces) == 0:
        raise ValueError("mesh is empty")
    ts, faces = mesh.bvh.all_hits(ray.origin, ray.direction, t_min=t_min)
    hits = []
    for t, f in zip(ts, faces):
        if hits and t - hits[-1][0] < t_min:
            continue  # same crossing seen by two faces sharing an edge
        n = mesh.face_normals[f]
        if np.dot(n, ray.direction) > 0:
            n = -n
        hits.append((float(t), int(f), ray.at(t), n.copy()))
    return hits
