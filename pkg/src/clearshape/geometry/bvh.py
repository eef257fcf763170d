"""Bounding-volume hierarchy over triangle meshes.

Median-split build in numpy; traversal kernels are numba-compiled. Queries
return exactly what a brute-force loop over all triangles would (verified by
oracle tests): same hits, same distances.
"""

import numpy as np
from numba import njit, prange

_LEAF_SIZE = 4
_STACK = 128


def _build_nodes(tri_bmin, tri_bmax, centroids, leaf_size):
    m = len(centroids)
    order = np.arange(m, dtype=np.int64)
    bmins, bmaxs, lefts, rights, starts, counts = [], [], [], [], [], []

    def rec(lo, hi):
        idx = len(bmins)
        sel = order[lo:hi]
        bmins.append(tri_bmin[sel].min(axis=0))
        bmaxs.append(tri_bmax[sel].max(axis=0))
        lefts.append(-1)
        rights.append(-1)
        starts.append(lo)
        counts.append(hi - lo)
        if hi - lo > leaf_size:
            cen = centroids[sel]
            axis = int(np.argmax(cen.max(axis=0) - cen.min(axis=0)))
            k = (hi - lo) // 2
            part = np.argpartition(cen[:, axis], k)
            order[lo:hi] = sel[part]
            lefts[idx] = rec(lo, lo + k)
            rights[idx] = rec(lo + k, hi)
            counts[idx] = 0
        return idx

    rec(0, m)
    return (
        np.asarray(bmins),
        np.asarray(bmaxs),
        np.asarray(lefts, dtype=np.int64),
        np.asarray(rights, dtype=np.int64),
        np.asarray(starts, dtype=np.int64),
        np.asarray(counts, dtype=np.int64),
        order,
    )


@njit(cache=True, inline="always")
def _ray_box(ox, oy, oz, dx, dy, dz, bmin, bmax, t_lo, t_hi):
    """Ray/AABB slab test; returns entry t (or t_hi + 1 on miss)."""
    tmin = t_lo
    tmax = t_hi
    for a in range(3):
        o = ox if a == 0 else (oy if a == 1 else oz)
        d = dx if a == 0 else (dy if a == 1 else dz)
        lo = bmin[a]
        hi = bmax[a]
        if d == 0.0:
            if o < lo or o > hi:
                return t_hi + 1.0
        else:
            inv = 1.0 / d
            t1 = (lo - o) * inv
            t2 = (hi - o) * inv
            if t1 > t2:
                t1, t2 = t2, t1
            if t1 > tmin:
                tmin = t1
            if t2 < tmax:
                tmax = t2
            if tmin > tmax:
                return t_hi + 1.0
    return tmin


@njit(cache=True, inline="always")
def _ray_tri(ox, oy, oz, dx, dy, dz, a, b, c):
    """Moller-Trumbore; returns (t, hit) with t meaningless when not hit."""
    e1x = b[0] - a[0]
    e1y = b[1] - a[1]
    e1z = b[2] - a[2]
    e2x = c[0] - a[0]
    e2y = c[1] - a[1]
    e2z = c[2] - a[2]
    px = dy * e2z - dz * e2y
    py = dz * e2x - dx * e2z
    pz = dx * e2y - dy * e2x
    det = e1x * px + e1y * py + e1z * pz
    if det > -1e-14 and det < 1e-14:
        return 0.0, False
    inv = 1.0 / det
    tx = ox - a[0]
    ty = oy - a[1]
    tz = oz - a[2]
    u = (tx * px + ty * py + tz * pz) * inv
    if u < 0.0 or u > 1.0:
        return 0.0, False
    qx = ty * e1z - tz * e1y
    qy = tz * e1x - tx * e1z
    qz = tx * e1y - ty * e1x
    v = (dx * qx + dy * qy + dz * qz) * inv
    if v < 0.0 or u + v > 1.0:
        return 0.0, False
    t = (e2x * qx + e2y * qy + e2z * qz) * inv
    return t, True


@njit(cache=True)
def _first_hit_one(
    bmin, bmax, left, right, start, count, tri_of, v0, v1, v2,
    ox, oy, oz, dx, dy, dz, t_min, t_cap,
):
    stack = np.empty(_STACK, dtype=np.int64)
    top = 0
    stack[top] = 0
    top += 1
    best_t = t_cap
    best_face = -1
    while top > 0:
        top -= 1
        node = stack[top]
        if _ray_box(ox, oy, oz, dx, dy, dz, bmin[node], bmax[node], t_min, best_t) > best_t:
            continue
        if left[node] < 0:
            for k in range(start[node], start[node] + count[node]):
                t, hit = _ray_tri(ox, oy, oz, dx, dy, dz, v0[k], v1[k], v2[k])
                if hit and t > t_min and t < best_t:
                    best_t = t
                    best_face = tri_of[k]
        else:
            stack[top] = left[node]
            top += 1
            stack[top] = right[node]
            top += 1
    return best_t, best_face


@njit(cache=True, parallel=True)
def _first_hits(
    bmin, bmax, left, right, start, count, tri_of, v0, v1, v2,
    origins, dirs, t_min, t_cap, out_t, out_face,
):
    for i in prange(origins.shape[0]):
        t, f = _first_hit_one(
            bmin, bmax, left, right, start, count, tri_of, v0, v1, v2,
            origins[i, 0], origins[i, 1], origins[i, 2],
            dirs[i, 0], dirs[i, 1], dirs[i, 2], t_min, t_cap,
        )
        out_t[i] = t
        out_face[i] = f


@njit(cache=True)
def _all_hits_one(
    bmin, bmax, left, right, start, count, tri_of, v0, v1, v2,
    ox, oy, oz, dx, dy, dz, t_min, out_t, out_face,
):
    stack = np.empty(_STACK, dtype=np.int64)
    top = 0
    stack[top] = 0
    top += 1
    n = 0
    cap = out_t.shape[0]
    inf = np.inf
    while top > 0:
        top -= 1
        node = stack[top]
        if _ray_box(ox, oy, oz, dx, dy, dz, bmin[node], bmax[node], t_min, inf) == inf + 1.0:
            continue
        if left[node] < 0:
            for k in range(start[node], start[node] + count[node]):
                t, hit = _ray_tri(ox, oy, oz, dx, dy, dz, v0[k], v1[k], v2[k])
                if hit and t > t_min:
                    if n >= cap:
                        return -1
                    out_t[n] = t
                    out_face[n] = tri_of[k]
                    n += 1
        else:
            stack[top] = left[node]
            top += 1
            stack[top] = right[node]
            top += 1
    return n


@njit(cache=True, inline="always")
def _box_dist2(p, bmin, bmax):
    d2 = 0.0
    for a in range(3):
        d = 0.0
        if p[a] < bmin[a]:
            d = bmin[a] - p[a]
        elif p[a] > bmax[a]:
            d = p[a] - bmax[a]
        d2 += d * d
    return d2


@njit(cache=True, inline="always")
def _closest_on_tri(p, a, b, c):
    """Closest point on triangle abc to p (Ericson, Real-Time Collision Detection)."""
    abx = b[0] - a[0]
    aby = b[1] - a[1]
    abz = b[2] - a[2]
    acx = c[0] - a[0]
    acy = c[1] - a[1]
    acz = c[2] - a[2]
    apx = p[0] - a[0]
    apy = p[1] - a[1]
    apz = p[2] - a[2]
    d1 = abx * apx + aby * apy + abz * apz
    d2 = acx * apx + acy * apy + acz * apz
    if d1 <= 0.0 and d2 <= 0.0:
        return a[0], a[1], a[2]
    bpx = p[0] - b[0]
    bpy = p[1] - b[1]
    bpz = p[2] - b[2]
    d3 = abx * bpx + aby * bpy + abz * bpz
    d4 = acx * bpx + acy * bpy + acz * bpz
    if d3 >= 0.0 and d4 <= d3:
        return b[0], b[1], b[2]
    vc = d1 * d4 - d3 * d2
    if vc <= 0.0 and d1 >= 0.0 and d3 <= 0.0:
        w = d1 / (d1 - d3)
        return a[0] + w * abx, a[1] + w * aby, a[2] + w * abz
    cpx = p[0] - c[0]
    cpy = p[1] - c[1]
    cpz = p[2] - c[2]
    d5 = abx * cpx + aby * cpy + abz * cpz
    d6 = acx * cpx + acy * cpy + acz * cpz
    if d6 >= 0.0 and d5 <= d6:
        return c[0], c[1], c[2]
    vb = d5 * d2 - d1 * d6
    if vb <= 0.0 and d2 >= 0.0 and d6 <= 0.0:
        w = d2 / (d2 - d6)
        return a[0] + w * acx, a[1] + w * acy, a[2] + w * acz
    va = d3 * d6 - d5 * d4
    if va <= 0.0 and (d4 - d3) >= 0.0 and (d5 - d6) >= 0.0:
        w = (d4 - d3) / ((d4 - d3) + (d5 - d6))
        return (
            b[0] + w * (c[0] - b[0]),
            b[1] + w * (c[1] - b[1]),
            b[2] + w * (c[2] - b[2]),
        )
    denom = 1.0 / (va + vb + vc)
    v = vb * denom
    w = vc * denom
    return (
        a[0] + abx * v + acx * w,
        a[1] + aby * v + acy * w,
        a[2] + abz * v + acz * w,
    )


@njit(cache=True, parallel=True)
def _closest_points(
    bmin, bmax, left, right, start, count, tri_of, v0, v1, v2,
    points, out_d2, out_face, out_pt,
):
    for i in prange(points.shape[0]):
        p = points[i]
        stack = np.empty(_STACK, dtype=np.int64)
        top = 0
        stack[top] = 0
        top += 1
        best = np.inf
        bface = -1
        bx = 0.0
        by = 0.0
        bz = 0.0
        while top > 0:
            top -= 1
            node = stack[top]
            if _box_dist2(p, bmin[node], bmax[node]) >= best:
                continue
            if left[node] < 0:
                for k in range(start[node], start[node] + count[node]):
                    qx, qy, qz = _closest_on_tri(p, v0[k], v1[k], v2[k])
                    d2 = (p[0] - qx) ** 2 + (p[1] - qy) ** 2 + (p[2] - qz) ** 2
                    if d2 < best:
                        best = d2
                        bface = tri_of[k]
                        bx, by, bz = qx, qy, qz
            else:
                l = left[node]
                r = right[node]
                dl = _box_dist2(p, bmin[l], bmax[l])
                dr = _box_dist2(p, bmin[r], bmax[r])
                if dl > dr:  # push nearer child last so it pops first
                    stack[top] = l
                    top += 1
                    stack[top] = r
                    top += 1
                else:
                    stack[top] = r
                    top += 1
                    stack[top] = l
                    top += 1
        out_d2[i] = best
        out_face[i] = bface
        out_pt[i, 0] = bx
        out_pt[i, 1] = by
        out_pt[i, 2] = bz


class MeshBVH:
    """Spatial index over a TriangleMesh for ray and proximity queries."""

    def __init__(self, mesh, leaf_size=_LEAF_SIZE):
        if len(mesh.faces) == 0:
            raise ValueError("cannot build a BVH over an empty mesh")
        tri = mesh.vertices[mesh.faces]
        (
            self._bmin,
            self._bmax,
            self._left,
            self._right,
            self._start,
            self._count,
            order,
        ) = _build_nodes(tri.min(axis=1), tri.max(axis=1), tri.mean(axis=1), leaf_size)
        self._tri_of = order
        self._v0 = np.ascontiguousarray(tri[order, 0])
        self._v1 = np.ascontiguousarray(tri[order, 1])
        self._v2 = np.ascontiguousarray(tri[order, 2])

    def _args(self):
        return (
            self._bmin,
            self._bmax,
            self._left,
            self._right,
            self._start,
            self._count,
            self._tri_of,
            self._v0,
            self._v1,
            self._v2,
        )

    def first_hits(self, origins, directions, t_min=1e-6):
        """Nearest hit per ray: (t, face_index); face -1 and t=inf on miss."""
        origins = np.ascontiguousarray(origins, dtype=np.float64)
        directions = np.ascontiguousarray(directions, dtype=np.float64)
        n = origins.shape[0]
        out_t = np.empty(n)
        out_face = np.empty(n, dtype=np.int64)
        _first_hits(*self._args(), origins, directions, t_min, np.inf, out_t, out_face)
        return out_t, out_face

    def all_hits(self, origin, direction, t_min=1e-6):
        """Every hit along one ray, sorted ascending by t: (t, face_index)."""
        cap = 64
        while True:
            out_t = np.empty(cap)
            out_face = np.empty(cap, dtype=np.int64)
            n = _all_hits_one(
                *self._args(),
                float(origin[0]), float(origin[1]), float(origin[2]),
                float(direction[0]), float(direction[1]), float(direction[2]),
                t_min, out_t, out_face,
            )
            if n >= 0:
                order = np.argsort(out_t[:n], kind="stable")
                return out_t[:n][order], out_face[:n][order]
            cap *= 4

    def closest_points(self, points):
        """Closest surface point per query: (distance, face_index, point)."""
        points = np.ascontiguousarray(points, dtype=np.float64)
        n = points.shape[0]
        out_d2 = np.empty(n)
        out_face = np.empty(n, dtype=np.int64)
        out_pt = np.empty((n, 3))
        _closest_points(*self._args(), points, out_d2, out_face, out_pt)
        return np.sqrt(out_d2), out_face, out_pt
