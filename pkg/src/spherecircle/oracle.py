"""Exhaustive reference solvers for validating the fast paths at desk scale.

Everything here trades speed for obviousness: candidate circles and balls
are enumerated over all small support subsets and checked against every
point, using batched numpy linear algebra. Results are deterministic and
permutation invariant (ties broken by plane offset or radius, then
lexicographically by center), so frozen test expectations stay stable.
Do not use above a few dozen points.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .geometry import EuclideanBall, PlaneCircle
from .welzl import PlanarCircle

_ENCLOSE_EPS = 1e-12
_DEGENERATE_EPS = 1e-9


class OracleSelfCheckError(RuntimeError):
    """Two independent oracle routes disagreed; the oracle itself is suspect."""


def _as_points(points, dim) -> np.ndarray:
    pts = np.asarray(list(points), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != dim:
        raise ValueError(f"expected an n x {dim} point array, got shape {pts.shape}")
    # Canonical point order makes every candidate computation bit-identical
    # across permutations of the input, so results are exactly reproducible.
    return pts[np.lexsort(tuple(pts[:, k] for k in range(dim - 1, -1, -1)))]


def _row_norms(a: np.ndarray) -> np.ndarray:
    return np.sqrt((a * a).sum(axis=1))


def _any_perpendicular(axis: np.ndarray) -> np.ndarray:
    probe = np.array([1.0, 0.0, 0.0]) if abs(axis[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    w = probe - (probe @ axis) * axis
    return w / np.linalg.norm(w)


def _triples(n: int) -> np.ndarray:
    return np.array(list(combinations(range(n), 3)), dtype=int)


def _spherical_candidates(pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All circle candidates (centers, offsets) over support pairs and triples."""
    n = len(pts)
    centers: list[np.ndarray] = []
    offsets: list[np.ndarray] = []

    ii, jj = np.triu_indices(n, 1)
    sums = pts[ii] + pts[jj]
    sum_norms = _row_norms(sums)
    regular = sum_norms > _DEGENERATE_EPS
    if regular.any():
        centers.append(sums[regular] / sum_norms[regular, None])
        offsets.append(np.minimum(1.0, 0.5 * sum_norms[regular]))
    for i, j in zip(ii[~regular], jj[~regular]):
        # Antipodal pair: only great circles enclose both. Offer the great
        # circles tilted toward each remaining point, or an arbitrary one
        # when the pair is alone.
        axis = pts[i]
        added = False
        for k in range(n):
            if k in (i, j):
                continue
            w = pts[k] - (pts[k] @ axis) * axis
            nw = float(np.linalg.norm(w))
            if nw > _DEGENERATE_EPS:
                centers.append(w[None] / nw)
                offsets.append(np.zeros(1))
                added = True
        if not added:
            centers.append(_any_perpendicular(axis)[None])
            offsets.append(np.zeros(1))

    if n >= 3:
        trio = pts[_triples(n)]  # (m, 3, 3)
        gram = np.einsum("mij,mkj->mik", trio, trio)
        pair_dots = np.stack([gram[:, 0, 1], gram[:, 0, 2], gram[:, 1, 2]], axis=1)
        degenerate = (
            (pair_dots >= 1.0 - _ENCLOSE_EPS) | (pair_dots <= -1.0 + _ENCLOSE_EPS)
        ).any(axis=1)  # coincident or antipodal members; covered by pairs
        det = np.linalg.det(trio)
        great = ~degenerate & (np.abs(det) <= _ENCLOSE_EPS)
        if great.any():
            # Coplanar with the origin: the circumcircle is a great circle.
            normals = np.cross(trio[great, 1] - trio[great, 0], trio[great, 2] - trio[great, 0])
            norms = _row_norms(normals)
            keep = norms > _ENCLOSE_EPS
            normals = normals[keep] / norms[keep, None]
            centers.extend((normals, -normals))
            offsets.extend((np.zeros(len(normals)), np.zeros(len(normals))))
        solvable = ~degenerate & (np.abs(det) > _ENCLOSE_EPS)
        if solvable.any():
            sols = np.linalg.solve(trio[solvable], np.ones((int(solvable.sum()), 3, 1)))[..., 0]
            sol_norms = _row_norms(sols)
            axes = sols / sol_norms[:, None]
            heights = np.minimum(1.0, 1.0 / sol_norms)
            centers.extend((axes, -axes))
            offsets.extend((heights, -heights))

    return np.concatenate(centers), np.concatenate(offsets)


def oracle_spherical_sec(points) -> tuple[PlaneCircle, bool]:
    """Smallest enclosing spherical circle by full candidate enumeration.

    Returns the winning circle and whether the cloud is contained in a
    hemisphere (positive plane offset, i.e. radius below pi/2).
    """
    pts = _as_points(points, 3)
    n = len(pts)
    if not 2 <= n <= 60:
        raise ValueError(f"oracle handles 2..60 points, got {n}")
    centers, offsets = _spherical_candidates(pts)
    enclosing = (centers @ pts.T).min(axis=1) >= offsets - _ENCLOSE_EPS
    if not enclosing.any():
        raise OracleSelfCheckError("candidate enumeration produced no enclosing circle")
    centers = centers[enclosing]
    offsets = offsets[enclosing]
    order = np.lexsort((centers[:, 2], centers[:, 1], centers[:, 0], offsets))
    best = order[-1]  # maximal offset, then lexicographically largest center
    u = centers[best]
    return PlaneCircle((float(u[0]), float(u[1]), float(u[2])), float(offsets[best])), bool(
        offsets[best] > 0.0
    )


def oracle_hemisphere_feasible(points) -> bool:
    """Whether some open hemisphere contains every point.

    Decides by exhaustive check of candidate hemisphere poles (the points
    themselves, normalized pairwise sums, and support-triple plane
    solutions) and cross-checks against the smallest-circle criterion;
    disagreement raises OracleSelfCheckError.
    """
    pts = _as_points(points, 3)
    n = len(pts)
    if not 1 <= n <= 60:
        raise ValueError(f"oracle handles 1..60 points, got {n}")
    if n == 1:
        return True

    poles = [pts]
    ii, jj = np.triu_indices(n, 1)
    sums = pts[ii] + pts[jj]
    sum_norms = _row_norms(sums)
    regular = sum_norms > _DEGENERATE_EPS
    if regular.any():
        poles.append(sums[regular] / sum_norms[regular, None])
    if n >= 3:
        trio = pts[_triples(n)]
        det = np.linalg.det(trio)
        solvable = np.abs(det) > _ENCLOSE_EPS
        if solvable.any():
            sols = np.linalg.solve(trio[solvable], np.ones((int(solvable.sum()), 3, 1)))[..., 0]
            poles.append(sols / _row_norms(sols)[:, None])
    by_poles = bool(((np.concatenate(poles) @ pts.T) > 0.0).all(axis=1).any())

    _, by_circle = oracle_spherical_sec(pts)
    if by_poles != by_circle:
        raise OracleSelfCheckError(
            f"hemisphere feasibility mismatch: pole search {by_poles}, smallest circle {by_circle}"
        )
    return by_poles


def _best_enclosing(pts: np.ndarray, centers: np.ndarray, radii: np.ndarray):
    """Smallest candidate enclosing all points; ties break on the center."""
    gaps = np.empty(len(centers))
    for start in range(0, len(centers), 4096):
        chunk = centers[start : start + 4096]
        diff = pts[None, :, :] - chunk[:, None, :]
        gaps[start : start + 4096] = np.sqrt((diff * diff).sum(axis=2)).max(axis=1)
    enclosing = gaps <= radii + _ENCLOSE_EPS * (1.0 + radii)
    if not enclosing.any():
        return None
    centers = centers[enclosing]
    radii = radii[enclosing]
    keys = (centers.T)[::-1]  # np.lexsort treats the last key as primary
    order = np.lexsort((*keys, radii))
    best = order[0]
    return centers[best], float(radii[best])


def oracle_ball3d(points) -> EuclideanBall:
    """Smallest enclosing 3D ball by enumeration of all support subsets."""
    pts = _as_points(points, 3)
    n = len(pts)
    if not 1 <= n <= 40:
        raise ValueError(f"oracle handles 1..40 points, got {n}")
    if n == 1:
        return EuclideanBall(tuple(pts[0]), 0.0)

    centers: list[np.ndarray] = []
    radii: list[np.ndarray] = []

    ii, jj = np.triu_indices(n, 1)
    mid = 0.5 * (pts[ii] + pts[jj])
    centers.append(mid)
    radii.append(np.maximum(_row_norms(pts[ii] - mid), _row_norms(pts[jj] - mid)))

    if n >= 3:
        combos = _triples(n)
        a, b, c = pts[combos[:, 0]], pts[combos[:, 1]], pts[combos[:, 2]]
        normals = np.cross(b - a, c - a)
        keep = _row_norms(normals) > _ENCLOSE_EPS
        if keep.any():
            a, b, c, normals = a[keep], b[keep], c[keep], normals[keep]
            rows = np.stack([2.0 * (b - a), 2.0 * (c - a), normals], axis=1)
            rhs = np.stack(
                [
                    (b * b).sum(1) - (a * a).sum(1),
                    (c * c).sum(1) - (a * a).sum(1),
                    (normals * a).sum(1),
                ],
                axis=1,
            )
            sol = np.linalg.solve(rows, rhs[..., None])[..., 0]
            centers.append(sol)
            radii.append(
                np.maximum.reduce(
                    [_row_norms(a - sol), _row_norms(b - sol), _row_norms(c - sol)]
                )
            )

    if n >= 4:
        quads = np.array(list(combinations(range(n), 4)), dtype=int)
        base = pts[quads[:, 0]]
        others = pts[quads[:, 1:]]  # (m, 3, 3)
        rows = 2.0 * (others - base[:, None, :])
        keep = np.abs(np.linalg.det(rows)) > _ENCLOSE_EPS
        if keep.any():
            rows = rows[keep]
            base_k = base[keep]
            others_k = others[keep]
            rhs = (others_k * others_k).sum(2) - (base_k * base_k).sum(1)[:, None]
            sol = np.linalg.solve(rows, rhs[..., None])[..., 0]
            centers.append(sol)
            radii.append(
                np.maximum(
                    _row_norms(base_k - sol),
                    np.sqrt(((others_k - sol[:, None, :]) ** 2).sum(2)).max(axis=1),
                )
            )

    best = _best_enclosing(pts, np.concatenate(centers), np.concatenate(radii))
    if best is None:
        raise OracleSelfCheckError("candidate enumeration produced no enclosing ball")
    center, radius = best
    return EuclideanBall((float(center[0]), float(center[1]), float(center[2])), radius)


def oracle_planar_sec(points) -> PlanarCircle:
    """Smallest enclosing planar circle by enumeration of pairs and triples."""
    pts = _as_points(points, 2)
    n = len(pts)
    if not 1 <= n <= 60:
        raise ValueError(f"oracle handles 1..60 points, got {n}")
    if n == 1:
        return PlanarCircle(tuple(pts[0]), 0.0)

    centers: list[np.ndarray] = []
    radii: list[np.ndarray] = []

    ii, jj = np.triu_indices(n, 1)
    mid = 0.5 * (pts[ii] + pts[jj])
    centers.append(mid)
    radii.append(np.maximum(_row_norms(pts[ii] - mid), _row_norms(pts[jj] - mid)))

    if n >= 3:
        combos = _triples(n)
        a, b, c = pts[combos[:, 0]], pts[combos[:, 1]], pts[combos[:, 2]]
        rows = np.stack([2.0 * (b - a), 2.0 * (c - a)], axis=1)
        keep = np.abs(np.linalg.det(rows)) > _ENCLOSE_EPS
        if keep.any():
            a, b, c, rows = a[keep], b[keep], c[keep], rows[keep]
            rhs = np.stack(
                [(b * b).sum(1) - (a * a).sum(1), (c * c).sum(1) - (a * a).sum(1)], axis=1
            )
            sol = np.linalg.solve(rows, rhs[..., None])[..., 0]
            centers.append(sol)
            radii.append(
                np.maximum.reduce(
                    [_row_norms(a - sol), _row_norms(b - sol), _row_norms(c - sol)]
                )
            )

    best = _best_enclosing(pts, np.concatenate(centers), np.concatenate(radii))
    if best is None:
        raise OracleSelfCheckError("candidate enumeration produced no enclosing circle")
    center, radius = best
    return PlanarCircle((float(center[0]), float(center[1])), radius)
