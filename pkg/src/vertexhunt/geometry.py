"""Simplex geometry: point sets, vertex matrices, volume, point-to-simplex
distance, and permutation matching of estimated against true vertices.

Conventions: a point set is an n x d array with one point per row, while a
simplex stores its vertices as the columns of a d x K matrix.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

__all__ = [
    "PointSet",
    "Simplex",
    "WeightVector",
    "VertexMatch",
    "simplex_volume",
    "dist_to_simplex",
    "match_vertices",
]

# Exhaustive permutation search is used up to this K; K! grows too fast after.
_EXHAUSTIVE_MATCH_LIMIT = 8


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class PointSet:
    """An ordered collection of n points in R^d (rows of ``points``)."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError(f"points must be 2-d (n x d), got shape {pts.shape}")
        n, d = pts.shape
        if n < 1 or d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite (no NaN/Inf)")
        object.__setattr__(self, "points", _readonly(pts))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]


def as_pointset(x) -> PointSet:
    """Coerce an array-like (or pass through a PointSet) to a PointSet."""
    return x if isinstance(x, PointSet) else PointSet(np.asarray(x, dtype=float))


@dataclass(frozen=True, eq=False)
class Simplex:
    """A K-vertex simplex, vertices as columns of a d x K matrix.

    The center, centered vertex matrix and both singular value lists are
    computed once at construction and cached; all diagnostics reuse them so
    that repeated reports stay consistent bit for bit.
    """

    vertices: np.ndarray
    center: np.ndarray = field(init=False)
    centered: np.ndarray = field(init=False)
    singular_values_v: np.ndarray = field(init=False)
    singular_values_vt: np.ndarray = field(init=False)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2:
            raise ValueError(f"vertices must be 2-d (d x K), got shape {v.shape}")
        d, k = v.shape
        if k < 2:
            raise ValueError(f"need K >= 2 vertices, got K = {k}")
        if d < k - 1:
            raise ValueError(f"a {k}-vertex simplex needs d >= K - 1, got d = {d}")
        if not np.all(np.isfinite(v)):
            raise ValueError("vertices must be finite (no NaN/Inf)")
        center = v.mean(axis=1)
        centered = v - center[:, None]
        sv = np.linalg.svd(v, compute_uv=False)
        if sv.size < k:  # d = K - 1: the K-th singular value is identically 0
            sv = np.concatenate([sv, np.zeros(k - sv.size)])
        svt = np.linalg.svd(centered, compute_uv=False)[: k - 1]
        object.__setattr__(self, "vertices", _readonly(v))
        object.__setattr__(self, "center", _readonly(center))
        object.__setattr__(self, "centered", _readonly(centered))
        object.__setattr__(self, "singular_values_v", _readonly(sv))
        object.__setattr__(self, "singular_values_vt", _readonly(svt))

    @property
    def d(self) -> int:
        return self.vertices.shape[0]

    @property
    def k(self) -> int:
        return self.vertices.shape[1]


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Barycentric weights: nonnegative entries with unit sum."""

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("weights must be a nonempty 1-d vector")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        if abs(float(w.sum()) - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to one, got {w.sum()!r}")
        object.__setattr__(self, "w", _readonly(w))

    @property
    def k(self) -> int:
        return self.w.shape[0]


@dataclass(frozen=True, eq=False)
class VertexMatch:
    """Best pairing of estimated and true vertices under the max-error metric.

    ``permutation[k]`` is the estimated column paired with true column k, and
    ``per_vertex_errors[k]`` the corresponding distance.
    """

    permutation: tuple[int, ...]
    max_error: float
    per_vertex_errors: np.ndarray


def simplex_volume(s: Simplex) -> float:
    """Volume of a simplex from the singular values of its centered vertices.

    Equals sqrt(K)/(K-1)! times the product of the top K-1 singular values
    of the centered vertex matrix; 0 for flat (degenerate) simplices.
    """
    k = s.k
    prod = float(np.prod(s.singular_values_vt))
    return math.sqrt(k) / math.factorial(k - 1) * prod


def _face_minimizer(v: np.ndarray, x: np.ndarray, free: np.ndarray) -> np.ndarray:
    """Least-squares weights over the affine hull of the free vertices.

    Anchors the first free weight via w_a = 1 - sum(others) so the sum
    constraint is eliminated; active coordinates are pinned at zero.
    """
    k = v.shape[1]
    idx = np.flatnonzero(free)
    w = np.zeros(k)
    if idx.size == 1:
        w[idx[0]] = 1.0
        return w
    a = idx[0]
    basis = v[:, idx[1:]] - v[:, [a]]
    u, *_ = np.linalg.lstsq(basis, x - v[:, a], rcond=None)
    w[idx[1:]] = u
    w[a] = 1.0 - float(u.sum())
    return w


def dist_to_simplex(x, s: Simplex, tol: float = 1e-10) -> float:
    """Euclidean distance from point x to the simplex (0 inside the hull).

    Minimizes ||V w - x|| over weight vectors with a primal active-set
    method on the nonnegativity bounds; the sum-to-one constraint is
    eliminated by substitution. Terminates exactly on the small K used
    here; the iteration cap 10 K^2 is a safety net only.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != s.d:
        raise ValueError(f"point has dimension {x.shape[0]}, simplex has d = {s.d}")
    v = s.vertices
    k = s.k
    w = np.full(k, 1.0 / k)
    active = np.zeros(k, dtype=bool)
    for _ in range(10 * k * k):
        free = ~active
        cand = _face_minimizer(v, x, free)
        if np.all(cand[free] >= -tol):
            w = np.clip(cand, 0.0, None)
            w /= w.sum()
            grad = v.T @ (v @ w - x)
            if not active.any():
                break
            mu = float(grad[free].mean())
            lam = grad - mu
            lam_active = np.where(active, lam, np.inf)
            j = int(np.argmin(lam_active))
            if lam_active[j] >= -tol:
                break
            active[j] = False
        else:
            # Step toward the face minimizer until a free weight hits zero;
            # only coordinates headed below zero can block.
            blocking = free & (cand < 0.0)
            ratios = np.full(k, np.inf)
            ratios[blocking] = w[blocking] / (w[blocking] - cand[blocking])
            j = int(np.argmin(ratios))
            alpha = min(1.0, float(ratios[j]))
            w = w + alpha * (cand - w)
            w[j] = 0.0
            w = np.clip(w, 0.0, None)
            active[j] = True
    return float(np.linalg.norm(v @ w - x))


def _vertex_columns(obj) -> np.ndarray:
    if isinstance(obj, Simplex):
        return obj.vertices
    arr = np.asarray(obj, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"expected a d x K vertex matrix, got shape {arr.shape}")
    return arr


def _bottleneck_permutation(dist: np.ndarray) -> tuple[int, ...]:
    """Assignment minimizing the largest matched distance (K > 8 path).

    Binary search over the distinct edge lengths; feasibility of each
    threshold is a bipartite perfect-matching question.
    """
    k = dist.shape[0]
    levels = np.unique(dist)
    lo, hi = 0, levels.size - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        adj = csr_matrix(dist <= levels[mid])
        match = maximum_bipartite_matching(adj, perm_type="row")
        if np.all(match >= 0):
            best = match
            hi = mid - 1
        else:
            lo = mid + 1
    # match[col] = estimated row assigned to true column col
    return tuple(int(i) for i in best)


def match_vertices(v_hat, v_true) -> VertexMatch:
    """Pair estimated with true vertices to minimize the worst per-vertex error.

    Exhaustive over all K! permutations for K <= 8; bottleneck assignment
    (threshold search plus bipartite matching) beyond that. Accepts Simplex
    objects or plain d x K matrices.
    """
    a = _vertex_columns(v_hat)
    b = _vertex_columns(v_true)
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"vertex counts differ: {a.shape[1]} vs {b.shape[1]}")
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"ambient dimensions differ: {a.shape[0]} vs {b.shape[0]}")
    k = a.shape[1]
    diff = a[:, :, None] - b[:, None, :]
    dist = np.linalg.norm(diff, axis=0)  # dist[j, k] = ||a_j - b_k||
    if k <= _EXHAUSTIVE_MATCH_LIMIT:
        cols = np.arange(k)
        best_perm = None
        best_err = np.inf
        for perm in itertools.permutations(range(k)):
            err = float(dist[perm, cols].max())
            if err < best_err:
                best_err = err
                best_perm = perm
    else:
        best_perm = _bottleneck_permutation(dist)
    errs = dist[list(best_perm), np.arange(k)]
    return VertexMatch(
        permutation=tuple(best_perm),
        max_error=float(errs.max()),
        per_vertex_errors=_readonly(errs),
    )
