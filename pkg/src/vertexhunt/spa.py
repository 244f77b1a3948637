"""The orthodox successive projection algorithm.

Greedy vertex hunting: pick the point of largest Euclidean norm, project
every point onto the orthogonal complement of the picked residual, repeat
K times. The returned vertices are the original (unprojected) points at the
selected indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRankError, InsufficientPointsError
from .geometry import PointSet, as_pointset

__all__ = ["SpaTrace", "spa", "RESIDUAL_FLOOR"]

# Residual norms below this are treated as exact rank collapse.
RESIDUAL_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class SpaTrace:
    """Pick-by-pick record of an SPA run.

    ``selected_indices`` are row indices into the input, in pick order;
    ``residual_norms`` the residual norm of each picked point at pick time.
    ``degenerate_at`` is the 1-based pick at which the residual space
    collapsed, or None for a clean run.
    """

    selected_indices: tuple[int, ...]
    residual_norms: tuple[float, ...]
    degenerate_at: int | None = None


def spa(x: PointSet | np.ndarray, k: int) -> tuple[np.ndarray, SpaTrace]:
    """Run the successive projection algorithm for k picks.

    Parameters
    ----------
    x : PointSet or (n, d) array
        Input points, one per row.
    k : int
        Number of vertices to hunt.

    Returns
    -------
    vertices : (d, k) array
        Original input points at the selected indices, one per column.
    trace : SpaTrace

    Raises
    ------
    InsufficientPointsError
        If n < k.
    DegenerateRankError
        If the residual space collapses and the greedy pick would repeat an
        already selected index, so k distinct vertices cannot be produced.
    """
    ps = as_pointset(x)
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if ps.n < k:
        raise InsufficientPointsError(f"need at least {k} points, got {ps.n}")
    y = ps.points.copy()
    u: np.ndarray | None = None
    selected: list[int] = []
    norms: list[float] = []
    degenerate_at: int | None = None
    for step in range(1, k + 1):
        if u is not None:
            y -= np.outer(y @ u, u)
        r = np.linalg.norm(y, axis=1)
        if float(r.max()) < RESIDUAL_FLOOR:
            # All residuals are numerically zero, hence argmax-tied; the
            # smallest-index tie rule picks index 0. A repeat of an already
            # selected index is the fatal case: no k distinct picks exist.
            if 0 in selected:
                raise DegenerateRankError(
                    f"residual space collapsed at pick {step} of {k}",
                    degenerate_at=step,
                )
            if degenerate_at is None:
                degenerate_at = step
            selected.append(0)
            norms.append(0.0)
            u = None  # nothing to project against
            continue
        i = int(np.argmax(r))  # ties break toward the smallest index
        u = y[i] / r[i]
        selected.append(i)
        norms.append(float(r[i]))
    vertices = ps.points[selected].T.copy()
    trace = SpaTrace(
        selected_indices=tuple(selected),
        residual_norms=tuple(norms),
        degenerate_at=degenerate_at,
    )
    return vertices, trace
