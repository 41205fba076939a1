"""Front-quality measures against a sampled reference front.

Distances are Euclidean nearest-neighbor distances in objective space from
each estimated point to the reference sample (not perpendicular distances to
the underlying curve). The absolute error is the sum of squared distances;
the generalized distance divides the root of that sum by the number of
estimated points, so it is exactly sqrt(error) / N for the same input pair.
No objective normalization is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

FRONT_SOURCES = ("analytic", "archive")


@dataclass(frozen=True)
class FrontSample:
    """A set of objective-space points with their provenance."""

    points: np.ndarray
    source: str = "archive"

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        object.__setattr__(self, "points", pts)
        if pts.shape[0] < 1:
            raise ValueError("a front sample needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise ValueError("front sample contains non-finite points")
        if self.source not in FRONT_SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    def __len__(self):
        return self.points.shape[0]


class FrontIndex:
    """Nearest-neighbor index over a fixed reference front."""

    def __init__(self, points: np.ndarray):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        self.m = points.shape[1]
        self._tree = cKDTree(points)

    def distances(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] != self.m:
            raise ValueError(
                f"objective dimension mismatch: {points.shape[1]} vs {self.m}"
            )
        return self._tree.query(points)[0]


def point_to_front_distance(q: np.ndarray, front: FrontSample) -> float:
    """Distance from one objective vector to the nearest point of the sample."""
    return float(FrontIndex(front.points).distances(np.asarray(q, dtype=float))[0])


def front_error(estimated: FrontSample, truth: FrontSample) -> float:
    """Sum of squared nearest-neighbor distances from estimate to truth sample."""
    d = FrontIndex(truth.points).distances(estimated.points)
    return float(np.sum(d * d))


def generalized_distance(estimated: FrontSample, truth: FrontSample) -> float:
    """Root of the summed squared distances, divided by the estimate size."""
    return math.sqrt(front_error(estimated, truth)) / len(estimated)
