"""Validated dense vectors, the optimizer state triple, and the norms used
by the convergence audits."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AdamState",
    "point",
    "nonneg_point",
    "cw_square",
    "cw_div_sqrt_shift",
    "euclid_norm",
    "state_inf_norm",
    "triple_norm",
    "state_inf_dist",
    "triple_dist",
    "states_equal",
]


def point(coords) -> np.ndarray:
    """Return ``coords`` as a finite 1-d float64 vector."""
    arr = np.atleast_1d(np.asarray(coords, dtype=np.float64))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite coordinates")
    return arr


def nonneg_point(coords) -> np.ndarray:
    """Like :func:`point` but every coordinate must be >= 0."""
    arr = point(coords)
    if np.any(arr < 0.0):
        raise ValueError("negative coordinate in nonnegative vector")
    return arr


@dataclass(frozen=True)
class AdamState:
    """First moment, second moment and weights; equal dimension, v >= 0."""

    m: np.ndarray
    v: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "m", point(self.m))
        object.__setattr__(self, "v", nonneg_point(self.v))
        object.__setattr__(self, "w", point(self.w))
        if not (self.m.shape == self.v.shape == self.w.shape):
            raise ValueError("state components have mismatched dimensions")

    @property
    def dim(self) -> int:
        return self.w.size

    @staticmethod
    def initial(w) -> "AdamState":
        """State with zero moments at weights ``w``."""
        w = point(w)
        return AdamState(np.zeros_like(w), np.zeros_like(w), w)


def cw_square(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    return p * p


def cw_div_sqrt_shift(num: np.ndarray, den: np.ndarray, eps: float) -> np.ndarray:
    """Component-wise num / sqrt(den + eps); eps > 0 keeps it defined."""
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    return np.asarray(num, dtype=np.float64) / np.sqrt(np.asarray(den, dtype=np.float64) + eps)


def euclid_norm(p: np.ndarray) -> float:
    return float(np.linalg.norm(p))


def state_inf_norm(x: AdamState) -> float:
    """max of the Euclidean norms of the three state blocks."""
    return max(euclid_norm(x.m), euclid_norm(x.v), euclid_norm(x.w))


def triple_norm(x: AdamState, A: float) -> float:
    """max(|m|, |v|, A|w|); the weight A >= 1 rescales the w block."""
    if A < 1.0:
        raise ValueError("norm weight A must be >= 1")
    return max(euclid_norm(x.m), euclid_norm(x.v), A * euclid_norm(x.w))


def state_inf_dist(x: AdamState, y: AdamState) -> float:
    return max(
        euclid_norm(x.m - y.m),
        euclid_norm(x.v - y.v),
        euclid_norm(x.w - y.w),
    )


def triple_dist(x: AdamState, y: AdamState, A: float) -> float:
    if A < 1.0:
        raise ValueError("norm weight A must be >= 1")
    return max(
        euclid_norm(x.m - y.m),
        euclid_norm(x.v - y.v),
        A * euclid_norm(x.w - y.w),
    )


def states_equal(x: AdamState, y: AdamState) -> bool:
    return (
        np.array_equal(x.m, y.m)
        and np.array_equal(x.v, y.v)
        and np.array_equal(x.w, y.w)
    )
