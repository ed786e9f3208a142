"""Deterministic sampling, small dense linear algebra, and online statistics.

Everything here is 64-bit and bit-reproducible: random draws come from
counter-based Philox streams keyed by (seed, stream id), so independent
workers can sample without sharing generator state.
"""

from __future__ import annotations

import numpy as np

# Floor applied to any standard deviation used as a divisor. Prevents
# division by zero on constant reward sets and constant observation
# dimensions.
EPS_STD = 1e-8


class RngStream:
    """A named, reproducible random stream.

    Identical ``(seed, stream_id)`` pairs always yield identical sample
    sequences; distinct stream ids are statistically independent. Streams
    are cheap to construct, so derive a fresh one per task instead of
    sharing a generator across execution contexts.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._gen = np.random.Generator(
            np.random.Philox(key=np.array([self.seed, self.stream_id], dtype=np.uint64))
        )

    def spawn(self, stream_id: int) -> "RngStream":
        """Fresh stream under the same seed."""
        return RngStream(self.seed, stream_id)

    def normal(self, shape=None) -> np.ndarray:
        return self._gen.standard_normal(shape)

    def uniform(self, low: float = 0.0, high: float = 1.0, shape=None):
        return self._gen.uniform(low, high, shape)

    def integers(self, low: int, high: int):
        """One integer in [low, high)."""
        return int(self._gen.integers(low, high))

    def random(self) -> float:
        return float(self._gen.random())


def gaussian_matrix(rng: RngStream, rows: int, cols: int) -> np.ndarray:
    """Standard-normal matrix drawn from ``rng``, row-major float64."""
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be >= 1, got {rows}x{cols}")
    return rng.normal((rows, cols))


def matvec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product with explicit dimension checking."""
    m = np.asarray(m, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if m.ndim != 2 or v.ndim != 1:
        raise ValueError(f"expected 2-D matrix and 1-D vector, got {m.ndim}-D and {v.ndim}-D")
    if m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {m.shape[0]}x{m.shape[1]} times length-{v.shape[0]}")
    return m @ v


def std_of(values) -> float:
    """Population standard deviation, floored at EPS_STD.

    The floor keeps downstream divisions finite when every value is equal
    (for example all rollout rewards identical).
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise ValueError("std_of requires at least one value")
    return max(float(np.std(values)), EPS_STD)


class RunningStats:
    """Per-dimension online mean/variance (Welford's algorithm).

    Uses the population convention (divide by count). The first update
    fixes the dimension; partial accumulators from parallel rollouts can
    be folded back in with :meth:`merge` in a deterministic order.
    """

    def __init__(self, dim: int | None = None):
        self.count = 0
        if dim is None:
            self.mean = None
            self.m2 = None
        else:
            self.mean = np.zeros(dim)
            self.m2 = np.zeros(dim)

    @property
    def dim(self) -> int | None:
        return None if self.mean is None else self.mean.shape[0]

    def update(self, x) -> None:
        """Absorb one observation vector."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 1:
            raise ValueError("observations must be 1-D vectors")
        if self.mean is None:
            self.mean = np.zeros(x.shape[0])
            self.m2 = np.zeros(x.shape[0])
        elif x.shape[0] != self.mean.shape[0]:
            raise ValueError(
                f"dimension mismatch: stats track {self.mean.shape[0]}, got {x.shape[0]}"
            )
        self.count += 1
        delta = x - self.mean
        self.mean = self.mean + delta / self.count
        self.m2 = self.m2 + delta * (x - self.mean)

    def merge(self, other: "RunningStats") -> None:
        """Fold another accumulator into this one (Chan et al. pairwise combine)."""
        if other.count == 0:
            return
        if self.count == 0:
            self.count = other.count
            self.mean = other.mean.copy()
            self.m2 = other.m2.copy()
            return
        if other.dim != self.dim:
            raise ValueError("cannot merge stats of different dimension")
        total = self.count + other.count
        delta = other.mean - self.mean
        self.mean = self.mean + delta * (other.count / total)
        self.m2 = self.m2 + other.m2 + delta * delta * (self.count * other.count / total)
        self.count = total

    def variance(self) -> np.ndarray:
        """Population variance per dimension (zeros until the first update)."""
        if self.count == 0:
            return np.zeros(0 if self.mean is None else self.mean.shape[0])
        return self.m2 / self.count

    def std(self) -> np.ndarray:
        return np.sqrt(self.variance())

    def normalize(self, x) -> np.ndarray:
        """Standardize ``x`` against the absorbed history.

        Identity until two observations have been seen (the variance is
        undefined before that); degenerate dimensions divide by EPS_STD.
        """
        x = np.asarray(x, dtype=np.float64)
        if self.count < 2:
            return x.copy()
        return (x - self.mean) / np.maximum(self.std(), EPS_STD)

    def copy(self) -> "RunningStats":
        out = RunningStats()
        out.count = self.count
        out.mean = None if self.mean is None else self.mean.copy()
        out.m2 = None if self.m2 is None else self.m2.copy()
        return out

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "mean": [] if self.mean is None else self.mean.tolist(),
            "m2": [] if self.m2 is None else self.m2.tolist(),
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "RunningStats":
        out = cls()
        out.count = int(payload["count"])
        mean = np.asarray(payload["mean"], dtype=np.float64)
        m2 = np.asarray(payload["m2"], dtype=np.float64)
        if mean.size or out.count:
            out.mean = mean
            out.m2 = m2
        return out
