"""The three naive benchmark policies: random, periodic inching, stand-still.

All three ignore observations. The periodic cycle and the stationary
step-forward prefix are not published anywhere, so the exact sequences
below are this project's documented stand-ins; benchmarks only rely on
their qualitative behavior (inching forward, then idling).
"""

from __future__ import annotations

import numpy as np

from ..numerics import RngStream
from .core import SpaceSpec


class RandomPolicy:
    """Uniform i.i.d. sample from the action box at every query.

    The stream runs on across episodes; two policies built with the same
    seed produce identical action sequences.
    """

    def __init__(self, action_space: SpaceSpec, seed: int, stream_id: int = 0):
        self._space = action_space
        self._rng = RngStream(seed, stream_id)

    def reset(self) -> None:
        pass

    def __call__(self, observation) -> np.ndarray:
        return self._rng.uniform(self._space.low, self._space.high, self._space.dimension)


# One inching cycle: swing leg 1 (hip forward / knee tuck, then reverse),
# then the same mirrored onto leg 2. Action layout: (hip1, knee1, hip2, knee2).
PERIODIC_CYCLE = np.array(
    [(+1.0, -1.0, 0.0, 0.0)] * 10
    + [(-1.0, +1.0, 0.0, 0.0)] * 10
    + [(0.0, 0.0, +1.0, -1.0)] * 10
    + [(0.0, 0.0, -1.0, +1.0)] * 10
)

STATIONARY_PREFIX = np.array([(0.5, -0.5, 0.0, 0.0)] * 15)


class PeriodicPolicy:
    """Repeats the fixed 40-step inching cycle regardless of state."""

    cycle_length = len(PERIODIC_CYCLE)

    def __init__(self):
        self._t = 0

    def reset(self) -> None:
        self._t = 0

    def __call__(self, observation) -> np.ndarray:
        action = PERIODIC_CYCLE[self._t % self.cycle_length]
        self._t += 1
        return action.copy()


class StationaryPolicy:
    """One step forward (15-step prefix), then zero torque forever."""

    prefix_length = len(STATIONARY_PREFIX)

    def __init__(self):
        self._t = 0

    def reset(self) -> None:
        self._t = 0

    def __call__(self, observation) -> np.ndarray:
        if self._t < self.prefix_length:
            action = STATIONARY_PREFIX[self._t].copy()
        else:
            action = np.zeros(4)
        self._t += 1
        return action


class ZeroPolicy:
    """Zero torque at every step; diagnostic baseline."""

    def __init__(self, dimension: int = 4):
        self._dimension = dimension

    def reset(self) -> None:
        pass

    def __call__(self, observation) -> np.ndarray:
        return np.zeros(self._dimension)
