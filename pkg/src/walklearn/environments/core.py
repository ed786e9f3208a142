"""Episode protocol shared by every environment: reset -> step* -> done.

Environments are single-owner and internally mutable; policies are plain
callables ``observation -> action`` that may optionally expose ``reset()``
for per-episode internal state (step counters and the like).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class ProtocolViolation(RuntimeError):
    """Raised when the reset/step/done contract is broken."""


class SimulationDiverged(RuntimeError):
    """Raised when a physics state stops being finite."""


class TerminationCause(enum.Enum):
    RUNNING = "running"
    FELL = "fell"
    FINISHED = "finished"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class SpaceSpec:
    """Box bounds for an observation or action vector."""

    low: np.ndarray
    high: np.ndarray

    def __post_init__(self):
        low = np.asarray(self.low, dtype=np.float64)
        high = np.asarray(self.high, dtype=np.float64)
        if low.shape != high.shape or low.ndim != 1:
            raise ValueError("bounds must be 1-D vectors of equal length")
        if np.any(low > high):
            raise ValueError("lower bounds must not exceed upper bounds")
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "high", high)

    @property
    def dimension(self) -> int:
        return self.low.shape[0]

    def clip(self, action) -> np.ndarray:
        return np.clip(np.asarray(action, dtype=np.float64), self.low, self.high)


@dataclass(frozen=True)
class StepOutcome:
    observation: np.ndarray
    reward: float
    done: bool
    cause: TerminationCause


@dataclass(frozen=True)
class RolloutResult:
    total_reward: float
    steps: int
    cause: TerminationCause
    seed: int


class Environment:
    """Base class enforcing the episode protocol.

    Subclasses implement ``_reset(seed)`` and ``_step(action)``; this class
    owns action validation (NaN rejection, clipping to the action box) and
    the step-after-done guard.
    """

    observation_space: SpaceSpec
    action_space: SpaceSpec

    def __init__(self):
        self._needs_reset = True
        self._done = False

    def reset(self, seed: int) -> np.ndarray:
        obs = self._reset(int(seed))
        self._needs_reset = False
        self._done = False
        return obs

    def step(self, action) -> StepOutcome:
        if self._needs_reset:
            raise ProtocolViolation("step() before reset()")
        if self._done:
            raise ProtocolViolation("step() after the episode ended")
        action = np.asarray(action, dtype=np.float64)
        if action.shape != (self.action_space.dimension,):
            raise ProtocolViolation(
                f"action dimension {action.shape} does not match {self.action_space.dimension}"
            )
        if not np.all(np.isfinite(action)):
            raise ProtocolViolation("action contains NaN or infinity")
        outcome = self._step(self.action_space.clip(action))
        self._done = outcome.done
        return outcome

    def _reset(self, seed: int) -> np.ndarray:
        raise NotImplementedError

    def _step(self, action: np.ndarray) -> StepOutcome:
        raise NotImplementedError


def run_episode(env: Environment, policy, seed: int, max_steps: int = 1600) -> RolloutResult:
    """Roll one full episode and sum its rewards.

    ``max_steps`` bounds the episode from outside the environment; hitting
    it reports a timeout. ``max_steps == 0`` is a legal empty episode.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    obs = env.reset(seed)
    if hasattr(policy, "reset"):
        policy.reset()
    total = 0.0
    steps = 0
    cause = TerminationCause.TIMEOUT
    while steps < max_steps:
        outcome = env.step(policy(obs))
        total += outcome.reward
        steps += 1
        obs = outcome.observation
        if outcome.done:
            cause = outcome.cause
            break
    return RolloutResult(total_reward=total, steps=steps, cause=cause, seed=int(seed))
