"""Analytic toy environments with closed-form or brute-forceable optima.

The walker's returns are too noisy to serve as tight oracles, so trainer
tests run against these instead:

* line-walker: 1-D kinematic point, x' = x + 0.05*a, per-step reward
  (x' - x) - 0.001*sum(|a_i|), horizon 200. The constant policy a = +1 is
  optimal with return 200*(0.05 - 0.001) = 9.8.
* quadratic-regulator: stable 2-D linear system, scalar bounded actuation,
  reward -|s|^2, so improvement is monotone-checkable and a gain grid
  search gives a reference return.
"""

from __future__ import annotations

import numpy as np

from ..numerics import RngStream
from .core import Environment, SpaceSpec, StepOutcome, TerminationCause

LINE_WALKER_SPEED = 0.05
LINE_WALKER_ACTION_COST = 0.001
LINE_WALKER_HORIZON = 200


class LineWalkerEnv(Environment):
    """Kinematic point on a line; observation is (position, last velocity).

    ``action_dim`` > 1 keeps the scoring on every action coordinate but
    drives motion with coordinate 0 only. That variant exposes the walker's
    4-joint action interface so discrete-action trainers can run their full
    action codec against an enumerable problem.
    """

    def __init__(self, action_dim: int = 1):
        super().__init__()
        if action_dim < 1:
            raise ValueError("action_dim must be >= 1")
        self.horizon = LINE_WALKER_HORIZON
        self.observation_space = SpaceSpec(np.array([-np.inf, -np.inf]), np.array([np.inf, np.inf]))
        self.action_space = SpaceSpec(-np.ones(action_dim), np.ones(action_dim))
        self._x = 0.0
        self._v = 0.0
        self._steps = 0

    def _reset(self, seed: int) -> np.ndarray:
        self._x = 0.0
        self._v = 0.0
        self._steps = 0
        return np.array([self._x, self._v])

    def _step(self, action: np.ndarray) -> StepOutcome:
        dx = LINE_WALKER_SPEED * action[0]
        self._x += dx
        self._v = dx
        self._steps += 1
        reward = dx - LINE_WALKER_ACTION_COST * float(np.sum(np.abs(action)))
        done = self._steps >= self.horizon
        cause = TerminationCause.TIMEOUT if done else TerminationCause.RUNNING
        return StepOutcome(np.array([self._x, self._v]), reward, done, cause)


QUADREG_A = np.array([[0.95, 0.10], [0.00, 0.90]])
QUADREG_B = np.array([0.0, 0.5])
QUADREG_HORIZON = 50


class QuadraticRegulatorEnv(Environment):
    """Stable 2-D linear system s' = A s + B a with reward -|s'|^2.

    The initial state is uniform over [-1, 1]^2 per seed; a scalar action
    in [-1, 1] steers the decay. Degradation or improvement of a policy is
    directly visible in the (always non-positive) return.
    """

    def __init__(self):
        super().__init__()
        self.horizon = QUADREG_HORIZON
        self.observation_space = SpaceSpec(
            np.array([-np.inf, -np.inf]), np.array([np.inf, np.inf])
        )
        self.action_space = SpaceSpec(np.array([-1.0]), np.array([1.0]))
        self._s = np.zeros(2)
        self._steps = 0

    def _reset(self, seed: int) -> np.ndarray:
        rng = RngStream(seed, stream_id=17)
        self._s = rng.uniform(-1.0, 1.0, 2)
        self._steps = 0
        return self._s.copy()

    def _step(self, action: np.ndarray) -> StepOutcome:
        self._s = QUADREG_A @ self._s + QUADREG_B * action[0]
        self._steps += 1
        reward = -float(self._s @ self._s)
        done = self._steps >= self.horizon
        cause = TerminationCause.TIMEOUT if done else TerminationCause.RUNNING
        return StepOutcome(self._s.copy(), reward, done, cause)
