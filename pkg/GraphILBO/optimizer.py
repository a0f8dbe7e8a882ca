# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent trainable parameters and the Adam optimizer.

What's here:

Named parameter arrays.
-----------------------

Classes:
  - ParamSet

Adam updates.
-------------

Classes:
  - AdamState

Functions:
  - adam_step
"""

from dataclasses import dataclass, field
from logging import getLogger

import numpy as np

from GraphILBO.errors import ConfigError, NonFiniteError, ShapeError

logger = getLogger(__name__)  # pylint: disable=invalid-name


class ParamSet(object):
    """Ordered mapping of parameter name to float64 array.

    Every update produces a new ParamSet with `version` increased by one,
    so a cached forward pass can tell whether it is stale.

    Attributes:
      - arrays (dict): name -> np.ndarray.
      - version (int): update counter.
    """

    def __init__(self, arrays: dict, version: int = 0, copy: bool = True):
        self.arrays = {name: (np.array(value, dtype=np.float64) if copy
                              else value)
                       for name, value in arrays.items()}
        self.version = version

    def __getitem__(self, name: str) -> np.ndarray:
        return self.arrays[name]

    def __contains__(self, name: str) -> bool:
        return name in self.arrays

    def __iter__(self):
        return iter(self.arrays)

    def __len__(self):
        return len(self.arrays)

    def items(self):
        return self.arrays.items()

    def replace(self, arrays: dict):
        """Return a new set of the same kind with the next version."""
        return type(self)(arrays, version=self.version + 1)

    def copy(self):
        return type(self)(self.arrays, version=self.version)

    def zeros_like(self) -> dict:
        return {name: np.zeros_like(value) for name, value in self.items()}

    def equals(self, other) -> bool:
        """Bit-exact comparison of names, shapes and values."""
        return (list(self) == list(other) and
                all(np.array_equal(self[name], other[name])
                    for name in self))

    def __repr__(self):
        shapes = ', '.join(f'{name}={value.shape}'
                           for name, value in self.items())
        return f'{type(self).__name__}({shapes}, version={self.version})'


@dataclass
class AdamState(object):
    """Adam moment accumulators and hyperparameters.

    Attributes:
      - m (dict): first moments, shaped like the parameters.
      - v (dict): second moments, shaped like the parameters.
      - t (int): completed steps.
      - lr (float): learning rate.
      - beta1 (float): first-moment decay.
      - beta2 (float): second-moment decay.
      - eps (float): denominator offset.
    """

    m: dict = field(default_factory=dict)
    v: dict = field(default_factory=dict)
    t: int = 0
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def initial(cls, params: ParamSet, lr: float = 1e-3,
                beta1: float = 0.9, beta2: float = 0.999,
                eps: float = 1e-8):
        """Zero moments for every parameter."""
        return cls(params.zeros_like(), params.zeros_like(), 0,
                   lr, beta1, beta2, eps)


def adam_step(params: ParamSet, grads: dict, state: AdamState):
    """Apply one bias-corrected Adam update.

    Args:
        params (ParamSet): current parameters, left untouched.
        grads (dict): name -> gradient array.
        state (AdamState): current optimizer state, left untouched.

    Returns:
        params (ParamSet): updated parameters.
        state (AdamState): updated state.
    """
    if state.lr <= 0:
        raise ConfigError(f'Adam learning rate must be positive, '
                          f'got {state.lr}.')
    for name in params:
        if name not in grads or grads[name].shape != params[name].shape:
            raise ShapeError(f'Gradient for {name} is missing or has the '
                             'wrong shape.')
        if not np.all(np.isfinite(grads[name])):
            raise NonFiniteError(
                f'Non-finite gradient for {name}; Adam step refused.')
    t = state.t + 1
    bias1 = 1.0 - state.beta1 ** t
    bias2 = 1.0 - state.beta2 ** t
    updated, m_new, v_new = {}, {}, {}
    for name, value in params.items():
        g = grads[name]
        m_new[name] = state.beta1 * state.m[name] + (1.0 - state.beta1) * g
        v_new[name] = state.beta2 * state.v[name] + (1.0 - state.beta2) * g * g
        m_hat = m_new[name] / bias1
        v_hat = v_new[name] / bias2
        updated[name] = value - state.lr * m_hat / (np.sqrt(v_hat) + state.eps)
    return (params.replace(updated),
            AdamState(m_new, v_new, t, state.lr, state.beta1, state.beta2,
                      state.eps))
