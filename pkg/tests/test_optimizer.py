# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Parameter sets and the Adam update."""

import numpy as np
import pytest

from GraphILBO.errors import ConfigError, NonFiniteError, ShapeError
from GraphILBO.optimizer import AdamState, ParamSet, adam_step


def test_zero_gradient_fixpoint():
    params = ParamSet({'w': [1.0, -2.0], 'b': [[0.5]]})
    state = AdamState.initial(params)
    updated, state = adam_step(params, params.zeros_like(), state)
    assert updated.equals(params)
    assert state.t == 1


def test_first_step_has_magnitude_lr():
    params = ParamSet({'w': [3.0]})
    state = AdamState.initial(params, lr=0.01)
    updated, _ = adam_step(params, {'w': np.array([1.0])}, state)
    assert updated['w'][0] == pytest.approx(3.0 - 0.01, abs=1e-9)


def test_matches_hand_rolled_recursion():
    rng = np.random.default_rng(0)
    grads = rng.standard_normal((5, 3))
    params = ParamSet({'w': np.zeros(3)})
    state = AdamState.initial(params, lr=0.1, beta1=0.8, beta2=0.9, eps=1e-6)
    w, m, v = np.zeros(3), np.zeros(3), np.zeros(3)
    for t, g in enumerate(grads, start=1):
        params, state = adam_step(params, {'w': g}, state)
        m = 0.8 * m + 0.2 * g
        v = 0.9 * v + 0.1 * g * g
        w = w - 0.1 * (m / (1 - 0.8 ** t)) / (np.sqrt(v / (1 - 0.9 ** t)) +
                                              1e-6)
    np.testing.assert_allclose(params['w'], w, rtol=0, atol=1e-14)
    assert state.t == 5


@pytest.mark.parametrize('gradient', [1e-9, 0.3, -2.0, 1e3])
def test_step_bounded_by_lr_under_constant_gradient(gradient):
    params = ParamSet({'w': np.zeros(3)})
    state = AdamState.initial(params, lr=0.01)
    grads = {'w': np.full(3, gradient)}
    for _ in range(200):
        updated, state = adam_step(params, grads, state)
        step = np.abs(updated['w'] - params['w'])
        assert np.all(step <= 0.01 * (1 + 1e-12)), state.t
        params = updated


def test_pure_update():
    params = ParamSet({'w': [1.0]})
    state = AdamState.initial(params)
    updated, new_state = adam_step(params, {'w': np.array([2.0])}, state)
    assert params['w'][0] == 1.0 and state.t == 0
    assert not state.m['w'].any()
    assert updated.version == params.version + 1
    assert new_state is not state


def test_identical_runs_identical_trajectories():
    def run():
        params = ParamSet({'w': np.linspace(-1, 1, 4)})
        state = AdamState.initial(params)
        for step in range(20):
            params, state = adam_step(params, {'w': np.sin(params['w'] +
                                                           step)}, state)
        return params
    assert run().equals(run())


def test_refuses_non_finite_gradient():
    params = ParamSet({'w': [1.0, 2.0]})
    state = AdamState.initial(params)
    with pytest.raises(NonFiniteError, match='refused'):
        adam_step(params, {'w': np.array([np.nan, 0.0])}, state)


def test_gradient_shape():
    params = ParamSet({'w': [1.0, 2.0]})
    with pytest.raises(ShapeError):
        adam_step(params, {'w': np.ones(3)}, AdamState.initial(params))
    with pytest.raises(ShapeError):
        adam_step(params, {}, AdamState.initial(params))


def test_learning_rate_must_be_positive():
    params = ParamSet({'w': [1.0]})
    with pytest.raises(ConfigError):
        adam_step(params, {'w': np.ones(1)},
                  AdamState.initial(params, lr=0.0))


def test_param_set_mapping():
    params = ParamSet({'a': [1.0], 'b': [[2.0, 3.0]]}, version=4)
    assert list(params) == ['a', 'b'] and len(params) == 2
    assert 'a' in params and 'c' not in params
    assert params.copy().version == 4
    assert params.copy().equals(params)
    assert params['b'].dtype == np.float64
    assert repr(params) == "ParamSet(a=(1,), b=(1, 2), version=4)"
