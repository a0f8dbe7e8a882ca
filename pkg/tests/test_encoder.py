# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Shared two-layer GCN: forward, backward and gradient check."""

import numpy as np
import pytest
import scipy.sparse as sp

from GraphILBO.config import TrainConfig
from GraphILBO.encoder import EncoderParams, backward, forward, grad_check, \
    init_params
from GraphILBO.errors import ShapeError, StaleTapeError
from GraphILBO.graph import Graph, adjacency_from_edges
from GraphILBO.sampler import ViewSample, full_view


def _random_view(n=5, f=3, seed=0):
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < 0.5]
    return full_view(Graph(rng.standard_normal((n, f)),
                           adjacency_from_edges(n, edges)))


def _straight_line(params, view):
    """Z = A act(A H W1 + b1) W2 + b2 written out with dense matrices."""
    a_hat = view.dropped_adjacency.toarray()
    pre = a_hat @ view.masked_features @ params['W1']
    if 'b1' in params:
        pre = pre + params['b1']
    if 'alpha' in params:
        hidden = np.where(pre > 0, pre, params['alpha'] * pre)
    else:
        hidden = np.maximum(pre, 0)
    z = a_hat @ hidden @ params['W2']
    if 'b2' in params:
        z = z + params['b2']
    return z


class TestInitParams:

    def test_glorot_bound(self):
        params = init_params(1, 1, 1, seed=4)
        assert abs(params.W1[0, 0]) <= np.sqrt(3)

    def test_deterministic(self):
        assert init_params(4, 6, 5, seed=9).equals(init_params(4, 6, 5,
                                                               seed=9))
        assert not init_params(4, 6, 5, seed=9).equals(init_params(4, 6, 5,
                                                                   seed=10))

    def test_default_widths(self):
        params = init_params(3)
        assert params.W1.shape == (3, 256)
        assert params.W2.shape == (256, 256)
        assert list(params) == ['W1', 'W2']

    def test_optional_parameters(self):
        params = init_params(3, 4, 2, activation='prelu', bias=True)
        assert list(params) == ['W1', 'W2', 'b1', 'b2', 'alpha']
        np.testing.assert_array_equal(params['alpha'], np.full(4, 0.25))
        assert params.activation == 'prelu' and params.bias


class TestForward:

    def test_zero_weights(self):
        view = _random_view()
        params = EncoderParams({'W1': np.zeros((3, 4)),
                                'W2': np.zeros((4, 2))})
        z, _ = forward(params, view)
        np.testing.assert_array_equal(np.asarray(z), np.zeros((5, 2)))

    def test_single_node_by_hand(self):
        view = ViewSample(np.array([[2.0]]), sp.csr_matrix([[1.0]]),
                          np.ones(1, dtype=np.int8), np.empty((0, 2)))
        params = EncoderParams({'W1': [[1.5]], 'W2': [[-3.0]]})
        z, _ = forward(params, view, 'single')
        np.testing.assert_array_equal(np.asarray(z), [[2.0 * 1.5 * -3.0]])
        assert z.view_tag == 'single'

    @pytest.mark.parametrize('activation, bias', [('relu', False),
                                                  ('prelu', True)])
    def test_matches_straight_line_formula(self, activation, bias):
        view = _random_view(seed=1)
        params = init_params(3, 6, 4, seed=2, activation=activation,
                             bias=bias)
        if bias:
            params = params.replace({**params.arrays,
                                     'b1': np.linspace(-1, 1, 6),
                                     'b2': np.linspace(0, 1, 4)})
        z, _ = forward(params, view)
        np.testing.assert_allclose(np.asarray(z),
                                   _straight_line(params, view),
                                   rtol=0, atol=1e-12)

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(5)
        n = 7
        features = rng.standard_normal((n, 3))
        edges = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (0, 6)]
        g = Graph(features, adjacency_from_edges(n, edges))
        order = rng.permutation(n)
        inverse = np.argsort(order)
        permuted = Graph(features[order], adjacency_from_edges(
            n, [(inverse[u], inverse[v]) for u, v in edges]))
        params = init_params(3, 5, 4, seed=3)
        z, _ = forward(params, full_view(g))
        z_perm, _ = forward(params, full_view(permuted))
        np.testing.assert_allclose(np.asarray(z_perm), np.asarray(z)[order],
                                   rtol=0, atol=1e-10)

    def test_feature_width_mismatch(self):
        with pytest.raises(ShapeError):
            forward(init_params(4, 3, 2), _random_view(f=3))


class TestBackward:

    def test_zero_upstream(self):
        params = init_params(3, 4, 2, seed=1, bias=True)
        z, tape = forward(params, _random_view())
        grads = backward(params, tape, np.zeros(z.shape))
        for name in params:
            np.testing.assert_array_equal(grads[name], 0.0)

    @pytest.mark.parametrize('activation, bias', [('relu', False),
                                                  ('relu', True),
                                                  ('prelu', True)])
    def test_matches_finite_differences(self, activation, bias):
        view = _random_view(n=6, seed=3)
        params = init_params(3, 5, 4, seed=6, activation=activation,
                             bias=bias)
        upstream = np.random.default_rng(7).standard_normal((6, 4))
        z, tape = forward(params, view)
        grads = backward(params, tape, upstream)
        step = 1e-6
        for name in params:
            numeric = np.zeros_like(params[name])
            for index in np.ndindex(numeric.shape):
                values = {key: value.copy() for key, value in params.items()}
                values[name][index] += step
                plus = np.sum(upstream * _straight_line(values, view))
                values[name][index] -= 2 * step
                minus = np.sum(upstream * _straight_line(values, view))
                numeric[index] = (plus - minus) / (2 * step)
            np.testing.assert_allclose(grads[name], numeric, rtol=1e-5,
                                       atol=1e-7)

    def test_relu_kink_contributes_zero(self):
        view = ViewSample(np.zeros((2, 1)), sp.identity(2, format='csr'),
                          np.ones(2, dtype=np.int8), np.empty((0, 2)))
        params = EncoderParams({'W1': [[1.0]], 'W2': [[1.0]],
                                'b1': [0.0], 'b2': [0.0]})
        _, tape = forward(params, view)
        grads = backward(params, tape, np.ones((2, 1)))
        np.testing.assert_array_equal(grads['b1'], [0.0])
        np.testing.assert_array_equal(grads['b2'], [2.0])

    def test_stale_tape_after_update(self):
        params = init_params(3, 4, 2)
        z, tape = forward(params, _random_view())
        updated = params.replace(params.arrays)
        with pytest.raises(StaleTapeError):
            backward(updated, tape, np.ones(z.shape))

    def test_tape_of_other_parameters(self):
        params = init_params(3, 4, 2)
        _, tape = forward(params, _random_view())
        with pytest.raises(StaleTapeError):
            backward(params.copy(), tape, np.ones((5, 2)))

    def test_upstream_shape(self):
        params = init_params(3, 4, 2)
        _, tape = forward(params, _random_view())
        with pytest.raises(ShapeError):
            backward(params, tape, np.ones((5, 3)))


class TestGradCheck:

    @pytest.mark.parametrize('overrides', [
        {},
        {'lam': 0.0},
        {'k': 0, 'l': 0},
        {'activation': 'prelu', 'bias': True},
        {'bias': True},
        {'bias': True, 'p_h': 0.9},
        {'normalize_embeddings': True},
        {'strategy': 'shuffling'},
        {'strategy': 'consistency-only'},
        {'p_h_2': 0.0, 'p_a_2': 0.5},
    ])
    def test_passes_on_small_sbm(self, tiny_sbm, overrides):
        cfg = TrainConfig(**{'d_hidden': 16, 'd_out': 16, 'lam': 0.3,
                             'k': 5, 'l': 5, **overrides})
        report = grad_check(tiny_sbm, cfg)
        assert report.passed, report.to_dict()
        assert report.max_relative_error <= 1e-4
        assert set(report.relative_errors) == set(
            init_params(tiny_sbm.f, 16, 16, activation=cfg.activation,
                        bias=cfg.bias))

    @pytest.mark.parametrize('activation', ['relu', 'prelu'])
    def test_bias_with_zero_propagated_row(self, activation):
        rng = np.random.default_rng(2)
        features = rng.standard_normal((6, 3))
        features[0] = 0.0
        g = Graph(features, adjacency_from_edges(
            6, [(1, 2), (2, 3), (3, 4), (4, 5)]))
        cfg = TrainConfig(d_hidden=4, d_out=3, k=2, l=2, p_h=0.0, p_a=0.0,
                          activation=activation, bias=True)
        params = init_params(3, 4, 3, activation=activation, bias=True)
        _, tape = forward(params, full_view(g))
        np.testing.assert_array_equal(tape.pre_activation[0], 0.0)
        report = grad_check(g, cfg)
        assert report.passed, report.to_dict()

    def test_report_fields(self, tiny_sbm):
        cfg = TrainConfig(d_hidden=4, d_out=3, k=2, l=2)
        report = grad_check(tiny_sbm, cfg, seed=5, tolerance=1e-3)
        assert set(report.to_dict()) == {
            'relative_errors', 'max_relative_error', 'max_abs_error',
            'tolerance', 'step', 'passed'}
        assert report.tolerance == 1e-3 and report.step == 1e-5
