# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the two-layer GCN encoder shared by both views.

What's here:

Encoder parameters, outputs and tape.
-------------------------------------

Classes:
  - EncoderParams
  - Embeddings
  - EncoderTape
  - GradCheckReport

Forward and reverse passes.
---------------------------

Functions:
  - init_params
  - forward
  - backward
  - grad_check
"""

from logging import getLogger
from typing import Optional

import numpy as np

from GraphILBO.errors import ConfigError, ShapeError, StaleTapeError
from GraphILBO.graph import Graph
from GraphILBO.optimizer import ParamSet
from GraphILBO.sampler import SampleConfig, ViewSample, sample_epoch_views, \
    epoch_rng

logger = getLogger(__name__)  # pylint: disable=invalid-name

ACTIVATIONS = ('relu', 'prelu')
PRELU_INIT = 0.25


class EncoderParams(ParamSet):
    """Weights of Z = A relu(A H W1 + b1) W2 + b2.

    W1 and W2 are always present; b1, b2 exist when biases are on and
    alpha (per hidden channel) when the activation is PReLU.
    """

    @property
    def W1(self) -> np.ndarray:  # pylint: disable=invalid-name
        return self.arrays['W1']

    @property
    def W2(self) -> np.ndarray:  # pylint: disable=invalid-name
        return self.arrays['W2']

    @property
    def activation(self) -> str:
        return 'prelu' if 'alpha' in self.arrays else 'relu'

    @property
    def bias(self) -> bool:
        return 'b1' in self.arrays

    @property
    def f_dim(self) -> int:
        return self.W1.shape[0]

    @property
    def d_out(self) -> int:
        return self.W2.shape[1]


class Embeddings(object):
    """Node embeddings, row i for node i.

    Attributes:
      - matrix (np.ndarray): n x d_out.
      - view_tag (str): the view that produced them.
    """

    def __init__(self, matrix: np.ndarray, view_tag: str = 'full'):
        self.matrix = matrix
        self.view_tag = view_tag

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)

    @property
    def shape(self):
        return self.matrix.shape


class EncoderTape(object):
    """Activations cached by forward for backward.

    Attributes:
      - params (EncoderParams): the parameters of the forward call.
      - version (int): their version at that time.
      - adjacency: the propagation matrix of the view.
      - propagated_input (np.ndarray): A H.
      - pre_activation (np.ndarray): A H W1 (+ b1).
      - hidden (np.ndarray): activation of pre_activation.
      - propagated_hidden (np.ndarray): A hidden.
    """

    def __init__(self, params, adjacency, propagated_input, pre_activation,
                 hidden, propagated_hidden):
        self.params = params
        self.version = params.version
        self.adjacency = adjacency
        self.propagated_input = propagated_input
        self.pre_activation = pre_activation
        self.hidden = hidden
        self.propagated_hidden = propagated_hidden


def init_params(f_dim: int,
                d_hidden: int = 256,
                d_out: int = 256,
                seed: int = 0,
                activation: str = 'relu',
                bias: bool = False) -> EncoderParams:
    """Glorot-uniform weights, deterministic per seed.

    Args:
        f_dim (int): input feature dimension.
        d_hidden (int): hidden width, default 256.
        d_out (int): embedding width, default 256.
        seed (int): random seed.
        activation (str): 'relu' or 'prelu'.
        bias (bool): add bias terms, default False.

    Returns:
        params (EncoderParams)
    """
    if min(f_dim, d_hidden, d_out) <= 0:
        raise ConfigError('Encoder dimensions must be positive.')
    if activation not in ACTIVATIONS:
        raise ConfigError(f'Unknown activation {activation!r}.')
    rng = np.random.default_rng(seed)
    arrays = {}
    for name, (fan_in, fan_out) in (('W1', (f_dim, d_hidden)),
                                    ('W2', (d_hidden, d_out))):
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        arrays[name] = rng.uniform(-bound, bound, size=(fan_in, fan_out))
    if bias:
        arrays['b1'] = np.zeros(d_hidden)
        arrays['b2'] = np.zeros(d_out)
    if activation == 'prelu':
        arrays['alpha'] = np.full(d_hidden, PRELU_INIT)
    return EncoderParams(arrays)


def forward(params: EncoderParams, view: ViewSample, view_tag: str = 'view'):
    """Encode one view.

    Args:
        params (EncoderParams): shared weights.
        view (ViewSample): masked features and propagation matrix.
        view_tag (str): label stored on the embeddings.

    Returns:
        embeddings (Embeddings)
        tape (EncoderTape)
    """
    features = view.masked_features
    if features.shape[1] != params.f_dim:
        raise ShapeError(f'View has {features.shape[1]} features, encoder '
                         f'expects {params.f_dim}.')
    adjacency = view.dropped_adjacency
    propagated_input = adjacency @ features
    pre_activation = propagated_input @ params.W1
    if params.bias:
        pre_activation = pre_activation + params['b1']
    if params.activation == 'prelu':
        hidden = np.where(pre_activation > 0, pre_activation,
                          params['alpha'] * pre_activation)
    else:
        hidden = np.maximum(pre_activation, 0.0)
    propagated_hidden = adjacency @ hidden
    z = propagated_hidden @ params.W2
    if params.bias:
        z = z + params['b2']
    tape = EncoderTape(params, adjacency, propagated_input, pre_activation,
                       hidden, propagated_hidden)
    return Embeddings(z, view_tag), tape


def backward(params: EncoderParams, tape: EncoderTape, grad_z) -> dict:
    """Reverse-mode gradients of the parameters for an upstream dL/dZ.

    The relu derivative at exactly zero is taken as zero.

    Args:
        params (EncoderParams): must be the parameters the tape recorded.
        tape (EncoderTape): cache of the matching forward call.
        grad_z (np.ndarray): n x d_out upstream gradient.

    Returns:
        grads (dict): name -> gradient, one entry per parameter.
    """
    if tape.params is not params or tape.version != params.version:
        raise StaleTapeError('Tape was recorded with other parameters.')
    grad_z = np.asarray(grad_z, dtype=np.float64)
    if grad_z.shape != (tape.propagated_hidden.shape[0], params.d_out):
        raise ShapeError(f'Upstream gradient shape {grad_z.shape} does not '
                         'match the embeddings.')
    grads = {'W2': tape.propagated_hidden.T @ grad_z}
    grad_hidden = tape.adjacency.T @ (grad_z @ params.W2.T)
    positive = tape.pre_activation > 0
    if params.activation == 'prelu':
        grad_pre = np.where(positive, grad_hidden,
                            params['alpha'] * grad_hidden)
        grads['alpha'] = np.sum(
            np.where(positive, 0.0, grad_hidden * tape.pre_activation),
            axis=0)
    else:
        grad_pre = grad_hidden * positive
    grads['W1'] = tape.propagated_input.T @ grad_pre
    if params.bias:
        grads['b1'] = grad_pre.sum(axis=0)
        grads['b2'] = grad_z.sum(axis=0)
    return {name: grads[name] for name in params}


class GradCheckReport(object):
    """Analytic against central-difference gradients.

    Attributes:
      - relative_errors (dict): parameter name -> relative error.
      - max_abs_error (float): largest element-wise difference.
      - max_relative_error (float): largest relative error.
      - tolerance (float): pass threshold.
      - step (float): finite-difference step.
    """

    def __init__(self, relative_errors: dict, max_abs_error: float,
                 tolerance: float, step: float):
        self.relative_errors = relative_errors
        self.max_abs_error = max_abs_error
        self.max_relative_error = max(relative_errors.values())
        self.tolerance = tolerance
        self.step = step

    @property
    def passed(self) -> bool:
        return self.max_relative_error <= self.tolerance

    def to_dict(self) -> dict:
        return {'relative_errors': self.relative_errors,
                'max_relative_error': self.max_relative_error,
                'max_abs_error': self.max_abs_error,
                'tolerance': self.tolerance,
                'step': self.step,
                'passed': self.passed}


def _relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    scale = max(np.linalg.norm(analytic), np.linalg.norm(numeric), 1e-12)
    return float(np.linalg.norm(analytic - numeric) / scale)


def _off_kink(params: EncoderParams, seed: int) -> EncoderParams:
    """Give b1 and b2 seeded values of magnitude in [0.05, 0.1].

    A node whose neighbourhood is fully masked has a zero propagated row,
    so with zero biases its pre-activation sits exactly on the relu kink
    and a central difference on b1 straddles it.
    """
    rng = np.random.default_rng([seed, 1])
    arrays = dict(params.items())
    for name in ('b1', 'b2'):
        size = arrays[name].shape
        arrays[name] = (rng.uniform(0.05, 0.1, size=size) *
                        rng.choice([-1.0, 1.0], size=size))
    return EncoderParams(arrays, version=params.version)


def grad_check(g: Graph, cfg, seed: Optional[int] = None,
               step: float = 1e-5, tolerance: float = 1e-4) -> GradCheckReport:
    """Compare backprop through the full training loss with finite
    differences on every encoder parameter.

    Views and pair sets are drawn once and held fixed while differencing.
    With biases on, b1 and b2 are moved off zero first.

    Args:
        g (Graph): a small graph (n <= 50 recommended).
        cfg (TrainConfig): loss, sampling and encoder settings.
        seed (int): overrides cfg.seed.
        step (float): central-difference step.
        tolerance (float): pass threshold on the relative error.

    Returns:
        report (GradCheckReport)
    """
    # Imported here: objective and trainer both build on this module.
    from GraphILBO.trainer import epoch_loss, resolve_pair_budget

    seed = cfg.seed if seed is None else seed
    params = init_params(g.f, cfg.d_hidden, cfg.d_out, seed,
                         cfg.activation, cfg.bias)
    if params.bias:
        params = _off_kink(params, seed)
    first_cfg, second_cfg = cfg.sample_configs()
    views = sample_epoch_views(g, first_cfg, epoch_rng(seed, 0), second_cfg)
    k, l = resolve_pair_budget(cfg, g.n)
    loss, grads, pairs = epoch_loss(params, views, cfg, k, l, seed, 0)
    logger.debug(f'Gradient check at loss {loss.total!r}.')

    # One working copy, perturbed in place and restored after each entry.
    perturbed = EncoderParams({name: value.copy()
                               for name, value in params.items()},
                              copy=False)

    def total_at() -> float:
        breakdown, _, _ = epoch_loss(perturbed, views, cfg, k, l, seed, 0,
                                     pairs=pairs, with_grads=False)
        return breakdown.total

    relative_errors, max_abs_error = {}, 0.0
    for name in params:
        numeric = np.zeros_like(params[name])
        work = perturbed[name]
        for index in np.ndindex(work.shape):
            original = work[index]
            work[index] = original + step
            plus = total_at()
            work[index] = original - step
            minus = total_at()
            work[index] = original
            numeric[index] = (plus - minus) / (2.0 * step)
        relative_errors[name] = _relative_error(grads[name], numeric)
        max_abs_error = max(max_abs_error,
                            float(np.max(np.abs(grads[name] - numeric))))
    return GradCheckReport(relative_errors, max_abs_error, tolerance, step)
