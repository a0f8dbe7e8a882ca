# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the training loop and embedding export.

What's here:

One full-batch step per epoch.
------------------------------

Classes:
  - EpochRecord

Functions:
  - resolve_pair_budget
  - epoch_loss
  - train
  - read_log

Embeddings of the raw graph.
----------------------------

Functions:
  - embed
  - save_embeddings
  - load_embeddings
"""

import json
from dataclasses import asdict, dataclass
from logging import getLogger
from pathlib import Path
from time import perf_counter
from typing import Optional

import numpy as np

from rich.progress import Progress

from GraphILBO.checkpoint import load_checkpoint, save_checkpoint
from GraphILBO.config import TrainConfig
from GraphILBO.encoder import (Embeddings, EncoderParams, backward, forward,
                               init_params)
from GraphILBO.errors import ConfigError, NonFiniteError, ShapeError
from GraphILBO.graph import Graph
from GraphILBO.objective import combined_loss, select_pairs_shuffling
from GraphILBO.optimizer import AdamState, adam_step
from GraphILBO.reader.features import MatrixReader, write_matrix
from GraphILBO.sampler import epoch_rng, full_view, sample_epoch_views

logger = getLogger(__name__)  # pylint: disable=invalid-name

# Stream ids under (seed, epoch): views and shuffling draw independently.
VIEW_STREAM = 0
SHUFFLE_STREAM = 1


@dataclass
class EpochRecord(object):
    """One line of the JSON-lines training log."""

    epoch: int
    l_cl: Optional[float]
    l_cvc: float
    lam: float
    total: float
    num_positive: int
    num_negative: int
    wall_time: float

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def resolve_pair_budget(cfg: TrainConfig, n: int):
    """Absolute (k, l) for a graph of n nodes.

    Explicit counts win over the per-node multipliers; derived counts are
    clipped to the n^2 - n off-diagonal pairs, l first.
    """
    budget = n * n - n
    k = cfg.k if cfg.k is not None else int(round(cfg.k_per_node * n))
    l = cfg.l if cfg.l is not None else int(round(cfg.l_per_node * n))  # noqa
    if k + l > budget and cfg.l is None:
        l = max(budget - k, 0)  # noqa: E741
    if k + l > budget and cfg.k is None:
        k = max(budget - l, 0)
    if k + l > budget:
        raise ConfigError(f'k + l = {k + l} exceeds the {budget} off-diagonal '
                          f'pairs of a {n}-node graph.')
    return k, l


def epoch_loss(params: EncoderParams, views, cfg: TrainConfig, k: int,
               l: int, seed: int, epoch: int, pairs=None,  # noqa: E741
               with_grads: bool = True):
    """Encode both views with the same parameters and evaluate the loss.

    Args:
        params (EncoderParams): the shared weights.
        views (tuple): the two ViewSample of the epoch.
        cfg (TrainConfig): strategy, lam and normalization.
        k (int): off-diagonal positives.
        l (int): negatives.
        seed (int): run seed, seeds the shuffling baseline.
        epoch (int): epoch index, seeds the shuffling baseline.
        pairs (PairSets): fixed pairs, skips selection.
        with_grads (bool): also run the backward passes.

    Returns:
        breakdown (LossBreakdown)
        grads (dict): summed gradients of both views, or None.
        pairs (PairSets): the pairs used, None for consistency-only.
    """
    first, second = views
    z1, tape1 = forward(params, first, 'view1')
    z2, tape2 = forward(params, second, 'view2')
    if cfg.strategy == 'shuffling' and pairs is None:
        pairs = select_pairs_shuffling(first.n,
                                       [seed, epoch, SHUFFLE_STREAM])
    breakdown, grad_z1, grad_z2, pairs = combined_loss(
        z1, z2, k, l, cfg.lam, pairs=pairs,
        normalize=cfg.normalize_embeddings,
        contrastive=cfg.strategy != 'consistency-only')
    if not with_grads:
        return breakdown, None, pairs
    grads1 = backward(params, tape1, grad_z1)
    grads2 = backward(params, tape2, grad_z2)
    grads = {name: grads1[name] + grads2[name] for name in params}
    return breakdown, grads, pairs


def _check_finite(breakdown, epoch: int):
    if breakdown.l_cl is not None and not np.isfinite(breakdown.l_cl):
        raise NonFiniteError(f'Contrastive term L_cl is {breakdown.l_cl} at '
                             f'epoch {epoch}.')
    if not np.isfinite(breakdown.l_cvc):
        raise NonFiniteError(f'Consistency term L_cvc is {breakdown.l_cvc} '
                             f'at epoch {epoch}.')


def read_log(log_path) -> list:
    """Read EpochRecord lines of a training log."""
    records = []
    with open(log_path, 'r', encoding='utf-8') as open_log:
        for eachline in open_log:
            if eachline.strip():
                records.append(EpochRecord(**json.loads(eachline)))
    return records


def _resume(g: Graph, cfg: TrainConfig, resume_from):
    checkpoint = load_checkpoint(resume_from)
    params = checkpoint.params
    if checkpoint.seed != cfg.seed:
        raise ConfigError(f'Checkpoint seed {checkpoint.seed} differs from '
                          f'config seed {cfg.seed}.')
    if (params.W1.shape != (g.f, cfg.d_hidden) or
            params.W2.shape != (cfg.d_hidden, cfg.d_out) or
            params.activation != cfg.activation or params.bias != cfg.bias):
        raise ShapeError(f'Checkpoint {params!r} does not fit the graph and '
                         'config.')
    if checkpoint.epoch > cfg.epochs:
        raise ConfigError(f'Checkpoint is at epoch {checkpoint.epoch}, past '
                          f'the configured {cfg.epochs} epochs.')
    return params, checkpoint.state, checkpoint.epoch


def train(g: Graph, cfg: TrainConfig, resume_from=None,
          show_progress: bool = False):
    """Train the shared encoder, one full-batch Adam step per epoch.

    Each epoch samples two views, encodes both with the same parameters,
    selects pairs per the strategy, backpropagates L = L_cl + lam * L_cvc
    and updates the parameters.

    Args:
        g (Graph): training graph.
        cfg (TrainConfig): hyperparameters, log and checkpoint paths.
        resume_from: checkpoint to continue from.
        show_progress (bool): draw a progress bar.

    Returns:
        params (EncoderParams): trained parameters.
        records (list): EpochRecord of the epochs run by this call.
    """
    cfg.validate()
    first_cfg, second_cfg = cfg.sample_configs()
    k, l = resolve_pair_budget(cfg, g.n)  # noqa: E741
    if resume_from is not None:
        params, state, start = _resume(g, cfg, resume_from)
    else:
        params = init_params(g.f, cfg.d_hidden, cfg.d_out, cfg.seed,
                             cfg.activation, cfg.bias)
        state = AdamState.initial(params, cfg.lr, cfg.beta1, cfg.beta2,
                                  cfg.eps)
        start = 0
    records = []
    log_file = None
    if cfg.log_path:
        log_path = Path(cfg.log_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        earlier = []
        if start and log_path.is_file():
            earlier = [record for record in read_log(log_path)
                       if record.epoch < start]
        log_file = open(log_path, 'w', encoding='utf-8')
        for record in earlier:
            log_file.write(record.to_json() + '\n')
    logger.debug(f'Training {g!r} from epoch {start} to {cfg.epochs} with '
                 f'k={k}, l={l}, strategy={cfg.strategy}.')
    saved_epoch = None
    try:
        with Progress(disable=not show_progress) as progress:
            task = progress.add_task(
                f'[green]INFO    [cyan]Training {cfg.epochs} epochs...',
                total=cfg.epochs, completed=start)
            for epoch in range(start, cfg.epochs):
                tic = perf_counter()
                views = sample_epoch_views(
                    g, first_cfg, epoch_rng(cfg.seed, epoch, VIEW_STREAM),
                    second_cfg)
                try:
                    breakdown, grads, pairs = epoch_loss(
                        params, views, cfg, k, l, cfg.seed, epoch)
                except NonFiniteError as err:
                    raise NonFiniteError(f'Epoch {epoch}: {err}') from None
                _check_finite(breakdown, epoch)
                params, state = adam_step(params, grads, state)
                record = EpochRecord(
                    epoch, breakdown.l_cl, breakdown.l_cvc, breakdown.lam,
                    breakdown.total,
                    0 if pairs is None else pairs.num_positive,
                    0 if pairs is None else pairs.num_negative,
                    perf_counter() - tic)
                records.append(record)
                if log_file is not None:
                    log_file.write(record.to_json() + '\n')
                    log_file.flush()
                completed = epoch + 1
                if cfg.checkpoint_path and (
                        completed % cfg.checkpoint_every == 0 or
                        completed == cfg.epochs):
                    save_checkpoint(cfg.checkpoint_path, params, state,
                                    completed, cfg)
                    saved_epoch = completed
                progress.advance(task)
    finally:
        if log_file is not None:
            log_file.close()
    if cfg.checkpoint_path and saved_epoch != cfg.epochs:
        save_checkpoint(cfg.checkpoint_path, params, state, cfg.epochs, cfg)
    return params, records


def embed(g: Graph, params: EncoderParams) -> Embeddings:
    """Encode the raw graph with no feature masking or edge dropping."""
    return forward(params, full_view(g), 'full')[0]


def save_embeddings(path, embeddings):
    """Write n x d_out embeddings as CSV, row i for node i."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    write_matrix(path, np.asarray(embeddings))


def load_embeddings(path) -> Embeddings:
    return Embeddings(MatrixReader(str(path)).read_matrix(), 'file')
