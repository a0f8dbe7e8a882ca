# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Save and restore encoder checkpoints.

What's here:

HDF5 checkpoint container, format version 1.
--------------------------------------------

    /                attrs: format_version, rng_algorithm, seed, epoch,
                            config (resolved TrainConfig as JSON)
    /params/<name>   encoder parameter arrays (float64)
    /adam            attrs: t, lr, beta1, beta2, eps
    /adam/m/<name>   first moments
    /adam/v/<name>   second moments

Classes:
  - Checkpoint

Functions:
  - save_checkpoint
  - load_checkpoint
"""

import json
from dataclasses import asdict
from logging import getLogger
from pathlib import Path

import h5py
import numpy as np

from GraphILBO.encoder import EncoderParams
from GraphILBO.errors import CheckpointError
from GraphILBO.optimizer import AdamState
from GraphILBO.sampler import RNG_ALGORITHM

logger = getLogger(__name__)  # pylint: disable=invalid-name

FORMAT_VERSION = 1


class Checkpoint(object):
    """Everything needed to resume training.

    Attributes:
      - params (EncoderParams): encoder weights.
      - state (AdamState): optimizer state.
      - epoch (int): completed epochs.
      - seed (int): run seed.
      - rng_algorithm (str): bit generator behind view sampling.
      - config (dict): resolved training config.
    """

    def __init__(self, params, state, epoch, seed, rng_algorithm, config):
        self.params = params
        self.state = state
        self.epoch = epoch
        self.seed = seed
        self.rng_algorithm = rng_algorithm
        self.config = config


def _write_group(group, arrays: dict):
    for name, value in arrays.items():
        group.create_dataset(name, data=np.asarray(value, dtype=np.float64),
                             track_times=False)


def save_checkpoint(path, params: EncoderParams, state: AdamState,
                    epoch: int, cfg):
    """Write a checkpoint, replacing any previous file atomically."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    partial = path.with_name(path.name + '.partial')
    with h5py.File(partial, 'w', track_order=True) as h5:
        h5.attrs['format_version'] = FORMAT_VERSION
        h5.attrs['rng_algorithm'] = RNG_ALGORITHM
        h5.attrs['seed'] = cfg.seed
        h5.attrs['epoch'] = epoch
        h5.attrs['config'] = json.dumps(asdict(cfg), sort_keys=True)
        _write_group(h5.create_group('params', track_order=True),
                     params.arrays)
        adam = h5.create_group('adam')
        for key in ('t', 'lr', 'beta1', 'beta2', 'eps'):
            adam.attrs[key] = getattr(state, key)
        _write_group(adam.create_group('m', track_order=True), state.m)
        _write_group(adam.create_group('v', track_order=True), state.v)
    partial.replace(path)
    logger.debug(f'Saved checkpoint at epoch {epoch} to {path}.')


def load_checkpoint(path) -> Checkpoint:
    """Read a checkpoint written by save_checkpoint."""
    path = Path(path)
    if not path.is_file():
        raise CheckpointError(f'Checkpoint {path} does not exist.')
    try:
        with h5py.File(path, 'r') as h5:
            version = int(h5.attrs['format_version'])
            if version != FORMAT_VERSION:
                raise CheckpointError(
                    f'Checkpoint format {version} is not supported.')
            names = list(h5['params'].keys())
            params = EncoderParams(
                {name: h5['params'][name][()] for name in names})
            adam = h5['adam']
            state = AdamState(
                {name: adam['m'][name][()] for name in names},
                {name: adam['v'][name][()] for name in names},
                int(adam.attrs['t']), float(adam.attrs['lr']),
                float(adam.attrs['beta1']), float(adam.attrs['beta2']),
                float(adam.attrs['eps']))
            checkpoint = Checkpoint(
                params, state, int(h5.attrs['epoch']), int(h5.attrs['seed']),
                str(h5.attrs['rng_algorithm']),
                json.loads(h5.attrs['config']))
    except (OSError, KeyError) as err:
        raise CheckpointError(f'Cannot read checkpoint {path}: {err}') \
            from None
    return checkpoint
