# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the linear-probe evaluation of frozen embeddings.

What's here:

Logistic regression on the training split, accuracy on the test split.
-----------------------------------------------------------------------

Classes:
  - ProbeConfig
  - ProbeParams
  - EvalReport

Functions:
  - accuracy
  - softmax_cross_entropy
  - fit_logistic_regression
  - linear_probe
"""

import csv
import json
from dataclasses import asdict, dataclass
from logging import getLogger

import numpy as np
from scipy.special import log_softmax, softmax

from rich.progress import Progress

from GraphILBO.errors import ConfigError, EvaluationError
from GraphILBO.optimizer import AdamState, ParamSet, adam_step
from GraphILBO.sys_output import Output

logger = getLogger(__name__)  # pylint: disable=invalid-name


@dataclass
class ProbeConfig(object):
    """Linear-probe settings.

    Attributes:
      - decay (float): L2 weight decay on the classifier weights.
      - lr (float): Adam learning rate.
      - epochs (int): full-batch steps.
      - repeats (int): independent classifier initializations.
      - seed (int): seed of the first repeat; repeat r uses seed + r.
      - standardize (bool): scale embeddings by training-split statistics.
    """

    decay: float = 1e-4
    lr: float = 0.01
    epochs: int = 300
    repeats: int = 5
    seed: int = 0
    standardize: bool = False

    def validate(self):
        if self.repeats < 1:
            raise ConfigError('Probe repeats must be at least 1.')
        if self.decay < 0:
            raise ConfigError('Probe decay must be non-negative.')
        if self.lr <= 0:
            raise ConfigError('Probe lr must be positive.')
        if self.epochs < 0:
            raise ConfigError('Probe epochs must be non-negative.')


class ProbeParams(ParamSet):
    """Classifier weights W (d x C) and bias b (C)."""


class EvalReport(object):
    """Accuracies of the probe repeats.

    `std` is the population standard deviation.

    Attributes:
      - accuracies (list): test accuracy of every repeat.
      - mean (float): mean accuracy.
      - std (float): population standard deviation.
      - split_sizes (dict): train/val/test sizes.
      - num_classes (int): classes seen in the labels.
      - missing_classes (list): classes absent from the training split.
      - config (ProbeConfig): settings the probe ran with.
    """

    def __init__(self, accuracies, split_sizes, num_classes,
                 missing_classes, config):
        self.accuracies = [float(a) for a in accuracies]
        self.mean = float(np.mean(self.accuracies))
        self.std = float(np.std(self.accuracies))
        self.split_sizes = split_sizes
        self.num_classes = num_classes
        self.missing_classes = missing_classes
        self.config = config

    def to_dict(self) -> dict:
        return {'accuracies': self.accuracies,
                'mean': self.mean,
                'std': self.std,
                'split_sizes': self.split_sizes,
                'num_classes': self.num_classes,
                'missing_classes': self.missing_classes,
                'probe_config': asdict(self.config)}

    def to_json(self, path):
        with open(path, 'w', encoding='utf-8') as open_report:
            json.dump(self.to_dict(), open_report, indent=2)
            open_report.write('\n')

    def write_accuracies_csv(self, path):
        with open(path, 'w', encoding='utf-8', newline='') as open_csv:
            writer = csv.writer(open_csv)
            writer.writerow(['repeat', 'accuracy'])
            for repeat, value in enumerate(self.accuracies):
                writer.writerow([repeat, repr(value)])


def accuracy(predictions, labels, index) -> float:
    """Fraction of nodes in index whose prediction matches the label."""
    index = np.asarray(index, dtype=np.int64)
    if index.size == 0:
        raise EvaluationError('Accuracy over an empty index set.')
    predictions = np.asarray(predictions)
    labels = np.asarray(labels)
    return float(np.mean(predictions[index] == labels[index]))


def softmax_cross_entropy(logits: np.ndarray, targets: np.ndarray):
    """Mean cross-entropy and its gradient with respect to the logits."""
    n = logits.shape[0]
    log_probs = log_softmax(logits, axis=1)
    value = float(-np.mean(log_probs[np.arange(n), targets]))
    grad = softmax(logits, axis=1)
    grad[np.arange(n), targets] -= 1.0
    return value, grad / n


def fit_logistic_regression(x: np.ndarray, y: np.ndarray, num_classes: int,
                            cfg: ProbeConfig, seed: int) -> ProbeParams:
    """Full-batch Adam on softmax cross-entropy plus L2 on W."""
    rng = np.random.default_rng(seed)
    bound = np.sqrt(6.0 / (x.shape[1] + num_classes))
    params = ProbeParams({
        'W': rng.uniform(-bound, bound, size=(x.shape[1], num_classes)),
        'b': np.zeros(num_classes)})
    state = AdamState.initial(params, lr=cfg.lr)
    for _ in range(cfg.epochs):
        logits = x @ params['W'] + params['b']
        _, grad_logits = softmax_cross_entropy(logits, y)
        grads = {'W': x.T @ grad_logits + cfg.decay * params['W'],
                 'b': grad_logits.sum(axis=0)}
        params, state = adam_step(params, grads, state)
    return params


def linear_probe(z, labels, splits, cfg: ProbeConfig,
                 show_progress: bool = False) -> EvalReport:
    """Train a logistic-regression probe on frozen embeddings.

    Only the training split fits the classifier; accuracy is measured on
    the test split. Repeats differ only in the classifier seed.

    Args:
        z: n x d embeddings, not modified.
        labels: length-n class ids.
        splits (dict): 'train', 'val', 'test' index arrays.
        cfg (ProbeConfig): probe settings.
        show_progress (bool): draw a progress bar over the repeats.

    Returns:
        report (EvalReport)
    """
    cfg.validate()
    if labels is None or splits is None:
        raise EvaluationError('Linear probe needs labels and splits.')
    z = np.asarray(z, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    train_index = np.asarray(splits['train'], dtype=np.int64)
    test_index = np.asarray(splits['test'], dtype=np.int64)
    if train_index.size == 0 or test_index.size == 0:
        raise EvaluationError('Linear probe needs non-empty train and test '
                              'splits.')
    if z.shape[0] != labels.shape[0]:
        raise EvaluationError(f'{z.shape[0]} embeddings for '
                              f'{labels.shape[0]} labels.')
    num_classes = int(labels.max()) + 1
    missing = sorted(set(range(num_classes)) -
                     set(labels[train_index].tolist()))
    if missing:
        Output().warning(f'Classes {missing} are absent from the training '
                         'split.')
        logger.warning(f'Classes {missing} are absent from the training '
                       'split.')
    features = z
    if cfg.standardize:
        mean = z[train_index].mean(axis=0)
        std = z[train_index].std(axis=0)
        features = (z - mean) / np.where(std > 0, std, 1.0)
    accuracies = []
    with Progress(disable=not show_progress) as progress:
        task = progress.add_task(
            f'[green]INFO    [cyan]Fitting {cfg.repeats} probes...',
            total=cfg.repeats)
        for repeat in range(cfg.repeats):
            params = fit_logistic_regression(
                features[train_index], labels[train_index], num_classes,
                cfg, cfg.seed + repeat)
            predictions = np.argmax(
                features @ params['W'] + params['b'], axis=1)
            accuracies.append(accuracy(predictions, labels, test_index))
            logger.debug(f'Probe repeat {repeat}: accuracy '
                         f'{accuracies[-1]}.')
            progress.advance(task)
    split_sizes = {name: int(len(splits.get(name, [])))
                   for name in ('train', 'val', 'test')}
    return EvalReport(accuracies, split_sizes, num_classes, missing, cfg)
