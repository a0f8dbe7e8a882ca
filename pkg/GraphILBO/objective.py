# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the cross-view contrastive objective.

What's here:

Similarity matrix and pair sets.
--------------------------------

Classes:
  - SimilarityMatrix
  - PairSets
  - LossBreakdown

Functions:
  - similarity
  - select_pairs
  - select_pairs_shuffling

Losses and their gradients.
---------------------------

Functions:
  - contrastive_loss
  - consistency_loss
  - combined_loss
  - normalize_rows
  - normalize_rows_backward
"""

from logging import getLogger
from typing import Optional

import numpy as np
from scipy.special import expit

from GraphILBO.errors import (ConfigError, NonFiniteError, ShapeError)

logger = getLogger(__name__)  # pylint: disable=invalid-name


class SimilarityMatrix(object):
    """Raw cross-view scores s_ij = z1_i . z2_j.

    Attributes:
      - scores (np.ndarray): n x n.
    """

    def __init__(self, scores: np.ndarray):
        if not np.all(np.isfinite(scores)):
            raise NonFiniteError('Similarity matrix holds non-finite scores.')
        self.scores = scores

    @property
    def n(self) -> int:
        return self.scores.shape[0]

    def discriminator(self) -> np.ndarray:
        """sigmoid(s_ij), computed on demand."""
        return expit(self.scores)


class PairSets(object):
    """Positive and negative index pairs over the similarity matrix.

    Attributes:
      - positive (np.ndarray): (n + k, 2), the diagonal first.
      - negative (np.ndarray): (l, 2).
      - k (int): off-diagonal positives.
      - l (int): negatives.
    """

    def __init__(self, positive: np.ndarray, negative: np.ndarray,
                 k: int, l: int):  # noqa: E741
        self.positive = positive
        self.negative = negative
        self.k = k
        self.l = l  # noqa: E741

    @property
    def num_positive(self) -> int:
        return self.positive.shape[0]

    @property
    def num_negative(self) -> int:
        return self.negative.shape[0]

    def as_sets(self):
        """Positive and negative pairs as python sets of tuples."""
        return ({tuple(int(i) for i in pair) for pair in self.positive},
                {tuple(int(i) for i in pair) for pair in self.negative})


class LossBreakdown(object):
    """Terms of L = L_cl + lam * L_cvc.

    l_cl is None when the contrastive term is left out of the objective.
    """

    def __init__(self, l_cl: Optional[float], l_cvc: float, lam: float):
        self.l_cl = l_cl
        self.l_cvc = l_cvc
        self.lam = lam

    @property
    def total(self) -> float:
        contrastive = 0.0 if self.l_cl is None else self.l_cl
        return contrastive + self.lam * self.l_cvc

    def to_dict(self) -> dict:
        return {'l_cl': self.l_cl, 'l_cvc': self.l_cvc, 'lam': self.lam,
                'total': self.total}


def _matrix(z) -> np.ndarray:
    return np.asarray(z, dtype=np.float64)


def similarity(z1, z2) -> SimilarityMatrix:
    """S = Z1 Z2^T, so S[i, j] is the score of node i in view one
    against node j in view two."""
    z1, z2 = _matrix(z1), _matrix(z2)
    if z1.shape != z2.shape:
        raise ShapeError(f'Embedding shapes differ: {z1.shape} vs '
                         f'{z2.shape}.')
    return SimilarityMatrix(z1 @ z2.T)


def select_pairs(s, k: int, l: int) -> PairSets:  # noqa: E741
    """Pick the diagonal plus the k largest off-diagonal scores as
    positives and the l smallest remaining ones as negatives.

    Ties are broken by row-major index order.

    Args:
        s (SimilarityMatrix): cross-view scores.
        k (int): off-diagonal positives.
        l (int): negatives.

    Returns:
        pairs (PairSets)
    """
    scores = s.scores if isinstance(s, SimilarityMatrix) else _matrix(s)
    n = scores.shape[0]
    if k < 0 or l < 0:
        raise ConfigError(f'Pair counts must be non-negative, got k={k}, '
                          f'l={l}.')
    if k + l > n * n - n:
        raise ConfigError(f'k + l = {k + l} exceeds the {n * n - n} '
                          'off-diagonal pairs.')
    off_diagonal = np.flatnonzero(~np.eye(n, dtype=bool))
    values = scores.ravel()[off_diagonal]
    descending = np.argsort(-values, kind='stable')
    chosen = descending[:k]
    remaining = np.ones(values.size, dtype=bool)
    remaining[chosen] = False
    candidates = np.flatnonzero(remaining)
    ascending = candidates[np.argsort(values[candidates], kind='stable')]
    rejected = ascending[:l]
    diagonal = np.repeat(np.arange(n), 2).reshape(n, 2)
    positive = np.vstack((diagonal, np.column_stack(
        np.unravel_index(off_diagonal[chosen], (n, n)))))
    negative = np.column_stack(
        np.unravel_index(off_diagonal[rejected], (n, n)))
    return PairSets(positive.astype(np.int64).reshape(-1, 2),
                    negative.astype(np.int64).reshape(-1, 2), k, l)


def select_pairs_shuffling(n: int, seed) -> PairSets:
    """Diagonal positives and negatives (i, pi(i)) of a random permutation.

    Fixed points of the permutation are skipped.

    Args:
        n (int): node count, at least 2.
        seed: int or sequence of ints seeding the permutation.

    Returns:
        pairs (PairSets)
    """
    if n < 2:
        raise ConfigError('Shuffling needs at least two nodes.')
    permutation = np.random.default_rng(seed).permutation(n)
    moved = np.flatnonzero(permutation != np.arange(n))
    positive = np.repeat(np.arange(n), 2).reshape(n, 2)
    negative = np.column_stack((moved, permutation[moved]))
    return PairSets(positive.astype(np.int64),
                    negative.astype(np.int64).reshape(-1, 2), 0, moved.size)


def contrastive_loss(s, pairs: PairSets):
    """Jensen-Shannon contrastive loss over the pair sets.

    value = mean over P of softplus(-s_ij) + mean over N of softplus(s_ij),
    the N term dropped when N is empty.

    Args:
        s (SimilarityMatrix): cross-view scores.
        pairs (PairSets): positives and negatives.

    Returns:
        value (float)
        grad_s (np.ndarray): dvalue/ds_ij, zero outside P and N.
    """
    scores = s.scores if isinstance(s, SimilarityMatrix) else _matrix(s)
    if pairs.num_positive == 0:
        raise ConfigError('Contrastive loss needs at least one positive pair.')
    grad_s = np.zeros_like(scores)
    rows, cols = pairs.positive[:, 0], pairs.positive[:, 1]
    positive_scores = scores[rows, cols]
    value = float(np.mean(np.logaddexp(0.0, -positive_scores)))
    np.add.at(grad_s, (rows, cols),
              -expit(-positive_scores) / pairs.num_positive)
    if pairs.num_negative:
        rows, cols = pairs.negative[:, 0], pairs.negative[:, 1]
        negative_scores = scores[rows, cols]
        value += float(np.mean(np.logaddexp(0.0, negative_scores)))
        np.add.at(grad_s, (rows, cols),
                  expit(negative_scores) / pairs.num_negative)
    return value, grad_s


def consistency_loss(z1, z2):
    """Mean squared distance between the two views of every node.

    Returns:
        value (float)
        grad_z1 (np.ndarray)
        grad_z2 (np.ndarray)
    """
    z1, z2 = _matrix(z1), _matrix(z2)
    if z1.shape != z2.shape:
        raise ShapeError(f'Embedding shapes differ: {z1.shape} vs '
                         f'{z2.shape}.')
    n = z1.shape[0]
    diff = z1 - z2
    value = float(np.sum(diff * diff) / n)
    grad_z1 = (2.0 / n) * diff
    return value, grad_z1, -grad_z1


def normalize_rows(z: np.ndarray):
    """Scale every row to unit L2 norm; zero rows stay zero.

    Returns:
        unit (np.ndarray)
        norms (np.ndarray): clipped row norms, needed by the backward.
    """
    norms = np.maximum(np.linalg.norm(z, axis=1, keepdims=True), 1e-12)
    return z / norms, norms


def normalize_rows_backward(unit: np.ndarray, norms: np.ndarray,
                            grad_unit: np.ndarray) -> np.ndarray:
    """Gradient through normalize_rows."""
    radial = np.sum(unit * grad_unit, axis=1, keepdims=True)
    return (grad_unit - unit * radial) / norms


def combined_loss(z1, z2, k: int, l: int, lam: float,  # noqa: E741
                  pairs: Optional[PairSets] = None,
                  normalize: bool = False,
                  contrastive: bool = True):
    """L = L_cl + lam * L_cvc and its gradients into both views.

    Pairs are a constant index set while differentiating.

    Args:
        z1, z2: embeddings of the two views.
        k (int): off-diagonal positives.
        l (int): negatives.
        lam (float): weight of the consistency term, >= 0.
        pairs (PairSets): use these pairs instead of selecting from S.
        normalize (bool): row-normalize embeddings first.
        contrastive (bool): False leaves L_cl out of the objective.

    Returns:
        breakdown (LossBreakdown)
        grad_z1 (np.ndarray)
        grad_z2 (np.ndarray)
        pairs (PairSets): None when contrastive is False.
    """
    if lam < 0:
        raise ConfigError(f'lam must be non-negative, got {lam}.')
    raw1, raw2 = _matrix(z1), _matrix(z2)
    if raw1.shape != raw2.shape:
        raise ShapeError(f'Embedding shapes differ: {raw1.shape} vs '
                         f'{raw2.shape}.')
    if normalize:
        z1, norms1 = normalize_rows(raw1)
        z2, norms2 = normalize_rows(raw2)
    else:
        z1, z2 = raw1, raw2
    l_cvc, grad_z1, grad_z2 = consistency_loss(z1, z2)
    grad_z1, grad_z2 = lam * grad_z1, lam * grad_z2
    l_cl = None
    if contrastive:
        s = similarity(z1, z2)
        if pairs is None:
            pairs = select_pairs(s, k, l)
        l_cl, grad_s = contrastive_loss(s, pairs)
        grad_z1 = grad_s @ z2 + grad_z1
        grad_z2 = grad_s.T @ z1 + grad_z2
    else:
        pairs = None
    if normalize:
        grad_z1 = normalize_rows_backward(z1, norms1, grad_z1)
        grad_z2 = normalize_rows_backward(z2, norms2, grad_z2)
    return LossBreakdown(l_cl, l_cvc, lam), grad_z1, grad_z2, pairs
