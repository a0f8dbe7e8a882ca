# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent an attributed undirected graph.

What's here:

Graph data model.
-----------------

Classes:
  - Graph
  - SbmSpec

Adjacency helpers and synthetic graphs.
---------------------------------------

Functions:
  - adjacency_from_edges
  - normalize_adjacency
  - renormalize
  - generate_sbm
"""

from dataclasses import dataclass, field
from logging import getLogger
from typing import Optional

import numpy as np
import scipy.sparse as sp

from GraphILBO.errors import ConfigError, DataFormatError

logger = getLogger(__name__)  # pylint: disable=invalid-name

SPLIT_NAMES = ('train', 'val', 'test')

# D^{-1/2} (A + I) D^{-1/2}, stored as a CSR matrix.
NormalizedAdjacency = sp.csr_matrix


class Graph(object):
    """The raw dataset: node features plus a symmetric 0/1 adjacency.

    Attributes:
      - features (np.ndarray): n x f float64 feature matrix.
      - adjacency (sp.csr_matrix): n x n symmetric 0/1 matrix, zero diagonal.
      - labels (np.ndarray): optional length-n class ids.
      - splits (dict): optional 'train'/'val'/'test' index arrays.
    """

    def __init__(self,
                 features,
                 adjacency,
                 labels=None,
                 splits: Optional[dict] = None):
        """Initialize Graph and validate it.

        Args:
            features: n x f array-like of finite values.
            adjacency: n x n sparse or dense 0/1 symmetric matrix.
            labels: optional length-n sequence of non-negative ints.
            splits (dict): optional mapping of split name to indices.
        """
        self.features = np.ascontiguousarray(features, dtype=np.float64)
        adjacency = sp.csr_matrix(adjacency, dtype=np.float64)
        adjacency.eliminate_zeros()
        adjacency.sum_duplicates()
        adjacency.sort_indices()
        self.adjacency = adjacency
        self.labels = (None if labels is None
                       else np.asarray(labels, dtype=np.int64))
        self.splits = None
        if splits is not None:
            self.splits = {name: np.asarray(splits.get(name, []),
                                            dtype=np.int64).ravel()
                           for name in SPLIT_NAMES}
        self.validate()

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def f(self) -> int:
        return self.features.shape[1]

    @property
    def edges(self) -> np.ndarray:
        """Undirected edges as (u, v) rows with u < v, row-major order."""
        upper = sp.triu(self.adjacency, k=1, format='csr')
        upper.sort_indices()
        coo = upper.tocoo()
        return np.column_stack((coo.row, coo.col)).astype(np.int64)

    @property
    def num_edges(self) -> int:
        return int(sp.triu(self.adjacency, k=1).nnz)

    def validate(self):
        """Check the graph invariants, raise DataFormatError otherwise."""
        if self.features.ndim != 2:
            raise DataFormatError('Feature matrix must be two-dimensional.')
        if not np.all(np.isfinite(self.features)):
            row = int(np.argwhere(~np.isfinite(self.features))[0, 0])
            raise DataFormatError(
                f'Non-finite feature value in row {row}.')
        n = self.n
        if self.adjacency.shape != (n, n):
            raise DataFormatError(
                f'Adjacency shape {self.adjacency.shape} does not match '
                f'{n} feature rows.')
        if self.adjacency.nnz and not np.all(self.adjacency.data == 1.0):
            raise DataFormatError('Adjacency must be a 0/1 matrix.')
        if np.any(self.adjacency.diagonal() != 0):
            raise DataFormatError('Adjacency must not store self-loops.')
        if (self.adjacency != self.adjacency.T).nnz:
            raise DataFormatError('Adjacency must be symmetric.')
        if self.labels is not None:
            if self.labels.shape != (n,):
                raise DataFormatError(
                    f'Expected {n} labels, got {self.labels.size}.')
            if self.labels.size and self.labels.min() < 0:
                raise DataFormatError('Labels must be non-negative.')
        if self.splits is not None:
            seen = np.zeros(n, dtype=bool)
            for name in SPLIT_NAMES:
                index = self.splits[name]
                if index.size and (index.min() < 0 or index.max() >= n):
                    raise DataFormatError(
                        f'Split {name} has node index out of range [0,{n}).')
                if np.unique(index).size != index.size or seen[index].any():
                    raise DataFormatError(
                        f'Split {name} overlaps another split or repeats '
                        'an index.')
                seen[index] = True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if (self.features.shape != other.features.shape or
                not np.array_equal(self.features, other.features)):
            return False
        if (self.adjacency.shape != other.adjacency.shape or
                (self.adjacency != other.adjacency).nnz):
            return False
        if (self.labels is None) != (other.labels is None):
            return False
        if self.labels is not None and not np.array_equal(self.labels,
                                                          other.labels):
            return False
        if (self.splits is None) != (other.splits is None):
            return False
        if self.splits is not None:
            return all(np.array_equal(self.splits[name], other.splits[name])
                       for name in SPLIT_NAMES)
        return True

    def __repr__(self):
        return (f'Graph(n={self.n}, f={self.f}, edges={self.num_edges}, '
                f'labels={self.labels is not None}, '
                f'splits={self.splits is not None})')


@dataclass
class SbmSpec(object):
    """Stochastic block model parameters.

    Attributes:
      - blocks (list): block sizes.
      - p_in (float): intra-block edge probability.
      - p_out (float): inter-block edge probability.
      - feature_noise (float): std of Gaussian noise on one-hot features.
      - seed (int): random seed.
    """

    blocks: list = field(default_factory=lambda: [30, 30, 30])
    p_in: float = 0.3
    p_out: float = 0.02
    feature_noise: float = 0.5
    seed: int = 0

    def validate(self):
        if not self.blocks or any(
                isinstance(b, bool) or not isinstance(b, int) or b <= 0
                for b in self.blocks):
            raise ConfigError('SBM block sizes must be positive.')
        if not 0.0 <= self.p_out <= self.p_in <= 1.0:
            raise ConfigError('SBM needs 0 <= p_out <= p_in <= 1.')
        if self.feature_noise < 0:
            raise ConfigError('SBM feature_noise must be non-negative.')


def adjacency_from_edges(n: int, edges) -> sp.csr_matrix:
    """Build the symmetric 0/1 adjacency of undirected edges.

    Duplicate and reversed pairs collapse into one edge.

    Args:
        n (int): node count.
        edges: (m, 2) integer array of node pairs, no self-loops.

    Returns:
        adjacency (sp.csr_matrix)
    """
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if edges.size:
        canonical = np.unique(np.column_stack((edges.min(axis=1),
                                               edges.max(axis=1))), axis=0)
    else:
        canonical = edges
    rows = np.concatenate((canonical[:, 0], canonical[:, 1]))
    cols = np.concatenate((canonical[:, 1], canonical[:, 0]))
    adjacency = sp.csr_matrix(
        (np.ones(rows.size, dtype=np.float64), (rows, cols)), shape=(n, n))
    adjacency.sort_indices()
    return adjacency


def renormalize(adjacency: sp.spmatrix) -> NormalizedAdjacency:
    """Compute D^{-1/2} (A + I) D^{-1/2} with D the degrees of A + I."""
    n = adjacency.shape[0]
    a_tilde = (sp.csr_matrix(adjacency, dtype=np.float64) +
               sp.identity(n, dtype=np.float64, format='csr')).tocoo()
    degree = np.bincount(a_tilde.row, weights=a_tilde.data, minlength=n)
    d_inv_sqrt = 1.0 / np.sqrt(degree)
    data = a_tilde.data * d_inv_sqrt[a_tilde.row] * d_inv_sqrt[a_tilde.col]
    normalized = sp.csr_matrix((data, (a_tilde.row, a_tilde.col)),
                               shape=(n, n))
    normalized.sort_indices()
    return normalized


def normalize_adjacency(g: Graph) -> NormalizedAdjacency:
    """Return the GCN propagation matrix of the graph."""
    return renormalize(g.adjacency)


def generate_sbm(spec: SbmSpec) -> Graph:
    """Sample a stochastic block model graph.

    Labels are block ids, features are one-hot block ids plus Gaussian
    noise, and an 80/20 train/test split is attached.

    Args:
        spec (SbmSpec): model parameters.

    Returns:
        graph (Graph)
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    blocks = [int(b) for b in spec.blocks]
    labels = np.repeat(np.arange(len(blocks)), blocks)
    n = labels.size
    rows, cols = np.triu_indices(n, k=1)
    probability = np.where(labels[rows] == labels[cols],
                           spec.p_in, spec.p_out)
    keep = rng.random(rows.size) < probability
    adjacency = adjacency_from_edges(
        n, np.column_stack((rows[keep], cols[keep])))
    features = (np.eye(len(blocks))[labels] +
                spec.feature_noise * rng.standard_normal((n, len(blocks))))
    order = rng.permutation(n)
    n_train = (4 * n) // 5
    splits = {'train': np.sort(order[:n_train]),
              'val': np.array([], dtype=np.int64),
              'test': np.sort(order[n_train:])}
    logger.debug(f'Generated SBM with {n} nodes and {int(keep.sum())} edges.')
    return Graph(features, adjacency, labels, splits)
