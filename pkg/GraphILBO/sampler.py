# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Sample subset views of a graph.

What's here:

Node-feature masking and edge dropping.
---------------------------------------

Classes:
  - SampleConfig
  - ViewSample

Functions:
  - epoch_rng
  - sample_view
  - sample_epoch_views
  - full_view
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from GraphILBO.errors import ConfigError
from GraphILBO.graph import (Graph, NormalizedAdjacency, adjacency_from_edges,
                             normalize_adjacency, renormalize)

RNG_ALGORITHM = 'PCG64'


@dataclass
class SampleConfig(object):
    """Drop rates of one view.

    Attributes:
      - p_h (float): node-feature drop rate in [0, 0.99].
      - p_a (float): edge drop rate in [0, 1).
      - seed (int): random seed.
    """

    p_h: float = 0.0
    p_a: float = 0.0
    seed: int = 0

    def validate(self):
        if not 0.0 <= self.p_h <= 0.99:
            raise ConfigError(f'p_h={self.p_h} outside [0, 0.99].')
        if not 0.0 <= self.p_a < 1.0:
            raise ConfigError(f'p_a={self.p_a} outside [0, 1).')


class ViewSample(object):
    """One sampled subset of the graph.

    Attributes:
      - masked_features (np.ndarray): features with dropped rows zeroed.
      - dropped_adjacency (NormalizedAdjacency): renormalized kept edges.
      - node_mask (np.ndarray): 0/1 int8 per node.
      - edge_keep_set (np.ndarray): (m', 2) kept undirected edges, u < v.
    """

    def __init__(self,
                 masked_features: np.ndarray,
                 dropped_adjacency: NormalizedAdjacency,
                 node_mask: np.ndarray,
                 edge_keep_set: np.ndarray):
        self.masked_features = masked_features
        self.dropped_adjacency = dropped_adjacency
        self.node_mask = node_mask
        self.edge_keep_set = edge_keep_set

    @property
    def n(self) -> int:
        return self.masked_features.shape[0]


def epoch_rng(seed: int, epoch: int, stream: int = 0) -> np.random.Generator:
    """Generator whose draws depend only on (seed, epoch, stream)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([seed, epoch, stream])))


def sample_view(g: Graph,
                cfg: SampleConfig,
                rng: np.random.Generator) -> ViewSample:
    """Draw one view: a node mask first, then an edge mask.

    Every node keeps its whole feature row with probability 1 - p_h and
    every undirected edge survives with probability 1 - p_a.

    Args:
        g (Graph): source graph.
        cfg (SampleConfig): drop rates.
        rng (np.random.Generator): random stream, advanced in place.

    Returns:
        view (ViewSample)
    """
    cfg.validate()
    node_mask = (rng.random(g.n) >= cfg.p_h).astype(np.int8)
    edges = g.edges
    edge_keep = rng.random(edges.shape[0]) >= cfg.p_a
    kept = edges[edge_keep]
    if edge_keep.all():
        adjacency = normalize_adjacency(g)
    else:
        adjacency = renormalize(adjacency_from_edges(g.n, kept))
    masked = g.features * node_mask[:, None]
    return ViewSample(masked, adjacency, node_mask, kept)


def sample_epoch_views(g: Graph,
                       cfg: SampleConfig,
                       rng: np.random.Generator,
                       cfg_second: Optional[SampleConfig] = None):
    """Draw the two views of one epoch from a single stream.

    Args:
        g (Graph): source graph.
        cfg (SampleConfig): drop rates of the first view.
        rng (np.random.Generator): the epoch stream.
        cfg_second (SampleConfig): drop rates of the second view,
            defaults to cfg.

    Returns:
        views (tuple[ViewSample, ViewSample])
    """
    first = sample_view(g, cfg, rng)
    second = sample_view(g, cfg_second or cfg, rng)
    return first, second


def full_view(g: Graph) -> ViewSample:
    """The unsampled view of the raw graph."""
    return ViewSample(g.features * np.ones((g.n, 1), dtype=np.int8),
                      normalize_adjacency(g),
                      np.ones(g.n, dtype=np.int8),
                      g.edges)
