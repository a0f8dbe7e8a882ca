# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""View sampling: node masking and DropEdge."""

import numpy as np
import pytest
import scipy.sparse as sp

from GraphILBO.errors import ConfigError
from GraphILBO.graph import Graph, SbmSpec, adjacency_from_edges, \
    generate_sbm, normalize_adjacency
from GraphILBO.sampler import SampleConfig, epoch_rng, full_view, \
    sample_epoch_views, sample_view


def _assert_same_view(first, second):
    np.testing.assert_array_equal(first.masked_features,
                                  second.masked_features)
    np.testing.assert_array_equal(first.node_mask, second.node_mask)
    np.testing.assert_array_equal(first.edge_keep_set, second.edge_keep_set)
    assert (first.dropped_adjacency != second.dropped_adjacency).nnz == 0


def test_zero_rates_return_raw_graph(sbm_fixture):
    view = sample_view(sbm_fixture, SampleConfig(0.0, 0.0),
                       np.random.default_rng(0))
    np.testing.assert_array_equal(view.masked_features, sbm_fixture.features)
    assert (view.dropped_adjacency != normalize_adjacency(sbm_fixture)).nnz \
        == 0
    _assert_same_view(view, full_view(sbm_fixture))


def test_zero_rates_give_identical_views(sbm_fixture):
    first, second = sample_epoch_views(sbm_fixture, SampleConfig(0.0, 0.0),
                                       epoch_rng(3, 0))
    _assert_same_view(first, second)


def test_same_seed_and_epoch_are_bitwise_identical(sbm_fixture):
    cfg = SampleConfig(0.3, 0.4)
    first = sample_epoch_views(sbm_fixture, cfg, epoch_rng(42, 0))
    second = sample_epoch_views(sbm_fixture, cfg, epoch_rng(42, 0))
    for a, b in zip(first, second):
        _assert_same_view(a, b)


def test_epochs_draw_different_views(sbm_fixture):
    cfg = SampleConfig(0.3, 0.4)
    first, _ = sample_epoch_views(sbm_fixture, cfg, epoch_rng(42, 0))
    other, _ = sample_epoch_views(sbm_fixture, cfg, epoch_rng(42, 1))
    assert not np.array_equal(first.node_mask, other.node_mask)


def test_masking_is_per_node(sbm_fixture):
    view = sample_view(sbm_fixture, SampleConfig(0.5, 0.0),
                       np.random.default_rng(1))
    kept = view.node_mask.astype(bool)
    np.testing.assert_array_equal(view.masked_features[kept],
                                  sbm_fixture.features[kept])
    assert not view.masked_features[~kept].any()


def test_dropped_edges_stay_dropped_and_symmetric(sbm_fixture):
    view = sample_view(sbm_fixture, SampleConfig(0.0, 0.5),
                       np.random.default_rng(2))
    a_hat = view.dropped_adjacency.toarray()
    off_diagonal = ~np.eye(sbm_fixture.n, dtype=bool)
    assert not a_hat[(sbm_fixture.adjacency.toarray() == 0) &
                     off_diagonal].any()
    np.testing.assert_array_equal(a_hat, a_hat.T)
    assert np.all(view.edge_keep_set[:, 0] < view.edge_keep_set[:, 1])


def test_dropped_adjacency_is_renormalized(sbm_fixture):
    view = sample_view(sbm_fixture, SampleConfig(0.0, 0.5),
                       np.random.default_rng(4))
    kept = Graph(sbm_fixture.features,
                 sp.csr_matrix((np.ones(2 * len(view.edge_keep_set)),
                                (np.r_[view.edge_keep_set[:, 0],
                                       view.edge_keep_set[:, 1]],
                                 np.r_[view.edge_keep_set[:, 1],
                                       view.edge_keep_set[:, 0]])),
                               shape=(sbm_fixture.n, sbm_fixture.n)))
    np.testing.assert_allclose(view.dropped_adjacency.toarray(),
                               normalize_adjacency(kept).toarray(),
                               rtol=0, atol=1e-15)


def test_views_differ_under_drop_edge():
    g = generate_sbm(SbmSpec(blocks=[30, 30, 30], seed=0))
    cfg = SampleConfig(0.0, 0.5)
    differing = 0
    for seed in range(100):
        first, second = sample_epoch_views(g, cfg, epoch_rng(seed, 0))
        differing += not np.array_equal(first.edge_keep_set,
                                        second.edge_keep_set)
    assert differing >= 99


def test_heavy_node_drop_within_three_sigma():
    g = Graph(np.ones((1000, 1)), sp.csr_matrix((1000, 1000)))
    view = sample_view(g, SampleConfig(0.99, 0.0), np.random.default_rng(8))
    mean, sigma = 10.0, np.sqrt(1000 * 0.01 * 0.99)
    assert abs(int(view.node_mask.sum()) - mean) <= 3 * sigma


@pytest.mark.parametrize('p', [0.1, 0.5, 0.9])
def test_keep_frequencies_within_three_sigma(p):
    trials = 10000
    # A perfect matching: every node and every edge is one Bernoulli trial.
    pairs = np.arange(2 * trials).reshape(trials, 2)
    g = Graph(np.ones((2 * trials, 1)),
              adjacency_from_edges(2 * trials, pairs))
    view = sample_view(g, SampleConfig(p, p), np.random.default_rng(123))
    node_sigma = np.sqrt(2 * trials * p * (1 - p))
    assert abs(int(view.node_mask.sum()) - 2 * trials * (1 - p)) <= \
        3 * node_sigma
    edge_sigma = np.sqrt(trials * p * (1 - p))
    assert abs(len(view.edge_keep_set) - trials * (1 - p)) <= \
        3 * edge_sigma


@pytest.mark.parametrize('p_h, p_a', [(-0.1, 0.0), (0.995, 0.0),
                                      (0.0, 1.0), (0.0, -0.5)])
def test_rates_out_of_range(sbm_fixture, p_h, p_a):
    with pytest.raises(ConfigError):
        sample_view(sbm_fixture, SampleConfig(p_h, p_a),
                    np.random.default_rng(0))
