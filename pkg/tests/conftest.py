# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Shared fixtures: tiny graphs, the SBM fixture and data directories."""

import json

import numpy as np
import pytest

from GraphILBO.config import TrainConfig
from GraphILBO.graph import Graph, SbmSpec, adjacency_from_edges, \
    generate_sbm
from GraphILBO.reader.graph_dir import save_graph


def write_graph_dir(directory, edge_lines, feature_rows, labels=None,
                    splits=None):
    """Write a graph directory from raw text pieces."""
    directory.mkdir(parents=True, exist_ok=True)
    (directory / 'graph.edges').write_text(
        ''.join(f'{line}\n' for line in edge_lines))
    (directory / 'features.csv').write_text(
        ''.join(','.join(str(v) for v in row) + '\n'
                for row in feature_rows))
    if labels is not None:
        (directory / 'labels.txt').write_text(
            ''.join(f'{label}\n' for label in labels))
    if splits is not None:
        (directory / 'split.json').write_text(json.dumps(splits))
    return directory


@pytest.fixture
def two_node_dir(tmp_path):
    return write_graph_dir(tmp_path / 'two', ['0 1'], [[1, 0], [0, 1]])


@pytest.fixture
def path_graph():
    """0 - 1 - 2 with random features."""
    rng = np.random.default_rng(11)
    return Graph(rng.standard_normal((3, 4)),
                 adjacency_from_edges(3, [(0, 1), (1, 2)]))


@pytest.fixture(scope='session')
def tiny_sbm():
    """10 nodes in two blocks, the gradient-check fixture."""
    return generate_sbm(SbmSpec(blocks=[5, 5], p_in=0.8, p_out=0.1,
                                feature_noise=0.5, seed=3))


@pytest.fixture(scope='session')
def sbm_fixture():
    """90 nodes in three blocks of 30."""
    return generate_sbm(SbmSpec(blocks=[30, 30, 30], p_in=0.3, p_out=0.02,
                                feature_noise=0.5, seed=0))


@pytest.fixture
def small_cfg():
    return TrainConfig(d_hidden=8, d_out=8, k=5, l=5, lam=0.3, epochs=6,
                       checkpoint_every=2, lr=1e-2, seed=1)


@pytest.fixture
def sbm_dir(tmp_path, tiny_sbm):
    directory = tmp_path / 'sbm'
    save_graph(tiny_sbm, directory)
    return directory
