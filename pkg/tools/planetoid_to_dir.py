#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Convert the public Planetoid citation pickles into a graph directory.

What's here:

Planetoid `ind.<name>.*` files to a graph directory.
----------------------------------------------------

The public split keeps the Planetoid convention: the first len(y) nodes
train, the next 500 validate, and the nodes listed in `test.index` test
(140/500/1000 for Cora).

Functions:
  - read_planetoid
  - main

Usage:

    python tools/planetoid_to_dir.py --raw data/planetoid --name cora \
        --out data/cora --normalize-features
"""

import pickle
import sys
from argparse import ArgumentParser
from pathlib import Path

import numpy as np
import scipy.sparse as sp

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from GraphILBO.errors import DataFormatError, GraphIlboError  # noqa: E402
from GraphILBO.graph import Graph, adjacency_from_edges  # noqa: E402
from GraphILBO.reader.graph_dir import save_graph  # noqa: E402
from GraphILBO.sys_output import Output  # noqa: E402

PARTS = ('x', 'y', 'tx', 'ty', 'allx', 'ally', 'graph')
NUM_VAL = 500


def _load_part(raw: Path, name: str, part: str):
    path = raw / f'ind.{name}.{part}'
    if not path.is_file():
        raise DataFormatError(f'Planetoid file {path} does not exist.')
    with open(path, 'rb') as open_part:
        return pickle.load(open_part, encoding='latin1')


def _read_test_index(raw: Path, name: str) -> np.ndarray:
    path = raw / f'ind.{name}.test.index'
    if not path.is_file():
        raise DataFormatError(f'Planetoid file {path} does not exist.')
    return np.loadtxt(path, dtype=np.int64).ravel()


def read_planetoid(raw, name: str, normalize_features: bool = False) -> Graph:
    """Rebuild a Planetoid dataset as a Graph with the public split.

    Test nodes are stored out of order in the pickles and some Citeseer
    test ids are missing; missing ids get zero features and label 0.

    Args:
        raw: directory holding the `ind.<name>.*` files.
        name (str): dataset name, e.g. cora, citeseer, pubmed.
        normalize_features (bool): scale every feature row to sum 1.

    Returns:
        graph (Graph)
    """
    raw = Path(raw)
    x, y, tx, ty, allx, ally, adjacency_list = (
        _load_part(raw, name, part) for part in PARTS)
    test_index = _read_test_index(raw, name)
    test_range = np.sort(test_index)
    full_test = np.arange(test_range.min(), test_range.max() + 1)

    tx = sp.lil_matrix(tx)
    ty = np.asarray(ty)
    if full_test.size != test_range.size:
        padded_tx = sp.lil_matrix((full_test.size, tx.shape[1]))
        padded_tx[test_range - test_range.min(), :] = tx
        tx = padded_tx
        padded_ty = np.zeros((full_test.size, ty.shape[1]))
        padded_ty[test_range - test_range.min(), :] = ty
        ty = padded_ty

    features = sp.vstack((sp.csr_matrix(allx), sp.csr_matrix(tx))).tolil()
    features[test_index, :] = features[test_range, :]
    one_hot = np.vstack((np.asarray(ally), ty))
    one_hot[test_index, :] = one_hot[test_range, :]
    features = np.asarray(features.todense(), dtype=np.float64)
    labels = np.argmax(one_hot, axis=1)

    if normalize_features:
        row_sums = features.sum(axis=1, keepdims=True)
        features = features / np.where(row_sums > 0, row_sums, 1.0)

    n = features.shape[0]
    edges = np.array([(u, v) for u, neighbors in adjacency_list.items()
                      for v in neighbors if u != v and u < n and v < n],
                     dtype=np.int64).reshape(-1, 2)
    num_train = len(np.asarray(y))
    splits = {'train': np.arange(num_train),
              'val': np.arange(num_train, num_train + NUM_VAL),
              'test': test_range}
    return Graph(features, adjacency_from_edges(n, edges), labels, splits)


def main():
    parser = ArgumentParser(
        description='Convert Planetoid pickles into a graph directory.')
    parser.add_argument('-r', '--raw', type=str, required=True,
                        help='Directory with the ind.<name>.* files.')
    parser.add_argument('-n', '--name', type=str, default='cora',
                        help='Dataset name (cora, citeseer, pubmed).')
    parser.add_argument('-o', '--out', type=str, required=True,
                        help='Output graph directory.')
    parser.add_argument('--normalize-features', action='store_true',
                        default=False,
                        help='Row-normalize the bag-of-words features.')
    args = parser.parse_args()
    output = Output()
    try:
        graph = read_planetoid(args.raw, args.name, args.normalize_features)
        save_graph(graph, args.out)
    except GraphIlboError as err:
        output.error(f'error[{err.category}]: {err}')
        sys.exit(1)
    output.info(f'Wrote {graph.n} nodes, {graph.f} features, '
                f'{graph.num_edges} edges and split sizes '
                f'{[len(graph.splits[k]) for k in ("train", "val", "test")]} '
                f'to {args.out}.')


if __name__ == '__main__':
    main()
