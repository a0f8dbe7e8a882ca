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
"""Convert the co-purchase and co-authorship `.npz` graphs into a graph
directory.

What's here:

Amazon Computers/Photo and Coauthor CS/Physics archives to a graph directory.
----------------------------------------------------------------------------

The archives store the adjacency and the attributes as CSR triplets
(`adj_data`, `adj_indices`, `adj_indptr`, `adj_shape`, likewise `attr_*`;
some releases carry a dense `attr_matrix` instead) plus one label per node.
They come without a split, so a seeded random one is written: by default
10% of the nodes train, 10% validate and the rest test.

Functions:
  - read_npz
  - random_split
  - main

Usage:

    python tools/npz_to_dir.py --npz data/amazon_electronics_computers.npz \
        --out data/computers --seed 0
"""

import sys
from argparse import ArgumentParser
from pathlib import Path

import numpy as np
import scipy.sparse as sp

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from GraphILBO.errors import ConfigError, DataFormatError, \
    GraphIlboError  # noqa: E402
from GraphILBO.graph import Graph, adjacency_from_edges  # noqa: E402
from GraphILBO.reader.graph_dir import save_graph  # noqa: E402
from GraphILBO.sys_output import Output  # noqa: E402

TRAIN_FRACTION = 0.1
VAL_FRACTION = 0.1


def _csr(archive, prefix: str) -> sp.csr_matrix:
    keys = [f'{prefix}_{part}' for part in ('data', 'indices', 'indptr',
                                            'shape')]
    missing = [key for key in keys if key not in archive]
    if missing:
        raise DataFormatError(f'Archive lacks {", ".join(missing)}.')
    data, indices, indptr, shape = (archive[key] for key in keys)
    return sp.csr_matrix((data, indices, indptr), shape=tuple(shape))


def random_split(n: int, seed: int = 0,
                 train_fraction: float = TRAIN_FRACTION,
                 val_fraction: float = VAL_FRACTION) -> dict:
    """Seeded train/val/test split of range(n), each part sorted.

    Args:
        n (int): node count.
        seed (int): permutation seed.
        train_fraction (float): share of nodes that train.
        val_fraction (float): share of nodes that validate.

    Returns:
        splits (dict): 'train', 'val', 'test' index arrays.
    """
    if (train_fraction <= 0 or val_fraction < 0 or
            train_fraction + val_fraction >= 1):
        raise ConfigError('Split fractions must leave a non-empty train and '
                          f'test part, got {train_fraction} and '
                          f'{val_fraction}.')
    order = np.random.default_rng(seed).permutation(n)
    n_train = max(1, int(round(train_fraction * n)))
    n_val = int(round(val_fraction * n))
    if n_train + n_val >= n:
        raise ConfigError(f'{n} nodes are too few for the requested split.')
    return {'train': np.sort(order[:n_train]),
            'val': np.sort(order[n_train:n_train + n_val]),
            'test': np.sort(order[n_train + n_val:])}


def read_npz(path, seed: int = 0, train_fraction: float = TRAIN_FRACTION,
             val_fraction: float = VAL_FRACTION,
             normalize_features: bool = False) -> Graph:
    """Rebuild an `.npz` graph with a seeded random split.

    Edge direction and weights are dropped; self-loops are removed.

    Args:
        path: the `.npz` archive.
        seed (int): split seed.
        train_fraction (float): share of nodes that train.
        val_fraction (float): share of nodes that validate.
        normalize_features (bool): scale every feature row to sum 1.

    Returns:
        graph (Graph)
    """
    path = Path(path)
    if not path.is_file():
        raise DataFormatError(f'Archive {path} does not exist.')
    with np.load(path, allow_pickle=False) as archive:
        adjacency = _csr(archive, 'adj')
        if 'attr_matrix' in archive:
            features = np.asarray(archive['attr_matrix'], dtype=np.float64)
        else:
            features = np.asarray(_csr(archive, 'attr').todense(),
                                  dtype=np.float64)
        if 'labels' not in archive:
            raise DataFormatError(f'Archive {path} has no labels.')
        labels = np.asarray(archive['labels'], dtype=np.int64).ravel()

    n = features.shape[0]
    if adjacency.shape != (n, n) or labels.shape != (n,):
        raise DataFormatError(f'Archive {path}: adjacency {adjacency.shape}, '
                              f'{n} feature rows and {labels.size} labels '
                              'disagree.')
    if normalize_features:
        row_sums = features.sum(axis=1, keepdims=True)
        features = features / np.where(row_sums > 0, row_sums, 1.0)

    binary = (adjacency != 0).astype(np.float64)
    upper = sp.triu(binary + binary.T, k=1).tocoo()
    edges = np.column_stack((upper.row, upper.col)).astype(np.int64)
    splits = random_split(n, seed, train_fraction, val_fraction)
    return Graph(features, adjacency_from_edges(n, edges), labels, splits)


def main():
    parser = ArgumentParser(
        description='Convert an .npz graph archive into a graph directory.')
    parser.add_argument('-z', '--npz', type=str, required=True,
                        help='The .npz archive.')
    parser.add_argument('-o', '--out', type=str, required=True,
                        help='Output graph directory.')
    parser.add_argument('-s', '--seed', type=int, default=0,
                        help='Split seed [default=0].')
    parser.add_argument('--train-fraction', type=float,
                        default=TRAIN_FRACTION,
                        help=f'Share of training nodes '
                             f'[default={TRAIN_FRACTION}].')
    parser.add_argument('--val-fraction', type=float, default=VAL_FRACTION,
                        help=f'Share of validation nodes '
                             f'[default={VAL_FRACTION}].')
    parser.add_argument('--normalize-features', action='store_true',
                        default=False,
                        help='Row-normalize the bag-of-words features.')
    args = parser.parse_args()
    output = Output()
    try:
        graph = read_npz(args.npz, args.seed, args.train_fraction,
                         args.val_fraction, args.normalize_features)
        save_graph(graph, args.out)
    except GraphIlboError as err:
        output.error(err.one_line())
        sys.exit(1)
    output.info(f'Wrote {graph.n} nodes, {graph.f} features, '
                f'{graph.num_edges} edges and split sizes '
                f'{[len(graph.splits[k]) for k in ("train", "val", "test")]} '
                f'to {args.out}.')


if __name__ == '__main__':
    main()
