# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Load and save a graph directory.

What's here:

Graph directory format.
-----------------------

Functions:
  - load_graph
  - save_graph
"""

import json
from logging import getLogger
from pathlib import Path

import numpy as np

from GraphILBO.errors import DataFormatError
from GraphILBO.graph import Graph, SPLIT_NAMES, adjacency_from_edges
from GraphILBO.reader import read_text, read_text_lines
from GraphILBO.reader.edges import EdgeReader, write_edges
from GraphILBO.reader.features import MatrixReader, write_matrix

logger = getLogger(__name__)  # pylint: disable=invalid-name

EDGES_FILE = 'graph.edges'
FEATURES_FILE = 'features.csv'
LABELS_FILE = 'labels.txt'
SPLIT_FILE = 'split.json'


def _read_labels(labels_path: Path, n: int) -> np.ndarray:
    labels = []
    for line_no, eachline in read_text_lines(labels_path):
        content = eachline.strip()
        if not content:
            continue
        try:
            label = int(content)
        except ValueError:
            label = -1
        if label < 0:
            raise DataFormatError(
                f'{labels_path}:{line_no}: label must be a non-negative '
                'integer.')
        labels.append(label)
    if len(labels) != n:
        raise DataFormatError(
            f'{labels_path} holds {len(labels)} labels for {n} nodes.')
    return np.array(labels, dtype=np.int64)


def _read_splits(split_path: Path) -> dict:
    try:
        raw = json.loads(read_text(split_path))
    except json.JSONDecodeError as err:
        raise DataFormatError(f'{split_path} is not valid JSON: {err}') \
            from None
    if not isinstance(raw, dict):
        raise DataFormatError(f'{split_path} must hold a JSON object.')
    splits = {}
    for name in SPLIT_NAMES:
        index = raw.get(name, [])
        if not isinstance(index, list) or not all(
                isinstance(i, int) and not isinstance(i, bool)
                for i in index):
            raise DataFormatError(
                f'{split_path}: `{name}` must be an array of node indices.')
        splits[name] = np.array(index, dtype=np.int64)
    return splits


def load_graph(directory) -> Graph:
    """Load and validate a graph directory.

    Args:
        directory: path holding `graph.edges` and `features.csv`, and
            optionally `labels.txt` and `split.json`.

    Returns:
        graph (Graph)
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise DataFormatError(f'{directory} is not a directory.')
    for required in (EDGES_FILE, FEATURES_FILE):
        if not (directory / required).is_file():
            raise DataFormatError(f'Missing {required} in {directory}.')
    features = MatrixReader(str(directory / FEATURES_FILE)).read_matrix()
    n = features.shape[0]
    edges = EdgeReader(str(directory / EDGES_FILE)).read_array(n)
    labels = None
    if (directory / LABELS_FILE).is_file():
        labels = _read_labels(directory / LABELS_FILE, n)
    splits = None
    if (directory / SPLIT_FILE).is_file():
        splits = _read_splits(directory / SPLIT_FILE)
    graph = Graph(features, adjacency_from_edges(n, edges), labels, splits)
    logger.debug(f'Loaded {graph!r} from {directory}.')
    return graph


def save_graph(graph: Graph, directory):
    """Write a graph directory that load_graph reads back identically."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    write_edges(directory / EDGES_FILE, graph.edges)
    write_matrix(directory / FEATURES_FILE, graph.features)
    if graph.labels is not None:
        np.savetxt(directory / LABELS_FILE, graph.labels, fmt='%d')
    if graph.splits is not None:
        with open(directory / SPLIT_FILE, 'w', encoding='utf-8') as open_split:
            json.dump({name: [int(i) for i in graph.splits[name]]
                       for name in SPLIT_NAMES}, open_split)
    logger.debug(f'Saved {graph!r} to {directory}.')
