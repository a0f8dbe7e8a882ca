# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Read and write `graph.edges` files.

What's here:

Edge list reader.
-----------------

Classes:
  - EdgeReader

Functions:
  - write_edges
"""

from pathlib import Path

import numpy as np

from GraphILBO.errors import DataFormatError
from GraphILBO.reader import read_text_lines


class EdgeReader(object):
    """Iterate over the `u v` pairs of an edge list.

    Blank lines are skipped and `#` starts a comment.

    Attributes:
      - edge_file (str): edge list path.
    """

    def __init__(self, edge_file: str):
        self.edge_file = edge_file

    def read_edges(self):
        """Yield (u, v, line number) for every edge line."""
        for line_no, eachline in read_text_lines(self.edge_file):
            content = eachline.split('#', 1)[0].strip()
            if not content:
                continue
            spline = content.split()
            if len(spline) != 2:
                raise DataFormatError(
                    f'{self.edge_file}:{line_no}: expected two node ids, '
                    f'got {len(spline)} fields.')
            try:
                u, v = int(spline[0]), int(spline[1])
            except ValueError:
                raise DataFormatError(
                    f'{self.edge_file}:{line_no}: node ids must be '
                    'decimal integers.') from None
            yield u, v, line_no

    def read_array(self, n: int) -> np.ndarray:
        """Read all edges checked against node count n.

        Returns:
            edges (np.ndarray): (m, 2) array, possibly with duplicates.
        """
        edges = []
        for u, v, line_no in self.read_edges():
            if not (0 <= u < n and 0 <= v < n):
                raise DataFormatError(
                    f'{self.edge_file}:{line_no}: node index out of range '
                    f'[0,{n}).')
            if u == v:
                raise DataFormatError(
                    f'{self.edge_file}:{line_no}: self-loop {u} {v} is not '
                    'allowed.')
            edges.append((u, v))
        return np.array(edges, dtype=np.int64).reshape(-1, 2)


def write_edges(edge_file, edges: np.ndarray):
    """Write undirected edges one `u v` pair per line."""
    with open(Path(edge_file), 'w', encoding='utf-8') as open_edges:
        for u, v in edges:
            open_edges.write(f'{int(u)} {int(v)}\n')
