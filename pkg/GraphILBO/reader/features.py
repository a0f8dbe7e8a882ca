# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Read and write dense CSV matrices (`features.csv`, embeddings).

What's here:

CSV matrix reader.
------------------

Classes:
  - MatrixReader

Functions:
  - write_matrix
"""

import numpy as np

from GraphILBO.errors import DataFormatError
from GraphILBO.reader import read_text_lines


class MatrixReader(object):
    """Parse a comma-separated matrix of finite decimal values.

    Attributes:
      - matrix_file (str): csv path.
    """

    def __init__(self, matrix_file: str):
        self.matrix_file = matrix_file

    def read_rows(self):
        """Yield (row values, line number) for every non-blank line."""
        for line_no, eachline in read_text_lines(self.matrix_file):
            content = eachline.strip()
            if not content:
                continue
            try:
                row = [float(value) for value in content.split(',')]
            except ValueError:
                raise DataFormatError(
                    f'{self.matrix_file}:{line_no}: values must be '
                    'decimal numbers.') from None
            yield row, line_no

    def read_matrix(self) -> np.ndarray:
        """Read the whole matrix, rejecting ragged and non-finite rows."""
        rows, width = [], None
        for row, line_no in self.read_rows():
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DataFormatError(
                    f'{self.matrix_file}:{line_no}: ragged row with '
                    f'{len(row)} values, expected {width}.')
            if not np.all(np.isfinite(row)):
                raise DataFormatError(
                    f'{self.matrix_file}:{line_no}: non-finite value.')
            rows.append(row)
        if not rows:
            raise DataFormatError(f'{self.matrix_file} holds no rows.')
        return np.array(rows, dtype=np.float64)


def write_matrix(matrix_file, matrix: np.ndarray):
    """Write a matrix with 17 significant digits, which round-trips."""
    np.savetxt(matrix_file, np.asarray(matrix, dtype=np.float64),
               fmt='%.17g', delimiter=',')
