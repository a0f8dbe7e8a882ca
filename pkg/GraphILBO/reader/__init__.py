# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Readers and writers of the plain-text graph directory format.

A graph directory holds `graph.edges`, `features.csv` and optionally
`labels.txt` and `split.json`.
"""

from GraphILBO.errors import DataFormatError


def read_text_lines(path):
    """Yield (line number, line) of a UTF-8 text file.

    Undecodable bytes raise DataFormatError.
    """
    try:
        with open(path, 'r', encoding='utf-8') as open_text:
            for line_no, eachline in enumerate(open_text, start=1):
                yield line_no, eachline
    except UnicodeDecodeError as err:
        raise DataFormatError(f'{path} is not valid UTF-8: {err}') from None


def read_text(path) -> str:
    """Whole UTF-8 file as one string."""
    return ''.join(eachline for _, eachline in read_text_lines(path))
