# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `embed` command.

What's here:

Export embeddings of a trained checkpoint.
------------------------------------------

Classes:
  - Embed
"""

from logging import getLogger

from GraphILBO.checkpoint import load_checkpoint
from GraphILBO.errors import ShapeError
from GraphILBO.reader.graph_dir import load_graph
from GraphILBO.sys_output import Output
from GraphILBO.trainer import embed, save_embeddings

logger = getLogger(__name__)  # pylint: disable=invalid-name


class Embed(object):
    """The embed process.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
    """

    def __init__(self, arguments):
        """Initialize Embed."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')

    def process(self):
        """Call the embedding object."""
        graph = load_graph(self.args.data)
        checkpoint = load_checkpoint(self.args.checkpoint)
        self.output.info(f'Checkpoint at epoch {checkpoint.epoch}, config: '
                         f'{checkpoint.config}')
        if checkpoint.params.f_dim != graph.f:
            raise ShapeError(f'Checkpoint expects {checkpoint.params.f_dim} '
                             f'features, graph has {graph.f}.')
        embeddings = embed(graph, checkpoint.params)
        save_embeddings(self.args.out, embeddings)
        self.output.info(f'Wrote {embeddings.shape[0]} x '
                         f'{embeddings.shape[1]} embeddings to '
                         f'{self.args.out}.')
