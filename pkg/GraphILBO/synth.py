# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `synth` command.

What's here:

Write a stochastic block model graph directory.
-----------------------------------------------

Classes:
  - Synth
"""

from logging import getLogger

from GraphILBO.config import config_to_json, load_config
from GraphILBO.graph import SbmSpec, generate_sbm
from GraphILBO.reader.graph_dir import save_graph
from GraphILBO.sys_output import Output

logger = getLogger(__name__)  # pylint: disable=invalid-name


class Synth(object):
    """The synthetic graph process.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
      - spec (SbmSpec): resolved model parameters.
    """

    def __init__(self, arguments):
        """Initialize Synth."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        self.spec = load_config(SbmSpec, self.args.spec, self.args.overrides)
        self.output.info(f'Resolved spec: {config_to_json(self.spec)}')

    def process(self):
        """Call the synthesizing object."""
        graph = generate_sbm(self.spec)
        save_graph(graph, self.args.out)
        self.output.info(f'Wrote {graph!r} to {self.args.out}.')
