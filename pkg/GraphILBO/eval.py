# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `eval` command.

What's here:

Linear probe on an embeddings file.
-----------------------------------

Classes:
  - Eval
"""

from logging import getLogger
from pathlib import Path

from GraphILBO.config import config_to_json, load_config
from GraphILBO.probe import ProbeConfig, linear_probe
from GraphILBO.reader.graph_dir import load_graph
from GraphILBO.sys_output import Output
from GraphILBO.trainer import load_embeddings

logger = getLogger(__name__)  # pylint: disable=invalid-name


class Eval(object):
    """The evaluation process.

    The report goes to --out; per-repeat accuracies go to the same path
    with a .csv suffix.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
      - cfg (ProbeConfig): resolved probe config.
    """

    def __init__(self, arguments):
        """Initialize Eval."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        self.cfg = load_config(ProbeConfig, self.args.probe_config,
                               self.args.overrides)
        self.output.info(f'Resolved config: {config_to_json(self.cfg)}')

    def process(self):
        """Call the evaluating object."""
        graph = load_graph(self.args.data)
        embeddings = load_embeddings(self.args.embeddings)
        report = linear_probe(embeddings, graph.labels, graph.splits,
                              self.cfg, show_progress=True)
        out = Path(self.args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        report.to_json(out)
        report.write_accuracies_csv(out.with_suffix('.csv'))
        self.output.info(f'Accuracy {report.mean:.4f} +- {report.std:.4f} '
                         f'over {len(report.accuracies)} repeats.')
