# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `gradcheck` command.

What's here:

Compare analytic and finite-difference gradients.
-------------------------------------------------

Classes:
  - Gradcheck
"""

from logging import getLogger

from GraphILBO.config import TrainConfig, config_to_json, load_config
from GraphILBO.encoder import grad_check
from GraphILBO.errors import ConfigError, GradientCheckError
from GraphILBO.graph import SbmSpec, generate_sbm
from GraphILBO.reader.graph_dir import load_graph
from GraphILBO.sys_output import Output

logger = getLogger(__name__)  # pylint: disable=invalid-name


class Gradcheck(object):
    """The gradient check process.

    Raises GradientCheckError when the check fails so that the
    command returns 1.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
      - cfg (TrainConfig): resolved training config.
    """

    def __init__(self, arguments):
        """Initialize Gradcheck."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        if (self.args.data is None) == (self.args.spec is None):
            raise ConfigError('gradcheck needs exactly one of --data and '
                              '--spec.')
        self.cfg = load_config(TrainConfig, self.args.config,
                               self.args.overrides)
        self.output.info(f'Resolved config: {config_to_json(self.cfg)}')

    def process(self):
        """Call the gradient check object."""
        if self.args.data is not None:
            graph = load_graph(self.args.data)
        else:
            graph = generate_sbm(load_config(SbmSpec, self.args.spec))
        report = grad_check(graph, self.cfg, seed=self.args.seed,
                            tolerance=self.args.tolerance)
        for name, error in report.relative_errors.items():
            self.output.info(f'{name}: relative error {error:.3e}.')
        self.output.info(f'Max relative error {report.max_relative_error:.3e} '
                         f'(tolerance {report.tolerance:.0e}).')
        if not report.passed:
            raise GradientCheckError(
                f'Gradient check failed: max relative error '
                f'{report.max_relative_error:.3e} > {report.tolerance:.0e}.')
        self.output.info('Gradient check passed.')
