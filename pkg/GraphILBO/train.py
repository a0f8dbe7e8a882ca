# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `train` command.

What's here:

Train the encoder on a graph directory.
---------------------------------------

Classes:
  - Train
"""

from logging import getLogger
from pathlib import Path

from GraphILBO.config import TrainConfig, config_to_json, dump_config, \
    load_config
from GraphILBO.probe import ProbeConfig, linear_probe
from GraphILBO.reader.graph_dir import load_graph
from GraphILBO.sys_output import Output
from GraphILBO.trainer import embed, save_embeddings, train

logger = getLogger(__name__)  # pylint: disable=invalid-name

CHECKPOINT_FILE = 'checkpoint.h5'
LOG_FILE = 'train_log.jsonl'
EMBEDDINGS_FILE = 'embeddings.csv'
RESOLVED_CONFIG_FILE = 'resolved_config.json'
REPORT_FILE = 'eval_report.json'


class Train(object):
    """The train process.

    Writes checkpoint.h5, train_log.jsonl, embeddings.csv and
    resolved_config.json into the output folder.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
      - out_dir (Path): output folder.
      - cfg (TrainConfig): resolved training config.
    """

    def __init__(self, arguments):
        """Initialize Train."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        self.out_dir = Path(self.args.out)
        self.cfg = load_config(TrainConfig, self.args.config,
                               self.args.overrides)
        if self.cfg.log_path is None:
            self.cfg.log_path = str(self.out_dir / LOG_FILE)
        if self.cfg.checkpoint_path is None:
            self.cfg.checkpoint_path = str(self.out_dir / CHECKPOINT_FILE)
        self.probe_cfg = None
        if self.args.evaluate:
            self.probe_cfg = load_config(ProbeConfig, self.args.probe_config)
        self.output.info(f'Resolved config: {config_to_json(self.cfg)}')

    def process(self):
        """Call the training object."""
        self.output.info('Starting training Process.')
        logger.debug('Starting training Process.')
        graph = load_graph(self.args.data)
        self.output.info(f'Loaded {graph!r}.')
        self.out_dir.mkdir(parents=True, exist_ok=True)
        dump_config(self.cfg, self.out_dir / RESOLVED_CONFIG_FILE)
        params, records = train(graph, self.cfg,
                                resume_from=self.args.resume,
                                show_progress=True)
        if records:
            last = records[-1]
            self.output.info(f'Epoch {last.epoch}: total loss {last.total}.')
        embeddings = embed(graph, params)
        save_embeddings(self.out_dir / EMBEDDINGS_FILE, embeddings)
        if self.probe_cfg is not None:
            report = linear_probe(embeddings, graph.labels, graph.splits,
                                  self.probe_cfg, show_progress=True)
            report.to_json(self.out_dir / REPORT_FILE)
            self.output.info(f'Probe accuracy {report.mean:.4f} '
                             f'+- {report.std:.4f}.')
        self.output.info('Completed training Process.')
        logger.debug('Completed training Process.')
