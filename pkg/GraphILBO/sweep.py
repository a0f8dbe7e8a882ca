# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the `sweep` command.

What's here:

Hyperparameter sensitivity grid.
--------------------------------

Classes:
  - Sweep

Functions:
  - load_grid
  - grid_cells
  - run_cell
  - write_sweep_csv
"""

import csv
import json
from dataclasses import asdict, replace
from itertools import product
from logging import getLogger
from multiprocessing import Pool
from pathlib import Path

from rich.progress import Progress

from GraphILBO.config import TrainConfig, config_to_json, load_config
from GraphILBO.errors import ConfigError
from GraphILBO.probe import ProbeConfig, linear_probe
from GraphILBO.reader.graph_dir import load_graph
from GraphILBO.sys_output import Output
from GraphILBO.trainer import embed, train

logger = getLogger(__name__)  # pylint: disable=invalid-name

# Column order of the csv and nesting order of the grid.
SWEEP_KEYS = ('lam', 'p_h', 'p_a', 'k', 'l')


def load_grid(path) -> dict:
    """Read a sweep grid, keys in SWEEP_KEYS order.

    `lambda` is accepted for `lam`.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f'Grid file {path} does not exist.')
    try:
        with open(path, 'r', encoding='utf-8') as open_grid:
            loaded = json.load(open_grid)
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        raise ConfigError(f'{path} is not valid JSON: {err}') from None
    if not isinstance(loaded, dict) or not loaded:
        raise ConfigError(f'{path} must hold a non-empty JSON object.')
    grid = {}
    for key, values in loaded.items():
        name = 'lam' if key == 'lambda' else key
        if name not in SWEEP_KEYS:
            raise ConfigError(f'Cannot sweep over {key!r}, expected some of '
                              f'{", ".join(SWEEP_KEYS)}.')
        if not isinstance(values, list) or not values:
            raise ConfigError(f'Grid values of {key!r} must be a non-empty '
                              'list.')
        grid[name] = values
    return {key: grid[key] for key in SWEEP_KEYS if key in grid}


def grid_cells(grid: dict) -> list:
    """Cartesian product of the grid as a list of dicts."""
    keys = list(grid)
    return [dict(zip(keys, values)) for values in product(*grid.values())]


def run_cell(job):
    """Train and probe one grid cell.

    Module-level so that Pool can pickle it.

    Args:
        job (tuple): graph, TrainConfig fields, ProbeConfig fields, cell.

    Returns:
        cell (dict): the cell values plus mean and std.
    """
    graph, train_fields, probe_fields, cell = job
    cfg = replace(TrainConfig(**train_fields), **cell)
    cfg.validate()
    params, _ = train(graph, cfg)
    report = linear_probe(embed(graph, params), graph.labels, graph.splits,
                          ProbeConfig(**probe_fields))
    logger.debug(f'Cell {cell}: {report.mean} +- {report.std}.')
    return {**cell, 'mean': report.mean, 'std': report.std}


def write_sweep_csv(path, keys, rows):
    """One row per cell: the swept keys, then mean and std."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as open_csv:
        writer = csv.writer(open_csv)
        writer.writerow(list(keys) + ['mean', 'std'])
        for row in rows:
            writer.writerow([row[key] for key in keys] +
                            [repr(row['mean']), repr(row['std'])])


class Sweep(object):
    """The sweep process.

    Every cell trains from the same seed; only the swept keys differ.

    Attributes:
      - args: Arguments.
      - output: Output info, warning and error.
      - grid (dict): swept key -> values.
      - cfg (TrainConfig): base training config.
      - probe_cfg (ProbeConfig): probe config.
    """

    def __init__(self, arguments):
        """Initialize Sweep."""
        self.args = arguments
        self.output = Output()
        self.output.info(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        logger.debug(
            f'Initializing {self.__class__.__name__}: (args: {arguments}.')
        if self.args.threads < 1:
            raise ConfigError('--threads must be at least 1.')
        self.grid = load_grid(self.args.grid)
        self.cfg = load_config(TrainConfig, self.args.config,
                               self.args.overrides)
        self.cfg.log_path = None
        self.cfg.checkpoint_path = None
        self.probe_cfg = load_config(ProbeConfig, self.args.probe_config)
        self.output.info(f'Resolved config: {config_to_json(self.cfg)}')
        self.output.info(f'Grid: {json.dumps(self.grid)}')

    def process(self):
        """Call the sweeping object."""
        graph = load_graph(self.args.data)
        cells = grid_cells(self.grid)
        for cell in cells:
            replace(self.cfg, **cell).validate()
        jobs = [(graph, asdict(self.cfg), asdict(self.probe_cfg), cell)
                for cell in cells]
        threads = min(self.args.threads, len(jobs))
        rows = []
        with Pool(processes=threads) as pool, Progress() as progress:
            task = progress.add_task(
                f'[green]INFO    [cyan]Sweeping {len(jobs)} cells...',
                total=len(jobs))
            for row in pool.imap(run_cell, jobs):
                rows.append(row)
                progress.advance(task)
        write_sweep_csv(self.args.out, list(self.grid), rows)
        self.output.info(f'Wrote {len(rows)} cells to {self.args.out}.')
