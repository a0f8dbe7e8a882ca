#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Run the synthetic reference experiment and record its accuracies.

What's here:

Reference run on the three-block SBM.
-------------------------------------

The fixture `tests/data/sbm_reference.json` holds the exact graph, training
and probe settings, the training seeds and an accuracy floor. Running this
tool trains once per seed, measures the mean probe accuracy and, with
`--write`, stores the per-seed accuracies in the fixture so the slow test
can check that later runs reproduce them.

Functions:
  - load_reference
  - run_reference
  - main

Usage:

    python tools/sbm_reference.py --write
"""

import json
import sys
from argparse import ArgumentParser
from dataclasses import replace
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from GraphILBO.config import TrainConfig  # noqa: E402
from GraphILBO.errors import ConfigError, GraphIlboError  # noqa: E402
from GraphILBO.graph import SbmSpec, generate_sbm  # noqa: E402
from GraphILBO.probe import ProbeConfig, linear_probe  # noqa: E402
from GraphILBO.sys_output import Output  # noqa: E402
from GraphILBO.trainer import embed, train  # noqa: E402

REFERENCE = (Path(__file__).resolve().parent.parent / 'tests' / 'data' /
             'sbm_reference.json')
KEYS = ('spec', 'train', 'probe', 'seeds', 'accuracy_floor',
        'min_seeds_above_floor', 'accuracies')


def load_reference(path=REFERENCE) -> dict:
    """Read the fixture and build its configs.

    Returns:
        reference (dict): the fixture with 'spec', 'train' and 'probe'
            replaced by validated SbmSpec, TrainConfig and ProbeConfig.
    """
    with open(path, 'r', encoding='utf-8') as open_reference:
        reference = json.load(open_reference)
    missing = [key for key in KEYS if key not in reference]
    if missing:
        raise ConfigError(f'{path} lacks {", ".join(missing)}.')
    try:
        configs = {'spec': SbmSpec(**reference['spec']),
                   'train': TrainConfig(**reference['train']),
                   'probe': ProbeConfig(**reference['probe'])}
    except TypeError as err:
        raise ConfigError(f'{path}: {err}') from None
    for config in configs.values():
        config.validate()
    return {**reference, **configs}


def run_reference(reference: dict) -> list:
    """Mean probe accuracy of one training run per seed."""
    graph = generate_sbm(reference['spec'])
    accuracies = []
    for seed in reference['seeds']:
        params, _ = train(graph, replace(reference['train'], seed=seed))
        report = linear_probe(embed(graph, params), graph.labels,
                              graph.splits, reference['probe'])
        accuracies.append(report.mean)
    return accuracies


def main():
    parser = ArgumentParser(
        description='Run the SBM reference experiment.')
    parser.add_argument('-f', '--fixture', type=str, default=str(REFERENCE),
                        help='Reference fixture [default=%(default)s].')
    parser.add_argument('--write', action='store_true', default=False,
                        help='Store the accuracies in the fixture.')
    args = parser.parse_args()
    output = Output()
    try:
        reference = load_reference(args.fixture)
        accuracies = run_reference(reference)
    except GraphIlboError as err:
        output.error(err.one_line())
        sys.exit(1)
    for seed, accuracy in zip(reference['seeds'], accuracies):
        output.info(f'Seed {seed}: accuracy {accuracy:.4f}')
    if args.write:
        with open(args.fixture, 'r', encoding='utf-8') as open_reference:
            stored = json.load(open_reference)
        stored['accuracies'] = accuracies
        with open(args.fixture, 'w', encoding='utf-8') as open_reference:
            json.dump(stored, open_reference, indent=2)
            open_reference.write('\n')
        output.info(f'Wrote {len(accuracies)} accuracies to {args.fixture}.')


if __name__ == '__main__':
    main()
