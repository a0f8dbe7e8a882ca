# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Config defaults, files and overrides."""

import json

import pytest

from GraphILBO.config import TrainConfig, dump_config, load_config, \
    parse_overrides
from GraphILBO.errors import ConfigError
from GraphILBO.graph import SbmSpec
from GraphILBO.probe import ProbeConfig


def test_defaults():
    cfg = load_config(TrainConfig)
    assert cfg == TrainConfig()
    assert (cfg.d_hidden, cfg.lr, cfg.strategy) == (256, 1e-3, 'milbo')


def test_overrides_win_over_file(tmp_path):
    path = tmp_path / 'cfg.json'
    path.write_text(json.dumps({'epochs': 10, 'lam': 0.2, 'seed': 3}))
    cfg = load_config(TrainConfig, path, ['epochs=4', 'lambda=0.5'])
    assert (cfg.epochs, cfg.lam, cfg.seed) == (4, 0.5, 3)


def test_override_parsing():
    assert parse_overrides(['a=1', 'b=true', 'c=null', 'd=milbo',
                            'e=[1, 2]', 'f=x=y']) == {
        'a': 1, 'b': True, 'c': None, 'd': 'milbo', 'e': [1, 2], 'f': 'x=y'}


def test_int_widens_to_float():
    cfg = load_config(TrainConfig, overrides=['lam=1', 'k=5.0'])
    assert isinstance(cfg.lam, float) and cfg.lam == 1.0
    assert isinstance(cfg.k, int) and cfg.k == 5


@pytest.mark.parametrize('overrides, message', [
    (['nope=1'], 'Unknown'),
    (['epochs'], 'key=value'),
    (['bias=1'], 'true or false'),
    (['epochs=true'], 'boolean'),
    (['strategy=3'], 'str'),
    (['strategy=random'], 'Unknown strategy'),
    (['p_h=1.0'], 'p_h'),
    (['p_a=1.0'], 'p_a'),
    (['lam=-0.1'], 'lam'),
    (['strategy=consistency-only', 'lam=0'], 'lam > 0'),
    (['activation=tanh'], 'activation'),
    (['checkpoint_every=0'], 'checkpoint_every'),
])
def test_invalid_values(overrides, message):
    with pytest.raises(ConfigError, match=message):
        load_config(TrainConfig, overrides=overrides)


def test_file_errors(tmp_path):
    with pytest.raises(ConfigError, match='does not exist'):
        load_config(TrainConfig, tmp_path / 'missing.json')
    broken = tmp_path / 'broken.json'
    broken.write_text('{"epochs": ')
    with pytest.raises(ConfigError, match='not valid JSON'):
        load_config(TrainConfig, broken)
    listed = tmp_path / 'list.json'
    listed.write_text('[1, 2]')
    with pytest.raises(ConfigError, match='JSON object'):
        load_config(TrainConfig, listed)


def test_per_view_rates():
    cfg = load_config(TrainConfig, overrides=['p_h=0.1', 'p_a_2=0.4'])
    first, second = cfg.sample_configs()
    assert (first.p_h, first.p_a) == (0.1, 0.2)
    assert (second.p_h, second.p_a) == (0.1, 0.4)
    assert TrainConfig().sample_configs()[1] is None


def test_dump_round_trip(tmp_path):
    cfg = load_config(TrainConfig, overrides=['epochs=7', 'k=3'])
    dump_config(cfg, tmp_path / 'resolved.json')
    assert load_config(TrainConfig, tmp_path / 'resolved.json') == cfg


def test_other_config_classes(tmp_path):
    spec = load_config(SbmSpec, overrides=['blocks=[4, 4]', 'seed=2'])
    assert spec.blocks == [4, 4] and spec.seed == 2
    probe = load_config(ProbeConfig, overrides=['repeats=2'])
    assert probe.repeats == 2
    with pytest.raises(ConfigError):
        load_config(ProbeConfig, overrides=['repeats=0'])
