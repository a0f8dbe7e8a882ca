# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the training configuration and config-file handling.

What's here:

Training hyperparameters.
-------------------------

Classes:
  - TrainConfig

Defaults < JSON file < `--set key=value` merging.
-------------------------------------------------

Functions:
  - parse_overrides
  - load_config
  - dump_config
"""

import json
from dataclasses import asdict, dataclass, fields
from logging import getLogger
from pathlib import Path
from typing import Optional, Union, get_args, get_origin, get_type_hints

from GraphILBO.errors import ConfigError
from GraphILBO.sampler import SampleConfig

logger = getLogger(__name__)  # pylint: disable=invalid-name

STRATEGIES = ('milbo', 'shuffling', 'consistency-only')
KEY_ALIASES = {'lambda': 'lam'}


@dataclass
class TrainConfig(object):
    """All hyperparameters of a training run.

    k and l are absolute pair counts; when unset they derive from
    k_per_node and l_per_node times the node count.
    """

    p_h: float = 0.2
    p_a: float = 0.2
    p_h_2: Optional[float] = None
    p_a_2: Optional[float] = None
    lam: float = 0.3
    k: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    k_per_node: float = 1.0
    l_per_node: float = 5.0
    d_hidden: int = 256
    d_out: int = 256
    activation: str = 'relu'
    bias: bool = False
    normalize_embeddings: bool = False
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    epochs: int = 500
    checkpoint_every: int = 50
    seed: int = 0
    strategy: str = 'milbo'
    log_path: Optional[str] = None
    checkpoint_path: Optional[str] = None

    def validate(self):
        self.sample_configs()
        if self.lam < 0:
            raise ConfigError(f'lam must be non-negative, got {self.lam}.')
        if self.strategy not in STRATEGIES:
            raise ConfigError(f'Unknown strategy {self.strategy!r}, expected '
                              f'one of {", ".join(STRATEGIES)}.')
        if self.strategy == 'consistency-only' and self.lam <= 0:
            raise ConfigError('consistency-only needs lam > 0.')
        for name in ('k', 'l'):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ConfigError(f'{name} must be non-negative.')
        if self.k_per_node < 0 or self.l_per_node < 0:
            raise ConfigError('Pair multipliers must be non-negative.')
        if min(self.d_hidden, self.d_out) <= 0:
            raise ConfigError('Encoder widths must be positive.')
        if self.activation not in ('relu', 'prelu'):
            raise ConfigError(f'Unknown activation {self.activation!r}.')
        if self.lr <= 0:
            raise ConfigError('lr must be positive.')
        if not (0 <= self.beta1 < 1 and 0 <= self.beta2 < 1 and
                self.eps > 0):
            raise ConfigError('Adam needs beta1, beta2 in [0, 1), eps > 0.')
        if self.epochs < 0:
            raise ConfigError('epochs must be non-negative.')
        if self.checkpoint_every < 1:
            raise ConfigError('checkpoint_every must be at least 1.')

    def sample_configs(self):
        """Drop rates of the two views; the second is None when shared."""
        first = SampleConfig(self.p_h, self.p_a, self.seed)
        second = None
        if self.p_h_2 is not None or self.p_a_2 is not None:
            second = SampleConfig(
                self.p_h if self.p_h_2 is None else self.p_h_2,
                self.p_a if self.p_a_2 is None else self.p_a_2,
                self.seed)
        first.validate()
        if second is not None:
            second.validate()
        return first, second


def _coerce(cls, name: str, value, hint):
    """Check value against a field type hint, widening int to float."""
    if get_origin(hint) is Union:
        options = [arg for arg in get_args(hint) if arg is not type(None)]
        if value is None:
            return None
        return _coerce(cls, name, value, options[0])
    if hint is float and isinstance(value, int) and \
            not isinstance(value, bool):
        return float(value)
    if hint is int and isinstance(value, float) and value.is_integer():
        return int(value)
    expected = get_origin(hint) or hint
    if expected is bool and not isinstance(value, bool):
        raise ConfigError(f'{cls.__name__}.{name} must be true or false.')
    if expected is not bool and isinstance(value, bool):
        raise ConfigError(f'{cls.__name__}.{name} must be {hint}, got a '
                          'boolean.')
    if not isinstance(value, expected):
        raise ConfigError(f'{cls.__name__}.{name} must be '
                          f'{getattr(expected, "__name__", expected)}, got '
                          f'{value!r}.')
    return value


def parse_overrides(overrides) -> dict:
    """Turn `key=value` strings into a dict of JSON-parsed values."""
    parsed = {}
    for item in overrides or []:
        if '=' not in item:
            raise ConfigError(f'Override {item!r} is not of the form '
                              'key=value.')
        key, raw = item.split('=', 1)
        try:
            parsed[key.strip()] = json.loads(raw)
        except json.JSONDecodeError:
            parsed[key.strip()] = raw
    return parsed


def load_config(cls, path=None, overrides=None):
    """Resolve a config dataclass from defaults, a JSON file and overrides.

    Args:
        cls: dataclass with a validate() method.
        path: optional JSON file mirroring the field names.
        overrides: optional list of `key=value` strings.

    Returns:
        config: validated instance of cls.
    """
    values = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f'Config file {path} does not exist.')
        try:
            with open(path, 'r', encoding='utf-8') as open_config:
                loaded = json.load(open_config)
        except (json.JSONDecodeError, UnicodeDecodeError) as err:
            raise ConfigError(f'{path} is not valid JSON: {err}') from None
        if not isinstance(loaded, dict):
            raise ConfigError(f'{path} must hold a JSON object.')
        values.update(loaded)
    values.update(parse_overrides(overrides))
    hints = get_type_hints(cls)
    known = {item.name for item in fields(cls)}
    resolved = {}
    for key, value in values.items():
        name = KEY_ALIASES.get(key, key)
        if name not in known:
            raise ConfigError(f'Unknown {cls.__name__} key {key!r}.')
        resolved[name] = _coerce(cls, name, value, hints[name])
    config = cls(**resolved)
    config.validate()
    logger.debug(f'Resolved {cls.__name__}: {config}')
    return config


def dump_config(config, path):
    """Write a resolved config as JSON."""
    with open(path, 'w', encoding='utf-8') as open_config:
        json.dump(asdict(config), open_config, indent=2, sort_keys=True)
        open_config.write('\n')


def config_to_json(config) -> str:
    return json.dumps(asdict(config), sort_keys=True)
