# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent the errors raised by GraphILBO.

What's here:

Errors carrying a machine-parsable category.
--------------------------------------------

Classes:
  - GraphIlboError
  - DataFormatError
  - ConfigError
  - ShapeError
  - NonFiniteError
  - StaleTapeError
  - CheckpointError
  - EvaluationError
  - GradientCheckError
  - UsageError
"""


class GraphIlboError(Exception):
    """Base class of every error the command line reports.

    Attributes:
      - category (str): short machine-parsable error category.
    """

    category = 'internal'

    def one_line(self) -> str:
        """Format the error as a single line."""
        message = ' '.join(str(self).split())
        return f'error[{self.category}]: {message}'


class DataFormatError(GraphIlboError):
    """Input data directory or file is missing or malformed."""

    category = 'data-format'


class ConfigError(GraphIlboError):
    """Configuration value is unknown or out of range."""

    category = 'config'


class ShapeError(GraphIlboError):
    """Matrix shapes do not line up."""

    category = 'shape'


class NonFiniteError(GraphIlboError):
    """A loss term or gradient is NaN or infinite."""

    category = 'non-finite'


class StaleTapeError(GraphIlboError):
    """Backward pass called with a tape from other parameters."""

    category = 'stale-tape'


class CheckpointError(GraphIlboError):
    """Checkpoint file is unreadable or incompatible."""

    category = 'checkpoint'


class EvaluationError(GraphIlboError):
    """Linear-probe evaluation inputs are incomplete."""

    category = 'evaluation'


class GradientCheckError(GraphIlboError):
    """Analytic gradients disagree with finite differences."""

    category = 'gradcheck'


class UsageError(GraphIlboError):
    """Unknown, missing or malformed command-line flags."""

    category = 'usage'
