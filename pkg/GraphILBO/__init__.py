# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Initialize the GraphILBO package.

GraphILBO trains a parameter-shared GCN encoder by contrasting two
stochastically sampled views of one graph, selecting positive and
negative pairs from the cross-view similarity matrix.
"""

__version__ = '0.1.0'
