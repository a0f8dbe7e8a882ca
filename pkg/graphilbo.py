# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""GraphILBO is a self-supervised graph contrastive learner.

Two stochastically masked views of one graph are encoded by a shared
two-layer GCN; the encoder is trained to maximize a Jensen-Shannon lower
bound on the mutual information between the views, over positive and
negative node pairs chosen from the cross-view similarity matrix, plus a
cross-view consistency term. Embeddings are evaluated with a linear probe.

Sub-commands:

    train, embed, eval, gradcheck, synth, sweep

See README.rst for the data directory format and a worked example.
"""

from os import environ
from sys import exit, version_info

# Thread count of the linear algebra backends, read before numpy loads.
_THREADS = environ.get('GRAPHILBO_NUM_THREADS')
if _THREADS:
    for _name in ('OMP_NUM_THREADS', 'OPENBLAS_NUM_THREADS',
                  'MKL_NUM_THREADS'):
        environ[_name] = _THREADS

from GraphILBO import fullhelp_argumentparser  # noqa: E402
from GraphILBO.sys_output import Output  # noqa: E402

# version control
if version_info[0] == 3 and version_info[1] >= 9:
    pass
else:
    output = Output()
    output.error('This program requires at least python3.9')
    exit(1)


def main():
    """Create subcommands and execute."""
    parser = fullhelp_argumentparser.FullHelpArgumentParser(prog='graphilbo')
    subparser = parser.add_subparsers()
    fullhelp_argumentparser.TrainArgs(
        subparser,
        'train',
        """Train the shared GCN encoder on a graph directory.""")
    fullhelp_argumentparser.EmbedArgs(
        subparser,
        'embed',
        """Export embeddings of the raw graph from a checkpoint.""")
    fullhelp_argumentparser.EvalArgs(
        subparser,
        'eval',
        """Linear-probe accuracy of an embeddings file.""")
    fullhelp_argumentparser.GradcheckArgs(
        subparser,
        'gradcheck',
        """Compare analytic gradients with finite differences.""")
    fullhelp_argumentparser.SynthArgs(
        subparser,
        'synth',
        """Write a stochastic block model graph directory.""")
    fullhelp_argumentparser.SweepArgs(
        subparser,
        'sweep',
        """Probe accuracy over a grid of lam, p_h, p_a, k and l.""")

    def bad_args(args):
        """Print help on bad arguments."""
        parser.print_help()
        exit(2)

    parser.set_defaults(func=bad_args)
    arguments = parser.parse_args()
    arguments.func(arguments)


if __name__ == '__main__':
    main()
