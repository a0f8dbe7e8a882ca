# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent a full help argument parser and execute.

What's here:

Loads the relevant script modules and executes the script.
----------------------------------------------------------

Classes:
  - ScriptExecutor

Identical to the built-in argument parser.
------------------------------------------

Classes:
  - FullHelpArgumentParser

Smart formatter for allowing raw formatting in help
text and lists in the helptext.
---------------------------------------------------

Classes:
  - SmartFormatter

GraphILBO argument parser functions.
------------------------------------

Classes:
  - GraphIlboArgs

Parse the sub-command line arguments.
-------------------------------------

Classes:
  - TrainArgs
  - EmbedArgs
  - EvalArgs
  - GradcheckArgs
  - SynthArgs
  - SweepArgs
"""

from argparse import ArgumentParser, HelpFormatter
from importlib import import_module
from logging import getLogger
from os import getpid
from re import ASCII, compile
from sys import exit
from textwrap import wrap

from GraphILBO import __version__
from GraphILBO.errors import GraphIlboError, UsageError
from GraphILBO.sys_output import Output, set_up_logging


logger = getLogger(__name__)  # pylint: disable=invalid-name


class ScriptExecutor(object):
    """Loads the relevant script modules and executes the script.

    This class is initialised in each of the argparsers for the relevant
    command, then execute script is called within their set_default function.

    Attributes:
      - command (str): Full commands.
      - subparsers: Subparsers for each subcommand.
      - output: Output info, warning and error.
    """

    def __init__(self, command: str, subparsers=None):
        """Initialize ScriptExecutor.

        Args:
          - command (str): Full commands.
          - subparsers: Subparsers for each subcommand.
        """
        self.command = command.lower()
        self.subparsers = subparsers
        self.output = Output()

    def import_script(self):
        """Only import a script's modules when running that script."""
        mod = '.'.join(('GraphILBO', self.command))
        module = import_module(mod)
        script = getattr(module, self.command.title().replace('_', ''))
        return script

    def execute_script(self, arguments):
        """Run the script for called command.

        Exits 0 on success and 1 with one `error[<category>]` line on
        stderr on failure.
        """
        set_up_logging(arguments.loglevel, arguments.logfile)
        self.output.info(f'Executing: {self.command}. PID: {getpid()}')
        logger.debug(f'Executing: {self.command}. PID: {getpid()}')
        code = 0
        try:
            script = self.import_script()
            process = script(arguments)
            process.process()
        except KeyboardInterrupt:  # pylint: disable=try-except-raise
            raise
        except GraphIlboError as err:
            logger.debug('Command failed:', exc_info=True)
            self.output.error(err.one_line())
            code = 1
        except Exception as err:  # pylint: disable=broad-except
            logger.exception('Got Exception on main handler:')
            self.output.error(GraphIlboError(
                f'{type(err).__name__}: {err}').one_line())
            code = 1
        exit(code)


class FullHelpArgumentParser(ArgumentParser):
    """Identical to the built-in argument parser.

    On error it prints one `error[usage]` line on stderr and exits 1;
    `--help` shows the full help.
    """

    def error(self, message: str):
        """Print a single usage error line."""
        Output().error(UsageError(f'{self.prog}: {message}').one_line())
        self.exit(1)


class SmartFormatter(HelpFormatter):
    """Smart formatter for allowing raw formatting.

    Mainly acting in help text and lists in the helptext.

    To use: prefix the help item with 'R|' to overide
    default formatting. List items can be marked with 'L|'
    at the start of a newline.

    Adapted from: https://stackoverflow.com/questions/3853722
    """

    def __init__(self, prog: str,
                 indent_increment: int = 2,
                 max_help_position: int = 24,
                 width=None):
        """Initialize SmartFormatter.

        Args:
          - prog (str): Program name.
          - indent_increment (int): Indent increment. default 2.
          - max_help_position (int): Max help position. default 24.
          - width: Width.
        """
        super().__init__(prog, indent_increment, max_help_position, width)
        self._whitespace_matcher_limited = compile(r'[ \r\f\v]+', ASCII)

    def _split_lines(self, text: str, width):
        if text.startswith('R|'):
            text = self._whitespace_matcher_limited.sub(' ', text).strip()[2:]
            output = []
            for txt in text.splitlines():
                indent = ''
                if txt.startswith('L|'):
                    indent = '    '
                    txt = '  - {}'.format(txt[2:])
                output.extend(wrap(
                    txt, width, subsequent_indent=indent))
            return output
        return HelpFormatter._split_lines(self, text, width)


class GraphIlboArgs(object):
    """GraphILBO argument parser functions.

    It is universal to all commands.
    Should be the parent function of all subsequent argparsers.

    Attributes:
      - global_arguments: Global arguments.
      - argument_list: Argument list.
      - optional_arguments: Optional arguments.
      - parser: Parser.
    """

    def __init__(self, subparser, command: str,
                 description: str = 'default', subparsers=None):
        """Initialize GraphIlboArgs.

        Args:
          - subparser: Subparser.
          - command (str): Command.
          - description (str): Description. default 'default'.
          - subparsers: Subparsers.
        """
        self.global_arguments = self.get_global_arguments()
        self.argument_list = self.get_argument_list()
        self.optional_arguments = self.get_optional_arguments()
        if not subparser:
            return
        self.parser = self.create_parser(subparser, command, description)
        self.add_arguments()
        script = ScriptExecutor(command, subparsers)
        self.parser.set_defaults(func=script.execute_script)

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        return argument_list

    @staticmethod
    def get_optional_arguments():
        """Put the arguments in a list so that they are accessible.

        This is used for when there are sub-children.
        Override this for custom arguments.
        """
        argument_list = []
        return argument_list

    @staticmethod
    def get_global_arguments():
        """Arguments that are used in ALL parts of GraphILBO.

        DO NOT override this!
        """
        global_args = []
        global_args.append({'opts': ('-v', '--version'),
                            'action': 'version',
                            'version': f'GraphILBO v{__version__}'})
        global_args.append({
            'opts': ('-L', '--loglevel'),
            'dest': 'loglevel',
            'type': str.upper,
            'choices': ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'),
            'default': 'WARNING',
            'help': 'log level of the console handler [default=WARNING].'})
        global_args.append({
            'opts': ('--logfile',),
            'dest': 'logfile',
            'type': str,
            'default': None,
            'help': 'also write the full debug log to this file.'})
        return global_args

    @staticmethod
    def create_parser(subparser, command: str, description: str):
        """Create the parser for the selected command."""
        parser = subparser.add_parser(
            command,
            help=description,
            description=description,
            epilog='Questions and feedback: '
                   'see README.rst',
            formatter_class=SmartFormatter)
        return parser

    def add_arguments(self):
        """Parse the arguments passed in from argparse."""
        options = (self.global_arguments + self.argument_list +
                   self.optional_arguments)
        for option in options:
            args = option['opts']
            kwargs = {key: option[key]
                      for key in option.keys() if key != 'opts'}
            self.parser.add_argument(*args, **kwargs)


def _data_argument(required: bool = True):
    return {'opts': ('-d', '--data'),
            'dest': 'data',
            'required': required,
            'type': str,
            'help': 'input graph directory (graph.edges, features.csv, '
                    'labels.txt, split.json).'}


def _set_argument(target: str):
    return {'opts': ('--set',),
            'dest': 'overrides',
            'action': 'append',
            'default': [],
            'metavar': 'KEY=VALUE',
            'help': f'override a {target} field; repeatable. Overrides win '
                    'over the config file, which wins over the defaults.'}


def _config_argument():
    return {'opts': ('-c', '--config'),
            'dest': 'config',
            'required': False,
            'type': str,
            'default': None,
            'help': 'JSON file with TrainConfig fields.'}


def _probe_config_argument():
    return {'opts': ('-p', '--probe-config'),
            'dest': 'probe_config',
            'required': False,
            'type': str,
            'default': None,
            'help': 'JSON file with ProbeConfig fields.'}


class TrainArgs(GraphIlboArgs):
    """Arguments of `train`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append(_data_argument())
        argument_list.append(_config_argument())
        argument_list.append(_set_argument('TrainConfig'))
        argument_list.append({
            'opts': ('-o', '--out'),
            'dest': 'out',
            'required': True,
            'type': str,
            'help': 'output folder for checkpoint, log and embeddings.'})
        argument_list.append({
            'opts': ('-r', '--resume'),
            'dest': 'resume',
            'required': False,
            'type': str,
            'default': None,
            'help': 'checkpoint to resume training from.'})
        argument_list.append({
            'opts': ('--evaluate',),
            'dest': 'evaluate',
            'action': 'store_true',
            'help': 'run the linear probe on the final embeddings.'})
        argument_list.append(_probe_config_argument())
        return argument_list


class EmbedArgs(GraphIlboArgs):
    """Arguments of `embed`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append(_data_argument())
        argument_list.append({
            'opts': ('-m', '--checkpoint'),
            'dest': 'checkpoint',
            'required': True,
            'type': str,
            'help': 'trained checkpoint file.'})
        argument_list.append({
            'opts': ('-o', '--out'),
            'dest': 'out',
            'required': True,
            'type': str,
            'help': 'output embeddings csv path.'})
        return argument_list


class EvalArgs(GraphIlboArgs):
    """Arguments of `eval`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append({
            'opts': ('-e', '--embeddings'),
            'dest': 'embeddings',
            'required': True,
            'type': str,
            'help': 'embeddings csv, row i for node i.'})
        argument_list.append(_data_argument())
        argument_list.append(_probe_config_argument())
        argument_list.append(_set_argument('ProbeConfig'))
        argument_list.append({
            'opts': ('-o', '--out'),
            'dest': 'out',
            'required': True,
            'type': str,
            'help': 'output report json path; per-repeat accuracies go next '
                    'to it as csv.'})
        return argument_list


class GradcheckArgs(GraphIlboArgs):
    """Arguments of `gradcheck`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append(_data_argument(required=False))
        argument_list.append({
            'opts': ('--spec',),
            'dest': 'spec',
            'required': False,
            'type': str,
            'default': None,
            'help': 'SBM spec JSON to generate the graph from instead of '
                    '--data.'})
        argument_list.append(_config_argument())
        argument_list.append(_set_argument('TrainConfig'))
        argument_list.append({
            'opts': ('-s', '--seed'),
            'dest': 'seed',
            'required': False,
            'type': int,
            'default': None,
            'help': 'seed for the parameters and views [default=config].'})
        argument_list.append({
            'opts': ('--tolerance',),
            'dest': 'tolerance',
            'required': False,
            'type': float,
            'default': 1e-4,
            'help': 'pass threshold on the relative error [default=1e-4].'})
        return argument_list


class SynthArgs(GraphIlboArgs):
    """Arguments of `synth`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append({
            'opts': ('--spec',),
            'dest': 'spec',
            'required': False,
            'type': str,
            'default': None,
            'help': 'SBM spec JSON (blocks, p_in, p_out, feature_noise, '
                    'seed).'})
        argument_list.append(_set_argument('SbmSpec'))
        argument_list.append({
            'opts': ('-o', '--out'),
            'dest': 'out',
            'required': True,
            'type': str,
            'help': 'output graph directory.'})
        return argument_list


class SweepArgs(GraphIlboArgs):
    """Arguments of `sweep`."""

    @staticmethod
    def get_argument_list():
        """Put the arguments in a list so that they are accessible."""
        argument_list = []
        argument_list.append({
            'opts': ('-g', '--grid'),
            'dest': 'grid',
            'required': True,
            'type': str,
            'help': 'R|JSON grid of lists over any of:'
                    '\nL|lam'
                    '\nL|p_h'
                    '\nL|p_a'
                    '\nL|k'
                    '\nL|l'})
        argument_list.append(_data_argument())
        argument_list.append(_config_argument())
        argument_list.append(_set_argument('TrainConfig'))
        argument_list.append(_probe_config_argument())
        argument_list.append({
            'opts': ('-o', '--out'),
            'dest': 'out',
            'required': True,
            'type': str,
            'help': 'output csv, one row per grid cell.'})
        argument_list.append({
            'opts': ('-t', '--threads'),
            'dest': 'threads',
            'required': False,
            'type': int,
            'default': 1,
            'help': 'number of cells run in parallel [default=1].'})
        return argument_list
