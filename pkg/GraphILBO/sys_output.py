# -*- coding: utf-8 -*-
# Copyright 2026 The GraphILBO Authors.
# All rights reserved.
#
# This file is part of the GraphILBO distribution and
# governed by your choice of the "GraphILBO License Agreement"
# or the "GNU General Public License v3.0".
# Please see the LICENSE file that should
# have been included as part of this package.
"""Represent an output.

What's here:

Format and display output.
--------------------------

Classes:
  - Output

Functions:
  - set_up_logging
"""

from logging import FileHandler, Formatter, getLogger
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler


class Output(object):
    """Format and display output.

    Info and warning lines go to stdout, errors to stderr.

    Attributes:
      - console: Console for stdout.
      - err_console: Console for stderr.
    """

    def __init__(self):
        """Initialize Output."""
        self.console = Console(highlight=False)
        self.err_console = Console(stderr=True, highlight=False)

    @staticmethod
    def __indent_text_block(text: str):
        """Indent a text block."""
        lines = text.splitlines()
        if len(lines) > 1:
            return '\n'.join([lines[0]] + ['        ' + line
                                           for line in lines[1:]])
        return text

    def info(self, text: str):
        """Format INFO Text."""
        self.console.print('[green]INFO   [/green] ' +
                           self.__indent_text_block(text), markup=True,
                           soft_wrap=True)

    def warning(self, text: str):
        """Format WARNING Text."""
        self.console.print('[yellow]WARNING[/yellow] ' +
                           self.__indent_text_block(text), markup=True,
                           soft_wrap=True)

    def error(self, text: str):
        """Print a single error line on stderr, without markup."""
        self.err_console.print(text, markup=False, soft_wrap=True)


def set_up_logging(loglevel: str = 'WARNING', logfile: Optional[str] = None):
    """Configure the root logger.

    Args:
      - loglevel (str): level name for the console handler.
      - logfile (str): optional path of a plain-text log file.
    """
    root = getLogger()
    root.setLevel('DEBUG')
    for handler in list(root.handlers):
        root.removeHandler(handler)
    console_handler = RichHandler(console=Console(stderr=True),
                                  show_path=False)
    console_handler.setLevel(loglevel.upper())
    root.addHandler(console_handler)
    if logfile:
        file_handler = FileHandler(logfile, encoding='utf-8')
        file_handler.setFormatter(Formatter(
            '%(asctime)s %(name)s %(levelname)s %(message)s'))
        file_handler.setLevel('DEBUG')
        root.addHandler(file_handler)
