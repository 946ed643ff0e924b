#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import json
import sys

from abc import ABC, abstractmethod
from logging import Logger

from toric_width.geometry.toric_ratgeom import parse_polytope
from toric_width.toric_errors import PolytopeFormatError, ToricError


class ToricCommandBase(ABC):
    """
    Abstract base class for the toric width subcommands.
    """
    def __init__(self, args, log: Logger, settings):
        """
        Initialize the command with its parsed arguments.

        Args:
            args (argparse.Namespace): parsed command line.
            log (Logger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        self.args = args
        self.log = log
        self.settings = settings

    @abstractmethod
    def collect_data(self):
        """
        Read and validate the command input.
        """
        pass

    @abstractmethod
    def analyze_data(self):
        """
        Run the exact computation on the collected input.
        """
        pass

    @abstractmethod
    def generate_report(self):
        """
        Render the analysis as text, JSON, CSV, Markdown or SVG.
        """
        pass

    def run(self):
        """
        Execute the data collection, analysis, and report generation.
        Returns the process exit code.
        """
        try:
            self.collect_data()
            self.analyze_data()
            self.generate_report()
        except ToricError as e:
            self.log.error(f"{type(e).__name__}: {e}")
            return 1
        except OSError as e:
            self.log.error(f"I/O error: {e}")
            return 1
        return 0

    def engine_options(self):
        """
        (k method, cross-check flag, skip validation) with command line
        flags taking precedence over the environment.
        """
        method = getattr(self.args, "k_method", None) \
            or self.settings.k_method
        check = self.settings.check_fast_paths \
            and not getattr(self.args, "no_check", False)
        return method, check, getattr(self.args, "skip_validation", False)

    def read_text(self, path):
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as handle:
            return handle.read()

    def read_json(self, path):
        try:
            return json.loads(self.read_text(path))
        except json.JSONDecodeError as e:
            raise PolytopeFormatError(f"Malformed JSON in {path}: {e}")

    def load_polytope(self, path):
        self.log.debug(f"Loading polytope from {path}.")
        return parse_polytope(self.read_text(path))

    def emit(self, text):
        """
        Write rendered output to `--output` when given, else to stdout.
        """
        output = getattr(self.args, "output", None)
        if not output or output == "-":
            sys.stdout.write(text)
            return
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
        self.log.info(f"Report written: {output}")
