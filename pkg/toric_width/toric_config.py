#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import argparse
import colorlog
import os
import sys

from dataclasses import dataclass
from dotenv import find_dotenv, load_dotenv

from toric_width.geometry.toric_invariants import K_METHODS
from toric_width.geometry.toric_fixtures import CATALOG

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
TRUE_VALUES = ("1", "true", "yes", "on")


@dataclass(frozen=True)
class ToricSettings:
    log_level: str = "WARNING"
    k_method: str = "lattice"
    check_fast_paths: bool = True
    threads: int = 1
    radius: int = 8

    @classmethod
    def from_env(cls):
        """
        Read TORIC_* variables; unset ones keep their defaults.
        """
        defaults = cls()
        level = os.getenv("TORIC_LOG_LEVEL", defaults.log_level).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"TORIC_LOG_LEVEL must be one of "
                             f"{', '.join(LOG_LEVELS)}, got '{level}'.")
        method = os.getenv("TORIC_K_METHOD", defaults.k_method).lower()
        if method not in K_METHODS:
            raise ValueError(f"TORIC_K_METHOD must be one of "
                             f"{', '.join(K_METHODS)}, got '{method}'.")
        check = os.getenv("TORIC_CHECK_FAST_PATHS")
        check = defaults.check_fast_paths if check is None \
            else check.strip().lower() in TRUE_VALUES
        try:
            threads = int(os.getenv("TORIC_THREADS", defaults.threads))
            radius = int(os.getenv("TORIC_RADIUS", defaults.radius))
        except ValueError as e:
            raise ValueError(f"TORIC_THREADS and TORIC_RADIUS are integers: "
                             f"{e}")
        if threads < 1 or radius < 1:
            raise ValueError("TORIC_THREADS and TORIC_RADIUS must be "
                             "positive.")
        return cls(level, method, check, threads, radius)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got "
                                         f"'{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got "
                                         f"{value}")
    return value


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated "
                                         f"integers, got '{text}'")


class ToricWidthConfig:
    def setup_logger(self, level="WARNING"):
        """
        Set up the logger with color formatting for console output.
        A handler left by an earlier run is replaced without flushing its
        stream, which may already be closed.
        """
        self.log = colorlog.getLogger()
        self.log.setLevel(level)
        for handler in list(self.log.handlers):
            if getattr(handler, "_toric_width", False):
                self.log.removeHandler(handler)
        handler = colorlog.StreamHandler(sys.stderr)
        handler.setFormatter(colorlog.ColoredFormatter(
            "%(asctime)s [%(levelname)s] - %(log_color)s%(message)s%(reset)s",
            log_colors={
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "bold_red",
            }
        ))
        handler._toric_width = True
        self.log.addHandler(handler)

    def parse_cmdline(self):
        """
        Method builds the command line parser with one subparser per
        command.
        """
        description = (
            "Exact toric width of Delzant polytopes: validation, "
            "per-direction stabilizer analysis, radius-bounded width scan "
            "and supporting checks"
        )
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "-v",
            "--verbose",
            action="store_true",
            help="Debug logging"
        )
        common.add_argument(
            "--env",
            default=".env",
            help="Path to the .env file"
        )
        common.add_argument(
            "-o",
            "--output",
            help="Write the report to this file instead of stdout"
        )

        analysis = argparse.ArgumentParser(add_help=False)
        analysis.add_argument(
            "--skip-validation",
            action="store_true",
            help="Accept non-Delzant input; results are marked unvalidated"
        )
        analysis.add_argument(
            "--k-method",
            choices=K_METHODS,
            help="Stabilizer count: lattice (ground truth) or pairing"
        )
        analysis.add_argument(
            "--no-check",
            action="store_true",
            help="Disable the per-call closed form cross-checks"
        )

        parser = argparse.ArgumentParser(prog="toric_width",
                                         description=description)
        commands = parser.add_subparsers(dest="command", required=True)

        validate = commands.add_parser(
            "validate", parents=[common],
            help="Check simplicity, rationality and smoothness"
        )
        validate.add_argument("file", help="Polytope JSON file or '-'")
        validate.add_argument("--json", action="store_true",
                              help="Machine-readable output")

        width = commands.add_parser(
            "width", parents=[common, analysis],
            help="Radius-bounded toric width scan"
        )
        width.add_argument("file", help="Polytope JSON file or '-'")
        width.add_argument("--radius", type=_positive_int,
                           help="Scan radius for ||u||_inf")
        width.add_argument("--threads", type=_positive_int,
                           help="Worker threads for the direction scan")
        width.add_argument("--json", action="store_true",
                           help="Machine-readable output")
        width.add_argument("--full", action="store_true",
                           help="Include every scanned direction")

        direction = commands.add_parser(
            "direction", parents=[common, analysis],
            help="Full report for one direction u"
        )
        direction.add_argument("file", help="Polytope JSON file or '-'")
        direction.add_argument("--json", action="store_true",
                               help="Machine-readable output")
        direction.add_argument("--u", required=True, type=_int_list,
                               help="Direction, e.g. 1,1")

        transform = commands.add_parser(
            "transform", parents=[common],
            help="Apply x -> M x + t with M in GL(n, Z)"
        )
        transform.add_argument("file", help="Polytope JSON file or '-'")
        transform.add_argument("--matrix", required=True, type=_int_list,
                               help="Row-major integer entries of M")
        transform.add_argument("--translate",
                               help="Rational entries of t, e.g. 1/2,0")

        pick = commands.add_parser(
            "pick", parents=[common],
            help="Verify Pick's identity for a lattice polygon"
        )
        pick.add_argument("file", help='JSON {"vertices": [[x, y], ...]}')
        pick.add_argument("--json", action="store_true",
                          help="Machine-readable output")

        profile = commands.add_parser(
            "profile", parents=[common],
            help="Sampled admissible profile as CSV"
        )
        profile.add_argument("--min", dest="domain_min", type=float,
                             required=True)
        profile.add_argument("--max", dest="domain_max", type=float,
                             required=True)
        profile.add_argument("--epsilon", type=float, required=True)
        profile.add_argument("--delta", type=float, required=True)
        profile.add_argument("--samples", type=int, default=1000)
        profile.add_argument("--ramp", choices=("quintic", "shoulder"),
                             default="shoulder")

        fixture = commands.add_parser(
            "fixture", parents=[common],
            help="Write a catalog polytope as JSON"
        )
        fixture.add_argument("name", choices=sorted(CATALOG))
        fixture.add_argument("--params", default="",
                             help="e.g. n=2,a=1,b=1 or a1=1,a2=2")

        svg = commands.add_parser(
            "svg", parents=[common, analysis],
            help="Static SVG of a polygon with its best directions"
        )
        svg.add_argument("file", help="Polytope JSON file or '-'")
        svg.add_argument("--radius", type=_positive_int,
                         help="Scan radius for the arrows")

        table = commands.add_parser(
            "table", parents=[common, analysis],
            help="Markdown per-direction table of a catalog fixture"
        )
        table.add_argument("name", choices=sorted(CATALOG))
        table.add_argument("--params", default="",
                           help="e.g. n=2,a=1,b=1")
        table.add_argument("--radius", type=_positive_int,
                           help="Scan radius")
        return parser

    def load_env_vars(self, envpath=".env"):
        """
        Load environment variables from a .env file. A missing file is
        not an error; the TORIC_* defaults apply.

        Args:
            envpath (str): Path to the .env file. Defaults to ".env".
        """
        if not hasattr(self, "log"):
            raise RuntimeError("Logger not initialized. "
                               "Call setup_logger() first.")

        path = envpath if os.path.isfile(envpath) \
            else find_dotenv(envpath, usecwd=True)
        if not path:
            self.log.debug(f"No .env file found at {envpath}; using the "
                           "process environment.")
            return
        load_dotenv(path)
        self.log.info(f"Environment variables loaded from {path}.")
