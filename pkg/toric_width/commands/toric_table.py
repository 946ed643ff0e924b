#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_fixtures import build_fixture, parse_params
from toric_width.geometry.toric_invariants import toric_width_lb
from toric_width.geometry.toric_ratgeom import parse_rational
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_render import render_table


class ToricTable(ToricCommandBase):
    """
    Markdown table of every scanned direction of a catalog fixture;
    Hirzebruch rows are grouped by p/q region and compared with the
    closed forms.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the table command.

        Args:
            args (argparse.Namespace): parsed command line with `name`,
                `params` and `radius`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized table for {args.name}")
        self.params = {}
        self.polytope = None
        self.rows = ()

    def collect_data(self):
        """
        Build the catalog fixture from its parameters.
        """
        self.params = parse_params(self.args.params)
        self.polytope = build_fixture(self.args.name, self.params)

    def analyze_data(self):
        """
        Scan the fixture and keep every row.
        """
        method, check, skip = self.engine_options()
        report = toric_width_lb(self.polytope,
                                self.args.radius or self.settings.radius,
                                self.settings.threads, method, check, skip)
        self.rows = report.scan

    def generate_report(self):
        """
        Render the Markdown table; Hirzebruch parameters default to
        a = b = 1.
        """
        hirzebruch = None
        if self.args.name == "hirzebruch":
            hirzebruch = tuple(
                parse_rational(self.params.get(key, "1"))
                for key in ("n", "a", "b")
            )
            hirzebruch = (int(hirzebruch[0]),) + hirzebruch[1:]
        self.log.info(f"Generating table for {self.polytope.label()}.")
        self.emit(render_table(self.polytope, self.rows, hirzebruch))
