#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_invariants import toric_width_lb
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_render import (
    render_width, to_json, width_report_to_dict
)


class ToricScan(ToricCommandBase):
    """
    `width` subcommand: the radius-bounded lower bound for w_T.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the width scan.

        Args:
            args (argparse.Namespace): parsed command line with `file`,
                `radius`, `threads`, `json` and `full`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized width scan for {args.file}")
        self.polytope = None
        self.report = None

    def collect_data(self):
        """
        Load the polytope file.
        """
        self.polytope = self.load_polytope(self.args.file)

    def analyze_data(self):
        """
        Scan every primitive direction within the radius and keep the
        maximizers of T_u.
        """
        method, check, skip = self.engine_options()
        radius = self.args.radius or self.settings.radius
        threads = self.args.threads or self.settings.threads
        self.log.info(f"Scanning {self.polytope.label()} up to radius "
                      f"{radius} ({method} stabilizer counts).")
        self.report = toric_width_lb(self.polytope, radius, threads, method,
                                     check, skip)

    def generate_report(self):
        """
        Emit the width report; `--full` adds every scanned direction.
        """
        self.log.info("Generating width report.")
        if self.args.json:
            self.emit(to_json(width_report_to_dict(self.report,
                                                   self.args.full)))
        else:
            self.emit(render_width(self.report, self.args.full))
