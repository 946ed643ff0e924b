#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_invariants import direction_report
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_render import (
    direction_report_to_dict, render_direction, to_json
)


class ToricDirection(ToricCommandBase):
    """
    Class for the per-edge stabilizer report of a single direction u.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the direction command.

        Args:
            args (argparse.Namespace): parsed command line with `file`,
                `u` and `json`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized direction report for u={args.u}")
        self.polytope = None
        self.report = None

    def collect_data(self):
        """
        Load the polytope file.
        """
        self.polytope = self.load_polytope(self.args.file)

    def analyze_data(self):
        """
        Compute k per edge, m_u, the support extrema and T_u.
        """
        method, check, skip = self.engine_options()
        self.report = direction_report(self.polytope, self.args.u, method,
                                       check, skip)

    def generate_report(self):
        """
        Emit the report as text or JSON.
        """
        if self.args.json:
            self.emit(to_json(direction_report_to_dict(self.polytope,
                                                       self.report)))
        else:
            self.emit(render_direction(self.polytope, self.report))
