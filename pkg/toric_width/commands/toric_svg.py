#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_invariants import toric_width_lb
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_errors import DimensionMismatchError
from toric_width.toric_render import render_svg


class ToricSvg(ToricCommandBase):
    """
    Static drawing of a Delzant polygon with its best scanned directions.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the SVG command.

        Args:
            args (argparse.Namespace): parsed command line with `file` and
                `radius`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized SVG drawing of {args.file}")
        self.polytope = None
        self.best_directions = ()

    def collect_data(self):
        """
        Load the polygon; solids are refused.
        """
        self.polytope = self.load_polytope(self.args.file)
        if self.polytope.dimension != 2:
            raise DimensionMismatchError(
                f"svg draws polygons only, got dimension "
                f"{self.polytope.dimension}."
            )

    def analyze_data(self):
        """
        Single-threaded scan for the arrows.
        """
        method, check, skip = self.engine_options()
        report = toric_width_lb(self.polytope,
                                self.args.radius or self.settings.radius,
                                1, method, check, skip)
        self.best_directions = report.best_directions

    def generate_report(self):
        self.emit(render_svg(self.polytope, self.best_directions))
