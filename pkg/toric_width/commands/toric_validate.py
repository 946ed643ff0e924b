#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_delzant import validate_delzant
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_errors import DelzantValidationError
from toric_width.toric_render import (
    render_validation, to_json, validation_to_dict
)


class ToricValidate(ToricCommandBase):
    """
    Delzant validation report. Exits with 1 when a violation is found.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the validation command.

        Args:
            args (argparse.Namespace): parsed command line with `file` and
                `json`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized Delzant validation of {args.file}")
        self.polytope = None
        self.report = None

    def collect_data(self):
        """
        Load the polytope file.
        """
        self.polytope = self.load_polytope(self.args.file)

    def analyze_data(self):
        """
        Check simplicity, rationality and smoothness at every vertex.
        """
        self.log.info(f"Validating {self.polytope.label()}.")
        self.report = validate_delzant(self.polytope)

    def generate_report(self):
        """
        Emit the report first, then fail when a violation was found.
        """
        if self.args.json:
            self.emit(to_json(validation_to_dict(self.polytope, self.report)))
        else:
            self.emit(render_validation(self.polytope, self.report))
        if not self.report.is_delzant:
            raise DelzantValidationError(
                f"{self.polytope.label()} has "
                f"{len(self.report.violations)} violation(s).",
                self.report
            )
