#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_delzant import require_delzant
from toric_width.geometry.toric_fixtures import build_fixture, parse_params
from toric_width.geometry.toric_ratgeom import polytope_to_dict
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_render import to_json


class ToricFixture(ToricCommandBase):
    """
    Class writing a catalog polytope in the input JSON format.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the fixture command.

        Args:
            args (argparse.Namespace): parsed command line with `name` and
                `params`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized fixture writer for {args.name}")
        self.params = {}
        self.polytope = None

    def collect_data(self):
        """
        Parse the `key=value` fixture parameters.
        """
        self.params = parse_params(self.args.params)

    def analyze_data(self):
        """
        Build the fixture; a catalog entry that is not Delzant is an error.
        """
        self.polytope = build_fixture(self.args.name, self.params)
        require_delzant(self.polytope)

    def generate_report(self):
        self.emit(to_json(polytope_to_dict(self.polytope)))
