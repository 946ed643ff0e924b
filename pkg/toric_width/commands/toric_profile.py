#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_admissible import (
    RAMPS, build_profile, verify_profile
)
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_errors import ProfileError


class ToricProfile(ToricCommandBase):
    """
    Sampled admissible profile as CSV with columns x,f.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the profile command.

        Args:
            args (argparse.Namespace): parsed command line with the domain,
                `epsilon`, `delta`, `samples` and `ramp`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized profile on [{args.domain_min}, "
                      f"{args.domain_max}] with the {args.ramp} ramp")
        self.ramp = None
        self.profile = None
        self.check = None

    def collect_data(self):
        """
        Select the smooth ramp.
        """
        self.ramp = RAMPS[self.args.ramp]()

    def analyze_data(self):
        """
        Sample the profile and verify it with finite differences.
        """
        self.profile = build_profile(self.args.domain_min,
                                     self.args.domain_max,
                                     self.args.epsilon, self.args.delta,
                                     self.args.samples, self.ramp)
        self.check = verify_profile(self.profile)
        if not all(self.check[:3]):
            raise ProfileError(f"Sampled profile fails its own checks: "
                               f"{self.check}.")
        self.log.info(f"Profile max slope {self.check.max_slope:.6f}.")

    def generate_report(self):
        lines = ["x,f"]
        lines += [f"{x!r},{f!r}" for x, f in self.profile.samples]
        self.emit("\n".join(lines) + "\n")
