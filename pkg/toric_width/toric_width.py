#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import sys

from toric_width.commands.toric_direction import ToricDirection
from toric_width.commands.toric_fixture import ToricFixture
from toric_width.commands.toric_pick import ToricPick
from toric_width.commands.toric_profile import ToricProfile
from toric_width.commands.toric_scan import ToricScan
from toric_width.commands.toric_svg import ToricSvg
from toric_width.commands.toric_table import ToricTable
from toric_width.commands.toric_transform import ToricTransform
from toric_width.commands.toric_validate import ToricValidate
from toric_width.toric_config import ToricSettings, ToricWidthConfig

COMMANDS = {
    "validate": ToricValidate,
    "width": ToricScan,
    "direction": ToricDirection,
    "transform": ToricTransform,
    "pick": ToricPick,
    "profile": ToricProfile,
    "fixture": ToricFixture,
    "svg": ToricSvg,
    "table": ToricTable,
}


class ToricWidth(ToricWidthConfig):
    def __init__(self, argv=None):
        parser = self.parse_cmdline()
        self.args = parser.parse_args(argv)
        self.setup_logger()
        self.load_env_vars(envpath=self.args.env)
        self.settings = ToricSettings.from_env()
        self.log.setLevel("DEBUG" if self.args.verbose
                          else self.settings.log_level)

    def toric_width_factory(self, command):
        command_class = COMMANDS.get(command)
        if not command_class:
            raise ValueError(f"Command '{command}' is not recognized.")
        return command_class(self.args, self.log, self.settings)

    def toric_width_main(self):
        self.log.info(f"Running {self.args.command}.")
        command = self.toric_width_factory(self.args.command)
        return command.run()


def run(argv=None):
    """
    Exit code contract: 0 success, 1 domain or I/O error, 2 usage error.
    """
    try:
        toric = ToricWidth(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except ValueError as e:
        toric_log = ToricWidthConfig()
        toric_log.setup_logger()
        toric_log.log.error(f"Configuration error: {e}")
        return 2
    return toric.toric_width_main()


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
