#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_affine import UnimodularMap, apply_affine
from toric_width.geometry.toric_ratgeom import (
    parse_rational, polytope_to_dict
)
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_errors import AffineMapError
from toric_width.toric_render import to_json


class ToricTransform(ToricCommandBase):
    """
    Image of a polytope under x -> M x + t, written in the input format.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the transform command.

        Args:
            args (argparse.Namespace): parsed command line with `file`,
                `matrix` (row-major) and `translate`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized transform of {args.file}")
        self.polytope = None
        self.affine_map = None
        self.image = None

    def collect_data(self):
        """
        Load the polytope and assemble the map; M must lie in GL(n, Z).
        """
        self.polytope = self.load_polytope(self.args.file)
        n = self.polytope.dimension
        entries = self.args.matrix
        if len(entries) != n * n:
            raise AffineMapError(
                f"--matrix has {len(entries)} entries; a {n}x{n} matrix "
                f"needs {n * n}."
            )
        matrix = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if self.args.translate:
            translation = tuple(parse_rational(x)
                                for x in self.args.translate.split(","))
        else:
            translation = (0,) * n
        self.affine_map = UnimodularMap(matrix, translation)

    def analyze_data(self):
        """
        Map the facets; vertex order follows the image.
        """
        self.image = apply_affine(self.polytope, self.affine_map)
        self.log.debug(f"Image has {len(self.image.vertices)} vertices.")

    def generate_report(self):
        """
        Emit the image as polytope JSON.
        """
        self.emit(to_json(polytope_to_dict(self.image)))
