#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

from toric_width.geometry.toric_lattice import LatticePolygon, pick_check
from toric_width.toric_base import ToricCommandBase
from toric_width.toric_errors import PolygonError
from toric_width.toric_render import pick_to_dict, render_pick, to_json


class ToricPick(ToricCommandBase):
    """
    Pick's identity for a lattice polygon given as {"vertices": [...]}.
    """
    def __init__(self, args, log, settings):
        """
        Initialize the Pick command.

        Args:
            args (argparse.Namespace): parsed command line with `file` and
                `json`.
            log (RootLogger): Logger instance for logging.
            settings (ToricSettings): environment-derived defaults.
        """
        super().__init__(args, log, settings)
        self.log.info(f"Initialized Pick check for {args.file}")
        self.polygon = None
        self.report = None

    def collect_data(self):
        """
        Read the vertex list; either orientation is accepted, but the
        cycle must be a strictly convex simple polygon.
        """
        document = self.read_json(self.args.file)
        vertices = document.get("vertices") if isinstance(document, dict) \
            else None
        if not isinstance(vertices, list) or not all(
                isinstance(v, list) and len(v) == 2
                and all(isinstance(x, int) and not isinstance(x, bool)
                        for x in v)
                for v in vertices):
            raise PolygonError('Expected {"vertices": [[x, y], ...]} with '
                               'integer coordinates.')
        self.polygon = LatticePolygon.from_points(vertices)

    def analyze_data(self):
        """
        Count area, interior and boundary points independently.
        """
        self.report = pick_check(self.polygon)
        if not self.report.identity_holds:
            self.log.warning("Pick's identity failed; lattice counts are "
                             "inconsistent.")

    def generate_report(self):
        """
        Emit the counts as text or JSON.
        """
        if self.args.json:
            self.emit(to_json(pick_to_dict(self.polygon, self.report)))
        else:
            self.emit(render_pick(self.polygon, self.report))
