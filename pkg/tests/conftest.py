#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import json
import logging
import os
import pytest

from toric_width.geometry.toric_fixtures import box, cp2, hirzebruch
from toric_width.geometry.toric_ratgeom import polytope_to_dict
from toric_width.toric_width import run


@pytest.fixture
def triangle():
    return cp2(1)


@pytest.fixture
def unit_square():
    return box(1, 1)


@pytest.fixture
def cube():
    return box(1, 1, 1)


@pytest.fixture
def trapezoid():
    return hirzebruch(2, 1, 1)


@pytest.fixture
def polytope_file(tmp_path):
    """
    Write a polytope (or a raw document) to a JSON file and return its path.
    """
    def write(polytope_or_document, name="polytope.json"):
        document = polytope_or_document
        if not isinstance(document, (dict, str)):
            document = polytope_to_dict(document)
        path = tmp_path / name
        path.write_text(document if isinstance(document, str)
                        else json.dumps(document), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def cli(capsys, monkeypatch, tmp_path):
    """
    Run the command line in an empty directory; returns
    (exit code, stdout, stderr).
    """
    monkeypatch.chdir(tmp_path)
    # a loaded .env must not leak into later tests
    monkeypatch.setattr(os, "environ", dict(os.environ))
    for key in ("TORIC_LOG_LEVEL", "TORIC_K_METHOD", "TORIC_CHECK_FAST_PATHS",
                "TORIC_THREADS", "TORIC_RADIUS"):
        monkeypatch.delenv(key, raising=False)

    def invoke(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    yield invoke

    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_toric_width", False):
            root.removeHandler(handler)
