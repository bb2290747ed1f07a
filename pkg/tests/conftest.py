#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import sys
import numpy as np
import pytest

# The library is a folder of scripts, put it on the path like the evaluation scripts do
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "Scripts"))
sys.path.insert(0, os.path.join(ROOT, "Evaluation"))

from poset import SkewShape  # noqa: E402

DATA = os.path.join(ROOT, "Data")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: larger fixtures, deselect with -m 'not slow'")


@pytest.fixture
def data_file():
    """Path of a fixture document in Data/."""
    return lambda name: os.path.join(DATA, name)


@pytest.fixture
def random_skew_shapes():
    """Random skew shapes with at most three rows of at most four cells."""
    def draw(count, max_cells, seed):
        rng = np.random.default_rng(seed)
        shapes = []
        while len(shapes) < count:
            lam = sorted((int(part) for part in rng.integers(1, 5, size=int(rng.integers(1, 4)))),
                         reverse=True)
            mu = []
            for part in lam:
                mu.append(int(rng.integers(0, min(part, mu[-1] if mu else part) + 1)))
            shape = SkewShape(tuple(lam), tuple(mu))
            if 0 < shape.size() <= max_cells:
                shapes.append(shape)
        return shapes

    return draw
