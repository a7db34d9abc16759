import os

os.environ.setdefault('SOFIC_ENV', 'testing')

import numpy as np
import pytest

from config import TestingConfig
from group_models.perm_core import Permutation


@pytest.fixture
def cfg():
    return TestingConfig


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def random_permutation(rng):
    def make(n):
        return Permutation(rng.permutation(n))
    return make


@pytest.fixture
def write_input(tmp_path):
    """Write permutation text to a file and return its path as a string"""
    def write(text, name='input.txt'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
