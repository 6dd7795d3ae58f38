import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))  # makes `helpers` importable

from rtidnc.sideinfo import matrix_from_text

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def demo_matrix():
    """3 users x 6 packets: the worked instance used across the tests."""
    return matrix_from_text((FIXTURES / "demo3x6.txt").read_text())


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
