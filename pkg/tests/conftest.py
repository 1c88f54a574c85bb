import sys
from pathlib import Path

import pytest

from gluedvis import build_generalized_glued, build_glued, from_edge_list

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def gt2():
    return build_glued(2, 2)


@pytest.fixture(scope="session")
def gt3():
    return build_glued(3, 2)


@pytest.fixture(scope="session")
def gt23():
    return build_glued(2, 3)


@pytest.fixture(scope="session")
def ggt23():
    return build_generalized_glued(2, 3)


@pytest.fixture
def c4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
