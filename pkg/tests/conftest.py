import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import FIXTURES, family_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return family_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return family_corpus(include_multipartite=False)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
