"""Shared fixtures; algebras and gamma tables are built once per session."""

import pytest
from hypothesis import settings

from weylchar.algebra import build_algebra
from weylchar.tables import build_table

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def a2():
    return build_algebra("A", 2)


@pytest.fixture(scope="session")
def b2():
    return build_algebra("B", 2)


@pytest.fixture(scope="session")
def g2():
    return build_algebra("G", 2)


@pytest.fixture(scope="session")
def a2_table(a2):
    return build_table(a2)


@pytest.fixture(scope="session")
def g2_table(g2):
    return build_table(g2)
