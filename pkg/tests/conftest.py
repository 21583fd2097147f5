import pytest

from flagdesigns.core.witt import mathieu_group, witt_design


@pytest.fixture(scope="session")
def witt11():
    return witt_design(11)


@pytest.fixture(scope="session")
def witt23():
    return witt_design(23)


@pytest.fixture(scope="session")
def m11():
    return mathieu_group(11)


@pytest.fixture(scope="session")
def m23():
    return mathieu_group(23)
