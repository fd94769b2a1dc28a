import pytest

from gsfuzz import fixtures


@pytest.fixture(scope="session")
def builtin_fixtures():
    return {f.id: f for f in fixtures()}


@pytest.fixture(scope="session")
def ex34(builtin_fixtures):
    return builtin_fixtures["ex3.4"]


@pytest.fixture(scope="session")
def ex46(builtin_fixtures):
    return builtin_fixtures["ex4.6"]


@pytest.fixture(scope="session")
def ex427(builtin_fixtures):
    return builtin_fixtures["ex4.27"]


@pytest.fixture(scope="session")
def mod12(builtin_fixtures):
    return builtin_fixtures["ex2.1-mod-12"]
