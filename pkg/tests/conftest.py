import pytest

from cfp import library


@pytest.fixture
def ex2():
    return library.get("berinde-ex2")


@pytest.fixture
def bl():
    return library.get("bl-linear")


@pytest.fixture
def vec():
    return library.get("vec-monotone-n")
