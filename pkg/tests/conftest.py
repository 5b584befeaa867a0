import pytest

from quantalab import builtin_quantale


@pytest.fixture(scope="session")
def qbool():
    return builtin_quantale("bool")


@pytest.fixture(scope="session")
def qluk3():
    return builtin_quantale("lukasiewicz:3")


@pytest.fixture(scope="session")
def qluk4():
    return builtin_quantale("lukasiewicz:4")


@pytest.fixture(scope="session")
def qgodel3():
    return builtin_quantale("godel:3")


@pytest.fixture(scope="session")
def qendo3():
    return builtin_quantale("endo:3")
