import pytest

from spinl import delta_qexp, g20_qexp, rankin_coeffs


@pytest.fixture(scope="session")
def delta200():
    return delta_qexp(200)


@pytest.fixture(scope="session")
def g20_200():
    return g20_qexp(200)


@pytest.fixture(scope="session")
def rankin150():
    return rankin_coeffs(150)
