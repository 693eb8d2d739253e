import pytest

from fthbi import optimize_exponent_sub


@pytest.fixture(scope="session")
def calibration_at_nine_tenths():
    # the one order whose objective has a usable interior minimum; shared
    # because each run costs several seconds of quadrature
    return optimize_exponent_sub(0.9)
