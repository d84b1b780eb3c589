import numpy as np
import pytest

import expograph as eg


@pytest.fixture(scope="session")
def p2():
    return eg.partial_sum(2)


@pytest.fixture(scope="session")
def rs2(p2):
    return eg.find_all_roots(p2)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
