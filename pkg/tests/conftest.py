import random

import numpy as np
import pytest

from chaosdna.keystream import SecretKey


@pytest.fixture(scope="session")
def ref_key():
    """Fixed reference key used by all frozen regression vectors."""
    return SecretKey(x0=1.0, y0=2.0, k=20.0, k1=20.0, k2=20.0, k3=20.0, k4=20.0, n=10)


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture()
def nprng():
    return np.random.default_rng(0xC0FFEE)
