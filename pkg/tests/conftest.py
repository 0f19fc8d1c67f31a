import pytest

from hibires.bitset import mask_of
from hibires.fixtures import b2, chain, e1, fig1, k22


@pytest.fixture
def E1():
    return e1()


@pytest.fixture
def K22():
    return k22()


@pytest.fixture
def CHAIN():
    return chain()


@pytest.fixture
def B2():
    return b2()


@pytest.fixture
def FIG1():
    return fig1()


def m(n, *indices):
    """Shorthand for a subset mask from 1-based indices."""
    return mask_of(indices, n)
