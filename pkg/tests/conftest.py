import pytest

from pathcong import Quiver


@pytest.fixture
def single_arrow():
    """Two vertices joined by one arrow."""
    return Quiver(["1", "2"], [("alpha", "1", "2")])


@pytest.fixture
def kronecker():
    """Two parallel arrows."""
    return Quiver(["1", "2"], [("alpha", "1", "2"), ("beta", "1", "2")])


@pytest.fixture
def triple_arrow():
    """Three parallel arrows."""
    return Quiver(
        ["1", "2"],
        [("alpha", "1", "2"), ("beta", "1", "2"), ("gamma", "1", "2")],
    )


@pytest.fixture
def chain3():
    """1 -> 2 -> 3 with arrows a, b."""
    return Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
