import pytest

from psasigma import SimplicialGraph


@pytest.fixture
def example():
    """Five-vertex tree-with-fork used throughout: a-b-c with c-d and c-e."""
    return SimplicialGraph.build("abcde", ["ab", "bc", "cd", "ce"])


@pytest.fixture
def path3():
    return SimplicialGraph.build("abc", ["ab", "bc"])


@pytest.fixture
def triangle():
    return SimplicialGraph.build("abc", ["ab", "bc", "ac"])


@pytest.fixture
def edgeless3():
    return SimplicialGraph.build("xyz", [])
