import pytest

from oracles import all_graphs_up_to


@pytest.fixture(scope="session")
def graphs_by_n():
    """All non-isomorphic graphs with at most 7 vertices, keyed by n."""
    return all_graphs_up_to(7)
