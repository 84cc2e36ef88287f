import pytest

from starwheel.enumeration import enumerate_degree_bounded


@pytest.fixture(scope="session")
def corpus_by_order():
    """One representative per isomorphism class, keyed by order, for nu <= 8."""
    return {
        order: list(enumerate_degree_bounded(order, max(order - 1, 0)))
        for order in range(1, 9)
    }
