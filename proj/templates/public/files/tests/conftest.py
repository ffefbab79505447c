import pytest


@pytest.fixture
def example_vectors():
    return [1, 2, 3], [4, 5, 6]
