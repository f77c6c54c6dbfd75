import pytest
from make_test_corpus import NAMED_FRAMEWORKS, corpus, small_corpus


@pytest.fixture(scope="session")
def random_frameworks():
    return corpus()


@pytest.fixture(scope="session")
def small_random_frameworks():
    return small_corpus(max_arguments=5)


@pytest.fixture
def named_framework(request):
    """
    Use with `pytest.mark.parametrize("named_framework", [...], indirect=True)`
    to get the framework with the given name
    """
    return NAMED_FRAMEWORKS[request.param]
