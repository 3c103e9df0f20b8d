import pytest

from arrgr.corpus import central_corpus, corpus


@pytest.fixture(scope="session")
def corpus_map():
    return dict(corpus())


@pytest.fixture(scope="session")
def central_map():
    return dict(central_corpus())
