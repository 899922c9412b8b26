import pytest

from asymcover.corpus import standard_corpus, semisimple_corpus, truncated_polynomial, path_algebra_An
from asymcover.cover import build_cover
from asymcover.linalg import GF, QQ

F5 = GF(5)


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e.algebra for e in corpus}


@pytest.fixture(scope="session")
def semisimple():
    return semisimple_corpus()


@pytest.fixture(scope="session")
def covers(corpus):
    """Covers of every corpus algebra, built once per session."""
    return {e.name: build_cover(e.algebra) for e in corpus}


@pytest.fixture(scope="session")
def A2():
    return path_algebra_An(2, F5)


@pytest.fixture(scope="session")
def dual_numbers():
    return truncated_polynomial(F5, 2)
