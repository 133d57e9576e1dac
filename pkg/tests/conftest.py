import pytest

from poscat.category import builtin
from poscat.enumerate import enumerate_categories
from poscat.limits import is_weakly_lex
from poscat.regular import is_exact, is_regular
from poscat.theorems import EXTRA_FIXTURES


@pytest.fixture
def ONE():
    return builtin("ONE")


@pytest.fixture
def ARROW():
    return builtin("ARROW")


@pytest.fixture
def IDEM():
    return builtin("IDEM")


@pytest.fixture(scope="session")
def corpus_25():
    return list(enumerate_categories(2, 5))


@pytest.fixture(scope="session")
def corpus_24():
    return list(enumerate_categories(2, 4))


@pytest.fixture(scope="session")
def weakly_lex_25(corpus_25):
    return [c for c in corpus_25 if is_weakly_lex(c)]


@pytest.fixture(scope="session")
def regular_25(corpus_25):
    return [c for c in corpus_25 if is_regular(c)]


@pytest.fixture(scope="session")
def extras():
    return [builtin(n) for n in EXTRA_FIXTURES]


@pytest.fixture(scope="session")
def weakly_lex_all(weakly_lex_25, extras):
    return weakly_lex_25 + extras


@pytest.fixture(scope="session")
def exact_all(regular_25, extras):
    return [c for c in regular_25 + extras if is_exact(c)]
