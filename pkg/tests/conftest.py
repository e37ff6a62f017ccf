import pathlib

import pytest

from boolfrac import lang

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def die_path():
    return str(FIXTURES / "die.cs")


@pytest.fixture(scope="session")
def die():
    return lang.parse_space((FIXTURES / "die.cs").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def uniform(die):
    return die.measures["uniform"]
