import pytest

from koverbs import lexicon as lexicon_mod
from koverbs import load_expectations, load_lexicon


def shipped_paths():
    base = lexicon_mod.default_data_dir()
    return (
        base / lexicon_mod.ENDINGS_FILE,
        base / lexicon_mod.VERBS_FILE,
        base / lexicon_mod.TEMPLATE_FILE,
    )


@pytest.fixture(scope="session")
def data_dir():
    return lexicon_mod.default_data_dir()


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(*shipped_paths())


@pytest.fixture(scope="session")
def expectations(data_dir):
    return load_expectations(data_dir / lexicon_mod.EXPECTATIONS_FILE)
