import pytest

from pathlib import Path

from punkit.corpus import build_pair_catalog, load_compatibility_file
from punkit.embeddings import load_embeddings
from punkit.keywords import PosLexicon, default_stopwords

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def dataset():
    return load_compatibility_file(DATA / "compat_records.tsv")


@pytest.fixture(scope="session")
def catalog():
    return build_pair_catalog(DATA / "pair_lexicon.tsv")


@pytest.fixture(scope="session")
def table():
    return load_embeddings(DATA / "embeddings_300d.txt")


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture(scope="session")
def pos_lexicon():
    return PosLexicon.load(DATA / "pos_lexicon.tsv")
