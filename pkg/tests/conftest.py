from dataclasses import replace
from pathlib import Path

import pytest

from gausseer.gparse import parse_document
from gausseer.index import build_index
from gausseer.synth import synth_corpus
from gausseer.taxonomy import default_taxonomy

FIXTURE_DIR = Path(__file__).parent / "fixtures"
LOG_DIR = FIXTURE_DIR / "logs"
GOLDEN_DIR = FIXTURE_DIR / "golden"
CORPUS_DIR = FIXTURE_DIR / "corpus"


@pytest.fixture(scope="session")
def taxonomy():
    return default_taxonomy()


@pytest.fixture(scope="session")
def corpus_records(taxonomy):
    """240 parsed synthetic documents with ids 1..240."""
    cases = synth_corpus(seed=1201, size=240)
    return [
        replace(parse_document(c.text, c.record.file_path, taxonomy), id=i + 1)
        for i, c in enumerate(cases)
    ]


@pytest.fixture(scope="session")
def snapshot(corpus_records, taxonomy):
    return build_index(corpus_records, taxonomy)
