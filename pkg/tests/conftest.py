import sys
from datetime import date
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clioquery.corpus import Corpus, Document, attach_parses, ingest_corpus, segment
from clioquery.feed import SearchContext
from clioquery.index import build_index
from clioquery.relextract import load_default_weights

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLE_DIR = REPO_ROOT / "data" / "sample"
SAMPLE_CORPUS = SAMPLE_DIR / "salvador.jsonl"
SAMPLE_PARSES = SAMPLE_DIR / "salvador.conllu"


def corpus_from_texts(records, name="fixture") -> Corpus:
    """records: iterable of (id, iso_date, headline, body)."""
    documents = {}
    for doc_id, iso, headline, body in records:
        documents[doc_id] = Document(
            id=doc_id,
            date=date.fromisoformat(iso),
            headline=headline,
            body=body,
            sentences=segment(body),
        )
    return Corpus(documents=documents, name=name)


@pytest.fixture(scope="session")
def sample_corpus() -> Corpus:
    corpus = ingest_corpus(SAMPLE_CORPUS, name="salvador")
    corpus, report = attach_parses(corpus, SAMPLE_PARSES)
    assert not report.warnings and not report.sentence_errors
    return corpus


@pytest.fixture(scope="session")
def sample_context(sample_corpus) -> SearchContext:
    return SearchContext(
        corpus=sample_corpus,
        index=build_index(sample_corpus),
        weights=load_default_weights(),
    )
