"""Inverted index and unranked Boolean retrieval.

Search is deliberately rank-free: a query returns the full chronological
set of documents containing it, narrowed only by explicit filters
(subquery, date range, minimum count).  The index also carries the
per-document counts and document frequencies that the tf-idf scoring used
by sentence shortening needs.
"""

import hashlib
import pickle
from dataclasses import dataclass, field
from datetime import date

from .corpus import Corpus, is_word_like, normalize_term

CACHE_FORMAT_VERSION = 1
MIN_COUNT_RANGE = (1, 2, 3, 4, 5)

# A posting position: (sentence_index, token_index, char_start, char_end).
Position = tuple[int, int, int, int]


@dataclass
class Mention:
    """One exact occurrence of a term in a document."""

    doc_id: str
    sentence_index: int
    token_index: int
    char_start: int
    char_end: int


@dataclass
class FilterState:
    """Query plus the three narrowing filters.

    ``min_count`` applies to the subquery's per-document count when a
    subquery is set, otherwise to the query's count.
    """

    query: str | None = None
    subquery: str | None = None
    date_start: date | None = None
    date_end: date | None = None
    min_count: int = 1

    def __post_init__(self):
        if self.query is not None and not is_word_like(self.query):
            raise ValueError(f"query must be a single word-like term: {self.query!r}")
        if self.subquery is not None:
            if self.query is None:
                raise ValueError("subquery requires a query")
            if not is_word_like(self.subquery):
                raise ValueError(f"subquery must be a single word-like term: {self.subquery!r}")
        if self.date_start is not None and self.date_end is not None and self.date_start > self.date_end:
            raise ValueError("date_start must be <= date_end")
        if self.min_count not in MIN_COUNT_RANGE:
            raise ValueError(f"min_count must be in {MIN_COUNT_RANGE}: {self.min_count}")

    def accepts_date(self, d: date) -> bool:
        if self.date_start is not None and d < self.date_start:
            return False
        if self.date_end is not None and d > self.date_end:
            return False
        return True


@dataclass
class InvertedIndex:
    # term -> {doc_id -> [positions]}
    postings: dict[str, dict[str, list[Position]]] = field(default_factory=dict)
    doc_term_counts: dict[tuple[str, str], int] = field(default_factory=dict)
    doc_freq: dict[str, int] = field(default_factory=dict)
    doc_dates: dict[str, date] = field(default_factory=dict)
    doc_headlines: dict[str, str] = field(default_factory=dict)
    corpus_ref: str = ""

    @property
    def n_docs(self) -> int:
        return len(self.doc_dates)

    def docs_containing(self, term: str, min_count: int = 1) -> list[str]:
        wanted = normalize_term(term)
        return [
            doc_id
            for doc_id, positions in self.postings.get(wanted, {}).items()
            if len(positions) >= min_count
        ]

    def term_count(self, doc_id: str, term: str) -> int:
        return self.doc_term_counts.get((doc_id, normalize_term(term)), 0)

    def all_doc_ids_chronological(self) -> list[str]:
        return sorted(self.doc_dates, key=lambda d: (self.doc_dates[d], d))


def build_index(corpus: Corpus) -> InvertedIndex:
    """Build the inverted index; deterministic for a given corpus."""
    index = InvertedIndex(corpus_ref=corpus.name)
    for doc_id, doc in corpus.documents.items():
        index.doc_dates[doc_id] = doc.date
        index.doc_headlines[doc_id] = doc.headline
        for sent in doc.sentences:
            for tok_idx, tok in enumerate(sent.tokens):
                term = normalize_term(tok.text)
                by_doc = index.postings.setdefault(term, {})
                by_doc.setdefault(doc_id, []).append(
                    (sent.index, tok_idx, tok.char_start, tok.char_end)
                )
                index.doc_term_counts[(doc_id, term)] = (
                    index.doc_term_counts.get((doc_id, term), 0) + 1
                )
    for term, by_doc in index.postings.items():
        index.doc_freq[term] = len(by_doc)
    return index


def boolean_search(index: InvertedIndex, filters: FilterState) -> list[str]:
    """Unranked Boolean retrieval: all documents containing the query,
    intersected with the subquery set when one is given, restricted to the
    date range, and required to meet the count threshold.  Results are
    ordered by (date, id) ascending; there is no relevance ranking."""
    if filters.query is None:
        raise ValueError("boolean_search requires filters.query")
    if filters.subquery is not None:
        result = set(index.docs_containing(filters.query))
        result &= set(index.docs_containing(filters.subquery, filters.min_count))
    else:
        result = set(index.docs_containing(filters.query, filters.min_count))
    hits = [d for d in result if filters.accepts_date(index.doc_dates[d])]
    hits.sort(key=lambda d: (index.doc_dates[d], d))
    return hits


def gather_mentions(index: InvertedIndex, doc_ids, term: str) -> list[Mention]:
    """Every occurrence of ``term`` in the given documents, in the given
    document order, then position order."""
    wanted = normalize_term(term)
    by_doc = index.postings.get(wanted, {})
    mentions = []
    for doc_id in doc_ids:
        for sent_idx, tok_idx, c_start, c_end in by_doc.get(doc_id, []):
            mentions.append(Mention(doc_id, sent_idx, tok_idx, c_start, c_end))
    return mentions


def tfidf_word(index: InvertedIndex, word: str, query_doc_set) -> float:
    """tf = total occurrences of the word across the documents containing
    the current query; idf = 1 / number of corpus documents containing the
    word.  Words with zero document frequency score 0 instead of dividing
    by zero."""
    wanted = normalize_term(word)
    df = index.doc_freq.get(wanted, 0)
    if df == 0:
        return 0.0
    tf = 0
    for doc_id, positions in index.postings[wanted].items():
        if doc_id in query_doc_set:
            tf += len(positions)
    return tf / df


class TfidfScorer:
    """Memoizing wrapper around tfidf_word for one query's document set."""

    def __init__(self, index: InvertedIndex, query_doc_set):
        self.index = index
        self.query_doc_set = set(query_doc_set)
        self._cache: dict[str, float] = {}

    def word_score(self, word: str) -> float:
        wanted = normalize_term(word)
        score = self._cache.get(wanted)
        if score is None:
            score = tfidf_word(self.index, wanted, self.query_doc_set)
            self._cache[wanted] = score
        return score

    def mean_score(self, words) -> float:
        words = list(words)
        if not words:
            return 0.0
        return sum(self.word_score(w) for w in words) / len(words)


# ---------------------------------------------------------------------------
# On-disk cache
# ---------------------------------------------------------------------------

def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def serialize_index(index: InvertedIndex, corpus_hash: str = "") -> bytes:
    payload = {
        "version": CACHE_FORMAT_VERSION,
        "corpus_hash": corpus_hash,
        "corpus_ref": index.corpus_ref,
        "postings": index.postings,
        "doc_term_counts": index.doc_term_counts,
        "doc_freq": index.doc_freq,
        "doc_dates": index.doc_dates,
        "doc_headlines": index.doc_headlines,
    }
    return pickle.dumps(payload, protocol=4)


def deserialize_index(blob: bytes, expected_hash: str | None = None) -> InvertedIndex | None:
    """None when the blob is unusable (wrong version or stale hash);
    correctness never depends on the cache being present."""
    try:
        payload = pickle.loads(blob)
    except Exception:
        return None
    if not isinstance(payload, dict) or payload.get("version") != CACHE_FORMAT_VERSION:
        return None
    if expected_hash is not None and payload.get("corpus_hash") != expected_hash:
        return None
    return InvertedIndex(
        postings=payload["postings"],
        doc_term_counts=payload["doc_term_counts"],
        doc_freq=payload["doc_freq"],
        doc_dates=payload["doc_dates"],
        doc_headlines=payload["doc_headlines"],
        corpus_ref=payload["corpus_ref"],
    )


def save_index(index: InvertedIndex, path, corpus_hash: str = "") -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_index(index, corpus_hash))


def load_index(path, expected_hash: str | None = None) -> InvertedIndex | None:
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError:
        return None
    return deserialize_index(blob, expected_hash)
