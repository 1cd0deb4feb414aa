"""clioquery: query-oriented news-archive analytics.

Gather every mention of a term across a timestamped archive, shorten each
mentioning sentence without ever dropping the term, and serve the linked
feed / document / time-series data that a reader UI needs.
"""

from .corpus import (
    Corpus,
    Document,
    Sentence,
    Token,
    attach_parses,
    find_sentences_mentioning,
    ingest_corpus,
)
from .deptree import DepTree
from .index import (
    FilterState,
    InvertedIndex,
    Mention,
    boolean_search,
    build_index,
    gather_mentions,
    tfidf_word,
)
from .relextract import RelWeights, extract_features, predict, rel_span, train
from .session import SessionState, mark_read, set_query, summary, toggle_bookmark
from .simplify import (
    Shortening,
    ShorteningConfig,
    ShorteningMethod,
    char_window,
    choose_default_shortening,
    clause_delete,
    enumerate_candidates,
    expand_document,
)
from .timeseries import TimeSeries, aggregate, year_tooltip

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Document",
    "Sentence",
    "Token",
    "DepTree",
    "FilterState",
    "InvertedIndex",
    "Mention",
    "RelWeights",
    "SessionState",
    "Shortening",
    "ShorteningConfig",
    "ShorteningMethod",
    "TimeSeries",
    "aggregate",
    "attach_parses",
    "boolean_search",
    "build_index",
    "char_window",
    "choose_default_shortening",
    "clause_delete",
    "enumerate_candidates",
    "expand_document",
    "extract_features",
    "find_sentences_mentioning",
    "gather_mentions",
    "ingest_corpus",
    "mark_read",
    "predict",
    "rel_span",
    "set_query",
    "summary",
    "tfidf_word",
    "toggle_bookmark",
    "train",
    "year_tooltip",
]
