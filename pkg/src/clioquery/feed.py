"""Search-response assembly shared by the HTTP service and the CLI.

Everything here is pure: given a corpus, its index, filters and a session
snapshot, build JSON-ready payloads.  The feed and the time-series rug
points come from one shared filter evaluation, so their document lists
always agree.
"""

from dataclasses import dataclass, field

from . import session as session_mod
from .corpus import Corpus, find_sentences_mentioning
from .index import FilterState, InvertedIndex, TfidfScorer
from .relextract import RelWeights
from .session import SessionState
from .simplify import ShorteningConfig, choose_default_shortening, expand_document
from .timeseries import aggregate, result_ids, visible_result_ids

PAGE_SIZE = 200
COUNT_BUCKET_MAX = 5


@dataclass
class SearchContext:
    """One corpus plus the pieces needed to answer searches against it."""

    corpus: Corpus
    index: InvertedIndex
    weights: RelWeights | None = None
    config: ShorteningConfig = field(default_factory=ShorteningConfig)

    def scorer_for(self, query: str) -> TfidfScorer:
        return TfidfScorer(self.index, self.index.docs_containing(query))


def count_marker(index: InvertedIndex, doc_id: str, filters: FilterState) -> dict | None:
    """Per-document count of the subquery when set, else the query, with a
    brightness bucket capped at 5."""
    term = filters.subquery if filters.subquery is not None else filters.query
    if term is None:
        return None
    count = index.term_count(doc_id, term)
    return {"term": term, "count": count, "bucket": min(count, COUNT_BUCKET_MAX)}


def feed_entry(
    ctx: SearchContext,
    doc_id: str,
    filters: FilterState,
    state: SessionState,
    scorer: TfidfScorer | None,
    expand: bool = False,
) -> dict:
    doc = ctx.corpus.documents[doc_id]
    default = None
    expanded = None
    if filters.query is not None and scorer is not None:
        default = choose_default_shortening(
            doc,
            filters.query,
            scorer,
            ctx.config,
            subquery=filters.subquery,
            weights=ctx.weights,
        ).to_dict()
        if expand:
            expanded = [
                s.to_dict()
                for s in expand_document(
                    doc,
                    filters.query,
                    scorer,
                    ctx.config,
                    subquery=filters.subquery,
                    weights=ctx.weights,
                )
            ]
    return {
        "doc_id": doc_id,
        "date": doc.date.isoformat(),
        "headline": doc.headline,
        "default_shortening": default,
        "expanded": expanded,
        "count_marker": count_marker(ctx.index, doc_id, filters),
        "read_state": session_mod.read_state(state, doc_id),
    }


def run_search(
    ctx: SearchContext,
    filters: FilterState,
    state: SessionState,
    cursor: int = 0,
    page_size: int = PAGE_SIZE,
    expand: bool = False,
) -> dict:
    """The /search payload: one chronological feed page, the full time
    series, and the reading-history summary over the whole result set."""
    all_ids = result_ids(ctx.index, filters)
    visible_ids = visible_result_ids(ctx.index, filters, state)
    page = visible_ids[cursor:cursor + page_size]
    scorer = ctx.scorer_for(filters.query) if filters.query is not None else None
    entries = [feed_entry(ctx, d, filters, state, scorer, expand) for d in page]
    next_cursor = cursor + page_size if cursor + page_size < len(visible_ids) else None
    return {
        "feed": entries,
        "timeseries": aggregate(ctx.index, filters, state).to_dict(),
        "summary": session_mod.summary(state, all_ids).to_dict(),
        "total_results": len(all_ids),
        "visible_results": len(visible_ids),
        "next_cursor": next_cursor,
    }


def expand_payload(ctx: SearchContext, doc_id: str, filters: FilterState) -> list[dict]:
    doc = ctx.corpus.documents[doc_id]
    if filters.query is None:
        return []
    scorer = ctx.scorer_for(filters.query)
    return [
        s.to_dict()
        for s in expand_document(
            doc,
            filters.query,
            scorer,
            ctx.config,
            subquery=filters.subquery,
            weights=ctx.weights,
        )
    ]


def document_view(ctx: SearchContext, doc_id: str, filters: FilterState) -> dict:
    """Full text of one document plus highlight spans: every query and
    subquery mention, and the source span of each shortening so the viewer
    can scroll to and paint the summarized text."""
    doc = ctx.corpus.documents[doc_id]
    spans = []
    if filters.query is not None:
        for sent_idx, token_idxs in find_sentences_mentioning(doc, filters.query):
            for t in token_idxs:
                tok = doc.sentences[sent_idx].tokens[t]
                spans.append(
                    {"char_start": tok.char_start, "char_end": tok.char_end, "kind": "query"}
                )
        if filters.subquery is not None:
            for sent_idx, token_idxs in find_sentences_mentioning(doc, filters.subquery):
                for t in token_idxs:
                    tok = doc.sentences[sent_idx].tokens[t]
                    spans.append(
                        {"char_start": tok.char_start, "char_end": tok.char_end, "kind": "subquery"}
                    )
        scorer = ctx.scorer_for(filters.query)
        for shortening in expand_document(
            doc,
            filters.query,
            scorer,
            ctx.config,
            subquery=filters.subquery,
            weights=ctx.weights,
        ):
            spans.append(
                {
                    "char_start": shortening.source_char_start,
                    "char_end": shortening.source_char_end,
                    "kind": "shortening",
                }
            )
    spans.sort(key=lambda s: (s["char_start"], s["char_end"], s["kind"]))
    return {
        "doc_id": doc.id,
        "headline": doc.headline,
        "date": doc.date.isoformat(),
        "body": doc.body,
        "highlight_spans": spans,
    }
