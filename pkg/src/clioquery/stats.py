"""Reading-burden accounting: how many tokens a reviewer faces at each
context size (whole documents, mentioning sentences, shortenings)."""

from dataclasses import dataclass

from .corpus import find_sentences_mentioning
from .feed import SearchContext
from .index import FilterState
from .simplify import expand_document
from .timeseries import result_ids


@dataclass
class ReadingBurden:
    full_doc_tokens: int
    full_sentence_tokens: int
    shortened_tokens: int
    doc_count: int

    @property
    def reduction_vs_doc(self) -> float | None:
        if self.full_doc_tokens == 0:
            return None
        return 100.0 * (1.0 - self.shortened_tokens / self.full_doc_tokens)

    @property
    def reduction_vs_sentence(self) -> float | None:
        if self.full_sentence_tokens == 0:
            return None
        return 100.0 * (1.0 - self.shortened_tokens / self.full_sentence_tokens)


def reading_burden(ctx: SearchContext, filters: FilterState) -> ReadingBurden:
    """Token totals over the result set at the three context sizes.

    The sentence and shortening totals are taken over the same sentence
    universe (the query-mentioning sentences that the expanded feed
    displays), so shortened <= full sentence <= full document always holds.
    """
    if filters.query is None:
        raise ValueError("stats require a query")
    ids = result_ids(ctx.index, filters)
    scorer = ctx.scorer_for(filters.query)
    full_doc = 0
    full_sent = 0
    shortened = 0
    for doc_id in ids:
        doc = ctx.corpus.documents[doc_id]
        full_doc += doc.token_count
        for sent_idx, _ in find_sentences_mentioning(doc, filters.query):
            full_sent += len(doc.sentences[sent_idx].tokens)
        for shortening in expand_document(
            doc,
            filters.query,
            scorer,
            ctx.config,
            subquery=filters.subquery,
            weights=ctx.weights,
        ):
            shortened += len(shortening.kept_token_indices)
    return ReadingBurden(
        full_doc_tokens=full_doc,
        full_sentence_tokens=full_sent,
        shortened_tokens=shortened,
        doc_count=len(ids),
    )
