#!/usr/bin/env python3
"""Walk through the core capabilities on the bundled sample corpus.

Run from the repository root:

    python demos/quickstart.py
"""

from pathlib import Path

from clioquery.corpus import attach_parses, find_sentences_mentioning, ingest_corpus
from clioquery.feed import SearchContext, run_search
from clioquery.index import FilterState, boolean_search, build_index, gather_mentions
from clioquery.relextract import load_default_weights
from clioquery.session import SessionState, mark_read, summary, toggle_bookmark
from clioquery.stats import reading_burden
from clioquery.timeseries import aggregate

SAMPLE = Path(__file__).resolve().parent.parent / "data" / "sample"


def main() -> None:
    # 1. Load the archive and its dependency parses.
    corpus = ingest_corpus(SAMPLE / "salvador.jsonl", name="salvador")
    corpus, report = attach_parses(corpus, SAMPLE / "salvador.conllu")
    print(f"{len(corpus)} documents; parses on {report.attached} sentences")

    # 2. Build the inverted index and gather every mention of a query.
    index = build_index(corpus)
    hits = boolean_search(index, FilterState(query="duarte"))
    mentions = gather_mentions(index, hits, "duarte")
    print(f'"duarte": {len(hits)} documents, {len(mentions)} mentions')

    # 3. Inspect one document's mentions in place.
    doc = corpus.documents["s13"]
    for sent_idx, _ in find_sentences_mentioning(doc, "georges"):
        sent = doc.sentences[sent_idx]
        print(f"  s13[{sent_idx}] {doc.text_of(sent)!r}")

    # 4. One search call returns the feed page, time series, and summary.
    ctx = SearchContext(corpus=corpus, index=index, weights=load_default_weights())
    payload = run_search(ctx, FilterState(query="duarte", subquery="reagan"), SessionState())
    print("\nfeed for duarte + reagan:")
    for entry in payload["feed"]:
        s = entry["default_shortening"]
        print(f"  {entry['date']}  [{s['method']:>14}]  {s['display_text']}")

    ts = payload["timeseries"]
    print("per-year counts:", dict(zip(ts["years"], ts["query_counts"])))

    # 5. Reading history: the read/unread/bookmarked partition.
    results = frozenset(e["doc_id"] for e in payload["feed"])
    state = SessionState(query="duarte", subquery="reagan")
    state = mark_read(state, "s06", results)
    state = toggle_bookmark(state, "s11", results)
    print("history:", summary(state, results).to_dict())

    # 6. Reading-burden accounting at the three context sizes.
    burden = reading_burden(ctx, FilterState(query="reagan", subquery="duarte"))
    print(
        f"tokens: document={burden.full_doc_tokens} "
        f"sentence={burden.full_sentence_tokens} shortened={burden.shortened_tokens} "
        f"(saves {burden.reduction_vs_doc:.1f}% vs full documents)"
    )

    # 7. The neutral overview when no query is set.
    neutral = aggregate(index, FilterState(), SessionState())
    print("neutral series:", dict(zip(neutral.years, neutral.query_counts)))


if __name__ == "__main__":
    main()
