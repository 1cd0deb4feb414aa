#!/usr/bin/env python3
"""Record real service payloads as JSON fixtures for the frontend tests.

Run from the repository root after installing the Python package:

    python frontend/scripts/capture_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from clioquery.corpus import attach_parses, ingest_corpus
from clioquery.feed import SearchContext
from clioquery.index import build_index
from clioquery.relextract import load_default_weights
from clioquery.service import create_app

ROOT = Path(__file__).resolve().parent.parent.parent
SAMPLE = ROOT / "data" / "sample"
OUT = ROOT / "frontend" / "tests" / "fixtures"


def main() -> None:
    corpus = ingest_corpus(SAMPLE / "salvador.jsonl", name="salvador")
    corpus, _ = attach_parses(corpus, SAMPLE / "salvador.conllu")
    ctx = SearchContext(
        corpus=corpus, index=build_index(corpus), weights=load_default_weights()
    )
    client = TestClient(create_app({"salvador": ctx}))
    OUT.mkdir(parents=True, exist_ok=True)

    captures = {
        "corpora.json": ("/corpora", {}),
        "search_default.json": ("/search", {"corpus": "salvador"}),
        "search_duarte.json": ("/search", {"corpus": "salvador", "q": "duarte"}),
        "search_duarte_k3.json": ("/search", {"corpus": "salvador", "q": "duarte", "k": 3}),
        "search_duarte_reagan.json": (
            "/search", {"corpus": "salvador", "q": "duarte", "subq": "reagan"},
        ),
        "search_georges.json": ("/search", {"corpus": "salvador", "q": "georges"}),
        "doc_s06.json": ("/doc/s06", {"corpus": "salvador", "q": "duarte", "subq": "reagan"}),
        "doc_s13.json": ("/doc/s13", {"corpus": "salvador", "q": "georges"}),
        "expand_s13.json": ("/doc/s13/expand", {"corpus": "salvador", "q": "georges"}),
        "expand_s06.json": (
            "/doc/s06/expand", {"corpus": "salvador", "q": "duarte", "subq": "reagan"},
        ),
    }
    for name, (path, params) in captures.items():
        response = client.get(path, params=params, headers={"X-Session-Id": f"fixture-{name}"})
        response.raise_for_status()
        (OUT / name).write_text(json.dumps(response.json(), indent=2, sort_keys=True) + "\n")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
