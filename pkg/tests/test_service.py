import itertools

import pytest
from fastapi.testclient import TestClient

from clioquery.feed import SearchContext
from clioquery.index import FilterState, boolean_search, build_index
from clioquery.relextract import load_default_weights
from clioquery.service import create_app
from conftest import corpus_from_texts

_session_counter = itertools.count()


@pytest.fixture(scope="module")
def client(sample_corpus):
    tiny = corpus_from_texts(
        [("t1", "1990-05-05", "Tiny", "Duarte appears once.")], name="tiny"
    )
    contexts = {
        "salvador": SearchContext(
            corpus=sample_corpus,
            index=build_index(sample_corpus),
            weights=load_default_weights(),
        ),
        "tiny": SearchContext(corpus=tiny, index=build_index(tiny)),
    }
    app = create_app(contexts)
    return TestClient(app)


@pytest.fixture()
def sid():
    return f"test-session-{next(_session_counter)}"


def search(client, sid, **params):
    response = client.get("/search", params=params, headers={"X-Session-Id": sid})
    assert response.status_code == 200, response.text
    return response.json()


class TestCorpora:
    def test_listing(self, client):
        rows = {row["name"]: row for row in client.get("/corpora").json()}
        assert rows["salvador"]["doc_count"] == 15
        assert rows["salvador"]["year_range"] == [1982, 1986]
        assert rows["tiny"]["doc_count"] == 1


class TestSearch:
    def test_feed_matches_boolean_search(self, client, sample_context, sid):
        payload = search(client, sid, corpus="salvador", q="duarte")
        expected = boolean_search(sample_context.index, FilterState(query="duarte"))
        assert [e["doc_id"] for e in payload["feed"]] == expected
        assert payload["total_results"] == len(expected)

    def test_feed_is_chronological(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="duarte")
        dates = [e["date"] for e in payload["feed"]]
        assert dates == sorted(dates)

    def test_no_query_lists_all_docs_neutral(self, client, sid):
        payload = search(client, sid, corpus="salvador")
        assert len(payload["feed"]) == 15
        assert payload["timeseries"]["neutral"] is True
        assert payload["feed"][0]["default_shortening"] is None
        assert payload["feed"][0]["count_marker"] is None

    def test_count_marker_counts_subquery(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="reagan", subq="duarte")
        for entry in payload["feed"]:
            assert entry["count_marker"]["term"] == "duarte"
            assert entry["count_marker"]["bucket"] == min(entry["count_marker"]["count"], 5)

    def test_count_marker_counts_query_without_subquery(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="duarte")
        assert all(e["count_marker"]["term"] == "duarte" for e in payload["feed"])

    def test_every_shortening_contains_query(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="duarte")
        for entry in payload["feed"]:
            assert "duarte" in entry["default_shortening"]["display_text"].lower()

    def test_timeseries_and_feed_share_doc_ids(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="duarte", subq="reagan", k=1)
        feed_ids = sorted(e["doc_id"] for e in payload["feed"])
        rug_ids = sorted(p["doc_id"] for p in payload["timeseries"]["rug_points"])
        assert feed_ids == rug_ids

    def test_invalid_k_rejected(self, client, sid):
        response = client.get(
            "/search", params={"corpus": "salvador", "q": "duarte", "k": 9},
            headers={"X-Session-Id": sid},
        )
        assert response.status_code == 422

    def test_invalid_date_rejected(self, client, sid):
        response = client.get(
            "/search",
            params={"corpus": "salvador", "q": "duarte", "from": "not-a-date"},
            headers={"X-Session-Id": sid},
        )
        assert response.status_code == 422

    def test_unknown_corpus_404(self, client, sid):
        response = client.get(
            "/search", params={"corpus": "missing", "q": "x"}, headers={"X-Session-Id": sid}
        )
        assert response.status_code == 404

    def test_date_filter(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="duarte",
                         **{"from": "1984-01-01", "to": "1984-12-31"})
        assert payload["feed"]
        assert all(e["date"].startswith("1984") for e in payload["feed"])

    def test_pagination(self, client, sid):
        full = search(client, sid, corpus="salvador", q="duarte")
        total = len(full["feed"])
        assert total > 2
        # page_size is fixed server-side; exercise the cursor instead
        page2 = search(client, sid, corpus="salvador", q="duarte", cursor=2)
        assert [e["doc_id"] for e in page2["feed"]] == [
            e["doc_id"] for e in full["feed"][2:]
        ]

    def test_expand_parameter(self, client, sid):
        payload = search(client, sid, corpus="salvador", q="georges", expand=True)
        entry = next(e for e in payload["feed"] if e["doc_id"] == "s13")
        assert len(entry["expanded"]) == 3

    def test_replay_is_deterministic(self, client):
        a = search(client, "replay-1", corpus="salvador", q="duarte", subq="reagan")
        b = search(client, "replay-2", corpus="salvador", q="duarte", subq="reagan")
        assert a == b


class TestDocumentView:
    def test_view_shape_and_read_marking(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        view = client.get(
            "/doc/s05", params={"corpus": "salvador", "q": "duarte"},
            headers={"X-Session-Id": sid},
        ).json()
        assert view["doc_id"] == "s05" and view["headline"] == "Duarte Wins Presidency"
        after = search(client, sid, corpus="salvador", q="duarte")
        states = {e["doc_id"]: e["read_state"] for e in after["feed"]}
        assert states["s05"] == "read"
        rug = {p["doc_id"]: p["read_state"] for p in after["timeseries"]["rug_points"]}
        assert rug["s05"] == "read"

    def test_highlight_spans_slice_to_terms(self, client, sample_corpus, sid):
        view = client.get(
            "/doc/s06", params={"corpus": "salvador", "q": "duarte", "subq": "reagan"},
            headers={"X-Session-Id": sid},
        ).json()
        body = sample_corpus.documents["s06"].body
        assert view["body"] == body
        kinds = {s["kind"] for s in view["highlight_spans"]}
        assert kinds == {"query", "subquery", "shortening"}
        for span in view["highlight_spans"]:
            text = body[span["char_start"]:span["char_end"]]
            if span["kind"] == "query":
                assert text.lower() == "duarte"
            elif span["kind"] == "subquery":
                assert text.lower() == "reagan"
            else:
                assert "duarte" in text.lower()

    def test_unknown_doc_404(self, client, sid):
        response = client.get(
            "/doc/nope", params={"corpus": "salvador"}, headers={"X-Session-Id": sid}
        )
        assert response.status_code == 404


class TestExpandEndpoint:
    def test_three_mentions_three_shortenings(self, client, sid):
        shortenings = client.get(
            "/doc/s13/expand", params={"corpus": "salvador", "q": "georges"},
            headers={"X-Session-Id": sid},
        ).json()
        assert len(shortenings) == 3
        assert all("georges" in s["display_text"].lower() for s in shortenings)

    def test_offsets_slice_body(self, client, sample_corpus, sid):
        shortenings = client.get(
            "/doc/s13/expand", params={"corpus": "salvador", "q": "georges"},
            headers={"X-Session-Id": sid},
        ).json()
        body = sample_corpus.documents["s13"].body
        for s in shortenings:
            sliced = body[s["source_char_start"]:s["source_char_end"]]
            first_piece = s["display_text"].split(" … ")[0]
            assert sliced.startswith(first_piece)


class TestSessionEndpoints:
    def test_mark_read_and_bookmark(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        read = client.post(
            "/doc/s01/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid}
        )
        assert read.json() == {"doc_id": "s01", "read_state": "read"}
        marked = client.post(
            "/doc/s01/bookmark", params={"corpus": "salvador"}, headers={"X-Session-Id": sid}
        )
        assert marked.json()["read_state"] == "bookmarked"
        summary = search(client, sid, corpus="salvador", q="duarte")["summary"]
        assert summary["bookmarked_count"] == 1 and summary["read_count"] == 0

    def test_mutation_outside_result_set_rejected(self, client, sid):
        search(client, sid, corpus="salvador", q="georges")
        response = client.post(
            "/doc/s01/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid}
        )
        assert response.status_code == 409

    def test_query_change_resets_history(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        client.post("/doc/s01/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid})
        ack = client.post(
            "/session/query", json={"query": "reagan"},
            params={"corpus": "salvador"}, headers={"X-Session-Id": sid},
        ).json()
        assert ack["reset"] is True
        summary = search(client, sid, corpus="salvador", q="reagan")["summary"]
        assert summary["read_count"] == 0

    def test_same_query_keeps_history(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        client.post("/doc/s01/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid})
        ack = client.post(
            "/session/query", json={"query": "duarte"},
            params={"corpus": "salvador"}, headers={"X-Session-Id": sid},
        ).json()
        assert ack["reset"] is False
        summary = search(client, sid, corpus="salvador", q="duarte")["summary"]
        assert summary["read_count"] == 1

    def test_filter_changes_keep_history(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        client.post("/doc/s05/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid})
        narrowed = search(client, sid, corpus="salvador", q="duarte", k=2)
        assert narrowed["summary"]["read_count"] >= 1

    def test_visibility_toggle_hides_entries(self, client, sid):
        search(client, sid, corpus="salvador", q="duarte")
        client.post("/doc/s05/read", params={"corpus": "salvador"}, headers={"X-Session-Id": sid})
        client.post(
            "/session/visibility", json={"show_read": False},
            params={"corpus": "salvador"}, headers={"X-Session-Id": sid},
        )
        payload = search(client, sid, corpus="salvador", q="duarte")
        ids = {e["doc_id"] for e in payload["feed"]}
        assert "s05" not in ids
        assert "s05" not in {p["doc_id"] for p in payload["timeseries"]["rug_points"]}
        # the summary still counts the hidden document
        assert payload["summary"]["read_count"] == 1

    def test_sessions_are_independent(self, client):
        search(client, "indep-a", corpus="salvador", q="duarte")
        client.post(
            "/doc/s05/read", params={"corpus": "salvador"}, headers={"X-Session-Id": "indep-a"}
        )
        other = search(client, "indep-b", corpus="salvador", q="duarte")
        assert other["summary"]["read_count"] == 0

    def test_default_corpus_requires_disambiguation(self, client, sid):
        response = client.get("/search", params={"q": "duarte"}, headers={"X-Session-Id": sid})
        assert response.status_code == 422
