import json

import pytest
from fastapi.testclient import TestClient

from clioquery.cli import main
from clioquery.feed import SearchContext
from clioquery.relextract import load_default_weights
from clioquery.service import create_app
from clioquery.storage import load_corpus_dir
from conftest import SAMPLE_CORPUS, SAMPLE_PARSES


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("ingested") / "salvador"
    code = main(
        ["ingest", str(SAMPLE_CORPUS), "--parses", str(SAMPLE_PARSES), "--out", str(out)]
    )
    assert code == 0
    return out


class TestIngest:
    def test_creates_directory_layout(self, corpus_dir):
        assert (corpus_dir / "corpus.meta.json").exists()
        assert (corpus_dir / "corpus.jsonl").exists()
        assert (corpus_dir / "parses.conllu").exists()
        assert (corpus_dir / "index.bin").exists()
        meta = json.loads((corpus_dir / "corpus.meta.json").read_text())
        assert meta["doc_count"] == 15

    def test_loadable(self, corpus_dir):
        corpus, index = load_corpus_dir(corpus_dir)
        assert len(corpus) == 15 and index.n_docs == 15
        assert corpus.documents["s06"].sentences[1].parse is not None

    def test_stale_cache_rebuilt(self, corpus_dir):
        (corpus_dir / "index.bin").write_bytes(b"junk")
        corpus, index = load_corpus_dir(corpus_dir)
        assert index.n_docs == 15

    def test_missing_corpus_exits_nonzero(self, tmp_path, capsys):
        code = main(["ingest", str(tmp_path / "nope.jsonl"), "--out", str(tmp_path / "o")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_parse_warnings_printed(self, tmp_path, capsys):
        bad = tmp_path / "bad.conllu"
        bad.write_text(
            "# doc_id = ghost\n# sent_index = 0\n"
            "1\tWho\t_\tPRON\t_\t_\t0\troot\t_\t_\n",
            encoding="utf-8",
        )
        code = main(
            ["ingest", str(SAMPLE_CORPUS), "--parses", str(bad), "--out", str(tmp_path / "o")]
        )
        assert code == 0
        assert "ghost" in capsys.readouterr().err


class TestQuery:
    def test_text_output_chronological(self, corpus_dir, capsys):
        assert main(["query", str(corpus_dir), "--q", "duarte"]) == 0
        out = capsys.readouterr().out
        lines = [l for l in out.splitlines() if l and l[0].isdigit() and "-" in l[:10]]
        dates = [l.split()[0] for l in lines]
        assert dates == sorted(dates) and len(dates) == 10

    def test_text_and_json_carry_identical_document_sequences(self, corpus_dir, capsys):
        assert main(["query", str(corpus_dir), "--q", "duarte", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["feed"]) == 10
        assert main(["query", str(corpus_dir), "--q", "duarte"]) == 0
        text = capsys.readouterr().out
        # same documents in the same order: headlines appear at increasing
        # positions in the text rendering
        positions = [text.index(e["headline"]) for e in payload["feed"]]
        assert positions == sorted(positions)

    def test_json_equals_service_payload(self, corpus_dir, capsys):
        args = ["query", str(corpus_dir), "--q", "duarte", "--subq", "reagan",
                "--from", "1983-01-01", "--to", "1986-12-31", "--k", "1", "--expand",
                "--format", "json"]
        assert main(args) == 0
        cli_payload = json.loads(capsys.readouterr().out)

        corpus, index = load_corpus_dir(corpus_dir)
        ctx = SearchContext(corpus=corpus, index=index, weights=load_default_weights())
        client = TestClient(create_app({corpus.name: ctx}))
        response = client.get(
            "/search",
            params={
                "corpus": corpus.name, "q": "duarte", "subq": "reagan",
                "from": "1983-01-01", "to": "1986-12-31", "k": 1, "expand": True,
            },
            headers={"X-Session-Id": "fresh"},
        )
        assert response.status_code == 200
        assert cli_payload == response.json()

    def test_filters_narrow_results(self, corpus_dir, capsys):
        assert main(["query", str(corpus_dir), "--q", "duarte", "--subq", "reagan",
                     "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert [e["doc_id"] for e in payload["feed"]] == ["s06", "s10", "s11"]

    def test_k_filter(self, corpus_dir, capsys):
        assert main(["query", str(corpus_dir), "--q", "duarte", "--k", "3",
                     "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        for entry in payload["feed"]:
            assert entry["count_marker"]["count"] >= 3

    def test_invalid_flag_usage_error(self, corpus_dir):
        with pytest.raises(SystemExit) as err:
            main(["query", str(corpus_dir), "--q", "duarte", "--format", "xml"])
        assert err.value.code == 2

    def test_missing_dir_exits_nonzero(self, tmp_path, capsys):
        assert main(["query", str(tmp_path / "missing"), "--q", "x"]) == 1
        assert "error:" in capsys.readouterr().err


class TestStats:
    def test_ordering_invariant_and_strictness(self, corpus_dir, capsys):
        assert main(["stats", str(corpus_dir), "--q", "duarte"]) == 0
        out = capsys.readouterr().out
        values = {}
        for line in out.splitlines():
            parts = line.rsplit(None, 1)
            if len(parts) == 2 and parts[1].isdigit():
                values[parts[0].strip()] = int(parts[1])
        assert values["shortened"] <= values["full sentence"] <= values["full document"]
        # the sample corpus shortens at least one sentence
        assert values["shortened"] < values["full sentence"]
        assert "reduction vs full documents:" in out

    def test_empty_result_reports_zero_and_na(self, corpus_dir, capsys):
        assert main(["stats", str(corpus_dir), "--q", "zzzz"]) == 0
        out = capsys.readouterr().out
        assert "n/a" in out
        for line in out.splitlines():
            parts = line.rsplit(None, 1)
            if len(parts) == 2 and parts[1].isdigit():
                assert int(parts[1]) == 0

    def test_subquery_stats(self, corpus_dir, capsys):
        assert main(["stats", str(corpus_dir), "--q", "duarte", "--subq", "reagan"]) == 0
        out = capsys.readouterr().out
        assert "full document" in out


class TestConfig:
    def test_env_config_overrides_max_chars(self, corpus_dir, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "config.json"
        cfg.write_text(json.dumps({"max_chars": 40}))
        monkeypatch.setenv("CLIOQUERY_CONFIG", str(cfg))
        assert main(["query", str(corpus_dir), "--q", "duarte", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        for entry in payload["feed"]:
            assert len(entry["default_shortening"]["display_text"]) <= 40

    def test_env_var_beats_file(self, corpus_dir, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "config.json"
        cfg.write_text(json.dumps({"max_chars": 40}))
        monkeypatch.setenv("CLIOQUERY_CONFIG", str(cfg))
        monkeypatch.setenv("CLIOQUERY_MAX_CHARS", "60")
        assert main(["query", str(corpus_dir), "--q", "duarte", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        lengths = [len(e["default_shortening"]["display_text"]) for e in payload["feed"]]
        assert max(lengths) <= 60
        assert any(l > 40 for l in lengths)


class TestServe:
    def test_serve_wires_contexts_and_port(self, corpus_dir, monkeypatch):
        captured = {}

        def fake_run(app, host, port):
            captured["app"] = app
            captured["host"] = host
            captured["port"] = port

        import uvicorn

        monkeypatch.setattr(uvicorn, "run", fake_run)
        assert main(["serve", str(corpus_dir), "--port", "9123"]) == 0
        assert captured["port"] == 9123
        client = TestClient(captured["app"])
        rows = client.get("/corpora").json()
        assert rows[0]["doc_count"] == 15

    def test_serve_falls_back_to_configured_corpus_dir(self, corpus_dir, monkeypatch):
        captured = {}
        import uvicorn

        monkeypatch.setattr(uvicorn, "run", lambda app, host, port: captured.update(app=app, port=port))
        monkeypatch.setenv("CLIOQUERY_CORPUS_DIR", str(corpus_dir))
        monkeypatch.setenv("CLIOQUERY_PORT", "7777")
        assert main(["serve"]) == 0
        assert captured["port"] == 7777
        rows = TestClient(captured["app"]).get("/corpora").json()
        assert rows[0]["doc_count"] == 15

    def test_serve_without_dirs_or_config_errors(self, monkeypatch, capsys):
        monkeypatch.delenv("CLIOQUERY_CORPUS_DIR", raising=False)
        monkeypatch.delenv("CLIOQUERY_CONFIG", raising=False)
        assert main(["serve"]) == 1
        assert "corpus" in capsys.readouterr().err
