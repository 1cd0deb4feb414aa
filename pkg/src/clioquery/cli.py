"""Command-line driver: ingest, query, stats, serve."""

import argparse
import json
import sys

from .config import load_config
from .feed import SearchContext, run_search
from .index import FilterState
from .relextract import load_default_weights, load_weights
from .session import SessionState
from .simplify import ShorteningConfig
from .stats import reading_burden
from .storage import ingest_to_dir, load_corpus_dir


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clioquery")
    parser.add_argument("--config", help="config file (also via CLIOQUERY_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="ingest a JSONL corpus into a corpus directory")
    p_ingest.add_argument("corpus", help="corpus .jsonl file")
    p_ingest.add_argument("--parses", help="CoNLL-U parse file to attach")
    p_ingest.add_argument("--out", required=True, help="output corpus directory")
    p_ingest.add_argument("--name", help="corpus display name (default: file stem)")

    p_query = sub.add_parser("query", help="print the chronological feed for a query")
    p_query.add_argument("dir", help="ingested corpus directory")
    p_query.add_argument("--q", required=True)
    p_query.add_argument("--subq")
    p_query.add_argument("--from", dest="date_from")
    p_query.add_argument("--to", dest="date_to")
    p_query.add_argument("--k", type=int, default=1)
    p_query.add_argument("--expand", action="store_true")
    p_query.add_argument("--format", choices=("text", "json"), default="text")

    p_stats = sub.add_parser("stats", help="token counts at each context size")
    p_stats.add_argument("dir")
    p_stats.add_argument("--q", required=True)
    p_stats.add_argument("--subq")

    p_serve = sub.add_parser("serve", help="serve corpora over HTTP")
    p_serve.add_argument(
        "dirs", nargs="*",
        help="ingested corpus directories (default: the configured corpus_dir)",
    )
    p_serve.add_argument("--port", type=int)
    p_serve.add_argument("--host", default="127.0.0.1")
    return parser


def _load_context(path, config) -> SearchContext:
    corpus, index = load_corpus_dir(path)
    weights = (
        load_weights(config.weights_path)
        if config.weights_path
        else load_default_weights()
    )
    return SearchContext(
        corpus=corpus,
        index=index,
        weights=weights,
        config=ShorteningConfig(max_chars=config.max_chars),
    )


def _parse_filters(args) -> FilterState:
    from datetime import date

    return FilterState(
        query=args.q,
        subquery=args.subq,
        date_start=date.fromisoformat(args.date_from) if args.date_from else None,
        date_end=date.fromisoformat(args.date_to) if args.date_to else None,
        min_count=args.k,
    )


def cmd_ingest(args, config) -> int:
    corpus, index, report = ingest_to_dir(
        args.corpus, args.out, parses_path=args.parses, name=args.name
    )
    print(f"ingested {len(corpus)} documents into {args.out}")
    if report is not None:
        for warning in report.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        for error in report.sentence_errors:
            print(f"parse error: {error}", file=sys.stderr)
        print(f"attached parses to {report.attached} sentences")
    return 0


def cmd_query(args, config) -> int:
    ctx = _load_context(args.dir, config)
    filters = _parse_filters(args)
    payload = run_search(ctx, filters, SessionState(), expand=args.expand)
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
        return 0
    for entry in payload["feed"]:
        marker = entry["count_marker"]
        print(f"{entry['date']}  {entry['headline']}  [{marker['term']} x{marker['count']}]")
        if entry["default_shortening"] is not None:
            print(f"    {entry['default_shortening']['display_text']}")
        if entry["expanded"]:
            for shortening in entry["expanded"]:
                print(f"      - {shortening['display_text']}")
    counts = payload["summary"]
    print(
        f"{payload['total_results']} documents "
        f"({counts['read_count']} read, {counts['unread_count']} unread, "
        f"{counts['bookmarked_count']} bookmarked)"
    )
    return 0


def cmd_stats(args, config) -> int:
    ctx = _load_context(args.dir, config)
    filters = FilterState(query=args.q, subquery=args.subq)
    burden = reading_burden(ctx, filters)
    print(f"{'context':<18}{'tokens':>12}")
    print(f"{'full document':<18}{burden.full_doc_tokens:>12}")
    print(f"{'full sentence':<18}{burden.full_sentence_tokens:>12}")
    print(f"{'shortened':<18}{burden.shortened_tokens:>12}")
    doc_pct = "n/a" if burden.reduction_vs_doc is None else f"{burden.reduction_vs_doc:.1f}%"
    sent_pct = "n/a" if burden.reduction_vs_sentence is None else f"{burden.reduction_vs_sentence:.1f}%"
    print(f"reduction vs full documents: {doc_pct}")
    print(f"reduction vs full sentences: {sent_pct}")
    return 0


def _serve_dirs(args, config) -> list:
    from pathlib import Path

    from .storage import META_FILE

    if args.dirs:
        return list(args.dirs)
    if not config.corpus_dir:
        raise ValueError("no corpus directories given and no corpus_dir configured")
    root = Path(config.corpus_dir)
    if (root / META_FILE).exists():
        return [root]
    found = sorted(p for p in root.iterdir() if (p / META_FILE).exists())
    if not found:
        raise ValueError(f"no ingested corpora under {root}")
    return found


def cmd_serve(args, config) -> int:
    import uvicorn

    from .service import create_app

    contexts = {}
    for path in _serve_dirs(args, config):
        ctx = _load_context(path, config)
        contexts[ctx.corpus.name] = ctx
    app = create_app(contexts)
    port = args.port if args.port is not None else config.port
    uvicorn.run(app, host=args.host, port=port)
    return 0


_COMMANDS = {
    "ingest": cmd_ingest,
    "query": cmd_query,
    "stats": cmd_stats,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return _COMMANDS[args.command](args, config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
