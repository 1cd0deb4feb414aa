"""Ingested-corpus directories.

``ingest`` materializes a corpus into a directory holding the normalized
source files, a small metadata file, and the binary index cache.  Loaders
re-segment from source (cheap and deterministic) and reuse the cache only
while the corpus file hash matches; correctness never depends on it.
"""

import json
import shutil
from pathlib import Path

from .corpus import AttachReport, Corpus, attach_parses, ingest_corpus
from .index import InvertedIndex, build_index, file_sha256, load_index, save_index

META_FILE = "corpus.meta.json"
CORPUS_FILE = "corpus.jsonl"
PARSES_FILE = "parses.conllu"
INDEX_CACHE_FILE = "index.bin"
META_FORMAT_VERSION = 1


class CorpusDirError(ValueError):
    pass


def ingest_to_dir(
    corpus_path,
    out_dir,
    parses_path=None,
    name: str | None = None,
) -> tuple[Corpus, InvertedIndex, AttachReport | None]:
    corpus_path = Path(corpus_path)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    corpus = ingest_corpus(corpus_path, name=name)
    report = None
    dest_corpus = out_dir / CORPUS_FILE
    if dest_corpus.resolve() != corpus_path.resolve():
        shutil.copyfile(corpus_path, dest_corpus)
    if parses_path is not None:
        corpus, report = attach_parses(corpus, parses_path)
        dest_parses = out_dir / PARSES_FILE
        if dest_parses.resolve() != Path(parses_path).resolve():
            shutil.copyfile(parses_path, dest_parses)

    corpus_hash = file_sha256(dest_corpus)
    index = build_index(corpus)
    save_index(index, out_dir / INDEX_CACHE_FILE, corpus_hash)
    meta = {
        "version": META_FORMAT_VERSION,
        "name": corpus.name,
        "doc_count": len(corpus),
        "corpus_file": CORPUS_FILE,
        "parses_file": PARSES_FILE if parses_path is not None else None,
        "corpus_hash": corpus_hash,
    }
    with open(out_dir / META_FILE, "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return corpus, index, report


def load_corpus_dir(path) -> tuple[Corpus, InvertedIndex]:
    """Load an ingested corpus directory, rebuilding the index cache when
    it is missing or stale."""
    path = Path(path)
    meta_path = path / META_FILE
    if not meta_path.exists():
        raise CorpusDirError(f"{path} is not an ingested corpus directory (no {META_FILE})")
    with open(meta_path, encoding="utf-8") as fh:
        meta = json.load(fh)
    if meta.get("version") != META_FORMAT_VERSION:
        raise CorpusDirError(f"unsupported corpus directory version in {meta_path}")

    corpus_file = path / meta["corpus_file"]
    corpus = ingest_corpus(corpus_file, name=meta.get("name"))
    if meta.get("parses_file"):
        corpus, _ = attach_parses(corpus, path / meta["parses_file"])

    corpus_hash = file_sha256(corpus_file)
    index = load_index(path / INDEX_CACHE_FILE, corpus_hash)
    if index is None:
        index = build_index(corpus)
        save_index(index, path / INDEX_CACHE_FILE, corpus_hash)
    return corpus, index
