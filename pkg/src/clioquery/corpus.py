"""Corpus loading, validation, and segmentation.

Documents arrive as JSON Lines records with ``id``, ``date``, ``headline``
and ``body`` fields.  Bodies are sentence-split and tokenized with a
deterministic rule-based segmenter; dependency parses can be attached
afterwards from a CoNLL-U file, in which case the parse's tokenization
wins and offsets are re-derived against the body.
"""

import json
import string
from dataclasses import dataclass, field, replace
from datetime import date
from pathlib import Path

from .deptree import DepTree, DepTreeError


class IngestError(ValueError):
    """Raised for malformed corpus files (message names line / document)."""


def normalize_term(term: str) -> str:
    """Canonical form used for all token/term comparisons."""
    return term.casefold()


def is_word_like(term: str) -> bool:
    """Queries must be single word-like tokens: no spaces, at least one
    alphanumeric character."""
    return bool(term) and not any(c.isspace() for c in term) and any(c.isalnum() for c in term)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass
class Token:
    text: str
    char_start: int
    char_end: int
    pos: str | None = None


@dataclass
class Sentence:
    tokens: list[Token]
    index: int
    parse: DepTree | None = None

    @property
    def char_start(self) -> int:
        return self.tokens[0].char_start

    @property
    def char_end(self) -> int:
        return self.tokens[-1].char_end


@dataclass
class Document:
    id: str
    date: date
    headline: str
    body: str
    sentences: list[Sentence] = field(default_factory=list)

    def text_of(self, sentence: Sentence) -> str:
        return self.body[sentence.char_start:sentence.char_end]

    @property
    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)


@dataclass
class Corpus:
    documents: dict[str, Document]
    name: str = ""

    def __len__(self) -> int:
        return len(self.documents)

    def chronological(self) -> list[Document]:
        """Documents ordered by (date, id); the feed's base order."""
        return sorted(self.documents.values(), key=lambda d: (d.date, d.id))


# ---------------------------------------------------------------------------
# Fallback segmentation
# ---------------------------------------------------------------------------

_PUNCT = set(string.punctuation) | set("…“”‘’–—")
_TERMINALS = ".!?"
_CLOSERS = "\"')]}”’"
_OPENERS = "\"'([{“‘"

# Common title/address abbreviations that do not end a sentence.
_ABBREVIATIONS = {
    "mr", "mrs", "ms", "dr", "st", "jr", "sr", "prof", "gen", "sen", "rep",
    "gov", "amb", "lt", "col", "capt", "sgt", "maj", "rev", "hon", "pres",
    "sec", "vs", "etc", "inc", "corp", "co", "dept", "univ", "assn", "bros",
    "no", "vol", "fig", "jan", "feb", "mar", "apr", "jun", "jul", "aug",
    "sep", "sept", "oct", "nov", "dec",
}


def is_punct_token(text: str) -> bool:
    return all(c in _PUNCT for c in text)


def _prev_word(body: str, end: int) -> str:
    i = end
    while i > 0 and not body[i - 1].isspace():
        i -= 1
    return body[i:end]


def _is_sentence_boundary(body: str, first: int, last: int, after: int) -> bool:
    """Decide whether the terminal run body[first..last] ends a sentence.

    ``after`` is the index just past any trailing closers.  Requires
    whitespace followed by an upper-case/digit start (possibly behind an
    opening quote); single periods are guarded against abbreviations and
    initials.
    """
    j = after
    if j >= len(body):
        return True
    if not body[j].isspace():
        return False
    while j < len(body) and body[j].isspace():
        j += 1
    if j >= len(body):
        return True
    nxt = body[j]
    if nxt in _OPENERS and j + 1 < len(body):
        nxt = body[j + 1]
    if not (nxt.isupper() or nxt.isdigit()):
        return False
    if body[first] == "." and last == first:
        word = _prev_word(body, first)
        stripped = word.strip("".join(_CLOSERS + _OPENERS))
        if "." in stripped:
            return False  # acronym or initials, e.g. "U.S"
        if len(stripped) == 1 and stripped.isalpha():
            return False  # middle initial, e.g. "R."
        if stripped.lower() in _ABBREVIATIONS:
            return False
    return True


def _block_sentence_spans(body: str, start: int, end: int) -> list[tuple[int, int]]:
    spans = []
    i = start
    while i < end and body[i].isspace():
        i += 1
    sent_start = i
    while i < end:
        if body[i] in _TERMINALS:
            first = i
            last = i
            while last + 1 < end and body[last + 1] in _TERMINALS:
                last += 1
            after = last + 1
            while after < end and body[after] in _CLOSERS:
                after += 1
            if _is_sentence_boundary(body, first, last, after):
                spans.append((sent_start, after))
                i = after
                while i < end and body[i].isspace():
                    i += 1
                sent_start = i
                continue
            i = last + 1
            continue
        i += 1
    if sent_start < end:
        tail = end
        while tail > sent_start and body[tail - 1].isspace():
            tail -= 1
        if tail > sent_start:
            spans.append((sent_start, tail))
    return spans


def sentence_spans(body: str) -> list[tuple[int, int]]:
    """Character spans of sentences; paragraph breaks always split."""
    spans = []
    block_start = 0
    i = 0
    n = len(body)
    while i < n:
        if body[i] == "\n":
            j = i + 1
            while j < n and body[j] in " \t\r":
                j += 1
            if j < n and body[j] == "\n":
                spans.extend(_block_sentence_spans(body, block_start, i))
                while j < n and body[j].isspace():
                    j += 1
                block_start = j
                i = j
                continue
        i += 1
    spans.extend(_block_sentence_spans(body, block_start, n))
    return spans


def token_spans(body: str, start: int, end: int) -> list[tuple[int, int]]:
    """Whitespace tokenization with leading/trailing punctuation split off
    into single-character tokens."""
    spans = []
    i = start
    while i < end:
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < end and not body[j].isspace():
            j += 1
        a, b = i, j
        lead = []
        while a < b and body[a] in _PUNCT:
            lead.append((a, a + 1))
            a += 1
        trail = []
        while b > a and body[b - 1] in _PUNCT:
            trail.append((b - 1, b))
            b -= 1
        spans.extend(lead)
        if a < b:
            spans.append((a, b))
        spans.extend(reversed(trail))
        i = j
    return spans


def segment(body: str) -> list[Sentence]:
    sentences = []
    for s_start, s_end in sentence_spans(body):
        toks = [Token(body[a:b], a, b) for a, b in token_spans(body, s_start, s_end)]
        if toks:
            sentences.append(Sentence(tokens=toks, index=len(sentences)))
    return sentences


def validate_document(doc: Document) -> None:
    """Assert the offset invariants: tokens slice the body exactly, are
    ordered and non-overlapping, and sentences tile the body in order."""
    prev_end = 0
    for sent in doc.sentences:
        for tok in sent.tokens:
            if not 0 <= tok.char_start < tok.char_end <= len(doc.body):
                raise IngestError(f"document {doc.id!r}: token offsets out of range")
            if doc.body[tok.char_start:tok.char_end] != tok.text:
                raise IngestError(f"document {doc.id!r}: token text does not match body slice")
            if tok.char_start < prev_end:
                raise IngestError(f"document {doc.id!r}: overlapping or unordered tokens")
            prev_end = tok.char_end
        if sent.parse is not None and sent.parse.n != len(sent.tokens):
            raise IngestError(f"document {doc.id!r}: parse node count != token count")


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------

_REQUIRED_FIELDS = ("id", "date", "headline", "body")


def ingest_corpus(path, format: str = "jsonl", name: str | None = None) -> Corpus:
    """Load a JSON Lines corpus file into a tokenized, sentence-split Corpus.

    Raises IngestError naming the offending line or document for malformed
    records, duplicate ids, and invalid dates.
    """
    if format != "jsonl":
        raise ValueError(f"unsupported corpus format: {format!r}")
    path = Path(path)
    documents: dict[str, Document] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise IngestError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise IngestError(f"line {lineno}: record is not an object")
            for fieldname in _REQUIRED_FIELDS:
                if fieldname not in record:
                    raise IngestError(f"line {lineno}: missing field {fieldname!r}")
                if not isinstance(record[fieldname], str):
                    raise IngestError(f"line {lineno}: field {fieldname!r} is not a string")
            doc_id = record["id"]
            if doc_id in documents:
                raise IngestError(f"duplicate document id {doc_id!r} (line {lineno})")
            try:
                doc_date = date.fromisoformat(record["date"])
            except ValueError as exc:
                raise IngestError(
                    f"document {doc_id!r}: unparseable date {record['date']!r}"
                ) from exc
            doc = Document(
                id=doc_id,
                date=doc_date,
                headline=record["headline"],
                body=record["body"],
                sentences=segment(record["body"]),
            )
            validate_document(doc)
            documents[doc_id] = doc
    return Corpus(documents=documents, name=name if name is not None else path.stem)


# ---------------------------------------------------------------------------
# Parse attachment
# ---------------------------------------------------------------------------

@dataclass
class AttachReport:
    warnings: list[str] = field(default_factory=list)
    sentence_errors: list[str] = field(default_factory=list)
    attached: int = 0


def _align_tokens(body: str, forms: list[str], start: int, end: int) -> list[tuple[int, int]] | None:
    """Left-to-right alignment of parse token forms against body[start:end];
    None on failure."""
    spans = []
    pos = start
    for form in forms:
        while pos < end and body[pos].isspace():
            pos += 1
        if not body.startswith(form, pos) or pos + len(form) > end:
            return None
        spans.append((pos, pos + len(form)))
        pos += len(form)
    return spans


def attach_parses(corpus: Corpus, path) -> tuple[Corpus, AttachReport]:
    """Attach CoNLL-U parses to corpus sentences.

    Sentences are matched through the ``# doc_id`` / ``# sent_index``
    metadata comments.  When the parse tokenization differs from the
    fallback tokenization, the parse's tokenization replaces it and
    offsets are re-derived by left-to-right alignment against the body.
    Unmatched document ids produce warnings; per-sentence failures leave
    that sentence unparsed.  Documents themselves are never altered.
    """
    from .conllu import read_conllu

    report = AttachReport()
    new_docs = {doc_id: replace(doc, sentences=list(doc.sentences)) for doc_id, doc in corpus.documents.items()}

    for parsed in read_conllu(path):
        where = f"doc_id={parsed.doc_id!r} sent_index={parsed.sent_index}"
        if parsed.doc_id is None or parsed.sent_index is None:
            report.sentence_errors.append(f"{where}: missing doc_id / sent_index metadata")
            continue
        doc = new_docs.get(parsed.doc_id)
        if doc is None:
            report.warnings.append(f"no document with id {parsed.doc_id!r}")
            continue
        if not 0 <= parsed.sent_index < len(doc.sentences):
            report.sentence_errors.append(f"{where}: sentence index out of range")
            continue
        try:
            tree = DepTree.from_conllu_heads(parsed.heads, parsed.deprels)
        except DepTreeError as exc:
            report.sentence_errors.append(f"{where}: {exc}")
            continue

        sent = doc.sentences[parsed.sent_index]
        old_forms = [t.text for t in sent.tokens]
        if old_forms == parsed.forms:
            tokens = [replace(t, pos=parsed.pos[i]) for i, t in enumerate(sent.tokens)]
        else:
            region_end = (
                doc.sentences[parsed.sent_index + 1].char_start
                if parsed.sent_index + 1 < len(doc.sentences)
                else len(doc.body)
            )
            spans = _align_tokens(doc.body, parsed.forms, sent.char_start, region_end)
            if spans is None:
                report.sentence_errors.append(f"{where}: token alignment against body failed")
                continue
            tokens = [
                Token(form, a, b, pos=parsed.pos[i])
                for i, (form, (a, b)) in enumerate(zip(parsed.forms, spans))
            ]
        doc.sentences[parsed.sent_index] = Sentence(tokens=tokens, index=sent.index, parse=tree)
        report.attached += 1

    out = Corpus(documents=new_docs, name=corpus.name)
    for doc in out.documents.values():
        validate_document(doc)
    return out, report


# ---------------------------------------------------------------------------
# Mention lookup
# ---------------------------------------------------------------------------

def find_sentences_mentioning(doc: Document, term: str) -> list[tuple[int, list[int]]]:
    """Every token equal to ``term`` under the match rule (case-insensitive
    full-token comparison), grouped by sentence, in document order."""
    if not term:
        raise ValueError("term must be non-empty")
    wanted = normalize_term(term)
    out = []
    for sent in doc.sentences:
        hits = [i for i, tok in enumerate(sent.tokens) if normalize_term(tok.text) == wanted]
        if hits:
            out.append((sent.index, hits))
    return out


def sentence_from_words(
    words: list[str],
    pos: list[str | None] | None = None,
    heads: list[int] | None = None,
    index: int = 0,
    char_start: int = 0,
) -> tuple[Sentence, str]:
    """Convenience constructor: build a space-joined sentence (plus its
    text) from surface forms, mainly for fixtures and training data."""
    tokens = []
    cursor = char_start
    parts = []
    for i, w in enumerate(words):
        if i > 0:
            cursor += 1
            parts.append(" ")
        tokens.append(Token(w, cursor, cursor + len(w), pos=pos[i] if pos else None))
        parts.append(w)
        cursor += len(w)
    parse = DepTree.from_heads(heads) if heads is not None else None
    return Sentence(tokens=tokens, index=index, parse=parse), "".join(parts)
