"""CoNLL-U file reading.

Only the columns this project needs are interpreted: FORM, UPOS/XPOS and
HEAD (plus DEPREL labels).  Sentence metadata comments ``# doc_id = <id>``
and ``# sent_index = <n>`` map sentences onto corpus documents.
Multi-word-token ranges (``1-2``) and empty nodes (``1.1``) are skipped.
"""

from dataclasses import dataclass, field


class ConlluError(ValueError):
    """Raised for lines that cannot be parsed at all."""


@dataclass
class ConlluSentence:
    doc_id: str | None = None
    sent_index: int | None = None
    forms: list[str] = field(default_factory=list)
    pos: list[str | None] = field(default_factory=list)
    heads: list[int] = field(default_factory=list)
    deprels: list[str] = field(default_factory=list)


def _finish(current: ConlluSentence | None, out: list[ConlluSentence]) -> None:
    if current is not None and current.forms:
        out.append(current)


def read_conllu(path) -> list[ConlluSentence]:
    sentences: list[ConlluSentence] = []
    current: ConlluSentence | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                _finish(current, sentences)
                current = None
                continue
            if current is None:
                current = ConlluSentence()
            if line.startswith("#"):
                comment = line[1:].strip()
                if "=" in comment:
                    key, _, value = comment.partition("=")
                    key = key.strip()
                    value = value.strip()
                    if key == "doc_id":
                        current.doc_id = value
                    elif key == "sent_index":
                        try:
                            current.sent_index = int(value)
                        except ValueError as exc:
                            raise ConlluError(
                                f"line {lineno}: sent_index is not an integer: {value!r}"
                            ) from exc
                continue
            cols = line.split("\t")
            if len(cols) < 8:
                raise ConlluError(f"line {lineno}: expected >= 8 tab-separated columns")
            token_id = cols[0]
            if "-" in token_id or "." in token_id:
                continue  # multi-word token range / empty node
            try:
                head = int(cols[6])
            except ValueError as exc:
                raise ConlluError(f"line {lineno}: HEAD is not an integer: {cols[6]!r}") from exc
            upos, xpos = cols[3], cols[4]
            pos = upos if upos != "_" else (xpos if xpos != "_" else None)
            current.forms.append(cols[1])
            current.pos.append(pos)
            current.heads.append(head)
            current.deprels.append(cols[7])
    _finish(current, sentences)
    return sentences


def write_conllu(sentences: list[ConlluSentence], path) -> None:
    """Inverse of read_conllu, used to build fixtures."""
    with open(path, "w", encoding="utf-8") as fh:
        for sent in sentences:
            if sent.doc_id is not None:
                fh.write(f"# doc_id = {sent.doc_id}\n")
            if sent.sent_index is not None:
                fh.write(f"# sent_index = {sent.sent_index}\n")
            for i, form in enumerate(sent.forms):
                pos = sent.pos[i] or "_"
                deprel = sent.deprels[i] if sent.deprels else "_"
                fh.write(f"{i + 1}\t{form}\t_\t{pos}\t_\t_\t{sent.heads[i]}\t{deprel}\t_\t_\n")
            fh.write("\n")
