"""Query-preserving sentence shortening.

Three methods produce the skimmable per-mention summaries shown in the
document feed:

* clause deletion — remove one dependency subtree (or, only when no
  single removal fits the display budget, two disjoint subtrees) that
  contains neither a query token nor an ancestor of one, then keep the
  candidate with the highest mean per-word tf-idf;
* relationship span extraction (see ``relextract``) — used when both a
  query and subquery are present;
* character windowing — the fallback: the widest symmetric character
  window around the query token that covers whole tokens and fits the
  budget.

A sentence that already fits the budget is passed through unshortened,
tagged ``PassThrough`` so the rendering is honest about having removed
nothing.
"""

from dataclasses import dataclass, field
from enum import Enum

from .corpus import Document, Sentence, find_sentences_mentioning, normalize_term
from .deptree import DepTree
from .index import TfidfScorer


class ShorteningMethod(Enum):
    CLAUSE_DELETION = "ClauseDeletion"
    REL_SPAN = "RelSpan"
    CHAR_WINDOW = "CharWindow"
    PASS_THROUGH = "PassThrough"


@dataclass
class ShorteningConfig:
    max_chars: int = 90          # display budget per feed line
    max_deletions: int = 2       # fixed; deeper deletion search is out of scope
    ellipsis: str = "…"

    def __post_init__(self):
        if self.max_chars < 1:
            raise ValueError("max_chars must be positive")
        if self.max_deletions != 2:
            raise ValueError("max_deletions is fixed at 2")


@dataclass
class Shortening:
    """A display-ready shortened context with exact source offsets."""

    doc_id: str
    sentence_index: int
    method: ShorteningMethod
    kept_token_indices: tuple[int, ...]
    display_text: str
    source_char_start: int
    source_char_end: int
    score: float = 0.0

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "sentence_index": self.sentence_index,
            "method": self.method.value,
            "kept_token_indices": list(self.kept_token_indices),
            "display_text": self.display_text,
            "source_char_start": self.source_char_start,
            "source_char_end": self.source_char_end,
            "score": self.score,
        }


@dataclass
class EnumerationStats:
    """Instrumentation: how many candidates an enumeration examined."""

    examined: int = 0


@dataclass
class Candidate:
    kept: tuple[int, ...]
    deleted_roots: tuple[int, ...]
    display_text: str
    n_deletions: int
    # Sorted first token index of each deleted subtree; used for the
    # leftmost-deletion tie-break.
    deletion_signature: tuple[int, ...] = field(default=())


def render_kept(body: str, sentence: Sentence, kept: tuple[int, ...], ellipsis: str = "…") -> str:
    """Render kept tokens in source order: each contiguous run is the exact
    body slice, and one ellipsis stands in for each interior gap."""
    runs = []
    start = kept[0]
    prev = kept[0]
    for i in kept[1:]:
        if i == prev + 1:
            prev = i
            continue
        runs.append((start, prev))
        start = prev = i
    runs.append((start, prev))
    parts = [
        body[sentence.tokens[a].char_start:sentence.tokens[b].char_end]
        for a, b in runs
    ]
    return f" {ellipsis} ".join(parts)


def sentence_fits(body: str, sentence: Sentence, config: ShorteningConfig) -> bool:
    return sentence.char_end - sentence.char_start <= config.max_chars


def _protected_tokens(tree: DepTree, query_token_indices) -> set[int]:
    protected = set()
    for q in query_token_indices:
        protected.add(q)
        protected.update(tree.ancestors(q))
    return protected


def enumerate_candidates(
    sentence: Sentence,
    tree: DepTree | None,
    query_token_indices,
    config: ShorteningConfig,
    body: str,
    stats: EnumerationStats | None = None,
) -> list[Candidate]:
    """All within-budget shortenings reachable by deleting one subtree; only
    when none fits, those reachable by deleting two disjoint subtrees.

    Deleted subtrees may contain neither a query token nor an ancestor of
    one, so the query always survives.  Unshortened output (zero deletions)
    is never a candidate.
    """
    query_token_indices = list(query_token_indices)
    if not query_token_indices:
        raise ValueError("at least one query token index is required")
    if tree is None:
        return []
    if stats is None:
        stats = EnumerationStats()

    n = tree.n
    all_indices = range(n)
    protected = _protected_tokens(tree, query_token_indices)
    deletable = [i for i in all_indices if i not in protected]
    subtree_sets = {i: set(tree.subtree(i)) for i in deletable}

    def make_candidate(deleted_roots: tuple[int, ...], removed: set[int]) -> Candidate | None:
        stats.examined += 1
        kept = tuple(i for i in all_indices if i not in removed)
        text = render_kept(body, sentence, kept, config.ellipsis)
        if len(text) > config.max_chars:
            return None
        signature = tuple(sorted(min(subtree_sets[r]) for r in deleted_roots))
        return Candidate(kept, deleted_roots, text, len(deleted_roots), signature)

    singles = []
    for i in deletable:
        cand = make_candidate((i,), subtree_sets[i])
        if cand is not None:
            singles.append(cand)
    if singles:
        return singles

    pairs = []
    for a_pos, i in enumerate(deletable):
        set_i = subtree_sets[i]
        for j in deletable[a_pos + 1:]:
            if j in set_i or i in subtree_sets[j]:
                continue  # nested, not disjoint
            cand = make_candidate((i, j), set_i | subtree_sets[j])
            if cand is not None:
                pairs.append(cand)
    return pairs


def clause_delete(
    sentence: Sentence,
    tree: DepTree | None,
    query_token_indices,
    scorer: TfidfScorer,
    config: ShorteningConfig,
    body: str,
    doc_id: str = "",
    stats: EnumerationStats | None = None,
) -> Shortening | None:
    """Best clause-deletion shortening by mean per-kept-word tf-idf.

    Ties break toward fewer deletions, then longer display text, then the
    leftmost deleted subtree, keeping output deterministic.
    """
    candidates = enumerate_candidates(sentence, tree, query_token_indices, config, body, stats)
    if not candidates:
        return None

    def mean_tfidf(cand: Candidate) -> float:
        return scorer.mean_score(
            normalize_term(sentence.tokens[i].text) for i in cand.kept
        )

    scored = [(mean_tfidf(c), c) for c in candidates]
    best_score, best = min(
        scored,
        key=lambda pair: (
            -pair[0],
            pair[1].n_deletions,
            -len(pair[1].display_text),
            pair[1].deletion_signature,
        ),
    )
    return Shortening(
        doc_id=doc_id,
        sentence_index=sentence.index,
        method=ShorteningMethod.CLAUSE_DELETION,
        kept_token_indices=best.kept,
        display_text=best.display_text,
        source_char_start=sentence.tokens[best.kept[0]].char_start,
        source_char_end=sentence.tokens[best.kept[-1]].char_end,
        score=best_score,
    )


def char_window(
    sentence: Sentence,
    query_token_index: int,
    config: ShorteningConfig,
    body: str,
    doc_id: str = "",
) -> Shortening:
    """Widest symmetric character window around the query token whose whole
    tokens render within the budget.  Always succeeds: in the degenerate
    case where even the query token alone is over budget, that token is
    returned by itself.  A window covering the whole sentence is tagged
    PassThrough."""
    tokens = sentence.tokens
    q = tokens[query_token_index]

    radii = [
        max(q.char_start - tok.char_start, tok.char_end - q.char_end, 0)
        for tok in tokens
    ]
    best: list[int] | None = None
    for limit in sorted(set(radii)):
        covered = [i for i, r in enumerate(radii) if r <= limit]
        text = body[tokens[covered[0]].char_start:tokens[covered[-1]].char_end]
        if len(text) <= config.max_chars:
            best = covered
        else:
            break  # wider windows only grow

    kept = tuple(best) if best is not None else (query_token_index,)
    display = body[tokens[kept[0]].char_start:tokens[kept[-1]].char_end]
    method = (
        ShorteningMethod.PASS_THROUGH
        if len(kept) == len(tokens)
        else ShorteningMethod.CHAR_WINDOW
    )
    return Shortening(
        doc_id=doc_id,
        sentence_index=sentence.index,
        method=method,
        kept_token_indices=kept,
        display_text=display,
        source_char_start=tokens[kept[0]].char_start,
        source_char_end=tokens[kept[-1]].char_end,
        score=0.0,
    )


# ---------------------------------------------------------------------------
# Per-document dispatch
# ---------------------------------------------------------------------------

def _pass_through(doc: Document, sentence: Sentence, anchor: int, config: ShorteningConfig) -> Shortening:
    out = char_window(sentence, anchor, config, doc.body, doc.id)
    assert out.method is ShorteningMethod.PASS_THROUGH
    return out


def _try_rel_span(doc, sentence, query, subquery, weights, config):
    if weights is None:
        return None
    from .relextract import rel_span

    return rel_span(
        sentence,
        doc.body,
        query,
        subquery,
        weights,
        config,
        doc_id=doc.id,
    )


def _shorten_sentence(
    doc: Document,
    sentence: Sentence,
    q_indices: list[int],
    query: str,
    subquery: str | None,
    scorer: TfidfScorer,
    config: ShorteningConfig,
    weights=None,
    sq_present: bool = False,
) -> Shortening:
    """Per-sentence chain: pass-through when the sentence already fits,
    then relationship span (subquery mode), clause deletion, windowing."""
    if sentence_fits(doc.body, sentence, config):
        return _pass_through(doc, sentence, q_indices[0], config)
    if subquery is not None and sq_present:
        rel = _try_rel_span(doc, sentence, query, subquery, weights, config)
        if rel is not None:
            return rel
    clause = clause_delete(sentence, sentence.parse, q_indices, scorer, config, doc.body, doc.id)
    if clause is not None:
        return clause
    return char_window(sentence, q_indices[0], config, doc.body, doc.id)


def choose_default_shortening(
    doc: Document,
    query: str,
    scorer: TfidfScorer,
    config: ShorteningConfig,
    subquery: str | None = None,
    weights=None,
) -> Shortening:
    """The one shortening shown beneath a document's headline.

    Without a subquery: the first sentence that fits whole or that clause
    deletion can shorten; otherwise a character window on the first
    mentioning sentence.  With a subquery, sentences mentioning both terms
    are tried first (pass-through or relationship span), then the
    query-only chain.
    """
    mentioning = find_sentences_mentioning(doc, query)
    if not mentioning:
        if subquery is None:
            raise ValueError(f"document {doc.id!r} does not mention {query!r}")
        # Degenerate: no query mention at all; anchor on the subquery.
        sq_mentioning = find_sentences_mentioning(doc, subquery)
        if not sq_mentioning:
            raise ValueError(f"document {doc.id!r} mentions neither term")
        sent_idx, hits = sq_mentioning[0]
        return _shorten_sentence(
            doc, doc.sentences[sent_idx], hits, subquery, None, scorer, config
        )

    if subquery is not None:
        sq_by_sentence = dict(find_sentences_mentioning(doc, subquery))
        for sent_idx, q_hits in mentioning:
            if sent_idx not in sq_by_sentence:
                continue
            sentence = doc.sentences[sent_idx]
            if sentence_fits(doc.body, sentence, config):
                return _pass_through(doc, sentence, q_hits[0], config)
            rel = _try_rel_span(doc, sentence, query, subquery, weights, config)
            if rel is not None:
                return rel

    for sent_idx, q_hits in mentioning:
        sentence = doc.sentences[sent_idx]
        if sentence_fits(doc.body, sentence, config):
            return _pass_through(doc, sentence, q_hits[0], config)
        clause = clause_delete(
            sentence, sentence.parse, q_hits, scorer, config, doc.body, doc.id
        )
        if clause is not None:
            return clause

    first_idx, first_hits = mentioning[0]
    return char_window(doc.sentences[first_idx], first_hits[0], config, doc.body, doc.id)


def expand_document(
    doc: Document,
    query: str,
    scorer: TfidfScorer,
    config: ShorteningConfig,
    subquery: str | None = None,
    weights=None,
) -> list[Shortening]:
    """One shortening per sentence mentioning the query, in sentence order.

    This is the comprehensive expansion behind the feed's expand control:
    every mentioning sentence is represented exactly once.
    """
    mentioning = find_sentences_mentioning(doc, query)
    sq_by_sentence = (
        dict(find_sentences_mentioning(doc, subquery)) if subquery is not None else {}
    )
    out = []
    for sent_idx, q_hits in mentioning:
        sentence = doc.sentences[sent_idx]
        out.append(
            _shorten_sentence(
                doc,
                sentence,
                q_hits,
                query,
                subquery,
                scorer,
                config,
                weights=weights,
                sq_present=sent_idx in sq_by_sentence,
            )
        )
    return out
