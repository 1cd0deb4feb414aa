"""Deterministic synthetic corpora and dependency trees for tests."""

import random
from datetime import date

from clioquery.corpus import Corpus, Document, segment
from clioquery.deptree import DepTree

VOCABULARY = [
    "duarte", "reagan", "georges", "salvador", "rebels", "war", "peace",
    "army", "talks", "aid", "congress", "election", "general", "colonel",
    "village", "coffee", "union", "strike", "border", "refugees", "embassy",
    "bishop", "radio", "students", "harvest", "bridge", "convoy", "patrol",
    "mayor", "prisoners", "church", "treaty", "minister", "economy", "votes",
]


def random_sentence_text(rng: random.Random, min_words=4, max_words=14) -> str:
    words = [rng.choice(VOCABULARY) for _ in range(rng.randint(min_words, max_words))]
    words[0] = words[0].capitalize()
    return " ".join(words) + rng.choice([".", ".", ".", "!", "?"])


def random_tree(n: int, rng: random.Random) -> DepTree:
    order = list(range(n))
    rng.shuffle(order)
    heads = [0] * n
    heads[order[0]] = -1
    for k in range(1, n):
        heads[order[k]] = order[rng.randrange(k)]
    return DepTree.from_heads(heads)


def make_random_corpus(
    seed: int,
    n_docs: int,
    with_parses: bool = False,
    parse_probability: float = 0.5,
    name: str | None = None,
) -> Corpus:
    rng = random.Random(seed)
    documents = {}
    for i in range(n_docs):
        doc_id = f"d{i:03d}"
        doc_date = date(1980 + rng.randrange(8), rng.randrange(1, 13), rng.randrange(1, 29))
        body = " ".join(random_sentence_text(rng) for _ in range(rng.randint(1, 6)))
        doc = Document(
            id=doc_id,
            date=doc_date,
            headline=f"Story {i} from {doc_date.year}",
            body=body,
            sentences=segment(body),
        )
        if with_parses:
            for sent in doc.sentences:
                if rng.random() < parse_probability:
                    sent.parse = random_tree(len(sent.tokens), rng)
        documents[doc_id] = doc
    return Corpus(documents=documents, name=name or f"random-{seed}")


def random_words(rng: random.Random, n: int, min_len=2, max_len=9) -> list[str]:
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    return [
        "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
        for _ in range(n)
    ]
