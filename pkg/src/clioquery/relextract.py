"""Relationship span extraction.

When a query and subquery appear in the same sentence, the inclusive token
span running from the earlier mention to the later one is itself a
candidate shortening.  A logistic regression over simple linguistic
features predicts whether that span stands alone as a well-formed
sentence; the span is emitted only when the predicted probability clears
the threshold (default 0.5, strictly greater).

The feature schema is versioned so externally trained weight files can be
validated against the extractor that produced their features.
"""

import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .corpus import Sentence, is_punct_token, normalize_term
from .deptree import DepTree, ROOT

FEATURE_SCHEMA_VERSION = 1
FEATURE_NAMES = (
    "bias",
    "verb_between",
    "span_length_ratio",
    "starts_capitalized",
    "ends_sentence_final",
    "query_first",
    "comma_count",
    "crosses_clause_boundary",
    "edge_punctuation",
)
N_FEATURES = len(FEATURE_NAMES)
WEIGHTS_FORMAT_VERSION = 1
DEFAULT_WEIGHTS_RESOURCE = "relspan_weights.json"


class WeightSchemaError(ValueError):
    """Weight file does not match this extractor's feature schema."""


@dataclass
class FeatureVector:
    x: np.ndarray

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=np.float64)
        if self.x.shape != (N_FEATURES,):
            raise ValueError(f"feature vector must have shape ({N_FEATURES},)")
        if not np.all(np.isfinite(self.x)):
            raise ValueError("features must be finite")


@dataclass
class RelWeights:
    theta: np.ndarray
    threshold: float = 0.5
    schema_version: int = FEATURE_SCHEMA_VERSION

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=np.float64)
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must lie strictly in (0, 1)")


@dataclass
class TrainingPair:
    sentence: Sentence
    span_start: int
    span_end: int
    label: int  # 1 = span stands alone, 0 = it does not


def training_pair_from_dict(record: dict) -> TrainingPair:
    """Build a pair from {words, pos, heads, span, label}; heads may be
    null for parse-less examples."""
    from .corpus import sentence_from_words

    sentence, _ = sentence_from_words(
        record["words"], pos=record.get("pos"), heads=record.get("heads")
    )
    span = record["span"]
    return TrainingPair(
        sentence=sentence,
        span_start=int(span[0]),
        span_end=int(span[1]),
        label=int(record["label"]),
    )


def load_training_pairs(path) -> list[TrainingPair]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return [training_pair_from_dict(r) for r in payload["pairs"]]


def load_default_training_pairs() -> list[TrainingPair]:
    """The synthetic span set the packaged weights were trained on."""
    text = resources.files("clioquery.data").joinpath("relspan_training.json").read_text("utf-8")
    return [training_pair_from_dict(r) for r in json.loads(text)["pairs"]]


def _is_verb(pos: str | None) -> bool:
    return pos is not None and pos.upper().startswith("V")


def extract_features(
    sentence: Sentence,
    q_index: int,
    sq_index: int,
    tree: DepTree | None = None,
) -> FeatureVector:
    """Deterministic features for the span between two mention tokens.

    Parse- and POS-dependent features default to 0 when that information
    is unavailable, so extraction is total over plain sentences.
    """
    tokens = sentence.tokens
    n = len(tokens)
    if q_index == sq_index:
        raise ValueError("query and subquery indices must differ")
    for idx in (q_index, sq_index):
        if not 0 <= idx < n:
            raise ValueError(f"token index out of range: {idx}")
    if tree is None:
        tree = sentence.parse

    lo, hi = min(q_index, sq_index), max(q_index, sq_index)
    between = range(lo + 1, hi)
    span = set(range(lo, hi + 1))

    verb_between = float(any(_is_verb(tokens[i].pos) for i in between))
    span_length_ratio = (hi - lo + 1) / n
    starts_capitalized = float(tokens[lo].text[:1].isupper())
    ends_sentence_final = float(
        all(is_punct_token(tokens[i].text) for i in range(hi + 1, n))
    )
    query_first = float(q_index < sq_index)
    comma_count = float(sum(1 for i in between if tokens[i].text == ","))

    crosses = 0.0
    if tree is not None and tree.n == n:
        external = sum(
            1
            for i in span
            if tree.heads[i] != ROOT and tree.heads[i] not in span
        )
        # One outside attachment is just the span's own head; more than one
        # means the span straddles a clause boundary.
        crosses = float(external > 1)

    edge_punct = 0.0
    if lo > 0 and is_punct_token(tokens[lo - 1].text):
        edge_punct = 1.0
    elif hi < n - 1 and is_punct_token(tokens[hi + 1].text):
        edge_punct = 1.0

    return FeatureVector(
        np.array(
            [
                1.0,
                verb_between,
                span_length_ratio,
                starts_capitalized,
                ends_sentence_final,
                query_first,
                comma_count,
                crosses,
                edge_punct,
            ]
        )
    )


def sigmoid(z):
    """Numerically stable logistic function, elementwise."""
    z = np.asarray(z, dtype=np.float64)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return float(out[0]) if scalar else out


def predict(weights: RelWeights, features: FeatureVector) -> float:
    """sigma(theta . x); stable for |theta . x| up to ~700."""
    if weights.theta.shape != features.x.shape:
        raise ValueError(
            f"dimension mismatch: theta {weights.theta.shape} vs x {features.x.shape}"
        )
    return float(sigmoid(float(weights.theta @ features.x)))


# ---------------------------------------------------------------------------
# Span emission
# ---------------------------------------------------------------------------

def rel_span(
    sentence: Sentence,
    body: str,
    query: str,
    subquery: str,
    weights: RelWeights,
    config,
    doc_id: str = "",
    tree: DepTree | None = None,
) -> "Shortening | None":
    """Emit the query-to-subquery token span as a shortening when the model
    finds it probable (> threshold) and it fits the display budget."""
    from .simplify import Shortening, ShorteningMethod

    q_norm = normalize_term(query)
    sq_norm = normalize_term(subquery)
    q_index = sq_index = None
    for i, tok in enumerate(sentence.tokens):
        norm = normalize_term(tok.text)
        if q_index is None and norm == q_norm:
            q_index = i
        if sq_index is None and norm == sq_norm:
            sq_index = i
    if q_index is None or sq_index is None or q_index == sq_index:
        return None

    features = extract_features(sentence, q_index, sq_index, tree=tree)
    probability = predict(weights, features)
    if not probability > weights.threshold:
        return None

    lo, hi = min(q_index, sq_index), max(q_index, sq_index)
    display = body[sentence.tokens[lo].char_start:sentence.tokens[hi].char_end]
    if len(display) > config.max_chars:
        return None
    return Shortening(
        doc_id=doc_id,
        sentence_index=sentence.index,
        method=ShorteningMethod.REL_SPAN,
        kept_token_indices=tuple(range(lo, hi + 1)),
        display_text=display,
        source_char_start=sentence.tokens[lo].char_start,
        source_char_end=sentence.tokens[hi].char_end,
        score=probability,
    )


# ---------------------------------------------------------------------------
# Training
# ---------------------------------------------------------------------------

def loss_and_gradient(theta, X, y, l2: float = 0.0):
    """Mean regularized logistic loss and its gradient.

    loss = -(1/n) sum[y log p + (1-y) log(1-p)] + (l2/2) |theta|^2
    """
    theta = np.asarray(theta, dtype=np.float64)
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = X.shape[0]
    z = X @ theta
    p = sigmoid(z)
    # log(p) via logaddexp for stability: log sigmoid(z) = -logaddexp(0, -z)
    log_p = -np.logaddexp(0.0, -z)
    log_1mp = -np.logaddexp(0.0, z)
    loss = -np.mean(y * log_p + (1.0 - y) * log_1mp) + 0.5 * l2 * float(theta @ theta)
    grad = X.T @ (p - y) / n + l2 * theta
    return float(loss), grad


def fit(X, y, learning_rate: float = 0.1, epochs: int = 2000, l2: float = 1e-3):
    """Full-batch gradient descent from a zero start; deterministic.

    Returns (theta, per-epoch losses).  With the default learning rate the
    loss is non-increasing across epochs.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    theta = np.zeros(X.shape[1])
    losses = []
    for _ in range(epochs):
        loss, grad = loss_and_gradient(theta, X, y, l2)
        losses.append(loss)
        theta = theta - learning_rate * grad
    return theta, losses


def train(
    pairs: list[TrainingPair],
    learning_rate: float = 0.1,
    epochs: int = 2000,
    l2: float = 1e-3,
    threshold: float = 0.5,
) -> RelWeights:
    """Fit span-acceptance weights on labeled training pairs."""
    if not pairs:
        raise ValueError("no training pairs")
    labels = {p.label for p in pairs}
    if labels != {0, 1}:
        raise ValueError("training data must contain both a positive and a negative pair")
    X = np.stack(
        [extract_features(p.sentence, p.span_start, p.span_end).x for p in pairs]
    )
    y = np.array([p.label for p in pairs], dtype=np.float64)
    theta, _ = fit(X, y, learning_rate=learning_rate, epochs=epochs, l2=l2)
    return RelWeights(theta=theta, threshold=threshold)


# ---------------------------------------------------------------------------
# Weight files
# ---------------------------------------------------------------------------

def save_weights(weights: RelWeights, path) -> None:
    payload = {
        "format_version": WEIGHTS_FORMAT_VERSION,
        "feature_schema_version": weights.schema_version,
        "feature_names": list(FEATURE_NAMES),
        "theta": [float(v) for v in weights.theta],
        "threshold": weights.threshold,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _weights_from_payload(payload: dict) -> RelWeights:
    if payload.get("format_version") != WEIGHTS_FORMAT_VERSION:
        raise WeightSchemaError("unsupported weight file format version")
    if payload.get("feature_schema_version") != FEATURE_SCHEMA_VERSION:
        raise WeightSchemaError(
            "weight file was trained against a different feature schema"
        )
    if payload.get("feature_names") != list(FEATURE_NAMES):
        raise WeightSchemaError("weight file feature names do not match")
    theta = np.array(payload["theta"], dtype=np.float64)
    if theta.shape != (N_FEATURES,):
        raise WeightSchemaError("weight vector length does not match feature count")
    return RelWeights(theta=theta, threshold=float(payload.get("threshold", 0.5)))


def load_weights(path) -> RelWeights:
    with open(path, encoding="utf-8") as fh:
        return _weights_from_payload(json.load(fh))


def load_default_weights() -> RelWeights:
    """Weights shipped with the package, trained on the bundled synthetic
    span set (see data/relspan_training.json)."""
    text = resources.files("clioquery.data").joinpath(DEFAULT_WEIGHTS_RESOURCE).read_text("utf-8")
    return _weights_from_payload(json.loads(text))
