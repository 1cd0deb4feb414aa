#!/usr/bin/env python3
"""Regenerate the packaged relationship-span weights.

Builds the synthetic labeled span set bundled with the package, fits the
logistic model on it, spot-checks a few held-out spans, and writes both
the training pairs and the frozen weights into src/clioquery/data/.

Run from the repository root:

    python demos/train_relspan_weights.py
"""

import json
from pathlib import Path

from clioquery.corpus import sentence_from_words
from clioquery.relextract import (
    extract_features,
    predict,
    save_weights,
    train,
    training_pair_from_dict,
)

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "clioquery" / "data"

# Each row: words, POS tags, optional heads (0-based, -1 = root),
# (query index, subquery index), label.  The span under judgment runs
# between the two indices, inclusive; label 1 means it reads as a
# well-formed standalone sentence.
P = "PROPN"
V = "VERB"
N = "NOUN"
D = "DET"
A = "ADP"
ROWS = [
    # --- spans that stand alone: capitalized subject, verb inside, no
    # --- commas, no clause boundary straddled
    (["President", "Smith", "visited", "General", "Ortiz", "yesterday", "."],
     [P, P, V, P, P, N, "PUNCT"], None, (1, 4), 1),
    (["Mayor", "Chen", "signed", "the", "treaty", "with", "Senator", "Park", "."],
     [P, P, V, D, N, A, P, P, "PUNCT"], None, (1, 7), 1),
    (["Duarte", "met", "Reagan", "at", "the", "palace", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (0, 2), 1),
    (["Ortega", "praised", "Castro", "during", "the", "summit", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (2, 0), 1),
    (["Gandhi", "welcomed", "Thatcher", "warmly", "."],
     [P, V, P, "ADV", "PUNCT"], None, (0, 2), 1),
    (["Mitterrand", "warned", "Kohl", "about", "the", "deficit", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (2, 0), 1),
    (["Nakasone", "hosted", "Reagan", "at", "a", "state", "dinner", "in", "Tokyo", "."],
     [P, V, P, A, D, N, N, A, P, "PUNCT"], None, (2, 0), 1),
    (["Botha", "defied", "Thatcher", "on", "sanctions", "."],
     [P, V, P, A, N, "PUNCT"], None, (2, 0), 1),
    (["Walesa", "thanked", "Kirkland", "for", "the", "support", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (0, 2), 1),
    (["Mubarak", "urged", "Arafat", "to", "accept", "the", "proposal", "."],
     [P, V, P, "PART", V, D, N, "PUNCT"], None, (2, 0), 1),
    (["Gorbachev", "told", "Shultz", "that", "the", "talks", "would", "continue", "."],
     [P, V, P, "SCONJ", D, N, "AUX", V, "PUNCT"], None, (0, 7), 1),
    (["Craxi", "assured", "Reagan", "that", "Italy", "would", "remain", "an", "ally", "."],
     [P, V, P, "SCONJ", P, "AUX", V, D, N, "PUNCT"], None, (8, 0), 1),
    (["Envoys", "say", "Peres", "telephoned", "Hussein", "twice", "."],
     [N, V, P, V, P, "ADV", "PUNCT"],
     [1, -1, 3, 1, 3, 3, 1], (2, 4), 1),
    (["Shamir", "rebuked", "Peres", "over", "the", "accord", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (0, 2), 1),
    (["Zhao", "received", "Bush", "in", "Beijing", "this", "week", "."],
     [P, V, P, A, P, D, N, "PUNCT"], None, (4, 0), 1),
    (["Moi", "consulted", "Nyerere", "before", "the", "vote", "."],
     [P, V, P, A, D, N, "PUNCT"], None, (2, 0), 1),

    # --- no verb between the mentions: coordination or shared phrase
    (["Duarte", "and", "Reagan", "attended", "the", "ceremony", "."],
     [P, "CCONJ", P, V, D, N, "PUNCT"], None, (0, 2), 0),
    (["The", "aides", "of", "Ortega", "and", "Castro", "argued", "."],
     [D, N, A, P, "CCONJ", P, V, "PUNCT"], None, (5, 3), 0),
    (["The", "treaty", "between", "Nixon", "and", "Brezhnev", "collapsed", "."],
     [D, N, A, P, "CCONJ", P, V, "PUNCT"], None, (5, 3), 0),
    (["Marcos", ",", "Aquino", "and", "Laurel", "met", "in", "Manila", "."],
     [P, "PUNCT", P, "CCONJ", P, V, A, P, "PUNCT"], None, (2, 0), 0),
    (["A", "photograph", "of", "Thatcher", "beside", "Reagan", "surfaced", "."],
     [D, N, A, P, A, P, V, "PUNCT"], None, (5, 3), 0),

    # --- commas inside the span
    (["Smith", ",", "who", "knew", "Jones", ",", "resigned", "."],
     [P, "PUNCT", "PRON", V, P, "PUNCT", V, "PUNCT"],
     [6, 3, 3, 0, 3, 3, -1, 6], (0, 4), 0),
    (["Reagan", "spoke", ",", "Duarte", "listened", ",", "and", "waited", "."],
     [P, V, "PUNCT", P, V, "PUNCT", "CCONJ", V, "PUNCT"],
     [1, -1, 4, 4, 1, 7, 7, 1, 1], (0, 3), 0),
    (["Kim", "arrived", ",", "greeted", "Deng", ",", "and", "left", "."],
     [P, V, "PUNCT", V, P, "PUNCT", "CCONJ", V, "PUNCT"],
     [1, -1, 3, 1, 3, 7, 7, 1, 1], (4, 0), 0),

    # --- span straddles a clause boundary
    (["Analysts", "who", "met", "Gorbachev", "doubted", "Reagan", "quietly", "."],
     [N, "PRON", V, P, V, P, "ADV", "PUNCT"],
     [4, 2, 0, 2, -1, 4, 4, 4], (3, 5), 0),
    (["Thatcher", "arrived", "after", "Reagan", "left", "the", "summit", "."],
     [P, V, "SCONJ", P, V, D, N, "PUNCT"],
     [1, -1, 4, 4, 1, 6, 4, 1], (0, 3), 0),
    (["Johnson", "toured", "the", "plant", "and", "Nixon", "spoke", "."],
     [P, V, D, N, "CCONJ", P, V, "PUNCT"],
     [1, -1, 3, 1, 6, 6, 1, 1], (5, 0), 0),

    # --- lowercase or mid-phrase starts
    (["The", "rebels", "ambushed", "Ortega", "near", "the", "border", "."],
     [D, N, V, P, A, D, N, "PUNCT"], None, (1, 3), 0),
    (["Some", "officers", "released", "Duarte", "unharmed", "."],
     [D, N, V, P, "ADJ", "PUNCT"], None, (3, 1), 0),
    (["union", "leaders", "backed", "Walesa", "loudly", "."],
     [N, N, V, P, "ADV", "PUNCT"], None, (0, 3), 0),

    # --- parenthetical / dash fragments
    (["(", "Reagan", ")", "met", "(", "Duarte", ")", "."],
     ["PUNCT", P, "PUNCT", V, "PUNCT", P, "PUNCT", "PUNCT"], None, (1, 5), 0),
    (["Duarte", "--", "Reagan", "'s", "ally", "--", "resigned", "."],
     [P, "PUNCT", P, "PART", N, "PUNCT", V, "PUNCT"], None, (0, 2), 0),
]


def rows_to_records(rows):
    records = []
    for words, pos, heads, (q, sq), label in rows:
        records.append(
            {"words": words, "pos": pos, "heads": heads, "span": [q, sq], "label": label}
        )
    return records


def main() -> None:
    records = rows_to_records(ROWS)
    pairs = [training_pair_from_dict(r) for r in records]
    weights = train(pairs, learning_rate=0.5, epochs=4000, l2=1e-3)

    correct = 0
    for pair in pairs:
        fv = extract_features(pair.sentence, pair.span_start, pair.span_end)
        prob = predict(weights, fv)
        correct += int((prob > 0.5) == bool(pair.label))
    print(f"training accuracy: {correct}/{len(pairs)}")
    print("theta:", [round(float(v), 4) for v in weights.theta])

    # The canonical regression case: the span from the later mention back
    # to the earlier one must be accepted.
    words = (
        "President Reagan sent congratulations to Mr. Duarte and Ambassador "
        "Thomas R. Pickering pledged United States support for further meetings ."
    ).split()
    pos = [P, P, V, N, A, P, P, "CCONJ", P, P, P, P, V, P, P, N, A, "ADJ", N, "PUNCT"]
    sentence, _ = sentence_from_words(words, pos=pos)
    q_index = words.index("Duarte")
    sq_index = words.index("Reagan")
    prob = predict(weights, extract_features(sentence, q_index, sq_index))
    print(f"span acceptance probability for the Reagan/Duarte example: {prob:.4f}")
    assert prob > 0.5, "shipped weights must accept the canonical span"

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with open(OUT_DIR / "relspan_training.json", "w", encoding="utf-8") as fh:
        json.dump({"pairs": records}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    save_weights(weights, OUT_DIR / "relspan_weights.json")
    print(f"wrote weights and training pairs to {OUT_DIR}")


if __name__ == "__main__":
    main()
