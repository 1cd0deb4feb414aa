#!/usr/bin/env python3
"""Regenerate the bundled sample corpus (data/sample/).

Writes a small synthetic news archive about Salvadoran politics in the
1980s, plus a CoNLL-U file carrying dependency parses for a handful of
sentences.  The script verifies its own output: parses must attach
cleanly and the canonical relationship-span and clause-deletion sentences
must shorten as expected.

Run from the repository root:

    python demos/build_sample_corpus.py
"""

import json
from pathlib import Path

from clioquery.conllu import ConlluSentence, write_conllu
from clioquery.corpus import attach_parses, ingest_corpus
from clioquery.feed import SearchContext, run_search
from clioquery.index import FilterState, build_index
from clioquery.relextract import load_default_weights
from clioquery.session import SessionState

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "sample"

DOCS = [
    {
        "id": "s01",
        "date": "1982-03-28",
        "headline": "Salvador Votes Amid Unrest",
        "body": (
            "Voters crowded polling stations across El Salvador on Sunday. "
            "Officials said the turnout exceeded expectations despite scattered "
            "violence in the countryside. Mr. Duarte called the election a "
            "turning point for the nation."
        ),
    },
    {
        "id": "s02",
        "date": "1982-06-14",
        "headline": "Junta Names New Cabinet",
        "body": (
            "The governing junta announced a new cabinet on Monday. Diplomats "
            "in San Salvador said the appointments favored the military. "
            "Duarte, who led the Christian Democrats, was excluded from the "
            "most powerful posts."
        ),
    },
    {
        "id": "s03",
        "date": "1983-01-09",
        "headline": "Aid Package Debated in Washington",
        "body": (
            "Congress opened debate on a new aid package for El Salvador. "
            "Supporters of President Reagan argued that the assistance would "
            "strengthen moderates. Critics countered that the money would "
            "prolong the war."
        ),
    },
    {
        "id": "s04",
        "date": "1983-05-21",
        "headline": "Reagan Presses Congress on Salvador Aid",
        "body": (
            "President Reagan urged Congress to approve additional military "
            "aid for El Salvador. The administration said the funds were "
            "essential to the government's survival. Opponents in the House "
            "remained unconvinced. Reagan repeated the request in his weekly "
            "radio address."
        ),
    },
    {
        "id": "s05",
        "date": "1984-05-12",
        "headline": "Duarte Wins Presidency",
        "body": (
            "Jose Napoleon Duarte won the presidential election by a clear "
            "margin. International observers reported few irregularities at "
            "the polls. In his victory speech, Duarte promised to open talks "
            "with the guerrillas. Duarte also pledged to curb the security "
            "forces."
        ),
    },
    {
        "id": "s06",
        "date": "1984-05-22",
        "headline": "Washington Welcomes Salvador Result",
        "body": (
            "The State Department welcomed the election result in El Salvador. "
            "President Reagan sent congratulations to Mr. Duarte and "
            "Ambassador Thomas R. Pickering pledged United States support for "
            "further meetings. Officials cautioned that the war was far from "
            "over."
        ),
    },
    {
        "id": "s07",
        "date": "1984-08-30",
        "headline": "Land Reform Stalls",
        "body": (
            "The land reform program stalled in the assembly this week. "
            "Peasant cooperatives accused the right of sabotaging the law. "
            "Duarte vowed to press ahead with the second phase despite the "
            "opposition."
        ),
    },
    {
        "id": "s08",
        "date": "1984-10-16",
        "headline": "Talks Open at La Palma",
        "body": (
            "Duarte met guerrilla commanders in the mountain town of La Palma, "
            "braving death threats from the far right. Thousands of "
            "Salvadorans lined the road to cheer the delegations. The two "
            "sides agreed to form a joint commission. Duarte called the "
            "session a first step toward peace."
        ),
    },
    {
        "id": "s09",
        "date": "1985-01-09",
        "headline": "Gibbons Backs Tax Bill",
        "body": (
            "Like Mr. Conable, Mr. Gibbons said he would vote for the tax bill "
            "backed by President Reagan in the next session of Congress. The "
            "measure faced a narrow path in the Senate."
        ),
    },
    {
        "id": "s10",
        "date": "1985-03-07",
        "headline": "Duarte and Reagan Confer in Washington",
        "body": (
            "Duarte flew to Washington for two days of talks. Reagan received "
            "Duarte at the White House on Thursday morning. The two presidents "
            "discussed aid, refugees and the stalled peace process. Aides said "
            "Reagan pressed Duarte to schedule a new round of negotiations."
        ),
    },
    {
        "id": "s11",
        "date": "1985-06-20",
        "headline": "Rebels Attack Cafe District",
        "body": (
            "Guerrillas attacked a cafe district crowded with off-duty "
            "marines. The government blamed the front for the killings. "
            "Duarte condemned the attack in a televised address, and Reagan "
            "denounced it from Washington, promising a swift response."
        ),
    },
    {
        "id": "s12",
        "date": "1985-10-11",
        "headline": "Duarte's Daughter Kidnapped",
        "body": (
            "Gunmen seized Ines Guadalupe Duarte Duran outside her university. "
            "President Duarte suspended his schedule to direct the response. "
            "The guerrillas demanded the release of captured commanders. "
            "After tense negotiations, the family was reunited. Duarte later "
            "said the ordeal changed him."
        ),
    },
    {
        "id": "s13",
        "date": "1986-02-02",
        "headline": "Georges Leads Paris Delegation",
        "body": (
            "Georges arrived in San Salvador at the head of a French "
            "delegation. In the morning, Georges toured the earthquake zone "
            "with relief workers. Before leaving, Georges signed an agreement "
            "expanding medical aid."
        ),
    },
    {
        "id": "s14",
        "date": "1986-04-18",
        "headline": "Austerity Package Announced",
        "body": (
            "The government announced an austerity package to finance the "
            "war. Unions called a general strike in protest. Duarte defended "
            "the measures as painful but necessary. Economists predicted the "
            "plan would fuel inflation."
        ),
    },
    {
        "id": "s15",
        "date": "1983-11-03",
        "headline": "Death Squads Under Scrutiny",
        "body": (
            "A United States delegation pressed Salvadoran officers about "
            "death squads. Vice President Bush delivered the message in blunt "
            "terms. The embassy reported a decline in killings by the end of "
            "the year."
        ),
    },
]

# Hand-built parses, old-Stanford/UD-v1 style (prepositions head their
# objects and attach to what they modify).  Heads are 1-based, 0 = root.
PARSES = [
    ConlluSentence(
        doc_id="s06",
        sent_index=1,
        forms="President Reagan sent congratulations to Mr. Duarte and Ambassador Thomas R. Pickering pledged United States support for further meetings .".split(),
        pos=["PROPN", "PROPN", "VERB", "NOUN", "ADP", "PROPN", "PROPN", "CCONJ",
             "PROPN", "PROPN", "PROPN", "PROPN", "VERB", "PROPN", "PROPN", "NOUN",
             "ADP", "ADJ", "NOUN", "PUNCT"],
        heads=[2, 3, 0, 3, 3, 7, 5, 3, 12, 12, 12, 13, 3, 15, 16, 13, 16, 19, 17, 3],
        deprels=["compound", "nsubj", "root", "dobj", "prep", "compound", "pobj",
                 "cc", "compound", "compound", "compound", "nsubj", "conj",
                 "compound", "compound", "dobj", "prep", "amod", "pobj", "punct"],
    ),
    ConlluSentence(
        doc_id="s09",
        sent_index=0,
        forms="Like Mr. Conable , Mr. Gibbons said he would vote for the tax bill backed by President Reagan in the next session of Congress .".split(),
        pos=["ADP", "PROPN", "PROPN", "PUNCT", "PROPN", "PROPN", "VERB", "PRON",
             "AUX", "VERB", "ADP", "DET", "NOUN", "NOUN", "VERB", "ADP", "PROPN",
             "PROPN", "ADP", "DET", "ADJ", "NOUN", "ADP", "PROPN", "PUNCT"],
        heads=[7, 3, 1, 1, 6, 7, 0, 10, 10, 7, 10, 14, 14, 11, 14, 15, 18, 16,
               10, 22, 22, 19, 22, 23, 7],
        deprels=["prep", "compound", "pobj", "punct", "compound", "nsubj", "root",
                 "nsubj", "aux", "ccomp", "prep", "det", "compound", "pobj",
                 "acl", "prep", "compound", "pobj", "prep", "det", "amod",
                 "pobj", "prep", "pobj", "punct"],
    ),
    ConlluSentence(
        doc_id="s05",
        sent_index=2,
        forms="In his victory speech , Duarte promised to open talks with the guerrillas .".split(),
        pos=["ADP", "PRON", "NOUN", "NOUN", "PUNCT", "PROPN", "VERB", "PART",
             "VERB", "NOUN", "ADP", "DET", "NOUN", "PUNCT"],
        heads=[7, 4, 4, 1, 7, 7, 0, 9, 7, 9, 10, 13, 11, 7],
        deprels=["prep", "poss", "compound", "pobj", "punct", "nsubj", "root",
                 "mark", "xcomp", "dobj", "prep", "det", "pobj", "punct"],
    ),
    ConlluSentence(
        doc_id="s08",
        sent_index=0,
        forms="Duarte met guerrilla commanders in the mountain town of La Palma , braving death threats from the far right .".split(),
        pos=["PROPN", "VERB", "NOUN", "NOUN", "ADP", "DET", "NOUN", "NOUN",
             "ADP", "PROPN", "PROPN", "PUNCT", "VERB", "NOUN", "NOUN", "ADP",
             "DET", "ADJ", "NOUN", "PUNCT"],
        heads=[2, 0, 4, 2, 2, 8, 8, 5, 8, 11, 9, 13, 2, 15, 13, 15, 19, 19, 16, 2],
        deprels=["nsubj", "root", "compound", "dobj", "prep", "det", "compound",
                 "pobj", "prep", "compound", "pobj", "punct", "advcl",
                 "compound", "dobj", "prep", "det", "amod", "pobj", "punct"],
    ),
]


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    corpus_path = OUT_DIR / "salvador.jsonl"
    parses_path = OUT_DIR / "salvador.conllu"

    with open(corpus_path, "w", encoding="utf-8") as fh:
        for doc in DOCS:
            fh.write(json.dumps(doc, sort_keys=True) + "\n")
    write_conllu(PARSES, parses_path)

    corpus = ingest_corpus(corpus_path, name="salvador")
    corpus, report = attach_parses(corpus, parses_path)
    assert not report.warnings, report.warnings
    assert not report.sentence_errors, report.sentence_errors
    assert report.attached == len(PARSES), report.attached
    print(f"{len(corpus)} documents; parses attached to {report.attached} sentences")

    ctx = SearchContext(
        corpus=corpus, index=build_index(corpus), weights=load_default_weights()
    )
    payload = run_search(
        ctx, FilterState(query="duarte", subquery="reagan"), SessionState()
    )
    by_id = {e["doc_id"]: e for e in payload["feed"]}
    fig = by_id["s06"]["default_shortening"]
    assert fig["method"] == "RelSpan", fig
    assert fig["display_text"] == "Reagan sent congratulations to Mr. Duarte", fig
    methods = sorted(e["default_shortening"]["method"] for e in payload["feed"])
    print("duarte+reagan feed methods:", methods)
    print(f"wrote {corpus_path} and {parses_path}")


if __name__ == "__main__":
    main()
