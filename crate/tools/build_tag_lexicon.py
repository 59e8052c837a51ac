#!/usr/bin/env python3
"""Build data/tags.tsv (word<TAB>universal tag) from a Penn-tagged lexicon.

Input is JSON mapping a surface word to its Penn Treebank tags, most frequent
first (Brill's lexicon, counted over tagged Brown/WSJ text). Each word keeps
its most frequent tag mapped to the 12-tag universal set. Lowercase surfaces
win over capitalized ones when both exist. Spelled-out cardinals, which that
lexicon leaves to a regex, are added as NUM.

Words whose tag is NOUN are not written out: NOUN is also the tagger's
fallback for unknown words, so omitting them leaves every tagging unchanged.

usage: build_tag_lexicon.py LEXICON.json OUT.tsv
"""
import json
import re
import sys

PENN_TO_UNIVERSAL = {
    "CC": "CONJ", "CD": "NUM", "DT": "DET", "EX": "DET", "FW": "X", "IN": "ADP",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ", "LS": "X", "MD": "VERB", "NN": "NOUN",
    "NNS": "NOUN", "NNP": "NOUN", "NNPS": "NOUN", "PDT": "DET", "POS": "PRT",
    "PRP": "PRON", "PRP$": "PRON", "RB": "ADV", "RBR": "ADV", "RBS": "ADV",
    "RP": "PRT", "SYM": "X", "TO": "PRT", "UH": "X", "VB": "VERB", "VBD": "VERB",
    "VBG": "VERB", "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB", "WDT": "DET",
    "WP": "PRON", "WP$": "PRON", "WRB": "ADV",
}

CARDINALS = (
    "one two three four five six seven eight nine ten eleven twelve thirteen "
    "fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty "
    "fifty sixty seventy eighty ninety hundred thousand million billion"
).split()

WORD = re.compile(r"^[a-z][a-z'-]*$")


def main():
    src, out = sys.argv[1:]
    with open(src, encoding="utf-8") as f:
        lexicon = json.load(f)
    chosen = {w: "NUM" for w in CARDINALS}
    # lowercase surfaces first so they take precedence
    for surface in sorted(lexicon, key=lambda s: (s != s.lower(), s)):
        word = surface.lower()
        if word in chosen or not WORD.match(word):
            continue
        tag = PENN_TO_UNIVERSAL.get(lexicon[surface][0].split("|")[0])
        if tag:
            chosen[word] = tag
    with open(out, "w", encoding="utf-8") as f:
        for word in sorted(chosen):
            if chosen[word] != "NOUN":
                f.write(f"{word}\t{chosen[word]}\n")


if __name__ == "__main__":
    main()
