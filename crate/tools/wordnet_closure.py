#!/usr/bin/env python3
"""Build the bundled gloss lexicon (lemma<TAB>gloss) from a WordNet 3.x `dict/`.

Starting from seed words, every word of every stored gloss gets its own
entry, so a chain that keeps following gloss words never runs out of
definitions. Lookup order for a word:

  1. gloss_supplement.tsv (function words, irregular forms, chain overrides)
  2. WordNet first sense, noun > verb > adj > adv
  3. WordNet after morphological detachment (plurals, -ed, -ing, ...)
  4. possessive 's stripped, then the last part of a hyphenated compound

Gloss words that still resolve to nothing (formulas, proper names) are
dropped from the glosses that mention them, repeated to a fixed point.

usage: wordnet_closure.py DICT_DIR SUPPLEMENT.tsv OUT.tsv seed...
"""
import re
import sys
from collections import deque

POS = ["noun", "verb", "adj", "adv"]

RULES = {
    "noun": [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"),
             ("shes", "sh"), ("men", "man"), ("ies", "y"), ("oes", "o"),
             ("ves", "f"), ("ves", "fe")],
    "verb": [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
             ("ed", ""), ("ing", "e"), ("ing", ""), ("ied", "y")],
    "adj": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "adv": [],
}

EDGE_PUNCT = re.compile(r"^[^\w]+|[^\w]+$")


def load_index(d):
    index = {p: {} for p in POS}
    for p in POS:
        with open(f"{d}/index.{p}", encoding="utf-8") as f:
            for line in f:
                if line.startswith(" "):
                    continue
                parts = line.split()
                n_synsets = int(parts[2])
                index[p][parts[0]] = parts[-n_synsets]
    return index


def read_gloss(d, pos, offset):
    with open(f"{d}/data.{pos}", "rb") as f:
        f.seek(int(offset))
        line = f.readline().decode("utf-8")
    gloss = line.split(" | ", 1)[1].strip()
    return gloss.split('; "')[0].split(' "')[0]


def words(gloss):
    out = []
    # a double hyphen separates words, it never joins them
    for raw in re.split(r"\s+|--", gloss):
        w = EDGE_PUNCT.sub("", raw).lower()
        if w and any(c.isalpha() for c in w):
            out.append(w)
    return out


def wordnet_lookup(index, word):
    for p in POS:
        if word in index[p]:
            return p, index[p][word]
    for p in POS:
        for suffix, repl in RULES[p]:
            if word.endswith(suffix) and len(word) > len(suffix):
                base = word[: len(word) - len(suffix)] + repl
                if base in index[p]:
                    return p, index[p][base]
                # doubled final consonant: admitted -> admit
                if p == "verb" and suffix in ("ed", "ing") and len(base) > 2 and base[-1] == base[-2]:
                    if base[:-1] in index[p]:
                        return p, index[p][base[:-1]]
    return None


def main():
    d, supplement_path, out_path, *seeds = sys.argv[1:]
    index = load_index(d)
    supplement = {}
    with open(supplement_path, encoding="utf-8") as f:
        for line in f:
            if line.strip() and not line.startswith("#"):
                lemma, gloss = line.rstrip("\n").split("\t")
                supplement[lemma] = gloss

    def resolve(word, depth=0):
        if depth > 3:
            return None
        if word in supplement:
            g = supplement[word]
            return resolve(g[1:], depth + 1) if g.startswith("=") else g
        hit = wordnet_lookup(index, word)
        if hit:
            return read_gloss(d, *hit)
        if word.endswith("'s"):
            return resolve(word[:-2], depth + 1)
        if "-" in word:
            return resolve(word.rsplit("-", 1)[1], depth + 1)
        return None

    glosses = {}
    queue = deque(s.lower() for s in seeds)
    seen = set(queue)
    while queue:
        w = queue.popleft()
        g = resolve(w)
        toks = words(g) if g else []
        if not toks:
            continue
        glosses[w] = toks
        for t in toks:
            if t not in seen:
                seen.add(t)
                queue.append(t)

    while True:
        pruned = {w: [t for t in toks if t in glosses] for w, toks in glosses.items()}
        pruned = {w: toks for w, toks in pruned.items() if toks}
        if pruned == glosses:
            break
        glosses = pruned

    with open(out_path, "w", encoding="utf-8") as f:
        for w in sorted(glosses):
            f.write(f"{w}\t{' '.join(glosses[w])}\n")
    print(f"{len(glosses)} entries", file=sys.stderr)


if __name__ == "__main__":
    main()
