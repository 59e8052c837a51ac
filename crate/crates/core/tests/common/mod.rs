//! Generated documents and brute-force finder oracles shared by the test
//! targets.

#![allow(dead_code)]

use rhetoric::{Tag, TagLexicon};

pub const VOCAB: [(&str, Tag); 12] = [
    ("bat", Tag::Noun),
    ("bit", Tag::Verb),
    ("cold", Tag::Adj),
    ("cut", Tag::Verb),
    ("dim", Tag::Adj),
    ("dog", Tag::Noun),
    ("sat", Tag::Verb),
    ("slowly", Tag::Adv),
    ("the", Tag::Det),
    ("to", Tag::Adp),
    ("and", Tag::Conj),
    ("we", Tag::Pron),
];

pub fn lexicon() -> TagLexicon {
    TagLexicon::from_entries(VOCAB)
}

#[derive(Debug, Clone)]
pub struct Word {
    pub vocab: usize,
    pub capital: bool,
    /// 0 none, 1 comma, 2 semicolon
    pub trailing: u8,
    /// 0 none, 1 " - ", 2 " -- ", 3 em dash
    pub dash_after: u8,
}

pub fn render(doc: &[Vec<Word>]) -> String {
    let mut out = Vec::new();
    for sentence in doc {
        let mut s = String::new();
        for (i, w) in sentence.iter().enumerate() {
            let mut text = VOCAB[w.vocab].0.to_string();
            if w.capital {
                text[..1].make_ascii_uppercase();
            }
            s.push_str(&text);
            s.push_str(["", ",", ";"][w.trailing as usize]);
            if i + 1 < sentence.len() {
                s.push_str(["", " - ", " -- ", "\u{2014}"][w.dash_after as usize]);
                if w.dash_after == 0 {
                    s.push(' ');
                }
            }
        }
        s.push('.');
        out.push(s);
    }
    out.join(" ")
}

pub fn word_keys<K: PartialEq>(doc: &[Vec<Word>], key: impl Fn(&[Word]) -> K) -> Vec<K> {
    doc.iter().map(|s| key(s)).collect()
}

/// Positions where a maximal run of at least two equal keys starts.
pub fn run_starts<K: PartialEq>(keys: &[K]) -> usize {
    (0..keys.len())
        .filter(|&i| i + 1 < keys.len() && keys[i] == keys[i + 1] && (i == 0 || keys[i - 1] != keys[i]))
        .count()
}

pub fn oracle_dashes(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut count = 0;
    let mut i = 0;
    while i < chars.len() {
        let at = |k: usize| chars.get(i + k).copied();
        if at(0) == Some('\u{2014}') {
            count += 1;
            i += 1;
        } else if (at(0) == Some('-') && at(1) == Some('-'))
            || (at(0) == Some(' ') && at(1) == Some('-') && at(2) == Some(' '))
        {
            count += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    count
}

pub fn oracle_alliteration(doc: &[Vec<Word>]) -> usize {
    doc.iter()
        .map(|s| {
            let initials: Vec<u8> = s.iter().map(|w| VOCAB[w.vocab].0.as_bytes()[0]).collect();
            run_starts(&initials)
        })
        .sum()
}

pub fn oracle_anaphora(doc: &[Vec<Word>]) -> usize {
    run_starts(&word_keys(doc, |s| s[0].vocab))
}

pub fn oracle_epistrophe(doc: &[Vec<Word>]) -> usize {
    run_starts(&word_keys(doc, |s| s[s.len() - 1].vocab))
}

/// Restarts the search from the left after every claimed run.
pub fn oracle_parallel(tags: &[Tag]) -> usize {
    let mut claimed = vec![false; tags.len()];
    let mut count = 0;
    for n in (1..=4).rev() {
        let unclaimed = |claimed: &[bool], at: usize| (at..at + n).all(|k| k < tags.len() && !claimed[k]);
        loop {
            let hit = (0..tags.len()).find(|&i| {
                unclaimed(&claimed, i) && unclaimed(&claimed, i + n) && tags[i..i + n] == tags[i + n..i + 2 * n]
            });
            let Some(i) = hit else { break };
            let mut end = i + 2 * n;
            while unclaimed(&claimed, end) && tags[end..end + n] == tags[i..i + n] {
                end += n;
            }
            for c in &mut claimed[i..end] {
                *c = true;
            }
            count += 1;
        }
    }
    count
}

pub fn oracle_parallelism(doc: &[Vec<Word>]) -> usize {
    doc.iter()
        .map(|s| oracle_parallel(&s.iter().map(|w| VOCAB[w.vocab].1).collect::<Vec<_>>()))
        .sum()
}

/// A random document of at most 30 words, from any rng.
pub fn random_document(rng: &mut impl rand::Rng) -> Vec<Vec<Word>> {
    let mut doc = Vec::new();
    let mut budget = 30;
    for _ in 0..rng.gen_range(0..8) {
        let len = rng.gen_range(1..6usize).min(budget);
        if len == 0 {
            break;
        }
        budget -= len;
        doc.push(
            (0..len)
                .map(|_| Word {
                    vocab: rng.gen_range(0..VOCAB.len()),
                    capital: rng.gen(),
                    trailing: [0, 0, 0, 1, 2][rng.gen_range(0..5)],
                    dash_after: [0, 0, 0, 0, 1, 2, 3][rng.gen_range(0..7)],
                })
                .collect(),
        );
    }
    doc
}
