//! Counters for the six rhetorical strategies.
//!
//! Dashes and semicolons are counted on raw text. The other four work on
//! tokenized sentences and count one instance per *maximal run*: three
//! consecutive sentences opening with the same word are one anaphora, not
//! two overlapping pairs.

use std::fmt;
use std::ops::{Index, IndexMut, Range};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::textseg::{split_sentences, Sentence, Tag, TagLexicon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyKind {
    Dash,
    Semicolon,
    Alliteration,
    Anaphora,
    Epistrophe,
    Parallelism,
}

impl StrategyKind {
    /// Column order used by every profile table.
    pub const ALL: [StrategyKind; 6] = [
        StrategyKind::Dash,
        StrategyKind::Semicolon,
        StrategyKind::Alliteration,
        StrategyKind::Anaphora,
        StrategyKind::Epistrophe,
        StrategyKind::Parallelism,
    ];

    pub const COUNT: usize = 6;

    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Dash => "dash",
            StrategyKind::Semicolon => "semicolon",
            StrategyKind::Alliteration => "alliteration",
            StrategyKind::Anaphora => "anaphora",
            StrategyKind::Epistrophe => "epistrophe",
            StrategyKind::Parallelism => "parallelism",
        }
    }

    /// Header of the percentage column in profile tables.
    pub fn column(self) -> &'static str {
        match self {
            StrategyKind::Dash => "pDash",
            StrategyKind::Semicolon => "pSemi",
            StrategyKind::Alliteration => "pAllit",
            StrategyKind::Anaphora => "pAna",
            StrategyKind::Epistrophe => "pEpi",
            StrategyKind::Parallelism => "pPara",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = String;

    /// Accepts the full name or the table column, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == lower || k.column().to_ascii_lowercase() == lower)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

/// Instances found per strategy.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyCounts([usize; StrategyKind::COUNT]);

impl StrategyCounts {
    pub fn new(counts: [usize; StrategyKind::COUNT]) -> Self {
        StrategyCounts(counts)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_array(&self) -> [usize; StrategyKind::COUNT] {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (StrategyKind, usize)> + '_ {
        StrategyKind::ALL.into_iter().map(|k| (k, self[k]))
    }

    pub fn scaled(&self, factor: usize) -> Self {
        StrategyCounts(self.0.map(|c| c * factor))
    }
}

impl Index<StrategyKind> for StrategyCounts {
    type Output = usize;

    fn index(&self, kind: StrategyKind) -> &usize {
        &self.0[kind.ordinal()]
    }
}

impl IndexMut<StrategyKind> for StrategyCounts {
    fn index_mut(&mut self, kind: StrategyKind) -> &mut usize {
        &mut self.0[kind.ordinal()]
    }
}

impl std::ops::Add for StrategyCounts {
    type Output = StrategyCounts;

    fn add(mut self, rhs: StrategyCounts) -> StrategyCounts {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl std::iter::Sum for StrategyCounts {
    fn sum<I: Iterator<Item = StrategyCounts>>(iter: I) -> Self {
        iter.fold(StrategyCounts::default(), |a, b| a + b)
    }
}

const DASH_PATTERNS: [&str; 3] = [" - ", "--", "\u{2014}"];

/// Counts dashes: a hyphen between spaces, a double hyphen, or an em dash.
///
/// Scans left to right for the earliest pattern, then resumes just past
/// the dash itself, so the trailing space of `" - "` can open the next
/// match (`"x - - y"` holds two).
pub fn count_dashes(text: &str) -> usize {
    let mut count = 0;
    let mut rest = text;
    loop {
        let next = DASH_PATTERNS
            .iter()
            .filter_map(|p| rest.find(p).map(|at| (at, *p)))
            .min_by_key(|&(at, _)| at);
        let Some((at, pattern)) = next else {
            return count;
        };
        count += 1;
        let dash_end = if pattern == " - " { at + 2 } else { at + pattern.len() };
        rest = &rest[dash_end..];
    }
}

pub fn count_semicolons(text: &str) -> usize {
    text.matches(';').count()
}

/// Maximal runs of length >= 2 of equal, present keys.
pub(crate) fn runs<K: PartialEq>(keys: &[Option<K>]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < keys.len() {
        let mut end = start + 1;
        if keys[start].is_some() {
            while end < keys.len() && keys[end] == keys[start] {
                end += 1;
            }
            if end - start >= 2 {
                out.push(start..end);
            }
        }
        start = end;
    }
    out
}

/// Initial letter used for alliteration. Words opening with a digit have
/// none and break runs.
fn initial_letter(word: &str) -> Option<char> {
    let c = word.chars().find(|c| c.is_alphanumeric())?;
    c.is_alphabetic().then(|| c.to_lowercase().next().unwrap_or(c))
}

/// Alliteration runs within one sentence. Punctuation between words does not
/// break a run.
pub fn alliteration_in(sentence: &Sentence) -> usize {
    let keys: Vec<_> = sentence.words().map(|t| initial_letter(&t.surface)).collect();
    runs(&keys).len()
}

pub fn count_alliteration(sentences: &[Sentence]) -> usize {
    sentences.iter().map(alliteration_in).sum()
}

fn first_word(s: &Sentence) -> Option<String> {
    s.words().next().map(|t| t.surface.to_lowercase())
}

fn last_word(s: &Sentence) -> Option<String> {
    s.words().last().map(|t| t.surface.to_lowercase())
}

/// Runs of consecutive sentences opening with the same word.
pub fn anaphora_runs(sentences: &[Sentence]) -> Vec<Range<usize>> {
    let keys: Vec<_> = sentences.iter().map(first_word).collect();
    runs(&keys)
}

/// Runs of consecutive sentences closing with the same word.
pub fn epistrophe_runs(sentences: &[Sentence]) -> Vec<Range<usize>> {
    let keys: Vec<_> = sentences.iter().map(last_word).collect();
    runs(&keys)
}

pub fn count_anaphora(sentences: &[Sentence]) -> usize {
    anaphora_runs(sentences).len()
}

pub fn count_epistrophe(sentences: &[Sentence]) -> usize {
    epistrophe_runs(sentences).len()
}

/// Longest phrase length compared for parallelism.
pub const MAX_PHRASE: usize = 4;

/// Parallelism instances in a tag sequence (punctuation already removed).
///
/// For phrase length n = 4, 3, 2, 1 in turn, scan left to right for two
/// adjacent n-grams with identical tags, neither touching a position
/// claimed earlier. A hit is extended with further matching n-grams and the
/// whole run counts once and claims its positions.
pub fn parallel_runs(tags: &[Tag]) -> usize {
    let mut claimed = vec![false; tags.len()];
    let mut count = 0;
    for n in (1..=MAX_PHRASE).rev() {
        let free = |claimed: &[bool], at: usize| at + n <= tags.len() && !claimed[at..at + n].contains(&true);
        let mut i = 0;
        while i + 2 * n <= tags.len() {
            if free(&claimed, i) && free(&claimed, i + n) && tags[i..i + n] == tags[i + n..i + 2 * n] {
                let mut end = i + 2 * n;
                while free(&claimed, end) && tags[end..end + n] == tags[i..i + n] {
                    end += n;
                }
                claimed[i..end].iter_mut().for_each(|c| *c = true);
                count += 1;
                i = end;
            } else {
                i += 1;
            }
        }
    }
    count
}

pub fn parallelism_in(sentence: &Sentence, lexicon: &TagLexicon) -> usize {
    let tags: Vec<Tag> = sentence
        .words()
        .map(|t| lexicon.tag_of(t))
        .filter(|t| *t != Tag::Punct)
        .collect();
    parallel_runs(&tags)
}

pub fn count_parallelism(sentences: &[Sentence], lexicon: &TagLexicon) -> usize {
    sentences.iter().map(|s| parallelism_in(s, lexicon)).sum()
}

/// Runs all six finders over a document.
pub fn count_all(document: &str, lexicon: &TagLexicon) -> StrategyCounts {
    let sentences = split_sentences(document);
    count_sentences(document, &sentences, lexicon)
}

pub(crate) fn count_sentences(text: &str, sentences: &[Sentence], lexicon: &TagLexicon) -> StrategyCounts {
    StrategyCounts([
        count_dashes(text),
        count_semicolons(text),
        count_alliteration(sentences),
        count_anaphora(sentences),
        count_epistrophe(sentences),
        count_parallelism(sentences, lexicon),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textseg::tokenize;

    fn sentences(text: &str) -> Vec<Sentence> {
        split_sentences(text)
    }

    fn one(text: &str) -> Sentence {
        Sentence {
            index: 0,
            text: text.to_string(),
            offset: 0,
            tokens: tokenize(text),
        }
    }

    #[test]
    fn dashes() {
        assert_eq!(count_dashes("a - b"), 1);
        assert_eq!(count_dashes("ab"), 0);
        assert_eq!(count_dashes("x - y - z"), 2);
        assert_eq!(count_dashes("x - - y"), 2);
        assert_eq!(count_dashes("freedom -- and"), 1);
        assert_eq!(count_dashes("you\u{2014}ask"), 1);
        assert_eq!(count_dashes("well-known"), 0);
        assert_eq!(count_dashes("a ---- b"), 2);
    }

    #[test]
    fn semicolons() {
        assert_eq!(count_semicolons("a;b;c"), 2);
        assert_eq!(count_semicolons(""), 0);
    }

    #[test]
    fn alliteration() {
        assert_eq!(count_alliteration(&sentences("characterized character")), 1);
        assert_eq!(count_alliteration(&sentences("Peter Piper picked plums")), 1);
        assert_eq!(count_alliteration(&sentences("sweet smell of big bad wolves")), 2);
        assert_eq!(count_alliteration(&sentences("big, bad wolf")), 1);
        assert_eq!(count_alliteration(&sentences("1st 1st 2nd")), 0);
        // a run never crosses a sentence boundary
        assert_eq!(count_alliteration(&sentences("It ends. Ever after.")), 0);
    }

    #[test]
    fn anaphora() {
        assert_eq!(
            count_anaphora(&sentences("I have a dream today. I have a dream that...")),
            1
        );
        assert_eq!(count_anaphora(&sentences("Alpha. Beta.")), 0);
        assert_eq!(count_anaphora(&sentences("We act. We act. We act. They rest.")), 1);
        assert_eq!(count_anaphora(&sentences("we go. We stay. they go. They stay.")), 2);
    }

    #[test]
    fn epistrophe() {
        assert_eq!(count_epistrophe(&sentences("See it done. Get it done.")), 1);
        assert_eq!(count_epistrophe(&sentences("Alpha. Beta.")), 0);
        assert_eq!(count_epistrophe(&[]), 0);
    }

    #[test]
    fn parallelism_of_the_people() {
        let lex = TagLexicon::bundled();
        let s = one("of the people, by the people, for the people");
        assert_eq!(parallelism_in(&s, lex), 1);
        assert_eq!(parallelism_in(&one("red"), lex), 0);
    }

    #[test]
    fn parallelism_with_verb_adverb_lexicon() {
        let lex = TagLexicon::from_entries([
            ("run", Tag::Verb),
            ("jump", Tag::Verb),
            ("swim", Tag::Verb),
            ("fast", Tag::Adv),
            ("high", Tag::Adv),
            ("far", Tag::Adv),
        ]);
        assert_eq!(parallelism_in(&one("run fast jump high swim far"), &lex), 1);
    }

    #[test]
    fn parallel_runs_prefers_longer_phrases() {
        use Tag::*;
        // two 2-grams (VERB ADV) then a lone pair of nouns
        assert_eq!(parallel_runs(&[Verb, Adv, Verb, Adv, Noun, Noun]), 2);
        // period-2 pattern repeated four times is one 4-gram run
        assert_eq!(parallel_runs(&[Verb, Adv, Verb, Adv, Verb, Adv, Verb, Adv]), 1);
        assert_eq!(parallel_runs(&[]), 0);
        assert_eq!(parallel_runs(&[Noun]), 0);
    }

    #[test]
    fn count_all_composes() {
        let lex = TagLexicon::bundled();
        assert_eq!(count_all("", lex), StrategyCounts::default());
        let text = "a - b; c. We go. We stop.";
        let c = count_all(text, lex);
        let sentences = split_sentences(text);
        assert_eq!(c[StrategyKind::Dash], 1);
        assert_eq!(c[StrategyKind::Semicolon], 1);
        assert_eq!(c[StrategyKind::Anaphora], 1);
        assert_eq!(c[StrategyKind::Alliteration], count_alliteration(&sentences));
        assert_eq!(c[StrategyKind::Epistrophe], 0);
        assert_eq!(c[StrategyKind::Parallelism], count_parallelism(&sentences, lex));
    }

    #[test]
    fn strategy_names_parse() {
        for k in StrategyKind::ALL {
            assert_eq!(k.name().parse::<StrategyKind>().unwrap(), k);
            assert_eq!(k.column().parse::<StrategyKind>().unwrap(), k);
        }
        assert!("irony".parse::<StrategyKind>().is_err());
    }
}
