//! Extractive summaries: the sentences richest in weighted rhetorical
//! strategies.
//!
//! A sentence with `n` strategy instances, of which a fraction `P(s)` belong
//! to strategy `s`, scores
//!
//! ```text
//! S = (n / 6) * sum_s w_s * P(s)
//! ```
//!
//! Anaphora and epistrophe span sentences; every sentence in a qualifying
//! run is credited with one instance.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::{
    alliteration_in, anaphora_runs, count_dashes, count_semicolons, epistrophe_runs, parallelism_in, StrategyCounts,
    StrategyKind,
};
use crate::textseg::{split_sentences, Sentence, TagLexicon};

/// Sentences returned when no count is given.
pub const DEFAULT_K: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightTable([f64; StrategyKind::COUNT]);

impl Default for WeightTable {
    /// Parallelism weighs most, pauses least.
    fn default() -> Self {
        WeightTable([0.05, 0.05, 0.1, 0.2, 0.2, 0.4])
    }
}

impl WeightTable {
    pub fn new(weights: [f64; StrategyKind::COUNT]) -> Self {
        WeightTable(weights)
    }

    pub fn get(&self, kind: StrategyKind) -> f64 {
        self.0[kind.ordinal()]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Reads `strategy<TAB>weight` lines over the defaults. Strategies not
    /// listed keep their default weight.
    pub fn parse(source: &str) -> Result<Self> {
        let mut table = WeightTable::default();
        let mut seen = [false; StrategyKind::COUNT];
        for (i, line) in source.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, weight) = line
                .split_once('\t')
                .ok_or_else(|| Error::malformed(line_no, "expected strategy<TAB>weight"))?;
            let kind: StrategyKind = name.parse().map_err(|e| Error::malformed(line_no, e))?;
            let weight: f64 = weight
                .trim()
                .parse()
                .map_err(|_| Error::malformed(line_no, format!("not a number: {weight:?}")))?;
            if !weight.is_finite() || weight < 0.0 {
                return Err(Error::malformed(
                    line_no,
                    format!("weight must be non-negative, got {weight}"),
                ));
            }
            if std::mem::replace(&mut seen[kind.ordinal()], true) {
                return Err(Error::malformed(line_no, format!("{kind} listed twice")));
            }
            table.0[kind.ordinal()] = weight;
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let source = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&source)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentenceScore {
    pub sentence_index: usize,
    pub counts: StrategyCounts,
    pub n_strategies: usize,
    /// Share of each strategy among the sentence's instances (0 to 1).
    pub p_given_sentence: [f64; StrategyKind::COUNT],
    pub score: f64,
}

/// Applies the scoring formula to one sentence's counts.
pub fn score_counts(sentence_index: usize, counts: StrategyCounts, weights: &WeightTable) -> SentenceScore {
    let n = counts.total();
    let p = if n == 0 {
        [0.0; StrategyKind::COUNT]
    } else {
        counts.as_array().map(|c| c as f64 / n as f64)
    };
    let weighted: f64 = StrategyKind::ALL.iter().map(|&k| weights.get(k) * p[k.ordinal()]).sum();
    SentenceScore {
        sentence_index,
        counts,
        n_strategies: n,
        p_given_sentence: p,
        score: n as f64 / StrategyKind::COUNT as f64 * weighted,
    }
}

fn membership(len: usize, runs: &[std::ops::Range<usize>]) -> Vec<bool> {
    let mut member = vec![false; len];
    for r in runs {
        member[r.clone()].iter_mut().for_each(|m| *m = true);
    }
    member
}

/// Scores every sentence of a document; sentences are each other's context.
pub fn score_sentences(sentences: &[Sentence], weights: &WeightTable, lexicon: &TagLexicon) -> Vec<SentenceScore> {
    let anaphora = membership(sentences.len(), &anaphora_runs(sentences));
    let epistrophe = membership(sentences.len(), &epistrophe_runs(sentences));
    sentences
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let counts = StrategyCounts::new([
                count_dashes(&s.text),
                count_semicolons(&s.text),
                alliteration_in(s),
                usize::from(anaphora[i]),
                usize::from(epistrophe[i]),
                parallelism_in(s, lexicon),
            ]);
            score_counts(i, counts, weights)
        })
        .collect()
}

/// Score of `sentences[index]`, using its neighbours for anaphora and
/// epistrophe.
pub fn score_sentence(
    sentences: &[Sentence],
    index: usize,
    weights: &WeightTable,
    lexicon: &TagLexicon,
) -> SentenceScore {
    let lo = index.saturating_sub(1);
    let hi = (index + 2).min(sentences.len());
    // runs through a neighbour only need that neighbour, not the whole document
    let mut score = score_sentences(&sentences[lo..hi], weights, lexicon).swap_remove(index - lo);
    score.sentence_index = index;
    score
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummarySentence {
    pub index: usize,
    pub text: String,
    pub score: f64,
}

/// The `k` best-scoring sentences, in document order. Equal scores favour
/// the earlier sentence.
pub fn summarize(
    document: &str,
    k: usize,
    weights: &WeightTable,
    lexicon: &TagLexicon,
) -> Result<Vec<SummarySentence>> {
    if k == 0 {
        return Err(Error::InvalidSpec("summary length must be at least 1".into()));
    }
    let sentences = split_sentences(document);
    if sentences.is_empty() {
        return Err(Error::EmptyDocument);
    }
    let mut scores = score_sentences(&sentences, weights, lexicon);
    scores.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then(a.sentence_index.cmp(&b.sentence_index))
    });
    scores.truncate(k);
    scores.sort_by_key(|s| s.sentence_index);
    Ok(scores
        .into_iter()
        .map(|s| SummarySentence {
            index: s.sentence_index,
            text: sentences[s.sentence_index].text.clone(),
            score: s.score,
        })
        .collect())
}
