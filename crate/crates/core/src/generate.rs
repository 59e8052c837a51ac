//! Text generation by chaining dictionary definitions.
//!
//! Starting from a seed word, each next word is taken from the gloss of the
//! current one: the middle word (`gloss[len / 2]`) in deterministic mode, a
//! uniformly random word in random mode. The chain runs until the word
//! budget `words_per_sentence * num_sentences` is spent. Dashes and
//! semicolons are then placed into randomly chosen sentences so that the
//! share of sentences carrying each mark matches its target.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::StrategyKind;
use crate::gloss::GlossLexicon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Deterministic,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthDistribution {
    /// Every sentence has exactly `words_per_sentence` words.
    Fixed,
    /// Lengths drawn from `words_per_sentence ± 2` (at least 1), then nudged
    /// until they add up to the budget.
    Jittered,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationSpec {
    pub seed_word: String,
    pub words_per_sentence: usize,
    pub num_sentences: usize,
    /// Target percentage of sentences carrying a dash.
    pub dash_percent: f64,
    /// Target percentage of sentences carrying a semicolon.
    pub semicolon_percent: f64,
    pub mode: Mode,
    pub rng_seed: u64,
    pub lengths: LengthDistribution,
}

impl GenerationSpec {
    pub fn new(seed_word: impl Into<String>, words_per_sentence: usize, num_sentences: usize) -> Self {
        GenerationSpec {
            seed_word: seed_word.into(),
            words_per_sentence,
            num_sentences,
            dash_percent: 0.0,
            semicolon_percent: 0.0,
            mode: Mode::Deterministic,
            rng_seed: 0,
            lengths: LengthDistribution::Fixed,
        }
    }

    pub fn word_budget(&self) -> usize {
        self.words_per_sentence * self.num_sentences
    }

    fn validate(&self) -> Result<()> {
        if self.words_per_sentence == 0 || self.num_sentences == 0 {
            return Err(Error::InvalidSpec(
                "words per sentence and sentence count must be at least 1".into(),
            ));
        }
        for (name, p) in [("dash", self.dash_percent), ("semicolon", self.semicolon_percent)] {
            if !(0.0..=100.0).contains(&p) {
                return Err(Error::InvalidSpec(format!("{name} percentage {p} is outside [0, 100]")));
            }
        }
        Ok(())
    }
}

/// Where a mark was placed: after `position` words of sentence
/// `sentence_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Injection {
    pub sentence_index: usize,
    pub strategy: StrategyKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratedText {
    pub sentences: Vec<String>,
    /// The chain of words, in order, without punctuation.
    pub words: Vec<String>,
    pub total_words: usize,
    pub injection_log: Vec<Injection>,
    /// How often a word had no gloss and the chain restarted from the seed.
    pub fallbacks: usize,
}

impl GeneratedText {
    pub fn text(&self) -> String {
        self.sentences.join(" ")
    }
}

/// A chosen word, and whether it came from the seed because the current
/// word had no gloss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NextWord {
    pub word: String,
    pub fell_back: bool,
}

pub fn next_word<R: Rng + ?Sized>(
    current: &str,
    seed_word: &str,
    lexicon: &GlossLexicon,
    mode: Mode,
    rng: &mut R,
) -> Result<NextWord> {
    let (gloss, fell_back) = match lexicon.gloss_of(current) {
        Some(g) => (g, false),
        None => {
            let g = lexicon
                .gloss_of(seed_word)
                .ok_or_else(|| Error::SeedWithoutGloss(seed_word.to_string()))?;
            log::debug!("{current:?} has no gloss, expanding the seed {seed_word:?} instead");
            (g, true)
        }
    };
    let at = match mode {
        Mode::Deterministic => gloss.len() / 2,
        Mode::Random => rng.gen_range(0..gloss.len()),
    };
    Ok(NextWord {
        word: gloss[at].clone(),
        fell_back,
    })
}

/// A sentence before rendering: its words and the marks placed in it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DraftSentence {
    pub words: Vec<String>,
    /// (words before the mark, mark)
    pub marks: Vec<(usize, StrategyKind)>,
}

impl DraftSentence {
    pub fn new(words: Vec<String>) -> Self {
        DraftSentence {
            words,
            marks: Vec::new(),
        }
    }

    /// Capitalized, terminated with a period. A semicolon is attached to the
    /// word before it, a dash stands between spaces.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, word) in self.words.iter().enumerate() {
            if i == 0 {
                let mut chars = word.chars();
                if let Some(c) = chars.next() {
                    out.extend(c.to_uppercase());
                    out.push_str(chars.as_str());
                }
            } else {
                out.push(' ');
                out.push_str(word);
            }
            self.render_marks_after(i + 1, &mut out);
        }
        out.push('.');
        out
    }

    fn render_marks_after(&self, position: usize, out: &mut String) {
        let has = |kind| self.marks.contains(&(position, kind));
        // semicolon first: "word; - next" keeps the dash between spaces
        if has(StrategyKind::Semicolon) {
            out.push(';');
        }
        if has(StrategyKind::Dash) {
            out.push_str(" -");
            // a dash at the very end still needs its trailing space
            if position == self.words.len() {
                out.push(' ');
            }
        }
    }
}

/// Number of sentences that should carry a mark with the given target share.
pub fn marked_sentences(percent: f64, num_sentences: usize) -> usize {
    ((percent / 100.0) * num_sentences as f64).round() as usize
}

/// Places `round(p / 100 * n)` dashes and semicolons, each in a distinct
/// sentence chosen uniformly without replacement, at a uniformly chosen
/// gap between two words. A one-word sentence takes the mark after its
/// word. Returns the placements in sentence order per strategy.
pub fn inject_punctuation<R: Rng + ?Sized>(
    sentences: &mut [DraftSentence],
    dash_percent: f64,
    semicolon_percent: f64,
    rng: &mut R,
) -> Vec<Injection> {
    let mut log = Vec::new();
    for (strategy, percent) in [
        (StrategyKind::Dash, dash_percent),
        (StrategyKind::Semicolon, semicolon_percent),
    ] {
        let k = marked_sentences(percent, sentences.len()).min(sentences.len());
        let mut chosen = index::sample(rng, sentences.len(), k).into_vec();
        chosen.sort_unstable();
        for sentence_index in chosen {
            let s = &mut sentences[sentence_index];
            let position = if s.words.len() >= 2 {
                rng.gen_range(1..s.words.len())
            } else {
                s.words.len()
            };
            s.marks.push((position, strategy));
            log.push(Injection {
                sentence_index,
                strategy,
                position,
            });
        }
    }
    log
}

fn sentence_lengths<R: Rng + ?Sized>(spec: &GenerationSpec, rng: &mut R) -> Vec<usize> {
    let wps = spec.words_per_sentence;
    match spec.lengths {
        LengthDistribution::Fixed => vec![wps; spec.num_sentences],
        LengthDistribution::Jittered => {
            let lo = wps.saturating_sub(2).max(1);
            let mut lengths: Vec<usize> = (0..spec.num_sentences).map(|_| rng.gen_range(lo..=wps + 2)).collect();
            let budget = spec.word_budget();
            let mut sum: usize = lengths.iter().sum();
            while sum < budget {
                let i = rng.gen_range(0..lengths.len());
                lengths[i] += 1;
                sum += 1;
            }
            while sum > budget {
                let i = rng.gen_range(0..lengths.len());
                if lengths[i] > 1 {
                    lengths[i] -= 1;
                    sum -= 1;
                }
            }
            lengths
        }
    }
}

pub fn generate(spec: &GenerationSpec, lexicon: &GlossLexicon) -> Result<GeneratedText> {
    spec.validate()?;
    if lexicon.gloss_of(&spec.seed_word).is_none() {
        return Err(Error::SeedWithoutGloss(spec.seed_word.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);

    let budget = spec.word_budget();
    let mut words = Vec::with_capacity(budget);
    words.push(spec.seed_word.clone());
    let mut fallbacks = 0;
    while words.len() < budget {
        let next = next_word(words.last().unwrap(), &spec.seed_word, lexicon, spec.mode, &mut rng)?;
        fallbacks += usize::from(next.fell_back);
        words.push(next.word);
    }
    if fallbacks > 0 {
        log::info!(
            "{fallbacks} chain words had no gloss and restarted from {:?}",
            spec.seed_word
        );
    }

    let lengths = sentence_lengths(spec, &mut rng);
    let mut rest = words.as_slice();
    let mut drafts: Vec<DraftSentence> = lengths
        .iter()
        .map(|&n| {
            let (head, tail) = rest.split_at(n);
            rest = tail;
            DraftSentence::new(head.to_vec())
        })
        .collect();

    let injection_log = inject_punctuation(&mut drafts, spec.dash_percent, spec.semicolon_percent, &mut rng);

    Ok(GeneratedText {
        sentences: drafts.iter().map(DraftSentence::render).collect(),
        total_words: words.len(),
        words,
        injection_log,
        fallbacks,
    })
}

/// Probability of reaching the last word of `chain` by uniform random
/// choices: 1 for the seed, and each step divides by the length of the
/// previous word's gloss.
pub fn markov_step_probability(chain: &[&str], lexicon: &GlossLexicon) -> Result<f64> {
    let Some(first) = chain.first() else {
        return Err(Error::BrokenChain {
            word: String::new(),
            reason: "empty chain",
        });
    };
    let mut p = 1.0;
    let mut prev = *first;
    for &word in &chain[1..] {
        let gloss = lexicon.gloss_of(prev).ok_or_else(|| Error::BrokenChain {
            word: prev.to_string(),
            reason: "no gloss",
        })?;
        if !gloss.iter().any(|g| g.eq_ignore_ascii_case(word)) {
            return Err(Error::BrokenChain {
                word: word.to_string(),
                reason: "not in the previous word's gloss",
            });
        }
        p /= gloss.len() as f64;
        prev = word;
    }
    Ok(p)
}
