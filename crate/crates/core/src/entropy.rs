//! Shannon entropy of a text's word distribution.
//!
//! `H = -sum p_i log2 p_i` over the distinct (case-folded) words, with
//! `0 log 0 = 0`. Relative entropy divides by the largest entropy the text's
//! own vocabulary allows, `log2(distinct words)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::textseg::tokenize;

const SUM_TOLERANCE: f64 = 1e-9;

/// Relative frequency of each lowercased word. Punctuation is ignored.
pub fn word_distribution(text: &str) -> BTreeMap<String, f64> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut total = 0usize;
    for token in tokenize(text).into_iter().filter(|t| t.is_word) {
        *counts.entry(token.surface.to_lowercase()).or_default() += 1;
        total += 1;
    }
    counts.into_iter().map(|(w, c)| (w, c as f64 / total as f64)).collect()
}

/// Entropy in bits of a distribution given as probabilities.
pub fn shannon_entropy<'a>(probabilities: impl IntoIterator<Item = &'a f64>) -> Result<f64> {
    let mut h = 0.0;
    let mut sum = 0.0;
    let mut any = false;
    for &p in probabilities {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        any = true;
        sum += p;
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    if any && (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::InvalidProbability(sum));
    }
    // -0.0 for a certain outcome reads oddly in reports
    Ok(h.max(0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub total_words: usize,
    pub distinct_words: usize,
    pub entropy_bits: f64,
    pub max_entropy_bits: f64,
    pub relative_entropy: f64,
}

impl EntropyReport {
    /// `key: value` lines in field order.
    pub fn to_text(&self) -> String {
        format!(
            "total_words: {}\ndistinct_words: {}\nentropy_bits: {}\nmax_entropy_bits: {}\nrelative_entropy: {}\n",
            self.total_words, self.distinct_words, self.entropy_bits, self.max_entropy_bits, self.relative_entropy
        )
    }
}

/// `H / log2(distinct)`, with a single distinct word defined as 0.
pub fn relative_entropy(entropy_bits: f64, distinct_words: usize) -> Result<f64> {
    match distinct_words {
        0 => Err(Error::NoWords),
        1 => Ok(0.0),
        n => Ok((entropy_bits / (n as f64).log2()).clamp(0.0, 1.0)),
    }
}

pub fn entropy_report(text: &str) -> Result<EntropyReport> {
    let total_words = tokenize(text).iter().filter(|t| t.is_word).count();
    let dist = word_distribution(text);
    if dist.is_empty() {
        return Err(Error::NoWords);
    }
    let entropy_bits = shannon_entropy(dist.values())?;
    let distinct_words = dist.len();
    Ok(EntropyReport {
        total_words,
        distinct_words,
        entropy_bits,
        max_entropy_bits: (distinct_words as f64).log2(),
        relative_entropy: relative_entropy(entropy_bits, distinct_words)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn distributions() {
        let d = word_distribution("a b a");
        assert_relative_eq!(d["a"], 2.0 / 3.0);
        assert_relative_eq!(d["b"], 1.0 / 3.0);
        assert_eq!(
            word_distribution("A a").into_iter().collect::<Vec<_>>(),
            [("a".to_string(), 1.0)]
        );
        let d = word_distribution("a; b.");
        assert_eq!(d.len(), 2);
        assert_eq!(d["a"], 0.5);
        assert!(word_distribution("").is_empty());
    }

    #[test]
    fn entropies() {
        assert_eq!(shannon_entropy(&[1.0]).unwrap(), 0.0);
        assert_eq!(shannon_entropy(&[0.25; 4]).unwrap(), 2.0);
        assert_eq!(shannon_entropy(&[0.5, 0.25, 0.25]).unwrap(), 1.5);
        assert_eq!(shannon_entropy(&[]).unwrap(), 0.0);
        assert!(matches!(
            shannon_entropy(&[1.5, -0.5]),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            shannon_entropy(&[0.5, 0.4]),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn relative_entropies() {
        assert_relative_eq!(entropy_report("x y z").unwrap().relative_entropy, 1.0, epsilon = 1e-12);
        assert_eq!(entropy_report("same same same").unwrap().relative_entropy, 0.0);

        let r = entropy_report("a a a b").unwrap();
        // -(3/4) log2(3/4) - (1/4) log2(1/4)
        let h = -(0.75f64 * 0.75f64.log2()) - 0.25 * 0.25f64.log2();
        assert_relative_eq!(r.entropy_bits, h, epsilon = 1e-12);
        assert_relative_eq!(r.entropy_bits, 0.8112781244591328, epsilon = 1e-12);
        assert_eq!(r.max_entropy_bits, 1.0);
        assert_relative_eq!(r.relative_entropy, h, epsilon = 1e-12);
        assert_eq!(r.total_words, 4);
        assert_eq!(r.distinct_words, 2);

        assert!(matches!(entropy_report(" ;; "), Err(Error::NoWords)));
        assert!(matches!(relative_entropy(0.0, 0), Err(Error::NoWords)));
    }

    fn arb_text() -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec("[a-f]{1,2}", 1..40)
    }

    proptest! {
        #[test]
        fn bounded(words in arb_text()) {
            let r = entropy_report(&words.join(" ")).unwrap();
            prop_assert!((0.0..=1.0).contains(&r.relative_entropy));
            prop_assert!(r.entropy_bits <= r.max_entropy_bits + 1e-12);
        }

        #[test]
        fn renaming_words_keeps_entropy(words in arb_text()) {
            let renamed: Vec<String> = words.iter().map(|w| format!("z{w}q")).collect();
            let a = entropy_report(&words.join(" ")).unwrap();
            let b = entropy_report(&renamed.join(" ")).unwrap();
            prop_assert!((a.entropy_bits - b.entropy_bits).abs() < 1e-12);
        }

        #[test]
        fn repeating_the_commonest_word_never_raises_relative_entropy(words in arb_text()) {
            let dist = word_distribution(&words.join(" "));
            let top = dist.iter().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0.clone();
            let before = entropy_report(&words.join(" ")).unwrap().relative_entropy;
            let after = entropy_report(&format!("{} {top}", words.join(" "))).unwrap().relative_entropy;
            prop_assert!(after <= before + 1e-12);
        }
    }
}
