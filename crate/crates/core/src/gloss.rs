//! Word to definition lookup that drives text generation.
//!
//! The lexicon file is UTF-8 with one `lemma<TAB>gloss text` entry per line.
//! Glosses are tokenized like any other text and keep only their words.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::textseg::tokenize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadWarning {
    /// The gloss had no words; the entry was skipped.
    EmptyGloss { line: usize, lemma: String },
    /// The lemma was already defined; the earlier entry was kept.
    DuplicateLemma { line: usize, lemma: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GlossLexicon {
    entries: HashMap<String, Vec<String>>,
}

static BUNDLED_GLOSSES: &str = include_str!("../data/glosses.tsv");

impl GlossLexicon {
    /// Parses a lexicon and returns the warnings instead of logging them.
    pub fn parse_with_warnings(source: &str) -> Result<(Self, Vec<LoadWarning>)> {
        let mut entries = HashMap::new();
        let mut warnings = Vec::new();
        for (i, line) in source.lines().enumerate() {
            let line_no = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (lemma, gloss) = line
                .split_once('\t')
                .ok_or_else(|| Error::malformed(line_no, "expected lemma<TAB>gloss"))?;
            let lemma = lemma.trim().to_lowercase();
            if lemma.is_empty() {
                return Err(Error::malformed(line_no, "empty lemma"));
            }
            let words: Vec<String> = tokenize(gloss)
                .into_iter()
                .filter(|t| t.is_word)
                .map(|t| t.surface)
                .collect();
            if words.is_empty() {
                warnings.push(LoadWarning::EmptyGloss { line: line_no, lemma });
                continue;
            }
            if entries.contains_key(&lemma) {
                warnings.push(LoadWarning::DuplicateLemma { line: line_no, lemma });
                continue;
            }
            entries.insert(lemma, words);
        }
        Ok((GlossLexicon { entries }, warnings))
    }

    pub fn parse(source: &str) -> Result<Self> {
        let (lexicon, warnings) = Self::parse_with_warnings(source)?;
        for w in warnings {
            match w {
                LoadWarning::EmptyGloss { line, lemma } => {
                    log::warn!("line {line}: empty gloss for {lemma:?}, entry skipped")
                }
                LoadWarning::DuplicateLemma { line, lemma } => {
                    log::warn!("line {line}: duplicate lemma {lemma:?}, keeping the first")
                }
            }
        }
        Ok(lexicon)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let source = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&source)
    }

    /// The lexicon shipped in `data/glosses.tsv`, parsed once.
    pub fn bundled() -> &'static GlossLexicon {
        static LEXICON: OnceLock<GlossLexicon> = OnceLock::new();
        LEXICON.get_or_init(|| GlossLexicon::parse(BUNDLED_GLOSSES).expect("bundled gloss lexicon parses"))
    }

    pub fn gloss_of(&self, word: &str) -> Option<&[String]> {
        self.entries.get(&word.to_lowercase()).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.keys().map(String::as_str)
    }

    /// Serializes in the load format, sorted by lemma.
    pub fn to_tsv(&self) -> String {
        let mut lemmas: Vec<_> = self.entries.keys().collect();
        lemmas.sort();
        let mut out = String::new();
        for lemma in lemmas {
            writeln!(out, "{lemma}\t{}", self.entries[lemma].join(" ")).unwrap();
        }
        out
    }
}

pub fn gloss_of<'a>(lexicon: &'a GlossLexicon, word: &str) -> Option<&'a [String]> {
    lexicon.gloss_of(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const BIRD: &str =
        "bird\twarm-blooded egg-laying vertebrate characterized by feathers and forelimbs modified as wings\n";

    #[test]
    fn loads_bird_gloss() {
        let lex = GlossLexicon::parse(BIRD).unwrap();
        let expected = "warm-blooded egg-laying vertebrate characterized by feathers and forelimbs modified as wings";
        assert_eq!(lex.gloss_of("bird").unwrap().join(" "), expected);
        assert_eq!(lex.gloss_of("BIRD"), lex.gloss_of("bird"));
        assert_eq!(lex.gloss_of("fish"), None);
    }

    #[test]
    fn punctuation_is_stripped() {
        let lex = GlossLexicon::parse("x\t(of a thing) small; round.\n").unwrap();
        assert_eq!(lex.gloss_of("x").unwrap(), ["of", "a", "thing", "small", "round"]);
    }

    #[test]
    fn duplicates_and_empty_glosses_warn() {
        let (lex, warnings) = GlossLexicon::parse_with_warnings("a\tfirst\nA\tsecond\nb\t;;\n").unwrap();
        assert_eq!(lex.gloss_of("a").unwrap(), ["first"]);
        assert_eq!(lex.gloss_of("b"), None);
        assert_eq!(
            warnings,
            [
                LoadWarning::DuplicateLemma {
                    line: 2,
                    lemma: "a".into()
                },
                LoadWarning::EmptyGloss {
                    line: 3,
                    lemma: "b".into()
                },
            ]
        );
    }

    #[test]
    fn malformed_line_is_an_error() {
        let err = GlossLexicon::parse("ok\tfine\nno tab here\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");
    }

    #[test]
    fn empty_file_is_empty_lexicon() {
        assert!(GlossLexicon::parse("").unwrap().is_empty());
    }

    #[test]
    fn bundled_lexicon_is_closed() {
        let lex = GlossLexicon::bundled();
        assert!(lex.len() > 2000);
        for seed in ["bird", "generalization", "hand", "hasty", "indeed", "passion"] {
            assert!(lex.gloss_of(seed).is_some(), "{seed}");
        }
        for lemma in lex.lemmas() {
            for w in lex.gloss_of(lemma).unwrap() {
                assert!(lex.gloss_of(w).is_some(), "{w:?} in gloss of {lemma:?} has no entry");
            }
        }
    }

    proptest! {
        #[test]
        fn reserialize_round_trip(entries in prop::collection::vec(("[a-z]{1,8}", "[a-z]{1,6}( [a-z,;]{1,6}){0,6}"), 0..12)) {
            let source: String = entries.iter().map(|(l, g)| format!("{l}\t{g}\n")).collect();
            let lex = GlossLexicon::parse(&source).unwrap();
            let again = GlossLexicon::parse(&lex.to_tsv()).unwrap();
            prop_assert_eq!(&again, &lex);
            for lemma in lex.lemmas() {
                prop_assert!(!lex.gloss_of(lemma).unwrap().is_empty());
            }
        }
    }
}
