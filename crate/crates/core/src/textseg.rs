//! Sentence splitting, word tokenization and unigram part-of-speech tagging.
//!
//! Sentences end after a run of `.`, `!` or `?` (optionally followed by
//! closing quotes or brackets) when whitespace or the end of input follows.
//! Abbreviations are not special-cased, so "Mr. Smith" splits in two.
//!
//! Tokens are whitespace-separated chunks with leading and trailing
//! punctuation peeled off into their own tokens. Em dashes and double
//! hyphens split a chunk; other punctuation inside it (hyphens, apostrophes)
//! stays in the word.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    /// False for punctuation tokens.
    pub is_word: bool,
    /// Byte offset of the token in the text it was cut from.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    /// Position of the sentence in its document.
    pub index: usize,
    /// The sentence text, trimmed of surrounding whitespace.
    pub text: String,
    /// Byte offset of `text` in the document.
    pub offset: usize,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn words(&self) -> impl Iterator<Item = &Token> + '_ {
        self.tokens.iter().filter(|t| t.is_word)
    }

    pub fn word_count(&self) -> usize {
        self.words().count()
    }
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

fn is_closer(c: char) -> bool {
    matches!(c, '"' | '\'' | ')' | ']' | '\u{201d}' | '\u{2019}')
}

/// Splits a document into sentences. Segments that hold no tokens at all are
/// dropped, so indices are dense.
pub fn split_sentences(text: &str) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut push = |start: usize, end: usize| {
        let raw = &text[start..end];
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            return;
        }
        let offset = start + (raw.len() - raw.trim_start().len());
        sentences.push(Sentence {
            index: sentences.len(),
            text: trimmed.to_string(),
            offset,
            tokens: tokenize_at(trimmed, offset),
        });
    };

    let mut start = 0;
    let mut chars = text.char_indices().peekable();
    while let Some((_, c)) = chars.next() {
        if !is_terminal(c) {
            continue;
        }
        while let Some(&(_, next)) = chars.peek() {
            if is_terminal(next) || is_closer(next) {
                chars.next();
            } else {
                break;
            }
        }
        match chars.peek() {
            None => {}
            Some(&(end, next)) if next.is_whitespace() => {
                push(start, end);
                start = end;
            }
            Some(_) => {}
        }
    }
    push(start, text.len());
    sentences
}

/// Tokenizes a single sentence (or any text) with offsets relative to it.
pub fn tokenize(sentence_text: &str) -> Vec<Token> {
    tokenize_at(sentence_text, 0)
}

fn tokenize_at(text: &str, base: usize) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut pos = 0;
    for chunk in text.split_whitespace() {
        // split_whitespace yields subslices in order, so find() from `pos` is exact
        let at = pos + text[pos..].find(chunk).expect("chunk comes from text");
        pos = at + chunk.len();
        split_dashes(&mut tokens, chunk, base + at);
    }
    tokens
}

/// An em dash or double hyphen separates words even without spaces, as in
/// `spoke\u{2014}quietly` or `here--now`.
fn split_dashes(tokens: &mut Vec<Token>, chunk: &str, offset: usize) {
    let mut start = 0;
    let mut i = 0;
    while i < chunk.len() {
        let rest = &chunk[i..];
        let dash_len = if rest.starts_with('\u{2014}') {
            rest.chars().take_while(|&c| c == '\u{2014}').map(char::len_utf8).sum()
        } else if rest.starts_with("--") {
            rest.bytes().take_while(|&b| b == b'-').count()
        } else {
            0
        };
        if dash_len == 0 {
            i += rest.chars().next().map_or(1, char::len_utf8);
            continue;
        }
        if start < i {
            push_chunk(tokens, &chunk[start..i], offset + start);
        }
        push_punct(tokens, &chunk[i..i + dash_len], offset + i);
        i += dash_len;
        start = i;
    }
    if start < chunk.len() {
        push_chunk(tokens, &chunk[start..], offset + start);
    }
}

fn push_chunk(tokens: &mut Vec<Token>, chunk: &str, offset: usize) {
    let first = chunk.char_indices().find(|(_, c)| c.is_alphanumeric());
    let Some((core_start, _)) = first else {
        push_punct(tokens, chunk, offset);
        return;
    };
    let (last, last_char) = chunk
        .char_indices()
        .rev()
        .find(|(_, c)| c.is_alphanumeric())
        .expect("chunk has an alphanumeric char");
    let core_end = last + last_char.len_utf8();

    push_punct(tokens, &chunk[..core_start], offset);
    tokens.push(Token {
        surface: chunk[core_start..core_end].to_string(),
        is_word: true,
        offset: offset + core_start,
    });
    push_punct(tokens, &chunk[core_end..], offset + core_end);
}

/// Each run of one repeated punctuation character becomes a token: `--`
/// stays whole, `."` becomes two tokens.
fn push_punct(tokens: &mut Vec<Token>, punct: &str, offset: usize) {
    let mut run_start = 0;
    let mut prev: Option<char> = None;
    for (i, c) in punct.char_indices() {
        if prev.is_some_and(|p| p != c) {
            tokens.push(Token {
                surface: punct[run_start..i].to_string(),
                is_word: false,
                offset: offset + run_start,
            });
            run_start = i;
        }
        prev = Some(c);
    }
    if run_start < punct.len() {
        tokens.push(Token {
            surface: punct[run_start..].to_string(),
            is_word: false,
            offset: offset + run_start,
        });
    }
}

/// The 12-tag universal part-of-speech set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Tag {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Num,
    Conj,
    Prt,
    Punct,
    X,
}

impl Tag {
    pub const ALL: [Tag; 12] = [
        Tag::Noun,
        Tag::Verb,
        Tag::Adj,
        Tag::Adv,
        Tag::Pron,
        Tag::Det,
        Tag::Adp,
        Tag::Num,
        Tag::Conj,
        Tag::Prt,
        Tag::Punct,
        Tag::X,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Noun => "NOUN",
            Tag::Verb => "VERB",
            Tag::Adj => "ADJ",
            Tag::Adv => "ADV",
            Tag::Pron => "PRON",
            Tag::Det => "DET",
            Tag::Adp => "ADP",
            Tag::Num => "NUM",
            Tag::Conj => "CONJ",
            Tag::Prt => "PRT",
            Tag::Punct => "PUNCT",
            Tag::X => "X",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Tag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown tag {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: Tag,
}

/// Word to most-frequent-tag table. Words are stored lowercased.
#[derive(Debug, Clone, Default)]
pub struct TagLexicon {
    tags: HashMap<String, Tag>,
}

static BUNDLED_TAGS: &str = include_str!("../data/tags.tsv");

impl TagLexicon {
    /// Parses `word<TAB>tag` lines. The first entry for a word wins; blank
    /// lines are skipped.
    pub fn parse(source: &str) -> Result<Self> {
        let mut tags = HashMap::new();
        for (i, line) in source.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (word, tag) = line
                .split_once('\t')
                .ok_or_else(|| Error::malformed(i + 1, "expected word<TAB>tag"))?;
            let tag: Tag = tag.trim().parse().map_err(|e| Error::malformed(i + 1, e))?;
            if word.is_empty() {
                return Err(Error::malformed(i + 1, "empty word"));
            }
            tags.entry(word.to_lowercase()).or_insert(tag);
        }
        Ok(TagLexicon { tags })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let source = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&source)
    }

    /// The lexicon shipped in `data/tags.tsv`, parsed once.
    pub fn bundled() -> &'static TagLexicon {
        static LEXICON: OnceLock<TagLexicon> = OnceLock::new();
        LEXICON.get_or_init(|| TagLexicon::parse(BUNDLED_TAGS).expect("bundled tag lexicon parses"))
    }

    pub fn from_entries<'a>(entries: impl IntoIterator<Item = (&'a str, Tag)>) -> Self {
        let mut tags = HashMap::new();
        for (word, tag) in entries {
            tags.entry(word.to_lowercase()).or_insert(tag);
        }
        TagLexicon { tags }
    }

    pub fn get(&self, word: &str) -> Option<Tag> {
        self.tags.get(&word.to_lowercase()).copied()
    }

    /// Tag for one token: PUNCT for punctuation, the lexicon entry for a
    /// known word, NOUN otherwise.
    pub fn tag_of(&self, token: &Token) -> Tag {
        if !token.is_word {
            Tag::Punct
        } else {
            self.get(&token.surface).unwrap_or(Tag::Noun)
        }
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }
}

pub fn tag(tokens: &[Token], lexicon: &TagLexicon) -> Vec<TaggedToken> {
    tokens
        .iter()
        .map(|t| TaggedToken {
            token: t.clone(),
            tag: lexicon.tag_of(t),
        })
        .collect()
}
