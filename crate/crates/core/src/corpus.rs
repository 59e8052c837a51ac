//! Public-domain texts bundled for experiments and examples.
//!
//! Sixteen excerpts by eight authors (two each) for attribution, plus the
//! speeches used by the summarizer checks.

use serde::Serialize;

use crate::profile::{parse_profiles, StrategyProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusText {
    pub author: &'static str,
    pub title: &'static str,
    pub text: &'static str,
}

macro_rules! text {
    ($author:literal, $title:literal) => {
        CorpusText {
            author: $author,
            title: $title,
            text: include_str!(concat!("../corpus/authors/", $author, "/", $title, ".txt")),
        }
    };
}

static AUTHORS: [CorpusText; 16] = [
    text!("shakespeare", "hamlet"),
    text!("shakespeare", "julius_caesar"),
    text!("milton", "paradise_lost_invocation"),
    text!("milton", "paradise_lost_satan"),
    text!("melville", "moby_dick"),
    text!("melville", "bartleby"),
    text!("carroll", "alice_rabbit_hole"),
    text!("carroll", "looking_glass_poems"),
    text!("austen", "pride_and_prejudice"),
    text!("austen", "emma"),
    text!("blake", "songs_tyger_lamb"),
    text!("blake", "songs_london_rose"),
    text!("whitman", "o_captain_america_singing"),
    text!("whitman", "song_of_myself"),
    text!("lincoln", "gettysburg"),
    text!("lincoln", "second_inaugural"),
];

/// The attribution corpus, grouped by author.
pub fn author_texts() -> &'static [CorpusText] {
    &AUTHORS
}

/// Lincoln's Gettysburg Address (Bliss copy).
pub fn gettysburg_address() -> &'static str {
    AUTHORS[14].text
}

/// A short excerpt of sentences from King's 1963 "I Have a Dream" speech.
pub fn king_excerpt() -> &'static str {
    include_str!("../corpus/speeches/king_excerpt.txt")
}

fn table(source: &str) -> Vec<StrategyProfile> {
    parse_profiles(source)
        .expect("bundled table parses")
        .into_iter()
        .map(|r| r.profile)
        .collect()
}

/// The seven example profiles (six single-strategy texts and one unknown).
pub fn style_samples() -> Vec<StrategyProfile> {
    table(include_str!("../fixtures/style_samples.tsv"))
}

/// Inaugural-address profiles of the fourteen re-elected presidents.
pub fn inaugural_winners() -> Vec<StrategyProfile> {
    table(include_str!("../fixtures/inaugural_winners.tsv"))
}

/// Inaugural-address profiles of the fourteen presidents who lost
/// re-election.
pub fn inaugural_losers() -> Vec<StrategyProfile> {
    table(include_str!("../fixtures/inaugural_losers.tsv"))
}
