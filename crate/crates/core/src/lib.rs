//! Stylometry built on rhetorical strategies.
//!
//! Texts are measured by how often they use six devices (dashes,
//! semicolons, alliteration, anaphora, epistrophe and parallelism). The
//! resulting profiles drive authorship attribution, re-election prediction,
//! text generation from a gloss lexicon and extractive summaries.
//!
//! ```
//! use rhetoric::{count_all, to_profile, TagLexicon};
//!
//! let counts = count_all("We shall fight; we shall win - and we shall rest.", TagLexicon::bundled());
//! let profile = to_profile("demo", &counts);
//! assert_eq!(profile.values.iter().sum::<f64>().round(), 100.0);
//! ```

pub mod classify;
pub mod corpus;
pub mod entropy;
pub mod error;
pub mod experiment;
pub mod finders;
pub mod generate;
pub mod gloss;
pub mod profile;
pub mod summarize;
pub mod textseg;

pub use classify::{
    build_centroids, centroid_spread, identify, predict_reelection, CentroidPair, Outcome, Prediction, RankedMatch,
};
pub use entropy::{entropy_report, shannon_entropy, word_distribution, EntropyReport};
pub use error::{Error, Result};
pub use finders::{count_all, StrategyCounts, StrategyKind};
pub use generate::{generate, GeneratedText, GenerationSpec, Mode};
pub use gloss::GlossLexicon;
pub use profile::{
    normalized_rms, rms, similarity, store_load, store_save, to_profile, ProfileStoreRecord, StrategyProfile,
};
pub use summarize::{summarize, WeightTable};
pub use textseg::{split_sentences, tokenize, Tag, TagLexicon};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/finders.md")]
    mod finders {}
    #[doc = include_str!("../../../book/src/profiles.md")]
    mod profiles {}
    #[doc = include_str!("../../../book/src/prediction.md")]
    mod prediction {}
    #[doc = include_str!("../../../book/src/generation.md")]
    mod generation {}
    #[doc = include_str!("../../../book/src/entropy.md")]
    mod entropy {}
    #[doc = include_str!("../../../book/src/summarization.md")]
    mod summarization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
