//! Authorship attribution by RMS ranking and re-election prediction by
//! nearest centroid.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::StrategyKind;
use crate::profile::{normalize, rms, similarity, StrategyProfile};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedMatch {
    pub label: String,
    pub rms: f64,
    /// `100 - normalized RMS`; needs at least two known profiles.
    pub similarity_percent: Option<f64>,
}

/// Ranks every known profile by RMS distance to `unknown`, closest first.
/// Equal distances are ordered by label.
pub fn identify(unknown: &StrategyProfile, known: &[StrategyProfile]) -> Result<Vec<RankedMatch>> {
    if known.is_empty() {
        return Err(Error::NoKnownProfiles);
    }
    if unknown.is_degenerate() {
        return Err(Error::DegenerateProfile);
    }
    let distances = known.iter().map(|k| (k.label.clone(), rms(unknown, k)));
    let mut ranked: Vec<RankedMatch> = if known.len() >= 2 {
        normalize(distances)
            .into_iter()
            .map(|n| RankedMatch {
                label: n.label,
                rms: n.rms,
                similarity_percent: Some(similarity(n.percent)),
            })
            .collect()
    } else {
        distances
            .map(|(label, rms)| RankedMatch {
                label,
                rms,
                similarity_percent: None,
            })
            .collect()
    };
    ranked.sort_by(|a, b| a.rms.total_cmp(&b.rms).then_with(|| a.label.cmp(&b.label)));
    Ok(ranked)
}

/// Per-strategy mean of a non-empty set of profiles.
pub fn centroid(
    label: impl Into<String>,
    profiles: &[StrategyProfile],
    set_name: &'static str,
) -> Result<StrategyProfile> {
    if profiles.is_empty() {
        return Err(Error::EmptyCentroidSet(set_name));
    }
    let n = profiles.len() as f64;
    let mut values = [0.0; StrategyKind::COUNT];
    for p in profiles {
        for (acc, v) in values.iter_mut().zip(p.values) {
            *acc += v;
        }
    }
    Ok(StrategyProfile::new(label, values.map(|v| v / n)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentroidPair {
    pub winners_avg: StrategyProfile,
    pub losers_avg: StrategyProfile,
}

pub fn build_centroids(winners: &[StrategyProfile], losers: &[StrategyProfile]) -> Result<CentroidPair> {
    Ok(CentroidPair {
        winners_avg: centroid("winnersAverage", winners, "winner")?,
        losers_avg: centroid("losersAverage", losers, "loser")?,
    })
}

/// Standard deviation of a two-element set under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairDeviation {
    /// Divides by 2: `|a - b| / 2`.
    pub population: f64,
    /// Divides by 1: `|a - b| / sqrt(2)`.
    pub sample: f64,
}

impl PairDeviation {
    pub fn of(a: f64, b: f64) -> Self {
        let mean = (a + b) / 2.0;
        let ss = (a - mean).powi(2) + (b - mean).powi(2);
        PairDeviation {
            population: (ss / 2.0).sqrt(),
            sample: ss.sqrt(),
        }
    }
}

/// How far apart the two centroids are, strategy by strategy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentroidSpread {
    pub per_strategy: [PairDeviation; StrategyKind::COUNT],
    /// Mean over the six strategies of the population deviation.
    pub mean_population: f64,
    /// Mean over the six strategies of the sample deviation.
    pub mean_sample: f64,
}

pub fn centroid_spread(centroids: &CentroidPair) -> CentroidSpread {
    let per_strategy =
        std::array::from_fn(|i| PairDeviation::of(centroids.winners_avg.values[i], centroids.losers_avg.values[i]));
    let n = StrategyKind::COUNT as f64;
    CentroidSpread {
        per_strategy,
        mean_population: per_strategy.iter().map(|d| d.population).sum::<f64>() / n,
        mean_sample: per_strategy.iter().map(|d| d.sample).sum::<f64>() / n,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Win,
    Lose,
    Tie,
}

/// Distances within this band count as a tie.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub outcome: Outcome,
    pub rms_to_winners: f64,
    pub rms_to_losers: f64,
    /// Deviation of the two RMS values, a rough measure of certainty.
    pub deviation: PairDeviation,
}

pub fn predict_reelection(address: &StrategyProfile, centroids: &CentroidPair) -> Result<Prediction> {
    if address.is_degenerate() {
        return Err(Error::DegenerateProfile);
    }
    let to_w = rms(address, &centroids.winners_avg);
    let to_l = rms(address, &centroids.losers_avg);
    let outcome = if (to_w - to_l).abs() <= TIE_TOLERANCE {
        Outcome::Tie
    } else {
        match to_w.total_cmp(&to_l) {
            Ordering::Less => Outcome::Win,
            _ => Outcome::Lose,
        }
    };
    Ok(Prediction {
        outcome,
        rms_to_winners: to_w,
        rms_to_losers: to_l,
        deviation: PairDeviation::of(to_w, to_l),
    })
}
