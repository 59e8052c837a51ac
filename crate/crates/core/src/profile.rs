//! Strategy profiles: percentages of each strategy among all strategies
//! found in a text, distances between them, and a TSV store.
//!
//! The distance between two profiles `a` and `b` is the root mean square of
//! their per-strategy differences,
//!
//! ```text
//! rms(a, b) = sqrt( (1/6) * sum_s (a_s - b_s)^2 )
//! ```
//!
//! Within a candidate set, each candidate's RMS is normalized by the spread
//! of RMS values, `100 * rms / (rms_max - rms_min)`, and similarity is
//! `100 - normalized`. Normalized values are not capped at 100, so a
//! similarity can be negative.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finders::{StrategyCounts, StrategyKind};

/// Percentage (0 to 100) of each strategy, in [`StrategyKind::ALL`] order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyProfile {
    pub label: String,
    pub values: [f64; StrategyKind::COUNT],
}

impl StrategyProfile {
    pub fn new(label: impl Into<String>, values: [f64; StrategyKind::COUNT]) -> Self {
        StrategyProfile {
            label: label.into(),
            values,
        }
    }

    pub fn get(&self, kind: StrategyKind) -> f64 {
        self.values[kind.ordinal()]
    }

    /// All-zero profile of a text in which no strategy was found.
    pub fn is_degenerate(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

pub fn to_profile(label: impl Into<String>, counts: &StrategyCounts) -> StrategyProfile {
    let total = counts.total();
    let values = if total == 0 {
        [0.0; StrategyKind::COUNT]
    } else {
        counts.as_array().map(|c| 100.0 * c as f64 / total as f64)
    };
    StrategyProfile::new(label, values)
}

pub fn rms(a: &StrategyProfile, b: &StrategyProfile) -> f64 {
    let sum: f64 = a.values.iter().zip(&b.values).map(|(x, y)| (x - y) * (x - y)).sum();
    (sum / StrategyKind::COUNT as f64).sqrt()
}

/// A candidate's distance to a target, raw and normalized over its set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedRms {
    pub label: String,
    pub rms: f64,
    /// `100 * rms / (max - min)`, or 0 when every candidate is equidistant.
    pub percent: f64,
}

/// Normalizes each candidate's RMS to `target` by the spread of RMS values
/// over the set. Output keeps candidate order.
pub fn normalized_rms(target: &StrategyProfile, candidates: &[StrategyProfile]) -> Result<Vec<NormalizedRms>> {
    if candidates.len() < 2 {
        return Err(Error::InsufficientCandidates);
    }
    let distances: Vec<f64> = candidates.iter().map(|c| rms(target, c)).collect();
    Ok(normalize(candidates.iter().map(|c| c.label.clone()).zip(distances)))
}

pub(crate) fn normalize(distances: impl IntoIterator<Item = (String, f64)>) -> Vec<NormalizedRms> {
    let distances: Vec<_> = distances.into_iter().collect();
    let max = distances.iter().map(|d| d.1).fold(f64::NEG_INFINITY, f64::max);
    let min = distances.iter().map(|d| d.1).fold(f64::INFINITY, f64::min);
    let spread = max - min;
    distances
        .into_iter()
        .map(|(label, rms)| NormalizedRms {
            label,
            rms,
            percent: if spread > 0.0 { 100.0 * rms / spread } else { 0.0 },
        })
        .collect()
}

pub fn similarity(normalized_rms_percent: f64) -> f64 {
    100.0 - normalized_rms_percent
}

/// One row of a profile store.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileStoreRecord {
    pub profile: StrategyProfile,
    /// Raw counts behind the profile; absent for tables transcribed as
    /// percentages only.
    pub counts: Option<StrategyCounts>,
    pub source_files: Vec<String>,
}

impl ProfileStoreRecord {
    pub fn from_counts(label: impl Into<String>, counts: StrategyCounts, source_files: Vec<String>) -> Self {
        ProfileStoreRecord {
            profile: to_profile(label, &counts),
            counts: Some(counts),
            source_files,
        }
    }
}

const PROFILE_TOLERANCE: f64 = 1e-9;

/// Path of the counts file that accompanies a profile table:
/// `authors.tsv` keeps its counts in `authors.counts.tsv`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.counts.tsv"))
}

fn profile_header() -> String {
    let mut h = String::from("label");
    for k in StrategyKind::ALL {
        h.push('\t');
        h.push_str(k.column());
    }
    h
}

fn counts_header() -> String {
    let mut h = String::from("label");
    for k in StrategyKind::ALL {
        h.push('\t');
        h.push_str(k.name());
    }
    h.push_str("\tsources");
    h
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.trim() != label || label.contains(['\t', '\n', '\r']) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// Writes the profile table to `path` and, when any record carries counts,
/// the counts table to [`sidecar_path`]. Percentages are written in
/// shortest round-trip form, so loading reproduces them bit for bit.
pub fn store_save(records: &[ProfileStoreRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut seen = HashSet::new();
    for r in records {
        check_label(&r.profile.label)?;
        if !seen.insert(r.profile.label.as_str()) {
            return Err(Error::DuplicateLabel(r.profile.label.clone()));
        }
    }

    let mut table = profile_header();
    table.push('\n');
    for r in records {
        table.push_str(&r.profile.label);
        for v in r.profile.values {
            write!(table, "\t{v:?}").unwrap();
        }
        table.push('\n');
    }
    std::fs::write(path, table).map_err(|e| Error::io(path, e))?;

    let sidecar = sidecar_path(path);
    if records.iter().any(|r| r.counts.is_some()) {
        let mut counts = counts_header();
        counts.push('\n');
        for r in records {
            let Some(c) = r.counts else { continue };
            counts.push_str(&r.profile.label);
            for (_, n) in c.iter() {
                write!(counts, "\t{n}").unwrap();
            }
            for src in &r.source_files {
                counts.push('\t');
                counts.push_str(src);
            }
            counts.push('\n');
        }
        std::fs::write(&sidecar, counts).map_err(|e| Error::io(&sidecar, e))?;
    } else if sidecar.exists() {
        std::fs::remove_file(&sidecar).map_err(|e| Error::io(&sidecar, e))?;
    }
    Ok(())
}

pub fn store_load(path: impl AsRef<Path>) -> Result<Vec<ProfileStoreRecord>> {
    let path = path.as_ref();
    let table = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut records = parse_profiles(&table)?;

    let sidecar = sidecar_path(path);
    if sidecar.exists() {
        let counts = std::fs::read_to_string(&sidecar).map_err(|e| Error::io(&sidecar, e))?;
        attach_counts(&mut records, &counts)?;
    }
    Ok(records)
}

/// Parses a profile table (header plus one row per label).
pub fn parse_profiles(table: &str) -> Result<Vec<ProfileStoreRecord>> {
    let mut lines = table.lines().enumerate();
    let header = profile_header();
    match lines.next() {
        Some((_, h)) if h.trim_end() == header => {}
        _ => return Err(Error::malformed(1, format!("expected header {header:?}"))),
    }

    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 1 + StrategyKind::COUNT {
            return Err(Error::malformed(
                line_no,
                format!("expected {} columns, found {}", 1 + StrategyKind::COUNT, fields.len()),
            ));
        }
        let label = fields[0].to_string();
        check_label(&label).map_err(|e| Error::malformed(line_no, e.to_string()))?;
        if !seen.insert(label.clone()) {
            return Err(Error::DuplicateLabel(label));
        }
        let mut values = [0.0; StrategyKind::COUNT];
        for (slot, field) in values.iter_mut().zip(&fields[1..]) {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|_| Error::malformed(line_no, format!("not a number: {field:?}")))?;
            if !(0.0..=100.0).contains(&v) {
                return Err(Error::malformed(line_no, format!("percentage out of range: {v}")));
            }
            *slot = v;
        }
        records.push(ProfileStoreRecord {
            profile: StrategyProfile::new(label, values),
            counts: None,
            source_files: Vec::new(),
        });
    }
    Ok(records)
}

fn attach_counts(records: &mut [ProfileStoreRecord], table: &str) -> Result<()> {
    let mut lines = table.lines().enumerate();
    let header = counts_header();
    match lines.next() {
        Some((_, h)) if h.trim_end() == header => {}
        _ => return Err(Error::malformed(1, format!("expected counts header {header:?}"))),
    }
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 1 + StrategyKind::COUNT {
            return Err(Error::malformed(line_no, "too few columns in counts row"));
        }
        let mut counts = [0usize; StrategyKind::COUNT];
        for (slot, field) in counts.iter_mut().zip(&fields[1..=StrategyKind::COUNT]) {
            *slot = field
                .trim()
                .parse()
                .map_err(|_| Error::malformed(line_no, format!("not a count: {field:?}")))?;
        }
        let counts = StrategyCounts::new(counts);
        let record = records
            .iter_mut()
            .find(|r| r.profile.label == fields[0])
            .ok_or_else(|| Error::malformed(line_no, format!("counts for unknown label {:?}", fields[0])))?;
        let expected = to_profile(fields[0], &counts);
        let agrees = expected
            .values
            .iter()
            .zip(&record.profile.values)
            .all(|(a, b)| (a - b).abs() <= PROFILE_TOLERANCE);
        if !agrees {
            return Err(Error::malformed(
                line_no,
                format!("counts for {:?} disagree with its profile", fields[0]),
            ));
        }
        record.counts = Some(counts);
        record.source_files = fields[1 + StrategyKind::COUNT..]
            .iter()
            .map(|s| s.to_string())
            .collect();
    }
    Ok(())
}

/// Loads `path` if it exists, appends `record`, and saves.
pub fn store_append(path: impl AsRef<Path>, record: ProfileStoreRecord) -> Result<()> {
    let path = path.as_ref();
    let mut records = if path.exists() { store_load(path)? } else { Vec::new() };
    if records.iter().any(|r| r.profile.label == record.profile.label) {
        return Err(Error::DuplicateLabel(record.profile.label));
    }
    records.push(record);
    store_save(&records, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn counts(c: [usize; 6]) -> StrategyCounts {
        StrategyCounts::new(c)
    }

    #[test]
    fn unknown_row_of_the_test_table() {
        let p = to_profile("Unknown", &counts([1, 3, 0, 0, 0, 5]));
        let expected = [100.0 / 9.0, 300.0 / 9.0, 0.0, 0.0, 0.0, 500.0 / 9.0];
        for (a, b) in p.values.iter().zip(expected) {
            assert_relative_eq!(*a, b, epsilon = 1e-9);
        }
        assert_relative_eq!(p.values[0], 11.111111111111, epsilon = 1e-9);
    }

    #[test]
    fn equal_dash_and_parallelism() {
        for k in 1..10 {
            let p = to_profile("Dash", &counts([k, 0, 0, 0, 0, k]));
            assert_eq!(p.values, [50.0, 0.0, 0.0, 0.0, 0.0, 50.0]);
        }
    }

    #[test]
    fn zero_counts_are_degenerate() {
        let p = to_profile("empty", &StrategyCounts::default());
        assert!(p.is_degenerate());
        assert_eq!(p.values, [0.0; 6]);
    }

    #[test]
    fn rms_examples() {
        let a = StrategyProfile::new("a", [50.0, 0.0, 0.0, 0.0, 0.0, 50.0]);
        let b = StrategyProfile::new("b", [0.0, 0.0, 0.0, 0.0, 0.0, 100.0]);
        assert_eq!(rms(&a, &a), 0.0);
        // sqrt((50^2 + 50^2) / 6)
        assert_relative_eq!(rms(&a, &b), 28.867513459481287, epsilon = 1e-12);
    }

    #[test]
    fn normalization_examples() {
        let target = StrategyProfile::new("t", [0.0; 6]);
        // rms of a profile with x in one column is x / sqrt(6)
        let s6 = 6f64.sqrt();
        let near = StrategyProfile::new("near", [10.0 * s6, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let far = StrategyProfile::new("far", [20.0 * s6, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let n = normalized_rms(&target, &[near.clone(), far.clone()]).unwrap();
        assert_relative_eq!(n[0].percent, 100.0, epsilon = 1e-9);
        assert_relative_eq!(n[1].percent, 200.0, epsilon = 1e-9);

        let n = normalized_rms(&target, &[near.clone(), near.clone().with_label("twin")]).unwrap();
        assert!(n.iter().all(|x| x.percent == 0.0));

        assert!(matches!(
            normalized_rms(&target, &[near]),
            Err(Error::InsufficientCandidates)
        ));
    }

    #[test]
    fn similarity_examples() {
        assert_eq!(similarity(0.0), 100.0);
        assert_relative_eq!(similarity(20.3), 79.7, epsilon = 1e-12);
        assert_eq!(similarity(150.0), -50.0);
    }

    #[test]
    fn store_round_trip_with_counts() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("authors.tsv");
        let records = vec![
            ProfileStoreRecord::from_counts(
                "Austen",
                counts([1, 7, 3, 0, 2, 9]),
                vec!["a.txt".into(), "b.txt".into()],
            ),
            ProfileStoreRecord::from_counts("Blake", counts([0, 0, 3, 1, 0, 1]), vec![]),
            ProfileStoreRecord {
                profile: StrategyProfile::new("Table", [0.1, 0.2, 99.7, 0.0, 0.0, 0.0]),
                counts: None,
                source_files: vec![],
            },
        ];
        store_save(&records, &path).unwrap();
        assert!(sidecar_path(&path).exists());
        assert_eq!(store_load(&path).unwrap(), records);
    }

    #[test]
    fn store_rejects_duplicates_and_bad_schema() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.tsv");
        let r = ProfileStoreRecord::from_counts("X", counts([1, 0, 0, 0, 0, 0]), vec![]);
        let err = store_save(&[r.clone(), r.clone()], &path).unwrap_err();
        assert_eq!(err.to_string(), "duplicate profile label: X");

        let five = "label\tpDash\tpSemi\tpAllit\tpAna\tpEpi\tpPara\nX\t1\t2\t3\t4\t90\n";
        let err = parse_profiles(five).unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");

        let dup = "label\tpDash\tpSemi\tpAllit\tpAna\tpEpi\tpPara\nX\t0\t0\t0\t0\t0\t100\nX\t0\t0\t0\t0\t0\t100\n";
        assert!(matches!(parse_profiles(dup), Err(Error::DuplicateLabel(_))));

        let bad_header = "name\tpDash\n";
        assert!(matches!(
            parse_profiles(bad_header),
            Err(Error::Malformed { line: 1, .. })
        ));

        let nan = "label\tpDash\tpSemi\tpAllit\tpAna\tpEpi\tpPara\nX\tfoo\t0\t0\t0\t0\t100\n";
        assert!(matches!(parse_profiles(nan), Err(Error::Malformed { line: 2, .. })));
    }

    #[test]
    fn sidecar_must_agree_with_profile() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.tsv");
        store_save(
            &[ProfileStoreRecord::from_counts("X", counts([1, 1, 0, 0, 0, 0]), vec![])],
            &path,
        )
        .unwrap();
        let sidecar = sidecar_path(&path);
        let text = std::fs::read_to_string(&sidecar).unwrap().replace("X\t1\t1", "X\t1\t2");
        std::fs::write(&sidecar, text).unwrap();
        assert!(matches!(store_load(&path), Err(Error::Malformed { line: 2, .. })));
    }

    #[test]
    fn append_refuses_existing_label() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.tsv");
        let r = ProfileStoreRecord::from_counts("X", counts([1, 0, 0, 0, 0, 0]), vec![]);
        store_append(&path, r.clone()).unwrap();
        assert!(matches!(store_append(&path, r), Err(Error::DuplicateLabel(_))));
        assert_eq!(store_load(&path).unwrap().len(), 1);
    }

    #[test]
    fn labels_are_validated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.tsv");
        let r = ProfileStoreRecord::from_counts("a\tb", counts([1, 0, 0, 0, 0, 0]), vec![]);
        assert!(matches!(store_save(&[r], &path), Err(Error::InvalidLabel(_))));
    }

    fn arb_counts() -> impl Strategy<Value = StrategyCounts> {
        prop::array::uniform6(0usize..50).prop_map(StrategyCounts::new)
    }

    fn arb_profile() -> impl Strategy<Value = StrategyProfile> {
        prop::array::uniform6(0.0f64..100.0).prop_map(|v| StrategyProfile::new("p", v))
    }

    proptest! {
        #[test]
        fn profile_sums_to_100(c in arb_counts()) {
            let p = to_profile("x", &c);
            if c.total() > 0 {
                prop_assert!((p.values.iter().sum::<f64>() - 100.0).abs() < 1e-9);
            } else {
                prop_assert!(p.is_degenerate());
            }
        }

        #[test]
        fn profile_is_scale_invariant(c in arb_counts(), k in 1usize..20) {
            let a = to_profile("x", &c);
            let b = to_profile("x", &c.scaled(k));
            for (x, y) in a.values.iter().zip(&b.values) {
                prop_assert!((x - y).abs() < 1e-9);
            }
        }

        #[test]
        fn rms_is_a_metric(a in arb_profile(), b in arb_profile(), c in arb_profile()) {
            prop_assert_eq!(rms(&a, &a), 0.0);
            prop_assert!(rms(&a, &b) >= 0.0);
            prop_assert!((rms(&a, &b) - rms(&b, &a)).abs() < 1e-12);
            prop_assert!(rms(&a, &c) <= rms(&a, &b) + rms(&b, &c) + 1e-9);
        }

        #[test]
        fn normalization_keeps_the_argmin(t in arb_profile(), cands in prop::collection::vec(arb_profile(), 2..8)) {
            let cands: Vec<_> = cands.into_iter().enumerate().map(|(i, p)| p.with_label(format!("c{i}"))).collect();
            let n = normalized_rms(&t, &cands).unwrap();
            let by_rms = n.iter().min_by(|a, b| a.rms.total_cmp(&b.rms)).unwrap();
            let by_pct = n.iter().min_by(|a, b| a.percent.total_cmp(&b.percent)).unwrap();
            prop_assert_eq!(by_rms.rms, by_pct.rms);
        }

        #[test]
        fn store_round_trip(values in prop::collection::vec(prop::array::uniform6(0.0f64..=100.0), 0..6)) {
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("p.tsv");
            let records: Vec<_> = values
                .into_iter()
                .enumerate()
                .map(|(i, v)| ProfileStoreRecord {
                    profile: StrategyProfile::new(format!("L{i}"), v),
                    counts: None,
                    source_files: vec![],
                })
                .collect();
            store_save(&records, &path).unwrap();
            prop_assert_eq!(store_load(&path).unwrap(), records);
        }
    }
}
