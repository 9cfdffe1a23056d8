use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sensitivity_core::graph::{class_table, ClassSetFile, ClassTable, MAX_CLASS_VERTICES};
use sensitivity_core::hypercube::max_sensitivity;

use crate::error::{LabError, Result};
use crate::SCHEMA;

/// Largest `n` for the exhaustive sweep: `2^11 − 2` properties at `n = 4`.
pub const EXHAUSTIVE_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl std::str::FromStr for Mode {
    type Err = LabError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sample" => Ok(Mode::Sample),
            other => Err(LabError::Usage(format!("unknown mode {other:?}; use exhaustive or sample"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    pub count: u64,
    /// Worker threads; 0 lets the runtime choose.
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Holds,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub bound: u32,
    /// Asserted bounds are proved for every `n`; a violation is an error.
    pub asserted: bool,
    pub status: BoundStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ClassSetFile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub n: usize,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub examined: u64,
    pub min_sensitivity: u32,
    pub min_property: ClassSetFile,
    /// Sensitivity value to number of properties.
    pub histogram: BTreeMap<u32, u64>,
    pub bounds: Vec<BoundCheck>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn asserted_violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bounds
            .iter()
            .filter(|b| b.asserted && b.status == BoundStatus::Violated)
    }

    /// The report without its timing, for comparing runs.
    pub fn stable_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        serde_json::to_string(&copy).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n = {}, mode = {:?}", self.n, self.mode).to_lowercase());
        if let Some(seed) = self.seed {
            out.push_str(&format!(", seed = {seed}"));
        }
        out.push_str(&format!("\nexamined {} properties in {} ms\n", self.examined, self.wall_time_ms));
        out.push_str(&format!("minimum s(f) = {}, attained by {}\n", self.min_sensitivity, self.min_property.to_json()));
        out.push_str("\n  s(f)  properties\n");
        for (s, count) in &self.histogram {
            out.push_str(&format!("  {s:>4}  {count:>10}\n"));
        }
        out.push_str("\n  bound              value  kind      status\n");
        for b in &self.bounds {
            let kind = if b.asserted { "asserted" } else { "observed" };
            let status = match b.status {
                BoundStatus::Holds => "holds",
                BoundStatus::Violated => "violated",
            };
            out.push_str(&format!("  {:<18} {:>5}  {kind:<8}  {status}\n", b.name, b.bound));
        }
        out
    }
}

/// Class subsets as bit vectors over the class list.
type Subset = Vec<u64>;

fn subset_words(classes: usize) -> usize {
    classes.div_ceil(64)
}

fn is_proper_nonempty(set: &Subset, classes: usize) -> bool {
    let ones: u32 = set.iter().map(|w| w.count_ones()).sum();
    ones != 0 && ones as usize != classes
}

fn exhaustive_subsets(classes: usize) -> Vec<Subset> {
    // classes ≤ 11 here, so a subset fits one word
    (1..(1u64 << classes) - 1).map(|bits| vec![bits]).collect()
}

/// Uniform non-empty proper class subsets, drawn in order from one stream.
pub fn sample_subsets(classes: usize, seed: u64, count: u64) -> Vec<Subset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = subset_words(classes);
    let tail = classes % 64;
    let mut out = Vec::with_capacity(count as usize);
    while (out.len() as u64) < count {
        let mut set: Subset = (0..words).map(|_| rng.gen::<u64>()).collect();
        if tail != 0 {
            set[words - 1] &= (1u64 << tail) - 1;
        }
        if is_proper_nonempty(&set, classes) {
            out.push(set);
        }
    }
    out
}

fn selected(set: &Subset, classes: usize) -> Vec<bool> {
    (0..classes).map(|i| (set[i / 64] >> (i % 64)) & 1 == 1).collect()
}

fn sensitivity_of(table: &ClassTable, set: &Subset) -> Result<u32> {
    let f = table.property(&selected(set, table.classes().len()))?;
    Ok(max_sensitivity(&f)?.value)
}

fn class_set_file(table: &ClassTable, set: &Subset) -> ClassSetFile {
    let sigs: Vec<_> = selected(set, table.classes().len())
        .into_iter()
        .zip(table.classes())
        .filter(|(on, _)| *on)
        .map(|(_, c)| c.signature)
        .collect();
    ClassSetFile::new(table.n(), &sigs)
}

#[cfg(feature = "parallel")]
fn sensitivities(table: &ClassTable, subsets: &[Subset], jobs: usize) -> Result<Vec<u32>> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| LabError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| subsets.par_iter().map(|s| sensitivity_of(table, s)).collect())
}

#[cfg(not(feature = "parallel"))]
fn sensitivities(table: &ClassTable, subsets: &[Subset], _jobs: usize) -> Result<Vec<u32>> {
    subsets.iter().map(|s| sensitivity_of(table, s)).collect()
}

/// Computes `s(f)` by a full scan for every examined property and checks the
/// known lower bounds against the minimum.
pub fn verify(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    if cfg.n == 0 || cfg.n > MAX_CLASS_VERTICES {
        return Err(LabError::Usage(format!("n must be in 1..={MAX_CLASS_VERTICES}")));
    }
    let table = class_table(cfg.n)?;
    let classes = table.classes().len();
    let subsets = match cfg.mode {
        Mode::Exhaustive => {
            if cfg.n > EXHAUSTIVE_LIMIT {
                return Err(LabError::Usage(format!(
                    "exhaustive mode needs n ≤ {EXHAUSTIVE_LIMIT}; use --mode sample"
                )));
            }
            exhaustive_subsets(classes)
        }
        Mode::Sample => sample_subsets(classes, cfg.seed, cfg.count),
    };
    if subsets.is_empty() {
        return Err(LabError::Usage(format!("n = {} has no non-trivial graph properties", cfg.n)));
    }
    let values = sensitivities(table, &subsets, cfg.jobs)?;

    let mut histogram = BTreeMap::new();
    for &s in &values {
        *histogram.entry(s).or_insert(0u64) += 1;
    }
    // first property in enumeration order among the minimizers
    let (min_index, &min_s) = values
        .iter()
        .enumerate()
        .min_by_key(|&(i, &s)| (s, i))
        .expect("non-empty");
    let min_property = class_set_file(table, &subsets[min_index]);

    let n = cfg.n as u32;
    let bound = |name, bound: u32, asserted| BoundCheck {
        name,
        bound,
        asserted,
        status: if min_s >= bound { BoundStatus::Holds } else { BoundStatus::Violated },
        witness: (min_s < bound).then(|| min_property.clone()),
    };
    let bounds = vec![
        bound("quarter-n", n / 4, true),
        bound("half-n", n / 2, false),
        bound("n-minus-1", n.saturating_sub(1), false),
    ];

    Ok(VerificationReport {
        schema: SCHEMA,
        n: cfg.n,
        mode: cfg.mode,
        seed: (cfg.mode == Mode::Sample).then_some(cfg.seed),
        examined: values.len() as u64,
        min_sensitivity: min_s,
        min_property,
        histogram,
        bounds,
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}
