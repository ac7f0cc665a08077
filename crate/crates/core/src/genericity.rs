//! Seeded random sampling of normal forms, the middle-fifth window and the
//! σ₁-non-intrusiveness proxy, and the experiment harness tallying which
//! centralizer branch random braids take.

use crate::braid::{SimpleElement, StrandCount};
use crate::centralizer::{centralizer_generators, CaseTag};
use crate::conjugacy::{slide_to_circuit, DEFAULT_TRAJECTORY_CAP};
use crate::error::{Error, Result};
use crate::normal::NormalForm;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// Per-trial cap on rejected draws before giving up.
pub const DEFAULT_REDRAW_CAP: usize = 1000;

/// Parameters of the random normal-form sampler: elements with infimum `p`
/// and canonical length `l` in the braid group on `n` strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub n: StrandCount,
    pub l: usize,
    pub p: i64,
    pub seed: u64,
    pub trials: usize,
}

impl SampleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidSampleConfig("trials must be ≥ 1".into()));
        }
        if self.l < 1 {
            return Err(Error::InvalidSampleConfig(
                "target canonical length must be ≥ 1".into(),
            ));
        }
        Ok(())
    }
}

fn random_proper_simple(rng: &mut ChaCha8Rng, n: StrandCount) -> SimpleElement {
    let k = n.get();
    let mut table: Vec<usize> = (0..k).collect();
    loop {
        table.shuffle(rng);
        let s = SimpleElement::from_permutation(table.clone()).unwrap();
        if !s.is_identity() && !s.is_delta() {
            return s;
        }
    }
}

/// Draw the `trial`-th sample: uniform proper simple elements appended one
/// at a time behind `Δ^p`, normalizing after each; a draw that collapses
/// the canonical length or moves the infimum is rejected and redrawn
/// (rejecting whole words instead has exponentially small acceptance in
/// `l`). Deterministic in `(seed, trial)`.
pub fn sample_normal_form(cfg: &SampleConfig, trial: usize) -> Result<NormalForm> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    let mut x = NormalForm::delta_power(cfg.n, cfg.p);
    let mut redraws = 0;
    while x.canonical_length() < cfg.l {
        let t = random_proper_simple(&mut rng, cfg.n);
        let extended = x.multiply(&NormalForm::from_simple(&t))?;
        if extended.inf() == cfg.p && extended.canonical_length() == x.canonical_length() + 1 {
            x = extended;
        } else {
            redraws += 1;
            if redraws >= DEFAULT_REDRAW_CAP {
                return Err(Error::RedrawCapExceeded {
                    cap: DEFAULT_REDRAW_CAP,
                });
            }
        }
    }
    Ok(x)
}

/// The middle fifth of the factor sequence: factors with 1-based indices
/// `2⌈l/5⌉+1` through `l − 2⌈l/5⌉` (empty when that range is empty).
pub fn middle_fifth(x: &NormalForm) -> Vec<SimpleElement> {
    let l = x.canonical_length();
    let m = 2 * l.div_ceil(5);
    if 2 * m >= l {
        return Vec::new();
    }
    x.factors()[m..l - m].to_vec()
}

/// Statistical stand-in for σ₁-non-intrusiveness: the middle fifth contains
/// both the atom σ₁ and its right complement ∂(σ₁), and sliding to a
/// circuit reaches a rigid element through a conjugator of canonical length
/// at most `2⌈l/5⌉`.
pub fn sigma1_nonintrusive_proxy(x: &NormalForm) -> Result<bool> {
    let window = middle_fifth(x);
    if window.is_empty() {
        return Ok(false);
    }
    let sigma1 = SimpleElement::atom(x.n(), 1)?;
    let comp = sigma1.right_complement();
    if !window.contains(&sigma1) || !window.contains(&comp) {
        return Ok(false);
    }
    let slid = slide_to_circuit(x, DEFAULT_TRAJECTORY_CAP)?;
    let rep = &slid.representative;
    let budget = 2 * x.canonical_length().div_ceil(5);
    Ok(rep.canonical_length() > 0
        && rep.is_rigid()?
        && slid.conjugator.canonical_length() <= budget)
}

/// One row of the experiment report (one canonical length).
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ExperimentRow {
    pub n: usize,
    pub l: usize,
    pub trials: usize,
    /// Samples whose sliding-circuit representative is rigid.
    pub rigid: usize,
    /// Samples taking one of the three two-generator branches.
    pub minimal: usize,
    pub two_orbits: usize,
    pub tau_shift: usize,
    pub tau_fixed: usize,
    pub fallback: usize,
    /// Trials aborted by a cap diagnostic (excluded from the tallies).
    pub failures: usize,
    pub mean_ms: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ExperimentReport {
    pub seed: u64,
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    pub const CSV_HEADER: &'static str =
        "n,l,trials,rigid,minimal,two_orbits,tau_shift,tau_fixed,fallback,mean_ms";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{:.3}\n",
                r.n,
                r.l,
                r.trials,
                r.rigid,
                r.minimal,
                r.two_orbits,
                r.tau_shift,
                r.tau_fixed,
                r.fallback,
                r.mean_ms
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Run the full grid: for each length, sample `trials` braids, compute the
/// centralizer of each, and tally branch counts and wall time. Tallies are
/// deterministic for a fixed seed (timings are not).
pub fn run_experiment(
    n: StrandCount,
    lengths: &[usize],
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    let mut rows = Vec::with_capacity(lengths.len());
    for &l in lengths {
        let cfg = SampleConfig {
            n,
            l,
            p: 0,
            seed,
            trials,
        };
        cfg.validate()?;
        let mut row = ExperimentRow {
            n: n.get(),
            l,
            trials,
            rigid: 0,
            minimal: 0,
            two_orbits: 0,
            tau_shift: 0,
            tau_fixed: 0,
            fallback: 0,
            failures: 0,
            mean_ms: 0.0,
        };
        let mut total_ms = 0.0;
        let mut timed = 0usize;
        for trial in 0..trials {
            let x = match sample_normal_form(&cfg, trial) {
                Ok(x) => x,
                Err(_) => {
                    row.failures += 1;
                    continue;
                }
            };
            let start = Instant::now();
            let out = centralizer_generators(&x);
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            match out {
                Ok(out) => {
                    total_ms += elapsed;
                    timed += 1;
                    let rep = slide_to_circuit(&x, DEFAULT_TRAJECTORY_CAP)?.representative;
                    if rep.canonical_length() > 0 && rep.is_rigid()? {
                        row.rigid += 1;
                    }
                    match out.case_tag {
                        CaseTag::TwoOrbits => row.two_orbits += 1,
                        CaseTag::OneOrbitTauShift => row.tau_shift += 1,
                        CaseTag::OneOrbitTauFixed => row.tau_fixed += 1,
                        CaseTag::Fallback => row.fallback += 1,
                    }
                }
                Err(_) => row.failures += 1,
            }
        }
        row.minimal = row.two_orbits + row.tau_shift + row.tau_fixed;
        row.mean_ms = if timed > 0 {
            total_ms / timed as f64
        } else {
            0.0
        };
        rows.push(row);
    }
    Ok(ExperimentReport { seed, rows })
}
