//! Desk-scale decoder comparison on the AWGN channel: exhaustive ML
//! decoding against the LP decoder, the latter decided through the
//! minimal pseudo-codewords (the all-zero codeword is sent).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::code::CodeSummary;
use crate::rays::RaySet;
use crate::{Error, Result};

/// Log-likelihood ratios `log p(y|0)/p(y|1)`; positive values favor 0.
#[derive(Clone, Debug, PartialEq)]
pub struct LlrVector(Vec<f64>);

impl LlrVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("LLR {i} is not finite")));
        }
        Ok(LlrVector(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MlDecision {
    pub codeword: Vec<u8>,
    pub cost: f64,
    /// Another codeword has the same minimum cost.
    pub tied: bool,
}

/// Exhaustive ML decoding: minimizes `Σ x_i λ_i` over all codewords. Ties
/// go to the lexicographically smallest codeword.
pub fn ml_decode(llr: &LlrVector, code: &CodeSummary) -> Result<MlDecision> {
    if llr.len() != code.n {
        return Err(Error::LengthMismatch {
            expected: code.n,
            got: llr.len(),
        });
    }
    if code.is_empty() {
        return Err(Error::Precondition("codeword list is empty".into()));
    }
    let lam = llr.values();
    let mut best: Option<(usize, f64)> = None;
    let mut tied = false;
    for (i, c) in code.codeword_bits().iter().enumerate() {
        let cost: f64 = c.ones().map(|j| lam[j]).sum();
        match best {
            None => best = Some((i, cost)),
            Some((_, b)) if cost < b => {
                best = Some((i, cost));
                tied = false;
            }
            Some((_, b)) if cost == b => tied = true,
            _ => {}
        }
    }
    let (i, cost) = best.expect("nonempty codeword list");
    Ok(MlDecision {
        codeword: code.codeword_bits()[i].to_vec(),
        cost,
        tied,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LpOutcome {
    Correct,
    Tie,
    Error,
}

/// Minimum of `ω·λ` over the minimal pseudo-codewords.
pub fn lp_margin(llr: &LlrVector, rays: &RaySet) -> Result<f64> {
    if rays.is_empty() {
        return Err(Error::Precondition("empty ray set".into()));
    }
    if llr.len() != rays.dimension() {
        return Err(Error::LengthMismatch {
            expected: rays.dimension(),
            got: llr.len(),
        });
    }
    let lam = llr.values();
    Ok(rays
        .rays()
        .iter()
        .map(|r| r.canonical().iter().zip(lam).map(|(&w, l)| w as f64 * l).sum::<f64>())
        .fold(f64::INFINITY, f64::min))
}

/// Decides whether `λ` lies in the LP decision region of the all-zero
/// codeword: correct if every minimal pseudo-codeword has positive cost.
pub fn lp_zero_region_test(llr: &LlrVector, rays: &RaySet) -> Result<LpOutcome> {
    let m = lp_margin(llr, rays)?;
    Ok(if m > 0.0 {
        LpOutcome::Correct
    } else if m == 0.0 {
        LpOutcome::Tie
    } else {
        LpOutcome::Error
    })
}

/// Squared Euclidean distance from the all-ones point to the hyperplane
/// `{λ : ω·λ = 0}`, i.e. `(Σω)² / Σω²`.
pub fn squared_distance_to_hyperplane(w: &[f64]) -> f64 {
    let dot: f64 = w.iter().sum();
    let norm2: f64 = w.iter().map(|x| x * x).sum();
    dot * dot / norm2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decoders {
    Ml,
    Lp,
    Both,
}

impl Decoders {
    fn ml(self) -> bool {
        matches!(self, Decoders::Ml | Decoders::Both)
    }

    fn lp(self) -> bool {
        matches!(self, Decoders::Lp | Decoders::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimReport {
    pub snr_db: f64,
    pub trials: u64,
    pub seed: u64,
    pub ml_errors: Option<u64>,
    pub lp_errors: Option<u64>,
    pub ml_fer: Option<f64>,
    pub lp_fer: Option<f64>,
    pub ml_ties: Option<u64>,
    pub lp_ties: Option<u64>,
}

/// Noise standard deviation of BPSK at `Eb/N0 = snr_db` for code rate `k/n`.
pub fn noise_sigma(snr_db: f64, k: usize, n: usize) -> f64 {
    let rate = k as f64 / n as f64;
    let ebn0 = 10f64.powf(snr_db / 10.0);
    (1.0 / (2.0 * rate * ebn0)).sqrt()
}

/// LLRs of trial `trial`: the all-zero codeword sent as +1, plus Gaussian
/// noise drawn from stream `trial` of a ChaCha generator keyed by `seed`.
pub fn sample_llr(n: usize, sigma: f64, seed: u64, trial: u64) -> LlrVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let scale = 2.0 / (sigma * sigma);
    let v = (0..n)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            scale * (1.0 + sigma * z)
        })
        .collect();
    LlrVector(v)
}

#[derive(Default)]
struct Tally {
    ml_errors: u64,
    lp_errors: u64,
    ml_ties: u64,
    lp_ties: u64,
}

/// Monte-Carlo frame error rates of ML and LP decoding. Ties count as
/// errors. The report depends only on the arguments, not on scheduling.
pub fn awgn_simulate(
    code: &CodeSummary,
    rays: &RaySet,
    snr_db: f64,
    trials: u64,
    seed: u64,
    decoders: Decoders,
) -> Result<SimReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    if !snr_db.is_finite() {
        return Err(Error::InvalidArgument("SNR must be finite".into()));
    }
    if code.k == 0 {
        return Err(Error::Precondition("the code has rate zero".into()));
    }
    if decoders.lp() && rays.is_empty() {
        return Err(Error::Precondition("empty ray set".into()));
    }
    let n = code.n;
    let sigma = noise_sigma(snr_db, code.k, n);
    let tally = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<Tally> {
            let llr = sample_llr(n, sigma, seed, t);
            let mut out = Tally::default();
            if decoders.ml() {
                let d = ml_decode(&llr, code)?;
                if d.tied {
                    out.ml_ties += 1;
                }
                if d.tied || d.codeword.iter().any(|&b| b != 0) {
                    out.ml_errors += 1;
                }
            }
            if decoders.lp() {
                match lp_zero_region_test(&llr, rays)? {
                    LpOutcome::Correct => {}
                    LpOutcome::Tie => {
                        out.lp_ties += 1;
                        out.lp_errors += 1;
                    }
                    LpOutcome::Error => out.lp_errors += 1,
                }
            }
            Ok(out)
        })
        .try_reduce(Tally::default, |a, b| {
            Ok(Tally {
                ml_errors: a.ml_errors + b.ml_errors,
                lp_errors: a.lp_errors + b.lp_errors,
                ml_ties: a.ml_ties + b.ml_ties,
                lp_ties: a.lp_ties + b.lp_ties,
            })
        })?;
    let rate = |e: u64| e as f64 / trials as f64;
    let (ml, lp) = (decoders.ml(), decoders.lp());
    Ok(SimReport {
        snr_db,
        trials,
        seed,
        ml_errors: ml.then_some(tally.ml_errors),
        lp_errors: lp.then_some(tally.lp_errors),
        ml_fer: ml.then(|| rate(tally.ml_errors)),
        lp_fer: lp.then(|| rate(tally.lp_errors)),
        ml_ties: ml.then_some(tally.ml_ties),
        lp_ties: lp.then_some(tally.lp_ties),
    })
}
