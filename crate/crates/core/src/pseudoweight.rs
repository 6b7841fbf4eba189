//! AWGNC pseudo-weights, the pseudo-weight spectrum and its gap, and
//! certificates for the bounds on minimal pseudo-codewords of PG(2, q)
//! codes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::code::CodeSummary;
use crate::cone::{ConeSystem, RayVector};
use crate::matrix::BinaryMatrix;
use crate::rays::RaySet;
use crate::scalar::Scalar;
use crate::{fraction, Error, Rational, RayInt, Result};

/// `(Σ w_i)² / Σ w_i²`.
pub fn pseudo_weight<T: Scalar>(w: &[T]) -> Result<T> {
    if let Some(i) = w.iter().position(Signed::is_negative) {
        return Err(Error::NegativeEntry(i));
    }
    let mut sum = T::zero();
    let mut sq = T::zero();
    for x in w {
        sum = sum + x.clone();
        sq = sq + x.clone() * x.clone();
    }
    if sq.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(sum.clone() * sum / sq)
}

/// Exact pseudo-weight of an integer vector.
pub fn pseudo_weight_int(w: &[RayInt]) -> Result<Rational> {
    if let Some(i) = w.iter().position(|&x| x < 0) {
        return Err(Error::NegativeEntry(i));
    }
    let sum: BigInt = w.iter().map(|&x| BigInt::from(x)).sum();
    let sq: BigInt = w.iter().map(|&x| BigInt::from(x) * x).sum();
    if sq.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(Rational::new(&sum * &sum, sq))
}

pub fn ray_pseudo_weight(r: &RayVector) -> Rational {
    pseudo_weight_int(r.canonical()).expect("rays are nonzero and nonnegative")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub representative: Vec<RayInt>,
    #[serde(serialize_with = "fraction::serialize")]
    pub pseudo_weight: Rational,
    pub is_codeword_multiple: bool,
    pub orbit_size: usize,
}

/// Pseudo-weights of one representative per orbit class, sorted by weight
/// and then by representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub entries: Vec<SpectrumEntry>,
    pub d_min: usize,
    #[serde(serialize_with = "fraction::serialize")]
    pub w_p_min: Rational,
    /// Minimum over non-codeword classes minus `d_min`; `None` when every
    /// class is a codeword multiple.
    #[serde(serialize_with = "fraction::serialize_option")]
    pub gap: Option<Rational>,
}

impl SpectrumReport {
    fn non_codeword(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.is_codeword_multiple)
    }

    pub fn min_non_codeword_weight(&self) -> Option<Rational> {
        self.non_codeword().map(|e| e.pseudo_weight.clone()).min()
    }

    pub fn max_non_codeword_weight(&self) -> Option<Rational> {
        self.non_codeword().map(|e| e.pseudo_weight.clone()).max()
    }

    /// Total number of rays across all classes.
    pub fn ray_count(&self) -> usize {
        self.entries.iter().map(|e| e.orbit_size).sum()
    }
}

pub fn spectrum(rays: &RaySet, code: &CodeSummary) -> Result<SpectrumReport> {
    if rays.is_empty() {
        return Err(Error::Precondition("empty ray set".into()));
    }
    let d_min = code
        .d_min
        .ok_or_else(|| Error::Precondition("the code has no nonzero codeword".into()))?;
    let mut entries: Vec<SpectrumEntry> = rays
        .orbit_reps()
        .zip(rays.orbit_sizes())
        .map(|(r, orbit_size)| SpectrumEntry {
            representative: r.canonical().to_vec(),
            pseudo_weight: ray_pseudo_weight(r),
            is_codeword_multiple: r.is_codeword_multiple(),
            orbit_size,
        })
        .collect();
    entries.sort_by(|a, b| {
        a.pseudo_weight
            .cmp(&b.pseudo_weight)
            .then_with(|| a.representative.cmp(&b.representative))
    });
    let w_p_min = entries[0].pseudo_weight.clone();
    let mut report = SpectrumReport {
        entries,
        d_min,
        w_p_min,
        gap: None,
    };
    report.gap = report
        .min_non_codeword_weight()
        .map(|w| w - Rational::from_integer(d_min.into()));
    Ok(report)
}

/// Parameters a bound depends on; absent ones are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundParameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub support: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub big_m: Option<i64>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "fraction::serialize_option"
    )]
    pub r: Option<Rational>,
}

/// Outcome of checking a bound on a set of witnesses. Passes iff there
/// are no violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub bound_name: String,
    pub parameters: BoundParameters,
    #[serde(serialize_with = "fraction::serialize")]
    pub bound_value: Rational,
    pub witnesses: Vec<Vec<RayInt>>,
    pub violations: Vec<String>,
}

impl BoundCertificate {
    fn new(name: &str, parameters: BoundParameters, bound_value: Rational) -> Self {
        BoundCertificate {
            bound_name: name.into(),
            parameters,
            bound_value,
            witnesses: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    /// Merges per-ray certificates of one bound into a single certificate.
    /// The bound value is kept from the first part; per-ray values that
    /// differ live in the violation messages.
    pub fn combine(name: &str, q: Option<u64>, parts: Vec<BoundCertificate>) -> BoundCertificate {
        let bound_value = parts
            .first()
            .map(|c| c.bound_value.clone())
            .unwrap_or_else(Rational::zero);
        let mut out = BoundCertificate::new(
            name,
            BoundParameters {
                q,
                ..BoundParameters::default()
            },
            bound_value,
        );
        for p in parts {
            out.witnesses.extend(p.witnesses);
            out.violations.extend(p.violations);
        }
        out
    }
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn require_member(cone: &ConeSystem, w: &[RayInt]) -> Result<()> {
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    if !cone.is_pseudocodeword(w)? {
        return Err(Error::NotInCone(format!("{w:?}")));
    }
    Ok(())
}

/// `Σ_i ω_i ≥ (q+2) ω_l` for every coordinate `l`.
pub fn check_sum_bound(cone: &ConeSystem, w: &[RayInt], q: u64) -> Result<BoundCertificate> {
    require_member(cone, w)?;
    let total: i128 = w.iter().map(|&x| x as i128).sum();
    let max = w.iter().copied().max().unwrap_or(0);
    let factor = q as i128 + 2;
    let mut cert = BoundCertificate::new(
        "sum_bound",
        BoundParameters {
            q: Some(q),
            ..BoundParameters::default()
        },
        int(factor * max as i128),
    );
    cert.witnesses.push(w.to_vec());
    for (l, &x) in w.iter().enumerate() {
        if total < factor * x as i128 {
            cert.violations.push(format!(
                "{w:?}: sum {total} < {factor}*w[{l}] = {}",
                factor * x as i128
            ));
        }
    }
    Ok(cert)
}

/// `q + 2 ≤ w_p(ω) ≤ |supp(ω)|`.
pub fn check_weight_window(cone: &ConeSystem, w: &[RayInt], q: u64) -> Result<BoundCertificate> {
    require_member(cone, w)?;
    let wp = pseudo_weight_int(w)?;
    let supp = w.iter().filter(|&&x| x != 0).count();
    let lower = int(q + 2);
    let mut cert = BoundCertificate::new(
        "weight_window",
        BoundParameters {
            q: Some(q),
            support: Some(supp),
            ..BoundParameters::default()
        },
        lower.clone(),
    );
    cert.witnesses.push(w.to_vec());
    if wp < lower {
        cert.violations.push(format!(
            "{w:?}: w_p = {} < q+2 = {}",
            fraction::fraction_string(&wp),
            q + 2
        ));
    }
    if wp > int(supp as u64) {
        cert.violations.push(format!(
            "{w:?}: w_p = {} > |supp| = {supp}",
            fraction::fraction_string(&wp)
        ));
    }
    Ok(cert)
}

fn check_two_value_args(n: usize, m: i64, big_m: i64) -> Result<()> {
    if m <= 0 {
        return Err(Error::InvalidArgument(format!("m must be positive, got {m}")));
    }
    if big_m < m {
        return Err(Error::InvalidArgument(format!("need m <= M, got m={m}, M={big_m}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(())
}

/// Lower bound `N · 4mM/(m+M)²` on the pseudo-weight of a vector with `N`
/// nonzero entries, all in `[m, M]`.
pub fn two_value_lower_bound(n: usize, m: i64, big_m: i64) -> Result<Rational> {
    check_two_value_args(n, m, big_m)?;
    Ok(int(n as u64) * table_coefficient(m, big_m))
}

/// Whether the two-value bound is met with equality: the optimal counts
/// `N·M/(m+M)` of entries `m` and `N·m/(m+M)` of entries `M` must be
/// integers.
pub fn equality_attainable(n: usize, m: i64, big_m: i64) -> Result<bool> {
    check_two_value_args(n, m, big_m)?;
    if m == big_m {
        return Ok(true);
    }
    Ok((n as i64 * big_m) % (m + big_m) == 0)
}

fn table_coefficient(m: i64, big_m: i64) -> Rational {
    Rational::new(int(4 * m * big_m).to_integer(), int((m + big_m) * (m + big_m)).to_integer())
}

/// Coefficients of `N` in the two-value bound for `M = m, ..., M_max`.
pub fn bound_table(m: i64, big_m_max: i64) -> Result<Vec<(i64, Rational)>> {
    check_two_value_args(1, m, big_m_max)?;
    Ok((m..=big_m_max).map(|bm| (bm, table_coefficient(m, bm))).collect())
}

pub const BRUTE_FORCE_MAX_N: usize = 8;
pub const BRUTE_FORCE_MAX_M: i64 = 6;

/// Exhaustive minimum of the pseudo-weight over vectors of `N` entries in
/// `[m, M]` containing both `m` and `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceMinimum {
    pub weight: Rational,
    /// Every minimizer, as a nondecreasing sequence (the weight is
    /// invariant under permutation), sorted.
    pub minimizers: Vec<Vec<i64>>,
}

impl BruteForceMinimum {
    pub fn witness(&self) -> &[i64] {
        &self.minimizers[0]
    }
}

/// Returns `None` when no vector qualifies (`N = 1` with `m < M`).
pub fn brute_force_min_weight(n: usize, m: i64, big_m: i64) -> Result<Option<BruteForceMinimum>> {
    check_two_value_args(n, m, big_m)?;
    if n > BRUTE_FORCE_MAX_N || big_m > BRUTE_FORCE_MAX_M {
        let size = ((big_m - m + 2) as u128).saturating_pow(n as u32);
        return Err(Error::SearchSpaceTooLarge { size });
    }
    if n == 1 && m < big_m {
        return Ok(None);
    }
    let mut best: Option<(i128, i128)> = None;
    let mut minimizers: Vec<Vec<i64>> = Vec::new();
    let mut v = vec![m; n];
    loop {
        if v[0] == m && v[n - 1] == big_m {
            let s: i128 = v.iter().map(|&x| x as i128).sum();
            let q: i128 = v.iter().map(|&x| (x * x) as i128).sum();
            let (num, den) = (s * s, q);
            let ord = best.map_or(Ordering::Less, |(bn, bd)| (num * bd).cmp(&(bn * den)));
            match ord {
                Ordering::Less => {
                    best = Some((num, den));
                    minimizers.clear();
                    minimizers.push(v.clone());
                }
                Ordering::Equal => minimizers.push(v.clone()),
                Ordering::Greater => {}
            }
        }
        // Next nondecreasing sequence.
        let Some(i) = (0..n).rev().find(|&i| v[i] < big_m) else {
            break;
        };
        let next = v[i] + 1;
        v[i..].iter_mut().for_each(|x| *x = next);
    }
    let (num, den) = best.expect("the sequence (m, ..., M) is always visited");
    Ok(Some(BruteForceMinimum {
        weight: Rational::new(num.into(), den.into()),
        minimizers,
    }))
}

/// Zeroing a minimum entry (after scaling it to 1) strictly lowers the
/// pseudo-weight. Returns whether that holds for `x`.
pub fn check_zero_component_lemma(x: &[Rational]) -> Result<bool> {
    if let Some(i) = x.iter().position(Signed::is_negative) {
        return Err(Error::NegativeEntry(i));
    }
    let positive: Vec<usize> = (0..x.len()).filter(|&i| x[i].is_positive()).collect();
    if positive.len() < 2 {
        return Err(Error::Precondition(
            "need at least two positive entries".into(),
        ));
    }
    let (&at, min) = positive
        .iter()
        .map(|i| (i, &x[*i]))
        .min_by(|a, b| a.1.cmp(b.1))
        .expect("nonempty");
    let scaled: Vec<Rational> = x.iter().map(|v| v / min).collect();
    let mut reduced = scaled.clone();
    reduced[at] = Rational::zero();
    Ok(pseudo_weight(&reduced)? < pseudo_weight(&scaled)?)
}

/// Sweeps the two-value bound against the exhaustive oracle for all
/// `1 <= N <= max_n`, `1 <= m <= M <= max_big_m`: the oracle never beats the
/// bound, meets it exactly when the optimal counts are integers, and every
/// minimizer takes only the values `m` and `M`.
pub fn certify_two_value_bound(max_n: usize, max_big_m: i64) -> Result<BoundCertificate> {
    let mut cert = BoundCertificate::new(
        "two_value",
        BoundParameters {
            support: Some(max_n),
            big_m: Some(max_big_m),
            ..BoundParameters::default()
        },
        Rational::zero(),
    );
    for n in 1..=max_n {
        for m in 1..=max_big_m {
            for big_m in m..=max_big_m {
                let bound = two_value_lower_bound(n, m, big_m)?;
                let Some(oracle) = brute_force_min_weight(n, m, big_m)? else {
                    continue;
                };
                let tag = format!("N={n} m={m} M={big_m}");
                if oracle.weight < bound {
                    cert.violations.push(format!("{tag}: oracle below the bound"));
                }
                let equal = oracle.weight == bound;
                if equal != equality_attainable(n, m, big_m)? {
                    cert.violations.push(format!(
                        "{tag}: equality is {equal} but integrality predicts the opposite"
                    ));
                }
                for v in &oracle.minimizers {
                    if v.iter().any(|&x| x != m && x != big_m) {
                        cert.violations.push(format!("{tag}: minimizer {v:?} has a middle value"));
                    }
                }
                cert.witnesses.extend(oracle.minimizers);
            }
        }
    }
    Ok(cert)
}

/// Checks the zero-component lemma on `trials` random positive integer
/// vectors of length 2 to 12 with entries in 1..=20.
pub fn certify_zero_component(trials: u64, seed: u64) -> Result<BoundCertificate> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut cert = BoundCertificate::new("zero_component", BoundParameters::default(), Rational::zero());
    for _ in 0..trials {
        let len = rng.random_range(2..=12);
        let v: Vec<RayInt> = (0..len).map(|_| rng.random_range(1..=20)).collect();
        let x: Vec<Rational> = v.iter().map(|&a| int(a)).collect();
        if !check_zero_component_lemma(&x)? {
            cert.violations.push(format!("{v:?}"));
            cert.witnesses.push(v);
        }
    }
    Ok(cert)
}

/// Support and pseudo-weight bounds for rays with entries in {0, 1, 2}:
/// `|supp| ≥ (3/2)(q+2)` and `w_p ≥ (4/3)(q+2)`.
pub fn check_012_bounds(ray: &RayVector, h: &BinaryMatrix, q: u64) -> Result<BoundCertificate> {
    let w = ray.canonical();
    let mut unmet = Vec::new();
    if w.iter().any(|&x| !(0..=2).contains(&x)) {
        unmet.push("entries are not all in {0, 1, 2}");
    }
    if !w.contains(&2) {
        unmet.push("no entry equals 2");
    }
    let parity: Vec<u8> = w.iter().map(|&x| (x & 1) as u8).collect();
    if parity.iter().all(|&b| b == 0) {
        unmet.push("reduction mod 2 is zero");
    } else if !h.is_codeword(&parity)? {
        unmet.push("reduction mod 2 is not a codeword");
    }
    if !unmet.is_empty() {
        return Err(Error::Precondition(format!("{w:?}: {}", unmet.join("; "))));
    }
    let supp = ray.support_size();
    let wp = ray_pseudo_weight(ray);
    let support_bound = Rational::new(int(3 * (q + 2)).to_integer(), BigInt::from(2));
    let weight_bound = Rational::new(int(4 * (q + 2)).to_integer(), BigInt::from(3));
    let mut cert = BoundCertificate::new(
        "zero_one_two",
        BoundParameters {
            q: Some(q),
            support: Some(supp),
            ..BoundParameters::default()
        },
        weight_bound.clone(),
    );
    cert.witnesses.push(w.to_vec());
    if int(supp as u64) < support_bound {
        cert.violations.push(format!(
            "{w:?}: |supp| = {supp} < {}",
            fraction::fraction_string(&support_bound)
        ));
    }
    if wp < weight_bound {
        cert.violations.push(format!(
            "{w:?}: w_p = {} < {}",
            fraction::fraction_string(&wp),
            fraction::fraction_string(&weight_bound)
        ));
    }
    Ok(cert)
}

/// Whether a ray satisfies the preconditions of [`check_012_bounds`].
pub fn is_012_candidate(ray: &RayVector, h: &BinaryMatrix) -> bool {
    let w = ray.canonical();
    let parity: Vec<u8> = w.iter().map(|&x| (x & 1) as u8).collect();
    w.iter().all(|&x| (0..=2).contains(&x))
        && w.contains(&2)
        && parity.contains(&1)
        && h.is_codeword(&parity).unwrap_or(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Consistent,
    Counterexample,
    /// No non-codeword class to test.
    Vacuous,
}

/// Evidence gathered for a conjecture; never a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub evidence: Evidence,
    #[serde(serialize_with = "fraction::serialize_option")]
    pub observed: Option<Rational>,
    #[serde(serialize_with = "fraction::serialize_option")]
    pub bound: Option<Rational>,
    /// Representatives attaining the observed value, or counterexamples.
    pub witnesses: Vec<Vec<RayInt>>,
}

/// Is the minimum non-codeword pseudo-weight attained by a ray with
/// entries in {0, 1, 2}?
pub fn check_conjecture_min_012(report: &SpectrumReport) -> ConjectureReport {
    let conjecture = "min_non_codeword_weight_attained_by_012_ray".to_string();
    let Some(min) = report.min_non_codeword_weight() else {
        return ConjectureReport {
            conjecture,
            evidence: Evidence::Vacuous,
            observed: None,
            bound: None,
            witnesses: Vec::new(),
        };
    };
    let attaining: Vec<&SpectrumEntry> = report
        .entries
        .iter()
        .filter(|e| !e.is_codeword_multiple && e.pseudo_weight == min)
        .collect();
    let good: Vec<Vec<RayInt>> = attaining
        .iter()
        .filter(|e| e.representative.iter().all(|&x| (0..=2).contains(&x)))
        .map(|e| e.representative.clone())
        .collect();
    let (evidence, witnesses) = if good.is_empty() {
        (
            Evidence::Counterexample,
            attaining.iter().map(|e| e.representative.clone()).collect(),
        )
    } else {
        (Evidence::Consistent, good)
    };
    ConjectureReport {
        conjecture,
        evidence,
        observed: Some(min),
        bound: None,
        witnesses,
    }
}

/// Runs every per-ray bound over a complete ray set.
pub fn certify_ray_set(cone: &ConeSystem, rays: &RaySet, q: u64) -> Result<Vec<BoundCertificate>> {
    let mut sum = Vec::new();
    let mut window = Vec::new();
    let mut zot = Vec::new();
    for r in rays.rays() {
        sum.push(check_sum_bound(cone, r.canonical(), q)?);
        window.push(check_weight_window(cone, r.canonical(), q)?);
        if !r.is_codeword_multiple() && is_012_candidate(r, cone.matrix()) {
            zot.push(check_012_bounds(r, cone.matrix(), q)?);
        }
    }
    let mut floor = BoundCertificate::new(
        "weight_floor",
        BoundParameters {
            q: Some(q),
            ..BoundParameters::default()
        },
        int(q + 2),
    );
    let min = rays.rays().iter().map(ray_pseudo_weight).min();
    match min {
        Some(w) if w == int(q + 2) => floor.witnesses.extend(
            rays.rays()
                .iter()
                .filter(|r| ray_pseudo_weight(r) == w)
                .map(|r| r.canonical().to_vec()),
        ),
        Some(w) => floor.violations.push(format!(
            "minimum pseudo-weight {} differs from q+2 = {}",
            fraction::fraction_string(&w),
            q + 2
        )),
        None => floor.violations.push("empty ray set".into()),
    }
    Ok(vec![
        BoundCertificate::combine("sum_bound", Some(q), sum),
        BoundCertificate::combine("weight_window", Some(q), window),
        floor,
        BoundCertificate::combine("zero_one_two", Some(q), zot),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::analyze_code;
    use crate::geometry::pg_parity_check;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn known_pseudo_weights() {
        assert_eq!(pseudo_weight_int(&[2, 2, 1, 2, 1, 1, 1]).unwrap(), q(25, 4));
        assert_eq!(pseudo_weight_int(&[0, 0, 1, 0, 1, 1, 1]).unwrap(), q(4, 1));
        assert_eq!(pseudo_weight_int(&[6, 6, 3, 6, 3, 3, 3]).unwrap(), q(25, 4));
        assert_eq!(pseudo_weight_int(&[0, 0]), Err(Error::ZeroVector));
        let f = pseudo_weight(&[2.0f64, 2.0, 1.0, 2.0, 1.0, 1.0, 1.0]).unwrap();
        assert!((f - 6.25).abs() < 1e-12);
    }

    #[test]
    fn table_rows() {
        let t = bound_table(1, 15).unwrap();
        assert_eq!(t.len(), 15);
        assert_eq!(t[0], (1, q(1, 1)));
        assert_eq!(t[1], (2, q(8, 9)));
        assert_eq!(t[6], (7, q(7, 16)));
        assert_eq!(t[11], (12, q(48, 169)));
        assert_eq!(t[14], (15, q(15, 64)));
    }

    #[test]
    fn two_value_arguments() {
        assert!(two_value_lower_bound(3, 0, 2).is_err());
        assert!(two_value_lower_bound(3, 3, 2).is_err());
        assert_eq!(two_value_lower_bound(5, 2, 2).unwrap(), q(5, 1));
        assert!(equality_attainable(3, 1, 2).unwrap());
        assert!(!equality_attainable(4, 1, 2).unwrap());
    }

    #[test]
    fn brute_force_small_cases() {
        let r = brute_force_min_weight(3, 1, 2).unwrap().unwrap();
        assert_eq!(r.weight, q(8, 3));
        assert_eq!(r.minimizers, vec![vec![1, 1, 2]]);
        assert_eq!(brute_force_min_weight(4, 1, 1).unwrap().unwrap().weight, q(4, 1));
        assert_eq!(brute_force_min_weight(1, 1, 2).unwrap(), None);
        assert!(matches!(
            brute_force_min_weight(9, 1, 2),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(certify_two_value_bound(5, 3).unwrap().passes());
        assert!(certify_zero_component(200, 1).unwrap().passes());
    }

    #[test]
    fn zero_component() {
        assert!(check_zero_component_lemma(&[q(1, 1), q(1, 1)]).unwrap());
        let v: Vec<Rational> = [2, 2, 1, 2, 1, 1, 1].iter().map(|&x| q(x, 1)).collect();
        assert!(check_zero_component_lemma(&v).unwrap());
        assert!(check_zero_component_lemma(&[q(1, 1), q(0, 1)]).is_err());
    }

    #[test]
    fn fano_bounds() {
        let h = pg_parity_check(1).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        let w = [2, 2, 1, 2, 1, 1, 1];
        let c = check_sum_bound(&cone, &w, 2).unwrap();
        assert!(c.passes());
        assert_eq!(c.bound_value, q(8, 1));
        assert!(check_weight_window(&cone, &w, 2).unwrap().passes());
        assert!(matches!(
            check_sum_bound(&cone, &[1, 0, 0, 0, 0, 0, 0], 2),
            Err(Error::NotInCone(_))
        ));
        let ray = RayVector::from_integers(&w, &h).unwrap();
        assert!(check_012_bounds(&ray, &h, 2).unwrap().passes());
        let even = RayVector::from_integers(&[2, 2, 0, 2, 0, 0, 0], &h).unwrap();
        assert!(matches!(check_012_bounds(&even, &h, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn fano_spectrum() {
        let h = pg_parity_check(1).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        let rays = crate::rays::enumerate_rays(&cone, true).unwrap();
        let code = analyze_code(&h).unwrap();
        let s = spectrum(&rays, &code).unwrap();
        assert_eq!(s.entries.len(), 2);
        assert_eq!(s.gap, Some(q(9, 4)));
        assert_eq!(s.w_p_min, q(4, 1));
        assert_eq!(s.ray_count(), 14);
        let c = check_conjecture_min_012(&s);
        assert_eq!(c.evidence, Evidence::Consistent);
        for cert in certify_ray_set(&cone, &rays, 2).unwrap() {
            assert!(cert.passes(), "{cert:?}");
        }
    }
}
