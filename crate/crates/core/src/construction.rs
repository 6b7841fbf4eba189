//! The line-at-infinity pseudo-codeword: value q on the points of one line
//! and 1 elsewhere. Its tight parity inequalities form a matrix A with
//! A·Aᵀ = q·I + J, so it spans an extreme ray of the fundamental cone.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::cone::{ConeSystem, Inequality};
use crate::geometry::Plane;
use crate::linalg::{determinant_integer, rank_integer};
use crate::pseudoweight::{pseudo_weight_int, ConjectureReport, Evidence, SpectrumReport};
use crate::{fraction, Error, Rational, RayInt, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineConstruction {
    pub line_index: usize,
    pub q: u64,
    pub omega: Vec<RayInt>,
    #[serde(serialize_with = "fraction::serialize")]
    pub claimed_weight: Rational,
    /// Cone-system indices of the tight parity inequalities.
    pub active: Vec<usize>,
    /// Coefficient rows of the tight parity inequalities.
    #[serde(skip)]
    pub active_matrix: Vec<Vec<i64>>,
}

/// `(2q+1)² / (q+2)`.
pub fn line_construction_weight(q: u64) -> Rational {
    let a = 2 * q + 1;
    Rational::new(BigInt::from(a * a), BigInt::from(q + 2))
}

pub fn build_line_pcw(plane: &Plane, line: usize) -> Result<LineConstruction> {
    let n = plane.size();
    if line >= n {
        return Err(Error::InvalidLine { index: line, n });
    }
    let q = plane.order() as u64;
    let mut omega = vec![1 as RayInt; n];
    for &p in plane.line_points(line) {
        omega[p] = q as RayInt;
    }
    let cone = ConeSystem::build(&plane.incidence_matrix())?;
    if !cone.is_pseudocodeword(&omega)? {
        return Err(Error::NotInCone(format!("line construction on line {line}")));
    }
    let claimed_weight = line_construction_weight(q);
    let weight = pseudo_weight_int(&omega)?;
    if weight != claimed_weight {
        return Err(Error::Internal(format!(
            "line construction weight {} differs from (2q+1)^2/(q+2)",
            fraction::fraction_string(&weight)
        )));
    }
    let active: Vec<usize> = cone
        .active_set(&omega)?
        .into_iter()
        .filter(|&k| cone.inequalities()[k].is_parity())
        .collect();
    let active_matrix = active.iter().map(|&k| cone.coefficients(k).to_vec()).collect();
    Ok(LineConstruction {
        line_index: line,
        q,
        omega,
        claimed_weight,
        active,
        active_matrix,
    })
}

/// Result of the exact minimality argument; passes iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityCertificate {
    pub line_index: usize,
    pub q: u64,
    pub n: usize,
    pub tight_parity: usize,
    pub tight_nonneg: usize,
    /// A·ω = 0 exactly.
    pub kernel_contains_omega: bool,
    /// A·Aᵀ = q·I + J entrywise.
    pub gram_is_q_identity_plus_ones: bool,
    pub rank: usize,
    /// Eigenvalues of q·I + J with multiplicities.
    pub gram_eigenvalues: Vec<(u64, usize)>,
    /// det(A·Aᵀ), computed by exact elimination, as a decimal string.
    pub gram_determinant: String,
    /// q^(n-2) · (q² + 2q), the product of the closed-form eigenvalues.
    pub expected_determinant: String,
    pub failures: Vec<String>,
}

impl MinimalityCertificate {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn certify_minimality(c: &LineConstruction, cone: &ConeSystem) -> Result<MinimalityCertificate> {
    let n = cone.dimension();
    if c.omega.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.omega.len(),
        });
    }
    let q = c.q;
    let mut failures = Vec::new();
    let active = cone.active_set(&c.omega)?;
    let parity: Vec<usize> = active
        .iter()
        .copied()
        .filter(|&k| cone.inequalities()[k].is_parity())
        .collect();
    let tight_nonneg = active
        .iter()
        .filter(|&&k| matches!(cone.inequalities()[k], Inequality::Nonneg { .. }))
        .count();
    if parity.len() != n - 1 {
        failures.push(format!(
            "{} tight parity inequalities, expected q(q+1) = n-1 = {}",
            parity.len(),
            n - 1
        ));
    }
    if tight_nonneg != 0 {
        failures.push(format!("{tight_nonneg} nonnegativity inequalities are tight"));
    }
    if parity != c.active {
        failures.push("stored active set differs from the recomputed one".into());
    }
    let a: Vec<Vec<i64>> = parity.iter().map(|&k| cone.coefficients(k).to_vec()).collect();

    let kernel_contains_omega = a
        .iter()
        .all(|row| row.iter().zip(&c.omega).map(|(x, y)| x * y).sum::<i64>() == 0);
    if !kernel_contains_omega {
        failures.push("A·ω is not zero".into());
    }

    let gram: Vec<Vec<i64>> = a
        .iter()
        .map(|r| {
            a.iter()
                .map(|s| r.iter().zip(s).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    let gram_is_q_identity_plus_ones = gram.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| v == if i == j { q as i64 + 1 } else { 1 })
    });
    if !gram_is_q_identity_plus_ones {
        failures.push("A·Aᵀ differs from qI + J".into());
    }

    let rank = rank_integer(&a);
    if rank != n - 1 {
        failures.push(format!("rank(A) = {rank}, expected {}", n - 1));
    }

    let m = a.len();
    let gram_eigenvalues = if m >= 1 {
        vec![(q, m - 1), (q + m as u64, 1)]
    } else {
        Vec::new()
    };
    let expected: BigInt = if m >= 1 {
        Pow::pow(BigInt::from(q), (m - 1) as u32) * BigInt::from(q + m as u64)
    } else {
        BigInt::one()
    };
    let det = if m >= 1 {
        determinant_integer(&gram)
    } else {
        BigInt::one()
    };
    if det != expected {
        failures.push(format!("det(A·Aᵀ) = {det}, expected {expected}"));
    }
    if m == n - 1 && q + m as u64 != q * q + 2 * q {
        failures.push("largest eigenvalue differs from q² + 2q".into());
    }

    Ok(MinimalityCertificate {
        line_index: c.line_index,
        q,
        n,
        tight_parity: parity.len(),
        tight_nonneg,
        kernel_contains_omega,
        gram_is_q_identity_plus_ones,
        rank,
        gram_eigenvalues,
        gram_determinant: det.to_string(),
        expected_determinant: expected.to_string(),
        failures,
    })
}

/// Does every non-codeword class have pseudo-weight at most
/// `(2q+1)²/(q+2)`? Counterexamples are listed verbatim.
pub fn check_conjecture_max(report: &SpectrumReport, q: u64) -> ConjectureReport {
    let bound = line_construction_weight(q);
    let conjecture = "max_non_codeword_weight_at_most_line_construction".to_string();
    let Some(max) = report.max_non_codeword_weight() else {
        return ConjectureReport {
            conjecture,
            evidence: Evidence::Vacuous,
            observed: None,
            bound: Some(bound),
            witnesses: Vec::new(),
        };
    };
    let over: Vec<Vec<RayInt>> = report
        .entries
        .iter()
        .filter(|e| !e.is_codeword_multiple && e.pseudo_weight > bound)
        .map(|e| e.representative.clone())
        .collect();
    let (evidence, witnesses) = if over.is_empty() {
        let at_max = report
            .entries
            .iter()
            .filter(|e| !e.is_codeword_multiple && e.pseudo_weight == max)
            .map(|e| e.representative.clone())
            .collect();
        (Evidence::Consistent, at_max)
    } else {
        (Evidence::Counterexample, over)
    };
    ConjectureReport {
        conjecture,
        evidence,
        observed: Some(max),
        bound: Some(bound),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTable;
    use crate::geometry::{build_plane, circulant_labeling};

    fn plane(s: u32) -> Plane {
        let f = FieldTable::build(s).unwrap();
        circulant_labeling(&build_plane(&f)).unwrap().0
    }

    #[test]
    fn fano_line_construction() {
        let p = plane(1);
        let line = (0..7).find(|&j| p.line_points(j) == [0, 1, 3]).unwrap();
        let c = build_line_pcw(&p, line).unwrap();
        assert_eq!(c.omega, vec![2, 2, 1, 2, 1, 1, 1]);
        assert_eq!(c.claimed_weight, Rational::new(25.into(), 4.into()));
        let cone = ConeSystem::build(&p.incidence_matrix()).unwrap();
        let cert = certify_minimality(&c, &cone).unwrap();
        assert!(cert.passes(), "{:?}", cert.failures);
        assert_eq!(cert.tight_parity, 6);
        assert_eq!(cert.gram_eigenvalues, vec![(2, 5), (8, 1)]);
        assert_eq!(cert.gram_determinant, (32 * 8).to_string());
    }

    #[test]
    fn perturbed_construction_fails() {
        let p = plane(1);
        let mut c = build_line_pcw(&p, 0).unwrap();
        let affine = c.omega.iter().position(|&x| x == 1).unwrap();
        c.omega[affine] = 2;
        let cone = ConeSystem::build(&p.incidence_matrix()).unwrap();
        let cert = certify_minimality(&c, &cone).unwrap();
        assert!(!cert.passes());
        assert!(cert.tight_parity < 6);
    }

    #[test]
    fn invalid_line() {
        assert_eq!(
            build_line_pcw(&plane(1), 7),
            Err(Error::InvalidLine { index: 7, n: 7 })
        );
    }
}
