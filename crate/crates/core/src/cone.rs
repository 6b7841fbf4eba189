//! The fundamental cone of a parity-check matrix.
//!
//! For every row `j` and every `i` in its support the cone requires
//! `sum_{i' in supp(j) \ {i}} w_i' - w_i >= 0`, and every coordinate is
//! nonnegative. Inequalities are ordered row-major (parity), then by
//! coordinate (nonnegativity).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{rank_integer, rational_to_primitive};
use crate::matrix::BinaryMatrix;
use crate::scalar::Coordinate;
use crate::{Error, Rational, RayInt, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inequality {
    /// From row `row`, with `index` the distinguished (negated) coordinate.
    Parity { row: usize, index: usize },
    Nonneg { index: usize },
}

impl Inequality {
    pub fn is_parity(&self) -> bool {
        matches!(self, Inequality::Parity { .. })
    }
}

/// Outcome of a membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NegativeEntry(usize),
    /// First violated inequality, by system index.
    Violated(usize),
}

#[derive(Clone, Debug)]
pub struct ConeSystem {
    h: BinaryMatrix,
    inequalities: Vec<Inequality>,
    coefficients: Vec<Vec<i64>>,
}

impl ConeSystem {
    pub fn build(h: &BinaryMatrix) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let n = h.cols();
        let mut inequalities = Vec::new();
        let mut coefficients = Vec::new();
        for (row, support) in h.row_supports().iter().enumerate() {
            for &index in support {
                let mut c = vec![0i64; n];
                support.iter().for_each(|&i| c[i] = 1);
                c[index] = -1;
                inequalities.push(Inequality::Parity { row, index });
                coefficients.push(c);
            }
        }
        for index in 0..n {
            let mut c = vec![0i64; n];
            c[index] = 1;
            inequalities.push(Inequality::Nonneg { index });
            coefficients.push(c);
        }
        Ok(ConeSystem {
            h: h.clone(),
            inequalities,
            coefficients,
        })
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.h
    }

    pub fn dimension(&self) -> usize {
        self.h.cols()
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    pub fn parity_count(&self) -> usize {
        self.len() - self.dimension()
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn coefficients(&self, k: usize) -> &[i64] {
        &self.coefficients[k]
    }

    pub fn coefficient_rows(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    /// Left-hand side of inequality `k` at `w`.
    pub fn evaluate<T: Coordinate>(&self, k: usize, w: &[T]) -> T {
        match self.inequalities[k] {
            Inequality::Nonneg { index } => w[index].clone(),
            Inequality::Parity { row, index } => {
                let sum = self.h.row_support(row).iter().fold(T::zero(), |acc, &i| {
                    if i == index {
                        acc
                    } else {
                        acc + w[i].clone()
                    }
                });
                sum - w[index].clone()
            }
        }
    }

    fn check_len<T>(&self, w: &[T]) -> Result<()> {
        if w.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: w.len(),
            });
        }
        Ok(())
    }

    pub fn membership<T: Coordinate>(&self, w: &[T]) -> Result<Membership> {
        self.check_len(w)?;
        if let Some(i) = w.iter().position(|x| x.is_negative()) {
            return Ok(Membership::NegativeEntry(i));
        }
        Ok(match (0..self.len()).find(|&k| self.evaluate(k, w).is_negative()) {
            Some(k) => Membership::Violated(k),
            None => Membership::Member,
        })
    }

    pub fn is_pseudocodeword<T: Coordinate>(&self, w: &[T]) -> Result<bool> {
        Ok(self.membership(w)? == Membership::Member)
    }

    fn require_member<T: Coordinate>(&self, w: &[T]) -> Result<()> {
        match self.membership(w)? {
            Membership::Member => Ok(()),
            Membership::NegativeEntry(i) => Err(Error::NegativeEntry(i)),
            Membership::Violated(k) => Err(Error::NotInCone(format!(
                "violates inequality {k}: {:?}",
                self.inequalities[k]
            ))),
        }
    }

    /// Indices of the inequalities satisfied with equality, in system order.
    pub fn active_set<T: Coordinate>(&self, w: &[T]) -> Result<Vec<usize>> {
        self.require_member(w)?;
        Ok((0..self.len())
            .filter(|&k| self.evaluate(k, w).is_zero())
            .collect())
    }

    /// Rank of the coefficient matrix of the active inequalities.
    pub fn active_rank<T: Coordinate>(&self, w: &[T]) -> Result<usize> {
        let active = self.active_set(w)?;
        let rows: Vec<Vec<i64>> = active.iter().map(|&k| self.coefficients[k].clone()).collect();
        Ok(rank_integer(&rows))
    }

    /// A nonzero member spans an edge of the cone iff its active
    /// inequalities have rank n - 1.
    pub fn is_minimal_pseudocodeword<T: Coordinate>(&self, w: &[T]) -> Result<bool> {
        self.check_len(w)?;
        if w.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(self.active_rank(w)? == self.dimension() - 1)
    }

    pub fn is_codeword(&self, x: &[u8]) -> Result<bool> {
        self.h.is_codeword(x)
    }
}

/// A nonnegative cone vector together with its canonical integer scaling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayVector {
    #[serde(skip)]
    entries: Vec<Rational>,
    canonical_int: Vec<RayInt>,
    is_codeword_multiple: bool,
}

impl RayVector {
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn canonical(&self) -> &[RayInt] {
        &self.canonical_int
    }

    pub fn is_codeword_multiple(&self) -> bool {
        self.is_codeword_multiple
    }

    pub fn len(&self) -> usize {
        self.canonical_int.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical_int.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.canonical_int.iter().filter(|&&x| x != 0).count()
    }

    /// Canonical integer vector reduced modulo 2.
    pub fn reduction_mod2(&self) -> Vec<u8> {
        self.canonical_int.iter().map(|&x| (x & 1) as u8).collect()
    }

    /// Wraps an integer vector, scaling it canonically.
    pub fn from_integers(v: &[RayInt], h: &BinaryMatrix) -> Result<Self> {
        let rat: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        canonical_scale(&rat, |x| h.is_codeword(x).unwrap_or(false))
    }
}

/// Scales `w` to its canonical integer form.
///
/// The primitive integer vector `p` (denominators cleared, content divided
/// out) is kept when `p mod 2` is a codeword; otherwise `2p` is used, whose
/// reduction is the zero codeword. No smaller positive integer multiple
/// reduces to a codeword: odd multiples of `p` share its parity pattern.
pub fn canonical_scale<F>(w: &[Rational], is_codeword: F) -> Result<RayVector>
where
    F: Fn(&[u8]) -> bool,
{
    if let Some(i) = w.iter().position(Signed::is_negative) {
        return Err(Error::NegativeEntry(i));
    }
    if w.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let p: Vec<BigInt> = rational_to_primitive(w);
    let parity: Vec<u8> = p.iter().map(|x| (x & BigInt::one()).to_u8().unwrap_or(0)).collect();
    let reduces_to_codeword = is_codeword(&parity);
    let is_01 = p.iter().all(|x| x.is_zero() || x.is_one());
    let factor: i64 = if reduces_to_codeword { 1 } else { 2 };
    let canonical_int = p
        .iter()
        .map(|x| (x * factor).to_i64().ok_or(Error::Overflow("canonical scaling")))
        .collect::<Result<Vec<_>>>()?;
    Ok(RayVector {
        entries: w.to_vec(),
        canonical_int,
        is_codeword_multiple: is_01 && reduces_to_codeword,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> BinaryMatrix {
        BinaryMatrix::circulant(7, &[0, 1, 3]).unwrap()
    }

    fn rat(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn fano_system_layout() {
        let cone = ConeSystem::build(&fano()).unwrap();
        assert_eq!(cone.len(), 28);
        assert_eq!(cone.parity_count(), 21);
        // -w0 + w1 + w3 >= 0 is the first printed constraint.
        assert_eq!(cone.coefficients(0), &[-1, 1, 0, 1, 0, 0, 0]);
        assert_eq!(cone.inequalities()[27], Inequality::Nonneg { index: 6 });
    }

    #[test]
    fn single_row_system() {
        let h = BinaryMatrix::new(3, vec![vec![0, 1, 2]]).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        assert_eq!(cone.parity_count(), 3);
        assert_eq!(cone.len(), 6);
    }

    #[test]
    fn empty_matrix_rejected() {
        let h = BinaryMatrix::new(3, vec![]).unwrap();
        assert_eq!(ConeSystem::build(&h).unwrap_err(), Error::EmptyMatrix);
    }

    #[test]
    fn membership_examples() {
        let cone = ConeSystem::build(&fano()).unwrap();
        assert!(cone.is_pseudocodeword(&[2i64, 2, 1, 2, 1, 1, 1]).unwrap());
        assert!(cone.is_pseudocodeword(&[0i64; 7]).unwrap());
        assert_eq!(
            cone.membership(&[1i64, 0, 0, 0, 0, 0, 0]).unwrap(),
            Membership::Violated(0)
        );
        assert_eq!(
            cone.membership(&[1i64, -1, 0, 0, 0, 0, 0]).unwrap(),
            Membership::NegativeEntry(1)
        );
        assert!(cone.is_pseudocodeword(&[1i64; 6]).is_err());
    }

    #[test]
    fn active_sets() {
        let cone = ConeSystem::build(&fano()).unwrap();
        let active = cone.active_set(&[2i64, 2, 1, 2, 1, 1, 1]).unwrap();
        assert_eq!(active.len(), 6);
        assert!(active.iter().all(|&k| cone.inequalities()[k].is_parity()));
        assert_eq!(cone.active_set(&[0i64; 7]).unwrap().len(), 28);
        let cw = cone.active_set(&[0i64, 0, 1, 0, 1, 1, 1]).unwrap();
        let nonneg: Vec<_> = cw.iter().filter(|&&k| !cone.inequalities()[k].is_parity()).collect();
        assert_eq!(nonneg.len(), 3);
        assert!(cone.active_set(&[1i64, 1, 0, 1, 0, 0, 0]).is_err());
    }

    #[test]
    fn minimality_by_rank() {
        let cone = ConeSystem::build(&fano()).unwrap();
        assert!(cone.is_minimal_pseudocodeword(&[2i64, 2, 1, 2, 1, 1, 1]).unwrap());
        assert!(cone.is_minimal_pseudocodeword(&[0i64, 0, 1, 0, 1, 1, 1]).unwrap());
        // Sum of a codeword ray and a non-codeword ray lies inside a 2-face.
        assert!(!cone.is_minimal_pseudocodeword(&[2i64, 2, 2, 2, 2, 2, 2]).unwrap());
        assert_eq!(
            cone.is_minimal_pseudocodeword(&[0i64; 7]).unwrap_err(),
            Error::ZeroVector
        );
        let scaled = rat(&[2, 2, 1, 2, 1, 1, 1])
            .into_iter()
            .map(|x| x * Rational::new(3.into(), 7.into()))
            .collect::<Vec<_>>();
        assert!(cone.is_minimal_pseudocodeword(&scaled).unwrap());
    }

    #[test]
    fn canonical_scaling() {
        let h = fano();
        let oracle = |x: &[u8]| h.is_codeword(x).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let one = Rational::one();
        let w = vec![
            one.clone(), one.clone(), half.clone(), one.clone(), half.clone(), half.clone(), half,
        ];
        let r = canonical_scale(&w, oracle).unwrap();
        assert_eq!(r.canonical(), &[2, 2, 1, 2, 1, 1, 1]);
        assert!(!r.is_codeword_multiple());

        let r = canonical_scale(&rat(&[0, 0, 3, 0, 3, 3, 3]), oracle).unwrap();
        assert_eq!(r.canonical(), &[0, 0, 1, 0, 1, 1, 1]);
        assert!(r.is_codeword_multiple());

        // (1,1,0,1,0,0,0) is row 0 of H; it has odd overlap with row 0, so
        // it is not a codeword and the canonical form doubles it.
        let r = canonical_scale(&rat(&[3, 3, 0, 3, 0, 0, 0]), oracle).unwrap();
        assert_eq!(r.canonical(), &[2, 2, 0, 2, 0, 0, 0]);
        assert!(!r.is_codeword_multiple());
        assert!(r.reduction_mod2().iter().all(|&b| b == 0));

        assert_eq!(canonical_scale(&rat(&[0; 7]), oracle).unwrap_err(), Error::ZeroVector);
        assert_eq!(
            canonical_scale(&rat(&[0, -1, 0, 0, 0, 0, 0]), oracle).unwrap_err(),
            Error::NegativeEntry(1)
        );
    }
}
