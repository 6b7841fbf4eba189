//! Exact linear algebra: fraction-free (Bareiss) elimination over integer
//! rings and Gaussian elimination over fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{make_primitive, ExactInt, Scalar};
use crate::Rational;

/// Rank by fraction-free elimination. Returns `None` if an intermediate
/// minor does not fit in `T`.
pub fn rank_fraction_free<T: ExactInt>(rows: &[Vec<T>]) -> Option<usize> {
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let m = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..m {
            let lead = a[i][col].clone();
            for j in col + 1..ncols {
                let x = pivot.checked_mul(&a[i][j])?;
                let y = lead.checked_mul(&a[rank][j])?;
                a[i][j] = x.checked_sub(&y)? / prev.clone();
            }
            a[i][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn determinant_fraction_free<T: ExactInt>(rows: &[Vec<T>]) -> Option<T> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Some(T::one());
    }
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Some(T::zero());
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[k][k].checked_mul(&a[i][j])?;
                let y = a[i][k].checked_mul(&a[k][j])?;
                a[i][j] = x.checked_sub(&y)? / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if negate { -det } else { det })
}

/// Exact rank of a small-integer matrix: `i128` fast path, `BigInt` fallback.
pub fn rank_integer(rows: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(r) = rank_fraction_free(&wide) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank_fraction_free(&big).expect("BigInt elimination cannot overflow")
}

/// Exact determinant of a small-integer matrix.
pub fn determinant_integer(rows: &[Vec<i64>]) -> BigInt {
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(d) = determinant_fraction_free(&wide) {
        return BigInt::from(d);
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    determinant_fraction_free(&big).expect("BigInt elimination cannot overflow")
}

/// Scales each row by the lcm of its denominators.
pub fn clear_denominators(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = r
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Rank over the rationals via fraction-free elimination.
pub fn rank_exact(rows: &[Vec<Rational>]) -> usize {
    let ints = clear_denominators(rows);
    rank_fraction_free(&ints).expect("BigInt elimination cannot overflow")
}

/// Rank by ordinary Gaussian elimination with partial pivoting. Exact for
/// rational scalars; tolerance-based for floats.
pub fn rank_gaussian<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let m = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m {
            break;
        }
        let mut best: Option<usize> = None;
        for r in rank..m {
            if a[r][col].is_negligible() {
                continue;
            }
            best = match best {
                Some(b) if a[b][col].abs() >= a[r][col].abs() => Some(b),
                _ => Some(r),
            };
        }
        let Some(p) = best else { continue };
        a.swap(rank, p);
        for i in rank + 1..m {
            if a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone() / a[rank][col].clone();
            for j in col..ncols {
                let t = f.clone() * a[rank][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of the right null space of an exact matrix with `ncols` columns.
pub fn nullspace<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    debug_assert!(T::EXACT, "null spaces are only computed exactly");
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = T::one() / a[rank][col].clone();
        for j in 0..ncols {
            a[rank][j] = a[rank][j].clone() * inv.clone();
        }
        for i in 0..m {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..ncols {
                    let t = f.clone() * a[rank][j].clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Primitive integer vector spanning a one-dimensional integer kernel, or
/// `None` when the kernel has another dimension.
pub fn kernel_line(rows: &[Vec<i64>], ncols: usize) -> Option<Vec<BigInt>> {
    let rat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let basis = nullspace(&rat, ncols);
    if basis.len() != 1 {
        return None;
    }
    let mut v = rational_to_primitive(&basis[0]);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    Some(v)
}

/// Clears denominators and divides by the content. Sign is preserved.
pub fn rational_to_primitive(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}
