//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pgpw_core::geometry::pg_parity_check;
use pgpw_core::{BinaryMatrix, ConeSystem};

pub fn fano() -> (BinaryMatrix, ConeSystem) {
    let h = pg_parity_check(1).unwrap();
    let cone = ConeSystem::build(&h).unwrap();
    (h, cone)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x as i128));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|&x| (x as i128 / g) as i64).collect()
}

/// Exact determinant by fraction-free elimination with row swaps.
pub fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Generalized cross product of `n - 1` rows in dimension `n`: a nonzero
/// kernel vector iff the rows are independent.
fn cross(rows: &[&Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|j| {
            let m: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x as i128).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            (sign * det(m)) as i64
        })
        .collect()
}

/// Extreme rays of `{x : rows · x >= 0}` by brute force over every
/// `(n-1)`-subset of rows, as primitive integer vectors.
pub fn oracle_extreme_rays(rows: &[Vec<i64>], n: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let m = rows.len();
    let k = n - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<&Vec<i64>> = idx.iter().map(|&i| &rows[i]).collect();
        let x = cross(&chosen, n);
        if x.iter().any(|&v| v != 0) {
            for cand in [x.clone(), x.iter().map(|v| -v).collect::<Vec<_>>()] {
                let ok = rows
                    .iter()
                    .all(|r| r.iter().zip(&cand).map(|(a, b)| a * b).sum::<i64>() >= 0);
                if ok {
                    out.insert(primitive(&cand));
                }
            }
        }
        // Next combination.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - k + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Primitive forms of an enumerated ray set.
pub fn primitive_set<'a>(rays: impl Iterator<Item = &'a [i64]>) -> BTreeSet<Vec<i64>> {
    rays.map(primitive).collect()
}
