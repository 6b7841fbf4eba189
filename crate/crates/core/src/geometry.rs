//! The projective plane PG(2, q) over GF(q), q = 2^s, and its cyclic
//! (Singer) labeling.
//!
//! Points are nonzero triples over GF(q) normalized so the first nonzero
//! coordinate is 1; lines are normalized linear forms and contain the points
//! they annihilate. The Singer labeling identifies GF(q^3)* / GF(q)* with the
//! points, so multiplication by a generator of GF(q^3) permutes points and
//! lines cyclically and the incidence matrix becomes circulant.

use std::collections::HashMap;

use serde::Serialize;

use crate::field::FieldTable;
use crate::matrix::BinaryMatrix;
use crate::{Error, Result};

pub type Triple = [u32; 3];

#[derive(Clone, Debug, Serialize)]
pub struct Plane {
    s: u32,
    q: u32,
    n: usize,
    /// Homogeneous coordinates of each point, indexed by point label.
    points: Vec<Triple>,
    /// Coefficients of the linear form of each line, indexed by line label.
    lines: Vec<Triple>,
    /// Sorted point labels on each line.
    line_points: Vec<Vec<usize>>,
    #[serde(skip)]
    point_labels: HashMap<Triple, usize>,
}

/// Normalized nonzero triples over GF(q): (1,a,b), then (0,1,b), then (0,0,1).
fn normalized_triples(q: u32) -> Vec<Triple> {
    let mut out = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for b in 0..q {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

fn normalize(field: &FieldTable, t: Triple) -> Option<Triple> {
    let lead = *t.iter().find(|&&c| c != 0)?;
    let inv = field.inv(lead)?;
    Some(t.map(|c| field.mul(c, inv)))
}

fn incident(field: &FieldTable, line: &Triple, point: &Triple) -> bool {
    (0..3).fold(0, |acc, k| acc ^ field.mul(line[k], point[k])) == 0
}

/// Constructs PG(2, q) in the coordinate labeling.
pub fn build_plane(field: &FieldTable) -> Plane {
    let q = field.order();
    let points = normalized_triples(q);
    let lines = points.clone();
    let line_points = lines
        .iter()
        .map(|l| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| incident(field, l, p))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Plane::assemble(field.degree(), points, lines, line_points)
}

impl Plane {
    fn assemble(s: u32, points: Vec<Triple>, lines: Vec<Triple>, line_points: Vec<Vec<usize>>) -> Self {
        let q = 1u32 << s;
        let point_labels = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Plane {
            s,
            q,
            n: points.len(),
            points,
            lines,
            line_points,
            point_labels,
        }
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Number of points, which equals the number of lines: q^2 + q + 1.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn point(&self, i: usize) -> Triple {
        self.points[i]
    }

    pub fn line(&self, j: usize) -> Triple {
        self.lines[j]
    }

    pub fn line_points(&self, j: usize) -> &[usize] {
        &self.line_points[j]
    }

    /// Label of a point given by any nonzero homogeneous representative.
    pub fn point_label(&self, field: &FieldTable, t: Triple) -> Option<usize> {
        self.point_labels.get(&normalize(field, t)?).copied()
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.line_points[j].binary_search(&p).is_ok())
            .collect()
    }

    /// Line-point incidence matrix: rows are lines, columns are points.
    pub fn incidence_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.n, self.line_points.clone()).expect("labels are in range")
    }

    /// Verifies the projective-plane axioms and the regularity counts.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        let k = self.q as usize + 1;
        let fail = |msg: String| Err(Error::Internal(msg));
        if n != (self.q * self.q + self.q + 1) as usize || self.line_points.len() != n {
            return fail(format!("wrong number of points or lines: {n}"));
        }
        if let Some(j) = (0..n).find(|&j| self.line_points[j].len() != k) {
            return fail(format!("line {j} does not have {k} points"));
        }
        let h = self.incidence_matrix();
        if let Some(p) = h.column_weights().iter().position(|&w| w != k) {
            return fail(format!("point {p} is not on {k} lines"));
        }
        let bits = h.row_bits();
        for a in 0..n {
            for b in a + 1..n {
                if bits[a].intersection_count(&bits[b]) != 1 {
                    return fail(format!("lines {a} and {b} do not meet in one point"));
                }
            }
        }
        let mut pair_lines = vec![0u8; n * n];
        for row in &self.line_points {
            for (x, &a) in row.iter().enumerate() {
                for &b in &row[x + 1..] {
                    pair_lines[a * n + b] += 1;
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if pair_lines[a * n + b] != 1 {
                    return fail(format!("points {a} and {b} do not share exactly one line"));
                }
            }
        }
        Ok(())
    }
}

/// True iff the pairwise differences of `set` modulo `n` hit every nonzero
/// residue exactly once.
pub fn is_perfect_difference_set(set: &[usize], n: usize) -> bool {
    let mut hits = vec![0usize; n];
    for &a in set {
        for &b in set {
            if a != b {
                hits[(a + n - b) % n] += 1;
            }
        }
    }
    hits[0] == 0 && hits[1..].iter().all(|&h| h == 1)
}

/// Relabels points and lines along a Singer cycle so that the incidence
/// matrix is circulant with a difference set containing 0 in row 0.
///
/// GF(q^3) is built from the fixed primitive polynomial of degree 3s and its
/// generator g = x drives the cycle; point `i` is the class of g^i. GF(q) is
/// embedded by the smallest power of g^(q^2+q+1) that is a root of the
/// GF(q) primitive polynomial, and coordinates are taken in the basis
/// 1, g, g^2. Row 0 is the kernel of the relative trace, translated so that
/// its smallest element is 0.
pub fn circulant_labeling(plane: &Plane) -> Result<(Plane, BinaryMatrix)> {
    let s = plane.degree();
    let q = plane.order();
    let n = plane.size();
    if 3 * s > crate::field::MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "Singer labeling needs GF(2^{}) which exceeds the table limit",
            3 * s
        )));
    }
    let small = FieldTable::build(s)?;
    let big = FieldTable::build(3 * s)?;
    let g = big.generator();
    let fail = || Error::CirculantLabeling(q);

    let beta = big.exp(n as u64);
    let eval = |y: u32| -> u32 {
        let poly = small.primitive_poly();
        (0..=s).rev().fold(0, |acc, i| {
            let c = poly >> i & 1;
            big.mul(acc, y) ^ c
        })
    };
    let root = (1..q.max(2) as u64)
        .filter(|&k| num_integer::gcd(k, (q - 1).max(1) as u64) == 1)
        .map(|k| big.pow(beta, k))
        .find(|&c| eval(c) == 0)
        .ok_or_else(fail)?;
    let embed = |a: u32| match small.log(a) {
        None => 0,
        Some(l) => big.pow(root, l as u64),
    };

    let g2 = big.mul(g, g);
    let mut coords: Vec<Option<Triple>> = vec![None; big.order() as usize];
    for c0 in 0..q {
        for c1 in 0..q {
            for c2 in 0..q {
                let v = embed(c0) ^ big.mul(embed(c1), g) ^ big.mul(embed(c2), g2);
                if coords[v as usize].replace([c0, c1, c2]).is_some() {
                    return Err(fail());
                }
            }
        }
    }

    // Coordinate label of Singer point i.
    let mut coordinate_label = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for i in 0..n {
        let t = coords[big.exp(i as u64) as usize].ok_or_else(fail)?;
        let label = plane.point_label(&small, t).ok_or_else(fail)?;
        if std::mem::replace(&mut seen[label], true) {
            return Err(fail());
        }
        coordinate_label.push(label);
    }

    let trace = |x: u32| x ^ big.pow(x, q as u64) ^ big.pow(x, (q as u64) * (q as u64));
    let kernel: Vec<usize> = (0..n).filter(|&i| trace(big.exp(i as u64)) == 0).collect();
    let shift = *kernel.first().ok_or_else(fail)?;
    let row0: Vec<usize> = kernel.iter().map(|&d| d - shift).collect();
    if row0.len() != q as usize + 1 || !is_perfect_difference_set(&row0, n) {
        return Err(fail());
    }
    let h = BinaryMatrix::circulant(n, &row0)?;

    let coordinate_lines: Vec<crate::bits::Bits> = plane.incidence_matrix().row_bits();
    let mut lines = Vec::with_capacity(n);
    for j in 0..n {
        let mapped = crate::bits::Bits::from_indices(
            n,
            h.row_support(j).iter().map(|&i| coordinate_label[i]),
        );
        let line = coordinate_lines
            .iter()
            .position(|l| *l == mapped)
            .ok_or_else(fail)?;
        lines.push(plane.line(line));
    }
    let points = coordinate_label.iter().map(|&l| plane.point(l)).collect();
    let relabeled = Plane::assemble(s, points, lines, h.row_supports().to_vec());
    if !h.is_circulant()? {
        return Err(fail());
    }
    Ok((relabeled, h))
}

/// `s` with `q = 2^s`, for `q >= 2` a power of two.
pub fn degree_of_order(q: u64) -> Result<u32> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("q = {q} is not a power of two >= 2")));
    }
    Ok(q.trailing_zeros())
}

/// Convenience: the circulant parity-check matrix of PG(2, 2^s).
pub fn pg_parity_check(s: u32) -> Result<BinaryMatrix> {
    let field = FieldTable::build(s)?;
    Ok(circulant_labeling(&build_plane(&field))?.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(degree_of_order(2).unwrap(), 1);
        assert_eq!(degree_of_order(8).unwrap(), 3);
        assert!(degree_of_order(6).is_err());
        assert!(degree_of_order(1).is_err());
    }

    #[test]
    fn fano_plane_counts() {
        let f = FieldTable::build(1).unwrap();
        let p = build_plane(&f);
        assert_eq!(p.size(), 7);
        assert!((0..7).all(|j| p.line_points(j).len() == 3));
        p.check_axioms().unwrap();
    }

    #[test]
    fn fano_every_point_pair_on_one_line() {
        let f = FieldTable::build(1).unwrap();
        let p = build_plane(&f);
        let mut pairs = 0;
        for a in 0..7 {
            for b in a + 1..7 {
                let common = (0..7)
                    .filter(|&j| p.line_points(j).contains(&a) && p.line_points(j).contains(&b))
                    .count();
                assert_eq!(common, 1);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 21);
    }

    #[test]
    fn pg24_has_lines_of_five() {
        let f = FieldTable::build(2).unwrap();
        let p = build_plane(&f);
        assert_eq!(p.size(), 21);
        assert!((0..21).all(|j| p.line_points(j).len() == 5));
        p.check_axioms().unwrap();
    }

    #[test]
    fn printed_fano_row_is_a_difference_set() {
        assert!(is_perfect_difference_set(&[0, 1, 3], 7));
        assert!(!is_perfect_difference_set(&[0, 1, 2], 7));
    }

    #[test]
    fn singer_labeling_is_circulant() {
        for s in 1..=3 {
            let f = FieldTable::build(s).unwrap();
            let (relabeled, h) = circulant_labeling(&build_plane(&f)).unwrap();
            assert!(h.is_circulant().unwrap());
            assert!(h.row_support(0).contains(&0));
            relabeled.check_axioms().unwrap();
            for j in 0..relabeled.size() {
                for &i in relabeled.line_points(j) {
                    assert!(incident(&f, &relabeled.line(j), &relabeled.point(i)));
                }
            }
        }
    }

    #[test]
    fn point_labels_accept_any_representative() {
        let f = FieldTable::build(2).unwrap();
        let p = build_plane(&f);
        let g = f.generator();
        let scaled = [g, f.mul(g, 2), 0];
        assert_eq!(p.point_label(&f, scaled), p.point_label(&f, [1, 2, 0]));
        assert_eq!(p.point_label(&f, [0, 0, 0]), None);
    }
}
