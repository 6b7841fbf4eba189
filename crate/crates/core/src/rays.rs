//! Exact enumeration of the extreme rays of a fundamental cone.
//!
//! Two routes are provided. The plain route runs the double-description
//! method over the whole system, seeded with the nonnegative orthant and
//! inserting parity inequalities row by row. The symmetric route exploits
//! the cyclic automorphism of a circulant parity-check matrix: it walks the
//! edge graph of the cone one orbit representative at a time (adjacency
//! decomposition), running the double-description method only on the small
//! local cone of each representative, and expands the orbits at the end.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bits::Bits;
use crate::cone::{ConeSystem, Inequality, RayVector};
use crate::linalg::{kernel_line, nullspace, rank_integer};
use crate::scalar::{make_primitive, ExactInt};
use crate::{Error, Rational, RayInt, Result};

pub const DEFAULT_MAX_DIMENSION: usize = 21;

/// Wall-clock and size caps for an enumeration.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    /// Cap on the number of rays held at any point (intermediate rays for
    /// the plain route, orbit representatives for the symmetric route).
    pub max_rays: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub use_symmetry: bool,
    pub max_dimension: usize,
    pub budget: Budget,
    /// Insertion order for the plain route, as cone-system indices. Must
    /// start with enough independent rows to seed a simplicial cone.
    pub insertion_order: Option<Vec<usize>>,
    /// Extreme ray to start the symmetric route from. Defaults to the end
    /// of a walk from the all-ones vector. A nondegenerate start avoids an
    /// expensive first local cone.
    pub start_ray: Option<Vec<RayInt>>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            use_symmetry: true,
            max_dimension: DEFAULT_MAX_DIMENSION,
            budget: Budget::default(),
            insertion_order: None,
            start_ray: None,
        }
    }
}

struct Watch {
    deadline: Option<Instant>,
    max_rays: Option<usize>,
    expired: AtomicBool,
}

impl Watch {
    fn new(budget: &Budget) -> Self {
        Watch {
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            max_rays: budget.max_rays,
            expired: AtomicBool::new(false),
        }
    }

    fn poll(&self) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.expired.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn check(&self, steps: usize, rays: usize) -> Result<()> {
        if self.poll() {
            return Err(Error::BudgetExceeded {
                reason: "time limit reached".into(),
                steps,
                rays,
            });
        }
        if self.max_rays.is_some_and(|cap| rays > cap) {
            return Err(Error::BudgetExceeded {
                reason: format!("ray cap {} exceeded", self.max_rays.unwrap_or(0)),
                steps,
                rays,
            });
        }
        Ok(())
    }
}

fn dot<T: ExactInt>(row: &[i64], v: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (&c, x) in row.iter().zip(v) {
        match c {
            0 => {}
            1 => acc = acc.checked_add(x)?,
            -1 => acc = acc.checked_sub(x)?,
            _ => acc = acc.checked_add(&T::from_i64(c)?.checked_mul(x)?)?,
        }
    }
    Some(acc)
}

fn overflow() -> Error {
    Error::Overflow("ray arithmetic")
}

/// Incremental double-description state for `{x : row_k . x >= 0}` over
/// the inserted rows, in a fixed ambient dimension. Rays are kept as
/// primitive integer vectors together with the set of inserted rows they
/// make tight.
#[derive(Clone, Debug)]
pub struct DoubleDescription<T> {
    rows: Vec<Vec<i64>>,
    dim: usize,
    rays: Vec<Vec<T>>,
    zeros: Vec<Bits>,
    inserted: Vec<usize>,
}

impl<T: ExactInt> DoubleDescription<T> {
    pub fn new(rows: Vec<Vec<i64>>, dim: usize) -> Self {
        DoubleDescription {
            rows,
            dim,
            rays: Vec::new(),
            zeros: Vec::new(),
            inserted: Vec::new(),
        }
    }

    pub fn rays(&self) -> &[Vec<T>] {
        &self.rays
    }

    pub fn inserted(&self) -> &[usize] {
        &self.inserted
    }

    /// Seeds with the simplicial cone of the first `dim` linearly
    /// independent rows of `order`; returns the rows still to insert.
    pub fn seed(&mut self, order: &[usize]) -> Result<Vec<usize>> {
        let mut basis: Vec<usize> = Vec::with_capacity(self.dim);
        let mut basis_rows: Vec<Vec<i64>> = Vec::with_capacity(self.dim);
        let mut rest = Vec::new();
        for &k in order {
            if basis.len() < self.dim {
                basis_rows.push(self.rows[k].clone());
                if rank_integer(&basis_rows) == basis_rows.len() {
                    basis.push(k);
                    continue;
                }
                basis_rows.pop();
            }
            rest.push(k);
        }
        if basis.len() < self.dim {
            return Err(Error::Precondition(format!(
                "inequalities have rank {} < {}; the cone is not pointed",
                basis.len(),
                self.dim
            )));
        }
        self.rays.clear();
        self.zeros.clear();
        for j in 0..self.dim {
            let others: Vec<Vec<i64>> = (0..self.dim)
                .filter(|&i| i != j)
                .map(|i| basis_rows[i].clone())
                .collect();
            let mut r = kernel_line(&others, self.dim)
                .ok_or_else(|| Error::Internal("seed rows are dependent".into()))?;
            let big_row: Vec<BigInt> = basis_rows[j].iter().map(|&c| BigInt::from(c)).collect();
            let s: BigInt = big_row.iter().zip(&r).map(|(a, b)| a * b).sum();
            if s.is_negative() {
                r.iter_mut().for_each(|x| *x = -x.clone());
            }
            let ray = r
                .iter()
                .map(|x| from_bigint::<T>(x))
                .collect::<Result<Vec<T>>>()?;
            let zero = Bits::from_indices(
                self.rows.len(),
                basis.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &k)| k),
            );
            self.rays.push(ray);
            self.zeros.push(zero);
        }
        self.inserted = basis;
        Ok(rest)
    }

    /// Inserts row `k`: keeps rays on its nonnegative side and adds the
    /// combination of every adjacent pair straddling its hyperplane.
    /// Adjacency is decided combinatorially and certified by rank.
    pub fn insert(&mut self, k: usize) -> Result<()> {
        self.insert_watched(k, None)
    }

    fn insert_watched(&mut self, k: usize, watch: Option<&Watch>) -> Result<()> {
        let row = &self.rows[k];
        let values = self
            .rays
            .iter()
            .map(|r| dot(row, r))
            .collect::<Option<Vec<T>>>()
            .ok_or_else(overflow)?;
        let (mut pos, mut zero, mut neg) = (Vec::new(), Vec::new(), Vec::new());
        for (i, v) in values.iter().enumerate() {
            if v.is_positive() {
                pos.push(i);
            } else if v.is_zero() {
                zero.push(i);
            } else {
                neg.push(i);
            }
        }
        let need = self.dim.saturating_sub(2);
        let rays = &self.rays;
        let zeros = &self.zeros;
        let rows = &self.rows;
        let generated: Vec<Result<Vec<(Vec<T>, Bits)>>> = pos
            .par_iter()
            .map(|&p| {
                let mut out = Vec::new();
                if watch.is_some_and(Watch::poll) {
                    return Ok(out);
                }
                for (step, &m) in neg.iter().enumerate() {
                    if step % 256 == 255 && watch.is_some_and(Watch::poll) {
                        return Ok(out);
                    }
                    let common = zeros[p].intersection(&zeros[m]);
                    if common.count() < need {
                        continue;
                    }
                    let blocked = (0..rays.len())
                        .any(|r| r != p && r != m && common.is_subset(&zeros[r]));
                    if blocked {
                        continue;
                    }
                    let face: Vec<Vec<i64>> = common.ones().map(|i| rows[i].clone()).collect();
                    if rank_integer(&face) != need {
                        return Err(Error::Internal(format!(
                            "combinatorially adjacent rays {p} and {m} fail the rank test"
                        )));
                    }
                    let (sp, sm) = (&values[p], &values[m]);
                    let mut v = rays[m]
                        .iter()
                        .zip(&rays[p])
                        .map(|(a, b)| sp.checked_mul(a)?.checked_sub(&sm.checked_mul(b)?))
                        .collect::<Option<Vec<T>>>()
                        .ok_or_else(overflow)?;
                    make_primitive(&mut v);
                    let mut z = common;
                    z.insert(k);
                    out.push((v, z));
                }
                Ok(out)
            })
            .collect();
        if let Some(w) = watch {
            w.check(self.inserted.len(), self.rays.len())?;
        }
        let mut new_rays = Vec::with_capacity(pos.len() + zero.len());
        let mut new_zeros = Vec::with_capacity(pos.len() + zero.len());
        for &i in &pos {
            new_rays.push(self.rays[i].clone());
            new_zeros.push(self.zeros[i].clone());
        }
        for &i in &zero {
            let mut z = self.zeros[i].clone();
            z.insert(k);
            new_rays.push(self.rays[i].clone());
            new_zeros.push(z);
        }
        for batch in generated {
            for (v, z) in batch? {
                new_rays.push(v);
                new_zeros.push(z);
            }
        }
        self.rays = new_rays;
        self.zeros = new_zeros;
        self.inserted.push(k);
        Ok(())
    }

    /// Number of positive/negative rays of row `k` on the current rays.
    fn split(&self, k: usize) -> Result<(usize, usize)> {
        let (mut p, mut m) = (0, 0);
        for r in &self.rays {
            let v = dot(&self.rows[k], r).ok_or_else(overflow)?;
            if v.is_positive() {
                p += 1;
            } else if v.is_negative() {
                m += 1;
            }
        }
        Ok((p, m))
    }

    /// Inserts the remaining rows greedily, always taking the row with the
    /// fewest straddling pairs next.
    fn run_greedy(&mut self, order: &[usize], watch: &Watch) -> Result<()> {
        let mut rest = self.seed(order)?;
        while !rest.is_empty() {
            let mut best = (usize::MAX, 0);
            for (i, &k) in rest.iter().enumerate() {
                let (p, m) = self.split(k)?;
                if p * m < best.0 {
                    best = (p * m, i);
                }
            }
            let k = rest.remove(best.1);
            self.insert_watched(k, Some(watch))?;
            log::debug!(
                "double description: {} rows inserted, {} rays",
                self.inserted.len(),
                self.rays.len()
            );
            watch.check(self.inserted.len(), 0)?;
        }
        Ok(())
    }

    fn run(&mut self, order: &[usize], watch: &Watch) -> Result<()> {
        let rest = self.seed(order)?;
        for k in rest {
            self.insert_watched(k, Some(watch))?;
            log::debug!(
                "double description: {} rows inserted, {} rays",
                self.inserted.len(),
                self.rays.len()
            );
            watch.check(self.inserted.len(), self.rays.len())?;
        }
        Ok(())
    }
}

fn from_bigint<T: ExactInt>(x: &BigInt) -> Result<T> {
    x.to_i128()
        .and_then(T::from_i128)
        .or_else(|| {
            // BigInt itself: round-trip through its decimal form.
            let s = x.to_string();
            num_traits::Num::from_str_radix(&s, 10).ok()
        })
        .ok_or_else(overflow)
}

/// Default insertion order: nonnegativity rows first (the seed orthant),
/// then parity rows in row-major order.
pub fn default_order(cone: &ConeSystem) -> Vec<usize> {
    let p = cone.parity_count();
    (p..cone.len()).chain(0..p).collect()
}

/// Extreme rays of a cone, one per positive-scaling class, canonically
/// scaled and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySet {
    n: usize,
    rays: Vec<RayVector>,
    /// Indices into `rays` of the lexicographically smallest member of each
    /// cyclic orbit.
    orbit_reps: Vec<usize>,
    group_order_used: usize,
    cyclic: bool,
}

impl RaySet {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn orbit_reps(&self) -> impl Iterator<Item = &RayVector> {
        self.orbit_reps.iter().map(|&i| &self.rays[i])
    }

    pub fn orbit_rep_indices(&self) -> &[usize] {
        &self.orbit_reps
    }

    /// Order of the symmetry group the enumeration exploited (1 if none).
    pub fn group_order_used(&self) -> usize {
        self.group_order_used
    }

    /// Number of rays in the cyclic orbit of each representative.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbit_reps()
            .map(|r| {
                if self.cyclic {
                    cyclic_orbit(r.canonical()).len()
                } else {
                    1
                }
            })
            .collect()
    }

    /// Assembles a ray set from arbitrary integer rays of the cone of `h`.
    pub fn from_integer_rays(
        rays: Vec<Vec<RayInt>>,
        h: &crate::BinaryMatrix,
        group_order_used: usize,
    ) -> Result<Self> {
        let n = h.cols();
        let cyclic = h.rows() == n && h.is_circulant()?;
        let mut canon: Vec<RayVector> = rays
            .iter()
            .map(|r| RayVector::from_integers(r, h))
            .collect::<Result<_>>()?;
        canon.sort_by(|a, b| a.canonical().cmp(b.canonical()));
        canon.dedup_by(|a, b| a.canonical() == b.canonical());
        let orbit_reps = if cyclic {
            let members: HashSet<&[RayInt]> = canon.iter().map(|r| r.canonical()).collect();
            let mut reps = Vec::new();
            for (i, r) in canon.iter().enumerate() {
                let orbit = cyclic_orbit(r.canonical());
                if orbit.iter().any(|o| !members.contains(o.as_slice())) {
                    return Err(Error::Internal("ray set is not closed under cyclic shifts".into()));
                }
                if orbit[0].as_slice() == r.canonical() {
                    reps.push(i);
                }
            }
            reps
        } else {
            (0..canon.len()).collect()
        };
        Ok(RaySet {
            n,
            rays: canon,
            orbit_reps,
            group_order_used,
            cyclic,
        })
    }
}

/// All distinct cyclic shifts of `v`, sorted lexicographically.
pub fn cyclic_orbit<T: Ord + Clone>(v: &[T]) -> Vec<Vec<T>> {
    let n = v.len();
    let set: BTreeSet<Vec<T>> = (0..n.max(1)).map(|s| shift(v, s)).collect();
    set.into_iter().collect()
}

/// Cyclic right shift by `s`: entry `i` moves to `(i + s) mod n`.
pub fn shift<T: Clone>(v: &[T], s: usize) -> Vec<T> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    (0..n).map(|i| v[(i + n - s % n) % n].clone()).collect()
}

fn orbit_min<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    (0..v.len()).map(|s| shift(v, s)).min().unwrap_or_default()
}

/// Enumerates all extreme rays of the fundamental cone.
pub fn enumerate_rays(cone: &ConeSystem, use_symmetry: bool) -> Result<RaySet> {
    enumerate_rays_with(
        cone,
        &EnumerationOptions {
            use_symmetry,
            ..EnumerationOptions::default()
        },
    )
}

pub fn enumerate_rays_with(cone: &ConeSystem, opts: &EnumerationOptions) -> Result<RaySet> {
    let n = cone.dimension();
    if n > opts.max_dimension {
        return Err(Error::DimensionLimit {
            n,
            limit: opts.max_dimension,
        });
    }
    let h = cone.matrix();
    let symmetric = opts.use_symmetry && h.rows() == n && h.is_circulant()?;
    let raw = match enumerate_typed::<i64>(cone, opts, symmetric) {
        Err(Error::Overflow(_)) => match enumerate_typed::<i128>(cone, opts, symmetric) {
            Err(Error::Overflow(_)) => enumerate_typed::<BigInt>(cone, opts, symmetric)?,
            other => other?,
        },
        other => other?,
    };
    let group = if symmetric { n } else { 1 };
    RaySet::from_integer_rays(raw, h, group)
}

fn to_ray_ints<T: ExactInt>(rays: Vec<Vec<T>>) -> Result<Vec<Vec<RayInt>>> {
    rays.into_iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("canonical ray entry")))
                .collect()
        })
        .collect()
}

fn enumerate_typed<T: ExactInt + Ord>(
    cone: &ConeSystem,
    opts: &EnumerationOptions,
    symmetric: bool,
) -> Result<Vec<Vec<RayInt>>> {
    let watch = Watch::new(&opts.budget);
    if symmetric {
        if let Some(rays) = adjacency_decomposition::<T>(cone, opts, &watch)? {
            return to_ray_ints(rays);
        }
    }
    let mut dd = DoubleDescription::<T>::new(cone.coefficient_rows().to_vec(), cone.dimension());
    match &opts.insertion_order {
        Some(order) => dd.run(order, &watch)?,
        None => dd.run_greedy(&default_order(cone), &watch)?,
    }
    to_ray_ints(dd.rays)
}

/// Walks from the all-ones vector to an extreme ray, making one more
/// independent inequality tight at each step. Returns `None` if all-ones
/// is not a cone member.
pub fn find_initial_ray(cone: &ConeSystem) -> Result<Option<Vec<BigInt>>> {
    let n = cone.dimension();
    let mut x: Vec<Rational> = vec![Rational::one(); n];
    if !cone.is_pseudocodeword(&x)? {
        return Ok(None);
    }
    for _ in 0..=n {
        let tight: Vec<usize> = (0..cone.len())
            .filter(|&k| cone.evaluate(k, &x).is_zero())
            .collect();
        let rows: Vec<Vec<Rational>> = tight
            .iter()
            .map(|&k| {
                cone.coefficients(k)
                    .iter()
                    .map(|&c| Rational::from_integer(c.into()))
                    .collect()
            })
            .collect();
        let basis = nullspace(&rows, n);
        if basis.len() <= 1 {
            let mut p = crate::linalg::rational_to_primitive(&x);
            make_primitive(&mut p);
            return Ok(Some(p));
        }
        let sx: Rational = x.iter().sum();
        let dir = basis
            .iter()
            .map(|d| {
                let sd: Rational = d.iter().sum();
                d.iter()
                    .zip(&x)
                    .map(|(di, xi)| &sx * di - &sd * xi)
                    .collect::<Vec<Rational>>()
            })
            .find(|d| d.iter().any(|v| !v.is_zero()))
            .ok_or_else(|| Error::Internal("no transverse direction".into()))?;
        let mut step: Option<Rational> = None;
        for k in 0..cone.len() {
            let slope = cone.evaluate(k, &dir);
            if slope.is_negative() {
                let t = cone.evaluate(k, &x) / -slope;
                if step.as_ref().is_none_or(|s| t < *s) {
                    step = Some(t);
                }
            }
        }
        let t = step.ok_or_else(|| Error::Internal("unbounded walk on the cone section".into()))?;
        x = x.iter().zip(&dir).map(|(a, d)| a + &t * d).collect();
    }
    Err(Error::Internal("walk to an extreme ray did not terminate".into()))
}

/// Neighbors of the extreme ray `r` in the edge graph of the cone.
fn neighbors<T: ExactInt + Ord>(
    cone: &ConeSystem,
    r: &[T],
    watch: &Watch,
) -> Result<Vec<Vec<T>>> {
    let n = cone.dimension();
    let rows = cone.coefficient_rows();
    let values = rows
        .iter()
        .map(|row| dot(row, r))
        .collect::<Option<Vec<T>>>()
        .ok_or_else(overflow)?;
    let tight: Vec<usize> = (0..rows.len()).filter(|&k| values[k].is_zero()).collect();
    let pivot = r
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(Error::ZeroVector)?;

    // The tangent cone at r modulo span(r), realized on {x_pivot = 0}.
    let local_rows: Vec<Vec<i64>> = tight
        .iter()
        .map(|&k| {
            rows[k]
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pivot)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..tight.len())
        .filter(|&i| matches!(cone.inequalities()[tight[i]], Inequality::Nonneg { .. }))
        .collect();
    order.extend((0..tight.len()).filter(|&i| cone.inequalities()[tight[i]].is_parity()));
    let mut local = DoubleDescription::<T>::new(local_rows, n - 1);
    local.run_greedy(&order, watch)?;

    let sum_r = r
        .iter()
        .try_fold(T::zero(), |a, x| a.checked_add(x))
        .ok_or_else(overflow)?;
    let mut out = Vec::with_capacity(local.rays.len());
    for y in &local.rays {
        let mut d: Vec<T> = y.clone();
        d.insert(pivot, T::zero());
        // Direction within the section {sum x = sum r}.
        let sum_d = d
            .iter()
            .try_fold(T::zero(), |a, x| a.checked_add(x))
            .ok_or_else(overflow)?;
        let dir = d
            .iter()
            .zip(r)
            .map(|(di, ri)| sum_r.checked_mul(di)?.checked_sub(&sum_d.checked_mul(ri)?))
            .collect::<Option<Vec<T>>>()
            .ok_or_else(overflow)?;
        let mut best: Option<(T, T)> = None;
        for (k, row) in rows.iter().enumerate() {
            if values[k].is_zero() {
                continue;
            }
            let slope = dot(row, &dir).ok_or_else(overflow)?;
            if !slope.is_negative() {
                continue;
            }
            let (num, den) = (values[k].clone(), -slope);
            let better = match &best {
                None => true,
                Some((bn, bd)) => {
                    let lhs = num.checked_mul(bd).ok_or_else(overflow)?;
                    let rhs = bn.checked_mul(&den).ok_or_else(overflow)?;
                    lhs < rhs
                }
            };
            if better {
                best = Some((num, den));
            }
        }
        let (num, den) =
            best.ok_or_else(|| Error::Internal("edge walk left the cone section".into()))?;
        let mut next = r
            .iter()
            .zip(&dir)
            .map(|(ri, di)| den.checked_mul(ri)?.checked_add(&num.checked_mul(di)?))
            .collect::<Option<Vec<T>>>()
            .ok_or_else(overflow)?;
        make_primitive(&mut next);
        out.push(next);
    }
    Ok(out)
}

/// Outcome of a symmetric traversal, possibly cut short by the budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    /// Orbit representatives found so far (lexicographically smallest
    /// cyclic shift), sorted. Every one is an extreme ray.
    pub representatives: Vec<Vec<RayInt>>,
    /// Number of representatives whose neighbors were computed.
    pub expanded: usize,
    pub complete: bool,
}

/// Symmetric traversal with partial results: the budget stops the walk
/// instead of failing it. Representatives with fewer tight inequalities are
/// expanded first. Requires a circulant parity-check matrix.
pub fn explore_rays(cone: &ConeSystem, opts: &EnumerationOptions) -> Result<Exploration> {
    let h = cone.matrix();
    if h.rows() != cone.dimension() || !h.is_circulant()? {
        return Err(Error::Precondition(
            "symmetric traversal needs a square circulant parity-check matrix".into(),
        ));
    }
    let watch = Watch::new(&opts.budget);
    let found = match explore_typed::<i64>(cone, opts, &watch) {
        Err(Error::Overflow(_)) => match explore_typed::<i128>(cone, opts, &watch) {
            Err(Error::Overflow(_)) => explore_typed::<BigInt>(cone, opts, &watch)?,
            other => other?,
        },
        other => other?,
    };
    Ok(found.unwrap_or(Exploration {
        representatives: Vec::new(),
        expanded: 0,
        complete: false,
    }))
}

fn explore_typed<T: ExactInt + Ord>(
    cone: &ConeSystem,
    opts: &EnumerationOptions,
    watch: &Watch,
) -> Result<Option<Exploration>> {
    traverse::<T>(cone, opts, watch)?
        .map(|t| {
            Ok(Exploration {
                representatives: to_ray_ints(t.known.into_iter().collect())?,
                expanded: t.expanded,
                complete: t.complete,
            })
        })
        .transpose()
}

struct Traversal<T> {
    known: BTreeSet<Vec<T>>,
    expanded: usize,
    complete: bool,
}

fn start_ray<T: ExactInt>(cone: &ConeSystem, opts: &EnumerationOptions) -> Result<Option<Vec<T>>> {
    if let Some(r) = &opts.start_ray {
        if r.len() != cone.dimension() {
            return Err(Error::LengthMismatch {
                expected: cone.dimension(),
                got: r.len(),
            });
        }
        let rational: Vec<Rational> = r.iter().map(|&x| Rational::from_integer(x.into())).collect();
        if !cone.is_minimal_pseudocodeword(&rational)? {
            return Err(Error::NotInCone("start ray is not an extreme ray".into()));
        }
        let mut v: Vec<T> = r.iter().map(|&x| T::from_i64(x).ok_or_else(overflow)).collect::<Result<_>>()?;
        make_primitive(&mut v);
        return Ok(Some(v));
    }
    find_initial_ray(cone)?
        .map(|v| v.iter().map(from_bigint::<T>).collect::<Result<Vec<T>>>())
        .transpose()
}

fn tight_count<T: ExactInt>(cone: &ConeSystem, r: &[T]) -> Result<usize> {
    let mut c = 0;
    for row in cone.coefficient_rows() {
        if dot(row, r).ok_or_else(overflow)?.is_zero() {
            c += 1;
        }
    }
    Ok(c)
}

/// Orbit-wise traversal of the edge graph under the cyclic group. Stops
/// early, with `complete == false`, when the budget runs out.
fn traverse<T: ExactInt + Ord>(
    cone: &ConeSystem,
    opts: &EnumerationOptions,
    watch: &Watch,
) -> Result<Option<Traversal<T>>> {
    let Some(start) = start_ray::<T>(cone, opts)? else {
        return Ok(None);
    };
    let first = orbit_min(&start);
    let mut known: BTreeSet<Vec<T>> = BTreeSet::from([first.clone()]);
    // Pending representatives keyed by (tight count, vector).
    let mut pending: BTreeSet<(usize, Vec<T>)> =
        BTreeSet::from([(tight_count(cone, &first)?, first)]);
    let mut expanded = 0;
    while let Some((tight, r)) = pending.pop_first() {
        let local = match neighbors(cone, &r, watch) {
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(Some(Traversal {
                    known,
                    expanded,
                    complete: false,
                }))
            }
            other => other?,
        };
        expanded += 1;
        for v in local {
            let rep = orbit_min(&v);
            if !known.contains(&rep) {
                pending.insert((tight_count(cone, &rep)?, rep.clone()));
                known.insert(rep);
            }
        }
        log::info!(
            "adjacency decomposition: expanded {expanded} ({tight} tight), {} known, {} pending",
            known.len(),
            pending.len()
        );
        if watch.poll() || opts.budget.max_rays.is_some_and(|cap| known.len() > cap) {
            return Ok(Some(Traversal {
                known,
                expanded,
                complete: false,
            }));
        }
    }
    Ok(Some(Traversal {
        known,
        expanded,
        complete: true,
    }))
}

fn adjacency_decomposition<T: ExactInt + Ord>(
    cone: &ConeSystem,
    opts: &EnumerationOptions,
    watch: &Watch,
) -> Result<Option<Vec<Vec<T>>>> {
    let Some(t) = traverse::<T>(cone, opts, watch)? else {
        return Ok(None);
    };
    if !t.complete {
        return Err(Error::BudgetExceeded {
            reason: if watch.poll() {
                "time limit reached".into()
            } else {
                "ray cap exceeded".into()
            },
            steps: t.expanded,
            rays: t.known.len(),
        });
    }
    let mut all: BTreeSet<Vec<T>> = BTreeSet::new();
    for rep in t.known {
        all.extend(cyclic_orbit(&rep));
    }
    Ok(Some(all.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BinaryMatrix;

    #[test]
    fn orthant_then_diagonal_cut() {
        // {x >= 0, y >= 0} then x - y >= 0.
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, -1]];
        let mut dd = DoubleDescription::<i64>::new(rows, 2);
        let rest = dd.seed(&[0, 1, 2]).unwrap();
        assert_eq!(rest, vec![2]);
        dd.insert(2).unwrap();
        let mut rays = dd.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn redundant_row_keeps_rays() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let mut dd = DoubleDescription::<i64>::new(rows, 2);
        dd.seed(&[0, 1, 2]).unwrap();
        let before = dd.rays().to_vec();
        dd.insert(2).unwrap();
        assert_eq!(dd.rays(), before.as_slice());
    }

    #[test]
    fn single_parity_row() {
        let h = BinaryMatrix::new(3, vec![vec![0, 1, 2]]).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        let set = enumerate_rays(&cone, false).unwrap();
        let rays: Vec<&[i64]> = set.rays().iter().map(|r| r.canonical()).collect();
        assert_eq!(rays, vec![&[0, 1, 1][..], &[1, 0, 1], &[1, 1, 0]]);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(cyclic_orbit(&[2, 2, 1, 2, 1, 1, 1]).len(), 7);
        assert_eq!(cyclic_orbit(&[1; 7]).len(), 1);
        assert_eq!(cyclic_orbit(&[1, 0, 0, 0, 0, 0, 0]).len(), 7);
        assert_eq!(shift(&[1, 2, 3], 1), vec![3, 1, 2]);
    }

    #[test]
    fn dimension_limit() {
        let h = BinaryMatrix::circulant(23, &[0, 1, 5]).unwrap();
        let cone = ConeSystem::build(&h).unwrap();
        assert!(matches!(
            enumerate_rays(&cone, true),
            Err(Error::DimensionLimit { n: 23, limit: 21 })
        ));
    }
}
