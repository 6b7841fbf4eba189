//! JSON and CSV artifact formats.

use serde::{Deserialize, Serialize};

use crate::code::CodeSummary;
use crate::cone::{ConeSystem, Inequality};
use crate::decoder::SimReport;
use crate::fraction::{decimal_string, fraction_string, DECIMAL_DIGITS};
use crate::matrix::BinaryMatrix;
use crate::pseudoweight::SpectrumReport;
use crate::rays::RaySet;
use crate::{Error, RayInt, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub q: u64,
    pub n: usize,
    pub row_supports: Vec<Vec<usize>>,
}

impl MatrixJson {
    pub fn new(q: u64, h: &BinaryMatrix) -> Self {
        MatrixJson {
            q,
            n: h.cols(),
            row_supports: h.row_supports().to_vec(),
        }
    }

    pub fn matrix(&self) -> Result<BinaryMatrix> {
        BinaryMatrix::new(self.n, self.row_supports.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub n: usize,
    pub inequalities: Vec<Inequality>,
}

impl ConeJson {
    pub fn new(cone: &ConeSystem) -> Self {
        ConeJson {
            n: cone.dimension(),
            inequalities: cone.inequalities().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaySetJson {
    pub n: usize,
    pub rays: Vec<Vec<RayInt>>,
    pub orbit_reps: Vec<Vec<RayInt>>,
    #[serde(default = "one")]
    pub group_order_used: usize,
}

fn one() -> usize {
    1
}

impl RaySetJson {
    pub fn new(rays: &RaySet) -> Self {
        RaySetJson {
            n: rays.dimension(),
            rays: rays.rays().iter().map(|r| r.canonical().to_vec()).collect(),
            orbit_reps: rays.orbit_reps().map(|r| r.canonical().to_vec()).collect(),
            group_order_used: rays.group_order_used(),
        }
    }

    /// Rebuilds the ray set against the cone of `h`. Every ray is checked
    /// to be an extreme ray of that cone.
    pub fn into_ray_set(self, h: &BinaryMatrix) -> Result<RaySet> {
        if self.n != h.cols() {
            return Err(Error::LengthMismatch {
                expected: h.cols(),
                got: self.n,
            });
        }
        let cone = ConeSystem::build(h)?;
        for r in &self.rays {
            if r.len() != self.n {
                return Err(Error::LengthMismatch {
                    expected: self.n,
                    got: r.len(),
                });
            }
            if !cone.is_minimal_pseudocodeword(r)? {
                return Err(Error::NotInCone(format!("{r:?} is not an extreme ray")));
            }
        }
        RaySet::from_integer_rays(self.rays, h, self.group_order_used)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Internal(e.to_string()))
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed JSON: {e}")))
}

fn csv_string<F>(write: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| Error::Internal(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn join(v: &[RayInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `weight,count` rows of the weight enumerator.
pub fn weight_enumerator_csv(code: &CodeSummary) -> Result<String> {
    csv_string(|w| {
        w.write_record(["weight", "count"])?;
        for (weight, count) in &code.weight_enumerator {
            w.write_record([weight.to_string(), count.to_string()])?;
        }
        Ok(())
    })
}

/// One row per orbit class; `representative` is space-separated.
pub fn spectrum_csv(report: &SpectrumReport) -> Result<String> {
    csv_string(|w| {
        w.write_record(["weight_fraction", "weight_decimal", "class", "orbit_size", "representative"])?;
        for e in &report.entries {
            let class = if e.is_codeword_multiple { "codeword" } else { "pseudo_codeword" };
            w.write_record([
                fraction_string(&e.pseudo_weight),
                decimal_string(&e.pseudo_weight, DECIMAL_DIGITS),
                class.to_string(),
                e.orbit_size.to_string(),
                join(&e.representative),
            ])?;
        }
        Ok(())
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn simulation_csv(reports: &[SimReport]) -> Result<String> {
    csv_string(|w| {
        w.write_record([
            "snr_db", "trials", "seed", "ml_errors", "lp_errors", "ml_fer", "lp_fer", "ml_ties",
            "lp_ties",
        ])?;
        for r in reports {
            w.write_record([
                r.snr_db.to_string(),
                r.trials.to_string(),
                r.seed.to_string(),
                opt(r.ml_errors),
                opt(r.lp_errors),
                opt(r.ml_fer),
                opt(r.lp_fer),
                opt(r.ml_ties),
                opt(r.lp_ties),
            ])?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::analyze_code;
    use crate::geometry::pg_parity_check;
    use crate::pseudoweight::spectrum;
    use crate::rays::enumerate_rays;

    #[test]
    fn round_trips() {
        let h = pg_parity_check(1).unwrap();
        let m = MatrixJson::new(2, &h);
        let back: MatrixJson = from_json(&to_json(&m).unwrap()).unwrap();
        assert_eq!(back.matrix().unwrap(), h);

        let cone = ConeSystem::build(&h).unwrap();
        let text = to_json(&ConeJson::new(&cone)).unwrap();
        assert!(text.contains("\"kind\": \"parity\""));

        let rays = enumerate_rays(&cone, true).unwrap();
        let j = RaySetJson::new(&rays);
        assert_eq!(j.orbit_reps.len(), 2);
        let back: RaySetJson = from_json(&to_json(&j).unwrap()).unwrap();
        assert_eq!(back.into_ray_set(&h).unwrap(), rays);
    }

    #[test]
    fn rejects_non_extreme_rays() {
        let h = pg_parity_check(1).unwrap();
        let j = RaySetJson {
            n: 7,
            rays: vec![vec![1; 7]],
            orbit_reps: vec![],
            group_order_used: 1,
        };
        assert!(matches!(j.into_ray_set(&h), Err(Error::NotInCone(_))));
    }

    #[test]
    fn csv_formats() {
        let h = pg_parity_check(1).unwrap();
        let code = analyze_code(&h).unwrap();
        assert_eq!(weight_enumerator_csv(&code).unwrap(), "weight,count\n0,1\n4,7\n");
        let rays = enumerate_rays(&ConeSystem::build(&h).unwrap(), true).unwrap();
        let s = spectrum_csv(&spectrum(&rays, &code).unwrap()).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "weight_fraction,weight_decimal,class,orbit_size,representative");
        assert_eq!(lines[1], "4,4,codeword,7,0 0 1 0 1 1 1");
        assert_eq!(lines[2], "25/4,6.25,pseudo_codeword,7,1 1 1 2 2 1 2");
    }
}
