//! Exhaustive analysis of the binary code defined by a parity-check matrix.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::Bits;
use crate::matrix::BinaryMatrix;
use crate::{Error, Result};

pub const DEFAULT_SWEEP_LIMIT: usize = 16;

/// Parameters, codewords and minimal codewords of a small code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    /// `None` when the code has no nonzero codeword.
    pub d_min: Option<usize>,
    pub weight_enumerator: BTreeMap<usize, u64>,
    #[serde(serialize_with = "serialize_words")]
    pub minimal_codewords: Vec<Vec<u8>>,
    #[serde(skip)]
    codewords: Vec<Bits>,
}

fn serialize_words<S: serde::Serializer>(words: &[Vec<u8>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(words.len()))?;
    for w in words {
        let text: String = w.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
        seq.serialize_element(&text)?;
    }
    seq.end()
}

impl CodeSummary {
    /// All codewords, sorted lexicographically as 0/1 vectors.
    pub fn codewords(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        self.codewords.iter().map(Bits::to_vec)
    }

    pub fn codeword_bits(&self) -> &[Bits] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        let b = Bits::from_indices(self.n, x.iter().enumerate().filter(|(_, &v)| v & 1 == 1).map(|(i, _)| i));
        self.codewords.binary_search_by(|c| lex_cmp(c, &b)).is_ok()
    }
}

fn lex_cmp(a: &Bits, b: &Bits) -> std::cmp::Ordering {
    // Lexicographic order of the 0/1 sequences (x_0, x_1, ...).
    for i in 0..a.len() {
        match (a.contains(i), b.contains(i)) {
            (false, true) => return std::cmp::Ordering::Less,
            (true, false) => return std::cmp::Ordering::Greater,
            _ => {}
        }
    }
    std::cmp::Ordering::Equal
}

/// Dimension `n - rank_GF2(H)` without enumerating codewords.
pub fn code_dimension(h: &BinaryMatrix) -> usize {
    h.cols() - h.rank_gf2()
}

pub fn analyze_code(h: &BinaryMatrix) -> Result<CodeSummary> {
    analyze_code_with_limit(h, DEFAULT_SWEEP_LIMIT)
}

/// Sweeps all `2^k` codewords in Gray-code order over a null-space basis.
pub fn analyze_code_with_limit(h: &BinaryMatrix, limit: usize) -> Result<CodeSummary> {
    let n = h.cols();
    let basis = h.nullspace_gf2();
    let k = basis.len();
    if k > limit {
        return Err(Error::CodeTooLarge { k, limit });
    }
    let mut codewords = Vec::with_capacity(1 << k);
    let mut current = Bits::new(n);
    codewords.push(current.clone());
    for i in 1u64..(1u64 << k) {
        current.xor_with(&basis[i.trailing_zeros() as usize]);
        codewords.push(current.clone());
    }
    codewords.sort_by(lex_cmp);

    let mut weight_enumerator = BTreeMap::new();
    for c in &codewords {
        *weight_enumerator.entry(c.count()).or_insert(0u64) += 1;
    }
    let d_min = weight_enumerator.keys().copied().find(|&w| w > 0);
    let minimal = minimal_supports(&codewords);
    Ok(CodeSummary {
        n,
        k,
        d_min,
        weight_enumerator,
        minimal_codewords: minimal.iter().map(Bits::to_vec).collect(),
        codewords,
    })
}

/// Minimal codewords of an analyzed code.
pub fn minimal_codewords(code: &CodeSummary) -> Vec<Vec<u8>> {
    minimal_supports(&code.codewords).iter().map(Bits::to_vec).collect()
}

/// Nonzero words whose support properly contains no other nonzero word's
/// support, in lexicographic order.
fn minimal_supports(words: &[Bits]) -> Vec<Bits> {
    let mut nonzero: Vec<&Bits> = words.iter().filter(|c| !c.is_empty()).collect();
    nonzero.sort_by_key(|c| c.count());
    let mut minimal: Vec<Bits> = Vec::new();
    for (i, c) in nonzero.iter().enumerate() {
        let w = c.count();
        let dominated = nonzero[..i]
            .iter()
            .take_while(|o| o.count() < w)
            .any(|o| o.is_subset(c));
        if !dominated {
            minimal.push((*c).clone());
        }
    }
    minimal.sort_by(lex_cmp);
    minimal
}
