//! Exact JSON interchange for Hopf algebras (`hopf-forge/v1`).
//!
//! Scalars travel as strings in the exactlin grammar. Emission sorts every
//! array by index and writes scalars in lowest terms, so parsing and
//! re-emitting a canonical file reproduces it byte for byte.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::StarAlgebra;
use crate::exactlin::{Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;

pub const FORMAT: &str = "hopf-forge/v1";

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported format {0:?}")]
    Format(String),
    #[error("bad scalar {0:?}: {1}")]
    Scalar(String, String),
    #[error("inconsistent data: {0}")]
    Shape(String),
}

type Entries = Vec<(usize, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub format: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Entries,
    pub counit: Entries,
    /// `[i, j, [[k, c], …]]`: `e_i e_j = Σ c e_k`; zero products omitted.
    pub mult: Vec<(usize, usize, Entries)>,
    /// `[i, [[j, k, c], …]]`: `Δ(e_i) = Σ c e_j⊗e_k`.
    pub comult: Vec<(usize, Vec<(usize, usize, String)>)>,
    /// `[i, [[j, c], …]]`: column `i` of the matrix.
    pub star: Vec<(usize, Entries)>,
    pub antipode: Vec<(usize, Entries)>,
}

fn entries(v: &SparseVec) -> Entries {
    v.iter().map(|(k, c)| (k, c.to_string())).collect()
}

fn columns(m: &SparseMatrix) -> Vec<(usize, Entries)> {
    m.columns().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, entries(c))).collect()
}

impl HopfJson {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let a = &h.alg;
        let d = a.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let p = a.mult_basis(i, j);
                if !p.is_zero() {
                    mult.push((i, j, entries(p)));
                }
            }
        }
        let comult = h
            .comult
            .columns()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.iter().map(|(t, s)| (t / d, t % d, s.to_string())).collect()))
            .collect();
        HopfJson {
            format: FORMAT.into(),
            dim: d,
            basis: a.labels().to_vec(),
            unit: entries(a.unit()),
            counit: entries(&h.counit),
            mult,
            comult,
            star: columns(a.star_matrix()),
            antipode: columns(&h.antipode),
        }
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra, JsonError> {
        if self.format != FORMAT {
            return Err(JsonError::Format(self.format.clone()));
        }
        let d = self.dim;
        if self.basis.len() != d {
            return Err(JsonError::Shape(format!("{} labels for dimension {d}", self.basis.len())));
        }
        let idx = |i: usize, bound: usize, what: &str| {
            if i < bound {
                Ok(i)
            } else {
                Err(JsonError::Shape(format!("{what} index {i} out of range")))
            }
        };
        let vec = |es: &Entries, what: &str| -> Result<SparseVec, JsonError> {
            let pairs = es
                .iter()
                .map(|(k, s)| Ok((idx(*k, d, what)?, scalar(s)?)))
                .collect::<Result<Vec<_>, JsonError>>()?;
            Ok(SparseVec::from_pairs(d, pairs))
        };
        let matrix = |cols: &[(usize, Entries)], what: &str| -> Result<SparseMatrix, JsonError> {
            let mut out = vec![SparseVec::zero(d); d];
            for (i, es) in cols {
                out[idx(*i, d, what)?] = vec(es, what)?;
            }
            Ok(SparseMatrix::from_columns(d, out))
        };
        let mut mult = vec![SparseVec::zero(d); d * d];
        for (i, j, es) in &self.mult {
            mult[idx(*i, d, "mult")? * d + idx(*j, d, "mult")?] = vec(es, "mult")?;
        }
        let mut comult = vec![SparseVec::zero(d * d); d];
        for (i, es) in &self.comult {
            let pairs = es
                .iter()
                .map(|(j, k, s)| Ok((idx(*j, d, "comult")? * d + idx(*k, d, "comult")?, scalar(s)?)))
                .collect::<Result<Vec<_>, JsonError>>()?;
            comult[idx(*i, d, "comult")?] = SparseVec::from_pairs(d * d, pairs);
        }
        let alg = StarAlgebra::new(self.basis.clone(), mult, vec(&self.unit, "unit")?, matrix(&self.star, "star")?)
            .map_err(|e| JsonError::Shape(e.to_string()))?;
        HopfAlgebra::new(
            alg,
            SparseMatrix::from_columns(d * d, comult),
            vec(&self.counit, "counit")?,
            matrix(&self.antipode, "antipode")?,
        )
        .map_err(|e| JsonError::Shape(e.to_string()))
    }
}

fn scalar(s: &str) -> Result<Scalar, JsonError> {
    s.parse().map_err(|e: crate::exactlin::LinError| JsonError::Scalar(s.to_string(), e.to_string()))
}

/// Canonical text: compact JSON and a trailing newline.
pub fn emit(h: &HopfAlgebra) -> String {
    let mut s = serde_json::to_string(&HopfJson::from_hopf(h)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<HopfAlgebra, JsonError> {
    let j: HopfJson = serde_json::from_str(text)?;
    j.to_hopf()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::sn_group;
    use crate::hopf::group_hopf;

    #[test]
    fn round_trip_is_byte_identical() {
        let (g, _) = sn_group(3).unwrap();
        let h = group_hopf(&g);
        let text = emit(&h);
        let back = parse(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(emit(&back), text);
        assert!(text.starts_with("{\"format\":\"hopf-forge/v1\",\"dim\":6,"));
    }

    #[test]
    fn rejects_bad_input() {
        let (g, _) = sn_group(2).unwrap();
        let text = emit(&group_hopf(&g));
        assert!(matches!(parse(&text.replacen("\"1\"", "\"1/0\"", 1)), Err(JsonError::Scalar(..))));
        assert!(matches!(parse(&text.replace("hopf-forge/v1", "v0")), Err(JsonError::Format(_))));
        assert!(matches!(parse(&text.replace("\"dim\":2", "\"dim\":3")), Err(JsonError::Shape(_))));
        assert!(matches!(parse("{"), Err(JsonError::Syntax(_))));
        assert!(matches!(parse(&text.replace("[[1,\"1\"]]", "[[7,\"1\"]]")), Err(JsonError::Shape(_))));
    }
}
