//! The JSON algebra file format and serialization helpers for exact values.
//!
//! ```json
//! {"name": "h3", "dim": 3, "basis": ["x", "y", "z"],
//!  "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]}
//! ```
//! Indices are zero-based with `i < j`; rationals are strings `"p/q"` or `"p"`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::algebra::{JacobiCheck, LieAlgebra, LieAlgebraBuilder};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let r = Rat::from_str(t).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .structure_constants()
            .iter()
            .map(|(&(i, j), terms)| BracketEntry {
                i,
                j,
                coeffs: terms.iter().map(|(k, c)| (*k, c.to_string())).collect(),
            })
            .collect();
        AlgebraFile { name: l.name().to_string(), dim: l.dim(), basis: l.basis_names().to_vec(), brackets }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: self.basis.len() });
        }
        let mut b = LieAlgebraBuilder::new(self.name.clone(), self.dim).names(&self.basis);
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.brackets {
            if e.i >= e.j {
                return Err(Error::Parse(format!("bracket entry ({}, {}) must have i < j", e.i, e.j)));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(Error::Parse(format!("duplicate bracket entry ({}, {})", e.i, e.j)));
            }
            let terms = e
                .coeffs
                .iter()
                .map(|(k, c)| Ok((*k, parse_rat(c)?)))
                .collect::<Result<Vec<_>>>()?;
            b.add_bracket(e.i, e.j, &terms);
        }
        b.build(JacobiCheck::Full)
    }
}

pub fn to_json(l: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l)).expect("algebra file serializes")
}

pub fn from_json(s: &str) -> Result<LieAlgebra> {
    let f: AlgebraFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_algebra()
}

pub fn rats_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn ser_rats<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn ser_space<S: Serializer>(sp: &Subspace, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = sp.basis().iter().map(|r| rats_to_strings(r)).collect();
    rows.serialize(s)
}

pub fn ser_matrix<S: Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| rats_to_strings(r)).collect();
    rows.serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn round_trip_is_bit_exact() {
        for l in [zoo::heisenberg3(), zoo::sl2(), zoo::jordan_block3()] {
            let s = to_json(&l);
            let back = from_json(&s).unwrap();
            assert_eq!(back, l);
            assert_eq!(to_json(&back), s);
        }
    }

    #[test]
    fn rational_coefficients_survive() {
        let src = r#"{"name":"q","dim":2,"basis":["x","y"],"brackets":[{"i":0,"j":1,"coeffs":{"1":"-3/2"}}]}"#;
        let l = from_json(src).unwrap();
        assert_eq!(l.bracket_basis(0, 1)[1], crate::linalg::qfrac(-3, 2));
        assert!(to_json(&l).contains("\"-3/2\""));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_json("{").is_err());
        let bad_order = r#"{"name":"q","dim":2,"basis":["x","y"],"brackets":[{"i":1,"j":0,"coeffs":{"1":"1"}}]}"#;
        assert!(from_json(bad_order).is_err());
        let bad_rat = r#"{"name":"q","dim":2,"basis":["x","y"],"brackets":[{"i":0,"j":1,"coeffs":{"1":"1/0"}}]}"#;
        assert!(from_json(bad_rat).is_err());
        let jacobi = r#"{"name":"q","dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"coeffs":{"2":"1"}},{"i":0,"j":2,"coeffs":{"0":"1"}},{"i":1,"j":2,"coeffs":{"1":"1"}}]}"#;
        assert!(matches!(from_json(jacobi), Err(Error::Jacobi(..))));
    }
}
