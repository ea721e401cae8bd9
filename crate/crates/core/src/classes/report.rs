use serde::Serialize;

use super::{is_a_algebra, is_e_algebra, is_elementary, is_minimal_non_elementary, is_strongly_solvable};
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::frattini::{asoc, frattini_ideal, is_phi_free, Asoc, FrattiniResult};
use crate::json::ser_space;
use crate::linalg::Subspace;
use crate::sampling::Config;
use crate::structure::{is_almost_algebraic, nilradical, radical};
use crate::verdict::TriState;

/// Structural data shown alongside the class verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    #[serde(serialize_with = "ser_space")]
    pub radical: Subspace,
    #[serde(serialize_with = "ser_space")]
    pub nilradical: Subspace,
    #[serde(serialize_with = "ser_space")]
    pub center: Subspace,
    /// Positive, negative and zero entries of a diagonalized Killing form.
    pub killing_signature: [usize; 3],
}

impl StructureSummary {
    pub fn of(l: &LieAlgebra) -> Result<Self> {
        let diag = l.killing_form().congruence_diagonal();
        let pos = diag.iter().filter(|x| num::Signed::is_positive(*x)).count();
        let neg = diag.iter().filter(|x| num::Signed::is_negative(*x)).count();
        Ok(StructureSummary {
            name: l.name().to_string(),
            dim: l.dim(),
            basis: l.basis_names().to_vec(),
            solvable: l.is_solvable(),
            nilpotent: l.is_nilpotent(),
            derived_series_dims: l.derived_series().iter().map(Subspace::dim).collect(),
            lower_central_dims: l.lower_central_series().iter().map(Subspace::dim).collect(),
            radical: radical(l),
            nilradical: nilradical(l)?,
            center: l.center(),
            killing_signature: [pos, neg, l.dim() - pos - neg],
        })
    }
}

/// All class verdicts for one algebra, mutually consistent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub structure: StructureSummary,
    pub frattini: FrattiniResult,
    pub asoc: Asoc,
    pub phi_free: TriState,
    pub almost_algebraic: TriState,
    pub a_algebra: TriState,
    pub elementary: TriState,
    pub e_algebra: TriState,
    pub strongly_solvable: TriState,
    pub minimal_non_elementary: TriState,
}

impl ClassReport {
    pub fn verdicts(&self) -> [(&'static str, &TriState); 7] {
        [
            ("phi_free", &self.phi_free),
            ("almost_algebraic", &self.almost_algebraic),
            ("a_algebra", &self.a_algebra),
            ("elementary", &self.elementary),
            ("e_algebra", &self.e_algebra),
            ("strongly_solvable", &self.strongly_solvable),
            ("minimal_non_elementary", &self.minimal_non_elementary),
        ]
    }

    pub fn has_unknown(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_unknown())
    }
}

fn inconsistent(l: &LieAlgebra, what: &str) -> Error {
    Error::OracleMismatch(format!("{}: {what}", l.name()))
}

pub fn classify(l: &LieAlgebra, cfg: &Config) -> Result<ClassReport> {
    let structure = StructureSummary::of(l)?;
    let frattini = frattini_ideal(l, cfg)?;
    let mut phi_free = is_phi_free(l, cfg);
    let almost_algebraic = is_almost_algebraic(l, cfg);
    let a_algebra = is_a_algebra(l, cfg);
    let elementary = is_elementary(l, cfg);
    let e_algebra = is_e_algebra(l, cfg);
    let strongly_solvable = TriState::decided(is_strongly_solvable(l), "L² nilpotent");
    let minimal_non_elementary = is_minimal_non_elementary(l, cfg);

    if let (Some(aa), Some(a), Some(el)) = (almost_algebraic.as_bool(), a_algebra.as_bool(), elementary.as_bool()) {
        if el != (aa && a) {
            return Err(inconsistent(l, "elementary disagrees with almost algebraic ∧ A"));
        }
    }
    if elementary.is_true() {
        if phi_free.is_false() {
            return Err(inconsistent(l, "elementary but not φ-free"));
        }
        if phi_free.is_unknown() {
            phi_free = TriState::proven_true("implied by elementary");
        }
    }
    if a_algebra.is_true() && e_algebra.is_false() {
        return Err(inconsistent(l, "A-algebra but not an E-algebra"));
    }
    if let (Some(space), Some(pf)) = (frattini.exact_space(), phi_free.as_bool()) {
        if space.is_zero() != pf {
            return Err(inconsistent(l, "exact Frattini ideal disagrees with the φ-free verdict"));
        }
    }
    if minimal_non_elementary.is_true() && elementary.is_true() {
        return Err(inconsistent(l, "minimal non-elementary yet elementary"));
    }
    Ok(ClassReport {
        structure,
        asoc: asoc(l)?,
        frattini,
        phi_free,
        almost_algebraic,
        a_algebra,
        elementary,
        e_algebra,
        strongly_solvable,
        minimal_non_elementary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn golden_table() {
        let cfg = Config::default();
        for e in zoo::expectations() {
            let l = zoo::make_example(&zoo::ExampleSpec::parse(e.name).unwrap()).unwrap();
            let r = classify(&l, &cfg).unwrap();
            assert_eq!(r.structure.dim, e.dim, "{}", e.name);
            assert_eq!(r.structure.solvable, e.solvable, "{}", e.name);
            assert_eq!(r.structure.nilpotent, e.nilpotent, "{}", e.name);
            assert_eq!(r.frattini.exact_space().map(Subspace::dim), Some(e.frattini_dim), "{}", e.name);
            assert_eq!(r.phi_free.as_bool(), Some(e.phi_free), "{} phi_free", e.name);
            assert_eq!(r.almost_algebraic.as_bool(), Some(e.almost_algebraic), "{} aa", e.name);
            assert_eq!(r.a_algebra.as_bool(), Some(e.a_algebra), "{} A", e.name);
            assert_eq!(r.elementary.as_bool(), Some(e.elementary), "{} elementary", e.name);
            assert_eq!(r.e_algebra.as_bool(), Some(e.e_algebra), "{} E", e.name);
            assert_eq!(r.minimal_non_elementary.as_bool(), Some(e.minimal_non_elementary), "{} mne", e.name);
        }
    }
}
