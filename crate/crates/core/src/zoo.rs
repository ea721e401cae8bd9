//! Named example algebras with their expected properties, and a seeded
//! generator of random solvable algebras.

use num::{Integer, One, Signed, Zero};
use rand::Rng;

use crate::algebra::{JacobiCheck, LieAlgebra, LieAlgebraBuilder};
use crate::error::{Error, Result};
use crate::linalg::{min_poly, q, Matrix, Rat};
use crate::rootsys;
use crate::sampling::seeded_rng;

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("abelian{n}"), n)
}

/// `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebraBuilder::new("heisenberg3", 3)
        .names(&["x", "y", "z"])
        .bracket_i(0, 1, &[(2, 1)])
        .build(JacobiCheck::Full)
        .expect("valid")
}

/// `[x, y] = y`.
pub fn r2() -> LieAlgebra {
    LieAlgebraBuilder::new("r2", 2).names(&["x", "y"]).bracket_i(0, 1, &[(1, 1)]).build(JacobiCheck::Full).expect("valid")
}

/// Basis `e, h, f` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebraBuilder::new("sl2", 3)
        .names(&["e", "h", "f"])
        .bracket_i(0, 1, &[(0, -2)])
        .bracket_i(0, 2, &[(1, 1)])
        .bracket_i(1, 2, &[(2, -2)])
        .build(JacobiCheck::Full)
        .expect("valid")
}

/// The compact form: `[e1, e2] = e3` and cyclic.
pub fn so3() -> LieAlgebra {
    LieAlgebraBuilder::new("so3", 3)
        .names(&["e1", "e2", "e3"])
        .bracket_i(0, 1, &[(2, 1)])
        .bracket_i(1, 2, &[(0, 1)])
        .bracket_i(2, 0, &[(1, 1)])
        .build(JacobiCheck::Full)
        .expect("valid")
}

fn line(name: &str) -> LieAlgebra {
    LieAlgebraBuilder::new(name, 1).names(&[name]).build(JacobiCheck::Full).expect("valid")
}

/// `Fx ⋉ ℚᵐ` with `x` acting by `a` (columns are images of basis vectors).
pub fn one_dim_extension(name: &str, a: &Matrix, module_names: &[&str]) -> Result<LieAlgebra> {
    let x = line("x");
    let v = LieAlgebraBuilder::new("V", a.rows()).names(module_names).build(JacobiCheck::Full)?;
    Ok(LieAlgebra::semidirect_product(&x, &v, std::slice::from_ref(a))?.with_name(name))
}

/// `[x, y] = y`, `[x, z] = y + z`.
pub fn jordan_block3() -> LieAlgebra {
    one_dim_extension("jordan_block3", &Matrix::from_i64(&[&[1, 1], &[0, 1]]), &["y", "z"]).expect("valid")
}

/// `[x, y] = z`, `[x, z] = -y`.
pub fn rotation3() -> LieAlgebra {
    one_dim_extension("rotation3", &Matrix::from_i64(&[&[0, -1], &[1, 0]]), &["y", "z"]).expect("valid")
}

/// `h₃ ⋊ Fx` with `x` acting diagonally by `(1, -1, 0)` on `p, q, z`.
pub fn oscillator4() -> LieAlgebra {
    let h = LieAlgebraBuilder::new("h3", 3).names(&["p", "q", "z"]).bracket_i(0, 1, &[(2, 1)]).build(JacobiCheck::Full).expect("valid");
    let x = line("x");
    let d = Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
    LieAlgebra::semidirect_product(&x, &h, &[d]).expect("valid").with_name("oscillator4")
}

/// `L = ℚᵐ ⋊ Fx` with `x` acting by `a`; `a` must not be nilpotent.
pub fn thm45_family(a: &Matrix) -> Result<LieAlgebra> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::InvalidExample("action must be a nonempty square matrix".into()));
    }
    if a.is_nilpotent() {
        return Err(Error::InvalidExample("action matrix is nilpotent".into()));
    }
    let names: Vec<String> = (1..=a.rows()).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    one_dim_extension(&format!("ext[{}]", min_poly(a)), a, &refs)
}

fn sl2_action_natural() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ]
}

/// `sl₂ ⋉ ℚ²`, natural module, basis `e, h, f, v1, v2`.
pub fn sl2_natural() -> LieAlgebra {
    let v = LieAlgebraBuilder::new("V", 2).names(&["v1", "v2"]).build(JacobiCheck::Full).expect("valid");
    LieAlgebra::semidirect_product(&sl2(), &v, &sl2_action_natural()).expect("valid").with_name("sl2_natural")
}

/// `sl₂ ⊕ r₂`, basis `e, h, f, x, y`.
pub fn sl2_plus_r2() -> LieAlgebra {
    LieAlgebra::direct_sum(&sl2(), &r2()).with_name("sl2_plus_r2")
}

/// `so₃ ⋉ ℚ³` with the adjoint module.
pub fn so3_adjoint() -> LieAlgebra {
    let s = so3();
    let v = LieAlgebraBuilder::new("V", 3).names(&["v1", "v2", "v3"]).build(JacobiCheck::Full).expect("valid");
    let action: Vec<Matrix> = (0..3).map(|i| s.ad_basis(i).clone()).collect();
    LieAlgebra::semidirect_product(&s, &v, &action).expect("valid").with_name("so3_adjoint")
}

/// `ℚ ⊕ so₃ ⊕ sl₂`: central radical, an ad-semisimple and a split simple summand.
pub fn center_so3_sl2() -> LieAlgebra {
    let z = LieAlgebraBuilder::new("Q", 1).names(&["c"]).build(JacobiCheck::Full).expect("valid");
    LieAlgebra::direct_sum(&LieAlgebra::direct_sum(&z, &so3()), &sl2()).with_name("center_so3_sl2")
}

/// Split semisimple algebra from a descriptor such as `A2`, `G2` or `A1xA1`.
pub fn split(desc: &str) -> Result<LieAlgebra> {
    Ok(rootsys::SplitAlgebra::new(&rootsys::RootSystemData::parse(desc)?)?.algebra)
}

/// The same algebra in the basis given by the columns of `p`.
pub fn change_basis(l: &LieAlgebra, p: &Matrix) -> Result<LieAlgebra> {
    let n = l.dim();
    if p.rows() != n || p.cols() != n || p.determinant().is_zero() {
        return Err(Error::InvalidExample("basis change must be an invertible n×n matrix".into()));
    }
    let cols: Vec<Vec<Rat>> = (0..n).map(|j| p.column(j)).collect();
    let mut b = LieAlgebraBuilder::new(format!("{}'", l.name()), n);
    for i in 0..n {
        for j in i + 1..n {
            let v = l.br(&cols[i], &cols[j]);
            let c = p.solve(&v).expect("invertible");
            let terms: Vec<(usize, Rat)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            b.add_bracket(i, j, &terms);
        }
    }
    b.build(JacobiCheck::Full)
}

/// Scales a rational matrix to a primitive integer matrix.
fn primitive(m: &Matrix) -> Matrix {
    let flat = m.as_flat();
    let den = flat.iter().fold(num::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num::BigInt> = flat.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(num::BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if g.is_zero() { num::BigInt::one() } else { g.abs() };
    let data: Vec<Rat> = ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect();
    Matrix::from_flat(m.rows(), &data)
}

/// Random solvable algebra: an abelian layer extended repeatedly by one
/// element acting as a random integer derivation of the current algebra.
pub fn random_solvable(dim: usize, seed: u64) -> Result<LieAlgebra> {
    if dim == 0 || dim > 6 {
        return Err(Error::InvalidExample(format!("random_solvable supports 1 ≤ dim ≤ 6, got {dim}")));
    }
    let mut rng = seeded_rng(seed);
    let base = rng.gen_range(1..=dim.min(2));
    let mut l = LieAlgebra::abelian("base", base);
    while l.dim() < dim {
        let ders: Vec<Matrix> = l.derivations().iter().map(primitive).collect();
        let mut d = Matrix::zeros(l.dim(), l.dim());
        for m in &ders {
            d.add_scaled(&q(rng.gen_range(-3..=3)), m);
        }
        let x = LieAlgebra::abelian("x", 1);
        l = LieAlgebra::semidirect_product(&x, &l, &[d])?;
    }
    let names: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
    let mut b = LieAlgebraBuilder::new(format!("random_solvable(dim={dim},seed={seed})"), dim).names(&names);
    for (&(i, j), terms) in l.structure_constants() {
        b.add_bracket(i, j, terms);
    }
    b.build(JacobiCheck::Full)
}

/// A named example and its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleSpec {
    Abelian(usize),
    Heisenberg3,
    R2,
    Sl2,
    So3,
    Oscillator4,
    JordanBlock3,
    Rotation3,
    Thm45Family(Matrix),
    Sl2Natural,
    Sl2PlusR2,
    So3Adjoint,
    CenterSo3Sl2,
    Split(String),
}

impl ExampleSpec {
    /// Parses `abelian<n>`, the fixed names, `thm45_family:<rows>` with rows
    /// like `1,1;0,1`, or `split:<descriptor>`.
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownExample(name.to_string());
        if let Some(rest) = name.strip_prefix("split:") {
            return Ok(ExampleSpec::Split(rest.to_string()));
        }
        if let Some(rest) = name.strip_prefix("thm45_family:") {
            let rows: Vec<Vec<i64>> = rest
                .split(';')
                .map(|r| r.split(',').map(|x| x.trim().parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidExample(format!("bad matrix in {name:?}")))?;
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(Error::InvalidExample(format!("matrix in {name:?} is not square")));
            }
            return Ok(ExampleSpec::Thm45Family(Matrix::from_i64(&refs)));
        }
        if let Some(n) = name.strip_prefix("abelian") {
            return n.parse().map(ExampleSpec::Abelian).map_err(|_| unknown());
        }
        Ok(match name {
            "heisenberg3" => ExampleSpec::Heisenberg3,
            "r2" => ExampleSpec::R2,
            "sl2" => ExampleSpec::Sl2,
            "so3" => ExampleSpec::So3,
            "oscillator4" => ExampleSpec::Oscillator4,
            "jordan_block3" => ExampleSpec::JordanBlock3,
            "rotation3" => ExampleSpec::Rotation3,
            "sl2_natural" => ExampleSpec::Sl2Natural,
            "sl2_plus_r2" => ExampleSpec::Sl2PlusR2,
            "so3_adjoint" => ExampleSpec::So3Adjoint,
            "center_so3_sl2" => ExampleSpec::CenterSo3Sl2,
            _ => return Err(unknown()),
        })
    }
}

pub fn make_example(spec: &ExampleSpec) -> Result<LieAlgebra> {
    Ok(match spec {
        ExampleSpec::Abelian(n) => abelian(*n),
        ExampleSpec::Heisenberg3 => heisenberg3(),
        ExampleSpec::R2 => r2(),
        ExampleSpec::Sl2 => sl2(),
        ExampleSpec::So3 => so3(),
        ExampleSpec::Oscillator4 => oscillator4(),
        ExampleSpec::JordanBlock3 => jordan_block3(),
        ExampleSpec::Rotation3 => rotation3(),
        ExampleSpec::Thm45Family(a) => thm45_family(a)?,
        ExampleSpec::Sl2Natural => sl2_natural(),
        ExampleSpec::Sl2PlusR2 => sl2_plus_r2(),
        ExampleSpec::So3Adjoint => so3_adjoint(),
        ExampleSpec::CenterSo3Sl2 => center_so3_sl2(),
        ExampleSpec::Split(d) => split(d)?,
    })
}

/// Expected properties of a named example. `None` means no expectation.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub name: &'static str,
    pub dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub frattini_dim: usize,
    pub phi_free: bool,
    pub almost_algebraic: bool,
    pub a_algebra: bool,
    pub elementary: bool,
    pub e_algebra: bool,
    pub minimal_non_elementary: bool,
}

macro_rules! expect {
    ($name:expr, $dim:expr, $solv:expr, $nil:expr, $phi:expr, $pf:expr, $aa:expr, $a:expr, $el:expr, $e:expr, $mne:expr) => {
        Expectation {
            name: $name,
            dim: $dim,
            solvable: $solv,
            nilpotent: $nil,
            frattini_dim: $phi,
            phi_free: $pf,
            almost_algebraic: $aa,
            a_algebra: $a,
            elementary: $el,
            e_algebra: $e,
            minimal_non_elementary: $mne,
        }
    };
}

/// The golden table for the named examples.
pub fn expectations() -> Vec<Expectation> {
    vec![
        //       name              dim solv   nilp   φ  φ-free aa     A      elem   E      mne
        expect!("abelian3", 3, true, true, 0, true, true, true, true, true, false),
        expect!("heisenberg3", 3, true, true, 1, false, true, false, false, true, true),
        expect!("r2", 2, true, false, 0, true, true, true, true, true, false),
        expect!("sl2", 3, false, false, 0, true, true, true, true, true, false),
        expect!("so3", 3, false, false, 0, true, true, true, true, true, false),
        expect!("oscillator4", 4, true, false, 1, false, true, false, false, true, false),
        expect!("jordan_block3", 3, true, false, 1, false, false, true, false, true, true),
        expect!("rotation3", 3, true, false, 0, true, true, true, true, true, false),
        expect!("sl2_natural", 5, false, false, 0, true, true, false, false, false, false),
        expect!("sl2_plus_r2", 5, false, false, 0, true, true, true, true, true, false),
        expect!("so3_adjoint", 6, false, false, 0, true, true, true, true, true, false),
        expect!("center_so3_sl2", 7, false, false, 0, true, true, true, true, true, false),
    ]
}

/// Named examples plus a handful of split algebras and extensions: the
/// standard corpus for audits.
pub fn corpus() -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = expectations()
        .iter()
        .map(|e| make_example(&ExampleSpec::parse(e.name).expect("known name")).expect("valid"))
        .collect();
    out.push(abelian(1));
    for d in ["A1", "A1xA1", "A2", "B2"] {
        out.push(split(d).expect("valid descriptor"));
    }
    for rows in [
        &[&[2, 0][..], &[0, 3][..]][..],
        &[&[2, 1][..], &[0, 2][..]][..],
        &[&[1, 0, 0][..], &[0, 2, 1][..], &[0, 0, 2][..]][..],
        &[&[0, 0, 0, -1][..], &[1, 0, 0, 0][..], &[0, 1, 0, -2][..], &[0, 0, 1, 0][..]][..],
        &[&[1, 1, 0][..], &[0, 1, 1][..], &[0, 0, 1][..]][..],
    ] {
        out.push(thm45_family(&Matrix::from_i64(rows)).expect("non-nilpotent"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    #[test]
    fn named_examples_match_dimensions() {
        for e in expectations() {
            let l = make_example(&ExampleSpec::parse(e.name).unwrap()).unwrap();
            assert_eq!(l.dim(), e.dim, "{}", e.name);
            assert_eq!(l.is_solvable(), e.solvable, "{}", e.name);
            assert_eq!(l.is_nilpotent(), e.nilpotent, "{}", e.name);
        }
    }

    #[test]
    fn heisenberg_center_is_derived() {
        let h = heisenberg3();
        assert_eq!(h.center(), h.derived_algebra());
    }

    #[test]
    fn jordan_block_constants() {
        let l = jordan_block3();
        assert_eq!(l.bracket_basis(0, 2), crate::linalg::qv(&[0, 1, 1]));
    }

    #[test]
    fn thm45_rejects_nilpotent_action() {
        assert!(thm45_family(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).is_err());
        assert!(thm45_family(&Matrix::from_i64(&[&[1, 1], &[0, 1]])).is_ok());
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(matches!(ExampleSpec::parse("nope"), Err(Error::UnknownExample(_))));
        assert!(ExampleSpec::parse("thm45_family:1,2;3").is_err());
        assert_eq!(ExampleSpec::parse("abelian4").unwrap(), ExampleSpec::Abelian(4));
    }

    #[test]
    fn random_solvable_is_deterministic_and_solvable() {
        assert!(random_solvable(1, 3).unwrap().is_abelian());
        let a = random_solvable(4, 7).unwrap();
        assert_eq!(a, random_solvable(4, 7).unwrap());
        assert!(a.derived_series().last().unwrap().is_zero());
        for seed in 0..20 {
            assert!(random_solvable(5, seed).unwrap().is_solvable());
        }
    }

    #[test]
    fn change_basis_preserves_structure() {
        let s = sl2();
        let p = Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 1, 1]]);
        let t = change_basis(&s, &p).unwrap();
        assert_eq!(t.derived_algebra(), Subspace::full(3));
        assert_eq!(t.killing_form().determinant(), s.killing_form().determinant() * p.determinant() * p.determinant());
    }
}
