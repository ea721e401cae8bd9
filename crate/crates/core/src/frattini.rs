//! The Frattini ideal: the φ-free test, tiered computation of φ(L), the
//! socle of abelian minimal ideals, and splitting over ideals.

use num::Zero;
use serde::Serialize;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::json::ser_space;
use crate::linalg::{add_scaled, associative_envelope, dickson_radical_unchecked, min_poly, Matrix, Rat, Subspace};
use crate::sampling::Config;
use crate::structure::{is_almost_algebraic, levi_decomposition, nilradical, simple_ideal_decomposition};
use crate::verdict::{TriState, Witness};

/// Which certified rule produced a Frattini result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FrattiniTier {
    Nilpotent,
    AlmostAlgebraic,
    PhiFreeQuotient,
    Codim1Module,
    BoundsOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FrattiniIdeal {
    Exact {
        #[serde(serialize_with = "ser_space")]
        space: Subspace,
    },
    Interval {
        #[serde(serialize_with = "ser_space")]
        lower: Subspace,
        #[serde(serialize_with = "ser_space")]
        upper: Subspace,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrattiniResult {
    pub ideal: FrattiniIdeal,
    pub tier: FrattiniTier,
}

impl FrattiniResult {
    fn exact(space: Subspace, tier: FrattiniTier) -> Self {
        FrattiniResult { ideal: FrattiniIdeal::Exact { space }, tier }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.ideal, FrattiniIdeal::Exact { .. })
    }

    pub fn exact_space(&self) -> Option<&Subspace> {
        match &self.ideal {
            FrattiniIdeal::Exact { space } => Some(space),
            FrattiniIdeal::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> &Subspace {
        match &self.ideal {
            FrattiniIdeal::Exact { space } => space,
            FrattiniIdeal::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &Subspace {
        match &self.ideal {
            FrattiniIdeal::Exact { space } => space,
            FrattiniIdeal::Interval { upper, .. } => upper,
        }
    }
}

fn nonabelian_pair(l: &LieAlgebra, s: &Subspace) -> Option<Witness> {
    let b = s.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !l.br(&b[i], &b[j]).iter().all(Zero::is_zero) {
                return Some(Witness::Pair { x: b[i].clone(), y: b[j].clone() });
            }
        }
    }
    None
}

/// φ-free iff almost algebraic with abelian nilradical.
pub fn is_phi_free(l: &LieAlgebra, cfg: &Config) -> TriState {
    let n = match nilradical(l) {
        Ok(n) => n,
        Err(e) => return TriState::unknown(format!("nilradical failed: {e}")),
    };
    if let Some(w) = nonabelian_pair(l, &n) {
        return TriState::proven_false("nilradical is nonabelian", Some(w));
    }
    let aa = is_almost_algebraic(l, cfg);
    match aa.as_bool() {
        Some(true) => TriState::proven_true("almost algebraic with abelian nilradical"),
        Some(false) => {
            let mut out = TriState::proven_false("not almost algebraic", aa.witness.clone());
            out.note = aa.note.clone();
            out
        }
        None => TriState::unknown("nilradical abelian but almost-algebraicity undecided"),
    }
}

/// Matrix of `ad x` on the invariant subspace `w`, in the canonical basis of `w`.
pub fn restricted_ad(l: &LieAlgebra, w: &Subspace, x: &[Rat]) -> Matrix {
    let cols: Vec<Vec<Rat>> =
        w.basis().iter().map(|b| w.coords(&l.br(x, b)).expect("subspace is invariant under ad x")).collect();
    Matrix::from_columns(w.dim(), &cols)
}

/// For `L = A ⋊ Fx` with `A = L²` abelian and `L` not nilpotent: the element
/// `x` and the operator `ad x` on `A`.
pub fn codim1_shape(l: &LieAlgebra) -> Option<(Vec<Rat>, Subspace, Matrix)> {
    let a = l.derived_algebra();
    if a.dim() + 1 != l.dim() || !l.is_abelian_subspace(&a) || l.is_nilpotent() {
        return None;
    }
    let idx = a.complement_indices();
    let x = crate::linalg::unit(l.dim(), idx[0]);
    let d = restricted_ad(l, &a, &x);
    Some((x, a, d))
}

/// Intersection of the maximal `d`-invariant subspaces of `v`: `g(d)v` with
/// `g` the squarefree part of the minimal polynomial.
fn single_operator_radical(d: &Matrix) -> Subspace {
    let g = min_poly(d).squarefree_part();
    let gd = g.eval_matrix(d);
    Subspace::span(d.rows(), (0..d.cols()).map(|j| gd.column(j)))
}

fn square(l: &LieAlgebra, s: &Subspace) -> Subspace {
    l.product_space(s, s)
}

fn phi_free_quotient(l: &LieAlgebra, i: &Subspace, cfg: &Config) -> Result<TriState> {
    if i.is_zero() {
        return Ok(is_phi_free(l, cfg));
    }
    Ok(is_phi_free(&l.quotient(i)?.algebra, cfg))
}

/// φ(L) by the first certified rule that applies, otherwise bounds.
pub fn frattini_ideal(l: &LieAlgebra, cfg: &Config) -> Result<FrattiniResult> {
    let n = nilradical(l)?;
    let n2 = square(l, &n);
    let result = if l.is_nilpotent() {
        FrattiniResult::exact(l.derived_algebra(), FrattiniTier::Nilpotent)
    } else if is_almost_algebraic(l, cfg).is_true() {
        FrattiniResult::exact(n2.clone(), FrattiniTier::AlmostAlgebraic)
    } else if !n2.is_zero() && phi_free_quotient(l, &n2, cfg)?.is_true() {
        FrattiniResult::exact(n2.clone(), FrattiniTier::PhiFreeQuotient)
    } else if let Some((_, a, d)) = codim1_shape(l) {
        let rad = single_operator_radical(&d);
        let space = Subspace::span(l.dim(), rad.basis().iter().map(|c| a.combine(c)));
        FrattiniResult::exact(space, FrattiniTier::Codim1Module)
    } else {
        // Every ideal with φ-free quotient contains φ(L).
        let mut candidates = vec![n2.clone()];
        let emb = l.induced_subalgebra(&n)?;
        candidates.extend(emb.algebra.lower_central_series().iter().map(|s| emb.include_space(s)));
        let r = crate::structure::radical(l);
        candidates.push(l.product_space(&l.full_space(), &r));
        let mut upper = n.clone();
        for c in &candidates {
            if l.is_ideal(c) && n.contains(c)? && phi_free_quotient(l, c, cfg)?.is_true() {
                upper = upper.intersection(c)?;
            }
        }
        if !upper.contains(&n2)? {
            return Err(Error::SelfCheck("Frattini upper bound misses N²".into()));
        }
        return Ok(FrattiniResult { ideal: FrattiniIdeal::Interval { lower: n2, upper }, tier: FrattiniTier::BoundsOnly });
    };
    let phi = result.lower();
    if !l.is_ideal(phi) || !n.contains(phi)? || !phi.contains(&n2)? {
        return Err(Error::SelfCheck(format!("Frattini ideal from tier {:?} failed verification", result.tier)));
    }
    Ok(result)
}

/// Sum of the minimal abelian ideals, with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Asoc {
    #[serde(serialize_with = "ser_space")]
    pub space: Subspace,
    pub certificate: TriState,
}

/// Every minimal abelian ideal is an irreducible submodule of `Z(N)`, and
/// every such submodule is one; their sum is the socle of `Z(N)` as a module
/// for the unital envelope `E` of `ad L`, i.e. the vectors killed by `J(E)`.
pub fn asoc(l: &LieAlgebra) -> Result<Asoc> {
    let n = nilradical(l)?;
    let z = l.centralizer(&n)?.intersection(&n)?;
    let cert = TriState::proven_true("socle of Z(N): annihilator of the Jacobson radical of the acting envelope");
    if z.is_zero() {
        return Ok(Asoc { space: z, certificate: cert });
    }
    let m = z.dim();
    let gens: Vec<Matrix> = (0..l.dim()).map(|i| restricted_ad(l, &z, &crate::linalg::unit(l.dim(), i))).collect();
    let env = associative_envelope(m, &gens, true);
    let j = dickson_radical_unchecked(m, &env.basis_matrices());
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for v in j.basis() {
        rows.extend(Matrix::from_flat(m, v).to_rows());
    }
    let soc_local = if rows.is_empty() {
        Subspace::full(m)
    } else {
        Subspace::span(m, Matrix::from_rows(&rows).expect("uniform rows").kernel())
    };
    let space = Subspace::span(l.dim(), soc_local.basis().iter().map(|c| z.combine(c)));
    if !l.is_ideal(&space) || !l.is_abelian_subspace(&space) {
        return Err(Error::SelfCheck("socle of Z(N) is not an abelian ideal".into()));
    }
    Ok(Asoc { space, certificate: cert })
}

fn complement_witness(l: &LieAlgebra, i: &Subspace, k: Subspace, rule: &str) -> Result<TriState> {
    if !l.is_subalgebra(&k) || !k.intersection(i)?.is_zero() || k.dim() + i.dim() != l.dim() {
        return Err(Error::SelfCheck(format!("complement from rule {rule:?} failed verification")));
    }
    Ok(TriState::proven_true(rule).with_witness(Witness::space(&k)))
}

/// Whether `I` has a complementary subalgebra.
pub fn splits_over_ideal(l: &LieAlgebra, i: &Subspace) -> Result<TriState> {
    if i.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: i.ambient_dim() });
    }
    if !l.is_ideal(i) {
        return Err(Error::NotIdeal);
    }
    let n = l.dim();
    if i.is_zero() {
        return complement_witness(l, i, l.full_space(), "zero ideal: K = L");
    }
    if i.is_full() {
        return complement_witness(l, i, Subspace::zero(n), "I = L: K = 0");
    }
    if i.dim() + 1 == n {
        let k = Subspace::coordinate(n, i.complement_indices());
        return complement_witness(l, i, k, "codimension one: any line is a subalgebra");
    }
    if l.is_abelian_subspace(i) {
        return split_abelian(l, i);
    }
    let r = crate::structure::radical(l);
    if i.contains(&r)? {
        let levi = levi_decomposition(l)?.levi;
        let emb = l.induced_subalgebra(&levi)?;
        let mut k = Subspace::zero(n);
        for s in simple_ideal_decomposition(&emb.algebra)? {
            let s = emb.include_space(&s);
            if !i.contains(&s)? {
                k = k.sum(&s)?;
            }
        }
        return complement_witness(l, i, k, "I ⊇ R: sum of the Levi simple ideals outside I");
    }
    Ok(TriState::unknown("no complement search applies to this ideal"))
}

/// Complements of an abelian ideal are graphs `t_i + a_i` over a transversal,
/// with closure an affine linear condition on the `a_i ∈ I`.
fn split_abelian(l: &LieAlgebra, i: &Subspace) -> Result<TriState> {
    let n = l.dim();
    let quot = l.quotient(i)?;
    let s = quot.transversal.len();
    let ib = i.basis();
    let m = ib.len();
    let ts: Vec<Vec<Rat>> = quot.transversal.iter().map(|&t| crate::linalg::unit(n, t)).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            let c = quot.algebra.bracket_basis(a, b);
            let mut defect = l.br(&ts[a], &ts[b]);
            for (k, ck) in c.iter().enumerate() {
                add_scaled(&mut defect, &-ck.clone(), &ts[k]);
            }
            // Unknown u[p*m + r]: coefficient of ib[r] in a_p.
            let mut cols = vec![vec![Rat::zero(); n]; s * m];
            for (r, v) in ib.iter().enumerate() {
                add_scaled(&mut cols[b * m + r], &Rat::from_integer(1.into()), &l.br(&ts[a], v));
                add_scaled(&mut cols[a * m + r], &Rat::from_integer(1.into()), &l.br(v, &ts[b]));
                for (k, ck) in c.iter().enumerate() {
                    add_scaled(&mut cols[k * m + r], &-ck.clone(), v);
                }
            }
            for p in 0..n {
                rows.push(cols.iter().map(|col| col[p].clone()).collect());
                rhs.push(-defect[p].clone());
            }
        }
    }
    let sol = if rows.is_empty() {
        Some(vec![Rat::zero(); s * m])
    } else {
        Matrix::from_rows(&rows).expect("uniform rows").solve(&rhs)
    };
    match sol {
        Some(u) => {
            let k = Subspace::span(
                n,
                ts.iter().enumerate().map(|(p, t)| {
                    let mut v = t.clone();
                    for (r, b) in ib.iter().enumerate() {
                        add_scaled(&mut v, &u[p * m + r], b);
                    }
                    v
                }),
            );
            complement_witness(l, i, k, "abelian ideal: affine closure system solved")
        }
        None => Ok(TriState::proven_false(
            "abelian ideal: every complement is a graph over the transversal and the closure system is inconsistent",
            None,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::zoo;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn phi_free_examples() {
        assert!(is_phi_free(&zoo::heisenberg3(), &cfg()).is_false());
        assert!(is_phi_free(&zoo::r2(), &cfg()).is_true());
        let jb = is_phi_free(&zoo::jordan_block3(), &cfg());
        assert!(jb.is_false() && jb.witness.is_some());
    }

    #[test]
    fn frattini_tiers() {
        let h = frattini_ideal(&zoo::heisenberg3(), &cfg()).unwrap();
        assert_eq!(h.tier, FrattiniTier::Nilpotent);
        assert_eq!(h.exact_space().unwrap(), &Subspace::coordinate(3, [2]));
        let s = frattini_ideal(&zoo::sl2(), &cfg()).unwrap();
        assert_eq!(s.tier, FrattiniTier::AlmostAlgebraic);
        assert!(s.exact_space().unwrap().is_zero());
        let jb = frattini_ideal(&zoo::jordan_block3(), &cfg()).unwrap();
        assert_eq!(jb.tier, FrattiniTier::Codim1Module);
        assert_eq!(jb.exact_space().unwrap(), &Subspace::coordinate(3, [1]));
        let osc = frattini_ideal(&zoo::oscillator4(), &cfg()).unwrap();
        assert_eq!(osc.exact_space().unwrap(), &Subspace::coordinate(4, [3]));
    }

    #[test]
    fn asoc_examples() {
        assert!(asoc(&zoo::abelian(3)).unwrap().space.is_full());
        assert_eq!(asoc(&zoo::jordan_block3()).unwrap().space, Subspace::coordinate(3, [1]));
        assert_eq!(asoc(&zoo::rotation3()).unwrap().space, Subspace::coordinate(3, [1, 2]));
        assert!(asoc(&zoo::sl2()).unwrap().space.is_zero());
        assert_eq!(asoc(&zoo::heisenberg3()).unwrap().space, Subspace::coordinate(3, [2]));
    }

    #[test]
    fn splitting() {
        let h = zoo::heisenberg3();
        assert!(splits_over_ideal(&h, &h.center()).unwrap().is_false());
        let m = zoo::sl2_plus_r2();
        let v = splits_over_ideal(&m, &Subspace::coordinate(5, [3, 4])).unwrap();
        assert!(v.is_true());
        assert_eq!(v.witness.unwrap(), Witness::space(&Subspace::coordinate(5, [0, 1, 2])));
        assert!(splits_over_ideal(&h, &Subspace::zero(3)).unwrap().is_true());
        let nat = zoo::sl2_natural();
        assert!(splits_over_ideal(&nat, &Subspace::coordinate(5, [3, 4])).unwrap().is_true());
        assert!(matches!(splits_over_ideal(&h, &Subspace::coordinate(3, [0])), Err(Error::NotIdeal)));
    }
}
