//! Class predicates (A-, E-, elementary, minimal non-elementary) with
//! certificates, class reports, the consistency audit and the suite runner.

mod audit;
mod report;

pub use audit::{
    class_audit, maximal_subalgebras, nilradical_sampling, random_corpus, recognizer_cases, verify_theorem, AuditEntry,
    AuditReport, CheckResult, CheckStatus, Suite, SuiteReport, SPLIT_TYPES,
};
pub use report::{classify, ClassReport, StructureSummary};

use num::Signed;

use crate::algebra::LieAlgebra;
use crate::frattini::{codim1_shape, frattini_ideal, is_phi_free};
use crate::linalg::{min_poly, Matrix, Rat, Subspace};
use crate::sampling::{random_element, Config};
use crate::structure::{
    ad_jordan_parts, direct_decomposition, is_ad_semisimple, is_almost_algebraic, is_toral, levi_decomposition, nilradical, radical,
    simple_ideal_decomposition,
};
use crate::verdict::{TriState, Witness};

/// `L²` nilpotent.
pub fn is_strongly_solvable(l: &LieAlgebra) -> bool {
    l.is_nilpotent_subalgebra(&l.derived_algebra())
}

/// A subalgebra that is nilpotent and nonabelian: a refutation of the A-property.
pub fn is_nonabelian_nilpotent_subalgebra(l: &LieAlgebra, k: &Subspace) -> bool {
    l.is_subalgebra(k) && l.is_nilpotent_subalgebra(k) && !l.is_abelian_subspace(k)
}

fn a_refuted(rule: &str, k: &Subspace) -> TriState {
    TriState::proven_false(rule, Some(Witness::space(k)))
}

/// `F₀(ad x)`, the Fitting null component.
pub fn fitting_null(l: &LieAlgebra, x: &[Rat]) -> Subspace {
    let n = l.dim();
    Subspace::span(n, l.ad(x).pow(n as u32).kernel())
}

fn trace_form_definite(l: &LieAlgebra, c: &Subspace) -> bool {
    let b = c.basis();
    let ads: Vec<Matrix> = b.iter().map(|v| l.ad(v)).collect();
    let m = b.len();
    let mut gram = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = ads[i].trace_of_product(&ads[j]);
        }
    }
    let d = gram.congruence_diagonal();
    d.iter().all(Signed::is_positive) || d.iter().all(Signed::is_negative)
}

/// Complement `C` to an abelian nilradical with every element of `C`
/// ad-semisimple on `L`. Then each nilpotent subalgebra projects to a torus
/// and, by weights, is abelian.
fn semisimple_complement(l: &LieAlgebra, n: &Subspace, cfg: &Config) -> Option<(Subspace, &'static str)> {
    let dim = l.dim();
    let r = radical(l);
    if &r == n && !r.is_full() {
        let levi = levi_decomposition(l).ok()?.levi;
        if trace_form_definite(l, &levi) {
            return Some((levi, "Levi complement with definite trace form on L"));
        }
        return None;
    }
    if !r.is_full() {
        return None;
    }
    let z = l.center();
    let mut rng = cfg.fork(0xA1).rng();
    for _ in 0..4 {
        let x = random_element(&l.full_space(), &mut rng);
        let h = fitting_null(l, &x);
        let mut c = Subspace::zero(dim);
        for b in h.basis() {
            let s = ad_jordan_parts(l, b).s_preimage?;
            c.insert(&z.reduce(&s));
        }
        if c.dim() + n.dim() == dim && c.intersection(n).ok()?.is_zero() && is_toral(l, &c).is_true() {
            return Some((c, "toral complement to the abelian nilradical"));
        }
    }
    None
}

/// Every nilpotent subalgebra abelian.
pub fn is_a_algebra(l: &LieAlgebra, cfg: &Config) -> TriState {
    if l.is_abelian() {
        return TriState::proven_true("abelian");
    }
    let n = match nilradical(l) {
        Ok(n) => n,
        Err(e) => return TriState::unknown(format!("nilradical failed: {e}")),
    };
    if !l.is_abelian_subspace(&n) {
        return a_refuted("nilradical is nonabelian", &n);
    }
    if l.dim() <= 3 {
        return TriState::proven_true("dimension at most 3: proper nilpotent subalgebras have dim ≤ 2, hence abelian");
    }
    if n.dim() + 1 == l.dim() {
        return codim1_a_test(l, &n);
    }
    if let Some(v) = direct_sum_route(l, cfg) {
        return v;
    }
    if reductive_small_simples(l) {
        return TriState::proven_true("reductive with all simple ideals 3-dimensional");
    }
    if let Some((_, rule)) = semisimple_complement(l, &n, cfg) {
        return TriState::proven_true(rule);
    }
    if let Some(k) = find_nonabelian_nilpotent(l, cfg) {
        return a_refuted("nonabelian nilpotent subalgebra found", &k);
    }
    TriState::unknown("no certificate applies and no nonabelian nilpotent subalgebra was found")
}

/// `L = N + Fx`, `N` abelian: a nonabelian nilpotent subalgebra exists iff
/// `ad x` has a nilpotent block of size ≥ 2 on `N`.
fn codim1_a_test(l: &LieAlgebra, n: &Subspace) -> TriState {
    let x = crate::linalg::unit(l.dim(), n.complement_indices()[0]);
    let d = crate::frattini::restricted_ad(l, n, &x);
    let k1 = Subspace::span(n.dim(), d.kernel());
    let k2 = Subspace::span(n.dim(), (&d * &d).kernel());
    match k2.basis().iter().find(|v| !k1.contains_vec(v)) {
        None => TriState::proven_true("abelian nilradical of codimension 1 with ker D² = ker D"),
        Some(v) => {
            let v = n.combine(v);
            let dv = l.br(&x, &v);
            let k = Subspace::span(l.dim(), [x, v, dv]);
            a_refuted("v ∈ ker D² \\ ker D gives span{x, v, Dv}", &k)
        }
    }
}

/// `L = I₁ ⊕ … ⊕ I_k` as commuting ideals: a nilpotent subalgebra projects to
/// nilpotent subalgebras of the summands, so `L` is an A-algebra iff every
/// summand is.
fn direct_sum_route(l: &LieAlgebra, cfg: &Config) -> Option<TriState> {
    let parts = direct_decomposition(l, cfg).ok()?;
    if parts.len() < 2 {
        return None;
    }
    let mut undecided = false;
    for p in &parts {
        let emb = l.induced_subalgebra(p).ok()?;
        let v = is_a_algebra(&emb.algebra, cfg);
        match v.as_bool() {
            Some(false) => return Some(lift_refutation(&emb, v, "a direct summand is not an A-algebra")),
            None => undecided = true,
            Some(true) => {}
        }
    }
    Some(if undecided {
        TriState::unknown("direct sum with an undecided summand")
    } else {
        TriState::proven_true(format!("direct sum of {} ideals, each an A-algebra", parts.len()))
    })
}

fn lift_refutation(emb: &crate::algebra::Embedding, v: TriState, rule: &str) -> TriState {
    match v.witness.as_ref().and_then(|w| match w {
        Witness::Subspace { space } => Some(emb.include_space(space)),
        _ => None,
    }) {
        Some(k) => a_refuted(rule, &k),
        None => TriState::proven_false(rule, None),
    }
}

fn reductive_small_simples(l: &LieAlgebra) -> bool {
    let r = radical(l);
    if r != l.center() {
        return false;
    }
    let d = l.derived_algebra();
    let Ok(emb) = l.induced_subalgebra(&d) else {
        return false;
    };
    match simple_ideal_decomposition(&emb.algebra) {
        Ok(parts) => parts.iter().all(|p| p.dim() == 3),
        Err(_) => false,
    }
}

/// Every nonabelian nilpotent algebra contains a Heisenberg triple
/// `[x, y] = z` with `z` central in it, and here `z ∈ L² ⊆ N`. For sampled
/// `z` and `x ∈ C_L(z)` the condition on `y ∈ C_L(z)` is linear.
fn heisenberg_search(l: &LieAlgebra, cfg: &Config) -> Option<Subspace> {
    let n = l.dim();
    let target = l.derived_algebra();
    let mut rng = cfg.fork(0x43).rng();
    let mut zs: Vec<Vec<Rat>> = target.basis().to_vec();
    zs.extend((0..cfg.samples.min(12)).map(|_| random_element(&target, &mut rng)));
    for z in zs.iter().filter(|z| !crate::linalg::is_zero_vec(z)) {
        let c = l.centralizer(&Subspace::span(n, [z])).ok()?;
        let mut xs: Vec<Vec<Rat>> = c.basis().to_vec();
        xs.extend((0..4).map(|_| random_element(&c, &mut rng)));
        for x in &xs {
            // Columns: [x, c_k] for the basis c_k of C_L(z).
            let cols: Vec<Vec<Rat>> = c.basis().iter().map(|b| l.br(x, b)).collect();
            if cols.is_empty() {
                continue;
            }
            let m = crate::linalg::Matrix::from_columns(n, &cols);
            if let Some(coef) = m.solve(z) {
                let y = c.combine(&coef);
                let k = Subspace::span(n, [x.clone(), y, z.clone()]);
                if is_nonabelian_nilpotent_subalgebra(l, &k) {
                    return Some(k);
                }
            }
        }
    }
    None
}

/// Seeded search: closures of pairs of ad-nilpotent elements, then Fitting
/// null components of basis and random elements.
fn find_nonabelian_nilpotent(l: &LieAlgebra, cfg: &Config) -> Option<Subspace> {
    let n = l.dim();
    let full = l.full_space();
    let mut rng = cfg.fork(0xA2).rng();
    let mut nil: Vec<Vec<Rat>> = full.basis().iter().filter(|b| l.ad(b).is_nilpotent()).cloned().collect();
    for _ in 0..cfg.samples.min(8) {
        let x = random_element(&full, &mut rng);
        if l.ad(&x).is_nilpotent() {
            nil.push(x);
        }
    }
    for i in 0..nil.len() {
        for j in i + 1..nil.len() {
            let k = l.subalgebra_closure(&Subspace::span(n, [&nil[i], &nil[j]]));
            if is_nonabelian_nilpotent_subalgebra(l, &k) {
                return Some(k);
            }
        }
    }
    if let Some(k) = heisenberg_search(l, cfg) {
        return Some(k);
    }
    let mut probes: Vec<Vec<Rat>> = full.basis().to_vec();
    probes.extend((0..cfg.samples.min(8)).map(|_| random_element(&full, &mut rng)));
    for x in &probes {
        let f = fitting_null(l, x);
        if f.dim() < n && is_nonabelian_nilpotent_subalgebra(l, &f) {
            return Some(f);
        }
    }
    None
}

/// Almost algebraic A-algebra.
pub fn is_elementary(l: &LieAlgebra, cfg: &Config) -> TriState {
    let a = is_a_algebra(l, cfg);
    if a.is_false() {
        let mut v = TriState::proven_false("not an A-algebra", a.witness.clone());
        v.note = a.rule.clone();
        return v;
    }
    let aa = is_almost_algebraic(l, cfg);
    if aa.is_false() {
        let mut v = TriState::proven_false("not almost algebraic", aa.witness.clone());
        v.note = aa.note.clone();
        return v;
    }
    if a.is_true() && aa.is_true() {
        return TriState::proven_true("almost algebraic and an A-algebra");
    }
    let pf = is_phi_free(l, cfg);
    if pf.is_false() {
        return TriState::proven_false("not φ-free", pf.witness);
    }
    TriState::unknown(format!("A-algebra: {:?}, almost algebraic: {:?}", a.verdict, aa.verdict))
}

/// φ(B) ⊆ φ(L) for every subalgebra `B`, decided through the radical/Levi
/// trichotomy.
pub fn is_e_algebra(l: &LieAlgebra, cfg: &Config) -> TriState {
    if l.is_solvable() {
        return TriState::decided(is_strongly_solvable(l), "solvable: E-algebra iff L² is nilpotent");
    }
    let levi = match levi_decomposition(l) {
        Ok(d) => d,
        Err(e) => return TriState::unknown(format!("Levi decomposition failed: {e}")),
    };
    if levi.radical.is_zero() {
        let el = is_elementary(l, cfg);
        let mut v = el.clone();
        v.rule = format!("semisimple: E-algebra iff elementary ({})", el.rule);
        return v;
    }
    let emb = match l.induced_subalgebra(&levi.levi) {
        Ok(e) => e,
        Err(e) => return TriState::unknown(format!("Levi factor: {e}")),
    };
    let parts = match simple_ideal_decomposition(&emb.algebra) {
        Ok(p) => p,
        Err(e) => return TriState::unknown(format!("simple ideals: {e}")),
    };
    let mut undecided = Vec::new();
    for p in parts {
        let si = emb.include_space(&p);
        let alg = match l.induced_subalgebra(&si) {
            Ok(e) => e.algebra,
            Err(e) => return TriState::unknown(format!("simple ideal: {e}")),
        };
        let el = is_elementary(&alg, cfg);
        if el.is_false() {
            return TriState::proven_false("a simple Levi component is not elementary", Some(Witness::space(&si)));
        }
        let annihilates = l.product_space(&si, &levi.radical).is_zero();
        if annihilates {
            if el.is_unknown() {
                undecided.push(format!("elementarity of component of dim {}", si.dim()));
            }
            continue;
        }
        let ss = is_ad_semisimple(&alg, cfg);
        match ss.as_bool() {
            Some(true) => {}
            Some(false) => {
                let w = ss.witness.as_ref().and_then(Witness::element_vector).map(|v| Witness::element(&si.combine(v)));
                return TriState::proven_false(
                    "a simple Levi component acting nontrivially on R is not ad-semisimple",
                    w,
                );
            }
            None => undecided.push(format!("ad-semisimplicity of component of dim {}", si.dim())),
        }
    }
    if undecided.is_empty() {
        TriState::proven_true(
            "L = R ⊕ (S₁ ⊕ S₂): S₁ ad-semisimple, S₂ elementary and annihilating R, so [S₂, R] = 0 ⊆ φ(L)",
        )
    } else {
        TriState::unknown(undecided.join("; "))
    }
}

/// `L ≅ h₃`.
pub fn is_heisenberg3(l: &LieAlgebra) -> bool {
    let d = l.derived_algebra();
    l.dim() == 3 && l.is_nilpotent() && d.dim() == 1 && d == l.center()
}

/// Not elementary while every proper subalgebra is: exactly `h₃` and the
/// algebras `A ⋊ Fx`, `A = L²` abelian, whose `x`-module `A` is
/// `ℚ[t]/(p²)` with `p` irreducible (the only modules whose socle is both
/// nonzero and the unique maximal submodule).
pub fn is_minimal_non_elementary(l: &LieAlgebra, cfg: &Config) -> TriState {
    if is_heisenberg3(l) {
        return TriState::proven_true("three-dimensional Heisenberg algebra");
    }
    if l.is_nilpotent() {
        if l.is_abelian() {
            return TriState::proven_false("abelian algebras are elementary", None);
        }
        return match proper_heisenberg(l) {
            Some(k) => TriState::proven_false("proper Heisenberg subalgebra is not elementary", Some(Witness::space(&k))),
            None => TriState::unknown("nilpotent but no Heisenberg subalgebra located"),
        };
    }
    if let Some((x, a, d)) = codim1_shape(l) {
        let mp = min_poly(&d);
        let mut distinct = mp.factor();
        let total = distinct.len();
        distinct.dedup();
        if distinct.len() == 1 && total == 2 && mp.degree() == Some(a.dim()) {
            return match local_module_self_check(l, cfg) {
                Ok(()) => TriState::proven_true("L = L² ⋊ Fx with L² ≅ ℚ[t]/(p²): φ(L) = Asoc L is the unique maximal ideal below L²"),
                Err(e) => TriState::unknown(format!("recognizer self-check failed: {e}")),
            };
        }
        if mp.is_squarefree() {
            return TriState::proven_false("semisimple action on L²: φ(L) = 0", None);
        }
        // A cyclic submodule ℚ[D]v ≅ ℚ[t]/(p²) plus x is a proper subalgebra
        // of the recognized shape, hence not elementary.
        let p = distinct.iter().find(|f| mp.rem(&f.mul(f)).is_zero()).expect("repeated factor").clone();
        let pd = p.eval_matrix(&d);
        let pd2 = &pd * &pd;
        let k1 = Subspace::span(a.dim(), pd.kernel());
        let k2 = Subspace::span(a.dim(), pd2.kernel());
        let v = k2.basis().iter().find(|v| !k1.contains_vec(v)).expect("p² kernel exceeds p kernel").clone();
        let mut w = Subspace::zero(a.dim());
        let mut cur = v;
        while w.insert(&cur) {
            cur = d.mul_vec(&cur);
        }
        let mut m = Subspace::span(l.dim(), w.basis().iter().map(|c| a.combine(c)));
        m.insert(&x);
        let witness_ok = m.dim() < l.dim()
            && l.is_subalgebra(&m)
            && l.induced_subalgebra(&m).map(|e| is_phi_free(&e.algebra, cfg).is_false()).unwrap_or(false);
        if witness_ok {
            return TriState::proven_false("proper subalgebra ℚ[D]v + Fx is not φ-free", Some(Witness::space(&m)));
        }
        return TriState::unknown("witness construction failed verification");
    }
    let el = is_elementary(l, cfg);
    if el.is_true() {
        return TriState::proven_false("elementary", None);
    }
    let a = is_a_algebra(l, cfg);
    if let (true, Some(Witness::Subspace { space })) = (a.is_false(), a.witness.as_ref()) {
        if space.dim() < l.dim() {
            return TriState::proven_false(
                "proper nonabelian nilpotent subalgebra is not elementary",
                Some(Witness::space(space)),
            );
        }
    }
    TriState::proven_false("neither h₃ nor of the form L² ⋊ Fx with L² abelian", None)
}

/// Verifies the recognized shape mechanically: φ from the module tier is
/// nonzero and equals Asoc.
fn local_module_self_check(l: &LieAlgebra, cfg: &Config) -> crate::Result<()> {
    let phi = frattini_ideal(l, cfg)?;
    let space = phi.exact_space().ok_or_else(|| crate::Error::SelfCheck("Frattini ideal not exact".into()))?;
    let soc = crate::frattini::asoc(l)?.space;
    if space.is_zero() || space != &soc {
        return Err(crate::Error::OracleMismatch("φ(L) ≠ Asoc L or φ(L) = 0".into()));
    }
    Ok(())
}

/// `span{x, y, [x, y]}` with `y` in the second center and `[x, y] ≠ 0`.
fn proper_heisenberg(l: &LieAlgebra) -> Option<Subspace> {
    let z = l.center();
    let quot = l.quotient(&z).ok()?;
    let z2 = quot.pull(&quot.algebra.center());
    let y = z2.basis().iter().find(|v| !z.contains_vec(v))?.clone();
    let full = l.full_space();
    let x = full.basis().iter().find(|b| !l.br(b, &y).iter().all(num::Zero::is_zero))?.clone();
    let c = l.br(&x, &y);
    let k = Subspace::span(l.dim(), [x, y, c]);
    (is_nonabelian_nilpotent_subalgebra(l, &k) && k.dim() == 3).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn strongly_solvable() {
        assert!(is_strongly_solvable(&zoo::r2()));
        assert!(!is_strongly_solvable(&zoo::sl2()));
        assert!(is_strongly_solvable(&zoo::heisenberg3()));
    }

    #[test]
    fn a_algebra_examples() {
        let h = is_a_algebra(&zoo::heisenberg3(), &cfg());
        assert!(h.is_false());
        assert_eq!(h.witness, Some(Witness::space(&Subspace::full(3))));
        assert!(is_a_algebra(&zoo::sl2(), &cfg()).is_true());
        let nat = is_a_algebra(&zoo::sl2_natural(), &cfg());
        assert!(nat.is_false());
        let Some(Witness::Subspace { space }) = nat.witness else { panic!("subspace witness") };
        assert!(is_nonabelian_nilpotent_subalgebra(&zoo::sl2_natural(), &space));
        assert!(is_a_algebra(&zoo::jordan_block3(), &cfg()).is_true());
        assert!(is_a_algebra(&zoo::so3_adjoint(), &cfg()).is_true());
        assert!(is_a_algebra(&zoo::sl2_plus_r2(), &cfg()).is_true());
        let rr = crate::LieAlgebra::direct_sum(&zoo::r2(), &zoo::r2());
        assert!(is_a_algebra(&rr, &cfg()).is_true());
        let a2 = zoo::split("A2").unwrap();
        let v = is_a_algebra(&a2, &cfg());
        assert!(v.is_false());
    }

    #[test]
    fn elementary_examples() {
        assert!(is_elementary(&zoo::sl2(), &cfg()).is_true());
        assert!(is_elementary(&zoo::jordan_block3(), &cfg()).is_false());
        assert!(is_elementary(&zoo::abelian(4), &cfg()).is_true());
    }

    #[test]
    fn e_algebra_examples() {
        assert!(is_e_algebra(&zoo::sl2_plus_r2(), &cfg()).is_true());
        let nat = is_e_algebra(&zoo::sl2_natural(), &cfg());
        assert!(nat.is_false() && nat.witness.is_some());
        assert!(is_e_algebra(&zoo::heisenberg3(), &cfg()).is_true());
        assert!(is_e_algebra(&zoo::so3_adjoint(), &cfg()).is_true());
    }

    #[test]
    fn minimal_non_elementary_examples() {
        assert!(is_minimal_non_elementary(&zoo::heisenberg3(), &cfg()).is_true());
        assert!(is_minimal_non_elementary(&zoo::jordan_block3(), &cfg()).is_true());
        assert!(is_minimal_non_elementary(&zoo::rotation3(), &cfg()).is_false());
        let j3 = zoo::thm45_family(&Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]])).unwrap();
        let v = is_minimal_non_elementary(&j3, &cfg());
        assert!(v.is_false() && v.witness.is_some());
        let h5 = crate::LieAlgebra::direct_sum(&zoo::heisenberg3(), &zoo::abelian(1));
        assert!(is_minimal_non_elementary(&h5, &cfg()).is_false());
    }
}
