//! Radical, nilradical, Levi decomposition, Jordan parts inside `ad L`, and
//! the nil / toral / ad-semisimple / almost-algebraic tests.

use num::{One, Signed, Zero};

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, associative_envelope, dickson_radical_unchecked, jordan_chevalley, min_poly, unit, Matrix, Rat, Subspace,
};
use crate::sampling::{random_element, seeded_rng, Config};
use crate::verdict::{TriState, Witness};

/// `R(L) = {x : κ(x, L²) = 0}`, the char-0 criterion for the solvable radical.
pub fn radical(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let d = l.derived_algebra();
    if d.is_zero() {
        return Subspace::full(n);
    }
    let k = l.killing_form();
    let rows: Vec<Vec<Rat>> = d.basis().iter().map(|y| k.mul_vec(y)).collect();
    Subspace::span(n, Matrix::from_rows(&rows).expect("uniform rows").kernel())
}

/// A small set of Lie generators of the subalgebra `s`, chosen greedily from
/// its canonical basis.
pub fn lie_generators(l: &LieAlgebra, s: &Subspace) -> Vec<Vec<Rat>> {
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    let mut closure = Subspace::zero(l.dim());
    for v in s.basis() {
        if closure.contains_vec(v) {
            continue;
        }
        gens.push(v.clone());
        closure = l.subalgebra_closure(&Subspace::span(l.dim(), &gens));
        if closure.dim() == s.dim() {
            break;
        }
    }
    gens
}

/// `{x ∈ cand : ad x ∈ J}` where `J` is the Dickson radical of the
/// non-unital envelope generated by `ad g` for `g ∈ gens`.
fn dickson_preimage(l: &LieAlgebra, gens: &[Vec<Rat>], cand: &Subspace) -> Subspace {
    let n = l.dim();
    if cand.is_zero() {
        return Subspace::zero(n);
    }
    let mats: Vec<Matrix> = gens.iter().map(|g| l.ad(g)).collect();
    let env = associative_envelope(n, &mats, false);
    let j = dickson_radical_unchecked(n, &env.basis_matrices());
    let cols: Vec<Vec<Rat>> = cand.basis().iter().map(|v| j.reduce(l.ad(v).as_flat())).collect();
    let m = Matrix::from_columns(n * n, &cols);
    Subspace::span(n, m.kernel().iter().map(|c| cand.combine(c)))
}

/// The largest nilpotent ideal: `{x ∈ R : ad x ∈ J(Env(ad L))}`.
///
/// Every element of that set acts nilpotently, and it is an ideal, so it lies
/// in `N`; conversely `ad N` kills every composition factor of the adjoint
/// module, hence lies in the Jacobson radical.
pub fn nilradical(l: &LieAlgebra) -> Result<Subspace> {
    let r = radical(l);
    if r.is_zero() {
        return Ok(r);
    }
    let n = if l.is_nilpotent() {
        Subspace::full(l.dim())
    } else {
        dickson_preimage(l, &lie_generators(l, &l.full_space()), &r)
    };
    if !l.is_ideal(&n) {
        return Err(Error::SelfCheck("nilradical is not an ideal".into()));
    }
    if !l.is_nilpotent_subalgebra(&n) {
        return Err(Error::SelfCheck("nilradical is not nilpotent".into()));
    }
    if !n.contains(&l.product_space(&l.full_space(), &r))? {
        return Err(Error::SelfCheck("nilradical does not contain [L, R]".into()));
    }
    Ok(n)
}

/// `L = R ⊕ S` with `R` the radical and `S` a Levi subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub radical: Subspace,
    pub levi: Subspace,
}

/// Levi subalgebra by successive linear corrections along the derived series
/// of the radical.
pub fn levi_decomposition(l: &LieAlgebra) -> Result<LeviDecomposition> {
    let n = l.dim();
    let r = radical(l);
    if r.is_full() {
        return Ok(LeviDecomposition { radical: r, levi: Subspace::zero(n) });
    }
    if r.is_zero() {
        return Ok(LeviDecomposition { radical: r, levi: Subspace::full(n) });
    }
    let quot = l.quotient(&r)?;
    let s = quot.transversal.len();
    let consts: Vec<Vec<Vec<Rat>>> =
        (0..s).map(|i| (0..s).map(|j| quot.algebra.bracket_basis(i, j)).collect()).collect();
    let one = Rat::one();
    let mut xs: Vec<Vec<Rat>> = quot.transversal.iter().map(|&t| unit(n, t)).collect();

    let emb = l.induced_subalgebra(&r)?;
    let series: Vec<Subspace> = emb.algebra.derived_series().iter().map(|d| emb.include_space(d)).collect();

    for w in series.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let rb = cur.basis();
        let m = rb.len();
        // Unknown y[i*m + a] is the coefficient of rb[a] in the correction of x_i.
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for i in 0..s {
            for j in i + 1..s {
                let mut defect = l.br(&xs[i], &xs[j]);
                for (k, c) in consts[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        add_scaled(&mut defect, &-c.clone(), &xs[k]);
                    }
                }
                let defect = next.reduce(&defect);
                // Column images of each unknown, reduced modulo the next term.
                let mut cols = vec![vec![Rat::zero(); n]; s * m];
                for (a, b) in rb.iter().enumerate() {
                    add_scaled(&mut cols[j * m + a], &one, &next.reduce(&l.br(&xs[i], b)));
                    add_scaled(&mut cols[i * m + a], &one, &next.reduce(&l.br(b, &xs[j])));
                    let rb_a = next.reduce(b);
                    for (k, c) in consts[i][j].iter().enumerate() {
                        add_scaled(&mut cols[k * m + a], &-c.clone(), &rb_a);
                    }
                }
                for p in 0..n {
                    let mut row = vec![Rat::zero(); s * m];
                    for (idx, v) in cols.iter().enumerate() {
                        row[idx] = v[p].clone();
                    }
                    rows.push(row);
                    rhs.push(-defect[p].clone());
                }
            }
        }
        if rows.is_empty() || m == 0 {
            continue;
        }
        let mat = Matrix::from_rows(&rows).expect("uniform rows");
        let y = mat
            .solve(&rhs)
            .ok_or_else(|| Error::SelfCheck("Levi correction system is inconsistent".into()))?;
        for (i, x) in xs.iter_mut().enumerate() {
            for (a, b) in rb.iter().enumerate() {
                add_scaled(x, &y[i * m + a], b);
            }
        }
    }
    let levi = Subspace::span(n, &xs);
    if !l.is_subalgebra(&levi) || levi.dim() != s || !r.intersection(&levi)?.is_zero() {
        return Err(Error::SelfCheck("Levi complement failed verification".into()));
    }
    Ok(LeviDecomposition { radical: r, levi })
}

/// Coefficients `c` with `Σ c_i ad e_i = m`, if `m ∈ ad L`. Unique modulo `Z(L)`.
pub fn ad_preimage(l: &LieAlgebra, m: &Matrix) -> Option<Vec<Rat>> {
    let n = l.dim();
    let cols: Vec<Vec<Rat>> = (0..n).map(|i| l.ad_basis(i).as_flat().to_vec()).collect();
    Matrix::from_columns(n * n, &cols).solve(m.as_flat())
}

/// Jordan parts of `ad x` and their preimages in `L` when they lie in `ad L`.
#[derive(Clone, Debug)]
pub struct AdJordanParts {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    pub s_preimage: Option<Vec<Rat>>,
    pub n_preimage: Option<Vec<Rat>>,
}

impl AdJordanParts {
    pub fn s_in_l(&self) -> TriState {
        membership_verdict(&self.s_preimage, &self.semisimple)
    }

    pub fn n_in_l(&self) -> TriState {
        membership_verdict(&self.n_preimage, &self.nilpotent)
    }
}

fn membership_verdict(pre: &Option<Vec<Rat>>, m: &Matrix) -> TriState {
    match pre {
        Some(v) => TriState::proven_true("linear system solved").with_witness(Witness::element(v)),
        None => TriState::proven_false("linear system inconsistent", Some(Witness::Matrix { matrix: m.clone() })),
    }
}

pub fn ad_jordan_parts(l: &LieAlgebra, x: &[Rat]) -> AdJordanParts {
    let jp = jordan_chevalley(&l.ad(x));
    let s_preimage = ad_preimage(l, &jp.semisimple);
    let n_preimage = ad_preimage(l, &jp.nilpotent);
    AdJordanParts { semisimple: jp.semisimple, nilpotent: jp.nilpotent, s_preimage, n_preimage }
}

fn ad_span(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    Subspace::span(n * n, (0..n).map(|i| l.ad_basis(i).as_flat().to_vec()))
}

/// Basis vectors first, then `cfg.samples` seeded random elements.
fn probe_elements(l: &LieAlgebra, space: &Subspace, cfg: &Config) -> Vec<Vec<Rat>> {
    let mut rng = cfg.rng();
    let mut out: Vec<Vec<Rat>> = space.basis().to_vec();
    out.extend((0..cfg.samples).map(|_| random_element(space, &mut rng)));
    out.retain(|v| v.len() == l.dim());
    out
}

/// Whether `ad L` contains the Jordan parts of `ad x` for every `x`.
pub fn is_almost_algebraic(l: &LieAlgebra, cfg: &Config) -> TriState {
    if l.is_abelian() {
        return TriState::proven_true("abelian: ad L = 0");
    }
    if radical(l).is_zero() {
        return TriState::proven_true("semisimple: ad L = Der L, and Jordan parts of derivations are derivations");
    }
    let n = l.dim();
    let ad_l = ad_span(l);
    for x in probe_elements(l, &l.full_space(), cfg) {
        let jp = jordan_chevalley(&l.ad(&x));
        for (part, name) in [(&jp.semisimple, "semisimple"), (&jp.nilpotent, "nilpotent")] {
            if !ad_l.contains_vec(part.as_flat()) {
                return TriState::proven_false("jordan part escapes ad L", Some(Witness::element(&x)))
                    .with_note(format!("{name} Jordan part of ad x is not in ad L"));
            }
        }
    }
    // Splittable closure: adjoin Jordan parts of a basis, re-close under
    // commutators, repeat.
    let mut closure = ad_l.clone();
    loop {
        let before = closure.dim();
        let basis: Vec<Matrix> = closure.basis().iter().map(|v| Matrix::from_flat(n, v)).collect();
        for b in &basis {
            let jp = jordan_chevalley(b);
            closure.insert(jp.semisimple.as_flat());
            closure.insert(jp.nilpotent.as_flat());
        }
        let basis: Vec<Matrix> = closure.basis().iter().map(|v| Matrix::from_flat(n, v)).collect();
        for a in &basis {
            for b in &basis {
                closure.insert(a.commutator(b).as_flat());
            }
        }
        if closure.dim() == before {
            break;
        }
    }
    if closure == ad_l {
        TriState::proven_true("splittable closure equals ad L and every probed element splits in ad L")
            .with_note(format!("{} basis elements and {} seeded samples probed", n, cfg.samples))
    } else {
        TriState::unknown("splittable closure strictly larger than ad L although all probes split")
    }
}

/// `U` nil in `L`: the associative envelope of `ad_L U` is nilpotent, which
/// certifies every element of `U` at once.
pub fn is_nil_subalgebra(l: &LieAlgebra, u: &Subspace) -> Result<bool> {
    if u.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: u.ambient_dim() });
    }
    if !l.is_subalgebra(u) {
        return Err(Error::NotSubalgebra);
    }
    if u.is_zero() {
        return Ok(true);
    }
    if u.basis().iter().any(|b| !l.ad(b).is_nilpotent()) {
        return Ok(false);
    }
    let n = l.dim();
    let mats: Vec<Matrix> = lie_generators(l, u).iter().map(|g| l.ad(g)).collect();
    let env = associative_envelope(n, &mats, false);
    let basis = env.basis_matrices();
    let j = dickson_radical_unchecked(n, &basis);
    Ok(&j == env.space() && basis.iter().all(Matrix::is_nilpotent))
}

/// `U(S)`: the ad-nilpotent elements of the radical of `S`.
///
/// Such elements form a nil ideal of `S`, so they sit inside `N(S)`. Since
/// `ad_L N(S)` is a nilpotent linear Lie algebra, its nilpotent elements are
/// exactly those in the Jacobson radical of its envelope.
pub fn u_of(l: &LieAlgebra, s: &Subspace, cfg: &Config) -> Result<Subspace> {
    if !l.is_subalgebra(s) {
        return Err(Error::NotSubalgebra);
    }
    let n = l.dim();
    let emb = l.induced_subalgebra(s)?;
    let rs = emb.include_space(&radical(&emb.algebra));
    if rs.is_zero() {
        return Ok(rs);
    }
    let ns = emb.include_space(&nilradical(&emb.algebra)?);
    let u = dickson_preimage(l, &lie_generators(l, &ns), &ns);
    for b in s.basis() {
        for v in u.basis() {
            if !u.contains_vec(&l.br(b, v)) {
                return Err(Error::NonAlgebraic("U(S) is not an ideal of S".into()));
            }
        }
    }
    let mut rng = seeded_rng(cfg.seed);
    for _ in 0..cfg.samples {
        let x = random_element(&rs, &mut rng);
        if !u.contains_vec(&x) && l.ad(&x).is_nilpotent() {
            return Err(Error::NonAlgebraic(format!(
                "ad-nilpotent element of R(S) outside the computed U(S) (dim {} in L of dim {n})",
                u.dim()
            )));
        }
    }
    Ok(u)
}

fn nonsemisimple_witness(l: &LieAlgebra, probes: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    probes.iter().find(|x| !min_poly(&l.ad(x)).is_squarefree()).cloned()
}

/// Toral: abelian with every `ad_L t` semisimple.
pub fn is_toral(l: &LieAlgebra, t: &Subspace) -> TriState {
    let b = t.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !crate::linalg::is_zero_vec(&l.br(&b[i], &b[j])) {
                return TriState::proven_false("not abelian", Some(Witness::Pair { x: b[i].clone(), y: b[j].clone() }));
            }
        }
    }
    if let Some(x) = nonsemisimple_witness(l, b) {
        return TriState::proven_false("ad t not semisimple", Some(Witness::element(&x)));
    }
    let mats: Vec<Matrix> = b.iter().map(|v| l.ad(v)).collect();
    let env = associative_envelope(l.dim(), &mats, true);
    if dickson_radical_unchecked(l.dim(), &env.basis_matrices()).is_zero() {
        TriState::proven_true("commuting semisimple adjoints: unital envelope has zero Dickson radical")
    } else {
        TriState::unknown("unital envelope has a nonzero radical")
    }
}

/// Every `ad x` semisimple.
pub fn is_ad_semisimple(l: &LieAlgebra, cfg: &Config) -> TriState {
    let probes = probe_elements(l, &l.full_space(), cfg);
    if let Some(x) = nonsemisimple_witness(l, &probes) {
        return TriState::proven_false("nonzero nilpotent Jordan part", Some(Witness::element(&x)));
    }
    let n = l.dim();
    if l.is_abelian() {
        let mats: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i).clone()).collect();
        let env = associative_envelope(n, &mats, true);
        if dickson_radical_unchecked(n, &env.basis_matrices()).is_zero() {
            return TriState::proven_true("abelian: commutative unital envelope has zero Dickson radical");
        }
    }
    let z = l.center();
    let d = l.derived_algebra();
    if z.dim() + d.dim() == n && z.intersection(&d).map(|i| i.is_zero()).unwrap_or(false) && radical(l) == z {
        let k = l.killing_form();
        let basis = d.basis();
        let m = basis.len();
        let mut gram = Matrix::zeros(m, m);
        for i in 0..m {
            let ki = k.mul_vec(&basis[i]);
            for j in 0..m {
                gram[(i, j)] = ki.iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
            }
        }
        let diag = gram.congruence_diagonal();
        let definite = diag.iter().all(|x| x.is_positive()) || diag.iter().all(|x| x.is_negative());
        if definite {
            return TriState::proven_true(
                "center ⊕ semisimple part with definite Killing form: no nonzero ad-nilpotent elements",
            );
        }
    }
    TriState::unknown("no certificate applies and no nilpotent Jordan part was found")
}

/// Simple ideals of a semisimple algebra, in canonical order.
///
/// Candidate ideals (closures of basis vectors and their Killing complements)
/// cut the algebra into atoms; remaining atoms are split along the centroid
/// using the factorization of minimal polynomials of centroid elements.
pub fn simple_ideal_decomposition(l: &LieAlgebra) -> Result<Vec<Subspace>> {
    if !radical(l).is_zero() {
        return Err(Error::NotSemisimple);
    }
    let n = l.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let k = l.killing_form();
    let perp = |s: &Subspace| -> Subspace {
        let rows: Vec<Vec<Rat>> = s.basis().iter().map(|v| k.mul_vec(v)).collect();
        Subspace::span(n, Matrix::from_rows(&rows).expect("uniform rows").kernel())
    };
    let mut atoms = vec![Subspace::full(n)];
    for i in 0..n {
        let c = l.ideal_closure(&Subspace::coordinate(n, [i]));
        if c.is_full() {
            continue;
        }
        let cp = perp(&c);
        let mut next = Vec::new();
        for a in atoms {
            let x = a.intersection(&c)?;
            let y = a.intersection(&cp)?;
            if !x.is_zero() && !y.is_zero() {
                next.push(x);
                next.push(y);
            } else {
                next.push(a);
            }
        }
        atoms = next;
    }
    let mut done = Vec::new();
    let mut work = atoms;
    let mut rng = seeded_rng(0x51);
    while let Some(a) = work.pop() {
        match split_by_centroid(l, &a, &mut rng)? {
            Some(parts) => work.extend(parts),
            None => done.push(a),
        }
    }
    done.sort_by(|a, b| a.pivots().cmp(b.pivots()));
    Ok(done)
}

/// Centroid of the ideal `a` viewed as an algebra: maps commuting with its adjoint action.
fn centroid(alg: &LieAlgebra) -> Vec<Matrix> {
    let m = alg.dim();
    let gens = lie_generators(alg, &alg.full_space());
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for g in &gens {
        let adg = alg.ad(g);
        // (T·A − A·T)[p][q] with T[r][c] at index r*m + c.
        for p in 0..m {
            for q in 0..m {
                let mut row = vec![Rat::zero(); m * m];
                for r in 0..m {
                    if !adg[(r, q)].is_zero() {
                        row[p * m + r] += &adg[(r, q)];
                    }
                    if !adg[(p, r)].is_zero() {
                        row[r * m + q] -= &adg[(p, r)];
                    }
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(&rows).expect("uniform rows").kernel().iter().map(|v| Matrix::from_flat(m, v)).collect()
}

fn split_by_centroid(l: &LieAlgebra, a: &Subspace, rng: &mut rand_chacha::ChaCha8Rng) -> Result<Option<Vec<Subspace>>> {
    let emb = l.induced_subalgebra(a)?;
    let cent = centroid(&emb.algebra);
    if cent.len() <= 1 {
        return Ok(None);
    }
    let m = emb.algebra.dim();
    for _ in 0..16 {
        let mut c = Matrix::zeros(m, m);
        for t in &cent {
            c.add_scaled(&crate::linalg::q(rand::Rng::gen_range(rng, -5..=5)), t);
        }
        let mp = min_poly(&c);
        let mut factors = mp.factor();
        factors.dedup();
        if factors.len() > 1 {
            let parts = factors
                .iter()
                .map(|f| {
                    let ker = Subspace::span(m, f.eval_matrix(&c).kernel());
                    emb.include_space(&ker)
                })
                .collect();
            return Ok(Some(parts));
        }
        if mp.degree() == Some(cent.len()) {
            // ℚ[c] is a field filling the whole centroid: the atom is simple.
            return Ok(None);
        }
    }
    Ok(None)
}

/// Splits `L` into pairwise commuting ideals `L = I₁ ⊕ … ⊕ I_k` using the
/// primary decomposition of random elements of the centroid. A single part
/// means no splitting was found (not a proof of indecomposability).
pub fn direct_decomposition(l: &LieAlgebra, cfg: &Config) -> Result<Vec<Subspace>> {
    let mut rng = cfg.fork(0xD5).rng();
    let mut done = Vec::new();
    let mut work = vec![l.full_space()];
    while let Some(a) = work.pop() {
        match split_primary(l, &a, &mut rng)? {
            Some(parts) => work.extend(parts),
            None => done.push(a),
        }
    }
    done.sort_by(|a, b| a.pivots().cmp(b.pivots()));
    for (i, a) in done.iter().enumerate() {
        for b in &done[i + 1..] {
            if !l.product_space(a, b).is_zero() {
                return Err(Error::SelfCheck("direct summands do not commute".into()));
            }
        }
    }
    Ok(done)
}

fn split_primary(l: &LieAlgebra, a: &Subspace, rng: &mut rand_chacha::ChaCha8Rng) -> Result<Option<Vec<Subspace>>> {
    if a.dim() <= 1 {
        return Ok(None);
    }
    let emb = l.induced_subalgebra(a)?;
    let cent = centroid(&emb.algebra);
    if cent.len() <= 1 {
        return Ok(None);
    }
    let m = emb.algebra.dim();
    for _ in 0..16 {
        let mut c = Matrix::zeros(m, m);
        for t in &cent {
            c.add_scaled(&crate::linalg::q(rand::Rng::gen_range(rng, -5..=5)), t);
        }
        let mp = min_poly(&c);
        let mut factors = mp.factor();
        factors.dedup();
        if factors.len() > 1 {
            let parts = factors
                .iter()
                .map(|f| {
                    // Full multiplicity of f in the minimal polynomial.
                    let mut power = f.clone();
                    while mp.rem(&power.mul(f)).is_zero() {
                        power = power.mul(f);
                    }
                    emb.include_space(&Subspace::span(m, power.eval_matrix(&c).kernel()))
                })
                .collect();
            return Ok(Some(parts));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qv;
    use crate::zoo;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn radicals() {
        assert!(radical(&zoo::sl2()).is_zero());
        assert!(radical(&zoo::r2()).is_full());
        let m = zoo::sl2_plus_r2();
        assert_eq!(radical(&m), Subspace::coordinate(5, [3, 4]));
    }

    #[test]
    fn nilradicals() {
        assert!(nilradical(&zoo::heisenberg3()).unwrap().is_full());
        assert_eq!(nilradical(&zoo::r2()).unwrap(), Subspace::coordinate(2, [1]));
        // Killing form vanishes on the plane but the nilradical is the plane.
        let rot = zoo::rotation3();
        assert_eq!(nilradical(&rot).unwrap(), Subspace::coordinate(3, [1, 2]));
        assert_eq!(nilradical(&zoo::sl2_natural()).unwrap(), Subspace::coordinate(5, [3, 4]));
    }

    #[test]
    fn levi_of_sl2_natural() {
        let l = zoo::sl2_natural();
        let d = levi_decomposition(&l).unwrap();
        assert_eq!(d.radical, Subspace::coordinate(5, [3, 4]));
        assert_eq!(d.levi.dim(), 3);
        assert_eq!(l.product_space(&d.levi, &d.levi), d.levi);
    }

    #[test]
    fn levi_trivial_cases() {
        let s = levi_decomposition(&zoo::sl2()).unwrap();
        assert!(s.radical.is_zero() && s.levi.is_full());
        let r = levi_decomposition(&zoo::heisenberg3()).unwrap();
        assert!(r.radical.is_full() && r.levi.is_zero());
    }

    #[test]
    fn jordan_parts_in_ad() {
        let s = zoo::sl2();
        let h = ad_jordan_parts(&s, &qv(&[0, 1, 0]));
        assert!(h.nilpotent.is_zero());
        assert!(h.s_in_l().is_true() && h.n_in_l().is_true());
        let jb = zoo::jordan_block3();
        let x = ad_jordan_parts(&jb, &qv(&[1, 0, 0]));
        assert!(!x.nilpotent.is_zero());
        assert!(x.n_in_l().is_false());
        let e = ad_jordan_parts(&s, &qv(&[1, 0, 0]));
        assert!(e.semisimple.is_zero() && e.s_in_l().is_true());
    }

    #[test]
    fn almost_algebraic_examples() {
        assert!(is_almost_algebraic(&zoo::r2(), &cfg()).is_true());
        let jb = is_almost_algebraic(&zoo::jordan_block3(), &cfg());
        assert!(jb.is_false());
        assert!(jb.witness.is_some());
        assert!(is_almost_algebraic(&zoo::abelian(3), &cfg()).is_true());
        assert!(is_almost_algebraic(&zoo::sl2(), &cfg()).is_true());
    }

    #[test]
    fn nil_subalgebras() {
        let s = zoo::sl2();
        assert!(is_nil_subalgebra(&s, &Subspace::coordinate(3, [0])).unwrap());
        assert!(!is_nil_subalgebra(&s, &Subspace::coordinate(3, [1])).unwrap());
        assert!(is_nil_subalgebra(&s, &Subspace::coordinate(3, [0, 2])).is_err());
    }

    #[test]
    fn u_of_borel() {
        let s = zoo::sl2();
        assert_eq!(u_of(&s, &Subspace::coordinate(3, [0, 1]), &cfg()).unwrap(), Subspace::coordinate(3, [0]));
        assert!(u_of(&s, &Subspace::full(3), &cfg()).unwrap().is_zero());
    }

    #[test]
    fn toral_and_ad_semisimple() {
        let s = zoo::sl2();
        assert!(is_toral(&s, &Subspace::coordinate(3, [1])).is_true());
        assert!(is_toral(&s, &Subspace::coordinate(3, [0])).is_false());
        assert!(is_ad_semisimple(&s, &cfg()).is_false());
        assert!(is_ad_semisimple(&zoo::so3(), &cfg()).is_true());
        let h = s.induced_subalgebra(&Subspace::coordinate(3, [1])).unwrap();
        assert!(is_ad_semisimple(&h.algebra, &cfg()).is_true());
    }

    #[test]
    fn direct_decomposition_of_sums() {
        let cfg = Config::default();
        let l = LieAlgebra::direct_sum(&zoo::r2(), &zoo::jordan_block3());
        let parts = direct_decomposition(&l, &cfg).unwrap();
        assert_eq!(parts.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(direct_decomposition(&zoo::heisenberg3(), &cfg).unwrap().len(), 1);
        assert_eq!(direct_decomposition(&zoo::sl2_natural(), &cfg).unwrap().len(), 1);
        let three = LieAlgebra::direct_sum(&LieAlgebra::direct_sum(&zoo::sl2(), &zoo::r2()), &zoo::rotation3());
        assert_eq!(direct_decomposition(&three, &cfg).unwrap().len(), 3);
    }

    #[test]
    fn simple_ideals() {
        assert_eq!(simple_ideal_decomposition(&zoo::sl2()).unwrap().len(), 1);
        let two = crate::LieAlgebra::direct_sum(&zoo::sl2(), &zoo::sl2());
        let parts = simple_ideal_decomposition(&two).unwrap();
        assert_eq!(parts, vec![Subspace::coordinate(6, [0, 1, 2]), Subspace::coordinate(6, [3, 4, 5])]);
        assert!(simple_ideal_decomposition(&zoo::r2()).is_err());
    }

    #[test]
    fn simple_ideals_in_a_mixed_basis() {
        // sl2 ⊕ sl2 presented in the basis u ± v: no coordinate ideal exists.
        let two = crate::LieAlgebra::direct_sum(&zoo::sl2(), &zoo::so3());
        let n = two.dim();
        let mut p = Matrix::identity(n);
        for i in 0..3 {
            p[(i, i + 3)] = crate::linalg::q(1);
            p[(i + 3, i)] = crate::linalg::q(1);
            p[(i + 3, i + 3)] = crate::linalg::q(-1);
        }
        let mixed = zoo::change_basis(&two, &p).unwrap();
        assert_eq!(simple_ideal_decomposition(&mixed).unwrap().len(), 2);
    }
}
