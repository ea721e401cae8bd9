//! Lie algebras given by structure constants, and the elementary structural
//! calculus on them: brackets, subalgebras, ideals, series, centralizers,
//! idealizers, the Killing form, quotients and semidirect products.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vec, unit, Matrix, Rat, Subspace};
use crate::sampling::seeded_rng;

/// How thoroughly the Jacobi identity is verified at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiCheck {
    /// Every basis triple.
    Full,
    /// The given number of seeded random basis triples.
    Sampled { triples: usize, seed: u64 },
}

/// A finite-dimensional Lie algebra over ℚ.
///
/// Structure constants are stored only for `i < j`; `[e_j, e_i]` is derived by
/// antisymmetry, so antisymmetry cannot be violated once constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
    ad: Vec<Matrix>,
}

/// Incremental construction of a [`LieAlgebra`].
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    name: String,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rat>>,
    error: Option<Error>,
}

impl LieAlgebraBuilder {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebraBuilder {
            name: name.into(),
            basis_names: (0..dim).map(|i| format!("e{}", i + 1)).collect(),
            brackets: BTreeMap::new(),
            error: None,
        }
    }

    pub fn names<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        if names.len() != self.basis_names.len() {
            self.error.get_or_insert(Error::DimensionMismatch { expected: self.basis_names.len(), found: names.len() });
        } else {
            self.basis_names = names.iter().map(|s| s.as_ref().to_string()).collect();
        }
        self
    }

    /// Sets `[e_i, e_j] = Σ coeff·e_k`. Passing `i > j` stores the negation.
    pub fn bracket(mut self, i: usize, j: usize, terms: &[(usize, Rat)]) -> Self {
        self.add_bracket(i, j, terms);
        self
    }

    /// Integer-coefficient shorthand for [`bracket`](Self::bracket).
    pub fn bracket_i(self, i: usize, j: usize, terms: &[(usize, i64)]) -> Self {
        let t: Vec<(usize, Rat)> = terms.iter().map(|&(k, c)| (k, Rat::from_integer(c.into()))).collect();
        self.bracket(i, j, &t)
    }

    pub fn add_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Rat)]) {
        let n = self.basis_names.len();
        if i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
            self.error.get_or_insert(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            return;
        }
        if i == j {
            if terms.iter().any(|(_, c)| !c.is_zero()) {
                self.error.get_or_insert(Error::Antisymmetry(i, j));
            }
            return;
        }
        let (a, b, sign) = if i < j { (i, j, Rat::one()) } else { (j, i, -Rat::one()) };
        let entry = self.brackets.entry((a, b)).or_default();
        for (k, c) in terms {
            let v = entry.entry(*k).or_insert_with(Rat::zero);
            *v += c * &sign;
        }
    }

    pub fn build(self, check: JacobiCheck) -> Result<LieAlgebra> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let brackets = self
            .brackets
            .into_iter()
            .map(|(key, terms)| (key, terms.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, terms)| !terms.is_empty())
            .collect();
        LieAlgebra::from_parts(self.name, self.basis_names, brackets, check)
    }
}

impl LieAlgebra {
    fn from_parts(
        name: String,
        basis_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
        check: JacobiCheck,
    ) -> Result<Self> {
        let n = basis_names.len();
        let mut ad = vec![Matrix::zeros(n, n); n];
        for (&(i, j), terms) in &brackets {
            for (k, c) in terms {
                ad[i][(*k, j)] = c.clone();
                ad[j][(*k, i)] = -c.clone();
            }
        }
        let alg = LieAlgebra { name, basis_names, brackets, ad };
        match check {
            JacobiCheck::Full => alg.check_jacobi_full()?,
            JacobiCheck::Sampled { triples, seed } => alg.check_jacobi_sampled(triples, seed)?,
        }
        Ok(alg)
    }

    /// Builds an algebra from a full tensor `c[i][j][k]` (`[e_i,e_j] = Σ_k c[i][j][k] e_k`),
    /// rejecting any violation of antisymmetry or the Jacobi identity.
    pub fn from_full_tensor(name: impl Into<String>, c: &[Vec<Vec<Rat>>]) -> Result<Self> {
        let n = c.len();
        let mut brackets = BTreeMap::new();
        for i in 0..n {
            if c[i].len() != n || c[i].iter().any(|row| row.len() != n) {
                return Err(Error::DimensionMismatch { expected: n, found: c[i].len() });
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::Antisymmetry(i, j));
                    }
                }
                if i < j {
                    let terms: Vec<(usize, Rat)> =
                        (0..n).filter(|&k| !c[i][j][k].is_zero()).map(|k| (k, c[i][j][k].clone())).collect();
                    if !terms.is_empty() {
                        brackets.insert((i, j), terms);
                    }
                }
            }
        }
        let names = (0..n).map(|i| format!("e{}", i + 1)).collect();
        LieAlgebra::from_parts(name.into(), names, brackets, JacobiCheck::Full)
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebraBuilder::new(name, dim).build(JacobiCheck::Full).expect("abelian algebra is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Nonzero structure constants `(i, j) ↦ [(k, c)]` for `i < j`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), Vec<(usize, Rat)>> {
        &self.brackets
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.ad[i].column(j)
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    pub fn ad(&self, x: &[Rat]) -> Matrix {
        assert_eq!(x.len(), self.dim());
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            m.add_scaled(c, &self.ad[i]);
        }
        m
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        Ok(self.br(x, y))
    }

    /// Bracket without length checks; callers guarantee vectors of length `dim`.
    pub(crate) fn br(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (&(i, j), terms) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, v) in terms {
                out[*k] += &c * v;
            }
        }
        out
    }

    fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.dim();
        let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
        let a = self.br(&self.br(&ei, &ej), &ek);
        let b = self.br(&self.br(&ej, &ek), &ei);
        let c = self.br(&self.br(&ek, &ei), &ej);
        a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero())
    }

    pub fn check_jacobi_full(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.jacobi_defect(i, j, k) {
                        return Err(Error::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi_sampled(&self, triples: usize, seed: u64) -> Result<()> {
        let n = self.dim();
        if n < 3 {
            return Ok(());
        }
        let mut rng = seeded_rng(seed);
        for _ in 0..triples {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if i != j && j != k && i != k && self.jacobi_defect(i, j, k) {
                return Err(Error::Jacobi(i, j, k));
            }
        }
        Ok(())
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        Ok(())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[A, B]`: span of brackets of basis vectors.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                out.insert(&self.br(x, y));
            }
        }
        out
    }

    /// `L² = [L, L]`.
    pub fn derived_algebra(&self) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for terms in self.brackets.values() {
            let mut v = vec![Rat::zero(); self.dim()];
            for (k, c) in terms {
                v[*k] = c.clone();
            }
            out.insert(&v);
        }
        out
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains_vec(&self.br(&b[i], &b[j]))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| (0..self.dim()).all(|i| s.contains_vec(&self.ad[i].mul_vec(v))))
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let b = cur.basis().to_vec();
            let mut next = cur.clone();
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    next.insert(&self.br(&b[i], &b[j]));
                }
            }
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        let mut frontier: Vec<Vec<Rat>> = cur.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for i in 0..self.dim() {
                let w = self.ad[i].mul_vec(&v);
                if cur.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        cur
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series_from(self.full_space(), |alg, cur| alg.product_space(cur, cur))
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full_space();
        self.series_from(full.clone(), |alg, cur| alg.product_space(&full, cur))
    }

    fn series_from(&self, start: Subspace, step: impl Fn(&Self, &Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![start];
        loop {
            let next = step(self, out.last().unwrap());
            if &next == out.last().unwrap() {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Whether the subalgebra `s` is nilpotent as a Lie algebra.
    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> bool {
        let mut cur = s.clone();
        while !cur.is_zero() {
            let next = self.product_space(s, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
        true
    }

    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        self.product_space(s, s).is_zero()
    }

    /// Solves `{x : [x, b] ∈ target for all basis vectors b of B}`.
    fn bracket_preimage(&self, b: &Subspace, target: &Subspace) -> Subspace {
        let n = self.dim();
        if b.is_zero() {
            return self.full_space();
        }
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut col = Vec::with_capacity(n * b.dim());
            for v in b.basis() {
                col.extend(target.reduce(&self.ad[i].mul_vec(v)));
            }
            cols.push(col);
        }
        let m = Matrix::from_columns(n * b.dim(), &cols);
        Subspace::span(n, m.kernel())
    }

    pub fn centralizer(&self, b: &Subspace) -> Result<Subspace> {
        self.check_space(b)?;
        Ok(self.bracket_preimage(b, &Subspace::zero(self.dim())))
    }

    pub fn center(&self) -> Subspace {
        self.bracket_preimage(&self.full_space(), &Subspace::zero(self.dim()))
    }

    /// `I_L(B) = {x ∈ L : [x, B] ⊆ B}` for a subalgebra `B`.
    pub fn idealizer(&self, b: &Subspace) -> Result<Subspace> {
        self.check_space(b)?;
        if !self.is_subalgebra(b) {
            return Err(Error::NotSubalgebra);
        }
        Ok(self.bracket_preimage(b, b))
    }

    /// `κ(e_i, e_j) = tr(ad e_i · ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = self.ad[i].trace_of_product(&self.ad[j]);
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Quotient by an ideal, using the non-pivot coordinates of the ideal's
    /// canonical basis as a transversal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_space(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(Error::NotIdeal);
        }
        let transversal = ideal.complement_indices();
        let names: Vec<String> = transversal.iter().map(|&t| self.basis_names[t].clone()).collect();
        let mut builder = LieAlgebraBuilder::new(format!("{}/I", self.name), transversal.len()).names(&names);
        for a in 0..transversal.len() {
            for b in a + 1..transversal.len() {
                let v = ideal.reduce(&self.bracket_basis(transversal[a], transversal[b]));
                let terms: Vec<(usize, Rat)> = transversal
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| !v[t].is_zero())
                    .map(|(c, &t)| (c, v[t].clone()))
                    .collect();
                builder.add_bracket(a, b, &terms);
            }
        }
        let algebra = builder.build(JacobiCheck::Sampled { triples: 64, seed: 0 })?;
        Ok(Quotient { algebra, ideal: ideal.clone(), transversal })
    }

    /// The subalgebra `B` as an algebra in its own right, in the canonical basis of `B`.
    pub fn induced_subalgebra(&self, b: &Subspace) -> Result<Embedding> {
        self.check_space(b)?;
        if !self.is_subalgebra(b) {
            return Err(Error::NotSubalgebra);
        }
        let basis = b.basis();
        let names: Vec<String> = basis
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
                if nz.len() == 1 && v[nz[0]].is_one() {
                    self.basis_names[nz[0]].clone()
                } else {
                    format!("b{}", a + 1)
                }
            })
            .collect();
        let mut builder = LieAlgebraBuilder::new(format!("{}|sub", self.name), basis.len()).names(&names);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let c = b.coords(&self.br(&basis[i], &basis[j])).expect("closed under bracket");
                let terms: Vec<(usize, Rat)> =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                builder.add_bracket(i, j, &terms);
            }
        }
        let algebra = builder.build(JacobiCheck::Sampled { triples: 64, seed: 0 })?;
        Ok(Embedding { algebra, space: b.clone() })
    }

    /// The semidirect product `S ⋉ A` where `action[i]` is the matrix of
    /// `s_i` acting on `A` (columns are images of basis vectors). Basis: `S` then `A`.
    pub fn semidirect_product(s: &LieAlgebra, a: &LieAlgebra, action: &[Matrix]) -> Result<LieAlgebra> {
        let (ds, da) = (s.dim(), a.dim());
        if action.len() != ds {
            return Err(Error::DimensionMismatch { expected: ds, found: action.len() });
        }
        for m in action {
            if m.rows() != da || m.cols() != da {
                return Err(Error::DimensionMismatch { expected: da, found: m.rows() });
            }
            if !a.is_derivation(m) {
                return Err(Error::NotDerivationAction("action matrix is not a derivation of the module algebra".into()));
            }
        }
        for i in 0..ds {
            for j in i + 1..ds {
                let mut lhs = Matrix::zeros(da, da);
                for (k, c) in s.bracket_basis(i, j).iter().enumerate() {
                    lhs.add_scaled(c, &action[k]);
                }
                if lhs != action[i].commutator(&action[j]) {
                    return Err(Error::NotDerivationAction(format!("ρ([s{i},s{j}]) ≠ [ρ(s{i}),ρ(s{j})]")));
                }
            }
        }
        let mut names: Vec<String> = s.basis_names.clone();
        names.extend(a.basis_names.iter().cloned());
        let mut builder = LieAlgebraBuilder::new(format!("{}⋉{}", s.name, a.name), ds + da).names(&names);
        for (&(i, j), terms) in &s.brackets {
            builder.add_bracket(i, j, terms);
        }
        for (&(i, j), terms) in &a.brackets {
            let shifted: Vec<(usize, Rat)> = terms.iter().map(|(k, c)| (k + ds, c.clone())).collect();
            builder.add_bracket(i + ds, j + ds, &shifted);
        }
        for (i, m) in action.iter().enumerate() {
            for j in 0..da {
                let terms: Vec<(usize, Rat)> =
                    (0..da).filter(|&k| !m[(k, j)].is_zero()).map(|k| (k + ds, m[(k, j)].clone())).collect();
                builder.add_bracket(i, j + ds, &terms);
            }
        }
        builder.build(JacobiCheck::Full)
    }

    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let zero = vec![Matrix::zeros(b.dim(), b.dim()); a.dim()];
        LieAlgebra::semidirect_product(a, b, &zero)
            .expect("direct sum of valid algebras is valid")
            .with_name(format!("{}⊕{}", a.name, b.name))
    }

    /// Whether `d` is a derivation: `d[x,y] = [dx,y] + [x,dy]` on basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = d.mul_vec(&self.bracket_basis(i, j));
                let mut rhs = self.br(&d.column(i), &unit(n, j));
                add_scaled(&mut rhs, &Rat::one(), &self.br(&unit(n, i), &d.column(j)));
                lhs == rhs
            })
        })
    }

    /// Basis of the derivation algebra `Der(L)`, as matrices.
    pub fn derivations(&self) -> Vec<Matrix> {
        let n = self.dim();
        // Unknown D[m][k] lives at index m*n + k.
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.bracket_basis(i, j);
                for p in 0..n {
                    let mut row = vec![Rat::zero(); n * n];
                    for (k, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            row[p * n + k] += c;
                        }
                    }
                    for m in 0..n {
                        // -[D e_i, e_j]_p = -Σ_m D[m][i] c_{mj}^p
                        let c1 = &self.ad[m][(p, j)];
                        if !c1.is_zero() {
                            row[m * n + i] -= c1;
                        }
                        // -[e_i, D e_j]_p = -Σ_m D[m][j] c_{im}^p
                        let c2 = &self.ad[i][(p, m)];
                        if !c2.is_zero() {
                            row[m * n + j] -= c2;
                        }
                    }
                    if !is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..n * n).map(|i| unit(n * n, i)).collect()
        } else {
            Matrix::from_rows(&rows).expect("uniform rows").kernel()
        };
        kernel.iter().map(|v| Matrix::from_flat(n, v)).collect()
    }
}

/// A quotient algebra `L/I` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    /// Coordinates of `L` whose images form the quotient basis.
    pub transversal: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        let r = self.ideal.reduce(v);
        self.transversal.iter().map(|&t| r[t].clone()).collect()
    }

    pub fn lift(&self, w: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.ideal.ambient_dim()];
        for (c, &t) in w.iter().zip(&self.transversal) {
            v[t] = c.clone();
        }
        v
    }

    pub fn push(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.transversal.len(), s.basis().iter().map(|v| self.project(v)))
    }

    /// Full preimage of a subspace of the quotient.
    pub fn pull(&self, s: &Subspace) -> Subspace {
        let mut out = self.ideal.clone();
        for w in s.basis() {
            out.insert(&self.lift(w));
        }
        out
    }
}

/// A subalgebra realized as an algebra in its own right.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub algebra: LieAlgebra,
    pub space: Subspace,
}

impl Embedding {
    pub fn include(&self, coords: &[Rat]) -> Vec<Rat> {
        self.space.combine(coords)
    }

    pub fn include_space(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.space.ambient_dim(), s.basis().iter().map(|c| self.include(c)))
    }

    pub fn restrict(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.space.coords(v)
    }

    pub fn restrict_space(&self, s: &Subspace) -> Option<Subspace> {
        let mut out = Subspace::zero(self.space.dim());
        for v in s.basis() {
            out.insert(&self.restrict(v)?);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qv};
    use crate::zoo;

    #[test]
    fn heisenberg_basics() {
        let h = zoo::heisenberg3();
        assert_eq!(h.bracket(&qv(&[1, 0, 0]), &qv(&[0, 1, 0])).unwrap(), qv(&[0, 0, 1]));
        assert_eq!(h.derived_algebra(), Subspace::coordinate(3, [2]));
        assert_eq!(h.center(), Subspace::coordinate(3, [2]));
        let lcs = h.lower_central_series();
        assert_eq!(lcs.len(), 3);
        assert!(lcs[2].is_zero());
        assert!(h.is_nilpotent());
    }

    #[test]
    fn sl2_brackets_and_killing() {
        let s = zoo::sl2(); // basis e, h, f
        assert_eq!(s.bracket(&qv(&[0, 1, 0]), &qv(&[1, 0, 0])).unwrap(), qv(&[2, 0, 0]));
        let k = s.killing_form();
        assert_eq!(k[(1, 1)], q(8));
        assert_eq!(k[(0, 2)], q(4));
        assert_eq!(k[(0, 0)], q(0));
        assert_eq!(s.derived_series().len(), 1);
        assert!(!s.is_solvable());
        assert_eq!(s.ideal_closure(&Subspace::coordinate(3, [0])), Subspace::full(3));
    }

    #[test]
    fn idealizer_of_root_line_in_sl2() {
        let s = zoo::sl2();
        let e = Subspace::coordinate(3, [0]);
        assert_eq!(s.idealizer(&e).unwrap(), Subspace::coordinate(3, [0, 1]));
    }

    #[test]
    fn idealizer_rejects_non_subalgebra() {
        let s = zoo::sl2();
        let ef = Subspace::coordinate(3, [0, 2]);
        assert!(matches!(s.idealizer(&ef), Err(Error::NotSubalgebra)));
    }

    #[test]
    fn r2_series() {
        let r = zoo::r2();
        let d = r.derived_series();
        assert_eq!(d.len(), 3);
        assert_eq!(d[1], Subspace::coordinate(2, [1]));
        assert!(r.is_solvable() && !r.is_nilpotent());
    }

    #[test]
    fn quotient_and_restriction() {
        let h = zoo::heisenberg3();
        let qt = h.quotient(&h.center()).unwrap();
        assert_eq!(qt.algebra.dim(), 2);
        assert!(qt.algebra.is_abelian());
        let triv = h.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(triv.algebra.structure_constants(), h.structure_constants());

        let s = zoo::sl2();
        let borel = s.induced_subalgebra(&Subspace::coordinate(3, [0, 1])).unwrap();
        // canonical basis (e, h): [e, h] = -2e
        assert_eq!(borel.algebra.bracket_basis(1, 0), qv(&[2, 0]));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let s = zoo::sl2();
        assert!(matches!(s.quotient(&Subspace::coordinate(3, [0])), Err(Error::NotIdeal)));
    }

    #[test]
    fn semidirect_jordan_block() {
        let x = LieAlgebra::abelian("x", 1);
        let v = LieAlgebra::abelian("V", 2);
        let l = LieAlgebra::semidirect_product(&x, &v, &[Matrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
        assert_eq!(l.bracket_basis(0, 1), qv(&[0, 1, 0]));
        assert_eq!(l.bracket_basis(0, 2), qv(&[0, 1, 1]));
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        // Non-commuting matrices on an abelian base violate the homomorphism condition.
        let s = LieAlgebra::abelian("s", 2);
        let v = LieAlgebra::abelian("V", 2);
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(LieAlgebra::semidirect_product(&s, &v, &[a, b]).is_err());
    }

    #[test]
    fn jacobi_violation_rejected() {
        let bad = LieAlgebraBuilder::new("bad", 3)
            .bracket_i(0, 1, &[(2, 1)])
            .bracket_i(0, 2, &[(0, 1)])
            .bracket_i(1, 2, &[(1, 1)])
            .build(JacobiCheck::Full);
        assert!(bad.is_err());
    }

    #[test]
    fn derivations_of_abelian_is_gl() {
        assert_eq!(LieAlgebra::abelian("a", 2).derivations().len(), 4);
        // Der(sl2) = ad(sl2)
        assert_eq!(zoo::sl2().derivations().len(), 3);
    }
}
