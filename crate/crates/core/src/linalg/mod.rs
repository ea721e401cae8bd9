//! Exact rational linear algebra: matrices, canonical subspaces, polynomials,
//! and the matrix-level algorithms the structure theory is built on.

mod matrix;
mod poly;
mod subspace;

use num::{BigRational, Zero};

pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::{unit, Subspace};

use crate::error::{Error, Result};

/// Exact rational scalar. Always kept in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn q(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn qfrac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn qv(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rat], c: &Rat, v: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

/// Minimal polynomial of a square matrix: lcm over basis vectors of the
/// least linear dependence in each Krylov sequence `v, Av, A²v, …`.
pub fn min_poly(a: &Matrix) -> Poly {
    assert!(a.is_square(), "min_poly needs a square matrix");
    let n = a.rows();
    let mut acc = Poly::one();
    let mut acc_at_a = Matrix::identity(n);
    for i in 0..n {
        let mut v = unit(n, i);
        // Skip vectors already annihilated by the running lcm.
        if is_zero_vec(&acc_at_a.mul_vec(&v)) {
            continue;
        }
        let mut krylov = Subspace::zero(n);
        let mut seq: Vec<Vec<Rat>> = Vec::new();
        loop {
            if krylov.contains_vec(&v) {
                // Solve v = Σ c_k seq[k] for the dependence.
                let m = Matrix::from_columns(n, &seq);
                let c = m.solve(&v).expect("vector lies in the Krylov span");
                let mut coeffs: Vec<Rat> = c.into_iter().map(|x| -x).collect();
                coeffs.push(q(1));
                acc = acc.lcm(&Poly::new(coeffs));
                acc_at_a = acc.eval_matrix(a);
                break;
            }
            krylov.insert(&v);
            let next = a.mul_vec(&v);
            seq.push(std::mem::replace(&mut v, next));
        }
    }
    acc.monic()
}

/// Additive Jordan–Chevalley decomposition `A = S + N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Newton iteration on the squarefree part `f` of the minimal polynomial:
/// `S ← S − f(S)·u(S)` with `u·f′ ≡ 1 (mod f)`, starting from `S = A`.
pub fn jordan_chevalley(a: &Matrix) -> JordanPair {
    assert!(a.is_square());
    let n = a.rows();
    let m = min_poly(a);
    let f = m.squarefree_part();
    if f.degree() == m.degree() {
        return JordanPair { semisimple: a.clone(), nilpotent: Matrix::zeros(n, n) };
    }
    let u = f.derivative().inverse_mod(&f).expect("squarefree polynomial is coprime to its derivative in char 0");
    let mut s = a.clone();
    loop {
        let fs = f.eval_matrix(&s);
        if fs.is_zero() {
            break;
        }
        let step = &fs * &u.eval_matrix(&s);
        s = &s - &step;
    }
    let nil = a - &s;
    JordanPair { semisimple: s, nilpotent: nil }
}

/// Whether a matrix is semisimple (squarefree minimal polynomial).
pub fn is_semisimple_matrix(a: &Matrix) -> bool {
    min_poly(a).is_squarefree()
}

/// A subalgebra of the full matrix algebra `M_n(ℚ)`, stored as a subspace of
/// ℚ^{n²} (row-major flattening).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    n: usize,
    space: Subspace,
}

impl Envelope {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| Matrix::from_flat(self.n, v)).collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains_vec(m.as_flat())
    }

    /// Wraps a subspace of matrices, checking closure under multiplication.
    pub fn from_space(n: usize, space: Subspace) -> Result<Self> {
        let env = Envelope { n, space };
        let basis = env.basis_matrices();
        for a in &basis {
            for b in &basis {
                if !env.contains(&(a * b)) {
                    return Err(Error::NotProductClosed);
                }
            }
        }
        Ok(env)
    }
}

/// Associative algebra generated by `gens` (with the identity if `unital`).
pub fn associative_envelope(n: usize, gens: &[Matrix], unital: bool) -> Envelope {
    assert!(gens.iter().all(|g| g.rows() == n && g.cols() == n), "generators must be {n}×{n}");
    let mut space = Subspace::zero(n * n);
    let mut frontier: Vec<Matrix> = Vec::new();
    if unital {
        let id = Matrix::identity(n);
        space.insert(id.as_flat());
    }
    for g in gens {
        if space.insert(g.as_flat()) {
            frontier.push(g.clone());
        }
    }
    let gens: Vec<&Matrix> = gens.iter().filter(|g| !g.is_zero()).collect();
    // Words in the generators: extend every new element on the right.
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let p = &w * g;
            if space.insert(p.as_flat()) {
                frontier.push(p);
            }
        }
    }
    Envelope { n, space }
}

/// Trace-form radical `{a ∈ A : tr(ab) = 0 ∀ b ∈ A}` of a matrix algebra.
/// In characteristic zero this is the Jacobson radical.
pub fn dickson_radical(env: &Envelope) -> Result<Subspace> {
    let basis = env.basis_matrices();
    for a in &basis {
        for b in &basis {
            if !env.contains(&(a * b)) {
                return Err(Error::NotProductClosed);
            }
        }
    }
    Ok(dickson_radical_unchecked(env.n, &basis))
}

pub(crate) fn dickson_radical_unchecked(n: usize, basis: &[Matrix]) -> Subspace {
    let k = basis.len();
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].trace_of_product(&basis[j]);
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    let kernel = gram.kernel();
    Subspace::span(
        n * n,
        kernel.iter().map(|c| {
            let mut acc = vec![Rat::zero(); n * n];
            for (ci, b) in c.iter().zip(basis) {
                add_scaled(&mut acc, ci, b.as_flat());
            }
            acc
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&Matrix::identity(3)), Poly::from_i64(&[-1, 1]));
        assert_eq!(min_poly(&Matrix::from_i64(&[&[0, -1], &[1, 0]])), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(min_poly(&Matrix::from_i64(&[&[1, 1], &[0, 1]])), Poly::from_i64(&[1, -2, 1]));
        assert_eq!(min_poly(&Matrix::zeros(2, 2)), Poly::from_i64(&[0, 1]));
    }

    #[test]
    fn jordan_block_splits() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let jp = jordan_chevalley(&a);
        assert_eq!(jp.semisimple, Matrix::identity(2));
        assert_eq!(jp.nilpotent, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn rotation_is_semisimple() {
        let a = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let jp = jordan_chevalley(&a);
        assert_eq!(jp.semisimple, a);
        assert!(jp.nilpotent.is_zero());
    }

    #[test]
    fn envelope_examples() {
        assert_eq!(associative_envelope(3, &[Matrix::identity(3)], false).dim(), 1);
        let e12 = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let env = associative_envelope(2, std::slice::from_ref(&e12), false);
        assert_eq!(env.dim(), 1);
        assert!(env.contains(&e12));
        assert_eq!(associative_envelope(2, &[e12], true).dim(), 2);
    }

    #[test]
    fn dickson_radical_of_commutative_semisimple_is_zero() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let env = associative_envelope(2, &[d], true);
        assert!(dickson_radical(&env).unwrap().is_zero());
    }

    #[test]
    fn dickson_radical_rejects_non_closed_input() {
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let space = Subspace::span(4, [a.as_flat()]);
        let env = Envelope { n: 2, space };
        assert!(matches!(dickson_radical(&env), Err(Error::NotProductClosed)));
    }
}
