//! Dense univariate polynomials over ℚ.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::{Matrix, Rat};

/// Polynomial with coefficients stored lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Rat::one()] }
    }

    /// `t - c`.
    pub fn linear(c: Rat) -> Self {
        Poly::new(vec![-c, Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer((i as i64).into())).collect())
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic gcd. Intermediate remainders are normalized to monic form to
    /// keep coefficient growth in check.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g = gcd` (monic).
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.leading().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    /// Squarefree part `m / gcd(m, m')` (monic).
    pub fn squarefree_part(&self) -> Poly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Multiplicative inverse modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * a;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        acc
    }

    /// Integer primitive associate (positive leading coefficient).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| &sign * c / &g).collect()
    }

    /// Irreducibility over ℚ by Kronecker's method. Intended for the small
    /// degrees that occur as operator minimal polynomials here.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        (1..=n / 2).all(|d| find_factor_of_degree(&f, d).is_none())
    }

    /// Monic irreducible factors over ℚ, with multiplicity, by Kronecker's
    /// method. Exponential in the degree; meant for small degrees.
    pub fn factor(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut stack = vec![self.monic()];
        while let Some(f) = stack.pop() {
            let n = f.degree().unwrap_or(0);
            if n == 0 {
                continue;
            }
            match (1..=n / 2).find_map(|d| find_factor_of_degree(&f, d)) {
                Some(g) => {
                    let g = g.monic();
                    let (h, _) = f.div_rem(&g);
                    stack.push(g);
                    stack.push(h.monic());
                }
                None => out.push(f),
            }
        }
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        out
    }
}

/// Searches for a rational factor of degree `d` by interpolation through
/// divisor patterns at `d + 1` integer points.
fn find_factor_of_degree(f: &Poly, d: usize) -> Option<Poly> {
    let ints = f.primitive_integer();
    let fi = Poly::new(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
    let mut points: Vec<(Rat, BigInt)> = Vec::new();
    let mut x: i64 = 0;
    while points.len() < d + 1 {
        let xr = Rat::from_integer(x.into());
        let v = fi.eval(&xr).to_integer();
        if v.is_zero() {
            return Some(Poly::linear(xr)); // rational root
        }
        points.push((xr, v));
        x = if x <= 0 { -x + 1 } else { -x };
    }
    let divisor_sets: Vec<Vec<BigInt>> = points.iter().map(|(_, v)| signed_divisors(v)).collect();
    let mut idx = vec![0usize; d + 1];
    loop {
        let values: Vec<Rat> = idx.iter().zip(&divisor_sets).map(|(&i, s)| Rat::from_integer(s[i].clone())).collect();
        let g = interpolate(&points.iter().map(|p| p.0.clone()).collect::<Vec<_>>(), &values);
        if g.degree() == Some(d) && g.coeffs.iter().all(|c| c.is_integer()) && fi.rem(&g).is_zero() {
            return Some(g);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < divisor_sets[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let a = v.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= a {
        if (&a % &i).is_zero() {
            let j = &a / &i;
            out.push(i.clone());
            out.push(-i.clone());
            if j != i {
                out.push(j.clone());
                out.push(-j);
            }
        }
        i += 1;
    }
    out
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = Poly::new(vec![yi.clone()]);
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                term = term.mul(&Poly::linear(xj.clone())).scale(&(xi - xj).recip());
            }
        }
        acc = acc.add(&term);
    }
    acc
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let p = Poly::from_i64(&[1, -2, 1]).mul(&Poly::from_i64(&[2, 1]));
        assert_eq!(p.squarefree_part(), Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[2, 1])));
        assert!(!p.is_squarefree());
        assert_eq!(p.gcd(&p.derivative()), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn inverse_mod_coprime() {
        let f = Poly::from_i64(&[1, 0, 1]);
        let g = Poly::from_i64(&[0, 1]);
        let inv = g.inverse_mod(&f).unwrap();
        assert_eq!(inv.mul(&g).rem(&f), Poly::one());
        assert!(Poly::from_i64(&[-1, 1]).inverse_mod(&Poly::from_i64(&[1, -2, 1])).is_none());
    }

    #[test]
    fn irreducibility() {
        assert!(Poly::from_i64(&[1, 0, 1]).is_irreducible());
        assert!(!Poly::from_i64(&[-1, 0, 1]).is_irreducible());
        // (t^2+1)(t^2+2) has no rational roots but is reducible.
        assert!(!Poly::from_i64(&[2, 0, 3, 0, 1]).is_irreducible());
        assert!(Poly::from_i64(&[-2, 0, 0, 1]).is_irreducible());
        assert!(Poly::from_i64(&[1, 1, 1, 1, 1]).is_irreducible());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
    }

    #[test]
    fn factorization() {
        // (t - 1)^2 (t^2 + 1)
        let f = Poly::from_i64(&[1, -1, 1, -1]).mul(&Poly::from_i64(&[-1, 1]));
        let fs = f.factor();
        assert_eq!(fs, vec![Poly::from_i64(&[-1, 1]), Poly::from_i64(&[-1, 1]), Poly::from_i64(&[1, 0, 1])]);
        let g = Poly::from_i64(&[-2, 0, 1]).mul(&Poly::from_i64(&[-1, -2, 1]));
        assert_eq!(g.factor().len(), 2);
    }
}
