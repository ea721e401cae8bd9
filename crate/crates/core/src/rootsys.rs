//! Root systems from Cartan types, split semisimple algebras in a Chevalley
//! basis, and standard parabolic subalgebras.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap, HashSet};

use num::Zero;
use rand::Rng;

use crate::algebra::{JacobiCheck, LieAlgebra, LieAlgebraBuilder};
use crate::error::{Error, Result};
use crate::linalg::{q, qfrac, Rat, Subspace};
use crate::sampling::{random_element, seeded_rng, Config};
use crate::structure::{is_ad_semisimple, is_nil_subalgebra, nilradical, u_of};

/// Root data for a (possibly reducible) Cartan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub label: String,
    pub rank: usize,
    /// Symmetric invariant form on simple roots, integer-scaled.
    pub gram: Vec<Vec<i64>>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots as coefficient vectors over the simple roots, ordered
    /// by height, then lexicographically with earlier simple roots first.
    pub positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `N_{α,β}` for positive roots `α, β` with `α + β` a root.
    n_pos: BTreeMap<(usize, usize), i64>,
}

fn component_gram(family: char, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::InvalidCartanType(format!("{family}{rank}"));
    let mut g = vec![vec![0i64; rank]; rank];
    let chain = |g: &mut Vec<Vec<i64>>, scale: i64| {
        for i in 0..rank {
            g[i][i] = 2 * scale;
            if i + 1 < rank {
                g[i][i + 1] = -scale;
                g[i + 1][i] = -scale;
            }
        }
    };
    match family {
        'A' if rank >= 1 => chain(&mut g, 1),
        'B' if rank >= 2 => {
            // ε_i − ε_{i+1} and ε_n, doubled to stay integral.
            chain(&mut g, 2);
            g[rank - 1][rank - 1] = 2;
        }
        'C' if rank >= 2 => {
            // ε_i − ε_{i+1} and 2ε_n.
            chain(&mut g, 1);
            g[rank - 1][rank - 1] = 4;
            g[rank - 2][rank - 1] = -2;
            g[rank - 1][rank - 2] = -2;
        }
        'D' if rank >= 4 => {
            chain(&mut g, 1);
            g[rank - 2][rank - 1] = 0;
            g[rank - 1][rank - 2] = 0;
            g[rank - 3][rank - 1] = -1;
            g[rank - 1][rank - 3] = -1;
        }
        'G' if rank == 2 => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
        'F' if rank == 4 => {
            // ε2−ε3, ε3−ε4, ε4, (ε1−ε2−ε3−ε4)/2, doubled.
            g = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
        }
        _ => return Err(bad()),
    }
    Ok(g)
}

impl RootSystemData {
    /// Parses `A2`, `G2`, `B3`, or products such as `A1xA1`.
    pub fn parse(desc: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(desc.to_string());
        let mut blocks = Vec::new();
        for part in desc.trim().split(['x', '×']) {
            let mut chars = part.chars();
            let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            blocks.push(component_gram(family, rank).map_err(|_| bad())?);
        }
        let rank: usize = blocks.iter().map(Vec::len).sum();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    gram[off + i][off + j] = *v;
                }
            }
            off += b.len();
        }
        RootSystemData::from_gram(desc.trim(), gram)
    }

    fn from_gram(label: &str, gram: Vec<Vec<i64>>) -> Result<Self> {
        let rank = gram.len();
        let cartan: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect()).collect();
        let mut rs = RootSystemData {
            label: label.to_string(),
            rank,
            gram,
            cartan,
            positive_roots: Vec::new(),
            index: HashMap::new(),
            n_pos: BTreeMap::new(),
        };
        rs.generate_positive_roots();
        rs.compute_constants()?;
        Ok(rs)
    }

    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// `⟨β, α_i^∨⟩`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        2 * self.form(beta, &e) / self.gram[i][i]
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    fn generate_positive_roots(&mut self) {
        let l = self.rank;
        let unit = |i: usize| {
            let mut e = vec![0i64; l];
            e[i] = 1;
            e
        };
        let mut set: HashSet<Vec<i64>> = (0..l).map(unit).collect();
        let mut all: Vec<Vec<i64>> = (0..l).map(unit).collect();
        let mut level: Vec<Vec<i64>> = all.clone();
        while !level.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &level {
                for i in 0..l {
                    if *beta == unit(i) {
                        continue;
                    }
                    // α_i-string through β: β − pα_i, …, β + qα_i with p − q = ⟨β, α_i^∨⟩.
                    let mut p = 0;
                    loop {
                        let mut g = beta.clone();
                        g[i] -= p + 1;
                        if set.contains(&g) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let qn = p - self.pairing(beta, i);
                    if qn > 0 {
                        let mut g = beta.clone();
                        g[i] += 1;
                        if set.insert(g.clone()) {
                            next.push(g);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        all.sort_by_key(|r| (Self::height(r), Reverse(r.clone())));
        self.index = all.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        self.positive_roots = all;
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        out
    }

    /// Index into [`all_roots`](Self::all_roots).
    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        if let Some(&k) = self.index.get(r) {
            return Some(k);
        }
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&k| k + self.num_positive())
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.root_index(r).is_some()
    }

    fn is_positive(r: &[i64]) -> bool {
        r.iter().any(|&x| x > 0)
    }

    fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(a: &[i64]) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    /// `N_{a,b}`: `[e_a, e_b] = N_{a,b} e_{a+b}`, zero when `a + b` is not a root.
    pub fn n(&self, a: &[i64], b: &[i64]) -> i64 {
        let s = Self::add(a, b);
        if !self.is_root(&s) {
            return 0;
        }
        let (pa, pb) = (Self::is_positive(a), Self::is_positive(b));
        match (pa, pb) {
            (true, true) => {
                let (i, j) = (self.index[a], self.index[b]);
                *self.n_pos.get(&(i, j)).expect("positive pair computed in height order")
            }
            (false, false) => -self.n(&Self::neg(a), &Self::neg(b)),
            (false, true) => -self.n(b, a),
            (true, false) => {
                // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
                let c = Self::neg(&s);
                let cc = self.form(&c, &c);
                let v = if Self::is_positive(&c) {
                    qfrac(cc, self.form(b, b)) * q(self.n(&c, a))
                } else {
                    qfrac(cc, self.form(a, a)) * q(self.n(b, &c))
                };
                assert!(v.is_integer(), "structure constant must be integral");
                i64::try_from(v.to_integer()).expect("small constant")
            }
        }
    }

    /// Largest `p` with `β − pα` a root (or zero).
    fn string_down(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut p = 0;
        loop {
            let g: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - (p + 1) * a).collect();
            if self.is_root(&g) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn compute_constants(&mut self) -> Result<()> {
        let np = self.num_positive();
        for k in 0..np {
            let xi = self.positive_roots[k].clone();
            // Special pairs (a, b) with a ≺ b, a + b = ξ, ordered by a.
            let mut special: Vec<(usize, usize)> = Vec::new();
            for a in 0..k {
                let rest: Vec<i64> = xi.iter().zip(&self.positive_roots[a]).map(|(x, y)| x - y).collect();
                if let Some(&b) = self.index.get(&rest) {
                    if a < b {
                        special.push((a, b));
                    }
                }
            }
            let Some(&(a1, b1)) = special.first() else {
                continue;
            };
            let alpha1 = self.positive_roots[a1].clone();
            let beta1 = self.positive_roots[b1].clone();
            let n1 = self.string_down(&alpha1, &beta1) + 1;
            self.n_pos.insert((a1, b1), n1);
            self.n_pos.insert((b1, a1), -n1);
            let xixi = self.form(&xi, &xi);
            for &(a, b) in &special[1..] {
                let alpha = self.positive_roots[a].clone();
                let beta = self.positive_roots[b].clone();
                let term = |x: &[i64], y: &[i64], u: &[i64], v: &[i64], d: &[i64]| -> Rat {
                    let nxy = self.n(x, y);
                    let nuv = self.n(u, v);
                    if nxy == 0 || nuv == 0 {
                        return Rat::zero();
                    }
                    qfrac(nxy * nuv, self.form(d, d))
                };
                let ma1 = Self::neg(&alpha1);
                let mb1 = Self::neg(&beta1);
                let d1: Vec<i64> = beta.iter().zip(&alpha1).map(|(x, y)| x - y).collect();
                let d2: Vec<i64> = alpha.iter().zip(&alpha1).map(|(x, y)| x - y).collect();
                let bracket = term(&beta, &ma1, &alpha, &mb1, &d1) + term(&ma1, &alpha, &beta, &mb1, &d2);
                let v = bracket * qfrac(xixi, n1);
                if !v.is_integer() || v.is_zero() {
                    return Err(Error::SelfCheck(format!("non-integral Chevalley constant in {}", self.label)));
                }
                let v = i64::try_from(v.to_integer()).expect("small constant");
                self.n_pos.insert((a, b), v);
                self.n_pos.insert((b, a), -v);
            }
        }
        Ok(())
    }

    /// Coefficients of the coroot `h_r = Σ c_i (α_i,α_i)/(r,r) h_i`.
    pub fn coroot(&self, r: &[i64]) -> Vec<i64> {
        let rr = self.form(r, r);
        (0..self.rank)
            .map(|i| {
                let num = r[i] * self.gram[i][i];
                assert_eq!(num % rr, 0, "coroot coefficients are integral");
                num / rr
            })
            .collect()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }
}

/// A split semisimple algebra in its Chevalley basis: `h_1..h_ℓ`, then
/// `e_α` for positive roots in order, then `e_{-α}`.
#[derive(Clone, Debug)]
pub struct SplitAlgebra {
    pub rs: RootSystemData,
    pub algebra: LieAlgebra,
}

fn root_label(r: &[i64]) -> String {
    r.iter().map(ToString::to_string).collect::<Vec<_>>().join("")
}

impl SplitAlgebra {
    pub fn new(rs: &RootSystemData) -> Result<Self> {
        let l = rs.rank;
        let np = rs.num_positive();
        let dim = l + 2 * np;
        let roots = rs.all_roots();
        let mut names: Vec<String> = (1..=l).map(|i| format!("h{i}")).collect();
        names.extend(rs.positive_roots.iter().map(|r| format!("e{}", root_label(r))));
        names.extend(rs.positive_roots.iter().map(|r| format!("f{}", root_label(r))));
        let mut b = LieAlgebraBuilder::new(format!("split {}", rs.label), dim).names(&names);
        for i in 0..l {
            for (k, r) in roots.iter().enumerate() {
                let c = rs.pairing(r, i);
                if c != 0 {
                    b.add_bracket(i, l + k, &[(l + k, q(c))]);
                }
            }
        }
        for (a, ra) in roots.iter().enumerate() {
            for (c, rc) in roots.iter().enumerate().skip(a + 1) {
                let s = RootSystemData::add(ra, rc);
                if s.iter().all(|&x| x == 0) {
                    // [e_r, e_{-r}] = h_r with r = ra.
                    let h = rs.coroot(ra);
                    let terms: Vec<(usize, Rat)> =
                        h.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, q(*v))).collect();
                    b.add_bracket(l + a, l + c, &terms);
                } else if let Some(t) = rs.root_index(&s) {
                    let nv = rs.n(ra, rc);
                    b.add_bracket(l + a, l + c, &[(l + t, q(nv))]);
                }
            }
        }
        let check = if dim <= 40 { JacobiCheck::Full } else { JacobiCheck::Sampled { triples: 4000, seed: 1 } };
        let algebra = b.build(check)?;
        if algebra.killing_form().determinant().is_zero() {
            return Err(Error::SelfCheck(format!("Killing form of {} is degenerate", rs.label)));
        }
        Ok(SplitAlgebra { rs: rs.clone(), algebra })
    }

    pub fn parse(desc: &str) -> Result<Self> {
        SplitAlgebra::new(&RootSystemData::parse(desc)?)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis index of `e_r` for a root `r` given by index into `all_roots`.
    pub fn root_basis_index(&self, root_idx: usize) -> usize {
        self.rs.rank + root_idx
    }

    pub fn cartan_space(&self) -> Subspace {
        Subspace::coordinate(self.dim(), 0..self.rank())
    }

    pub fn positive_space(&self) -> Subspace {
        let l = self.rank();
        Subspace::coordinate(self.dim(), (0..self.rs.num_positive()).map(|k| l + k))
    }

    pub fn negative_space(&self) -> Subspace {
        let (l, np) = (self.rank(), self.rs.num_positive());
        Subspace::coordinate(self.dim(), (0..np).map(|k| l + np + k))
    }

    pub fn borel(&self) -> Subspace {
        self.cartan_space().sum(&self.positive_space()).expect("same ambient")
    }
}

/// `span{e_α, e_β, e_{α+β}}` for positive roots with `α + β` a root but
/// neither `2α + β` nor `α + 2β`: a copy of `h₃`.
pub fn heisenberg_triple(sa: &SplitAlgebra) -> Option<Subspace> {
    let rs = &sa.rs;
    let l = rs.rank;
    let pos = &rs.positive_roots;
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            let s = RootSystemData::add(&pos[a], &pos[b]);
            let Some(&c) = rs.index.get(&s) else { continue };
            let twice_a = RootSystemData::add(&s, &pos[a]);
            let twice_b = RootSystemData::add(&s, &pos[b]);
            if !rs.is_root(&twice_a) && !rs.is_root(&twice_b) {
                return Some(Subspace::coordinate(sa.dim(), [l + a, l + b, l + c]));
            }
        }
    }
    None
}

/// A standard parabolic subalgebra `P_J ⊇ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDesc {
    /// Zero-based simple-root indices.
    pub subset: Vec<usize>,
    /// Positive roots `α` (as indices) with `−α ∈ Ω₁`.
    pub omega1: Vec<usize>,
    /// Positive roots `α` with `−α ∉ Ω₁`; these span the nilradical.
    pub omega1_prime: Vec<usize>,
    pub space: Subspace,
    pub cartan: Subspace,
    pub positive: Subspace,
    pub negative: Subspace,
    pub nilrad: Subspace,
    pub levi: Subspace,
}

impl ParabolicDesc {
    pub fn is_borel(&self) -> bool {
        self.subset.is_empty()
    }

    pub fn label(&self) -> String {
        let s: Vec<String> = self.subset.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", s.join(","))
    }
}

fn supported_on(r: &[i64], subset: &[usize]) -> bool {
    r.iter().enumerate().all(|(i, &c)| c == 0 || subset.contains(&i))
}

/// The standard parabolic for a subset of simple roots, with its nilradical
/// from the root formula cross-checked against the intrinsic nilradical.
pub fn standard_parabolic(sa: &SplitAlgebra, subset: &[usize]) -> Result<ParabolicDesc> {
    let l = sa.rank();
    let np = sa.rs.num_positive();
    let n = sa.dim();
    let mut subset: Vec<usize> = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if let Some(&bad) = subset.iter().find(|&&i| i >= l) {
        return Err(Error::InvalidExample(format!("simple root index {} out of range 1..={l}", bad + 1)));
    }
    let (omega1, omega1_prime): (Vec<usize>, Vec<usize>) =
        (0..np).partition(|&k| supported_on(&sa.rs.positive_roots[k], &subset));
    let cartan = sa.cartan_space();
    let positive = sa.positive_space();
    let negative = Subspace::coordinate(n, omega1.iter().map(|k| l + np + k));
    let nilrad = Subspace::coordinate(n, omega1_prime.iter().map(|k| l + k));
    let levi = Subspace::coordinate(n, (0..l).chain(omega1.iter().map(|k| l + k)).chain(omega1.iter().map(|k| l + np + k)));
    let space = cartan.sum(&positive)?.sum(&negative)?;
    let alg = &sa.algebra;
    if !alg.is_subalgebra(&space) {
        return Err(Error::SelfCheck("standard parabolic is not closed".into()));
    }
    let emb = alg.induced_subalgebra(&space)?;
    let intrinsic = emb.include_space(&nilradical(&emb.algebra)?);
    if intrinsic != nilrad {
        return Err(Error::OracleMismatch(format!(
            "nilradical of parabolic {:?} in {}: root formula dim {}, intrinsic dim {}",
            subset,
            sa.rs.label,
            nilrad.dim(),
            intrinsic.dim()
        )));
    }
    Ok(ParabolicDesc { subset, omega1, omega1_prime, space, cartan, positive, negative, nilrad, levi })
}

pub fn parabolic_nilradical_is_nil(sa: &SplitAlgebra, p: &ParabolicDesc) -> Result<bool> {
    is_nil_subalgebra(&sa.algebra, &p.nilrad)
}

/// All `2^ℓ` standard parabolics in order of the subset bitmask, checking
/// that nilradicals shrink strictly along every covering pair.
pub fn enumerate_standard_parabolics(sa: &SplitAlgebra) -> Result<Vec<ParabolicDesc>> {
    let l = sa.rank();
    let mut out = Vec::with_capacity(1 << l);
    for mask in 0..(1usize << l) {
        let subset: Vec<usize> = (0..l).filter(|i| mask & (1 << i) != 0).collect();
        out.push(standard_parabolic(sa, &subset)?);
    }
    for small in 0..(1usize << l) {
        for i in 0..l {
            if small & (1 << i) != 0 {
                continue;
            }
            let big = small | (1 << i);
            let (np, nq) = (&out[small].nilrad, &out[big].nilrad);
            if !(np.contains(nq)? && nq.dim() < np.dim()) {
                return Err(Error::SelfCheck(format!(
                    "nilradicals not strictly antitone between {} and {}",
                    out[small].label(),
                    out[big].label()
                )));
            }
        }
    }
    Ok(out)
}

/// `P` is minimal iff `P/U(P)` is ad-semisimple. Also checks `U(P) = N(P)`
/// and, independently, that minimality coincides with being the Borel.
pub fn is_minimal_parabolic(sa: &SplitAlgebra, p: &ParabolicDesc, cfg: &Config) -> Result<bool> {
    let alg = &sa.algebra;
    let u = u_of(alg, &p.space, cfg)?;
    if u != p.nilrad {
        return Err(Error::OracleMismatch(format!("U(P) ≠ N(P) for parabolic {}", p.label())));
    }
    let emb = alg.induced_subalgebra(&p.space)?;
    let u_local = emb.restrict_space(&u).expect("U(P) ⊆ P");
    let quot = emb.algebra.quotient(&u_local)?;
    let verdict = is_ad_semisimple(&quot.algebra, cfg);
    let minimal = verdict
        .as_bool()
        .ok_or_else(|| Error::SelfCheck(format!("ad-semisimplicity of P/U(P) undecided for {}", p.label())))?;
    if minimal != p.is_borel() {
        return Err(Error::OracleMismatch(format!("minimality of {} disagrees with the Borel oracle", p.label())));
    }
    Ok(minimal)
}

/// Result of iterating `Q_i = I_L(U_{i-1})`, `U_i = U(Q_i)` to a fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub q: Subspace,
    pub u_q: Subspace,
    pub steps: usize,
}

pub fn parabolic_closure(l: &LieAlgebra, u: &Subspace, cfg: &Config) -> Result<ClosureResult> {
    if !is_nil_subalgebra(l, u)? {
        return Err(Error::NotNil);
    }
    let i_u = l.idealizer(u)?;
    let mut q_cur = i_u.clone();
    let mut u_cur = u_of(l, &q_cur, cfg)?;
    let mut steps = 1;
    loop {
        let q_next = l.idealizer(&u_cur)?;
        if q_next == q_cur {
            break;
        }
        if !q_next.contains(&q_cur)? || steps > l.dim() {
            return Err(Error::SelfCheck("parabolic closure chain is not increasing".into()));
        }
        q_cur = q_next;
        u_cur = u_of(l, &q_cur, cfg)?;
        steps += 1;
    }
    // (i) U ⊆ U(Q), (ii) I_L(U) ⊆ Q, (iii) U(I_L(U)) ⊆ U(Q).
    if !u_cur.contains(u)? {
        return Err(Error::SelfCheck("U ⊄ U(Q)".into()));
    }
    if !q_cur.contains(&i_u)? {
        return Err(Error::SelfCheck("I_L(U) ⊄ Q".into()));
    }
    if !u_cur.contains(&u_of(l, &i_u, cfg)?)? {
        return Err(Error::SelfCheck("U(I_L(U)) ⊄ U(Q)".into()));
    }
    Ok(ClosureResult { q: q_cur, u_q: u_cur, steps })
}

/// `exp(ad u)·w`, exact because `ad u` is nilpotent.
fn exp_ad(l: &LieAlgebra, u: &[Rat], w: &[Rat]) -> Vec<Rat> {
    let a = l.ad(u);
    let mut out = w.to_vec();
    let mut term = w.to_vec();
    for k in 1..=l.dim() {
        term = a.mul_vec(&term);
        if term.iter().all(Zero::is_zero) {
            break;
        }
        let f = Rat::from_integer((k as i64).into()).recip();
        term = term.iter().map(|x| x * &f).collect();
        crate::linalg::add_scaled(&mut out, &Rat::from_integer(1.into()), &term);
    }
    out
}

/// Refutation sampling for maximality of `U(P)` among nil subalgebras: for
/// random nil elements `v = exp(ad u)·w` (`w ∈ n⁻`, `u ∈ U(P)`) outside
/// `U(P)`, the subalgebra generated by `U(P)` and `v` must not be nil.
pub fn maximal_nil_check(sa: &SplitAlgebra, p: &ParabolicDesc, samples: usize, seed: u64) -> Result<bool> {
    let l = &sa.algebra;
    let mut rng = seeded_rng(seed);
    let neg = sa.negative_space();
    for _ in 0..samples {
        let w = random_element(&neg, &mut rng);
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        let u = random_element(&p.nilrad, &mut rng);
        let v = exp_ad(l, &u, &w);
        if p.nilrad.contains_vec(&v) {
            continue;
        }
        let mut gen = p.nilrad.clone();
        gen.insert(&v);
        let closure = l.subalgebra_closure(&gen);
        if is_nil_subalgebra(l, &closure)? {
            return Ok(false);
        }
        let _ = rng.gen::<u8>();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qv;
    use crate::structure::{radical, simple_ideal_decomposition};

    #[test]
    fn root_counts() {
        for (d, np) in [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24)] {
            assert_eq!(RootSystemData::parse(d).unwrap().num_positive(), np, "{d}");
        }
    }

    #[test]
    fn a2_and_g2_roots() {
        let a2 = RootSystemData::parse("A2").unwrap();
        assert_eq!(a2.positive_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let g2 = RootSystemData::parse("G2").unwrap();
        assert_eq!(g2.highest_root(), &[3, 2]);
    }

    #[test]
    fn invalid_types_rejected() {
        for d in ["E6", "B1", "D3", "G3", "", "A", "Ax"] {
            assert!(matches!(RootSystemData::parse(d), Err(Error::InvalidCartanType(_))), "{d}");
        }
    }

    #[test]
    fn chevalley_constants_are_string_lengths() {
        for d in ["A3", "B2", "C3", "G2"] {
            let rs = RootSystemData::parse(d).unwrap();
            let roots = rs.all_roots();
            for a in &roots {
                for b in &roots {
                    let s = RootSystemData::add(a, b);
                    let nv = rs.n(a, b);
                    assert_eq!(nv != 0, rs.is_root(&s), "{d}: closure");
                    if nv != 0 {
                        assert_eq!(nv.abs(), rs.string_down(a, b) + 1, "{d}: |N| = p + 1");
                        assert_eq!(nv, -rs.n(b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn split_a1_is_sl2() {
        let sa = SplitAlgebra::parse("A1").unwrap();
        // basis h, e, f: [h, e] = 2e, [e, f] = h.
        assert_eq!(sa.algebra.bracket_basis(0, 1), qv(&[0, 2, 0]));
        assert_eq!(sa.algebra.bracket_basis(1, 2), qv(&[1, 0, 0]));
        assert_eq!(sa.algebra.bracket_basis(0, 2), qv(&[0, 0, -2]));
    }

    #[test]
    fn split_algebras_are_semisimple() {
        for (d, dim) in [("A2", 8), ("B2", 10), ("G2", 14)] {
            let sa = SplitAlgebra::parse(d).unwrap();
            assert_eq!(sa.dim(), dim);
            assert!(radical(&sa.algebra).is_zero());
        }
        let aa = SplitAlgebra::parse("A1xA1").unwrap();
        assert_eq!(simple_ideal_decomposition(&aa.algebra).unwrap().len(), 2);
        assert_eq!(simple_ideal_decomposition(&SplitAlgebra::parse("A2").unwrap().algebra).unwrap().len(), 1);
    }

    #[test]
    fn a2_parabolics() {
        let sa = SplitAlgebra::parse("A2").unwrap();
        let ps = enumerate_standard_parabolics(&sa).unwrap();
        assert_eq!(ps.len(), 4);
        let dims: Vec<usize> = ps.iter().map(|p| p.nilrad.dim()).collect();
        assert_eq!(dims, vec![3, 2, 2, 0]);
        assert_eq!(ps[0].space.dim(), 5);
        assert_eq!(ps[1].space.dim(), 6);
        assert!(sa.algebra.is_abelian_subspace(&ps[1].nilrad));
        assert!(!sa.algebra.is_abelian_subspace(&ps[0].nilrad));
        for p in &ps {
            assert!(parabolic_nilradical_is_nil(&sa, p).unwrap());
            assert_eq!(sa.algebra.idealizer(&p.nilrad).unwrap(), p.space);
        }
    }

    #[test]
    fn minimality_and_closure_in_a2() {
        let sa = SplitAlgebra::parse("A2").unwrap();
        let cfg = Config::default();
        let borel = standard_parabolic(&sa, &[]).unwrap();
        let p1 = standard_parabolic(&sa, &[0]).unwrap();
        assert!(is_minimal_parabolic(&sa, &borel, &cfg).unwrap());
        assert!(!is_minimal_parabolic(&sa, &p1, &cfg).unwrap());
        let top = sa.rank() + sa.rs.num_positive() - 1;
        let highest = Subspace::coordinate(sa.dim(), [top]);
        let c = parabolic_closure(&sa.algebra, &highest, &cfg).unwrap();
        assert_eq!(c.q, borel.space);
        let c0 = parabolic_closure(&sa.algebra, &Subspace::zero(sa.dim()), &cfg).unwrap();
        assert!(c0.q.is_full());
        assert!(parabolic_closure(&sa.algebra, &sa.cartan_space(), &cfg).is_err());
    }

    #[test]
    fn maximal_nil_refutations() {
        let sa = SplitAlgebra::parse("A2").unwrap();
        let borel = standard_parabolic(&sa, &[]).unwrap();
        assert!(maximal_nil_check(&sa, &borel, 8, 5).unwrap());
    }

    #[test]
    fn heisenberg_triples() {
        assert!(heisenberg_triple(&SplitAlgebra::parse("A1").unwrap()).is_none());
        assert!(heisenberg_triple(&SplitAlgebra::parse("A1xA1").unwrap()).is_none());
        for d in ["A2", "B2", "G2"] {
            let sa = SplitAlgebra::parse(d).unwrap();
            let k = heisenberg_triple(&sa).unwrap();
            let h = sa.algebra.induced_subalgebra(&k).unwrap().algebra;
            assert!(crate::classes::is_heisenberg3(&h), "{d}");
        }
    }

    #[test]
    fn subset_out_of_range() {
        let sa = SplitAlgebra::parse("A2").unwrap();
        assert!(standard_parabolic(&sa, &[2]).is_err());
    }
}
