//! The Lie algebra `g` in a Chevalley basis.
//!
//! Basis order: `H_1, …, H_r` (simple coroots), then `E_α` for every root in
//! the global root order. Structure constants `c_{α,β}` are fixed by the
//! extraspecial-pair algorithm: for each positive `ξ`, the pair `(γ, δ)` with
//! `γ` earliest in root order and `γ + δ = ξ` gets `c_{γ,δ} = +(p + 1)`, and
//! every other constant follows from the standard relations among them.

use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{format_vector, rat, Matrix, Rational};
use crate::rootsys::{fresh_id, Root, RootSystem};

/// `g` with its integer bracket table and Killing form.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    id: u64,
    rs: Arc<RootSystem>,
    dim: usize,
    /// `n[a][b] = c_{α_a, α_b}`, zero when `α_a + α_b` is not a root.
    n: Vec<Vec<i64>>,
    /// `table[i * dim + j]` = sparse `[b_i, b_j]`.
    table: Vec<Vec<(usize, i64)>>,
    killing: Matrix,
}

/// An element of `g`, as coordinates over the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    algebra: u64,
    coords: Vec<Rational>,
}

impl LieElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        if self.algebra != other.algebra {
            return Err(Error::Mismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LieElement {
            algebra: self.algebra,
            coords,
        })
    }

    pub fn scaled(&self, c: &Rational) -> LieElement {
        LieElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Serialize for LieElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        format_vector(&self.coords).serialize(serializer)
    }
}

impl ChevalleyAlgebra {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let n = structure_constants(&rs);
        let r = rs.rank();
        let nroots = rs.num_roots();
        let dim = r + nroots;
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..nroots {
            let ev = rs.eval_on_coroots(a);
            for (i, &c) in ev.iter().enumerate() {
                if c != 0 {
                    table[i * dim + r + a] = vec![(r + a, c)];
                    table[(r + a) * dim + i] = vec![(r + a, -c)];
                }
            }
            let neg = rs.neg_index(a);
            table[(r + a) * dim + r + neg] = rs
                .coroot_coords(a)
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .collect();
            for b in 0..nroots {
                if n[a][b] != 0 {
                    let sum = rs.root(a).plus_multiple(1, rs.root(b));
                    let s = rs.index_of(&sum).expect("nonzero constant implies a root");
                    table[(r + a) * dim + r + b] = vec![(r + s, n[a][b])];
                }
            }
        }
        let killing = killing_by_trace(dim, &table);
        ChevalleyAlgebra {
            id: fresh_id(),
            rs,
            dim,
            n,
            table,
            killing,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(ChevalleyAlgebra::new(Arc::new(RootSystem::parse(s)?)))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Basis position of `E_α` for root index `a`.
    pub fn e_position(&self, a: usize) -> usize {
        self.rank() + a
    }

    /// Root index of basis position `k`, or `None` for `H_i`.
    pub fn root_at(&self, k: usize) -> Option<usize> {
        k.checked_sub(self.rank())
    }

    /// `[b_i, b_j]` as sparse integer coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim + j]
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            algebra: self.id,
            coords: vec![Rational::zero(); self.dim],
        }
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<LieElement> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: coords.len(),
            });
        }
        Ok(LieElement {
            algebra: self.id,
            coords,
        })
    }

    pub fn basis_element(&self, k: usize) -> LieElement {
        let mut x = self.zero();
        x.coords[k] = Rational::one();
        x
    }

    /// `E_α` for root index `a`.
    pub fn e(&self, a: usize) -> LieElement {
        self.basis_element(self.e_position(a))
    }

    /// `E_α` for a root given by coordinates.
    pub fn e_root(&self, alpha: &Root) -> Result<LieElement> {
        Ok(self.e(self.rs.require(alpha)?))
    }

    /// Simple coroot `H_i`.
    pub fn h(&self, i: usize) -> LieElement {
        self.basis_element(i)
    }

    /// The coroot `H_α`, with `α(H_α) = 2`.
    pub fn coroot(&self, a: usize) -> LieElement {
        let mut x = self.zero();
        for (i, c) in self.rs.coroot_coords(a).into_iter().enumerate() {
            x.coords[i] = rat(c);
        }
        x
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        if x.algebra != self.id || y.algebra != self.id {
            return Err(Error::Mismatch);
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] += &xy * rat(c);
                }
            }
        }
        Ok(LieElement {
            algebra: self.id,
            coords: out,
        })
    }

    /// Matrix of `ad x` (column `j` is `[x, b_j]`).
    pub fn ad_matrix(&self, x: &LieElement) -> Result<Matrix> {
        if x.algebra != self.id {
            return Err(Error::Mismatch);
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for j in 0..self.dim {
                for &(k, c) in self.bracket_basis(i, j) {
                    let v = m.get(k, j) + xi * rat(c);
                    m.set(k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> &Matrix {
        &self.killing
    }

    pub fn killing_form(&self, x: &LieElement, y: &LieElement) -> Result<Rational> {
        if x.algebra != self.id || y.algebra != self.id {
            return Err(Error::Mismatch);
        }
        self.killing.bilinear(&x.coords, &y.coords)
    }

    /// Killing form restricted to `h` in the simple-coroot basis.
    pub fn killing_on_h(&self) -> Matrix {
        let r = self.rank();
        let mut m = Matrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                m.set(i, j, self.killing.get(i, j).clone());
            }
        }
        m
    }

    /// `λ_α = 1 / K(E_α, E_{−α})`.
    pub fn lambda(&self, alpha: &Root) -> Result<Rational> {
        Ok(self.lambda_index(self.rs.require(alpha)?))
    }

    pub fn lambda_index(&self, a: usize) -> Rational {
        let k = self
            .killing
            .get(self.e_position(a), self.e_position(self.rs.neg_index(a)));
        k.recip()
    }

    /// `c_{α,β}`, zero when `α + β ∉ Φ`.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        let a = self.rs.require(alpha)?;
        let b = self.rs.require(beta)?;
        self.structure_constant_index(a, b)
    }

    pub fn structure_constant_index(&self, a: usize, b: usize) -> Result<i64> {
        if a == b || a == self.rs.neg_index(b) {
            return Err(Error::ProportionalRoots);
        }
        Ok(self.n[a][b])
    }

    /// Basis triples `(i, j, k)` on which the Jacobi identity fails.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        let mut bad = Vec::new();
        let mut acc = vec![0i64; d];
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
                    for &(x, y, z) in &[(i, j, k), (j, k, i), (k, i, j)] {
                        for &(m, c) in self.bracket_basis(y, z) {
                            for &(t, e) in self.bracket_basis(x, m) {
                                acc[t] += c * e;
                            }
                        }
                    }
                    if acc.iter().any(|&v| v != 0) {
                        bad.push((i, j, k));
                    }
                    acc.iter_mut().for_each(|v| *v = 0);
                }
            }
        }
        bad
    }
}

// Dense index loops mirror the trace formula.
#[allow(clippy::needless_range_loop)]
fn killing_by_trace(dim: usize, table: &[Vec<(usize, i64)>]) -> Matrix {
    // ad b_i as a dense column-major integer matrix: ad[i][j*dim + k] = coeff of b_k in [b_i, b_j]
    let ad: Vec<Vec<i64>> = (0..dim)
        .map(|i| {
            let mut m = vec![0i64; dim * dim];
            for j in 0..dim {
                for &(k, c) in &table[i * dim + j] {
                    m[j * dim + k] = c;
                }
            }
            m
        })
        .collect();
    let mut k = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            // tr(ad_i ad_j) = Σ_{l,m} (ad_i)_{l m} (ad_j)_{m l}
            let mut t = 0i64;
            for l in 0..dim {
                for &(m, c) in &table[i * dim + l] {
                    let v = ad[j][m * dim + l];
                    if v != 0 {
                        t += c * v;
                    }
                }
            }
            k.set(i, j, rat(t));
            k.set(j, i, rat(t));
        }
    }
    k
}

#[allow(clippy::needless_range_loop)]
fn structure_constants(rs: &RootSystem) -> Vec<Vec<i64>> {
    let nroots = rs.num_roots();
    let npos = rs.num_positive();
    let sum_index = |a: usize, b: usize| rs.index_of(&rs.root(a).plus_multiple(1, rs.root(b)));
    let diff_index = |a: usize, b: usize| rs.index_of(&rs.root(a).plus_multiple(-1, rs.root(b)));
    let mut n = vec![vec![0i64; nroots]; nroots];

    // Mixed-sign constants from positive ones, valid once the positive pairs
    // summing to lower heights are filled in.
    fn mixed(rs: &RootSystem, n: &[Vec<i64>], a: usize, b: usize) -> Rational {
        let pa = rs.is_positive_index(a);
        let pb = rs.is_positive_index(b);
        let sum = rs.root(a).plus_multiple(1, rs.root(b));
        let Some(s) = rs.index_of(&sum) else {
            return Rational::zero();
        };
        match (pa, pb) {
            (true, true) => rat(n[a][b]),
            (false, false) => -rat(n[rs.neg_index(a)][rs.neg_index(b)]),
            (false, true) => -mixed(rs, n, b, a),
            (true, false) => {
                if rs.is_positive_index(s) {
                    // (α, β, −σ) sum to zero: N(α,β) = N(β,−σ)(σ,σ)/(α,α)
                    let nb = -rat(n[rs.neg_index(b)][s]);
                    nb * rs.norm(s) / rs.norm(a)
                } else {
                    // γ = −σ > 0, (α, β, γ) sum to zero: N(α,β) = N(γ,α)(γ,γ)/(β,β)
                    let g = rs.neg_index(s);
                    rat(n[g][a]) * rs.norm(g) / rs.norm(b)
                }
            }
        }
    }

    for xi in 0..npos {
        let mut pairs: Vec<(usize, usize)> = (0..npos)
            .filter_map(|a| {
                let b = diff_index(xi, a)?;
                (rs.is_positive_index(b) && a < b).then_some((a, b))
            })
            .collect();
        pairs.sort();
        let Some(&(g, d)) = pairs.first() else {
            continue;
        };
        let (p, _) = rs.root_string_index(d, g).expect("distinct positive roots");
        n[g][d] = p as i64 + 1;
        n[d][g] = -n[g][d];
        let ngd = rat(n[g][d]);
        let mg = rs.neg_index(g);
        let md = rs.neg_index(d);
        for &(a, b) in &pairs[1..] {
            let mut acc = Rational::zero();
            if let Some(bg) = diff_index(b, g) {
                acc += mixed(rs, &n, b, mg) * mixed(rs, &n, a, md) / rs.norm(bg);
            }
            if let Some(ag) = diff_index(a, g) {
                acc += mixed(rs, &n, mg, a) * mixed(rs, &n, b, md) / rs.norm(ag);
            }
            let v = acc * rs.norm(xi) / &ngd;
            debug_assert!(v.is_integer());
            let v = v.to_integer().to_i64().expect("small integer");
            n[a][b] = v;
            n[b][a] = -v;
        }
    }
    let mut full = vec![vec![0i64; nroots]; nroots];
    for a in 0..nroots {
        for b in 0..nroots {
            if a == b || a == rs.neg_index(b) || sum_index(a, b).is_none() {
                continue;
            }
            let v = mixed(rs, &n, a, b);
            debug_assert!(v.is_integer());
            full[a][b] = v.to_integer().to_i64().expect("small integer");
        }
    }
    full
}
