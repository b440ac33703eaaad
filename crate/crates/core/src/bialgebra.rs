//! The double `d = g ⊕ g` and its Lagrangian subalgebras.
//!
//! Coordinates on `d` are the Chevalley coordinates of the first summand
//! followed by those of the second. The pairing is
//! `⟨(x₁,y₁),(x₂,y₂)⟩ = c·(K(x₁,x₂) − K(y₁,y₂))` with `K` the Killing form and
//! `c = 1` unless a scale is chosen explicitly. The standard Manin triple is
//! `(d, g_Δ, g*)` with `g* = h_{−Δ} + (n, 0) + (0, n₋)`.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_vector, parse_rational, rat, Matrix, Rational, Subspace};
use crate::rootsys::RootSystem;
use crate::weyl::{ElementId, WeylGroup};

/// `g ⊕ g` with its split invariant form and the standard Manin triple.
#[derive(Debug, Clone)]
pub struct Double {
    algebra: Arc<ChevalleyAlgebra>,
    n: usize,
    form: Matrix,
    g_delta: Subspace,
    g_star: Subspace,
    /// Rows: basis of `g_Δ`, then basis of `g*`.
    splitting_inverse: Matrix,
}

/// How a candidate subspace was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    /// `l_{V,u,v}`.
    L {
        v_space: Subspace,
        u: ElementId,
        v: ElementId,
    },
    /// `s_{V,u,v} = l_{V,u,v·w₀}`.
    S {
        v_space: Subspace,
        u: ElementId,
        v: ElementId,
    },
    /// `z_{u,v} = (u, v)·[h_Δ + (n,0) + (0,n₋)]`.
    Z {
        u: ElementId,
        v: ElementId,
    },
    Raw,
}

impl Recipe {
    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::L { .. } => "l",
            Recipe::S { .. } => "s",
            Recipe::Z { .. } => "z",
            Recipe::Raw => "raw",
        }
    }
}

/// A subspace of `d` of dimension `dim g` tagged with its construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianCandidate {
    pub space: Subspace,
    pub recipe: Recipe,
}

/// `m ⊆ g` and `m^⊥ ⊆ g*` recovered from a coisotropic Lagrangian `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coisotropic {
    /// Subspace of `g`.
    pub m: Subspace,
    /// `l ∩ g*`, a subspace of `d`.
    pub m_perp: Subspace,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecipeReport {
    pub kind: String,
    #[serde(rename = "V_basis")]
    pub v_basis: Option<Vec<Vec<String>>>,
    pub u_word: Option<String>,
    pub v_word: Option<String>,
}

/// Everything computed about one candidate, in its external JSON shape.
#[derive(Debug, Clone, Serialize)]
pub struct CandidateReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub recipe: RecipeReport,
    pub basis: Vec<Vec<String>>,
    pub lagrangian: bool,
    pub coisotropic: bool,
    pub m_basis: Option<Vec<Vec<String>>>,
    pub m_perp_basis: Option<Vec<Vec<String>>>,
    pub rank_pi: usize,
}

pub(crate) fn rows_as_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_rows().map(format_vector).collect()
}

impl Double {
    pub fn new(algebra: Arc<ChevalleyAlgebra>) -> Self {
        Double::with_scale(algebra, Rational::one())
    }

    /// The double with form scaled by a nonzero `c`.
    pub fn with_scale(algebra: Arc<ChevalleyAlgebra>, c: Rational) -> Self {
        assert!(!c.is_zero(), "form scale must be nonzero");
        let n = algebra.dim();
        let k = algebra.killing_matrix();
        let form = k.direct_sum(&k.scaled(&-Rational::one())).scaled(&c);

        let rs = algebra.root_system().clone();
        let npos = rs.num_positive();
        let r = rs.rank();
        let delta_rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| pair_unit(n, Some(i), Some(i), false))
            .collect();
        let mut star_rows: Vec<Vec<Rational>> = (0..r)
            .map(|i| pair_unit(n, Some(i), Some(i), true))
            .collect();
        for a in 0..npos {
            star_rows.push(pair_unit(n, Some(algebra.e_position(a)), None, false));
        }
        for a in 0..npos {
            star_rows.push(pair_unit(
                n,
                None,
                Some(algebra.e_position(rs.neg_index(a))),
                false,
            ));
        }
        let g_delta = Subspace::new(2 * n, delta_rows.clone()).expect("width 2n");
        let g_star = Subspace::new(2 * n, star_rows.clone()).expect("width 2n");
        let all: Vec<Vec<Rational>> = delta_rows.into_iter().chain(star_rows).collect();
        let splitting_inverse = Matrix::from_rows(2 * n, all)
            .expect("width 2n")
            .inverse()
            .expect("g_Δ and g* span d");
        let d = Double {
            algebra,
            n,
            form,
            g_delta,
            g_star,
            splitting_inverse,
        };
        let manin = d.manin_check();
        assert!(manin.holds(), "standard Manin triple failed: {manin:?}");
        d
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.algebra.root_system()
    }

    /// `dim d = 2 dim g`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn g_delta(&self) -> &Subspace {
        &self.g_delta
    }

    pub fn g_star(&self) -> &Subspace {
        &self.g_star
    }

    /// Each Manin-triple condition evaluated independently.
    pub fn manin_check(&self) -> ManinReport {
        let inter = self.g_delta.intersect(&self.g_star).expect("same ambient");
        let sum = self.g_delta.sum(&self.g_star).expect("same ambient");
        ManinReport {
            form_nondegenerate: self.form.rank() == self.dim(),
            g_delta_lagrangian: self.is_lagrangian(&self.g_delta).unwrap_or(false),
            g_star_lagrangian: self.is_lagrangian(&self.g_star).unwrap_or(false),
            complementary: inter.dim() == 0 && sum.dim() == self.dim(),
        }
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: s.ambient_dim(),
            })
        }
    }

    /// Component-wise bracket on `d`.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        let mut out = vec![Rational::zero(); 2 * n];
        for half in [0, n] {
            for (i, xi) in x[half..half + n]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
            {
                for (j, yj) in y[half..half + n]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                {
                    let xy = xi * yj;
                    for &(k, c) in self.algebra.bracket_basis(i, j) {
                        out[half + k] += &xy * rat(c);
                    }
                }
            }
        }
        out
    }

    /// Whether `s ⊆ d` is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.check(s)?;
        let rows: Vec<&[Rational]> = s.basis_rows().collect();
        for (i, x) in rows.iter().enumerate() {
            for y in &rows[i + 1..] {
                if !s.contains(&self.bracket(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `dim s = dim g`, isotropic, and closed under the bracket.
    pub fn is_lagrangian(&self, s: &Subspace) -> Result<bool> {
        self.check(s)?;
        Ok(s.dim() == self.n && s.is_isotropic(&self.form)? && self.is_subalgebra(s)?)
    }

    /// The splitting criterion `dim(l ∩ g_Δ) + dim(l ∩ g*) = dim g` and the
    /// projection criterion `dim pr_{g_Δ}(l) + dim pr_{g*}(l) = dim g`.
    pub fn coisotropy_criteria(&self, l: &Subspace) -> Result<(bool, bool)> {
        self.check(l)?;
        let split = l.intersect(&self.g_delta)?.dim() + l.intersect(&self.g_star)?.dim();
        let coords = l.basis().mul(&self.splitting_inverse)?;
        let n = self.n;
        let block = |from: usize| {
            let rows = coords
                .row_iter()
                .map(|r| r[from..from + n].to_vec())
                .collect();
            Matrix::from_rows(n, rows).expect("width n").rank()
        };
        let proj = block(0) + block(n);
        Ok((split == n, proj == n))
    }

    /// Coisotropy of a Lagrangian subalgebra, with both criteria required to agree.
    pub fn is_coisotropic(&self, l: &Subspace) -> Result<bool> {
        if !self.is_lagrangian(l)? {
            return Err(Error::NotLagrangian);
        }
        self.coisotropic_unchecked(l)
    }

    fn coisotropic_unchecked(&self, l: &Subspace) -> Result<bool> {
        let (splitting, projection) = self.coisotropy_criteria(l)?;
        if splitting != projection {
            return Err(Error::CriteriaDisagree {
                splitting,
                projection,
            });
        }
        Ok(splitting)
    }

    /// `m` with `m_Δ = l ∩ g_Δ`, and `m^⊥ = l ∩ g*`.
    pub fn extract_coisotropic(&self, l: &Subspace) -> Result<Coisotropic> {
        if !self.is_coisotropic(l)? {
            return Err(Error::NotCoisotropic);
        }
        Ok(self.extract_unchecked(l))
    }

    fn extract_unchecked(&self, l: &Subspace) -> Coisotropic {
        let n = self.n;
        let m_delta = l.intersect(&self.g_delta).expect("same ambient");
        let m = Subspace::new(n, m_delta.basis_rows().map(|r| r[..n].to_vec()).collect())
            .expect("width n");
        let m_perp = l.intersect(&self.g_star).expect("same ambient");
        Coisotropic { m, m_perp }
    }

    /// `x ↦ (x, x)` on subspaces of `g`.
    pub fn diagonal(&self, m: &Subspace) -> Result<Subspace> {
        if m.ambient_dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: m.ambient_dim(),
            });
        }
        let rows = m
            .basis_rows()
            .map(|r| r.iter().chain(r.iter()).cloned().collect())
            .collect();
        Subspace::new(self.dim(), rows)
    }

    fn same_group(&self, group: &WeylGroup) -> Result<()> {
        if group.root_system().id() == self.root_system().id() {
            Ok(())
        } else {
            Err(Error::Mismatch)
        }
    }

    /// Normalizes `V` to coroot coordinates (ambient `rank`). Accepts `V`
    /// given either in `h` coordinates or inside `g`.
    pub fn cartan_subspace(&self, v: &Subspace) -> Result<Subspace> {
        let r = self.algebra.rank();
        if v.ambient_dim() == r {
            return Ok(v.clone());
        }
        if v.ambient_dim() != self.n {
            return Err(Error::NotInCartan);
        }
        let mut rows = Vec::new();
        for row in v.basis_rows() {
            if row[r..].iter().any(|c| !c.is_zero()) {
                return Err(Error::NotInCartan);
            }
            rows.push(row[..r].to_vec());
        }
        Subspace::new(r, rows)
    }

    /// `V^⊥ ⊆ h` under the Killing form restricted to `h`.
    pub fn cartan_perp(&self, v: &Subspace) -> Result<Subspace> {
        let v = self.cartan_subspace(v)?;
        v.perp(&self.algebra.killing_on_h())
    }

    /// `l_{V,u,v} = V_Δ + (V^⊥)_{−Δ} + (u·n, 0) + (0, v·n₋)`.
    pub fn build_l(
        &self,
        group: &WeylGroup,
        v_space: &Subspace,
        u: ElementId,
        v: ElementId,
    ) -> Result<LagrangianCandidate> {
        self.same_group(group)?;
        let vh = self.cartan_subspace(v_space)?;
        let vp = self.cartan_perp(&vh)?;
        let n = self.n;
        let mut rows = Vec::with_capacity(n);
        for x in vh.basis_rows() {
            rows.push(self.embed_h_pair(x, x, false));
        }
        for x in vp.basis_rows() {
            rows.push(self.embed_h_pair(x, x, true));
        }
        self.push_nilpotent_parts(group, u, v, &mut rows);
        Ok(LagrangianCandidate {
            space: Subspace::new(2 * n, rows)?,
            recipe: Recipe::L { v_space: vh, u, v },
        })
    }

    /// `s_{V,u,v} = l_{V,u,v·w₀}`.
    pub fn build_s(
        &self,
        group: &WeylGroup,
        v_space: &Subspace,
        u: ElementId,
        v: ElementId,
    ) -> Result<LagrangianCandidate> {
        let vw0 = group.multiply(v, group.long_element());
        let l = self.build_l(group, v_space, u, vw0)?;
        Ok(LagrangianCandidate {
            space: l.space,
            recipe: Recipe::S {
                v_space: self.cartan_subspace(v_space)?,
                u,
                v,
            },
        })
    }

    /// `z_{u,v} = {(u·x, v·x) : x ∈ h} + (u·n, 0) + (0, v·n₋)`.
    pub fn build_z(
        &self,
        group: &WeylGroup,
        u: ElementId,
        v: ElementId,
    ) -> Result<LagrangianCandidate> {
        self.same_group(group)?;
        let r = self.algebra.rank();
        let (mu, mv) = (group.h_matrix(u), group.h_matrix(v));
        let mut rows = Vec::with_capacity(self.n);
        for j in 0..r {
            let cu: Vec<Rational> = (0..r).map(|i| mu.get(i, j).clone()).collect();
            let cv: Vec<Rational> = (0..r).map(|i| mv.get(i, j).clone()).collect();
            rows.push(self.embed_h_pair(&cu, &cv, false));
        }
        self.push_nilpotent_parts(group, u, v, &mut rows);
        Ok(LagrangianCandidate {
            space: Subspace::new(2 * self.n, rows)?,
            recipe: Recipe::Z { u, v },
        })
    }

    /// `(x, ±y)` for `x, y ∈ h` in coroot coordinates.
    fn embed_h_pair(&self, x: &[Rational], y: &[Rational], negate: bool) -> Vec<Rational> {
        let n = self.n;
        let mut row = vec![Rational::zero(); 2 * n];
        for (i, c) in x.iter().enumerate() {
            row[i] = c.clone();
        }
        for (i, c) in y.iter().enumerate() {
            row[n + i] = if negate { -c.clone() } else { c.clone() };
        }
        row
    }

    fn push_nilpotent_parts(
        &self,
        group: &WeylGroup,
        u: ElementId,
        v: ElementId,
        rows: &mut Vec<Vec<Rational>>,
    ) {
        let rs = self.root_system();
        let n = self.n;
        let (eu, ev) = (group.element(u), group.element(v));
        for a in 0..rs.num_positive() {
            let pos = self.algebra.e_position(eu.apply_index(a));
            rows.push(pair_unit(n, Some(pos), None, false));
        }
        for a in 0..rs.num_positive() {
            let pos = self.algebra.e_position(ev.apply_index(rs.neg_index(a)));
            rows.push(pair_unit(n, None, Some(pos), false));
        }
    }

    /// `c(l_{V,u,v}) = V + ⊕_{α∈Φ_u} g_{−α} + ⊕_{α∈Φ_v} g_α`, inside `g`.
    pub fn closed_form_m(
        &self,
        group: &WeylGroup,
        v_space: &Subspace,
        u: ElementId,
        v: ElementId,
    ) -> Result<Subspace> {
        self.same_group(group)?;
        let vh = self.cartan_subspace(v_space)?;
        let rs = self.root_system();
        let n = self.n;
        let mut rows: Vec<Vec<Rational>> = vh
            .basis_rows()
            .map(|x| {
                let mut row = vec![Rational::zero(); n];
                row[..x.len()].clone_from_slice(x);
                row
            })
            .collect();
        for a in group.inversion_indices(u) {
            rows.push(crate::linalg::unit_vector(
                n,
                self.algebra.e_position(rs.neg_index(a)),
            ));
        }
        for a in group.inversion_indices(v) {
            rows.push(crate::linalg::unit_vector(n, self.algebra.e_position(a)));
        }
        Subspace::new(n, rows)
    }

    /// `m^⊥ = (V^⊥)_{−Δ} + ⊕_{α∉Φ_u}(g_α, 0) + ⊕_{α∉Φ_v}(0, g_{−α})`, inside `d`.
    pub fn closed_form_m_perp(
        &self,
        group: &WeylGroup,
        v_space: &Subspace,
        u: ElementId,
        v: ElementId,
    ) -> Result<Subspace> {
        self.same_group(group)?;
        let vp = self.cartan_perp(v_space)?;
        let rs = self.root_system();
        let n = self.n;
        let mut rows: Vec<Vec<Rational>> = vp
            .basis_rows()
            .map(|x| self.embed_h_pair(x, x, true))
            .collect();
        let (mu, mv) = (group.inversion_mask(u), group.inversion_mask(v));
        for a in 0..rs.num_positive() {
            if mu >> a & 1 == 0 {
                rows.push(pair_unit(n, Some(self.algebra.e_position(a)), None, false));
            }
            if mv >> a & 1 == 0 {
                rows.push(pair_unit(
                    n,
                    None,
                    Some(self.algebra.e_position(rs.neg_index(a))),
                    false,
                ));
            }
        }
        Subspace::new(2 * n, rows)
    }

    /// Evaluates a candidate in full for reporting.
    pub fn report(&self, group: &WeylGroup, c: &LagrangianCandidate) -> Result<CandidateReport> {
        self.same_group(group)?;
        let lagrangian = self.is_lagrangian(&c.space)?;
        let coisotropic = lagrangian && self.coisotropic_unchecked(&c.space)?;
        let extracted = coisotropic.then(|| self.extract_unchecked(&c.space));
        let word = |w: ElementId| Some(group.word_string(w));
        let (v_basis, u_word, v_word, rank) = match &c.recipe {
            Recipe::L { v_space, u, v } => (
                Some(rows_as_strings(v_space)),
                word(*u),
                word(*v),
                rank_pi(group, *u, *v),
            ),
            Recipe::S { v_space, u, v } => {
                let vw0 = group.multiply(*v, group.long_element());
                (
                    Some(rows_as_strings(v_space)),
                    word(*u),
                    word(*v),
                    rank_pi(group, *u, vw0),
                )
            }
            Recipe::Z { u, v } => (None, word(*u), word(*v), rank_pi(group, *u, *v)),
            Recipe::Raw => (None, None, None, 0),
        };
        Ok(CandidateReport {
            cartan_type: self.root_system().cartan_type().to_string(),
            recipe: RecipeReport {
                kind: c.recipe.kind().to_string(),
                v_basis,
                u_word,
                v_word,
            },
            basis: rows_as_strings(&c.space),
            lagrangian,
            coisotropic,
            m_basis: extracted.as_ref().map(|e| rows_as_strings(&e.m)),
            m_perp_basis: extracted.as_ref().map(|e| rows_as_strings(&e.m_perp)),
            rank_pi: rank,
        })
    }
}

/// Outcome of the Manin-triple checks on a double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ManinReport {
    pub form_nondegenerate: bool,
    pub g_delta_lagrangian: bool,
    pub g_star_lagrangian: bool,
    pub complementary: bool,
}

impl ManinReport {
    pub fn holds(&self) -> bool {
        self.form_nondegenerate
            && self.g_delta_lagrangian
            && self.g_star_lagrangian
            && self.complementary
    }
}

/// Row of `d` with unit entries at the given positions of each summand;
/// `negate` flips the second entry.
fn pair_unit(n: usize, left: Option<usize>, right: Option<usize>, negate: bool) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); 2 * n];
    if let Some(i) = left {
        row[i] = Rational::one();
    }
    if let Some(j) = right {
        row[n + j] = if negate {
            -Rational::one()
        } else {
            Rational::one()
        };
    }
    row
}

/// `ℓ(u) + ℓ(v) − ℓ(u⁻¹v)`.
pub fn rank_pi(group: &WeylGroup, u: ElementId, v: ElementId) -> usize {
    let w = group.multiply(group.inverse(u), v);
    let r = group.length(u) + group.length(v) - group.length(w);
    debug_assert!(r.is_multiple_of(2));
    r
}

/// `ℓ(w₁) + ℓ(w₂) − ℓ(w) − dim h^{−w w₂⁻¹ w₁}`.
pub fn rank_pi_general(group: &WeylGroup, w: ElementId, w1: ElementId, w2: ElementId) -> i64 {
    let t = group.multiply(group.multiply(w, group.inverse(w2)), w1);
    group.length(w1) as i64 + group.length(w2) as i64
        - group.length(w) as i64
        - group.minus_fixed_dim(t) as i64
}

/// Seed used by the default `V` battery.
pub const DEFAULT_SEED: u64 = 0;

/// Test subspaces of `h`: `0`, `h`, each coroot line `C·H_i`, `C·H_θ`, a
/// pseudo-random line and a pseudo-random hyperplane. Entries may coincide in
/// low rank and are kept anyway.
pub fn v_battery(rs: &RootSystem, seed: u64) -> Vec<(String, Subspace)> {
    let r = rs.rank();
    let mut out = vec![
        ("0".to_string(), Subspace::zero(r)),
        ("h".to_string(), Subspace::full(r)),
    ];
    for i in 0..r {
        out.push((format!("H{}", i + 1), Subspace::coordinate(r, [i])));
    }
    out.push(("Htheta".to_string(), coroot_line(rs, rs.highest_root())));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nonzero = || loop {
        let v: Vec<Rational> = (0..r).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    };
    let line = nonzero();
    out.push((
        "random-line".to_string(),
        Subspace::new(r, vec![line]).expect("width r"),
    ));
    let normal = nonzero();
    let hyper = Subspace::new(r, vec![normal])
        .expect("width r")
        .annihilator();
    out.push(("random-hyperplane".to_string(), hyper));
    out
}

/// `C·H_α` in coroot coordinates.
pub fn coroot_line(rs: &RootSystem, a: usize) -> Subspace {
    let row = rs.coroot_coords(a).into_iter().map(rat).collect();
    Subspace::new(rs.rank(), vec![row]).expect("width r")
}

/// Parses a subspace of `h`: `0`, `h`/`full`, `Htheta`, `H<i>` (1-based
/// simple coroot), or `;`-separated rows of `,`-separated rationals.
pub fn parse_cartan_subspace(rs: &RootSystem, spec: &str) -> Result<Subspace> {
    let r = rs.rank();
    let bad = || Error::InvalidSubspaceSpec(spec.to_string());
    let s = spec.trim();
    match s {
        "0" => return Ok(Subspace::zero(r)),
        "h" | "full" => return Ok(Subspace::full(r)),
        "Htheta" => return Ok(coroot_line(rs, rs.highest_root())),
        _ => {}
    }
    if let Some(i) = s.strip_prefix('H') {
        let i: usize = i.parse().map_err(|_| bad())?;
        if i == 0 || i > r {
            return Err(bad());
        }
        return Ok(Subspace::coordinate(r, [i - 1]));
    }
    let rows = s
        .split(';')
        .map(|row| {
            let v = row
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .map_err(|_| bad())?;
            if v.len() == r {
                Ok(v)
            } else {
                Err(bad())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::new(r, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    fn setup(s: &str) -> (Double, WeylGroup) {
        let g = Arc::new(ChevalleyAlgebra::parse(s).unwrap());
        let w = WeylGroup::new(g.root_system().clone()).unwrap();
        (Double::new(g), w)
    }

    #[test]
    fn a1_double_shape() {
        let (d, _) = setup("A1");
        assert_eq!(d.dim(), 6);
        assert_eq!(d.g_delta().dim(), 3);
        assert_eq!(d.g_star().dim(), 3);
        assert_eq!(d.g_delta().intersect(d.g_star()).unwrap().dim(), 0);
        assert!(d.manin_check().holds());
    }

    #[test]
    fn first_summand_is_not_isotropic() {
        let (d, _) = setup("A2");
        let g0 = Subspace::coordinate(d.dim(), 0..d.dim() / 2);
        assert!(!d.is_lagrangian(&g0).unwrap());
        assert!(d.is_subalgebra(&g0).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let (d, _) = setup("A1");
        assert!(d.is_subalgebra(&Subspace::full(3)).is_err());
        assert!(d.is_lagrangian(&Subspace::full(4)).is_err());
    }

    #[test]
    fn borel_pieces_bracket_by_hand() {
        // span{(E, 0), (H, 0)} in A1 is the Borel of the first summand: [H,E] = 2E
        let (d, _) = setup("A1");
        let n = 3;
        let e = pair_unit(n, Some(1), None, false);
        let h = pair_unit(n, Some(0), None, false);
        let f = pair_unit(n, Some(2), None, false);
        let b = Subspace::new(6, vec![e.clone(), h.clone()]).unwrap();
        assert!(d.is_subalgebra(&b).unwrap());
        let ef = Subspace::new(6, vec![e, f]).unwrap();
        assert!(!d.is_subalgebra(&ef).unwrap());
    }

    #[test]
    fn base_points() {
        let (d, w) = setup("A2");
        let e = w.identity();
        let r = d.algebra().rank();
        let full = d.build_l(&w, &Subspace::full(r), e, e).unwrap();
        assert!(d.is_lagrangian(&full.space).unwrap());
        let zero = d.build_l(&w, &Subspace::zero(r), e, e).unwrap();
        assert_eq!(&zero.space, d.g_star());
        let z = d.build_z(&w, e, e).unwrap();
        assert_eq!(z.space, full.space);
        let s = d
            .build_s(&w, &Subspace::full(r), e, w.long_element())
            .unwrap();
        assert_eq!(s.space, full.space);
    }

    #[test]
    fn a1_reflection_pair_is_not_coisotropic() {
        let (d, w) = setup("A1");
        let s = w.simple(0);
        for (_, v) in v_battery(d.root_system(), 0) {
            let l = d.build_l(&w, &v, s, s).unwrap();
            assert!(!d.is_coisotropic(&l.space).unwrap());
            assert_eq!(d.extract_coisotropic(&l.space), Err(Error::NotCoisotropic));
        }
    }

    #[test]
    fn g_delta_is_coisotropic_with_m_equal_g() {
        let (d, _) = setup("B2");
        assert!(d.is_coisotropic(d.g_delta()).unwrap());
        let c = d.extract_coisotropic(d.g_delta()).unwrap();
        assert_eq!(c.m, Subspace::full(10));
        assert_eq!(c.m_perp.dim(), 0);
    }

    #[test]
    fn zero_v_gives_zero_m() {
        let (d, w) = setup("A2");
        let l = d
            .build_l(&w, &Subspace::zero(2), w.identity(), w.identity())
            .unwrap();
        let c = d.extract_coisotropic(&l.space).unwrap();
        assert_eq!(c.m.dim(), 0);
        assert_eq!(&c.m_perp, d.g_star());
    }

    #[test]
    fn a2_highest_coroot_line() {
        let (d, w) = setup("A2");
        let rs = d.root_system().clone();
        let theta = rs.highest_root();
        let s_theta = (0..w.order())
            .map(ElementId)
            .find(|&x| {
                w.inversion_indices(x).len() == 3
                    && w.element(x).apply_index(theta) == rs.neg_index(theta)
            })
            .unwrap();
        let v = coroot_line(&rs, theta);
        let l = d.build_l(&w, &v, w.identity(), s_theta).unwrap();
        let c = d.extract_coisotropic(&l.space).unwrap();
        assert_eq!(c.m.dim(), 4);
        assert_eq!(c.m, d.closed_form_m(&w, &v, w.identity(), s_theta).unwrap());
    }

    #[test]
    fn z_s1_e_is_lagrangian_not_coisotropic() {
        let (d, w) = setup("A2");
        let z = d.build_z(&w, w.simple(0), w.identity()).unwrap();
        assert!(d.is_lagrangian(&z.space).unwrap());
        // s1 is an involution and Φ_{s1} ∩ Φ_e = ∅, so only the involution test separates
        let c = d
            .build_z(&w, w.parse_word("s1*s2").unwrap(), w.identity())
            .unwrap();
        assert!(!d.is_coisotropic(&c.space).unwrap());
        assert_eq!(rank_pi(&w, w.parse_word("s1*s2").unwrap(), w.identity()), 0);
    }

    #[test]
    fn rank_formulas() {
        let (_, w) = setup("A1");
        let (e, s) = (w.identity(), w.simple(0));
        assert_eq!(rank_pi(&w, e, e), 0);
        assert_eq!(rank_pi(&w, s, s), 2);
        // w·w₂⁻¹·w₁ = e·s·s = e, so no correction term
        assert_eq!(rank_pi_general(&w, e, s, s), 2);
        // w·w₂⁻¹·w₁ = s, and h^{−s} = h in rank one
        assert_eq!(rank_pi_general(&w, e, s, e), 0);
        assert_eq!(rank_pi_general(&w, e, e, e), 0);
    }

    #[test]
    fn battery_is_seeded() {
        let rs = RootSystem::parse("G2").unwrap();
        let a = v_battery(&rs, 7);
        assert_eq!(a, v_battery(&rs, 7));
        assert!(a.len() >= 6);
        assert_eq!(a.last().unwrap().1.dim(), 1);
    }

    #[test]
    fn cartan_subspace_specs() {
        let rs = RootSystem::parse("B2").unwrap();
        assert_eq!(parse_cartan_subspace(&rs, "0").unwrap().dim(), 0);
        assert_eq!(parse_cartan_subspace(&rs, "full").unwrap().dim(), 2);
        assert_eq!(
            parse_cartan_subspace(&rs, "H2").unwrap(),
            Subspace::coordinate(2, [1])
        );
        let v = parse_cartan_subspace(&rs, "1,1/2;2,1").unwrap();
        assert_eq!(v.dim(), 1);
        assert!(v.contains(&[rat(2), rat(1)]).unwrap());
        assert!(parse_cartan_subspace(&rs, "1,2,3").is_err());
        assert!(parse_cartan_subspace(&rs, "H3").is_err());
    }

    #[test]
    fn v_outside_cartan_rejected() {
        let (d, w) = setup("A1");
        let bad = Subspace::coordinate(3, [1]);
        assert_eq!(
            d.build_l(&w, &bad, w.identity(), w.identity()),
            Err(Error::NotInCartan)
        );
        let ok = Subspace::coordinate(3, [0]);
        assert!(d.build_l(&w, &ok, w.identity(), w.identity()).is_ok());
    }

    #[test]
    fn verdicts_survive_rescaling() {
        let g = Arc::new(ChevalleyAlgebra::parse("B2").unwrap());
        let w = WeylGroup::new(g.root_system().clone()).unwrap();
        let d1 = Double::new(g.clone());
        let d2 = Double::with_scale(g, ratio(-3, 2));
        for (_, v) in v_battery(d1.root_system(), 1) {
            assert_eq!(d1.cartan_perp(&v).unwrap(), d2.cartan_perp(&v).unwrap());
            for u in w.ids().step_by(3) {
                for x in w.ids().step_by(2) {
                    let l = d1.build_l(&w, &v, u, x).unwrap();
                    assert_eq!(l, d2.build_l(&w, &v, u, x).unwrap());
                    assert!(d2.is_lagrangian(&l.space).unwrap());
                    assert_eq!(
                        d1.is_coisotropic(&l.space).unwrap(),
                        d2.is_coisotropic(&l.space).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn report_shape() {
        let (d, w) = setup("A1");
        let l = d
            .build_l(&w, &Subspace::full(1), w.identity(), w.simple(0))
            .unwrap();
        let rep = serde_json::to_value(d.report(&w, &l).unwrap()).unwrap();
        assert_eq!(rep["type"], "A1");
        assert_eq!(rep["recipe"]["kind"], "l");
        assert_eq!(rep["recipe"]["v_word"], "s1");
        assert_eq!(rep["recipe"]["V_basis"][0][0], "1");
        assert_eq!(rep["coisotropic"], true);
        assert_eq!(rep["rank_pi"], 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn form_is_invariant(x in proptest::collection::vec(-2i64..=2, 20),
                             y in proptest::collection::vec(-2i64..=2, 20),
                             z in proptest::collection::vec(-2i64..=2, 20)) {
            let (d, _) = setup("B2");
            let q = |v: &[i64]| v.iter().map(|&c| rat(c)).collect::<Vec<_>>();
            let (x, y, z) = (q(&x), q(&y), q(&z));
            let lhs = d.form().bilinear(&d.bracket(&x, &y), &z).unwrap();
            let rhs = d.form().bilinear(&y, &d.bracket(&x, &z)).unwrap();
            prop_assert_eq!(lhs + rhs, Rational::zero());
            // the diagonal is isotropic
            let half = |v: &[Rational]| v[..10].iter().chain(v[..10].iter()).cloned().collect::<Vec<_>>();
            prop_assert!(d.form().bilinear(&half(&x), &half(&y)).unwrap().is_zero());
        }

        #[test]
        fn line_is_abelian(v in proptest::collection::vec(-3i64..=3, 16)) {
            let (d, _) = setup("A2");
            let row: Vec<Rational> = v.iter().map(|&c| rat(c)).collect();
            let s = Subspace::new(d.dim(), vec![row]).unwrap();
            prop_assert!(d.is_subalgebra(&s).unwrap());
        }
    }
}
