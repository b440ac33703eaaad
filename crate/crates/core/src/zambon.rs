//! Coisotropic subalgebras `u_{±β}` from long roots.
//!
//! `π = Σ_{α>0} λ_α E_α ∧ E_{−α}` is the standard r-matrix. For a positive long
//! root `β`, `u_{±β}` is the image of the sharp map of `[E_{±β}, π]`, which
//! comes out as `C·H_β ⊕ ⊕_{α∈Φ_{s_β}} g_{±α}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::bialgebra::{coroot_line, rows_as_strings, Double, LagrangianCandidate, RecipeReport};
use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, unit_vector, Matrix, Rational, Subspace};
use crate::weyl::WeylGroup;

/// `Σ c_{ij} b_i ∧ b_j` over basis pairs `i < j`, with zero terms dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bivector {
    dim: usize,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Bivector {
    pub fn zero(dim: usize) -> Self {
        Bivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · b_i ∧ b_j`.
    pub fn add_term(&mut self, i: usize, j: usize, c: Rational) {
        if i == j || c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `x ∧ y` for coordinate vectors.
    pub fn wedge(x: &[Rational], y: &[Rational]) -> Self {
        let mut b = Bivector::zero(x.len());
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                b.add_term(i, j, xi * yj);
            }
        }
        b
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> Bivector {
        let mut out = Bivector::zero(self.dim);
        for (&(i, j), x) in &self.terms {
            out.add_term(i, j, x * c);
        }
        out
    }

    /// Coefficient of `b_i ∧ b_j`, sign-adjusted for `i > j`.
    pub fn coefficient(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .terms
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(Rational::zero),
            std::cmp::Ordering::Greater => -self.coefficient(j, i),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// Matrix of `ξ ↦ b♯(ξ)` in the coordinate dual basis:
    /// `b♯(ξ) = Σ c_{ij} (ξ_i b_j − ξ_j b_i)`.
    pub fn sharp(&self) -> SharpMap {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (&(i, j), c) in &self.terms {
            // column i is b♯(f_i)
            m.set(j, i, m.get(j, i) + c);
            m.set(i, j, m.get(i, j) - c);
        }
        SharpMap { matrix: m }
    }
}

/// The linear map `g* → g` induced by a bivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpMap {
    pub matrix: Matrix,
}

impl SharpMap {
    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.matrix.transpose())
    }
}

/// `π = Σ_{α>0} λ_α E_α ∧ E_{−α}`.
pub fn standard_pi(g: &ChevalleyAlgebra) -> Bivector {
    let rs = g.root_system();
    let mut pi = Bivector::zero(g.dim());
    for a in 0..rs.num_positive() {
        pi.add_term(
            g.e_position(a),
            g.e_position(rs.neg_index(a)),
            g.lambda_index(a),
        );
    }
    pi
}

/// `[x, b]` with `ad x` acting as a derivation of `∧²g`.
pub fn ad_bivector(g: &ChevalleyAlgebra, x: &LieElement, b: &Bivector) -> Result<Bivector> {
    if x.coords().len() != g.dim() || b.dim() != g.dim() {
        return Err(Error::Mismatch);
    }
    let images: Vec<Option<LieElement>> = {
        let mut cache = vec![None; g.dim()];
        for &(i, j) in b.terms.keys() {
            for k in [i, j] {
                if cache[k].is_none() {
                    cache[k] = Some(g.bracket(x, &g.basis_element(k))?);
                }
            }
        }
        cache
    };
    let mut out = Bivector::zero(g.dim());
    for (&(i, j), c) in &b.terms {
        let xi = images[i].as_ref().expect("cached");
        let xj = images[j].as_ref().expect("cached");
        // [x, b_i ∧ b_j] = [x,b_i] ∧ b_j + b_i ∧ [x,b_j]
        out = out
            .add(&Bivector::wedge(xi.coords(), &unit_vector(g.dim(), j)).scaled(c))
            .add(&Bivector::wedge(&unit_vector(g.dim(), i), xj.coords()).scaled(c));
    }
    Ok(out)
}

fn require_long_positive(g: &ChevalleyAlgebra, beta: usize) -> Result<()> {
    let rs = g.root_system();
    if !rs.is_positive_index(beta) {
        return Err(Error::NotPositiveRoot(rs.root_label(beta)));
    }
    if !rs.is_long_index(beta) {
        return Err(Error::NotLongRoot(rs.root_label(beta)));
    }
    Ok(())
}

/// `lead · E_β ∧ H_β + Σ_{α∈Φ_{s_β}\{β}} λ_α c_{β,−α} E_α ∧ E_{β−α}`.
///
/// The literal closed form has `lead = 1`; the derivation produces
/// `lead = λ_β`. Both are exposed so callers can compare either normalization.
pub fn ebeta_pi_closed_form(
    g: &ChevalleyAlgebra,
    group: &WeylGroup,
    beta: usize,
    lead: &Rational,
) -> Result<Bivector> {
    require_long_positive(g, beta)?;
    let rs = g.root_system();
    let mut out = Bivector::wedge(g.e(beta).coords(), g.coroot(beta).coords()).scaled(lead);
    for a in group.inversion_indices(group.reflection(beta)) {
        if a == beta {
            continue;
        }
        let diff = rs.root(beta).plus_multiple(-1, rs.root(a));
        let d = rs.require(&diff)?;
        let c = g.structure_constant_index(beta, rs.neg_index(a))?;
        let coef = g.lambda_index(a) * Rational::from_integer(c.into());
        out.add_term(g.e_position(a), g.e_position(d), coef);
    }
    Ok(out)
}

/// `C·H_β ⊕ ⊕_{α∈Φ_{s_β}} g_{sign·α}` inside `g`.
pub fn closed_form_subalgebra(
    g: &ChevalleyAlgebra,
    group: &WeylGroup,
    beta: usize,
    sign: i8,
) -> Result<Subspace> {
    require_long_positive(g, beta)?;
    let rs = g.root_system();
    let n = g.dim();
    let mut rows = vec![g.coroot(beta).coords().to_vec()];
    for a in group.inversion_indices(group.reflection(beta)) {
        let idx = if sign > 0 { a } else { rs.neg_index(a) };
        rows.push(unit_vector(n, g.e_position(idx)));
    }
    Subspace::new(n, rows)
}

fn signed_root(g: &ChevalleyAlgebra, beta: usize, sign: i8) -> Result<usize> {
    match sign {
        1 => Ok(beta),
        -1 => Ok(g.root_system().neg_index(beta)),
        _ => Err(Error::InvalidRootSpec(format!("sign {sign}"))),
    }
}

/// `[E_{±β}, π]`.
pub fn e_beta_pi(g: &ChevalleyAlgebra, beta: usize, sign: i8) -> Result<Bivector> {
    require_long_positive(g, beta)?;
    let idx = signed_root(g, beta, sign)?;
    ad_bivector(g, &g.e(idx), &standard_pi(g))
}

/// `u_{±β} = [E_{±β}, π]♯ g*`.
pub fn zambon_subalgebra(g: &ChevalleyAlgebra, beta: usize, sign: i8) -> Result<Subspace> {
    Ok(e_beta_pi(g, beta, sign)?.sharp().image())
}

/// `(u_β)_Δ + u_β^⊥`, where `u^⊥ ⊆ g*` is the annihilator under the pairing of `d`.
pub fn zambon_as_l(d: &Double, beta: usize, sign: i8) -> Result<LagrangianCandidate> {
    let u = zambon_subalgebra(d.algebra(), beta, sign)?;
    let u_delta = d.diagonal(&u)?;
    let u_perp = u_delta.perp(d.form())?.intersect(d.g_star())?;
    Ok(LagrangianCandidate {
        space: u_delta.sum(&u_perp)?,
        recipe: crate::bialgebra::Recipe::Raw,
    })
}

/// The external JSON shape for one `(β, sign)`.
#[derive(Debug, Clone, Serialize)]
pub struct ZambonReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub beta: Vec<i64>,
    pub beta_label: String,
    pub sign: i8,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
    /// `u_{±β}` equals `C·H_β ⊕ ⊕ g_{±α}`.
    pub closed_form_match: bool,
    /// Coefficient of `E_β ∧ H_β` in `[E_β, π]` (sign `+` only).
    pub leading_coefficient: Option<String>,
    /// `[E_β, π]` equals the closed form with leading coefficient 1.
    pub literal_bivector_match: Option<bool>,
    /// `[E_β, π]` equals the closed form with leading coefficient `λ_β`.
    pub lambda_bivector_match: Option<bool>,
    pub as_l: RecipeReport,
    pub as_l_match: bool,
    pub coisotropic: bool,
    pub subalgebra: bool,
}

/// Computes `u_{±β}` and checks it against both closed forms and the
/// Lagrangian family.
pub fn zambon_report(d: &Double, group: &WeylGroup, beta: usize, sign: i8) -> Result<ZambonReport> {
    let g = d.algebra();
    let rs = g.root_system();
    let u = zambon_subalgebra(g, beta, sign)?;
    let closed = closed_form_subalgebra(g, group, beta, sign)?;

    let (leading, literal, lambda) = if sign > 0 {
        let b = e_beta_pi(g, beta, sign)?;
        let h = g.coroot(beta);
        // E_β ∧ H_β picks up the coefficient on E_β ∧ H_i wherever H_β has entry 1
        let i = h
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero coroot");
        let lead = b.coefficient(g.e_position(beta), i) / &h.coords()[i];
        let lit = b == ebeta_pi_closed_form(g, group, beta, &Rational::from_integer(1.into()))?;
        let lam = b == ebeta_pi_closed_form(g, group, beta, &g.lambda_index(beta))?;
        (Some(format_rational(&lead)), Some(lit), Some(lam))
    } else {
        (None, None, None)
    };

    let s_beta = group.reflection(beta);
    let (lu, lv) = if sign > 0 {
        (group.identity(), s_beta)
    } else {
        (s_beta, group.identity())
    };
    let v_space = coroot_line(rs, beta);
    let expected = d.build_l(group, &v_space, lu, lv)?;
    let assembled = zambon_as_l(d, beta, sign)?;
    let u_delta = d.diagonal(&u)?;
    Ok(ZambonReport {
        cartan_type: rs.cartan_type().to_string(),
        beta: rs.root(beta).coords().to_vec(),
        beta_label: rs.root_label(beta),
        sign,
        dim: u.dim(),
        basis: rows_as_strings(&u),
        closed_form_match: u == closed,
        leading_coefficient: leading,
        literal_bivector_match: literal,
        lambda_bivector_match: lambda,
        as_l: RecipeReport {
            kind: "l".to_string(),
            v_basis: Some(rows_as_strings(&v_space)),
            u_word: Some(group.word_string(lu)),
            v_word: Some(group.word_string(lv)),
        },
        as_l_match: assembled.space == expected.space,
        coisotropic: d.is_coisotropic(&assembled.space)?,
        subalgebra: d.is_subalgebra(&u_delta)?,
    })
}
