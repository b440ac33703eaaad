//! Root systems of semisimple Cartan types.
//!
//! Roots are integer coordinate vectors over the simple roots. The global
//! root order is: positive roots by height, ties broken by descending
//! lexicographic order on coordinates (so the simple roots appear as
//! `α₁, α₂, …`), followed by the negatives in the same order. Root `i` and
//! root `i + N` (with `N = |Φ⁺|`) are negatives of each other.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::ToPrimitive;
#[cfg(test)]
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// One irreducible factor of a Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub family: Family,
    pub rank: usize,
}

/// A semisimple Cartan type, e.g. `A2` or `B2xA1`.
///
/// `C2` is accepted and normalized to `B2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CartanType {
    factors: Vec<Factor>,
}

impl CartanType {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType(String::new()));
        }
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            if !f.family.rank_ok(f.rank) {
                return Err(Error::InvalidCartanType(format!("{}{}", f.family, f.rank)));
            }
            out.push(if f.family == Family::C && f.rank == 2 {
                Factor {
                    family: Family::B,
                    rank: 2,
                }
            } else {
                f
            });
        }
        Ok(CartanType { factors: out })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let factors = s
            .split('x')
            .map(|tok| {
                let mut chars = tok.chars();
                let family = chars.next().and_then(Family::from_char).ok_or_else(bad)?;
                let digits = chars.as_str();
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let rank = digits.parse().map_err(|_| bad())?;
                Ok(Factor { family, rank })
            })
            .collect::<Result<Vec<_>>>()?;
        CartanType::new(factors).map_err(|_| bad())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{}{}", factor.family, factor.rank)?;
        }
        Ok(())
    }
}

/// Symmetrized Cartan matrix `(α_i, α_j)` for one factor in an integral
/// normalization (only ratios matter here).
#[allow(clippy::needless_range_loop)]
fn symmetric_form(f: Factor) -> Vec<Vec<i64>> {
    let n = f.rank;
    let mut b = vec![vec![0i64; n]; n];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match f.family {
        Family::A => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut b, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                b[i][i] = 2;
            }
            b[n - 1][n - 1] = 1;
            for i in 0..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
        }
        Family::C => {
            for i in 0..n {
                b[i][i] = 2;
            }
            b[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                b[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                b[i][i] = 2;
            }
            link(&mut b, 0, 2, -1);
            link(&mut b, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
        }
        Family::F => {
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            link(&mut b, 0, 1, -2);
            link(&mut b, 1, 2, -2);
            link(&mut b, 2, 3, -1);
        }
        Family::G => {
            b[0][0] = 2;
            b[1][1] = 6;
            link(&mut b, 0, 1, -3);
        }
    }
    b
}

/// A root as integer coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// `self + k·other`, coordinatewise.
    pub fn plus_multiple(&self, k: i64, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The root system `Φ` of a Cartan type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    id: u64,
    cartan_type: CartanType,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩ = α_i(H_j)`.
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    num_positive: usize,
    index: HashMap<Root, usize>,
    simple_component: Vec<usize>,
    root_component: Vec<usize>,
    killing_h: Matrix,
    inner: Matrix,
    norms: Vec<Rational>,
    simple_reflections: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds `Φ` by closing the simple roots under simple reflections.
    pub fn new(cartan_type: CartanType) -> Self {
        let r = cartan_type.rank();
        let mut sym = vec![vec![0i64; r]; r];
        let mut simple_component = Vec::with_capacity(r);
        let mut offset = 0;
        for (fi, f) in cartan_type.factors().iter().enumerate() {
            let b = symmetric_form(*f);
            for i in 0..f.rank {
                for j in 0..f.rank {
                    sym[offset + i][offset + j] = b[i][j];
                }
                simple_component.push(fi);
            }
            offset += f.rank;
        }
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let num = 2 * sym[i][j];
                        debug_assert_eq!(num % sym[j][j], 0);
                        num / sym[j][j]
                    })
                    .collect()
            })
            .collect();

        let pairing_with_simple = |beta: &[i64], i: usize| -> i64 {
            beta.iter().enumerate().map(|(j, b)| b * cartan[j][i]).sum()
        };

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let k = pairing_with_simple(&beta, i);
                if k == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= k;
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }

        let mut positives: Vec<Root> = seen
            .into_iter()
            .map(Root)
            .filter(Root::is_positive)
            .collect();
        positives.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let num_positive = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(Root::negated));
        let index: HashMap<Root, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, a)| (a, i))
            .collect();
        assert_eq!(
            index.len(),
            2 * num_positive,
            "root closure produced mixed-sign vectors"
        );

        let root_component = roots
            .iter()
            .map(|a| {
                let j = a.0.iter().position(|&c| c != 0).expect("roots are nonzero");
                simple_component[j]
            })
            .collect();

        // Killing form on h in the simple-coroot basis: K(H_i, H_j) = Σ_α α(H_i) α(H_j).
        let mut killing_h = Matrix::zeros(r, r);
        for a in &roots {
            let ev: Vec<i64> = (0..r).map(|i| pairing_with_simple(&a.0, i)).collect();
            for i in 0..r {
                for j in 0..r {
                    if ev[i] != 0 && ev[j] != 0 {
                        let cur = killing_h.get(i, j) + rat(ev[i] * ev[j]);
                        killing_h.set(i, j, cur);
                    }
                }
            }
        }
        // (α_i, α_j) = a_i^T K^{-1} a_j with a_i the row (α_i(H_1), …, α_i(H_r)).
        let a_mat = Matrix::from_i64_rows(&cartan).unwrap_or_else(|_| Matrix::zeros(0, 0));
        let k_inv = killing_h
            .inverse()
            .expect("Killing form is nondegenerate on h");
        let inner = a_mat
            .mul(&k_inv)
            .and_then(|m| m.mul(&a_mat.transpose()))
            .expect("square matrices of equal size");

        let norms = roots
            .iter()
            .map(|a| {
                inner
                    .bilinear(&to_rat(&a.0), &to_rat(&a.0))
                    .expect("rank-sized")
            })
            .collect();

        let simple_reflections = (0..r)
            .map(|i| {
                roots
                    .iter()
                    .map(|a| {
                        let img = a.plus_multiple(-pairing_with_simple(&a.0, i), &unit_root(r, i));
                        index[&img]
                    })
                    .collect()
            })
            .collect();

        RootSystem {
            id: fresh_id(),
            cartan_type,
            cartan,
            roots,
            num_positive,
            index,
            simple_component,
            root_component,
            killing_h,
            inner,
            norms,
            simple_reflections,
        }
    }

    /// Parses a type string and builds its root system.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(RootSystem::new(s.parse()?))
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan_matrix()[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.num_positive
    }

    /// Index of `-root_i`.
    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    pub fn index_of(&self, a: &Root) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn index_of_coords(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(&Root(coords.to_vec())).copied()
    }

    pub(crate) fn require(&self, a: &Root) -> Result<usize> {
        self.index_of(a).ok_or_else(|| Error::NotARoot(a.0.clone()))
    }

    /// Index of the simple root `α_i` (0-based `i`).
    pub fn simple_index(&self, i: usize) -> usize {
        // height-1 roots sort first, in descending lex order
        debug_assert_eq!(self.roots[i], unit_root(self.rank(), i));
        i
    }

    /// Irreducible factor containing root `i`.
    pub fn component_of(&self, i: usize) -> usize {
        self.root_component[i]
    }

    pub fn simple_component(&self, i: usize) -> usize {
        self.simple_component[i]
    }

    /// Killing form restricted to `h`, in the basis of simple coroots.
    pub fn killing_on_h(&self) -> &Matrix {
        &self.killing_h
    }

    /// Killing-dual inner product `(α_i, α_j)` on simple roots.
    pub fn inner_matrix(&self) -> &Matrix {
        &self.inner
    }

    /// `(α, β)` for roots given by index.
    pub fn inner(&self, a: usize, b: usize) -> Rational {
        self.inner
            .bilinear(&to_rat(&self.roots[a].0), &to_rat(&self.roots[b].0))
            .expect("rank-sized")
    }

    /// `(α, α)`.
    pub fn norm(&self, a: usize) -> &Rational {
        &self.norms[a]
    }

    /// `⟨α, β^∨⟩ = 2(α, β)/(β, β)`.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        let q = self.inner(a, b) * rat(2) / &self.norms[b];
        debug_assert!(q.is_integer());
        q.to_integer().to_i64().expect("small integer")
    }

    /// `α(H_i)` for each simple coroot `H_i`.
    pub fn eval_on_coroots(&self, a: usize) -> Vec<i64> {
        let coords = &self.roots[a].0;
        (0..self.rank())
            .map(|i| {
                coords
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * self.cartan[j][i])
                    .sum()
            })
            .collect()
    }

    /// Coordinates of the coroot `H_α = α^∨` over the simple coroots.
    pub fn coroot_coords(&self, a: usize) -> Vec<i64> {
        let coords = &self.roots[a].0;
        (0..self.rank())
            .map(|i| {
                if coords[i] == 0 {
                    return 0;
                }
                let q = rat(coords[i]) * self.norms[self.simple_index(i)].clone() / &self.norms[a];
                debug_assert!(q.is_integer());
                q.to_integer().to_i64().expect("small integer")
            })
            .collect()
    }

    /// Root index of `s_i(root_j)` for the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> &[usize] {
        &self.simple_reflections[i]
    }

    /// Index of `s_β(α) = α − ⟨α, β^∨⟩ β`.
    pub fn reflect(&self, beta: usize, alpha: usize) -> usize {
        let k = self.pairing(alpha, beta);
        let img = self.roots[alpha].plus_multiple(-k, &self.roots[beta]);
        self.index[&img]
    }

    /// The first root of maximal height in the global order.
    pub fn highest_root(&self) -> usize {
        let max = self
            .positive_roots()
            .iter()
            .map(Root::height)
            .max()
            .unwrap_or(0);
        self.positive_roots()
            .iter()
            .position(|a| a.height() == max)
            .expect("nonempty root system")
    }

    /// Whether `β` is long: no root of its irreducible component is longer.
    pub fn is_long(&self, beta: &Root) -> Result<bool> {
        Ok(self.is_long_index(self.require(beta)?))
    }

    pub fn is_long_index(&self, b: usize) -> bool {
        let comp = self.root_component[b];
        let nb = &self.norms[b];
        !(0..self.roots.len()).any(|a| self.root_component[a] == comp && &self.norms[a] > nb)
    }

    /// `(p, q)` for the `β`-string through `α`: `α − pβ, …, α + qβ`.
    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<(usize, usize)> {
        let a = self.require(alpha)?;
        let b = self.require(beta)?;
        self.root_string_index(a, b)
    }

    pub fn root_string_index(&self, a: usize, b: usize) -> Result<(usize, usize)> {
        if a == b || a == self.neg_index(b) {
            return Err(Error::ProportionalRoots);
        }
        let alpha = &self.roots[a];
        let beta = &self.roots[b];
        let walk = |sign: i64| {
            let mut k = 0usize;
            while self
                .index
                .contains_key(&alpha.plus_multiple(sign * (k as i64 + 1), beta))
            {
                k += 1;
            }
            k
        };
        Ok((walk(-1), walk(1)))
    }

    /// True iff no `β`-string through any root has three or more elements.
    pub fn no_three_string(&self, beta: &Root) -> Result<bool> {
        Ok(self.no_three_string_index(self.require(beta)?))
    }

    pub fn no_three_string_index(&self, b: usize) -> bool {
        (0..self.roots.len())
            .filter(|&a| a != b && a != self.neg_index(b))
            .all(|a| {
                let (p, q) = self.root_string_index(a, b).expect("non-proportional");
                p + q < 2
            })
    }

    /// Distinct squared lengths occurring in one irreducible factor.
    pub fn distinct_norms(&self, component: usize) -> Vec<Rational> {
        let mut v: Vec<Rational> = (0..self.roots.len())
            .filter(|&a| self.root_component[a] == component)
            .map(|a| self.norms[a].clone())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Human-readable label for a root, e.g. `a1`, `a1+a2`, `-2a1-a2`.
    pub fn root_label(&self, i: usize) -> String {
        let mut s = String::new();
        for (j, &c) in self.roots[i].0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("a{}", j + 1));
        }
        s
    }

    /// Resolves a root by label (`a1+a2`), coordinates (`1,1`), `highest`,
    /// `short-simple`/`long-simple`, or a 0-based index `#k`.
    pub fn resolve_root(&self, spec: &str) -> Result<usize> {
        let bad = || Error::InvalidRootSpec(spec.to_string());
        let spec = spec.trim();
        match spec {
            "highest" => return Ok(self.highest_root()),
            "short-simple" | "long-simple" => {
                let want_long = spec == "long-simple";
                return (0..self.rank())
                    .map(|i| self.simple_index(i))
                    .find(|&i| self.is_long_index(i) == want_long)
                    .ok_or_else(bad);
            }
            _ => {}
        }
        if let Some(k) = spec.strip_prefix('#') {
            let k: usize = k.parse().map_err(|_| bad())?;
            return if k < self.roots.len() {
                Ok(k)
            } else {
                Err(bad())
            };
        }
        let coords: Vec<i64> = if spec.contains('a') {
            parse_root_label(spec, self.rank()).ok_or_else(bad)?
        } else {
            spec.trim_matches(|c| c == '(' || c == ')')
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        if coords.len() != self.rank() {
            return Err(bad());
        }
        self.index_of_coords(&coords).ok_or(Error::NotARoot(coords))
    }
}

fn parse_root_label(s: &str, rank: usize) -> Option<Vec<i64>> {
    let mut coords = vec![0i64; rank];
    let normalized = s.replace('-', "+-");
    for term in normalized
        .split('+')
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let (sign, term) = match term.strip_prefix('-') {
            Some(t) => (-1, t),
            None => (1, term),
        };
        let (coef, idx) = term.split_once('a')?;
        let coef: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().ok()?
        };
        let idx: usize = idx.parse().ok()?;
        if idx == 0 || idx > rank {
            return None;
        }
        coords[idx - 1] += sign * coef;
    }
    Some(coords)
}

fn unit_root(r: usize, i: usize) -> Root {
    let mut v = vec![0; r];
    v[i] = 1;
    Root(v)
}

pub(crate) fn to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Classical root counts, used as a cross-check.
pub fn classical_root_count(f: Factor) -> usize {
    let n = f.rank;
    match (f.family, n) {
        (Family::A, _) => n * (n + 1),
        (Family::B | Family::C, _) => 2 * n * n,
        (Family::D, _) => 2 * n * (n - 1),
        (Family::E, 6) => 72,
        (Family::E, 7) => 126,
        (Family::E, 8) => 240,
        (Family::F, _) => 48,
        (Family::G, _) => 12,
        _ => unreachable!("rank validated at construction"),
    }
}

/// Reflection-orbit oracle: all images of the simple roots under words in the
/// simple reflections, computed with rational reflection formulas in the
/// symmetric form only. Independent of the Cartan-matrix closure.
#[cfg(test)]
pub(crate) fn reflection_orbit_oracle(t: &CartanType) -> HashSet<Vec<i64>> {
    let r = t.rank();
    let mut sym = vec![vec![0i64; r]; r];
    let mut off = 0;
    for f in t.factors() {
        let b = symmetric_form(*f);
        for i in 0..f.rank {
            for j in 0..f.rank {
                sym[off + i][off + j] = b[i][j];
            }
        }
        off += f.rank;
    }
    let form = |x: &[i64], y: &[i64]| -> Rational {
        let mut acc = Rational::zero();
        for i in 0..r {
            for j in 0..r {
                acc += rat(x[i] * y[j] * sym[i][j]);
            }
        }
        acc
    };
    let mut out: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..r).map(|i| unit_root(r, i).0).collect();
    while let Some(v) = frontier.pop() {
        if !out.insert(v.clone()) {
            continue;
        }
        for i in 0..r {
            let e = unit_root(r, i).0;
            let k = form(&v, &e) * rat(2) / form(&e, &e);
            let k = k.to_integer().to_i64().unwrap();
            let mut w = v.clone();
            w[i] -= k;
            frontier.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn parses_types() {
        let t: CartanType = "B2xA1".parse().unwrap();
        assert_eq!(t.factors().len(), 2);
        assert_eq!(t.rank(), 3);
        assert_eq!(t.to_string(), "B2xA1");
        assert_eq!("C2".parse::<CartanType>().unwrap().to_string(), "B2");
        for bad in [
            "Z9", "A0", "D3", "E5", "F3", "G3", "B1", "", "A", "A2x", "a2", "A-1",
        ] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_root_counts() {
        let a1 = rs("A1");
        assert_eq!((a1.num_roots(), a1.num_positive()), (2, 1));
        let a2 = rs("A2");
        assert_eq!((a2.num_roots(), a2.num_positive()), (6, 3));
        let g2 = rs("G2");
        assert_eq!(g2.num_roots(), 12);
        let long = (0..12).filter(|&i| g2.is_long_index(i)).count();
        assert_eq!(long, 6);
    }

    #[test]
    fn root_closure_matches_reflection_orbits() {
        for s in ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "B2xA1"] {
            let sys = rs(s);
            let got: HashSet<Vec<i64>> = sys.roots().iter().map(|a| a.coords().to_vec()).collect();
            assert_eq!(got, reflection_orbit_oracle(sys.cartan_type()), "{s}");
        }
    }

    #[test]
    fn classical_counts() {
        for s in [
            "A1", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
        ] {
            let sys = rs(s);
            let f = sys.cartan_type().factors()[0];
            assert_eq!(sys.num_roots(), classical_root_count(f), "{s}");
        }
    }

    #[test]
    fn ordering_puts_simple_roots_first_in_order() {
        let sys = rs("B3");
        for i in 0..3 {
            assert_eq!(sys.simple_index(i), i);
        }
        for w in sys.positive_roots().windows(2) {
            assert!(w[0].height() <= w[1].height());
        }
        for i in 0..sys.num_positive() {
            assert_eq!(sys.root(sys.neg_index(i)), &sys.root(i).negated());
        }
    }

    #[test]
    fn sign_coherent_and_integral() {
        for s in ["B3", "G2", "F4", "D4xA1"] {
            let sys = rs(s);
            for a in sys.roots() {
                let pos = a.coords().iter().all(|&c| c >= 0);
                let neg = a.coords().iter().all(|&c| c <= 0);
                assert!(pos ^ neg);
            }
            for a in 0..sys.num_roots() {
                for b in 0..sys.num_roots() {
                    let q = sys.inner(a, b) * rat(2) / sys.norm(b);
                    assert!(q.is_integer());
                    assert!(q.abs() <= rat(3));
                    assert!(sys
                        .index_of(&sys.roots()[sys.reflect(a, b)].clone())
                        .is_some());
                }
            }
            for c in 0..sys.cartan_type().factors().len() {
                assert!(sys.distinct_norms(c).len() <= 2);
            }
        }
    }

    #[test]
    fn long_and_short() {
        let a2 = rs("A2");
        assert!((0..6).all(|i| a2.is_long_index(i)));
        let b2 = rs("B2");
        // α₂ is the short simple root in B2
        assert!(b2.is_long(&Root::new(vec![1, 0])).unwrap());
        assert!(!b2.is_long(&Root::new(vec![0, 1])).unwrap());
        let g2 = rs("G2");
        assert!(g2.is_long_index(g2.highest_root()));
        assert!(g2.is_long(&Root::new(vec![0, 0])).is_err());
    }

    #[test]
    fn long_roots_within_each_component() {
        // B2xA1: the A1 roots are long in their own factor even though
        // they are shorter than the B2 long roots under the dual form.
        let sys = rs("B2xA1");
        let a1 = sys.simple_index(2);
        assert!(sys.is_long_index(a1));
    }

    #[test]
    fn strings() {
        let a2 = rs("A2");
        let a1 = Root::new(vec![1, 0]);
        let a2r = Root::new(vec![0, 1]);
        assert_eq!(a2.root_string(&a1, &a2r).unwrap(), (0, 1));
        let b2 = rs("B2");
        // short simple α₂ through long simple α₁
        assert_eq!(
            b2.root_string(&Root::new(vec![0, 1]), &Root::new(vec![1, 0]))
                .unwrap(),
            (0, 1)
        );
        // long α₁ along short α₂: α₁, α₁+α₂, α₁+2α₂
        assert_eq!(
            b2.root_string(&Root::new(vec![1, 0]), &Root::new(vec![0, 1]))
                .unwrap(),
            (0, 2)
        );
        assert_eq!(a2.root_string(&a1, &a1), Err(Error::ProportionalRoots));
        assert_eq!(
            a2.root_string(&a1, &a1.negated()),
            Err(Error::ProportionalRoots)
        );
        let sys = rs("A1xA1");
        assert_eq!(
            sys.root_string(&Root::new(vec![1, 0]), &Root::new(vec![0, 1]))
                .unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn three_strings() {
        let a3 = rs("A3");
        assert!((0..a3.num_roots()).all(|b| a3.no_three_string_index(b)));
        let g2 = rs("G2");
        let short = g2.simple_index(0);
        assert!(!g2.is_long_index(short));
        assert!(!g2.no_three_string_index(short));
        let b2 = rs("B2");
        assert!(b2.no_three_string(&Root::new(vec![1, 0])).unwrap());
        assert!(b2.no_three_string(&Root::new(vec![1, 2])).unwrap());
    }

    #[test]
    fn coroots() {
        let b2 = rs("B2");
        // long root α₁ + 2α₂ has coroot α₁^∨ + α₂^∨
        let i = b2.index_of(&Root::new(vec![1, 2])).unwrap();
        assert_eq!(b2.coroot_coords(i), vec![1, 1]);
        // short root α₁ + α₂ has coroot 2α₁^∨ + α₂^∨
        let j = b2.index_of(&Root::new(vec![1, 1])).unwrap();
        assert_eq!(b2.coroot_coords(j), vec![2, 1]);
        for k in 0..b2.num_roots() {
            let h = b2.coroot_coords(k);
            let ev = b2.eval_on_coroots(k);
            assert_eq!(h.iter().zip(&ev).map(|(a, b)| a * b).sum::<i64>(), 2);
        }
    }

    #[test]
    fn killing_dual_form_on_a1() {
        let a1 = rs("A1");
        assert_eq!(a1.killing_on_h().get(0, 0), &rat(8));
        assert_eq!(a1.norm(0), &crate::linalg::ratio(1, 2));
    }

    #[test]
    fn resolves_root_specs() {
        let a2 = rs("A2");
        assert_eq!(a2.resolve_root("a1").unwrap(), 0);
        assert_eq!(a2.resolve_root("a1+a2").unwrap(), 2);
        assert_eq!(a2.resolve_root("1,1").unwrap(), 2);
        assert_eq!(a2.resolve_root("highest").unwrap(), 2);
        assert_eq!(a2.resolve_root("-a2").unwrap(), a2.neg_index(1));
        assert!(a2.resolve_root("2a1").is_err());
        assert!(a2.resolve_root("a3").is_err());
        let b2 = rs("B2");
        assert_eq!(b2.resolve_root("short-simple").unwrap(), 1);
        assert_eq!(b2.root_label(3), "a1+2a2");
    }
}
