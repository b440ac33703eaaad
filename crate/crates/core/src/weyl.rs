//! The Weyl group as permutations of the root list.
//!
//! Elements are enumerated by breadth-first search from the identity under
//! right multiplication by simple reflections, so the BFS depth of an element
//! is its length and the path taken is a reduced word.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{kernel, rat, Matrix};
use crate::rootsys::{Root, RootSystem};

/// Default cap on `|W|` for enumeration.
pub const DEFAULT_WEYL_CAP: usize = 2_000_000;

/// Index of an element inside its [`WeylGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub usize);

/// A Weyl group element: its action on root indices and a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    system: u64,
    perm: Vec<u16>,
    word: Vec<usize>,
}

impl WeylElement {
    /// `perm()[k]` is the index of `w(root_k)`.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Reduced word as 0-based simple reflection indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Index of `w(root_k)`.
    pub fn apply_index(&self, k: usize) -> usize {
        self.perm[k] as usize
    }

    /// External name: `e` or `s1*s2*…` with 1-based generators.
    pub fn word_string(&self) -> String {
        format_word(&self.word)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The full Weyl group of a root system.
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<u16>, usize>,
    /// `right[w][i]` = index of `w·s_i`.
    right: Vec<Vec<usize>>,
    inversions: Vec<u128>,
    long_element: usize,
    upsets: Vec<OnceLock<Vec<u64>>>,
}

impl WeylGroup {
    /// Enumerates `W` with the default cap.
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        WeylGroup::enumerate(rs, DEFAULT_WEYL_CAP)
    }

    /// BFS over right multiplication by simple reflections. Fails with
    /// [`Error::WeylCapExceeded`] as soon as more than `cap` elements appear.
    pub fn enumerate(rs: Arc<RootSystem>, cap: usize) -> Result<Self> {
        let n = rs.num_roots();
        let r = rs.rank();
        let npos = rs.num_positive();
        assert!(
            npos <= 128,
            "inversion masks hold at most 128 positive roots"
        );
        let simple: Vec<Vec<u16>> = (0..r)
            .map(|i| rs.simple_reflection(i).iter().map(|&k| k as u16).collect())
            .collect();
        let simple_idx: Vec<usize> = (0..r).map(|i| rs.simple_index(i)).collect();
        // an element is determined by the images of the simple roots
        let key = |perm: &[u16]| -> Vec<u16> { simple_idx.iter().map(|&i| perm[i]).collect() };

        let id_perm: Vec<u16> = (0..n as u16).collect();
        let mut elements = vec![WeylElement {
            system: rs.id(),
            perm: id_perm.clone(),
            word: Vec::new(),
        }];
        let mut lookup = HashMap::new();
        lookup.insert(key(&id_perm), 0usize);
        let mut right: Vec<Vec<usize>> = vec![vec![usize::MAX; r]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for i in 0..r {
                if right[w][i] != usize::MAX {
                    continue;
                }
                // (w s_i)(α) = w(s_i(α))
                let perm: Vec<u16> = simple[i]
                    .iter()
                    .map(|&k| elements[w].perm[k as usize])
                    .collect();
                let k = key(&perm);
                let target = match lookup.get(&k) {
                    Some(&t) => t,
                    None => {
                        let t = elements.len();
                        if t >= cap {
                            return Err(Error::WeylCapExceeded { cap });
                        }
                        let mut word = elements[w].word.clone();
                        word.push(i);
                        elements.push(WeylElement {
                            system: rs.id(),
                            perm,
                            word,
                        });
                        lookup.insert(k, t);
                        right.push(vec![usize::MAX; r]);
                        queue.push_back(t);
                        t
                    }
                };
                right[w][i] = target;
                right[target][i] = w;
            }
        }

        let inversions: Vec<u128> = elements
            .iter()
            .map(|e| {
                let inv = invert_perm(&e.perm);
                (0..npos)
                    .filter(|&a| !rs.is_positive_index(inv[a] as usize))
                    .fold(0u128, |m, a| m | (1u128 << a))
            })
            .collect();
        let long_element = elements
            .iter()
            .position(|e| e.word.len() == npos)
            .expect("w0 exists");
        let upsets = (0..elements.len()).map(|_| OnceLock::new()).collect();
        Ok(WeylGroup {
            rs,
            elements,
            lookup,
            right,
            inversions,
            long_element,
            upsets,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> {
        (0..self.elements.len()).map(ElementId)
    }

    pub fn element(&self, w: ElementId) -> &WeylElement {
        &self.elements[w.0]
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn long_element(&self) -> ElementId {
        ElementId(self.long_element)
    }

    /// The simple reflection `s_i` (0-based).
    pub fn simple(&self, i: usize) -> ElementId {
        ElementId(self.right[0][i])
    }

    /// `w·s_i`.
    pub fn times_simple(&self, w: ElementId, i: usize) -> ElementId {
        ElementId(self.right[w.0][i])
    }

    fn find(&self, perm: &[u16]) -> ElementId {
        let key: Vec<u16> = (0..self.rs.rank())
            .map(|i| perm[self.rs.simple_index(i)])
            .collect();
        ElementId(self.lookup[&key])
    }

    /// Looks up an element given as a root permutation.
    pub fn id_of(&self, w: &WeylElement) -> Result<ElementId> {
        if w.system != self.rs.id() {
            return Err(Error::Mismatch);
        }
        Ok(self.find(&w.perm))
    }

    /// `u·v`.
    pub fn multiply(&self, u: ElementId, v: ElementId) -> ElementId {
        let pu = &self.elements[u.0].perm;
        let perm: Vec<u16> = self.elements[v.0]
            .perm
            .iter()
            .map(|&k| pu[k as usize])
            .collect();
        self.find(&perm)
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        self.find(&invert_perm(&self.elements[w.0].perm))
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.elements[w.0].word.len()
    }

    /// `w(α)`.
    pub fn apply(&self, w: ElementId, alpha: &Root) -> Result<Root> {
        let k = self.rs.require(alpha)?;
        Ok(self.rs.root(self.elements[w.0].apply_index(k)).clone())
    }

    /// `Φ_w = {α ∈ Φ⁺ : w⁻¹(α) ∈ Φ⁻}` as a bitmask over positive-root indices.
    pub fn inversion_mask(&self, w: ElementId) -> u128 {
        self.inversions[w.0]
    }

    /// `Φ_w` as positive-root indices, in root order.
    pub fn inversion_indices(&self, w: ElementId) -> Vec<usize> {
        let m = self.inversions[w.0];
        (0..self.rs.num_positive())
            .filter(|&a| m >> a & 1 == 1)
            .collect()
    }

    pub fn inversion_set(&self, w: ElementId) -> Vec<Root> {
        self.inversion_indices(w)
            .into_iter()
            .map(|a| self.rs.root(a).clone())
            .collect()
    }

    /// `Φ_u ∩ Φ_v = ∅`.
    pub fn disjoint_inversions(&self, u: ElementId, v: ElementId) -> bool {
        self.inversions[u.0] & self.inversions[v.0] == 0
    }

    /// `ℓ(u) + ℓ(v) = ℓ(u⁻¹v)`.
    pub fn lengths_add(&self, u: ElementId, v: ElementId) -> bool {
        let uv = self.multiply(self.inverse(u), v);
        self.length(u) + self.length(v) == self.length(uv)
    }

    fn upset(&self, u: ElementId) -> &[u64] {
        self.upsets[u.0].get_or_init(|| {
            let n = self.elements.len();
            let mut bits = vec![0u64; n.div_ceil(64)];
            let mut queue = VecDeque::from([u.0]);
            bits[u.0 / 64] |= 1 << (u.0 % 64);
            while let Some(w) = queue.pop_front() {
                let lw = self.elements[w].word.len();
                for &t in &self.right[w] {
                    if self.elements[t].word.len() == lw + 1 && bits[t / 64] >> (t % 64) & 1 == 0 {
                        bits[t / 64] |= 1 << (t % 64);
                        queue.push_back(t);
                    }
                }
            }
            bits
        })
    }

    /// Weak order `u ≤ v`: `v = u·s₁⋯s_k` with `ℓ(u·s₁⋯s_i) = ℓ(u) + i`.
    pub fn weak_leq(&self, u: ElementId, v: ElementId) -> bool {
        self.upset(u)[v.0 / 64] >> (v.0 % 64) & 1 == 1
    }

    /// Matrix of `w` on `h` in the simple-coroot basis: column `j` holds
    /// the coordinates of `w(α_j^∨) = (w α_j)^∨`.
    pub fn h_matrix(&self, w: ElementId) -> Matrix {
        let r = self.rs.rank();
        let mut m = Matrix::zeros(r, r);
        for j in 0..r {
            let img = self.elements[w.0].apply_index(self.rs.simple_index(j));
            for (i, c) in self.rs.coroot_coords(img).into_iter().enumerate() {
                m.set(i, j, rat(c));
            }
        }
        m
    }

    /// `dim {x ∈ h : w(x) = −x}`.
    pub fn minus_fixed_dim(&self, w: ElementId) -> usize {
        let m = self
            .h_matrix(w)
            .add(&Matrix::identity(self.rs.rank()))
            .expect("square");
        kernel(&m).dim()
    }

    /// Parses `e` or `s1*s2*…` (1-based generators). Words need not be reduced.
    pub fn parse_word(&self, s: &str) -> Result<ElementId> {
        let bad = || Error::InvalidWord(s.to_string());
        let s = s.trim();
        let mut w = self.identity();
        if s == "e" || s.is_empty() {
            return Ok(w);
        }
        for tok in s.split('*') {
            let i: usize = tok
                .trim()
                .strip_prefix('s')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            if i == 0 || i > self.rs.rank() {
                return Err(bad());
            }
            w = self.times_simple(w, i - 1);
        }
        Ok(w)
    }

    pub fn word_string(&self, w: ElementId) -> String {
        self.elements[w.0].word_string()
    }

    /// `w² = e`.
    pub fn is_involution(&self, w: ElementId) -> bool {
        self.multiply(w, w) == self.identity()
    }

    /// The reflection `s_β` for a root index `beta`.
    pub fn reflection(&self, beta: usize) -> ElementId {
        let perm: Vec<u16> = (0..self.rs.num_roots())
            .map(|k| self.rs.reflect(beta, k) as u16)
            .collect();
        self.find(&perm)
    }
}

fn invert_perm(p: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv
}

/// Classical `|W|` for an irreducible factor.
pub fn classical_order(f: crate::rootsys::Factor) -> usize {
    use crate::rootsys::Family;
    let n = f.rank;
    let fact = |k: usize| (1..=k).product::<usize>();
    match (f.family, n) {
        (Family::A, _) => fact(n + 1),
        (Family::B | Family::C, _) => (1usize << n) * fact(n),
        (Family::D, _) => (1usize << (n - 1)) * fact(n),
        (Family::E, 6) => 51_840,
        (Family::E, 7) => 2_903_040,
        (Family::E, 8) => 696_729_600,
        (Family::F, _) => 1152,
        (Family::G, _) => 12,
        _ => unreachable!(),
    }
}
