//! Independent reference computations for the integration tests.
//!
//! The Weyl group here is a set of integer matrices acting on simple-root
//! coordinates, generated from the Cartan matrix alone. Nothing in this
//! module touches the library's permutation representation.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Mat = Vec<Vec<i64>>;

/// Simple reflection `s_j(α) = α − ⟨α, α_j^∨⟩ α_j` as a matrix, where
/// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
pub fn simple_reflection(cartan: &[Vec<i64>], j: usize) -> Mat {
    let r = cartan.len();
    let mut m = vec![vec![0; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    // column i is s_j(α_i) = α_i − cartan[i][j] α_j
    for i in 0..r {
        m[j][i] -= cartan[i][j];
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let r = a.len();
    let mut out = vec![vec![0; r]; r];
    for i in 0..r {
        for k in 0..r {
            if a[i][k] != 0 {
                for j in 0..r {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

pub fn apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// All of `W` by closure under right multiplication by simple reflections.
pub fn weyl_group(cartan: &[Vec<i64>]) -> Vec<Mat> {
    let r = cartan.len();
    let gens: Vec<Mat> = (0..r).map(|j| simple_reflection(cartan, j)).collect();
    let id: Mat = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Mat> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let x = mul(&w, g);
            if seen.insert(x.clone()) {
                out.push(x.clone());
                queue.push_back(x);
            }
        }
    }
    out
}

/// `Φ` as the `W`-orbit of the simple roots.
pub fn roots(cartan: &[Vec<i64>], group: &[Mat]) -> BTreeSet<Vec<i64>> {
    let r = cartan.len();
    let mut out = BTreeSet::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        for w in group {
            out.insert(apply(w, &e));
        }
    }
    out
}

pub fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&c| c >= 0)
}

/// `w(Φ⁻) ∩ Φ⁺`.
pub fn inversion_set(w: &Mat, roots: &BTreeSet<Vec<i64>>) -> BTreeSet<Vec<i64>> {
    roots
        .iter()
        .filter(|a| !is_positive(a))
        .map(|a| apply(w, a))
        .filter(|a| is_positive(a))
        .collect()
}

/// Number of ordered pairs with disjoint inversion sets.
pub fn disjoint_pairs(cartan: &[Vec<i64>]) -> usize {
    let g = weyl_group(cartan);
    let phi = roots(cartan, &g);
    let inv: Vec<_> = g.iter().map(|w| inversion_set(w, &phi)).collect();
    let mut n = 0;
    for a in &inv {
        for b in &inv {
            if a.is_disjoint(b) {
                n += 1;
            }
        }
    }
    n
}
