use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{kernel, Matrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient`, held as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `rows` inside `Q^ambient`. Rows may be dependent.
    pub fn new(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = Matrix::from_rows(ambient, rows)?;
        Ok(Subspace::from_matrix(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref_trimmed();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let rows = indices
            .into_iter()
            .map(|i| super::unit_vector(ambient, i))
            .collect();
        Subspace::new(ambient, rows).expect("unit vectors have ambient width")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_iter()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                actual: n,
            })
        }
    }

    /// Residual of `v` after eliminating against the echelon basis; zero iff
    /// `v` lies in the subspace.
    pub fn residual(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_ambient(v.len())?;
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (j, b) in self.basis.row(k).iter().enumerate().skip(p) {
                if !b.is_zero() {
                    r[j] -= &f * b;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(super::is_zero_vector(&self.residual(v)?))
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for row in self.basis_rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let rows = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(<[Rational]>::to_vec)
            .collect();
        Subspace::new(self.ambient, rows)
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(kernel(ann.basis()))
    }

    /// `{w : form(w, s) = 0 for all s in self}`.
    pub fn perp(&self, form: &Matrix) -> Result<Subspace> {
        if !form.is_symmetric() {
            return Err(Error::InvalidForm);
        }
        self.check_ambient(form.rows())?;
        // rows of B·F are the covectors form(b_k, ·)
        let bf = self.basis.mul(form)?;
        Ok(kernel(&bf))
    }

    /// Whether `form` vanishes identically on `self`.
    pub fn is_isotropic(&self, form: &Matrix) -> Result<bool> {
        self.check_ambient(form.rows())?;
        let bf = self.basis.mul(form)?;
        let gram = bf.mul(&self.basis.transpose())?;
        let isotropic = gram.row_iter().all(|r| r.iter().all(Zero::is_zero));
        Ok(isotropic)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

/// `a + b`.
pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

/// `a ∩ b`.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(a: &Subspace, v: &[Rational]) -> Result<bool> {
    a.contains(v)
}

pub fn perp(s: &Subspace, form: &Matrix) -> Result<Subspace> {
    s.perp(form)
}

/// Image of `s` under the linear map `x ↦ map · x` (column-vector convention,
/// `map` is `target × source`).
pub fn image_of(map: &Matrix, s: &Subspace) -> Result<Subspace> {
    if map.cols() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: map.cols(),
            actual: s.ambient_dim(),
        });
    }
    let rows = s
        .basis_rows()
        .map(|b| map.mul_vec(b))
        .collect::<Result<Vec<_>>>()?;
    Subspace::new(map.rows(), rows)
}
