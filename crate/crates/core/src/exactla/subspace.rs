//! Subspaces of `Q^n` in canonical (reduced echelon) form.

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::Rational;

/// A subspace stored by the rows of its reduced echelon basis. Two
/// subspaces are equal iff their echelon data are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// `dim x ambient`, in reduced row echelon form.
    echelon: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            echelon: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            echelon: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Matrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let echelon = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols(),
            echelon,
            pivots,
        }
    }

    /// Span of the first `k` standard basis vectors.
    pub fn coordinate_prefix(ambient: usize, k: usize) -> Self {
        let idx: Vec<usize> = (0..k).collect();
        Subspace {
            ambient,
            echelon: Matrix::identity(ambient).select_rows(&idx),
            pivots: idx,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis vectors as rows.
    pub fn echelon(&self) -> &Matrix {
        &self.echelon
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis(&self) -> Matrix {
        self.echelon.transpose()
    }

    /// The echelon basis vector whose pivot is `p`.
    pub fn vector_with_pivot(&self, p: usize) -> Option<Vec<Rational>> {
        self.pivots
            .iter()
            .position(|&q| q == p)
            .map(|r| self.echelon.row(r).to_vec())
    }

    /// `x` minus its component along the echelon basis, read off at pivots.
    /// The result vanishes at every pivot coordinate, and is zero iff `x`
    /// lies in the subspace.
    pub fn reduce(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.ambient, "reduce: length mismatch");
        let mut out = x.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(self.echelon.row(r)) {
                if !e.is_zero() {
                    *o -= &c * e;
                }
            }
        }
        out
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.reduce(x).iter().all(Zero::is_zero)
    }

    pub fn contains_columns(&self, m: &Matrix) -> bool {
        (0..m.cols()).all(|j| self.contains(&m.column_vec(j)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|r| other.contains(self.echelon.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let stacked = self
            .echelon
            .vstack(&other.echelon)
            .expect("subspace sum: ambient mismatch");
        Subspace::from_rows(&stacked)
    }

    /// Rows whose common kernel is exactly this subspace.
    pub fn annihilator(&self) -> Matrix {
        self.echelon.kernel_basis().transpose()
    }

    /// Image under a linear map given by its matrix.
    pub fn image(&self, f: &Matrix) -> Subspace {
        Subspace::from_columns(&(f * &self.basis()))
    }

    /// `{x : f x in self}` for `f : Q^k -> Q^ambient`.
    pub fn preimage(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.rows(), self.ambient, "preimage: codomain mismatch");
        let constraint = &self.annihilator() * f;
        Subspace::from_columns(&constraint.kernel_basis())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let constraint = self
            .annihilator()
            .vstack(&other.annihilator())
            .expect("intersection: ambient mismatch");
        Subspace::from_columns(&constraint.kernel_basis())
    }

    /// Coordinates of `x` (assumed in the subspace) in the echelon basis.
    pub fn coordinates(&self, x: &[Rational]) -> Vec<Rational> {
        debug_assert!(self.contains(x));
        self.pivots.iter().map(|&p| x[p].clone()).collect()
    }

    /// Whether `f` maps this subspace into itself.
    pub fn is_stable_under(&self, f: &Matrix) -> bool {
        self.contains_columns(&(f * &self.basis()))
    }
}
