//! Small algebras used as test objects: truncated and deformed polynomial
//! rings, matrix algebras, upper triangular matrices.

use std::sync::Arc;

use crate::algebra::{end_algebra, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{q, Matrix, Rational};
use crate::filtration::{FilteredAlg, FilteredObj, GradedAlg};
use crate::repcat::{group_algebra, Group, HopfData, Obj};

/// `Vec`, as representations of the trivial group.
pub fn vec_hopf() -> Arc<HopfData> {
    group_algebra(&Group::trivial())
}

/// `k[x]/(x^n - c)` on `1, x, ..., x^{n-1}`.
fn poly_quotient(n: usize, c: &Rational) -> AlgObj {
    let m = Matrix::from_fn(n, n * n, |k, col| {
        let s = col / n + col % n;
        if s < n {
            if s == k {
                q(1)
            } else {
                q(0)
            }
        } else if s - n == k {
            c.clone()
        } else {
            q(0)
        }
    });
    let mut u = vec![q(0); n];
    u[0] = q(1);
    AlgObj::new(Obj::trivial(&vec_hopf(), n), m, u).expect("well-shaped")
}

/// `k[x]/(x^n)` graded by degree.
pub fn truncated_poly(n: usize) -> Result<GradedAlg> {
    if n == 0 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    GradedAlg::new(poly_quotient(n, &q(0)), vec![1; n])
}

/// `k[x]/(x^n - c)` with the monomial filtration `S_i = span(1, ..., x^i)`.
pub fn deformed_poly(n: usize, c: &Rational) -> Result<FilteredAlg> {
    if n == 0 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    let a = poly_quotient(n, c);
    let f = FilteredObj::by_degree(a.carrier(), &(0..n).collect::<Vec<_>>())?;
    FilteredAlg::new(a, f)
}

/// `End(V)` with `Delta(E_ij) = sum_k E_ik (x) E_kj` and `eps(E_ij) = delta_ij`.
pub fn matrix_frobenius(n: usize, v: &Obj) -> Result<AlgObj> {
    if v.dim() != n {
        return Err(Error::Invalid(format!("V has dimension {}, expected {n}", v.dim())));
    }
    end_algebra(v)
}

/// Upper triangular `2 x 2` matrices on `E11, E12, E22`.
pub fn upper_triangular_2() -> AlgObj {
    let t = |a: usize, b: usize| -> Option<usize> {
        match (a, b) {
            (0, 0) => Some(0),
            (0, 1) | (1, 2) => Some(1),
            (2, 2) => Some(2),
            _ => None,
        }
    };
    let m = Matrix::from_fn(3, 9, |k, c| if t(c / 3, c % 3) == Some(k) { q(1) } else { q(0) });
    AlgObj::new(Obj::trivial(&vec_hopf(), 3), m, vec![q(1), q(0), q(1)]).expect("well-shaped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_algebra, is_commutative};
    use crate::frobenius::{copairing_check, frobenius_detect, gram_matrix, DetectOptions};

    #[test]
    fn truncations() {
        let one = truncated_poly(1).unwrap();
        assert_eq!(one.to_algebra(), &AlgObj::unit_algebra(&vec_hopf()).without_coalgebra());
        let three = truncated_poly(3).unwrap();
        assert_eq!(three.dims(), &[1, 1, 1]);
        let gram = gram_matrix(three.to_algebra(), &[q(0), q(0), q(1)]);
        assert_eq!(gram, Matrix::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        let cert = frobenius_detect(three.to_algebra(), &DetectOptions::default()).unwrap();
        assert_eq!(cert.witness.unwrap().nu, vec![q(0), q(0), q(1)]);
        let two = truncated_poly(2).unwrap();
        assert!(copairing_check(two.to_algebra(), &[q(0), q(1)]).unwrap().is_some());
        assert!(copairing_check(two.to_algebra(), &[q(1), q(0)]).unwrap().is_none());
        assert!(truncated_poly(0).is_err());
    }

    #[test]
    fn deformed_cubic() {
        let fa = deformed_poly(3, &q(1)).unwrap();
        let a = fa.algebra();
        assert!(check_algebra(a).passed());
        // x * x^2 = 1
        assert_eq!(a.product(&a.basis_vector(1), &a.basis_vector(2)), vec![q(1), q(0), q(0)]);
    }

    #[test]
    fn matrix_units() {
        let one = matrix_frobenius(1, &Obj::trivial(&vec_hopf(), 1)).unwrap();
        assert_eq!(one, AlgObj::unit_algebra(&vec_hopf()));
        let m2 = matrix_frobenius(2, &Obj::trivial(&vec_hopf(), 2)).unwrap();
        assert!(check_algebra(&m2).passed());
        assert!(!is_commutative(&m2));
        // (m x id)(id x Delta) and Delta m agree on E12 (x) E21 = index 1*4+2
        let d = 4;
        let co = m2.coalgebra().unwrap();
        let lhs = &m2.mult().kron(&Matrix::identity(d)) * &Matrix::identity(d).kron(&co.comult);
        let rhs = &co.comult * m2.mult();
        assert_eq!(lhs.column_vec(d + 2), rhs.column_vec(d + 2));
        // Delta(E11) = E11 (x) E11 + E12 (x) E21
        let mut expected = vec![q(0); 16];
        expected[0] = q(1);
        expected[d + 2] = q(1);
        assert_eq!(rhs.column_vec(d + 2), expected);
        assert!(matrix_frobenius(3, &Obj::trivial(&vec_hopf(), 2)).is_err());
    }

    #[test]
    fn upper_triangular_valid() {
        assert!(check_algebra(&upper_triangular_2()).passed());
    }
}
