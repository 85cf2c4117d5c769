//! Endomorphism algebras `End(V)` with the matrix-unit Frobenius structure.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::alg::{check_algebra, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::repcat::{dual_obj, group_algebra, Group, Obj};

/// Multiplication, unit, comultiplication and counit of `Mat_n` on the
/// basis `E_ij` (index `i*n + j`): `E_ij E_kl = delta_jk E_il`,
/// `Delta(E_ij) = sum_k E_ik (x) E_kj`, `eps(E_ij) = delta_ij`.
pub fn matrix_unit_structure(n: usize) -> (Matrix, Vec<Rational>, Matrix, Vec<Rational>) {
    let d = n * n;
    let mut m = Matrix::zeros(d, d * d);
    let mut comult = Matrix::zeros(d * d, d);
    let mut u = vec![Rational::zero(); d];
    let mut counit = vec![Rational::zero(); d];
    for i in 0..n {
        u[i * n + i] = Rational::one();
        counit[i * n + i] = Rational::one();
        for j in 0..n {
            for l in 0..n {
                m.set(i * n + l, (i * n + j) * d + (j * n + l), Rational::one());
                comult.set((i * n + j) * d + (j * n + l), i * n + l, Rational::one());
            }
        }
    }
    (m, u, comult, counit)
}

fn with_matrix_structure(carrier: Obj) -> Result<AlgObj> {
    let n = (carrier.dim() as f64).sqrt().round() as usize;
    let (m, u, comult, counit) = matrix_unit_structure(n);
    let a = AlgObj::new(carrier, m, u)?.with_coalgebra(comult, counit)?;
    let rep = check_algebra(&a);
    for name in ["comult equivariant", "counit equivariant"] {
        if rep.get(name) == Some(false) {
            return Err(Error::Unsupported(format!(
                "matrix-unit coalgebra on End(V) fails: {name}"
            )));
        }
    }
    if !rep.passed() {
        return Err(Error::Internal(format!(
            "End(V) axioms failed: {}",
            rep.failures().join(", ")
        )));
    }
    Ok(a)
}

/// `End(V) = V (x) V*` with `h . f = sum rho(h1) f rho(S h2)`.
pub fn end_algebra(v: &Obj) -> Result<AlgObj> {
    let dual = dual_obj(v)?;
    with_matrix_structure(v.tensor(&dual.left)?)
}

/// `End(V)` for a projective representation `g -> rho(g)` of `G` with
/// `rho(g) rho(h) = psi(g,h) rho(gh)`, as an algebra in `Rep(G)` under
/// conjugation `g . f = rho(g) f rho(g)^{-1}`.
pub fn end_algebra_projective(
    group: &Group,
    cocycle: &[Vec<Rational>],
    rho: &[Matrix],
) -> Result<AlgObj> {
    let n = group.order();
    if cocycle.len() != n || cocycle.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("cocycle table must be |G| x |G|".into()));
    }
    if cocycle.iter().flatten().any(Zero::is_zero) {
        return Err(Error::Invalid("cocycle values must be nonzero".into()));
    }
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let lhs = &cocycle[g][h] * &cocycle[group.mul(g, h)][k];
                let rhs = &cocycle[h][k] * &cocycle[g][group.mul(h, k)];
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "cocycle condition fails at ({g}, {h}, {k})"
                    )));
                }
            }
        }
    }
    if rho.len() != n {
        return Err(Error::Invalid("one matrix per group element required".into()));
    }
    let dim = rho[0].rows();
    let mut inverses = Vec::with_capacity(n);
    for (g, r) in rho.iter().enumerate() {
        if r.shape() != (dim, dim) {
            return Err(Error::Shape("projective representation matrices must be square".into()));
        }
        inverses.push(
            r.inverse()
                .ok_or_else(|| Error::Invalid(format!("rho({g}) is not invertible")))?,
        );
    }
    for g in 0..n {
        for h in 0..n {
            if &rho[g] * &rho[h] != rho[group.mul(g, h)].scale(&cocycle[g][h]) {
                return Err(Error::Invalid(format!(
                    "rho({g}) rho({h}) != psi({g},{h}) rho({g}{h})"
                )));
            }
        }
    }
    let hopf: Arc<_> = group_algebra(group);
    // vec(A f B) = (A (x) B^T) vec(f) in row-major order
    let blocks = (0..n)
        .map(|g| rho[g].kron(&inverses[g].transpose()))
        .collect();
    with_matrix_structure(Obj::from_blocks(hopf, blocks)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::alg::is_commutative;
    use crate::exactla::q;
    use crate::repcat::super_hopf;

    #[test]
    fn end_of_line_is_unit_algebra() {
        let h = group_algebra(&Group::trivial());
        let a = end_algebra(&Obj::unit(&h)).unwrap();
        assert_eq!(a, AlgObj::unit_algebra(&h));
    }

    #[test]
    fn comult_of_e11() {
        let h = group_algebra(&Group::trivial());
        let a = end_algebra(&Obj::trivial(&h, 2)).unwrap();
        // E11 (x) E11 + E12 (x) E21 at flat indices 0*4+0 and 1*4+2
        let d = a.comult_of(0).unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected.set(0, 0, q(1));
        expected.set(1, 2, q(1));
        assert_eq!(d, expected);
        assert_eq!(a.coalgebra().unwrap().counit[1], q(0));
        assert!(!is_commutative(&a));
    }

    #[test]
    fn end_of_regular_z2_module() {
        let h = group_algebra(&Group::cyclic(2));
        let regular = Obj::from_blocks(
            h,
            vec![Matrix::identity(2), Matrix::from_ints(&[&[0, 1], &[1, 0]])],
        )
        .unwrap();
        let a = end_algebra(&regular).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(check_algebra(&a).passed());
        // conjugation by the swap exchanges E11 and E22
        let g = a.carrier().rho(1);
        assert_eq!(g.apply(&a.basis_vector(0)), a.basis_vector(3));
    }

    #[test]
    fn end_of_odd_line() {
        // u acting by -1 on k: End(k) is the unit algebra even in the super case
        let h = super_hopf();
        let odd = Obj::from_blocks(h, vec![Matrix::identity(1), Matrix::from_ints(&[&[-1]])]).unwrap();
        assert!(end_algebra(&odd).is_ok());
    }

    #[test]
    fn klein_four_pauli() {
        let k4 = Group::cyclic(2).product(&Group::cyclic(2));
        let x = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let z = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        // elements (a,b) index 2a+b: e, b, a, ab
        let rho = vec![Matrix::identity(2), z.clone(), x.clone(), &x * &z];
        let mut psi = vec![vec![q(1); 4]; 4];
        for g in 0..4 {
            for h in 0..4 {
                let prod = &rho[g] * &rho[h];
                let target = &rho[k4.mul(g, h)];
                let (i, j) = (0..2)
                    .flat_map(|i| (0..2).map(move |j| (i, j)))
                    .find(|&(i, j)| !target.get(i, j).is_zero())
                    .unwrap();
                psi[g][h] = prod.get(i, j) / target.get(i, j);
            }
        }
        let a = end_algebra_projective(&k4, &psi, &rho).unwrap();
        assert!(check_algebra(&a).passed());
        // the projective action is irreducible: only scalars are invariant
        assert_eq!(crate::repcat::hom_invariants(a.carrier()).rows(), 1);

        let mut bad = psi.clone();
        bad[1][2] = -bad[1][2].clone();
        assert!(end_algebra_projective(&k4, &bad, &rho).is_err());
    }
}
