//! Algebras (and Frobenius algebras) in `Rep(H)` given by structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational};
use crate::repcat::{braiding, is_morphism, Mor, Obj};
use crate::report::ValidationReport;

/// Coalgebra half of a Frobenius structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    /// `d^2 x d`; column `c` is `Delta(e_c)`.
    pub comult: Matrix,
    pub counit: Vec<Rational>,
}

/// An algebra `(A, m, u)` in `Rep(H)`, optionally with `(Delta, eps)`.
///
/// `m` is `d x d^2` with column `a*d + b` holding `e_a e_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgObj {
    carrier: Obj,
    m: Matrix,
    u: Vec<Rational>,
    coalgebra: Option<Coalgebra>,
}

impl AlgObj {
    /// Shape checks only; use [`check_algebra`] for the axioms.
    pub fn new(carrier: Obj, m: Matrix, u: Vec<Rational>) -> Result<AlgObj> {
        let d = carrier.dim();
        if m.shape() != (d, d * d) {
            return Err(Error::Shape(format!(
                "multiplication must be {d} x {}, got {:?}",
                d * d,
                m.shape()
            )));
        }
        if u.len() != d {
            return Err(Error::Shape(format!("unit must have length {d}")));
        }
        Ok(AlgObj {
            carrier,
            m,
            u,
            coalgebra: None,
        })
    }

    /// From `t[i][j][k]` = coefficient of `e_k` in `e_i e_j`.
    pub fn from_tensor(carrier: Obj, t: &[Vec<Vec<Rational>>], u: Vec<Rational>) -> Result<AlgObj> {
        let d = carrier.dim();
        if t.len() != d || t.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::Shape(format!("structure constants must be {d} x {d} x {d}")));
        }
        let m = Matrix::from_fn(d, d * d, |k, c| t[c / d][c % d][k].clone());
        Self::new(carrier, m, u)
    }

    pub fn with_coalgebra(mut self, comult: Matrix, counit: Vec<Rational>) -> Result<AlgObj> {
        let d = self.dim();
        if comult.shape() != (d * d, d) || counit.len() != d {
            return Err(Error::Shape("comultiplication must be d^2 x d, counit length d".into()));
        }
        self.coalgebra = Some(Coalgebra { comult, counit });
        Ok(self)
    }

    pub fn without_coalgebra(mut self) -> AlgObj {
        self.coalgebra = None;
        self
    }

    /// The unit object as an algebra, with `Delta(1) = 1 (x) 1`.
    pub fn unit_algebra(hopf: &std::sync::Arc<crate::repcat::HopfData>) -> AlgObj {
        let one = Obj::unit(hopf);
        AlgObj::new(one, Matrix::identity(1), vec![Rational::one()])
            .and_then(|a| a.with_coalgebra(Matrix::identity(1), vec![Rational::one()]))
            .expect("1-dimensional shapes")
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn mult(&self) -> &Matrix {
        &self.m
    }

    pub fn unit(&self) -> &[Rational] {
        &self.u
    }

    pub fn coalgebra(&self) -> Option<&Coalgebra> {
        self.coalgebra.as_ref()
    }

    /// `t[i][j][k]`, the inverse of [`AlgObj::from_tensor`].
    pub fn structure_tensor(&self) -> Vec<Vec<Vec<Rational>>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.m.column_vec(i * d + j)).collect())
            .collect()
    }

    pub fn mult_mor(&self) -> Result<Mor> {
        Mor::new(self.carrier.tensor(&self.carrier)?, self.carrier.clone(), self.m.clone())
    }

    pub fn unit_mor(&self) -> Result<Mor> {
        Mor::new(
            Obj::unit(self.carrier.hopf()),
            self.carrier.clone(),
            Matrix::column(self.u.clone()),
        )
    }

    /// Matrix of `x -> e_a x`.
    pub fn left_mult(&self, a: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(d, d, |i, b| self.m.get(i, a * d + b).clone())
    }

    /// Matrix of `x -> x e_b`.
    pub fn right_mult(&self, b: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(d, d, |i, a| self.m.get(i, a * d + b).clone())
    }

    /// Matrix of `x -> a x` for an arbitrary element.
    pub fn left_mult_by(&self, a: &[Rational]) -> Matrix {
        combine(a, |k| self.left_mult(k), self.dim())
    }

    pub fn right_mult_by(&self, b: &[Rational]) -> Matrix {
        combine(b, |k| self.right_mult(k), self.dim())
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (k, o) in out.iter_mut().enumerate() {
                    let v = self.m.get(k, a * d + b);
                    if !v.is_zero() {
                        *o += &c * v;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[a] = Rational::one();
        v
    }

    /// `Delta(e_c)` as a `d x d` matrix (entry `(k, l)` is the coefficient of `e_k (x) e_l`).
    pub fn comult_of(&self, c: usize) -> Option<Matrix> {
        let d = self.dim();
        self.coalgebra
            .as_ref()
            .map(|co| Matrix::from_vec(d, d, co.comult.column_vec(c)).expect("sized"))
    }
}

fn combine(coeffs: &[Rational], basis: impl Fn(usize) -> Matrix, d: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            m = &m + &basis(k).scale(c);
        }
    }
    m
}

fn flat(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Associativity, unitality, equivariance and (with a coalgebra) the
/// coalgebra axioms plus both Frobenius compatibility identities.
pub fn check_algebra(a: &AlgObj) -> ValidationReport {
    let d = a.dim();
    let mut rep = ValidationReport::new();
    let lefts: Vec<Matrix> = (0..d).map(|k| a.left_mult(k)).collect();
    let rights: Vec<Matrix> = (0..d).map(|k| a.right_mult(k)).collect();
    let by_left = |v: &[Rational]| combine(v, |k| lefts[k].clone(), d);

    let assoc = (0..d).all(|x| {
        (0..d).all(|y| &lefts[x] * &lefts[y] == by_left(&a.m.column_vec(x * d + y)))
    });
    rep.record("m associative", assoc);
    let id = Matrix::identity(d);
    rep.record("unit left", by_left(&a.u) == id);
    rep.record("unit right", combine(&a.u, |k| rights[k].clone(), d) == id);

    let aa = a.carrier.tensor(&a.carrier).expect("same category");
    let one = Obj::unit(a.carrier.hopf());
    rep.record("m equivariant", is_morphism(&aa, &a.carrier, &a.m));
    rep.record(
        "u equivariant",
        is_morphism(&one, &a.carrier, &Matrix::column(a.u.clone())),
    );

    if let Some(co) = &a.coalgebra {
        let delta = |c: usize| a.comult_of(c).expect("coalgebra present");
        let eps_row = Matrix::row_vector(co.counit.clone());
        let eps_col = Matrix::column(co.counit.clone());
        let mut coassoc = true;
        let mut counit_l = true;
        let mut counit_r = true;
        for c in 0..d {
            let dc = delta(c);
            // (Delta (x) id) and (id (x) Delta) both flatten to index (k1, k2, l)
            let lhs = &co.comult * &dc;
            let rhs = &dc * &co.comult.transpose();
            coassoc &= flat(&lhs) == flat(&rhs);
            let e = a.basis_vector(c);
            counit_l &= (&eps_row * &dc).entries() == e.as_slice();
            counit_r &= (&dc * &eps_col).entries() == e.as_slice();
        }
        rep.record("comult coassociative", coassoc);
        rep.record("counit left", counit_l);
        rep.record("counit right", counit_r);
        rep.record("comult equivariant", is_morphism(&a.carrier, &aa, &co.comult));
        rep.record("counit equivariant", is_morphism(&a.carrier, &one, &eps_row));

        let delta_of = |v: &[Rational]| -> Matrix {
            let col = co.comult.apply(v);
            Matrix::from_vec(d, d, col).expect("sized")
        };
        let mut frob_l = true;
        let mut frob_r = true;
        for x in 0..d {
            for y in 0..d {
                let target = delta_of(&a.m.column_vec(x * d + y));
                // (m (x) id)(id (x) Delta)(e_x (x) e_y) = (L_x (x) id) Delta(e_y)
                frob_l &= &lefts[x] * &delta(y) == target;
                // (id (x) m)(Delta (x) id)(e_x (x) e_y) = (id (x) R_y) Delta(e_x)
                frob_r &= &delta(x) * &rights[y].transpose() == target;
            }
        }
        rep.record("frobenius (m x id)(id x Delta) = Delta m", frob_l);
        rep.record("frobenius (id x m)(Delta x id) = Delta m", frob_r);
    }
    rep
}

/// `m c_{A,A} = m` with the ambient braiding.
pub fn is_commutative(a: &AlgObj) -> bool {
    let c = braiding(&a.carrier, &a.carrier).expect("same category");
    &a.m * c.matrix() == a.m
}

/// Whether `f : A -> B` is an equivariant unital algebra map.
pub fn is_algebra_map(a: &AlgObj, b: &AlgObj, f: &Matrix) -> bool {
    if f.shape() != (b.dim(), a.dim()) || !is_morphism(&a.carrier, &b.carrier, f) {
        return false;
    }
    if f.apply(&a.u) != b.u {
        return false;
    }
    let cols: Vec<Vec<Rational>> = (0..a.dim()).map(|k| f.column_vec(k)).collect();
    (0..a.dim()).all(|x| {
        (0..a.dim()).all(|y| f.apply(&a.m.column_vec(x * a.dim() + y)) == b.product(&cols[x], &cols[y]))
    })
}

/// `A (x) B` with `m = (m_A (x) m_B)(id (x) c_{B,A} (x) id)`, and the
/// tensor coalgebra `(id (x) c_{A,B} (x) id)(Delta_A (x) Delta_B)` when both
/// factors carry one.
pub fn tensor_algebra_of(a: &AlgObj, b: &AlgObj) -> Result<AlgObj> {
    a.carrier.check_same_category(&b.carrier)?;
    let (da, db) = (a.dim(), b.dim());
    let carrier = a.carrier.tensor(&b.carrier)?;
    let c_ba = braiding(&b.carrier, &a.carrier)?;
    let middle = Matrix::identity(da)
        .kron(c_ba.matrix())
        .kron(&Matrix::identity(db));
    let m = &a.m.kron(&b.m) * &middle;
    let u = Matrix::column(a.u.clone())
        .kron(&Matrix::column(b.u.clone()))
        .entries()
        .to_vec();
    let out = AlgObj::new(carrier, m, u)?;
    match (&a.coalgebra, &b.coalgebra) {
        (Some(ca), Some(cb)) => {
            let c_ab = braiding(&a.carrier, &b.carrier)?;
            let middle = Matrix::identity(da)
                .kron(c_ab.matrix())
                .kron(&Matrix::identity(db));
            let comult = &middle * &ca.comult.kron(&cb.comult);
            let counit = Matrix::row_vector(ca.counit.clone())
                .kron(&Matrix::row_vector(cb.counit.clone()))
                .entries()
                .to_vec();
            out.with_coalgebra(comult, counit)
        }
        _ => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use crate::repcat::{group_algebra, super_hopf, Group};
    use std::sync::Arc;

    fn vec_hopf() -> Arc<crate::repcat::HopfData> {
        group_algebra(&Group::trivial())
    }

    /// k[x]/(x^n) on the monomial basis.
    fn truncated(n: usize) -> AlgObj {
        let carrier = Obj::trivial(&vec_hopf(), n);
        let m = Matrix::from_fn(n, n * n, |k, c| {
            if c / n + c % n == k {
                q(1)
            } else {
                q(0)
            }
        });
        let mut u = vec![q(0); n];
        u[0] = q(1);
        AlgObj::new(carrier, m, u).unwrap()
    }

    fn mat2() -> AlgObj {
        let carrier = Obj::trivial(&vec_hopf(), 4);
        let m = Matrix::from_fn(4, 16, |k, c| {
            let (x, y) = (c / 4, c % 4);
            let (i, j, kk, l) = (x / 2, x % 2, y / 2, y % 2);
            if j == kk && k == i * 2 + l {
                q(1)
            } else {
                q(0)
            }
        });
        AlgObj::new(carrier, m, vec![q(1), q(0), q(0), q(1)]).unwrap()
    }

    /// Lambda(k^1) in Rep(super) with the generator odd.
    fn odd_exterior() -> AlgObj {
        let h = super_hopf();
        let carrier = Obj::from_blocks(
            h,
            vec![Matrix::identity(2), Matrix::from_ints(&[&[1, 0], &[0, -1]])],
        )
        .unwrap();
        let m = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        AlgObj::new(carrier, m, vec![q(1), q(0)]).unwrap()
    }

    #[test]
    fn unit_and_dual_numbers_valid() {
        let one = AlgObj::unit_algebra(&vec_hopf());
        assert!(check_algebra(&one).passed());
        let rep = check_algebra(&truncated(2));
        assert!(rep.passed(), "{:?}", rep.failures());
    }

    #[test]
    fn perturbed_entry_breaks_associativity() {
        let a = truncated(3);
        let mut t = a.structure_tensor();
        // x * x = x^2 + 1 with everything else unchanged
        t[1][1][0] = q(1);
        let bad = AlgObj::from_tensor(a.carrier().clone(), &t, a.unit().to_vec()).unwrap();
        let brute = (0..3).any(|x| {
            (0..3).any(|y| {
                (0..3).any(|z| {
                    let (ex, ey, ez) = (bad.basis_vector(x), bad.basis_vector(y), bad.basis_vector(z));
                    bad.product(&bad.product(&ex, &ey), &ez) != bad.product(&ex, &bad.product(&ey, &ez))
                })
            })
        });
        assert!(brute);
        assert_eq!(check_algebra(&bad).get("m associative"), Some(false));
    }

    #[test]
    fn commutativity() {
        assert!(is_commutative(&truncated(2)));
        assert!(!is_commutative(&mat2()));
        let ext = odd_exterior();
        assert!(check_algebra(&ext).passed());
        assert!(is_commutative(&ext));
    }

    #[test]
    fn tensor_with_unit_is_identity() {
        let a = truncated(3);
        let one = AlgObj::unit_algebra(&vec_hopf());
        let t = tensor_algebra_of(&one, &a.clone()).unwrap();
        assert_eq!(t.mult(), a.mult());
        assert_eq!(t.unit(), a.unit());
    }

    #[test]
    fn tensor_of_dual_numbers() {
        let a = truncated(2);
        let t = tensor_algebra_of(&a, &a).unwrap();
        assert!(check_algebra(&t).passed());
        // basis (1,1), (1,y), (x,1), (x,y)
        let x1 = t.basis_vector(2);
        let y1 = t.basis_vector(1);
        assert_eq!(t.product(&x1, &y1), t.basis_vector(3));
        assert_eq!(t.product(&y1, &x1), t.basis_vector(3));
    }

    #[test]
    fn tensor_of_odd_exteriors_has_koszul_sign() {
        let a = odd_exterior();
        let t = tensor_algebra_of(&a, &a).unwrap();
        assert!(check_algebra(&t).passed());
        let x1 = t.basis_vector(2);
        let y1 = t.basis_vector(1);
        let xy = t.product(&x1, &y1);
        let yx = t.product(&y1, &x1);
        assert_eq!(xy, t.basis_vector(3));
        assert_eq!(yx, vec![q(0), q(0), q(0), q(-1)]);
        assert!(is_commutative(&t));
    }

    #[test]
    fn algebra_map_check() {
        let a = truncated(2);
        assert!(is_algebra_map(&a, &a, &Matrix::identity(2)));
        // x -> -x is an automorphism, x -> 2x is too, x -> 1 is not
        assert!(is_algebra_map(&a, &a, &Matrix::from_ints(&[&[1, 0], &[0, 2]])));
        assert!(!is_algebra_map(&a, &a, &Matrix::from_ints(&[&[1, 1], &[0, 0]])));
    }
}
