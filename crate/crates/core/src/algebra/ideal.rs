//! Modules over algebras, weak ideals, and quotient algebras.

use num_traits::Zero;

use super::alg::AlgObj;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::repcat::{is_morphism, Mor, Obj};
use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Bi,
}

impl Side {
    pub fn has_left(self) -> bool {
        matches!(self, Side::Left | Side::Bi)
    }

    pub fn has_right(self) -> bool {
        matches!(self, Side::Right | Side::Bi)
    }
}

/// A left, right or bimodule `M` over an algebra `A`.
///
/// `left` is `dim M x (dim A * dim M)` for `A (x) M -> M`; `right` is
/// `dim M x (dim M * dim A)` for `M (x) A -> M`.
#[derive(Clone, Debug)]
pub struct ModuleObj {
    algebra: AlgObj,
    carrier: Obj,
    side: Side,
    left: Option<Matrix>,
    right: Option<Matrix>,
}

impl ModuleObj {
    pub fn new(
        algebra: AlgObj,
        carrier: Obj,
        side: Side,
        left: Option<Matrix>,
        right: Option<Matrix>,
    ) -> Result<ModuleObj> {
        algebra.carrier().check_same_category(&carrier)?;
        let (d, n) = (algebra.dim(), carrier.dim());
        if side.has_left() != left.is_some() || side.has_right() != right.is_some() {
            return Err(Error::Invalid("actions must match the declared side".into()));
        }
        if left.as_ref().is_some_and(|l| l.shape() != (n, d * n))
            || right.as_ref().is_some_and(|r| r.shape() != (n, n * d))
        {
            return Err(Error::Shape("module action has the wrong shape".into()));
        }
        Ok(ModuleObj {
            algebra,
            carrier,
            side,
            left,
            right,
        })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &AlgObj, side: Side) -> ModuleObj {
        let m = a.mult().clone();
        ModuleObj {
            algebra: a.clone(),
            carrier: a.carrier().clone(),
            side,
            left: side.has_left().then(|| m.clone()),
            right: side.has_right().then_some(m),
        }
    }

    pub fn algebra(&self) -> &AlgObj {
        &self.algebra
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `m -> e_a m`.
    pub fn left_action(&self, a: usize) -> Option<Matrix> {
        let n = self.carrier.dim();
        self.left
            .as_ref()
            .map(|l| Matrix::from_fn(n, n, |i, j| l.get(i, a * n + j).clone()))
    }

    /// `m -> m e_b`.
    pub fn right_action(&self, b: usize) -> Option<Matrix> {
        let (n, d) = (self.carrier.dim(), self.algebra.dim());
        self.right
            .as_ref()
            .map(|r| Matrix::from_fn(n, n, |i, j| r.get(i, j * d + b).clone()))
    }
}

fn combine(coeffs: &[Rational], mats: &[Matrix], n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (c, b) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m = &m + &b.scale(c);
        }
    }
    m
}

/// Module axioms for the declared side(s), plus bimodule compatibility.
pub fn check_module(module: &ModuleObj) -> ValidationReport {
    let a = &module.algebra;
    let (d, n) = (a.dim(), module.carrier.dim());
    let id = Matrix::identity(n);
    let mut rep = ValidationReport::new();
    let am = a.carrier().tensor(&module.carrier).expect("same category");
    let ma = module.carrier.tensor(a.carrier()).expect("same category");

    let lefts: Option<Vec<Matrix>> = module
        .left
        .as_ref()
        .map(|_| (0..d).map(|k| module.left_action(k).expect("left")).collect());
    let rights: Option<Vec<Matrix>> = module
        .right
        .as_ref()
        .map(|_| (0..d).map(|k| module.right_action(k).expect("right")).collect());

    if let (Some(l), Some(lm)) = (&lefts, &module.left) {
        let assoc = (0..d).all(|x| {
            (0..d).all(|y| &l[x] * &l[y] == combine(&a.mult().column_vec(x * d + y), l, n))
        });
        rep.record("left action associative", assoc);
        rep.record("left action unital", combine(a.unit(), l, n) == id);
        rep.record("left action equivariant", is_morphism(&am, &module.carrier, lm));
    }
    if let (Some(r), Some(rm)) = (&rights, &module.right) {
        // (m x) y = m (x y)
        let assoc = (0..d).all(|x| {
            (0..d).all(|y| &r[y] * &r[x] == combine(&a.mult().column_vec(x * d + y), r, n))
        });
        rep.record("right action associative", assoc);
        rep.record("right action unital", combine(a.unit(), r, n) == id);
        rep.record("right action equivariant", is_morphism(&ma, &module.carrier, rm));
    }
    if let (Some(l), Some(r)) = (&lefts, &rights) {
        let compatible = (0..d).all(|x| (0..d).all(|y| &l[x] * &r[y] == &r[y] * &l[x]));
        rep.record("bimodule compatible", compatible);
    }
    rep
}

/// A module `I` with a map `phi : I -> A` intertwining the action(s) with `m`.
#[derive(Clone, Debug)]
pub struct WeakIdeal {
    module: ModuleObj,
    phi: Matrix,
    monic: bool,
}

impl WeakIdeal {
    pub fn new(module: ModuleObj, phi: Matrix) -> Result<WeakIdeal> {
        let shape = (module.algebra.dim(), module.carrier.dim());
        if phi.shape() != shape {
            return Err(Error::Shape(format!("phi must be {} x {}", shape.0, shape.1)));
        }
        let monic = phi.kernel_basis().cols() == 0;
        Ok(WeakIdeal { module, phi, monic })
    }

    /// The zero ideal `0 -> A`.
    pub fn zero(a: &AlgObj, side: Side) -> WeakIdeal {
        Self::from_subspace(a, &Matrix::zeros(a.dim(), 0), side).expect("zero is an ideal")
    }

    /// The ideal spanned by the columns of `basis` (independent, and closed
    /// under the `H`-action and multiplication on the given side(s)), with
    /// the inclusion as `phi`.
    pub fn from_subspace(a: &AlgObj, basis: &Matrix, side: Side) -> Result<WeakIdeal> {
        let d = a.dim();
        let k = basis.cols();
        let carrier = a.carrier().sub_object(basis)?;
        let coords = |f: &Matrix, what: &str| -> Result<Matrix> {
            basis
                .solve_matrix(&(f * basis))?
                .ok_or_else(|| Error::Invalid(format!("subspace is not closed under {what}")))
        };
        let mut left = None;
        let mut right = None;
        if side.has_left() {
            let mut l = Matrix::zeros(k, d * k);
            for x in 0..d {
                let c = coords(&a.left_mult(x), "left multiplication")?;
                for i in 0..k {
                    for j in 0..k {
                        l.set(i, x * k + j, c.get(i, j).clone());
                    }
                }
            }
            left = Some(l);
        }
        if side.has_right() {
            let mut r = Matrix::zeros(k, k * d);
            for y in 0..d {
                let c = coords(&a.right_mult(y), "right multiplication")?;
                for i in 0..k {
                    for j in 0..k {
                        r.set(i, j * d + y, c.get(i, j).clone());
                    }
                }
            }
            right = Some(r);
        }
        let module = ModuleObj::new(a.clone(), carrier, side, left, right)?;
        WeakIdeal::new(module, basis.clone())
    }

    pub fn module(&self) -> &ModuleObj {
        &self.module
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn side(&self) -> Side {
        self.module.side
    }

    /// Whether `phi` is injective.
    pub fn is_monic(&self) -> bool {
        self.monic
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_columns(&self.phi)
    }
}

/// `phi lambda = m (id (x) phi)` and/or `phi rho = m (phi (x) id)`, with the
/// module axioms and equivariance of `phi`.
pub fn check_weak_ideal(ideal: &WeakIdeal) -> ValidationReport {
    let module = &ideal.module;
    let a = &module.algebra;
    let d = a.dim();
    let mut rep = ValidationReport::new();
    rep.extend("module: ", check_module(module));
    rep.record(
        "phi equivariant",
        is_morphism(&module.carrier, a.carrier(), &ideal.phi),
    );
    if module.side.has_left() {
        let ok = (0..d).all(|x| {
            &ideal.phi * &module.left_action(x).expect("left") == &a.left_mult(x) * &ideal.phi
        });
        rep.record("left intertwining", ok);
    }
    if module.side.has_right() {
        let ok = (0..d).all(|y| {
            &ideal.phi * &module.right_action(y).expect("right") == &a.right_mult(y) * &ideal.phi
        });
        rep.record("right intertwining", ok);
    }
    rep
}

/// Smallest subspace containing the columns of `gens` that is `H`-stable
/// and closed under multiplication on the given side(s).
pub fn ideal_generated(a: &AlgObj, gens: &Matrix, side: Side) -> Subspace {
    let d = a.dim();
    let mut maps: Vec<Matrix> = a.carrier().blocks().to_vec();
    if side.has_left() {
        maps.extend((0..d).map(|x| a.left_mult(x)));
    }
    if side.has_right() {
        maps.extend((0..d).map(|y| a.right_mult(y)));
    }
    let mut cur = Subspace::from_columns(gens);
    loop {
        let mut next = cur.clone();
        for f in &maps {
            next = next.sum(&cur.image(f));
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `A / I` on the coordinates that are not pivots of the echelonized image
/// of `phi`, together with the projection `pi`.
pub fn quotient_algebra(a: &AlgObj, ideal: &WeakIdeal) -> Result<(AlgObj, Mor)> {
    if ideal.side() != Side::Bi {
        return Err(Error::Unsupported(
            "quotients need a two-sided weak ideal".into(),
        ));
    }
    if ideal.module.algebra != *a {
        return Err(Error::Invalid("weak ideal belongs to a different algebra".into()));
    }
    let rep = check_weak_ideal(ideal);
    if !rep.passed() {
        return Err(Error::Precondition(format!(
            "not a weak ideal: {}",
            rep.failures().join(", ")
        )));
    }
    let image = ideal.image();
    let (pi, section) = complement_projection(&image);
    let d = a.dim();
    let k = section.cols();
    let blocks = a
        .carrier()
        .blocks()
        .iter()
        .map(|b| &(&pi * b) * &section)
        .collect();
    let carrier = Obj::from_blocks(a.carrier().hopf().clone(), blocks)?;
    let free: Vec<usize> = (0..d).filter(|j| !image.pivots().contains(j)).collect();
    let mut m = Matrix::zeros(k, k * k);
    for (x, &fx) in free.iter().enumerate() {
        for (y, &fy) in free.iter().enumerate() {
            let col = pi.apply(&a.mult().column_vec(fx * d + fy));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, x * k + y, v);
            }
        }
    }
    let u = pi.apply(a.unit());
    let quotient = AlgObj::new(carrier.clone(), m, u)?;
    let proj = Mor::new(a.carrier().clone(), carrier, pi)?;
    Ok((quotient, proj))
}

/// Projection `Q^d -> Q^d / S` onto the non-pivot coordinates of `S`, and
/// the section picking those coordinates.
pub fn complement_projection(s: &Subspace) -> (Matrix, Matrix) {
    let d = s.ambient();
    let free: Vec<usize> = (0..d).filter(|j| !s.pivots().contains(j)).collect();
    let mut pi = Matrix::zeros(free.len(), d);
    for j in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[j] = num_traits::One::one();
        let r = s.reduce(&e);
        for (i, &f) in free.iter().enumerate() {
            pi.set(i, j, r[f].clone());
        }
    }
    let section = Matrix::identity(d).select_cols(&free);
    (pi, section)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::alg::{check_algebra, is_algebra_map};
    use crate::exactla::q;
    use crate::repcat::{group_algebra, Group};

    fn truncated(n: usize) -> AlgObj {
        let carrier = Obj::trivial(&group_algebra(&Group::trivial()), n);
        let m = Matrix::from_fn(n, n * n, |k, c| if c / n + c % n == k { q(1) } else { q(0) });
        let mut u = vec![q(0); n];
        u[0] = q(1);
        AlgObj::new(carrier, m, u).unwrap()
    }

    fn mat2() -> AlgObj {
        let carrier = Obj::trivial(&group_algebra(&Group::trivial()), 4);
        let m = Matrix::from_fn(4, 16, |k, c| {
            let (x, y) = (c / 4, c % 4);
            if x % 2 == y / 2 && k == (x / 2) * 2 + y % 2 {
                q(1)
            } else {
                q(0)
            }
        });
        AlgObj::new(carrier, m, vec![q(1), q(0), q(0), q(1)]).unwrap()
    }

    #[test]
    fn zero_ideal_is_monic() {
        let a = truncated(2);
        let z = WeakIdeal::zero(&a, Side::Bi);
        assert!(check_weak_ideal(&z).passed());
        assert!(z.is_monic());
    }

    #[test]
    fn span_x_in_dual_numbers() {
        let a = truncated(2);
        let i = WeakIdeal::from_subspace(&a, &Matrix::from_ints(&[&[0], &[1]]), Side::Bi).unwrap();
        let rep = check_weak_ideal(&i);
        assert!(rep.passed(), "{:?}", rep.failures());
        assert!(i.is_monic());
        // the 1-dim action: x acts by zero, 1 by identity
        assert_eq!(i.module().left_action(1).unwrap(), Matrix::from_ints(&[&[0]]));
        assert_eq!(i.module().left_action(0).unwrap(), Matrix::from_ints(&[&[1]]));
    }

    #[test]
    fn multiplication_maps_as_one_sided_ideals() {
        let a = mat2();
        let e11 = a.basis_vector(0);
        let regular = ModuleObj::regular(&a, Side::Bi);
        // phi = R_a : x -> x E11 commutes with left multiplication only
        let r = WeakIdeal::new(regular.clone(), a.right_mult_by(&e11)).unwrap();
        let rep = check_weak_ideal(&r);
        assert_eq!(rep.get("left intertwining"), Some(true));
        assert_eq!(rep.get("right intertwining"), Some(false));
        // phi = L_a : x -> E11 x is the mirror image
        let l = WeakIdeal::new(regular, a.left_mult_by(&e11)).unwrap();
        let rep = check_weak_ideal(&l);
        assert_eq!(rep.get("left intertwining"), Some(false));
        assert_eq!(rep.get("right intertwining"), Some(true));
        assert!(!l.is_monic());
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let a = truncated(3);
        let (qa, pi) = quotient_algebra(&a, &WeakIdeal::zero(&a, Side::Bi)).unwrap();
        assert_eq!(pi.matrix(), &Matrix::identity(3));
        assert_eq!(qa, a);
    }

    #[test]
    fn truncation_quotient() {
        let a = truncated(3);
        let gens = Matrix::from_ints(&[&[0], &[0], &[1]]);
        let s = ideal_generated(&a, &gens, Side::Bi);
        assert_eq!(s.dim(), 1);
        let i = WeakIdeal::from_subspace(&a, &s.basis(), Side::Bi).unwrap();
        let (qa, pi) = quotient_algebra(&a, &i).unwrap();
        assert!(check_algebra(&qa).passed());
        let expected = truncated(2);
        assert_eq!(qa.mult(), expected.mult());
        assert_eq!(qa.unit(), expected.unit());
        // pi m = mbar (pi (x) pi)
        let lhs = pi.matrix() * a.mult();
        let rhs = qa.mult() * &pi.matrix().kron(pi.matrix());
        assert_eq!(lhs, rhs);
        assert!(is_algebra_map(&a, &qa, pi.matrix()));
    }

    #[test]
    fn full_ideal_gives_zero_algebra() {
        let a = mat2();
        let i = WeakIdeal::new(ModuleObj::regular(&a, Side::Bi), Matrix::identity(4)).unwrap();
        let (qa, _) = quotient_algebra(&a, &i).unwrap();
        assert_eq!(qa.dim(), 0);
        assert!(check_algebra(&qa).passed());
    }

    #[test]
    fn one_sided_quotient_unsupported() {
        let a = mat2();
        let i = WeakIdeal::from_subspace(&a, &Matrix::from_ints(&[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]), Side::Left)
            .unwrap();
        assert!(check_weak_ideal(&i).passed());
        assert!(matches!(quotient_algebra(&a, &i), Err(Error::Unsupported(_))));
    }
}
