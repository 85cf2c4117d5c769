//! Objects and morphisms of `Rep(H)`: finite-dimensional `H`-modules and
//! equivariant linear maps.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::hopf::HopfData;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::report::ValidationReport;

/// A left `H`-module. `rho(h)` is the matrix of the basis element `e_h`.
#[derive(Clone, Debug)]
pub struct Obj {
    hopf: Arc<HopfData>,
    dim: usize,
    blocks: Vec<Matrix>,
}

impl PartialEq for Obj {
    fn eq(&self, other: &Self) -> bool {
        self.same_hopf(&other.hopf) && self.blocks == other.blocks && self.dim == other.dim
    }
}

impl Eq for Obj {}

impl Obj {
    /// From the `dim x (n*dim)` action matrix of `H (x) X -> X`.
    pub fn new(hopf: Arc<HopfData>, action: &Matrix) -> Result<Obj> {
        let n = hopf.dim();
        let dim = action.rows();
        if action.cols() != n * dim {
            return Err(Error::Shape(format!(
                "action must be {dim} x {} for a {n}-dimensional Hopf algebra",
                n * dim
            )));
        }
        let blocks = (0..n)
            .map(|h| Matrix::from_fn(dim, dim, |i, j| action.get(i, h * dim + j).clone()))
            .collect();
        Self::from_blocks(hopf, blocks)
    }

    /// From one matrix per basis element of `H`; checks the module axioms.
    pub fn from_blocks(hopf: Arc<HopfData>, blocks: Vec<Matrix>) -> Result<Obj> {
        let obj = Self::from_blocks_unchecked(hopf, blocks)?;
        let rep = obj.validate();
        if !rep.passed() {
            return Err(Error::Invalid(format!(
                "not an H-module: {}",
                rep.failures().join(", ")
            )));
        }
        Ok(obj)
    }

    pub(crate) fn from_blocks_unchecked(hopf: Arc<HopfData>, blocks: Vec<Matrix>) -> Result<Obj> {
        if blocks.len() != hopf.dim() {
            return Err(Error::Shape("one action matrix per Hopf basis element".into()));
        }
        let dim = blocks.first().map_or(0, Matrix::rows);
        if blocks.iter().any(|b| b.shape() != (dim, dim)) {
            return Err(Error::Shape("action matrices must be square of one size".into()));
        }
        Ok(Obj { hopf, dim, blocks })
    }

    /// Associativity and unitality of the action.
    pub fn validate(&self) -> ValidationReport {
        let h = &self.hopf;
        let n = h.dim();
        let mut rep = ValidationReport::new();
        let combine = |coeffs: &[Rational]| self.rho_of(coeffs);
        rep.record("action unital", combine(h.unit()) == Matrix::identity(self.dim));
        let mut assoc = true;
        'outer: for a in 0..n {
            for b in 0..n {
                let lhs = &self.blocks[a] * &self.blocks[b];
                let rhs = combine(&h.mult().column_vec(a * n + b));
                if lhs != rhs {
                    assoc = false;
                    break 'outer;
                }
            }
        }
        rep.record("action associative", assoc);
        rep
    }

    /// The unit object `1`: `k` with `H` acting by the counit.
    pub fn unit(hopf: &Arc<HopfData>) -> Obj {
        Self::trivial(hopf, 1)
    }

    /// `k^dim` with `H` acting through the counit.
    pub fn trivial(hopf: &Arc<HopfData>, dim: usize) -> Obj {
        let blocks = hopf
            .counit()
            .iter()
            .map(|c| Matrix::identity(dim).scale(c))
            .collect();
        Obj {
            hopf: hopf.clone(),
            dim,
            blocks,
        }
    }

    pub fn zero(hopf: &Arc<HopfData>) -> Obj {
        Self::trivial(hopf, 0)
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, h: usize) -> &Matrix {
        &self.blocks[h]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// Action of an arbitrary element `sum_h c_h e_h`.
    pub fn rho_of(&self, coeffs: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, b) in coeffs.iter().zip(&self.blocks) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    /// The `dim x (n*dim)` matrix of `H (x) X -> X`.
    pub fn action(&self) -> Matrix {
        let n = self.hopf.dim();
        let d = self.dim;
        Matrix::from_fn(d, n * d, |i, c| self.blocks[c / d].get(i, c % d).clone())
    }

    pub fn same_hopf(&self, h: &Arc<HopfData>) -> bool {
        Arc::ptr_eq(&self.hopf, h) || *self.hopf == **h
    }

    pub fn check_same_category(&self, other: &Obj) -> Result<()> {
        if self.same_hopf(&other.hopf) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }

    /// Whether `H` acts through the counit.
    pub fn is_trivial_action(&self) -> bool {
        let id = Matrix::identity(self.dim);
        self.blocks
            .iter()
            .zip(self.hopf.counit())
            .all(|(b, c)| *b == id.scale(c))
    }

    /// `X (x) Y` with `H` acting through the comultiplication.
    pub fn tensor(&self, other: &Obj) -> Result<Obj> {
        self.check_same_category(other)?;
        let h = &self.hopf;
        let n = h.dim();
        let d = self.dim * other.dim;
        let mut blocks = vec![Matrix::zeros(d, d); n];
        for (c, block) in blocks.iter_mut().enumerate() {
            let delta = h.comult().column_vec(c);
            for (ab, coeff) in delta.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let term = self.blocks[ab / n].kron(&other.blocks[ab % n]);
                *block = &*block + &term.scale(coeff);
            }
        }
        Ok(Obj {
            hopf: h.clone(),
            dim: d,
            blocks,
        })
    }

    pub fn tensor_all(objs: &[&Obj]) -> Result<Obj> {
        let (first, rest) = objs
            .split_first()
            .ok_or_else(|| Error::Invalid("empty tensor product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, o| acc.tensor(o))
    }

    pub fn direct_sum(objs: &[Obj]) -> Result<Obj> {
        let first = objs
            .first()
            .ok_or_else(|| Error::Invalid("empty direct sum".into()))?;
        for o in objs {
            first.check_same_category(o)?;
        }
        let n = first.hopf.dim();
        let blocks = (0..n)
            .map(|h| {
                let parts: Vec<Matrix> = objs.iter().map(|o| o.blocks[h].clone()).collect();
                Matrix::block_diagonal(&parts)
            })
            .collect();
        Ok(Obj {
            hopf: first.hopf.clone(),
            dim: objs.iter().map(Obj::dim).sum(),
            blocks,
        })
    }

    /// The `H`-submodule spanned by the columns of `basis` (which must be
    /// independent and span an `H`-stable subspace), in those coordinates.
    pub fn sub_object(&self, basis: &Matrix) -> Result<Obj> {
        if basis.rows() != self.dim || basis.rank() != basis.cols() {
            return Err(Error::Invalid("sub-object basis must be independent columns".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let img = b * basis;
                basis
                    .solve_matrix(&img)?
                    .ok_or_else(|| Error::Invalid("subspace is not H-stable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Obj {
            hopf: self.hopf.clone(),
            dim: basis.cols(),
            blocks,
        })
    }

    /// Whether the subspace is an `H`-submodule.
    pub fn is_stable(&self, s: &Subspace) -> bool {
        self.blocks.iter().all(|b| s.is_stable_under(b))
    }

    /// Smallest `H`-stable subspace containing `s`.
    pub fn stable_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let mut next = cur.clone();
            for b in &self.blocks {
                next = next.sum(&cur.image(b));
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

/// An equivariant linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    domain: Obj,
    codomain: Obj,
    matrix: Matrix,
}

/// `f rho_X(h) = rho_Y(h) f` for every basis element `h`.
pub fn is_morphism(domain: &Obj, codomain: &Obj, f: &Matrix) -> bool {
    if domain.check_same_category(codomain).is_err() {
        return false;
    }
    if f.shape() != (codomain.dim, domain.dim) {
        return false;
    }
    domain
        .blocks
        .iter()
        .zip(&codomain.blocks)
        .all(|(rx, ry)| f * rx == ry * f)
}

impl Mor {
    pub fn new(domain: Obj, codomain: Obj, matrix: Matrix) -> Result<Mor> {
        domain.check_same_category(&codomain)?;
        if matrix.shape() != (codomain.dim, domain.dim) {
            return Err(Error::Shape(format!(
                "morphism matrix {:?} for {} -> {}",
                matrix.shape(),
                domain.dim,
                codomain.dim
            )));
        }
        if !is_morphism(&domain, &codomain, &matrix) {
            return Err(Error::Precondition("linear map is not H-equivariant".into()));
        }
        Ok(Mor {
            domain,
            codomain,
            matrix,
        })
    }

    pub(crate) fn new_unchecked(domain: Obj, codomain: Obj, matrix: Matrix) -> Mor {
        debug_assert_eq!(matrix.shape(), (codomain.dim, domain.dim));
        Mor {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(x: &Obj) -> Mor {
        Mor::new_unchecked(x.clone(), x.clone(), Matrix::identity(x.dim))
    }

    pub fn domain(&self) -> &Obj {
        &self.domain
    }

    pub fn codomain(&self) -> &Obj {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_equivariant(&self) -> bool {
        is_morphism(&self.domain, &self.codomain, &self.matrix)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Mor) -> Result<Mor> {
        if first.codomain != self.domain {
            return Err(Error::Shape("composition of non-composable morphisms".into()));
        }
        Ok(Mor::new_unchecked(
            first.domain.clone(),
            self.codomain.clone(),
            &self.matrix * &first.matrix,
        ))
    }

    pub fn tensor(&self, other: &Mor) -> Result<Mor> {
        Ok(Mor::new_unchecked(
            self.domain.tensor(&other.domain)?,
            self.codomain.tensor(&other.codomain)?,
            self.matrix.kron(&other.matrix),
        ))
    }
}

/// Permutation matrix of `x (x) y -> y (x) x`.
pub fn flip_matrix(dx: usize, dy: usize) -> Matrix {
    let perm: Vec<usize> = (0..dx * dy).map(|i| (i % dy) * dx + i / dy).collect();
    Matrix::permutation(&perm)
}

/// `c_{X,Y} = flip . (R acting on X (x) Y)`.
pub fn braiding(x: &Obj, y: &Obj) -> Result<Mor> {
    let xy = x.tensor(y)?;
    let yx = y.tensor(x)?;
    let mut r_action = Matrix::zeros(xy.dim, xy.dim);
    for (a, b, r) in x.hopf.r_terms() {
        r_action = &r_action + &x.blocks[a].kron(&y.blocks[b]).scale(&r);
    }
    let m = &flip_matrix(x.dim, y.dim) * &r_action;
    Ok(Mor::new_unchecked(xy, yx, m))
}

/// Left and right duals with their evaluation and coevaluation maps.
#[derive(Clone, Debug)]
pub struct DualData {
    /// `X*`, acted on through the antipode.
    pub left: Obj,
    /// `ev_X : X* (x) X -> 1`
    pub ev: Mor,
    /// `coev_X : 1 -> X (x) X*`
    pub coev: Mor,
    /// `*X`, acted on through the inverse antipode.
    pub right: Obj,
    /// `ev'_X : X (x) *X -> 1`
    pub ev_prime: Mor,
    /// `coev'_X : 1 -> *X (x) X`
    pub coev_prime: Mor,
}

fn dual_action(x: &Obj, s: &Matrix) -> Obj {
    let n = x.hopf.dim();
    let blocks = (0..n)
        .map(|h| x.rho_of(&s.column_vec(h)).transpose())
        .collect();
    Obj {
        hopf: x.hopf.clone(),
        dim: x.dim,
        blocks,
    }
}

/// Pairing vector `sum_i e_i (x) e_i` in a `d^2`-dimensional space.
fn diagonal_pairing(d: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d * d];
    for i in 0..d {
        v[i * d + i] = Rational::one();
    }
    v
}

pub fn dual_obj(x: &Obj) -> Result<DualData> {
    let s = x.hopf.antipode();
    let s_inv = x
        .hopf
        .antipode_inverse()
        .ok_or_else(|| Error::Invalid("antipode is not invertible".into()))?;
    let left = dual_action(x, s);
    let right = dual_action(x, &s_inv);
    let one = Obj::unit(&x.hopf);
    let d = x.dim;
    let pair = diagonal_pairing(d);
    let ev = Mor::new(left.tensor(x)?, one.clone(), Matrix::row_vector(pair.clone()))?;
    let coev = Mor::new(one.clone(), x.tensor(&left)?, Matrix::column(pair.clone()))?;
    let ev_prime = Mor::new(x.tensor(&right)?, one.clone(), Matrix::row_vector(pair.clone()))?;
    let coev_prime = Mor::new(one, right.tensor(x)?, Matrix::column(pair))?;
    Ok(DualData {
        left,
        ev,
        coev,
        right,
        ev_prime,
        coev_prime,
    })
}

/// The four snake identities of a rigid object.
pub fn snake_identities(x: &Obj, duals: &DualData) -> ValidationReport {
    let d = x.dim;
    let id = Matrix::identity(d);
    let mut rep = ValidationReport::new();
    let ev = duals.ev.matrix();
    let coev = duals.coev.matrix();
    let evp = duals.ev_prime.matrix();
    let coevp = duals.coev_prime.matrix();
    rep.record(
        "(id x ev)(coev x id) = id_X",
        &id.kron(ev) * &coev.kron(&id) == id,
    );
    rep.record(
        "(ev x id)(id x coev) = id_X*",
        &ev.kron(&id) * &id.kron(coev) == id,
    );
    rep.record(
        "(ev' x id)(id x coev') = id_X",
        &evp.kron(&id) * &id.kron(coevp) == id,
    );
    rep.record(
        "(id x ev')(coev' x id) = id_*X",
        &id.kron(evp) * &coevp.kron(&id) == id,
    );
    rep
}

/// Rows form a basis of `Hom_C(X, 1)`: functionals with `nu(h.x) = eps(h) nu(x)`.
pub fn hom_invariants(x: &Obj) -> Matrix {
    let d = x.dim;
    let id = Matrix::identity(d);
    let eqs: Vec<Matrix> = x
        .blocks
        .iter()
        .zip(x.hopf.counit())
        .map(|(b, c)| &b.transpose() - &id.scale(c))
        .collect();
    let system = Matrix::vstack_all(&eqs, d).expect("uniform widths");
    system.kernel_basis().transpose()
}

/// A basis of `Hom_C(X, Y)`.
pub fn hom_space(x: &Obj, y: &Obj) -> Result<Vec<Matrix>> {
    x.check_same_category(y)?;
    let (dx, dy) = (x.dim, y.dim);
    // unknown f (dy x dx), vectorized row-major: f_{ij} at i*dx + j
    let ix = Matrix::identity(dx);
    let iy = Matrix::identity(dy);
    let mut eqs = Vec::new();
    for (rx, ry) in x.blocks.iter().zip(&y.blocks) {
        // vec(f rx) = (I_y (x) rx^T) vec(f); vec(ry f) = (ry (x) I_x) vec(f)
        eqs.push(&iy.kron(&rx.transpose()) - &ry.kron(&ix));
    }
    let system = Matrix::vstack_all(&eqs, dx * dy)?;
    let k = system.kernel_basis();
    Ok((0..k.cols())
        .map(|c| Matrix::from_vec(dy, dx, k.column_vec(c)).expect("sized"))
        .collect())
}
