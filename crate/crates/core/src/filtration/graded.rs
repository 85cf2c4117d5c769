//! Graded algebras and the associated graded functor.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::filtered::{check_filtered_algebra, is_filtered_map, tensor_filtered, FilteredAlg, FilteredObj};
use crate::algebra::{check_algebra, is_algebra_map, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::repcat::Obj;
use crate::report::ValidationReport;

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    off.push(0);
    for d in dims {
        acc += d;
        off.push(acc);
    }
    off
}

/// Degreewise pieces `F̄(i) = S_i / S_{i-1}` of a filtered object.
///
/// `pi[i]` (`dim B_i x dim X`) is the quotient map, meaningful on `S_i`;
/// `sigma[i]` (`dim X x dim B_i`) lifts to representatives in `S_i`.
#[derive(Clone, Debug)]
pub struct GrPieces {
    pub components: Vec<Obj>,
    pub pi: Vec<Matrix>,
    pub sigma: Vec<Matrix>,
}

impl GrPieces {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Obj::dim).collect()
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.dims())
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// The direct sum of the components.
    pub fn total(&self) -> Obj {
        Obj::direct_sum(&self.components).expect("components share a category")
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        let off = self.offsets();
        (0..self.components.len())
            .find(|&i| idx < off[i + 1])
            .expect("index within the total dimension")
    }

    /// `[sigma_0 | sigma_1 | ...]`: a linear isomorphism `gr X -> X`.
    pub fn lift(&self) -> Matrix {
        self.sigma
            .iter()
            .fold(Matrix::zeros(self.sigma[0].rows(), 0), |acc, s| {
                acc.hstack(s).expect("same row count")
            })
    }
}

/// Complements spanned by the echelon rows of `S_i` whose pivots are new
/// relative to `S_{i-1}`.
pub fn gr_obj(x: &FilteredObj) -> Result<GrPieces> {
    if !x.steps_stable() {
        return Err(Error::Invalid("filtration steps must be H-stable".into()));
    }
    let d = x.ambient().dim();
    let mut components = Vec::new();
    let mut pi = Vec::new();
    let mut sigma = Vec::new();
    for i in 0..=x.top_index() {
        let cur = x.step(i as isize);
        let prev = x.step(i as isize - 1);
        let new: Vec<usize> = cur
            .pivots()
            .iter()
            .copied()
            .filter(|p| !prev.pivots().contains(p))
            .collect();
        let reps: Vec<Vec<Rational>> = new
            .iter()
            .map(|&p| cur.vector_with_pivot(p).expect("pivot of the step"))
            .collect();
        let s = Matrix::from_fn(d, new.len(), |r, c| reps[c][r].clone());
        let mut p = Matrix::zeros(new.len(), d);
        for j in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[j] = Rational::one();
            let red = prev.reduce(&e);
            for (r, &np) in new.iter().enumerate() {
                p.set(r, j, red[np].clone());
            }
        }
        let blocks = x
            .ambient()
            .blocks()
            .iter()
            .map(|b| &(&p * b) * &s)
            .collect();
        components.push(Obj::from_blocks(x.ambient().hopf().clone(), blocks)?);
        pi.push(p);
        sigma.push(s);
    }
    Ok(GrPieces {
        components,
        pi,
        sigma,
    })
}

/// A graded algebra stored as its total algebra on the concatenated
/// component bases, together with the component dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlg {
    dims: Vec<usize>,
    algebra: AlgObj,
}

impl GradedAlg {
    /// Checks that action, unit and multiplication are homogeneous.
    pub fn new(algebra: AlgObj, dims: Vec<usize>) -> Result<GradedAlg> {
        if dims.iter().sum::<usize>() != algebra.dim() || dims.is_empty() {
            return Err(Error::Shape("component dimensions must sum to the algebra dimension".into()));
        }
        let g = GradedAlg { dims, algebra };
        let rep = g.homogeneity();
        if !rep.passed() {
            return Err(Error::Invalid(format!(
                "not a graded algebra: {}",
                rep.failures().join(", ")
            )));
        }
        Ok(g)
    }

    /// Everything in degree zero.
    pub fn concentrated(algebra: AlgObj) -> GradedAlg {
        let d = algebra.dim();
        GradedAlg {
            dims: vec![d],
            algebra,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.dims)
    }

    pub fn to_algebra(&self) -> &AlgObj {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Largest degree with a nonzero component.
    pub fn top_degree(&self) -> usize {
        self.dims.iter().rposition(|&d| d > 0).unwrap_or(0)
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        let off = self.offsets();
        (0..self.dims.len())
            .find(|&i| idx < off[i + 1])
            .expect("index within the total dimension")
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.dim()).map(|i| self.degree_of(i)).collect()
    }

    pub fn component(&self, i: usize) -> Obj {
        let off = self.offsets();
        let cols: Vec<usize> = (off[i]..off[i + 1]).collect();
        self.algebra
            .carrier()
            .sub_object(&Matrix::identity(self.dim()).select_cols(&cols))
            .expect("components are stable")
    }

    /// `m_{i,j} : B_i (x) B_j -> B_{i+j}` (zero map when `i + j` exceeds the top).
    pub fn mult_block(&self, i: usize, j: usize) -> Matrix {
        let off = self.offsets();
        let d = self.dim();
        let (di, dj) = (self.dims[i], self.dims[j]);
        let dk = self.dims.get(i + j).copied().unwrap_or(0);
        Matrix::from_fn(dk, di * dj, |r, c| {
            let (a, b) = (off[i] + c / dj, off[j] + c % dj);
            self.algebra.mult().get(off[i + j] + r, a * d + b).clone()
        })
    }

    fn homogeneity(&self) -> ValidationReport {
        let d = self.dim();
        let degs = self.degrees();
        let mut rep = ValidationReport::new();
        let action_ok = self.algebra.carrier().blocks().iter().all(|b| {
            (0..d).all(|r| (0..d).all(|c| degs[r] == degs[c] || b.get(r, c).is_zero()))
        });
        rep.record("action homogeneous", action_ok);
        let unit_ok = (0..d).all(|r| degs[r] == 0 || self.algebra.unit()[r].is_zero());
        rep.record("unit in degree 0", unit_ok);
        let m = self.algebra.mult();
        let mult_ok = (0..d).all(|a| {
            (0..d).all(|b| (0..d).all(|r| degs[r] == degs[a] + degs[b] || m.get(r, a * d + b).is_zero()))
        });
        rep.record("m homogeneous", mult_ok);
        rep
    }
}

/// Algebra axioms plus homogeneity.
pub fn check_graded_algebra(b: &GradedAlg) -> ValidationReport {
    let mut rep = check_algebra(&b.algebra);
    for c in b.homogeneity().checks {
        rep.record(c.name, c.passed);
    }
    rep
}

/// `f` is a degree-preserving invertible algebra map `B -> C`.
pub fn is_graded_iso(b: &GradedAlg, c: &GradedAlg, f: &Matrix) -> bool {
    if b.dims != c.dims || !is_algebra_map(&b.algebra, &c.algebra, f) || f.inverse().is_none() {
        return false;
    }
    let (db, dc) = (b.degrees(), c.degrees());
    (0..f.rows()).all(|r| (0..f.cols()).all(|k| dc[r] == db[k] || f.get(r, k).is_zero()))
}

/// `gr(A)` with multiplication `Theta_{i,j}(a (x) b) = pi_{i+j}(sigma_i(a) sigma_j(b))`.
#[derive(Clone, Debug)]
pub struct GrResult {
    pub graded: GradedAlg,
    pub pieces: GrPieces,
}

pub fn gr(a: &FilteredAlg) -> Result<GrResult> {
    let rep = check_filtered_algebra(a);
    if !rep.passed() {
        return Err(Error::Invalid(format!(
            "invalid filtered algebra: {}",
            rep.failures().join(", ")
        )));
    }
    let pieces = gr_obj(a.filtered())?;
    let alg = a.algebra();
    let dims = pieces.dims();
    let off = pieces.offsets();
    let total = pieces.total_dim();
    let n = dims.len() - 1;
    let mut m = Matrix::zeros(total, total * total);
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = i + j;
            for x in 0..dims[i] {
                let sx = pieces.sigma[i].column_vec(x);
                for y in 0..dims[j] {
                    let prod = alg.product(&sx, &pieces.sigma[j].column_vec(y));
                    let img = pieces.pi[k].apply(&prod);
                    let col = (off[i] + x) * total + off[j] + y;
                    for (r, v) in img.into_iter().enumerate() {
                        if !v.is_zero() {
                            m.set(off[k] + r, col, v);
                        }
                    }
                }
            }
        }
    }
    let mut u = vec![Rational::zero(); total];
    for (r, v) in pieces.pi[0].apply(alg.unit()).into_iter().enumerate() {
        u[r] = v;
    }
    let algebra = AlgObj::new(pieces.total(), m, u)?;
    let graded = GradedAlg::new(algebra, dims)?;
    Ok(GrResult { graded, pieces })
}

/// Recomputes every `Theta_{i,j}` on representatives shifted by random
/// elements of `S_{i-1}` and `S_{j-1}` and compares.
pub fn gr_well_defined(a: &FilteredAlg, seed: u64) -> Result<bool> {
    let res = gr(a)?;
    let p = &res.pieces;
    let f = a.filtered();
    let alg = a.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_in = |s: &Subspace| -> Vec<Rational> {
        let basis = s.basis();
        let coeffs: Vec<Rational> = (0..basis.cols())
            .map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into()))
            .collect();
        basis.apply(&coeffs)
    };
    let n = f.top_index();
    let dims = p.dims();
    for i in 0..=n {
        for j in 0..=(n - i) {
            for x in 0..dims[i] {
                for y in 0..dims[j] {
                    let sx = p.sigma[i].column_vec(x);
                    let sy = p.sigma[j].column_vec(y);
                    let shift_x = random_in(&f.step(i as isize - 1));
                    let shift_y = random_in(&f.step(j as isize - 1));
                    let ax: Vec<Rational> = sx.iter().zip(&shift_x).map(|(u, v)| u + v).collect();
                    let ay: Vec<Rational> = sy.iter().zip(&shift_y).map(|(u, v)| u + v).collect();
                    let k = i + j;
                    if p.pi[k].apply(&alg.product(&sx, &sy)) != p.pi[k].apply(&alg.product(&ax, &ay)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Degreewise maps `gr(f)_i = pi_i^Y f sigma_i^X` of a filtered map.
pub fn gr_mor(x: &FilteredObj, y: &FilteredObj, f: &Matrix) -> Result<Vec<Matrix>> {
    if f.shape() != (y.ambient().dim(), x.ambient().dim()) {
        return Err(Error::Shape("map does not fit the filtered objects".into()));
    }
    if !is_filtered_map(x, y, f) {
        return Err(Error::Precondition("map does not respect the filtrations".into()));
    }
    let (px, py) = (gr_obj(x)?, gr_obj(y)?);
    let n = x.top_index().max(y.top_index());
    Ok((0..=n)
        .map(|i| match (px.sigma.get(i), py.pi.get(i)) {
            (Some(s), Some(p)) => &(p * f) * s,
            (Some(s), None) => Matrix::zeros(0, s.cols()),
            (None, Some(p)) => Matrix::zeros(p.rows(), 0),
            (None, None) => Matrix::zeros(0, 0),
        })
        .collect())
}

/// `gr(f)` as one block-diagonal matrix between the total graded objects.
pub fn gr_mor_total(x: &FilteredObj, y: &FilteredObj, f: &Matrix) -> Result<Matrix> {
    Ok(Matrix::block_diagonal(&gr_mor(x, y, f)?))
}

/// `gr_2 : gr X (x) gr Y -> gr(X (x) Y)`, with
/// `Theta_{i,j}(a (x) b) = pi_{i+j}(sigma_i a (x) sigma_j b)`.
pub fn gr2(x: &FilteredObj, y: &FilteredObj) -> Result<Matrix> {
    let xy = tensor_filtered(x, y)?;
    let (px, py, pxy) = (gr_obj(x)?, gr_obj(y)?, gr_obj(&xy)?);
    let (dx, dy) = (px.total_dim(), py.total_dim());
    let (ox, oy, oxy) = (px.offsets(), py.offsets(), pxy.offsets());
    let mut theta = Matrix::zeros(pxy.total_dim(), dx * dy);
    for (i, sx) in px.sigma.iter().enumerate() {
        for (j, sy) in py.sigma.iter().enumerate() {
            let k = i + j;
            let img = &pxy.pi[k] * &sx.kron(sy);
            for a in 0..sx.cols() {
                for b in 0..sy.cols() {
                    let col = (ox[i] + a) * dy + oy[j] + b;
                    for r in 0..img.rows() {
                        theta.set(oxy[k] + r, col, img.get(r, a * sy.cols() + b).clone());
                    }
                }
            }
        }
    }
    Ok(theta)
}

/// The canonical filtration `S_j = B_0 ⊕ ... ⊕ B_j`.
pub fn trivial_filtration(b: &GradedAlg) -> FilteredAlg {
    let off = b.offsets();
    let steps = (0..b.dims.len())
        .map(|j| Subspace::coordinate_prefix(b.dim(), off[j + 1]))
        .collect();
    let f = FilteredObj::from_subspaces(b.algebra.carrier().clone(), steps)
        .expect("prefixes are nested and end with everything");
    FilteredAlg::new(b.algebra.clone(), f).expect("same carrier")
}
