//! Finite monic filtrations of objects and algebras.

use num_traits::Zero;

use crate::algebra::{check_algebra, AlgObj};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::repcat::{Mor, Obj};
use crate::report::ValidationReport;

/// A chain `S_0 ⊆ S_1 ⊆ ... ⊆ S_n = X` of subspaces. Steps beyond `n`
/// are `X`; steps below zero are `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredObj {
    ambient: Obj,
    steps: Vec<Subspace>,
}

impl FilteredObj {
    /// Steps given by column bases. Nesting and `S_n = X` are enforced;
    /// `H`-stability is reported by the checks.
    pub fn new(ambient: Obj, steps: &[Matrix]) -> Result<FilteredObj> {
        let subs: Vec<Subspace> = steps
            .iter()
            .map(|s| {
                if s.rows() != ambient.dim() {
                    Err(Error::Shape(format!(
                        "filtration step has {} rows, ambient has dimension {}",
                        s.rows(),
                        ambient.dim()
                    )))
                } else {
                    Ok(Subspace::from_columns(s))
                }
            })
            .collect::<Result<_>>()?;
        Self::from_subspaces(ambient, subs)
    }

    pub fn from_subspaces(ambient: Obj, steps: Vec<Subspace>) -> Result<FilteredObj> {
        let last = steps
            .last()
            .ok_or_else(|| Error::Invalid("a filtration needs at least one step".into()))?;
        if steps.iter().any(|s| s.ambient() != ambient.dim()) {
            return Err(Error::Shape("filtration step in the wrong ambient space".into()));
        }
        for (i, w) in steps.windows(2).enumerate() {
            if !w[0].is_subspace_of(&w[1]) {
                return Err(Error::Invalid(format!(
                    "filtration steps {i} and {} are not nested",
                    i + 1
                )));
            }
        }
        if last.dim() != ambient.dim() {
            return Err(Error::Invalid("the top filtration step must be the whole object".into()));
        }
        Ok(FilteredObj { ambient, steps })
    }

    /// The one-step filtration `S_0 = X`.
    pub fn trivial(ambient: &Obj) -> FilteredObj {
        FilteredObj {
            steps: vec![Subspace::full(ambient.dim())],
            ambient: ambient.clone(),
        }
    }

    /// `S_i` spanned by the basis vectors of degree at most `i`.
    pub fn by_degree(ambient: &Obj, degrees: &[usize]) -> Result<FilteredObj> {
        if degrees.len() != ambient.dim() {
            return Err(Error::Shape("one degree per basis vector required".into()));
        }
        let n = degrees.iter().copied().max().unwrap_or(0);
        let steps = (0..=n)
            .map(|i| {
                let cols: Vec<usize> = (0..degrees.len()).filter(|&j| degrees[j] <= i).collect();
                Subspace::from_columns(&Matrix::identity(ambient.dim()).select_cols(&cols))
            })
            .collect();
        Self::from_subspaces(ambient.clone(), steps)
    }

    pub fn ambient(&self) -> &Obj {
        &self.ambient
    }

    pub fn top_index(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    /// `S_i`, clamped: `0` for negative `i`, `X` beyond the top.
    pub fn step(&self, i: isize) -> Subspace {
        if i < 0 {
            Subspace::zero(self.ambient.dim())
        } else {
            self.steps[(i as usize).min(self.top_index())].clone()
        }
    }

    pub fn step_basis(&self, i: usize) -> Matrix {
        self.step(i as isize).basis()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    /// `S'_i = S_{i-k}`.
    pub fn shifted(&self, k: usize) -> FilteredObj {
        let mut steps = vec![Subspace::zero(self.ambient.dim()); k];
        steps.extend(self.steps.iter().cloned());
        FilteredObj {
            ambient: self.ambient.clone(),
            steps,
        }
    }

    pub fn steps_stable(&self) -> bool {
        self.steps.iter().all(|s| self.ambient.is_stable(s))
    }
}

/// Whether `f : X -> Y` maps `S_i^X` into `S_i^Y` for every `i`.
pub fn is_filtered_map(x: &FilteredObj, y: &FilteredObj, f: &Matrix) -> bool {
    let n = x.top_index().max(y.top_index());
    (0..=n as isize).all(|i| y.step(i).contains_columns(&(f * &x.step(i).basis())))
}

/// `F_I(i) = f^{-1}(S_i)` for `f : I -> A`.
pub fn induced_filtration(f: &Mor, fa: &FilteredObj) -> Result<FilteredObj> {
    if f.codomain() != fa.ambient() {
        return Err(Error::Invalid("morphism codomain differs from the filtered object".into()));
    }
    let steps = fa.steps().iter().map(|s| s.preimage(f.matrix())).collect();
    FilteredObj::from_subspaces(f.domain().clone(), steps)
}

/// `(X (x) Y)_k = sum_{i+j<=k} S_i^X (x) S_j^Y`.
pub fn tensor_filtered(x: &FilteredObj, y: &FilteredObj) -> Result<FilteredObj> {
    let ambient = x.ambient.tensor(&y.ambient)?;
    let n = x.top_index() + y.top_index();
    let steps = (0..=n)
        .map(|k| {
            let mut s = Subspace::zero(ambient.dim());
            for i in 0..=k.min(x.top_index()) {
                let j = k - i;
                let prod = x.step_basis(i).kron(&y.step_basis(j));
                s = s.sum(&Subspace::from_columns(&prod));
            }
            s
        })
        .collect();
    FilteredObj::from_subspaces(ambient, steps)
}

/// An algebra with a multiplicative filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredAlg {
    filtered: FilteredObj,
    algebra: AlgObj,
}

impl FilteredAlg {
    pub fn new(algebra: AlgObj, filtered: FilteredObj) -> Result<FilteredAlg> {
        if filtered.ambient() != algebra.carrier() {
            return Err(Error::Invalid("filtration lives on a different object".into()));
        }
        Ok(FilteredAlg { filtered, algebra })
    }

    pub fn filtered(&self) -> &FilteredObj {
        &self.filtered
    }

    pub fn algebra(&self) -> &AlgObj {
        &self.algebra
    }

    pub fn top_index(&self) -> usize {
        self.filtered.top_index()
    }
}

/// Nesting, stability, `u ∈ S_0`, and `m(S_i (x) S_j) ⊆ S_{i+j}`, plus the
/// algebra axioms (prefixed `algebra: `).
pub fn check_filtered_algebra(a: &FilteredAlg) -> ValidationReport {
    let f = &a.filtered;
    let alg = &a.algebra;
    let mut rep = ValidationReport::new();
    rep.extend("algebra: ", check_algebra(alg));
    let nested = f.steps().windows(2).all(|w| w[0].is_subspace_of(&w[1]));
    rep.record("steps nested", nested);
    rep.record("steps H-stable", f.steps_stable());
    rep.record("unit in S_0", f.step(0).contains(alg.unit()));
    let n = f.top_index();
    let mut mult_ok = true;
    'outer: for i in 0..=n {
        let bi = f.step_basis(i);
        for j in 0..=(n - i) {
            let bj = f.step_basis(j);
            let target = f.step((i + j) as isize);
            for x in 0..bi.cols() {
                let xv = bi.column_vec(x);
                for y in 0..bj.cols() {
                    if !target.contains(&alg.product(&xv, &bj.column_vec(y))) {
                        mult_ok = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.record("m(S_i x S_j) in S_(i+j)", mult_ok);
    rep
}

/// The first failed connectedness clause, if any.
pub fn connectedness_failure(a: &FilteredAlg) -> Option<String> {
    let s0 = a.filtered.step(0);
    if s0.dim() != 1 {
        return Some(format!("F(0) has dimension {}, not 1", s0.dim()));
    }
    let u = a.algebra.unit();
    if u.iter().all(Zero::is_zero) || !s0.contains(u) {
        return Some("F(0) is not the image of the unit".into());
    }
    let carrier = a.algebra.carrier();
    let trivial = carrier
        .blocks()
        .iter()
        .zip(carrier.hopf().counit())
        .all(|(b, e)| b.apply(u) == u.iter().map(|x| x * e).collect::<Vec<_>>());
    if !trivial {
        return Some("F(0) does not carry the trivial action".into());
    }
    None
}

/// `F(0) = 1`: one-dimensional, spanned by the unit, trivial action.
pub fn is_connected(a: &FilteredAlg) -> bool {
    connectedness_failure(a).is_none()
}
