//! Finite-dimensional triangular Hopf algebras by structure constants.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{qf, Matrix, Rational};
use crate::report::ValidationReport;

/// Structure constants of a Hopf algebra `H` with an R-matrix.
///
/// Conventions, with basis `e_0..e_{n-1}`:
/// * `mult` is `n x n^2`; column `a*n + b` holds `e_a e_b`.
/// * `comult` is `n^2 x n`; column `a` holds `Delta(e_a)` in the lex basis of `H (x) H`.
/// * `antipode` is `n x n`; column `a` holds `S(e_a)`.
/// * `rmatrix` is a vector in `H (x) H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    dim: usize,
    mult: Matrix,
    unit: Vec<Rational>,
    comult: Matrix,
    counit: Vec<Rational>,
    antipode: Matrix,
    rmatrix: Vec<Rational>,
}

impl HopfData {
    pub fn new(
        mult: Matrix,
        unit: Vec<Rational>,
        comult: Matrix,
        counit: Vec<Rational>,
        antipode: Matrix,
        rmatrix: Vec<Rational>,
    ) -> Result<Self> {
        let n = unit.len();
        let shape_err = |what: &str| Err(Error::Shape(format!("Hopf data: {what}")));
        if n == 0 {
            return shape_err("dimension zero");
        }
        if mult.shape() != (n, n * n) {
            return shape_err("mult must be n x n^2");
        }
        if comult.shape() != (n * n, n) {
            return shape_err("comult must be n^2 x n");
        }
        if counit.len() != n {
            return shape_err("counit must have length n");
        }
        if antipode.shape() != (n, n) {
            return shape_err("antipode must be n x n");
        }
        if rmatrix.len() != n * n {
            return shape_err("rmatrix must have length n^2");
        }
        Ok(HopfData {
            dim: n,
            mult,
            unit,
            comult,
            counit,
            antipode,
            rmatrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn rmatrix(&self) -> &[Rational] {
        &self.rmatrix
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[a] = Rational::one();
        v
    }

    /// Nonzero terms `(a, b, r_ab)` of the R-matrix.
    pub fn r_terms(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.dim;
        self.rmatrix
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i / n, i % n, c.clone()))
            .collect()
    }

    /// Product in `H^{(x) k}`, factorwise.
    pub fn product_k(&self, x: &[Rational], y: &[Rational], k: usize) -> Vec<Rational> {
        let n = self.dim;
        let len = n.pow(k as u32);
        assert_eq!(x.len(), len);
        assert_eq!(y.len(), len);
        // sparse columns of the multiplication table
        let col = |a: usize, b: usize| -> Vec<(usize, Rational)> {
            (0..n)
                .filter_map(|c| {
                    let v = self.mult.get(c, a * n + b);
                    (!v.is_zero()).then(|| (c, v.clone()))
                })
                .collect()
        };
        let mut out = vec![Rational::zero(); len];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let mut acc: Vec<(usize, Rational)> = vec![(0, xi * yj)];
                for t in (0..k).rev() {
                    let p = n.pow(t as u32);
                    let c = col((i / p) % n, (j / p) % n);
                    let mut next = Vec::with_capacity(acc.len() * c.len());
                    for (idx, v) in &acc {
                        for (ci, cv) in &c {
                            next.push((idx * n + ci, v * cv));
                        }
                    }
                    acc = next;
                }
                for (idx, v) in acc {
                    out[idx] += v;
                }
            }
        }
        out
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.product_k(x, y, 1)
    }

    pub fn comultiply(&self, x: &[Rational]) -> Vec<Rational> {
        self.comult.apply(x)
    }

    pub fn counit_of(&self, x: &[Rational]) -> Rational {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    pub fn antipode_inverse(&self) -> Option<Matrix> {
        self.antipode.inverse()
    }

    /// Whether `e_a` is grouplike: `Delta(e_a) = e_a (x) e_a`.
    pub fn is_grouplike(&self, a: usize) -> bool {
        let n = self.dim;
        let d = self.comult.column_vec(a);
        d.iter().enumerate().all(|(i, v)| {
            if i == a * n + a {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    /// Whether every basis element is grouplike (a group algebra basis).
    pub fn is_group_basis(&self) -> bool {
        (0..self.dim).all(|a| self.is_grouplike(a))
    }

    fn flip2(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                out[b * n + a] = x[a * n + b].clone();
            }
        }
        out
    }

    /// Embeds `R` into `H^{(x)3}` with the identity in slot `skip`.
    fn r_leg(&self, skip: usize) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n * n];
        for (a, b, r) in self.r_terms() {
            for (c, uc) in self.unit.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let idx = match skip {
                    0 => (c * n + a) * n + b,
                    1 => (a * n + c) * n + b,
                    _ => (a * n + b) * n + c,
                };
                out[idx] += &r * uc;
            }
        }
        out
    }
}

/// Checks every Hopf and triangular-structure axiom by exact identity.
pub fn validate_hopf(h: &HopfData) -> ValidationReport {
    let n = h.dim();
    let id = Matrix::identity(n);
    let mut rep = ValidationReport::new();
    let m = h.mult();
    let d = h.comult();
    let unit_col = Matrix::column(h.unit().to_vec());
    let counit_row = Matrix::row_vector(h.counit().to_vec());

    rep.record(
        "mult associative",
        m * &m.kron(&id) == m * &id.kron(m),
    );
    rep.record("unit left", m * &unit_col.kron(&id) == id);
    rep.record("unit right", m * &id.kron(&unit_col) == id);
    rep.record(
        "comult coassociative",
        &d.kron(&id) * d == &id.kron(d) * d,
    );
    rep.record("counit left", &counit_row.kron(&id) * d == id);
    rep.record("counit right", &id.kron(&counit_row) * d == id);

    let mut multiplicative = true;
    let mut counit_mult = true;
    for a in 0..n {
        let da = d.column_vec(a);
        for b in 0..n {
            let db = d.column_vec(b);
            let ab = m.column_vec(a * n + b);
            if h.comultiply(&ab) != h.product_k(&da, &db, 2) {
                multiplicative = false;
            }
            if h.counit_of(&ab) != &h.counit()[a] * &h.counit()[b] {
                counit_mult = false;
            }
        }
    }
    rep.record("comult multiplicative", multiplicative);
    let mut one_one = vec![Rational::zero(); n * n];
    for (a, ua) in h.unit().iter().enumerate() {
        for (b, ub) in h.unit().iter().enumerate() {
            one_one[a * n + b] = ua * ub;
        }
    }
    rep.record("comult unital", h.comultiply(h.unit()) == one_one);
    rep.record("counit multiplicative", counit_mult);
    rep.record("counit unital", h.counit_of(h.unit()).is_one());

    let s = h.antipode();
    let uc = &unit_col * &counit_row;
    rep.record("antipode left", &(m * &s.kron(&id)) * d == uc);
    rep.record("antipode right", &(m * &id.kron(s)) * d == uc);
    rep.record("antipode invertible", h.antipode_inverse().is_some());

    let r = h.rmatrix().to_vec();
    let mut quasi_cocommutative = true;
    for a in 0..n {
        let da = d.column_vec(a);
        let lhs = h.product_k(&h.flip2(&da), &r, 2);
        let rhs = h.product_k(&r, &da, 2);
        if lhs != rhs {
            quasi_cocommutative = false;
            break;
        }
    }
    rep.record("R quasi-cocommutative", quasi_cocommutative);
    let r13 = h.r_leg(1);
    let r23 = h.r_leg(0);
    let r12 = h.r_leg(2);
    let delta_id = d.kron(&id).apply(&r);
    rep.record(
        "R (Delta x id)(R) = R13 R23",
        delta_id == h.product_k(&r13, &r23, 3),
    );
    let id_delta = id.kron(d).apply(&r);
    rep.record(
        "R (id x Delta)(R) = R13 R12",
        id_delta == h.product_k(&r13, &r12, 3),
    );
    rep.record("R triangular R21 R = 1 x 1", h.product_k(&h.flip2(&r), &r, 2) == one_one);
    rep
}

/// Super-group data `(G, u, W)` realized as the Hopf algebra `Lambda(W) # kG`.
///
/// Basis element `w_S g` (with `S` a set of generator indices given as a
/// bitmask) has index `mask * |G| + g`. Without `u` the R-matrix is `1 (x) 1`
/// and `W` must be zero.
#[derive(Clone, Debug)]
pub struct SuperGroup {
    group: super::Group,
    u: Option<usize>,
    /// Action of each group element on `W`; column `j` is `g . w_j`.
    w_action: Vec<Matrix>,
    w_dim: usize,
    hopf: Arc<HopfData>,
}

impl SuperGroup {
    /// The group algebra `kG` with trivial R-matrix.
    pub fn plain(group: &super::Group) -> Self {
        Self::build(group.clone(), None, vec![Matrix::zeros(0, 0); group.order()])
            .expect("plain group algebra is always valid")
    }

    /// `kG` with the R-matrix `R_u`.
    pub fn with_parity(group: &super::Group, u: usize) -> Result<Self> {
        Self::build(group.clone(), Some(u), vec![Matrix::zeros(0, 0); group.order()])
    }

    /// `Lambda(W) # kG` with `R_u`; `w_action[g]` is the matrix of `g` on `W`.
    pub fn new(group: super::Group, u: usize, w_action: Vec<Matrix>) -> Result<Self> {
        Self::build(group, Some(u), w_action)
    }

    fn build(group: super::Group, u: Option<usize>, w_action: Vec<Matrix>) -> Result<Self> {
        let g_ord = group.order();
        if w_action.len() != g_ord {
            return Err(Error::Invalid("one W-matrix per group element required".into()));
        }
        let w_dim = w_action[0].rows();
        if w_action.iter().any(|m| m.shape() != (w_dim, w_dim)) {
            return Err(Error::Shape("W action matrices must be square of one size".into()));
        }
        if w_dim > 16 {
            return Err(Error::Capacity {
                what: "dim W",
                size: w_dim,
                limit: 16,
            });
        }
        let e = group.identity();
        if w_action[e] != Matrix::identity(w_dim) {
            return Err(Error::Invalid("identity must act trivially on W".into()));
        }
        for a in 0..g_ord {
            for b in 0..g_ord {
                if &w_action[a] * &w_action[b] != w_action[group.mul(a, b)] {
                    return Err(Error::Invalid("W is not a representation of G".into()));
                }
            }
        }
        match u {
            Some(u) => {
                if u >= g_ord {
                    return Err(Error::Invalid("u is not a group element".into()));
                }
                if !group.is_central(u) {
                    return Err(Error::Invalid("u is not central".into()));
                }
                if group.mul(u, u) != e {
                    return Err(Error::Invalid("u^2 != 1".into()));
                }
                if w_action[u] != -&Matrix::identity(w_dim) {
                    return Err(Error::Invalid("u does not act by -1 on W".into()));
                }
            }
            None => {
                if w_dim > 0 {
                    return Err(Error::Invalid("odd generators require a parity element u".into()));
                }
            }
        }
        let hopf = Arc::new(smash_structure(&group, u, &w_action, w_dim));
        Ok(SuperGroup {
            group,
            u,
            w_action,
            w_dim,
            hopf,
        })
    }

    pub fn group(&self) -> &super::Group {
        &self.group
    }

    pub fn u(&self) -> Option<usize> {
        self.u
    }

    pub fn w_dim(&self) -> usize {
        self.w_dim
    }

    pub fn w_action(&self, g: usize) -> &Matrix {
        &self.w_action[g]
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn index(&self, mask: u32, g: usize) -> usize {
        mask as usize * self.group.order() + g
    }

    pub fn decode(&self, idx: usize) -> (u32, usize) {
        let n = self.group.order();
        ((idx / n) as u32, idx % n)
    }

    /// Restriction to the subgroup on `elements` (which must contain `u`
    /// when `W` is nonzero). Index `i` of the result is `elements[i]`.
    pub fn restrict(&self, elements: &[usize]) -> Result<SuperGroup> {
        let sub = self.group.subgroup(elements)?;
        let w: Vec<Matrix> = elements.iter().map(|&g| self.w_action[g].clone()).collect();
        let u = match self.u {
            Some(u) => match elements.iter().position(|&x| x == u) {
                Some(p) => Some(p),
                None if self.w_dim == 0 => None,
                None => return Err(Error::Invalid("subgroup must contain u".into())),
            },
            None => None,
        };
        Self::build(sub, u, w)
    }

    /// Same group and parity, without odd generators.
    pub fn even_part(&self) -> SuperGroup {
        let w = vec![Matrix::zeros(0, 0); self.group.order()];
        Self::build(self.group.clone(), self.u, w).expect("even part is valid")
    }
}

fn smash_structure(
    group: &super::Group,
    u: Option<usize>,
    w_action: &[Matrix],
    w_dim: usize,
) -> HopfData {
    use super::wedge::{wedge_apply, wedge_mul, WedgeElem};
    let g_ord = group.order();
    let masks = 1usize << w_dim;
    let n = masks * g_ord;
    let idx = |mask: u32, g: usize| mask as usize * g_ord + g;
    let e = group.identity();

    // (w_S g)(w_T h) = w_S (g . w_T) gh
    let mut mult = Matrix::zeros(n, n * n);
    for s in 0..masks as u32 {
        for g in 0..g_ord {
            for t in 0..masks as u32 {
                let moved: WedgeElem = wedge_apply(&w_action[g], t);
                let prod = wedge_mul(&super::wedge::monomial(s), &moved);
                for h in 0..g_ord {
                    let gh = group.mul(g, h);
                    for (&mask, c) in &prod {
                        mult.set(idx(mask, gh), idx(s, g) * n + idx(t, h), c.clone());
                    }
                }
            }
        }
    }
    let mut unit = vec![Rational::zero(); n];
    unit[idx(0, e)] = Rational::one();
    let mut counit = vec![Rational::zero(); n];
    for g in 0..g_ord {
        counit[idx(0, g)] = Rational::one();
    }
    let mut rmatrix = vec![Rational::zero(); n * n];
    match u {
        Some(u) => {
            let half = qf(1, 2);
            let one = idx(0, e);
            let uu = idx(0, u);
            rmatrix[one * n + one] += half.clone();
            rmatrix[uu * n + one] += half.clone();
            rmatrix[one * n + uu] += half.clone();
            rmatrix[uu * n + uu] -= half;
        }
        None => rmatrix[idx(0, e) * n + idx(0, e)] = Rational::one(),
    }

    // A temporary algebra for products in H and H (x) H.
    let partial = HopfData {
        dim: n,
        mult: mult.clone(),
        unit: unit.clone(),
        comult: Matrix::zeros(n * n, n),
        counit: counit.clone(),
        antipode: Matrix::identity(n),
        rmatrix: rmatrix.clone(),
    };
    let basis = |i: usize| partial.basis_vector(i);
    let tensor = |a: usize, b: usize| {
        let mut v = vec![Rational::zero(); n * n];
        v[a * n + b] = Rational::one();
        v
    };

    let mut comult = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for s in 0..masks as u32 {
        for g in 0..g_ord {
            // Delta(w_S g) = Delta(w_s1) ... Delta(w_sk) (g (x) g)
            let mut d = tensor(idx(0, e), idx(0, e));
            let mut anti = basis(idx(0, group.inv(g)));
            let mut rest = s;
            let mut odd_factors = Vec::new();
            while rest != 0 {
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                let w = idx(1 << j, e);
                let mut dw = tensor(w, idx(0, e));
                let uu = idx(0, u.expect("W nonzero implies u"));
                dw[uu * n + w] += Rational::one();
                d = partial.product_k(&d, &dw, 2);
                odd_factors.push(w);
            }
            d = partial.product_k(&d, &tensor(idx(0, g), idx(0, g)), 2);
            // S(w_S g) = S(g) S(w_sk) ... S(w_s1), with S(w) = -u w
            for &w in odd_factors.iter().rev() {
                let uu = u.expect("W nonzero implies u");
                let sw: Vec<Rational> = partial
                    .product(&basis(idx(0, uu)), &basis(w))
                    .into_iter()
                    .map(|x| -x)
                    .collect();
                anti = partial.product(&anti, &sw);
            }
            let col = idx(s, g);
            for (i, v) in d.into_iter().enumerate() {
                comult.set(i, col, v);
            }
            for (i, v) in anti.into_iter().enumerate() {
                antipode.set(i, col, v);
            }
        }
    }
    HopfData {
        dim: n,
        mult,
        unit,
        comult,
        counit,
        antipode,
        rmatrix,
    }
}

/// The group algebra `kG` with `Delta(g) = g (x) g`, `S(g) = g^{-1}` and `R = 1 (x) 1`.
pub fn group_algebra(group: &super::Group) -> Arc<HopfData> {
    SuperGroup::plain(group).hopf().clone()
}

/// `k Z/2` with the super R-matrix `R_u`, basis `(1, u)`.
pub fn super_hopf() -> Arc<HopfData> {
    SuperGroup::with_parity(&super::Group::cyclic(2), 1)
        .expect("Z/2 with its generator is a valid parity")
        .hopf()
        .clone()
}

/// `Lambda(W) # kG` with `R_u`, for a `kG`-module `W` on which `u` acts by `-1`.
pub fn lambda_smash(group: &super::Group, u: usize, w: &super::Obj) -> Result<SuperGroup> {
    let plain = group_algebra(group);
    if !w.same_hopf(&plain) {
        return Err(Error::Invalid("W must be a module over the group algebra of G".into()));
    }
    let mats = (0..group.order()).map(|g| w.rho(g).clone()).collect();
    SuperGroup::new(group.clone(), u, mats)
}
